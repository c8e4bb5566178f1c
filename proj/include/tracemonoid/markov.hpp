#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tracemonoid/clique.hpp"
#include "tracemonoid/independence_pair.hpp"
#include "tracemonoid/trace.hpp"
#include "tracemonoid/valuation.hpp"

namespace tracemonoid {

/**
 * The Markov chain realizing a boundary measure on normal-form layers:
 * states are the non-empty cliques, the initial law is the transformed
 * table restricted to them, and transitions renormalize it over the
 * admissible successors.  Rows of `cdf` hold the per-state cumulative
 * sums used by inverse-CDF sampling.
 */
struct ChainSpec {
    IndependencePair alphabet;                 // the monoid the states live in
    std::vector<Clique> states;               // non-empty cliques, canonical order
    std::vector<double> initial;               // law of the first layer
    std::vector<std::vector<double>> transition; // row-stochastic
    std::vector<double> g;                      // per-state normalizations
    std::vector<double> initial_cdf;
    std::vector<std::vector<double>> cdf;

    std::size_t state_index(const Clique& c) const; // throws ValidationError
};

/// One sampled prefix of the layer chain.
struct SampleRun {
    std::uint64_t seed = 0;
    std::string rng;              // generator identifier
    std::size_t steps = 0;
    std::vector<Clique> cliques;  // sampled layers, in order
    Trace trace;                  // their product
};

/// Build the chain of a valuation passing the probability criterion
/// (throws NotMobius otherwise, Reducible on a reducible monoid).
ChainSpec build_chain(const IndependencePair& m, const Valuation& v);

/// Stationary law of the transition matrix: dense elimination on the
/// transposed system with a normalization row, falling back to power
/// iteration; throws SolveFailure if neither converges.
std::vector<double> stationary(const ChainSpec& chain);

struct Speedup {
    double rho;   // mean stationary layer size, in (1, |Σ|]... >= 1
    double gamma; // 1 / rho
};

/// Exact asymptotic length-per-height rate of the measure.
Speedup speedup_exact(const IndependencePair& m, const Valuation& v);

/// Sample n layers from the chain, starting from the initial law.
/// Deterministic given the seed.
SampleRun sample_prefix(const ChainSpec& chain, std::size_t n, std::uint64_t seed);

/// Ergodic average of the layer sizes over one run of n steps.
double speedup_montecarlo(const ChainSpec& chain, std::size_t n, std::uint64_t seed);

/// Same estimate over `threads` independent chains with derived seeds,
/// the n steps split evenly and the per-chain means merged by weighted
/// averaging.  threads = 1 reduces to speedup_montecarlo.
double speedup_montecarlo_parallel(const ChainSpec& chain, std::size_t n,
                                   std::uint64_t seed, unsigned threads);

/// Fraction of `runs` sampled prefixes of height(u) layers that dominate
/// u.  Estimates the cylinder probability; returns 1 for the unit without
/// sampling.
double empirical_cylinder(const ChainSpec& chain, const IndependencePair& m,
                          const Trace& u, std::size_t runs, std::uint64_t seed);

/// Text form: one "k<TAB>clique" line per step, then a trailer line with
/// seed, rng, steps, length, height and the length/height ratio.
std::string format_sample_run(const IndependencePair& m, const SampleRun& run);

} // namespace tracemonoid
