#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "tracemonoid/clique.hpp"
#include "tracemonoid/independence_pair.hpp"
#include "tracemonoid/mobius.hpp"
#include "tracemonoid/trace.hpp"
#include "tracemonoid/valuation.hpp"

namespace tracemonoid {

/**
 * Classification of a valuation against the probability criterion: the
 * transformed table must vanish on the empty clique and stay positive on
 * the others.  Exactly then the valuation is the cylinder measure of a
 * multiplicative probability on the monoid boundary.
 */
struct ValuationReport {
    double h0 = 0.0;       // transformed value on the empty clique
    CliqueTable h;         // full transformed table, empty clique included
    bool is_mobius = false;
    /// Cliques violating their condition, with the offending value:
    /// the empty clique if |h0| exceeds zero_tol, any non-empty clique
    /// whose h is below pos_tol.
    std::vector<std::pair<Clique, double>> violations;
};

ValuationReport classify_valuation(const IndependencePair& m, const Valuation& v,
                                   double zero_tol = 1e-10, double pos_tol = 1e-12);

/// The valuation giving every letter the smallest root of the clique
/// polynomial; the cylinder weights then depend on length only.  Requires
/// an irreducible monoid (throws Reducible).
Valuation uniform_valuation(const IndependencePair& m);

/**
 * Solve for the one free characteristic number that makes the alternating
 * clique sum vanish.  `partial` holds the fixed values (the entry at
 * `free_letter` is ignored).  The equation is affine in the free value:
 * throws DegenerateCoefficient when the linear coefficient vanishes and
 * NonPositiveSolution when the solution is not positive.  The result has
 * h0 = 0 by construction but positivity on non-empty cliques is not
 * guaranteed; classify separately.
 */
Valuation complete_valuation(const IndependencePair& m,
                             const std::vector<double>& partial,
                             std::uint32_t free_letter);

/// Probability of the cylinder of u: the boundary measure of all infinite
/// traces dominating u, which equals v(u).  Requires a valuation passing
/// classify_valuation unless enforce is false.
double cylinder_probability(const IndependencePair& m, const Valuation& v,
                            const Trace& u, bool enforce = true);

/// Probability that the normal form of a boundary element starts with the
/// given cliques: f(c1) ... f(c_{n-1}) h(c_n).  Validates that the cliques
/// are non-empty and consecutively admissible (NotAdmissible with the
/// offending index).
double cf_prefix_probability(const IndependencePair& m, const Valuation& v,
                             std::span<const Clique> cliques, bool enforce = true);

/// Alternating sum over all cliques c of v(u * c).  Vanishes exactly when
/// the alternating clique sum of v does; useful as a diagnostic residual.
double boundary_identity_residual(const IndependencePair& m, const Valuation& v,
                                  const Trace& u);

} // namespace tracemonoid
