#include "tracemonoid/markov.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <thread>

#include "tracemonoid/errors.hpp"
#include "tracemonoid/measures.hpp"
#include "tracemonoid/mobius.hpp"
#include "tracemonoid/rng.hpp"

namespace tracemonoid {

std::size_t ChainSpec::state_index(const Clique& c) const {
    auto it = std::lower_bound(states.begin(), states.end(), c);
    if (it == states.end() || !(*it == c))
        throw ValidationError("clique is not a chain state");
    return static_cast<std::size_t>(it - states.begin());
}

namespace {

std::vector<double> cumulative(const std::vector<double>& row) {
    std::vector<double> cdf(row.size());
    double acc = 0.0;
    for (std::size_t i = 0; i < row.size(); ++i) {
        acc += row[i];
        cdf[i] = acc;
    }
    if (!cdf.empty()) cdf.back() = 1.0; // guard the last bucket against rounding
    return cdf;
}

std::size_t pick(const std::vector<double>& cdf, double u) {
    // First index whose cumulative weight exceeds u; ties resolve to the
    // lower state, matching the half-open bucket convention.
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) return cdf.size() - 1;
    return static_cast<std::size_t>(it - cdf.begin());
}

} // namespace

ChainSpec build_chain(const IndependencePair& m, const Valuation& v) {
    if (!m.is_irreducible())
        throw Reducible("the layer chain requires a connected dependence graph");
    ValuationReport report = classify_valuation(m, v);
    if (!report.is_mobius)
        throw NotMobius("valuation fails the boundary-measure criterion (h0 = " +
                        std::to_string(report.h0) + ")");

    ChainSpec chain;
    chain.alphabet = m;
    for (const Clique& c : report.h.domain())
        if (!c.empty()) chain.states.push_back(c);

    std::size_t n = chain.states.size();
    std::vector<double> h(n);
    for (std::size_t i = 0; i < n; ++i) h[i] = report.h.at(chain.states[i]);

    double h_sum = 0.0;
    for (double x : h) h_sum += x;
    if (!(h_sum > 0.0)) throw ZeroNormalization("transformed table has no positive mass");
    chain.initial.resize(n);
    for (std::size_t i = 0; i < n; ++i) chain.initial[i] = h[i] / h_sum;

    chain.g.assign(n, 0.0);
    chain.transition.assign(n, std::vector<double>(n, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            if (m.cf_admissible(chain.states[i], chain.states[j])) chain.g[i] += h[j];
        if (!(chain.g[i] > 0.0))
            throw ZeroNormalization("state " + m.clique_name(chain.states[i]) +
                                    " has no successor mass");
        for (std::size_t j = 0; j < n; ++j)
            if (m.cf_admissible(chain.states[i], chain.states[j]))
                chain.transition[i][j] = h[j] / chain.g[i];
    }

    chain.initial_cdf = cumulative(chain.initial);
    chain.cdf.reserve(n);
    for (std::size_t i = 0; i < n; ++i) chain.cdf.push_back(cumulative(chain.transition[i]));
    return chain;
}

std::vector<double> stationary(const ChainSpec& chain) {
    std::size_t n = chain.states.size();
    if (n == 0) throw SolveFailure("empty chain");

    // (P^T - I) pi = 0 with the last equation replaced by normalization.
    std::vector<std::vector<double>> a(n, std::vector<double>(n + 1, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = chain.transition[j][i];
        a[i][i] -= 1.0;
    }
    for (std::size_t j = 0; j < n; ++j) a[n - 1][j] = 1.0;
    a[n - 1][n] = 1.0;

    bool singular = false;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        for (std::size_t r = col + 1; r < n; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) < 1e-14) {
            singular = true;
            break;
        }
        std::swap(a[piv], a[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col) continue;
            double factor = a[r][col] / a[col][col];
            if (factor == 0.0) continue;
            for (std::size_t cc = col; cc <= n; ++cc) a[r][cc] -= factor * a[col][cc];
        }
    }

    std::vector<double> pi(n, 0.0);
    bool ok = false;
    if (!singular) {
        for (std::size_t i = 0; i < n; ++i) pi[i] = a[i][n] / a[i][i];
        double residual = 0.0;
        double low = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            double col = 0.0;
            for (std::size_t i = 0; i < n; ++i) col += pi[i] * chain.transition[i][j];
            residual = std::max(residual, std::abs(col - pi[j]));
            low = std::min(low, pi[j]);
        }
        ok = residual <= 1e-12 && low >= -1e-9;
    }
    if (!ok) {
        // Power iteration fallback.
        pi.assign(n, 1.0 / static_cast<double>(n));
        std::vector<double> next(n, 0.0);
        bool converged = false;
        for (std::size_t iter = 0; iter < 1000000 && !converged; ++iter) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    next[j] += pi[i] * chain.transition[i][j];
            double sum = 0.0;
            for (double x : next) sum += x;
            for (double& x : next) x /= sum;
            double diff = 0.0;
            for (std::size_t j = 0; j < n; ++j) diff = std::max(diff, std::abs(next[j] - pi[j]));
            pi.swap(next);
            converged = diff <= 1e-13;
        }
        if (!converged)
            throw SolveFailure("stationary law: elimination and power iteration both failed");
    }
    // Clip solver dust and renormalize.
    double sum = 0.0;
    for (double& x : pi) {
        if (x < 0.0) x = 0.0;
        sum += x;
    }
    for (double& x : pi) x /= sum;
    return pi;
}

Speedup speedup_exact(const IndependencePair& m, const Valuation& v) {
    ChainSpec chain = build_chain(m, v);
    std::vector<double> pi = stationary(chain);
    double rho = 0.0;
    for (std::size_t i = 0; i < chain.states.size(); ++i)
        rho += pi[i] * static_cast<double>(chain.states[i].size());
    return {rho, 1.0 / rho};
}

SampleRun sample_prefix(const ChainSpec& chain, std::size_t n, std::uint64_t seed) {
    SampleRun run;
    run.seed = seed;
    run.rng = kRngAlgorithm;
    run.steps = n;
    run.cliques.reserve(n);
    SplitMix64 gen(seed);
    std::size_t state = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double u = gen.next_unit();
        state = (k == 0) ? pick(chain.initial_cdf, u) : pick(chain.cdf[state], u);
        run.cliques.push_back(chain.states[state]);
    }
    // A sampled layer sequence is admissible by construction, so the
    // layers are already the normal form of their product.
    run.trace = Trace::from_cliques(chain.alphabet, run.cliques);
    return run;
}

double speedup_montecarlo(const ChainSpec& chain, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ValidationError("monte carlo estimate needs at least one step");
    SplitMix64 gen(seed);
    std::size_t state = 0;
    std::size_t letters = 0;
    for (std::size_t k = 0; k < n; ++k) {
        double u = gen.next_unit();
        state = (k == 0) ? pick(chain.initial_cdf, u) : pick(chain.cdf[state], u);
        letters += chain.states[state].size();
    }
    return static_cast<double>(letters) / static_cast<double>(n);
}

double speedup_montecarlo_parallel(const ChainSpec& chain, std::size_t n,
                                   std::uint64_t seed, unsigned threads) {
    if (threads <= 1) return speedup_montecarlo(chain, n, seed);
    if (n == 0) throw ValidationError("monte carlo estimate needs at least one step");
    unsigned t = std::min<std::size_t>(threads, n);
    std::vector<std::size_t> steps(t, n / t);
    for (unsigned i = 0; i < n % t; ++i) ++steps[i];
    std::vector<double> means(t, 0.0);
    std::vector<std::thread> workers;
    for (unsigned i = 0; i < t; ++i) {
        workers.emplace_back([&, i] {
            means[i] = speedup_montecarlo(chain, steps[i], derive_seed(seed, i));
        });
    }
    for (auto& w : workers) w.join();
    double acc = 0.0;
    for (unsigned i = 0; i < t; ++i)
        acc += means[i] * static_cast<double>(steps[i]);
    return acc / static_cast<double>(n);
}

double empirical_cylinder(const ChainSpec& chain, const IndependencePair& m,
                          const Trace& u, std::size_t runs, std::uint64_t seed) {
    if (u.empty()) return 1.0;
    if (runs == 0) throw ValidationError("empirical estimate needs at least one run");
    std::size_t height = u.height();
    SplitMix64 gen(seed);
    std::size_t hits = 0;
    std::vector<Clique> sampled(height);
    for (std::size_t r = 0; r < runs; ++r) {
        std::size_t state = 0;
        for (std::size_t k = 0; k < height; ++k) {
            double x = gen.next_unit();
            state = (k == 0) ? pick(chain.initial_cdf, x) : pick(chain.cdf[state], x);
            sampled[k] = chain.states[state];
        }
        Trace t = Trace::from_cliques(m, sampled);
        if (leq(m, u, t)) ++hits;
    }
    return static_cast<double>(hits) / static_cast<double>(runs);
}

std::string format_sample_run(const IndependencePair& m, const SampleRun& run) {
    std::string out;
    char buf[160];
    for (std::size_t k = 0; k < run.cliques.size(); ++k) {
        std::snprintf(buf, sizeof buf, "%zu\t", k + 1);
        out += buf;
        out += m.clique_name(run.cliques[k]);
        out += '\n';
    }
    std::size_t len = run.trace.length();
    std::size_t height = run.trace.height();
    double ratio = height == 0 ? 1.0
                               : static_cast<double>(len) / static_cast<double>(height);
    std::snprintf(buf, sizeof buf,
                  "# seed=%llu rng=%s steps=%zu length=%zu height=%zu ratio=%.12g\n",
                  static_cast<unsigned long long>(run.seed), run.rng.c_str(), run.steps,
                  len, height, ratio);
    out += buf;
    return out;
}

} // namespace tracemonoid
