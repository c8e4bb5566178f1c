#include "tracemonoid/measures.hpp"

#include <cmath>

#include "tracemonoid/errors.hpp"

namespace tracemonoid {

ValuationReport classify_valuation(const IndependencePair& m, const Valuation& v,
                                   double zero_tol, double pos_tol) {
    ValuationReport report;
    report.h = mobius_transform(m, valuation_table(m, v));
    bool ok = true;
    for (std::size_t i = 0; i < report.h.size(); ++i) {
        const Clique& c = report.h.clique_at(i);
        double value = report.h[i];
        if (c.empty()) {
            report.h0 = value;
            if (std::abs(value) > zero_tol) {
                ok = false;
                report.violations.emplace_back(c, value);
            }
        } else if (!(value >= pos_tol)) {
            ok = false;
            report.violations.emplace_back(c, value);
        }
    }
    report.is_mobius = ok;
    return report;
}

Valuation uniform_valuation(const IndependencePair& m) {
    if (!m.is_irreducible())
        throw Reducible("uniform measure requires a connected dependence graph");
    double p0 = smallest_root(mobius_polynomial(m));
    return Valuation::make(m, std::vector<double>(m.letter_count(), p0));
}

Valuation complete_valuation(const IndependencePair& m,
                             const std::vector<double>& partial,
                             std::uint32_t free_letter) {
    if (partial.size() != m.letter_count())
        throw ValidationError("partial valuation must cover the whole alphabet");
    if (free_letter >= m.letter_count())
        throw ValidationError("free letter index out of range");
    for (std::size_t a = 0; a < partial.size(); ++a)
        if (a != free_letter && !(partial[a] > 0.0))
            throw ValidationError("fixed characteristic numbers must be positive");

    // The alternating clique sum is affine in the free value x:
    // A x + B = 0 with A collecting the cliques through the free letter
    // (their products taken without it) and B the cliques avoiding it.
    double A = 0.0, B = 0.0;
    for (const Clique& c : m.enumerate_cliques()) {
        double sign = (c.size() % 2 == 0) ? 1.0 : -1.0;
        if (c.contains(free_letter)) {
            double prod = 1.0;
            for (std::uint32_t a : c.members())
                if (a != free_letter) prod *= partial[a];
            A += sign * prod;
        } else {
            double prod = 1.0;
            for (std::uint32_t a : c.members()) prod *= partial[a];
            B += sign * prod;
        }
    }
    if (std::abs(A) < 1e-12)
        throw DegenerateCoefficient("completion equation has vanishing linear coefficient");
    double x = -B / A;
    if (!(x > 0.0))
        throw NonPositiveSolution("completion solves to a non-positive value " +
                                  std::to_string(x));
    std::vector<double> p = partial;
    p[free_letter] = x;
    return Valuation::make(m, std::move(p));
}

namespace {

void require_mobius(const IndependencePair& m, const Valuation& v) {
    ValuationReport report = classify_valuation(m, v);
    if (!report.is_mobius)
        throw NotMobius("valuation fails the boundary-measure criterion (h0 = " +
                        std::to_string(report.h0) + ")");
}

} // namespace

double cylinder_probability(const IndependencePair& m, const Valuation& v,
                            const Trace& u, bool enforce) {
    if (enforce) require_mobius(m, v);
    return v.of(u);
}

double cf_prefix_probability(const IndependencePair& m, const Valuation& v,
                             std::span<const Clique> cliques, bool enforce) {
    for (std::size_t i = 0; i < cliques.size(); ++i) {
        if (cliques[i].empty())
            throw NotAdmissible(i, "clique " + std::to_string(i) + " is empty");
        if (i > 0 && !m.cf_admissible(cliques[i - 1], cliques[i]))
            throw NotAdmissible(i, "cliques " + m.clique_name(cliques[i - 1]) + " -> " +
                                       m.clique_name(cliques[i]) +
                                       " are not admissible");
    }
    if (enforce) require_mobius(m, v);
    if (cliques.empty()) return 1.0;
    double acc = 1.0;
    for (std::size_t i = 0; i + 1 < cliques.size(); ++i) acc *= v.of(cliques[i]);
    const Clique& last = cliques.back();
    return acc * v.of(last) * mobius_eval(m, v.values(), last);
}

double boundary_identity_residual(const IndependencePair& m, const Valuation& v,
                                  const Trace& u) {
    double total = 0.0;
    for (const Clique& c : m.enumerate_cliques()) {
        Trace uc = concat(m, u, Trace::from_cliques(m, c.empty()
                                                           ? std::vector<Clique>{}
                                                           : std::vector<Clique>{c}));
        double term = v.of(uc);
        total += (c.size() % 2 == 0) ? term : -term;
    }
    return total;
}

} // namespace tracemonoid
