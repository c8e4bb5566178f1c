#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "tracemonoid/clique.hpp"
#include "tracemonoid/independence_pair.hpp"
#include "tracemonoid/trace.hpp"
#include "tracemonoid/valuation.hpp"

namespace tracemonoid {

/**
 * The alternating clique polynomial: coefficient k is (-1)^k times the
 * number of cliques of size k.  Its inverse is the length generating
 * series of the monoid, so its smallest root in (0, 1] governs growth.
 */
struct MobiusPolynomial {
    std::vector<std::int64_t> coeffs; // degree = max clique size

    double eval(double x) const;
    std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
    /// Pretty form like "1 - 3X + X^2".
    std::string str() const;
};

MobiusPolynomial mobius_polynomial(const IndependencePair& m);

/// Alternating clique sum of the sub-monoid on the letters parallel to c,
/// at the point p: sum over cliques d parallel to c of (-1)^|d| prod p[d].
/// c empty gives the full polynomial evaluated at p.
double mobius_eval(const IndependencePair& m, const std::vector<double>& p,
                   const Clique& c);

/**
 * A real-valued function on the cliques of a fixed monoid.  The domain is
 * exactly the enumerated clique list, in canonical order.
 */
class CliqueTable {
public:
    CliqueTable() = default;
    explicit CliqueTable(std::vector<Clique> domain);

    std::size_t size() const { return domain_.size(); }
    const std::vector<Clique>& domain() const { return domain_; }
    const Clique& clique_at(std::size_t i) const { return domain_[i]; }

    double& operator[](std::size_t i) { return values_[i]; }
    double operator[](std::size_t i) const { return values_[i]; }

    /// Index of a clique in the domain; throws ValidationError if absent.
    std::size_t index_of(const Clique& c) const;
    double at(const Clique& c) const { return values_[index_of(c)]; }
    void set(const Clique& c, double v) { values_[index_of(c)] = v; }

private:
    std::vector<Clique> domain_;
    std::vector<double> values_;
};

/// Table of f on all cliques of m, f(c) = v(c).
CliqueTable valuation_table(const IndependencePair& m, const Valuation& v);

/// h(c) = sum over cliques c' containing c of (-1)^(|c'|-|c|) f(c').
CliqueTable mobius_transform(const IndependencePair& m, const CliqueTable& f);

/// Inverse transform: f(c) = sum over cliques c' containing c of h(c').
CliqueTable mobius_inverse(const IndependencePair& m, const CliqueTable& h);

/// Weight of u with its last layer Mobius-transformed: for u = v * c with
/// c the last clique of the normal form, returns f(v) * h(c).  Throws
/// EmptyTrace on the unit.
double extended_transform(const IndependencePair& m, const Valuation& v,
                          const Trace& u);

/// Numbers of traces of each length 0..k_max, computed exactly via the
/// convolution recurrence against the alternating clique polynomial.
struct CountSequence {
    std::vector<boost::multiprecision::cpp_int> values;
};

CountSequence count_traces(const IndependencePair& m, std::size_t k_max);

/// Smallest root of the polynomial in (0, 1]: grid scan at step 1/1024 for
/// the first sign change, then bisection to width 1e-14.  Throws
/// NoRootInUnitInterval if the polynomial stays positive.
double smallest_root(const MobiusPolynomial& poly);

/// All complex roots (Durand-Kerner iteration); diagnostic companion to
/// smallest_root.
std::vector<std::complex<double>> polynomial_roots(const MobiusPolynomial& poly);

/// smallest_root plus the diagnostic check that the returned root strictly
/// minimizes modulus among all complex roots, with tolerance 1e-9.
double smallest_root_certified(const MobiusPolynomial& poly);

} // namespace tracemonoid
