#include "tracemonoid/mobius.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "tracemonoid/errors.hpp"

namespace tracemonoid {

double MobiusPolynomial::eval(double x) const {
    double v = 0.0;
    for (std::size_t k = coeffs.size(); k-- > 0;) v = v * x + static_cast<double>(coeffs[k]);
    return v;
}

std::string MobiusPolynomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        std::int64_t a = coeffs[k];
        if (a == 0) continue;
        if (first) {
            if (a < 0) out << "-";
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        std::int64_t mag = a < 0 ? -a : a;
        if (mag != 1 || k == 0) out << mag;
        if (k >= 1) out << "X";
        if (k >= 2) out << "^" << k;
        first = false;
    }
    if (first) out << "0";
    return out.str();
}

MobiusPolynomial mobius_polynomial(const IndependencePair& m) {
    MobiusPolynomial poly;
    for (const Clique& c : m.enumerate_cliques()) {
        std::size_t k = c.size();
        if (poly.coeffs.size() <= k) poly.coeffs.resize(k + 1, 0);
        poly.coeffs[k] += (k % 2 == 0) ? 1 : -1;
    }
    return poly;
}

double mobius_eval(const IndependencePair& m, const std::vector<double>& p,
                   const Clique& c) {
    if (p.size() != m.letter_count())
        throw ValidationError("point dimension does not match the alphabet");
    // Alternating sum over the cliques parallel to c, built by the same
    // ascending-growth walk as the full enumeration.
    Clique allowed(m.letter_count());
    for (std::uint32_t a = 0; a < m.letter_count(); ++a)
        if (m.parallel_letter(a, c)) allowed.add(a);

    double total = 1.0; // the empty clique
    struct Frame {
        double weight;
        Clique candidates;
    };
    std::vector<Frame> stack;
    stack.push_back({1.0, allowed});
    while (!stack.empty()) {
        Frame f = std::move(stack.back());
        stack.pop_back();
        for (std::uint32_t a : f.candidates.members()) {
            double w = -f.weight * p[a];
            total += w;
            Clique rest = f.candidates.intersect(m.independent_set(a));
            Clique above(m.letter_count());
            for (std::uint32_t b : rest.members())
                if (b > a) above.add(b);
            stack.push_back({w, above});
        }
    }
    return total;
}

CliqueTable::CliqueTable(std::vector<Clique> domain)
    : domain_(std::move(domain)), values_(domain_.size(), 0.0) {}

std::size_t CliqueTable::index_of(const Clique& c) const {
    auto it = std::lower_bound(domain_.begin(), domain_.end(), c);
    if (it == domain_.end() || !(*it == c))
        throw ValidationError("clique is not in the table domain");
    return static_cast<std::size_t>(it - domain_.begin());
}

CliqueTable valuation_table(const IndependencePair& m, const Valuation& v) {
    CliqueTable f(m.enumerate_cliques());
    for (std::size_t i = 0; i < f.size(); ++i) f[i] = v.of(f.clique_at(i));
    return f;
}

CliqueTable mobius_transform(const IndependencePair& m, const CliqueTable& f) {
    (void)m;
    CliqueTable h(f.domain());
    for (std::size_t i = 0; i < h.size(); ++i) {
        const Clique& c = h.clique_at(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < f.size(); ++j) {
            const Clique& d = f.clique_at(j);
            if (!c.subset_of(d)) continue;
            sum += ((d.size() - c.size()) % 2 == 0) ? f[j] : -f[j];
        }
        h[i] = sum;
    }
    return h;
}

CliqueTable mobius_inverse(const IndependencePair& m, const CliqueTable& h) {
    (void)m;
    CliqueTable f(h.domain());
    for (std::size_t i = 0; i < f.size(); ++i) {
        const Clique& c = f.clique_at(i);
        double sum = 0.0;
        for (std::size_t j = 0; j < h.size(); ++j)
            if (c.subset_of(h.clique_at(j))) sum += h[j];
        f[i] = sum;
    }
    return f;
}

double extended_transform(const IndependencePair& m, const Valuation& v,
                          const Trace& u) {
    if (u.empty()) throw EmptyTrace("extended transform is defined on non-empty traces");
    const auto& cf = u.cliques();
    double prefix = 1.0;
    for (std::size_t i = 0; i + 1 < cf.size(); ++i) prefix *= v.of(cf[i]);
    const Clique& last = cf.back();
    double h_last = v.of(last) * mobius_eval(m, v.values(), last);
    return prefix * h_last;
}

CountSequence count_traces(const IndependencePair& m, std::size_t k_max) {
    using boost::multiprecision::cpp_int;
    MobiusPolynomial poly = mobius_polynomial(m);
    // Convolution against the alternating clique polynomial: the counts are
    // the coefficients of its reciprocal series.
    CountSequence seq;
    seq.values.assign(k_max + 1, 0);
    seq.values[0] = 1;
    for (std::size_t n = 1; n <= k_max; ++n) {
        cpp_int acc = 0;
        for (std::size_t j = 1; j < poly.coeffs.size() && j <= n; ++j)
            acc += cpp_int(poly.coeffs[j]) * seq.values[n - j];
        seq.values[n] = -acc;
    }
    return seq;
}

double smallest_root(const MobiusPolynomial& poly) {
    constexpr int kGrid = 1024;
    double lo = 0.0, hi = 0.0;
    bool found = false;
    double prev_x = 0.0;
    for (int k = 1; k <= kGrid; ++k) {
        double x = static_cast<double>(k) / kGrid;
        if (poly.eval(x) <= 0.0) {
            lo = prev_x;
            hi = x;
            found = true;
            break;
        }
        prev_x = x;
    }
    if (!found)
        throw NoRootInUnitInterval("polynomial has no root in (0, 1]");
    while (hi - lo > 1e-14) {
        double mid = 0.5 * (lo + hi);
        if (poly.eval(mid) <= 0.0)
            hi = mid;
        else
            lo = mid;
    }
    return 0.5 * (lo + hi);
}

std::vector<std::complex<double>> polynomial_roots(const MobiusPolynomial& poly) {
    // Trim trailing zero coefficients.
    std::vector<double> a;
    for (std::int64_t c : poly.coeffs) a.push_back(static_cast<double>(c));
    while (!a.empty() && a.back() == 0.0) a.pop_back();
    if (a.size() <= 1) return {};
    std::size_t deg = a.size() - 1;
    double lead = a[deg];

    auto eval = [&](std::complex<double> z) {
        std::complex<double> v = 0.0;
        for (std::size_t k = a.size(); k-- > 0;) v = v * z + a[k];
        return v;
    };

    // Durand-Kerner iteration from a non-real spiral of start points.
    std::vector<std::complex<double>> r(deg);
    std::complex<double> seed(0.4, 0.9);
    std::complex<double> acc(1.0, 0.0);
    for (std::size_t i = 0; i < deg; ++i) {
        acc *= seed;
        r[i] = acc;
    }
    for (int iter = 0; iter < 1000; ++iter) {
        double shift = 0.0;
        for (std::size_t i = 0; i < deg; ++i) {
            std::complex<double> denom = lead;
            for (std::size_t j = 0; j < deg; ++j)
                if (j != i) denom *= r[i] - r[j];
            std::complex<double> delta = eval(r[i]) / denom;
            r[i] -= delta;
            shift = std::max(shift, std::abs(delta));
        }
        if (shift < 1e-13) break;
    }
    std::sort(r.begin(), r.end(), [](const auto& x, const auto& y) {
        if (std::abs(x) != std::abs(y)) return std::abs(x) < std::abs(y);
        return x.real() < y.real();
    });
    return r;
}

double smallest_root_certified(const MobiusPolynomial& poly) {
    double p0 = smallest_root(poly);
    auto roots = polynomial_roots(poly);
    constexpr double tol = 1e-9;
    // Exclude exactly one root, the one closest to p0; every other root,
    // including a second copy at a multiple root, must have strictly
    // larger modulus.
    std::size_t self = roots.size();
    double best = tol;
    for (std::size_t i = 0; i < roots.size(); ++i) {
        double d = std::abs(roots[i] - std::complex<double>(p0, 0.0));
        if (d <= best) {
            best = d;
            self = i;
        }
    }
    if (self == roots.size())
        throw DomainError("diagnostic root set does not contain the bisection root");
    for (std::size_t i = 0; i < roots.size(); ++i) {
        if (i == self) continue;
        if (std::abs(roots[i]) <= p0 + tol)
            throw DomainError("root of modulus " + std::to_string(std::abs(roots[i])) +
                              " does not strictly exceed the real root " +
                              std::to_string(p0));
    }
    return p0;
}

} // namespace tracemonoid
