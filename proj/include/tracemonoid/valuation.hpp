#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tracemonoid/clique.hpp"
#include "tracemonoid/independence_pair.hpp"
#include "tracemonoid/trace.hpp"

namespace tracemonoid {

/**
 * A multiplicative weight on traces, determined by one positive
 * characteristic number per letter: the weight of a trace is the product
 * over its letters with multiplicity.
 */
class Valuation {
public:
    Valuation() = default;

    /// Validates size |Σ| and strict positivity of every entry.
    static Valuation make(const IndependencePair& m, std::vector<double> p);

    const std::vector<double>& values() const { return p_; }
    double of_letter(std::uint32_t a) const { return p_[a]; }

    double of(const Clique& c) const;
    double of(const Trace& u) const;

private:
    std::vector<double> p_;
};

/// Parse "a=0.5,b=0.5,c=0.25": every letter exactly once, values positive.
/// The token "uniform" is reserved and rejected here; callers resolve it.
Valuation parse_valuation(const IndependencePair& m, std::string_view text);

/// Serialize in declaration order with 12 significant digits.
std::string format_valuation(const IndependencePair& m, const Valuation& v);

} // namespace tracemonoid
