#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tracemonoid/clique.hpp"
#include "tracemonoid/independence_pair.hpp"

namespace tracemonoid {

/**
 * An element of the trace monoid, held in normal form: the unique sequence
 * of non-empty cliques c1, ..., cn with every adjacent pair admissible.
 * The unit is the empty sequence.  Equality of traces is equality of the
 * sequences.
 */
class Trace {
public:
    Trace() = default;

    /// Wrap a sequence that is already a valid normal form; validates
    /// non-emptiness of the cliques and adjacent admissibility.
    static Trace from_cliques(const IndependencePair& m, std::vector<Clique> cf);

    const std::vector<Clique>& cliques() const { return cf_; }
    std::size_t height() const { return cf_.size(); }
    std::size_t length() const { return length_; }
    bool empty() const { return cf_.empty(); }

    /// Canonical representative word: each clique flattened in index order.
    std::vector<std::uint32_t> word() const;

    bool operator==(const Trace& other) const { return cf_ == other.cf_; }
    bool operator!=(const Trace& other) const { return !(*this == other); }
    /// Any strict total order, for use in ordered containers.
    bool operator<(const Trace& other) const;

private:
    std::vector<Clique> cf_;
    std::size_t length_ = 0;

    friend Trace normal_form(const IndependencePair&, std::span<const std::uint32_t>);
    friend Trace concat(const IndependencePair&, const Trace&, const Trace&);
    friend Trace residual(const IndependencePair&, const Trace&, const Trace&);
};

/// Normal form of a word, built by layer insertion: each letter falls to
/// the layer just above the highest one holding a letter it depends on.
Trace normal_form(const IndependencePair& m, std::span<const std::uint32_t> word);

/// Product u * v.
Trace concat(const IndependencePair& m, const Trace& u, const Trace& v);

/// Prefix order: true iff v = u * w for some w.  Decided clique-wise on the
/// normal forms, without searching for w.
bool leq(const IndependencePair& m, const Trace& u, const Trace& v);

/// The unique w with v = u * w; throws NotAPrefix if there is none.
Trace residual(const IndependencePair& m, const Trace& u, const Trace& v);

/// First min(p, height) cliques of the normal form.
Trace cut(const IndependencePair& m, const Trace& u, std::size_t p);

/// Image of u under letter reversal of any representative word.  An
/// involution; preserves length and height.
Trace mirror(const IndependencePair& m, const Trace& u);

/**
 * A separating word for an irreducible monoid: a walk a1 .. aq in the
 * dependence graph visiting every letter, followed by its reverse without
 * the last step, a1 .. aq a(q-1) .. a1.  Appending it to two distinct
 * traces of equal length makes them incompatible.
 */
Trace hat_trace(const IndependencePair& m);

/**
 * All traces of the same height that dominate u: every v with
 * height(v) = height(u) and u <= v.  Enumerated through the layer-wise
 * parametrization: each clique of u is enlarged by a clique parallel to it
 * and to all later layers, keeping the sequence admissible.
 */
std::vector<Trace> dominating_set(const IndependencePair& m, const Trace& u);

/// All traces of length exactly k, in normal-form order.  k is capped
/// (default 8) because the count grows exponentially.
std::vector<Trace> enumerate_traces(const IndependencePair& m, std::size_t k,
                                    std::size_t k_cap = 8);

/// Canonical text form: cliques joined by '|', letters inside a clique by
/// '.', the unit as "ε".  Example: "a|c|a.b".
std::string format_trace(const IndependencePair& m, const Trace& u);

/// Parse a raw word: whitespace-separated letter names, or, if the string
/// has no whitespace, a concatenation resolved by greedy longest match.
/// Returns the normal form.
Trace parse_word(const IndependencePair& m, std::string_view text);

} // namespace tracemonoid
