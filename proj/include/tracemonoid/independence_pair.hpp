#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tracemonoid/clique.hpp"

namespace tracemonoid {

/// Default ceiling on the number of cliques an enumeration may produce.
inline constexpr std::size_t kDefaultCliqueCap = 1u << 20;

/**
 * An alphabet together with an irreflexive symmetric independence relation.
 *
 * Letters are dense indices 0..n-1 in declaration order; names are kept for
 * parsing and printing only.  The complement of the independence relation
 * (with the diagonal added) is the dependence relation.  Immutable after
 * construction.
 */
class IndependencePair {
public:
    /// The empty alphabet; also what link_alphabet yields on maximal cliques.
    IndependencePair() = default;

    /// Build from explicit letters and unordered independent pairs.
    /// Rejects duplicate letters, malformed names, self-pairs and
    /// undeclared letters.
    static IndependencePair make(
        std::vector<std::string> letters,
        const std::vector<std::pair<std::string, std::string>>& independent);

    /**
     * Parse the plain-text format:
     *
     *   # comment
     *   letters a b c
     *   independent a b
     *
     * The letters line comes first; '#' starts a comment anywhere.
     */
    static IndependencePair parse(std::string_view text);

    std::size_t letter_count() const { return letters_.size(); }
    const std::vector<std::string>& letters() const { return letters_; }
    const std::string& letter_name(std::uint32_t i) const { return letters_[i]; }

    /// Index of a declared letter; throws ValidationError if unknown.
    std::uint32_t index_of(std::string_view name) const;
    bool has_letter(std::string_view name) const;

    bool independent(std::uint32_t a, std::uint32_t b) const {
        return indep_[a].contains(b);
    }
    bool dependent(std::uint32_t a, std::uint32_t b) const {
        return !indep_[a].contains(b);
    }

    /// Letters independent of a (never contains a itself).
    const Clique& independent_set(std::uint32_t a) const { return indep_[a]; }
    /// Letters dependent on a, including a.
    const Clique& dependent_set(std::uint32_t a) const { return dep_[a]; }

    /// Unordered independent pairs (i < j), in index order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> independent_pairs() const;

    /// True if every letter of c is independent of every letter of d.
    bool parallel(const Clique& c, const Clique& d) const;
    /// True if the letter a is independent of every letter of c.
    bool parallel_letter(std::uint32_t a, const Clique& c) const;

    /// Normal-form admissibility: every letter of d depends on some letter
    /// of c.  The empty clique admits only the empty clique as successor.
    bool cf_admissible(const Clique& c, const Clique& d) const;

    /// Connectivity of the dependence graph.  Single-letter alphabets are
    /// irreducible.
    bool is_irreducible() const;

    /// All cliques, the empty one included, ordered by size then by member
    /// sequence.  Throws CombinatorialBlowup beyond the cap.
    std::vector<Clique> enumerate_cliques(std::size_t cap = kDefaultCliqueCap) const;

    /// Sub-monoid on the letters parallel to c, names and relative order
    /// preserved, independence restricted.
    IndependencePair link_alphabet(const Clique& c) const;

    /// Validated clique from letter names: all declared, pairwise independent.
    Clique clique_of(const std::vector<std::string>& names) const;

    Clique empty_clique() const { return Clique(letters_.size()); }

    /// Canonical text form of a clique: members joined by '.', unit as "ε".
    std::string clique_name(const Clique& c) const;

private:
    std::vector<std::string> letters_;
    std::map<std::string, std::uint32_t, std::less<>> index_;
    std::vector<Clique> indep_;
    std::vector<Clique> dep_;
};

} // namespace tracemonoid
