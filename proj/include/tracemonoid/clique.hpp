#pragma once

#include <cstdint>
#include <cstddef>
#include <vector>

namespace tracemonoid {

/**
 * A set of letter indices, stored as a dynamic bitset.
 *
 * The universe size is the alphabet size; one 64-bit block covers most
 * alphabets, larger ones simply use more blocks.  Whether the set is an
 * actual clique (pairwise independent letters) is a property enforced by
 * the operations that construct cliques, not by this container.
 *
 * Ordering is canonical: smaller sets first, ties broken by the ascending
 * member sequence compared lexicographically.
 */
class Clique {
public:
    Clique() = default;

    explicit Clique(std::size_t universe)
        : bits_(universe), blocks_((universe + 63) / 64, 0) {}

    std::size_t universe() const { return bits_; }

    void add(std::uint32_t i) { blocks_[i >> 6] |= (1ULL << (i & 63)); }
    void remove(std::uint32_t i) { blocks_[i >> 6] &= ~(1ULL << (i & 63)); }

    bool contains(std::uint32_t i) const {
        return (blocks_[i >> 6] >> (i & 63)) & 1ULL;
    }

    std::size_t size() const;
    bool empty() const;

    bool subset_of(const Clique& other) const;
    bool intersects(const Clique& other) const;

    Clique united(const Clique& other) const;
    Clique intersect(const Clique& other) const;
    Clique minus(const Clique& other) const;

    /// Member indices in ascending order.
    std::vector<std::uint32_t> members() const;

    bool operator==(const Clique& other) const { return blocks_ == other.blocks_; }
    bool operator!=(const Clique& other) const { return !(*this == other); }
    bool operator<(const Clique& other) const;

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> blocks_;
};

} // namespace tracemonoid
