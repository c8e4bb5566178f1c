#include "tracemonoid/clique.hpp"

#include <bit>

namespace tracemonoid {

std::size_t Clique::size() const {
    std::size_t n = 0;
    for (std::uint64_t b : blocks_) n += std::popcount(b);
    return n;
}

bool Clique::empty() const {
    for (std::uint64_t b : blocks_)
        if (b) return false;
    return true;
}

bool Clique::subset_of(const Clique& other) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & ~other.blocks_[i]) return false;
    return true;
}

bool Clique::intersects(const Clique& other) const {
    for (std::size_t i = 0; i < blocks_.size(); ++i)
        if (blocks_[i] & other.blocks_[i]) return true;
    return false;
}

Clique Clique::united(const Clique& other) const {
    Clique r(*this);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] |= other.blocks_[i];
    return r;
}

Clique Clique::intersect(const Clique& other) const {
    Clique r(*this);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= other.blocks_[i];
    return r;
}

Clique Clique::minus(const Clique& other) const {
    Clique r(*this);
    for (std::size_t i = 0; i < blocks_.size(); ++i) r.blocks_[i] &= ~other.blocks_[i];
    return r;
}

std::vector<std::uint32_t> Clique::members() const {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        std::uint64_t b = blocks_[i];
        while (b) {
            out.push_back(static_cast<std::uint32_t>(64 * i + std::countr_zero(b)));
            b &= b - 1;
        }
    }
    return out;
}

bool Clique::operator<(const Clique& other) const {
    std::size_t sa = size(), sb = other.size();
    if (sa != sb) return sa < sb;
    // Equal sizes: lexicographic on ascending members, i.e. the set owning
    // the lowest differing index comes first.
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
        std::uint64_t diff = blocks_[i] ^ other.blocks_[i];
        if (diff) {
            std::uint64_t low = diff & (~diff + 1);
            return blocks_[i] & low;
        }
    }
    return false;
}

} // namespace tracemonoid
