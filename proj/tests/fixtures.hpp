#pragma once

// Shared alphabets used across the test suites.

#include "tracemonoid/independence_pair.hpp"

namespace fixtures {

using tracemonoid::IndependencePair;

/// Three letters with one commuting pair: a.b = b.a.
inline IndependencePair m1() {
    return IndependencePair::make({"a", "b", "c"}, {{"a", "b"}});
}

/// Five letters whose dependence graph is a 5-cycle a1-a2-a3-a4-a5-a1;
/// the independent pairs are the five diagonals.
inline IndependencePair m2() {
    return IndependencePair::make({"a1", "a2", "a3", "a4", "a5"},
                                  {{"a1", "a3"},
                                   {"a1", "a4"},
                                   {"a2", "a4"},
                                   {"a2", "a5"},
                                   {"a3", "a5"}});
}

/// Free monoid: no independence at all.
inline IndependencePair free2() {
    return IndependencePair::make({"a", "b"}, {});
}

inline IndependencePair free1() {
    return IndependencePair::make({"a"}, {});
}

/// Fully commutative pair: reducible (dependence graph has two components).
inline IndependencePair indep2() {
    return IndependencePair::make({"a", "b"}, {{"a", "b"}});
}

} // namespace fixtures
