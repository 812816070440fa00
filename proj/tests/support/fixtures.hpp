#pragma once

// The hand-checkable example matrices used across the test suites.

#include "semitree/matrix.hpp"

namespace semitree::testsupport {

inline Algebra sigma_boolean() { return Algebra::boolean({"σ1", "σ2"}); }

/// Boolean 3-state chain whose tree vector is all zero:
///   [[1, σ1, 0], [σ1, 1, σ2], [0, σ2, 1]]
inline SquareMatrix boolean_a1() {
    const Algebra b = sigma_boolean();
    SquareMatrix a(b, 3);
    const Value one = b.one();
    const Value s1 = b.bits_from_names({"σ1"});
    const Value s2 = b.bits_from_names({"σ2"});
    a(0, 0) = one;
    a(0, 1) = s1;
    a(1, 0) = s1;
    a(1, 1) = one;
    a(1, 2) = s2;
    a(2, 1) = s2;
    a(2, 2) = one;
    return a;
}

/// Same chain with a(1,2) widened to the full universe; tree vector becomes
/// (0, {σ2}, {σ2}):
///   [[1, 1, 0], [σ1, 1, σ2], [0, σ2, 1]]
inline SquareMatrix boolean_a2() {
    SquareMatrix a = boolean_a1();
    a(0, 1) = a.algebra().one();
    return a;
}

/// Stochastic classical chain with tree vector (1/4, 3/8, 1/2):
///   [[0, 1/2, 1/2], [1/3, 1/3, 1/3], [1/4, 1/4, 1/2]]
inline SquareMatrix classical3() {
    const Algebra c = Algebra::classical();
    SquareMatrix a(c, 3);
    a(0, 0) = 0.0;
    a(0, 1) = 0.5;
    a(0, 2) = 0.5;
    for (int j = 0; j < 3; ++j) a(1, j) = 1.0 / 3.0;
    a(2, 0) = 0.25;
    a(2, 1) = 0.25;
    a(2, 2) = 0.5;
    return a;
}

/// Max-times chain with tree vector (15, 10, 3):
///   [[0, 2, 1], [3, 0, 0], [0, 5, 0]]
inline SquareMatrix maxtimes3() {
    const Algebra m = Algebra::max_times();
    SquareMatrix a(m, 3);
    a(0, 1) = 2.0;
    a(0, 2) = 1.0;
    a(1, 0) = 3.0;
    a(2, 1) = 5.0;
    return a;
}

}  // namespace semitree::testsupport
