#pragma once

// Small hand-written Lie algebras used across the test suites.

#include <vector>

#include "plie/liealg.hpp"
#include "test_support.hpp"

namespace plie::testing {

/// n of sl3: [x, y] = z.
inline LieAlgebra heisenberg() {
  return LieAlgebra({"x", "y", "z"}, {{0, 1, vec({0, 0, 1})}}).validated();
}

/// [x, y] = y, [x, z] = z.
inline LieAlgebra book_algebra() {
  return LieAlgebra({"x", "y", "z"}, {{0, 1, vec({0, 1, 0})}, {0, 2, vec({0, 0, 1})}}).validated();
}

/// [x, y] = z, [y, z] = x, [z, x] = y.
inline LieAlgebra so3() {
  return LieAlgebra({"x", "y", "z"}, {{0, 1, vec({0, 0, 1})}, {1, 2, vec({1, 0, 0})}, {0, 2, vec({0, -1, 0})}})
      .validated();
}

/// gl2 in the basis (e, h, f, c) with c central.
inline LieAlgebra gl2() {
  return LieAlgebra({"e", "h", "f", "c"},
                    {{0, 1, vec({-2, 0, 0, 0})}, {0, 2, vec({0, 1, 0, 0})}, {1, 2, vec({0, 0, -2, 0})}})
      .validated();
}

/// 4-dim solvable: [t, x] = x, [t, y] = -y, [x, y] = z.
inline LieAlgebra oscillator_like() {
  return LieAlgebra({"t", "x", "y", "z"},
                    {{0, 1, vec({0, 1, 0, 0})}, {0, 2, vec({0, 0, -1, 0})}, {1, 2, vec({0, 0, 0, 1})}})
      .validated();
}

/// Affine algebra of the line plus a central element: [a, b] = b.
inline LieAlgebra aff1_plus_center() {
  return LieAlgebra({"a", "b", "c"}, {{0, 1, vec({0, 1, 0})}}).validated();
}

inline std::vector<LieAlgebra> zoo() {
  return {sl2(), heisenberg(), book_algebra(), so3(), gl2(), oscillator_like(), aff1_plus_center()};
}

} // namespace plie::testing
