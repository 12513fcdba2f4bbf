#include <gtest/gtest.h>

#include "plie/liealg.hpp"
#include "test_support.hpp"

using namespace plie;
using plie::testing::RatGen;
using plie::testing::vec;

namespace {

// 2x2 matrix oracle for sl2: e = E12, h = E11 - E22, f = E21.
Mat as_matrix(const Vec& x) {
  Mat m(2, 2);
  m(0, 1) = x[0];
  m(0, 0) = x[1];
  m(1, 1) = -x[1];
  m(1, 0) = x[2];
  return m;
}

Vec from_matrix(const Mat& m) {
  EXPECT_EQ(m(0, 0) + m(1, 1), Rat(0));
  return Vec{m(0, 1), m(0, 0), m(1, 0)};
}

Vec commutator_oracle(const Vec& x, const Vec& y) {
  Mat a = as_matrix(x), b = as_matrix(y);
  return from_matrix(a * b - b * a);
}

} // namespace

TEST(Bracket, Sl2MatchesMatrixCommutators) {
  auto g = sl2();
  EXPECT_EQ(bracket_of(g, vec({1, 0, 0}), vec({0, 0, 1})), vec({0, 1, 0}));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      EXPECT_EQ(g.bracket_basis(i, j), commutator_oracle(unit_vec(3, i), unit_vec(3, j)));
  RatGen gen(3);
  for (int t = 0; t < 50; ++t) {
    Vec x = gen.vec(3), y = gen.vec(3);
    EXPECT_EQ(g.bracket(x, y), commutator_oracle(x, y));
    EXPECT_TRUE(is_zero(g.bracket(x, x)));
  }
}

TEST(Bracket, AbelianAndLengthMismatch) {
  auto a = LieAlgebra::abelian(3);
  EXPECT_TRUE(is_zero(a.bracket(vec({1, 2, 3}), vec({-1, 0, 5}))));
  EXPECT_THROW(a.bracket(vec({1, 2}), vec({1, 2, 3})), DimensionError);
}

TEST(Construction, RejectsBadEntries) {
  EXPECT_THROW(LieAlgebra({"x", "y"}, {{0, 2, vec({1, 0})}}), InputError);
  EXPECT_THROW(LieAlgebra({"x", "y"}, {{0, 1, vec({1, 0})}, {1, 0, vec({1, 0})}}), InputError);
  EXPECT_THROW(LieAlgebra({"x", "y"}, {{0, 1, vec({1})}}), DimensionError);
  EXPECT_THROW(LieAlgebra::from_table({"x", "y"}, {vec({0, 0}), vec({1, 0}), vec({1, 0}), vec({0, 0})}),
               InputError);
}

TEST(ValidateJacobi, Sl2IsOk) {
  auto r = validate_jacobi(sl2());
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_TRUE(sl2().trusted());
}

TEST(ValidateJacobi, BrokenSl2ReportsTheOnlyTriple) {
  // [e,f] altered to e
  LieAlgebra bad({"e", "h", "f"},
                 {{0, 1, vec({-2, 0, 0})}, {0, 2, vec({1, 0, 0})}, {1, 2, vec({0, 0, -2})}});
  EXPECT_FALSE(bad.trusted());
  auto r = validate_jacobi(bad);
  ASSERT_FALSE(r.ok);
  ASSERT_EQ(r.witnesses.size(), 1u);
  const auto& w = r.witnesses[0];
  EXPECT_EQ(std::tie(w.i, w.j, w.k), std::make_tuple(0u, 1u, 2u));
  // brute force: [[e,h],f] + [[h,f],e] + [[f,e],h]
  Vec e = unit_vec(3, 0), h = unit_vec(3, 1), f = unit_vec(3, 2);
  Vec oracle = add(add(bad.bracket(bad.bracket(e, h), f), bad.bracket(bad.bracket(h, f), e)),
                   bad.bracket(bad.bracket(f, e), h));
  EXPECT_EQ(w.residual, oracle);
  EXPECT_THROW(bad.validated(), JacobiFailure);
}

TEST(ValidateJacobi, AbelianOk) { EXPECT_TRUE(validate_jacobi(LieAlgebra::abelian(4)).ok); }

TEST(ValidateJacobi, RandomTriplesOnTrustedAlgebra) {
  auto g = sl2();
  RatGen gen(8);
  for (int t = 0; t < 100; ++t) {
    Vec x = gen.vec(3), y = gen.vec(3), z = gen.vec(3);
    Vec j = add(add(g.bracket(g.bracket(x, y), z), g.bracket(g.bracket(y, z), x)), g.bracket(g.bracket(z, x), y));
    EXPECT_TRUE(is_zero(j));
  }
}

TEST(Coadjoint, Examples) {
  auto g = sl2();
  // coadjoint(e, e*) = 2 h*
  EXPECT_EQ(coadjoint(g, vec({1, 0, 0}), vec({1, 0, 0})), vec({0, 2, 0}));
  EXPECT_TRUE(is_zero(coadjoint(g, zero_vec(3), vec({1, 2, 3}))));
  EXPECT_TRUE(is_zero(coadjoint(LieAlgebra::abelian(3), vec({1, 1, 1}), vec({1, 2, 3}))));
  EXPECT_THROW(coadjoint(g, vec({1}), vec({1, 0, 0})), DimensionError);
}

TEST(Coadjoint, DefiningPairingAgainstMatrixOracle) {
  auto g = sl2();
  RatGen gen(9);
  for (int t = 0; t < 30; ++t) {
    Vec x = gen.vec(3), xi = gen.vec(3), y = gen.vec(3);
    EXPECT_EQ(dot(coadjoint(g, x, xi), y), -dot(xi, commutator_oracle(x, y)));
  }
}

TEST(Coadjoint, IsARepresentation) {
  auto g = sl2();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k) {
        Vec x = unit_vec(3, i), y = unit_vec(3, j), xi = unit_vec(3, k);
        Vec lhs = coadjoint(g, g.bracket(x, y), xi);
        Vec rhs = sub(coadjoint(g, x, coadjoint(g, y, xi)), coadjoint(g, y, coadjoint(g, x, xi)));
        EXPECT_EQ(lhs, rhs);
      }
}

TEST(IsSubalgebra, Examples) {
  auto g = sl2();
  EXPECT_TRUE(is_subalgebra(g, Subspace::span(3, {vec({1, 0, 0}), vec({0, 1, 0})})));
  EXPECT_FALSE(is_subalgebra(g, Subspace::span(3, {vec({1, 0, 0}), vec({0, 0, 1})})));
  EXPECT_TRUE(is_subalgebra(g, Subspace::full(3)));
  EXPECT_THROW(is_subalgebra(g, Subspace::full(2)), DimensionError);
}

TEST(RestrictTo, BorelSubalgebra) {
  auto g = sl2();
  auto b = restrict_to(g, {vec({0, 1, 0}), vec({1, 0, 0})}, {"h", "e"});
  EXPECT_EQ(b.bracket_basis(0, 1), vec({0, 2}));
  EXPECT_TRUE(b.trusted());
  EXPECT_THROW(restrict_to(g, {vec({1, 0, 0}), vec({0, 0, 1})}, {"e", "f"}), MathRejection);
}
