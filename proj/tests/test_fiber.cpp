#include <gtest/gtest.h>

#include "plie/bialg.hpp"
#include "plie/fiber.hpp"
#include "plie/matched.hpp"
#include "test_support.hpp"

using namespace plie;
using plie::testing::RatGen;
using plie::testing::vec;

namespace {

// Skew p × p matrix of rank at most 2·k.
Mat random_skew(RatGen& gen, std::size_t p, std::size_t k) {
  Mat u = gen.mat(p, 2 * k, 0.3);
  Mat j(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return u * j * u.transpose();
}

// hyperbolic pairing on g ⊕ g*
Rat hyperbolic(const Vec& a, const Vec& b, std::size_t n) {
  Rat s = 0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[n + i] + a[n + i] * b[i];
  return s;
}

} // namespace

TEST(PointActionData, Validation) {
  EXPECT_THROW(PointActionData(Mat(2, 3), Mat(3, 3)), DimensionError);
  EXPECT_THROW(PointActionData(Mat(2, 3), Mat{{0, 1}, {1, 0}}), InputError);
  EXPECT_THROW(PointActionData(Mat(2, 3), Mat{{1, 0}, {0, 0}}), InputError);
  EXPECT_NO_THROW(PointActionData(Mat(2, 3), Mat{{0, 1}, {-1, 0}}));
}

TEST(AnchorKernel, ZeroData) {
  auto r = anchor_kernel(PointActionData(Mat(2, 3), Mat(2, 2)));
  EXPECT_EQ(r.lp, Subspace::full(5));
  EXPECT_EQ(std::make_tuple(r.dim_gp, r.dim_tp, r.dim_overlap), std::make_tuple(3u, 2u, 0u));
}

TEST(AnchorKernel, SymplecticPointGivesGraph) {
  RatGen gen(5);
  Mat pi{{0, 1}, {-1, 0}};
  Mat sigma = gen.mat(2, 3);
  PointActionData d(sigma, pi);
  auto r = anchor_kernel(d);
  EXPECT_EQ(r.lp.dim(), 3u);
  Mat graph = Rat(-1) * inverse(pi) * sigma;
  for (std::size_t i = 0; i < 3; ++i) {
    Vec x = unit_vec(3, i);
    Vec u = x;
    for (auto& c : graph.apply(x)) u.push_back(c);
    EXPECT_TRUE(r.lp.contains(u));
  }
  EXPECT_EQ(r.dim_tp, 0u);
}

TEST(AnchorKernel, SurjectiveSigmaZeroPi) {
  Mat sigma{{1, 0, 0}, {0, 0, 1}};
  auto r = anchor_kernel(PointActionData(sigma, Mat(2, 2)));
  EXPECT_EQ(std::make_tuple(r.dim_gp, r.dim_tp, r.dim_overlap), std::make_tuple(1u, 2u, 0u));
  EXPECT_EQ(r.lp, Subspace::span(5, {vec({0, 1, 0, 0, 0}), vec({0, 0, 0, 1, 0}), vec({0, 0, 0, 0, 1})}));
}

TEST(AnchorKernel, DimensionIdentityRandomized) {
  RatGen gen(77);
  for (int t = 0; t < 200; ++t) {
    const std::size_t g = gen.uniform(1, 8), p = gen.uniform(1, 8);
    Mat sigma = gen.coin(0.3) ? gen.mat(p, 1, 0.2) * gen.mat(1, g, 0.2) : gen.mat(p, g, 0.6);
    PointActionData d(sigma, random_skew(gen, p, gen.uniform(0, 2)));
    auto r = anchor_kernel(d);
    EXPECT_EQ(r.lp.dim(), r.dim_gp + r.dim_tp + r.dim_overlap);
    // brute force: every lp vector is killed by the anchor
    for (const auto& u : r.lp.basis_vectors()) {
      Vec x(u.begin(), u.begin() + g), a(u.begin() + g, u.end());
      EXPECT_TRUE(is_zero(add(sigma.apply(x), d.pi_sharp().apply(a))));
    }
  }
}

TEST(IsotropyCheck, RandomizedAndPullback) {
  RatGen gen(11);
  for (int t = 0; t < 100; ++t) {
    const std::size_t g = gen.uniform(1, 6), p = gen.uniform(1, 6);
    PointActionData d(gen.mat(p, g, 0.5), random_skew(gen, p, gen.uniform(0, 3)));
    auto lp = anchor_kernel(d).lp;
    EXPECT_TRUE(isotropy_check(d, lp));
    const auto basis = lp.basis_vectors();
    for (const auto& u : basis)
      for (const auto& v : basis) {
        const Rat direct = dot(Vec(v.begin() + g, v.end()), d.sigma().apply(Vec(u.begin(), u.begin() + g))) +
                           dot(Vec(u.begin() + g, u.end()), d.sigma().apply(Vec(v.begin(), v.begin() + g)));
        EXPECT_EQ(point_pairing(d, u, v), direct);
        EXPECT_EQ(hyperbolic(phi_map(d, u), phi_map(d, v), g), point_pairing(d, u, v));
      }
    auto img = phi_embed(d, lp);
    for (const auto& a : img.basis_vectors())
      for (const auto& b : img.basis_vectors()) EXPECT_EQ(hyperbolic(a, b, g), 0);
  }
}

TEST(IsotropyCheck, NonKernelSubspaceFails) {
  PointActionData d(Mat{{1}}, Mat(1, 1));
  EXPECT_FALSE(isotropy_check(d, Subspace::full(2)));
}

TEST(PhiEmbed, ZeroSigmaProjects) {
  PointActionData d(Mat(2, 3), Mat{{0, 1}, {-1, 0}});
  auto lp = anchor_kernel(d).lp;
  EXPECT_EQ(phi_embed(d, lp), Subspace::span(6, {vec({1, 0, 0, 0, 0, 0}), vec({0, 1, 0, 0, 0, 0}), vec({0, 0, 1, 0, 0, 0})}));
}

TEST(PhiEmbed, SymplecticPointIsLagrangianGraph) {
  RatGen gen(19);
  for (int t = 0; t < 20; ++t) {
    Mat pi{{0, 2, 0, 0}, {-2, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}};
    Mat sigma = gen.mat(4, 3);
    PointActionData d(sigma, pi);
    auto img = phi_embed(d, anchor_kernel(d).lp);
    EXPECT_EQ(img.dim(), 3u);
    std::vector<std::size_t> hi{3, 4, 5};
    EXPECT_EQ(intersect(img, Subspace::coordinate(6, hi)).dim(), 0u);
    Mat m = Rat(-1) * sigma.transpose() * inverse(pi) * sigma;
    for (std::size_t i = 0; i < 3; ++i) {
      Vec v = unit_vec(3, i);
      for (auto& c : m.apply(unit_vec(3, i))) v.push_back(c);
      EXPECT_TRUE(img.contains(v));
    }
    for (const auto& a : img.basis_vectors())
      for (const auto& b : img.basis_vectors()) EXPECT_EQ(hyperbolic(a, b, 3), 0);
  }
}

TEST(PhiEmbed, HomogeneousSl2MatchesCoisotropicDouble) {
  PointActionData d(Mat{{1, 0, 0}, {0, 0, 1}}, Mat(2, 2));
  auto img = phi_embed(d, anchor_kernel(d).lp);
  EXPECT_EQ(img, coisotropic_subspace(standard_sl2_bialgebra(), Subspace::span(3, {vec({0, 1, 0})})));
}
