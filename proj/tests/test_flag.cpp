#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "plie/flag.hpp"
#include "plie/matched.hpp"
#include "test_support.hpp"

using namespace plie;

namespace {

// Betti numbers of G/B: Π (1 + q + ... + q^{d-1}) over the fundamental degrees, in q = t².
std::vector<std::size_t> flag_betti(const std::vector<std::size_t>& degrees) {
  std::vector<std::size_t> p{1};
  for (auto d : degrees) {
    std::vector<std::size_t> next(p.size() + d - 1, 0);
    for (std::size_t i = 0; i < p.size(); ++i)
      for (std::size_t j = 0; j < d; ++j) next[i + j] += p[i];
    p = next;
  }
  std::vector<std::size_t> out(2 * p.size() - 1, 0);
  for (std::size_t k = 0; k < p.size(); ++k) out[2 * k] = p[k];
  return out;
}

const std::map<std::string, std::vector<std::size_t>> kDegrees{
    {"A1", {2}}, {"A2", {2, 3}}, {"B2", {2, 4}}, {"G2", {2, 6}}, {"A3", {2, 3, 4}}};

const std::vector<std::string> kTypes{"A1", "A2", "B2", "G2", "A3"};

// Monomials of Λm* with total weight zero, counted per degree.
std::vector<std::size_t> weight_zero_counts(const RootSystem& rs) {
  const std::size_t np = rs.positive_roots.size(), n = 2 * np;
  std::vector<std::size_t> out(n + 1, 0);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    Root w(rs.rank, 0);
    std::size_t deg = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1) {
        ++deg;
        for (std::size_t i = 0; i < rs.rank; ++i) w[i] += (j < np ? -1 : 1) * rs.positive_roots[j % np][i];
      }
    if (std::all_of(w.begin(), w.end(), [](long x) { return x == 0; })) ++out[deg];
  }
  return out;
}

} // namespace

TEST(FlagCohomology, MatchesSchubertBetti) {
  for (const auto& t : kTypes) {
    const auto table = flag_cohomology(build_root_system(t));
    const auto expected = flag_betti(kDegrees.at(t));
    EXPECT_EQ(table.type_name, t);
    EXPECT_EQ(table.dims, expected) << t;
    std::size_t total = 0;
    for (auto d : expected) total += d;
    EXPECT_EQ(table.total, total);
    EXPECT_EQ(table.total, weyl_enumerate(build_root_system(t)).size());
  }
}

TEST(FlagCohomology, RankThreeNonSimplyLaced) {
  for (const auto& t : std::vector<std::string>{"B3", "C3"}) {
    const auto rs = build_root_system(t);
    EXPECT_EQ(flag_cohomology(rs).dims, flag_betti({2, 4, 6})) << t;
    EXPECT_TRUE(kostant_check(rs).ok()) << t;
  }
}

TEST(FlagCohomology, ExplicitTables) {
  EXPECT_EQ(flag_cohomology(build_root_system("A2")).dims, (std::vector<std::size_t>{1, 0, 2, 0, 2, 0, 1}));
  EXPECT_EQ(flag_cohomology(build_root_system("A1")).dims, (std::vector<std::size_t>{1, 0, 1}));
}

TEST(FlagComplex, InvariantPartIsWeightZero) {
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    const auto fc = flag_complex(rs);
    EXPECT_EQ(fc.m.dim(), 2 * rs.positive_roots.size());
    EXPECT_EQ(fc.invariant.complex.dims(), weight_zero_counts(rs)) << t;
  }
}

TEST(Kostant, NilradicalCohomologyMatchesWeylGroup) {
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    const auto rep = kostant_check(rs);
    const auto ws = weyl_enumerate(rs);
    EXPECT_TRUE(rep.ok()) << t;
    EXPECT_EQ(rep.nilradical_dims, length_histogram(ws, rs.positive_roots.size()));
    EXPECT_EQ(rep.classes.size(), ws.size());
    // each class weight is minus the sum of the inversion set of its Weyl element
    for (const auto& cl : rep.classes) {
      const auto& w = ws[cl.weyl_index];
      Root s(rs.rank, 0);
      for (auto k : w.inversion_set)
        for (std::size_t i = 0; i < rs.rank; ++i) s[i] -= rs.positive_roots[k][i];
      EXPECT_EQ(cl.weight, s);
      EXPECT_EQ(cl.degree, w.length);
    }
  }
}

TEST(Kostant, RepresentativesSpanCohomology) {
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    const auto fc = flag_complex(rs);
    const auto ws = weyl_enumerate(rs);
    for (const auto& w : ws) {
      const auto r = kostant_representative(fc, w);
      EXPECT_EQ(r.degree, 2 * w.length);
      EXPECT_TRUE(r.weight_zero);
      EXPECT_TRUE(r.closed) << t;
      EXPECT_TRUE(r.non_exact) << t;
    }
    EXPECT_EQ(representative_class_ranks(fc, ws), flag_cohomology(fc).dims) << t;
  }
}

TEST(Kostant, RepresentativeLabels) {
  const auto fc = flag_complex(build_root_system("A1"));
  const auto ws = weyl_enumerate(build_root_system("A1"));
  EXPECT_EQ(kostant_representative(fc, ws[0]).label, "1");
  EXPECT_EQ(kostant_representative(fc, ws[1]).generators, (std::vector<std::size_t>{0, 1}));
}

TEST(BruhatLeaves, CensusPerType) {
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    const auto leaves = bruhat_leaves(rs);
    const auto ws = weyl_enumerate(rs);
    EXPECT_EQ(leaves.size(), ws.size());
    std::size_t zero = 0, top = 0;
    for (const auto& l : leaves) {
      EXPECT_EQ(l.leaf_dim, 2 * ws[l.weyl_index].length);
      zero += l.leaf_dim == 0;
      top += l.leaf_dim == 2 * rs.positive_roots.size();
    }
    EXPECT_EQ(zero, 1u);
    EXPECT_EQ(top, 1u);
  }
}

TEST(StandardBialgebra, A1IsStandardSl2) {
  const auto b = standard_bialgebra(chevalley_algebra(build_root_system("A1")));
  EXPECT_EQ(b.delta, standard_sl2_bialgebra().delta);
}

TEST(StandardBialgebra, CompatibleForAllTypes) {
  for (const auto& t : std::vector<std::string>{"A1", "A2", "B2", "G2"}) {
    const auto b = standard_bialgebra(chevalley_algebra(build_root_system(t)));
    EXPECT_TRUE(check_compatibility(b).ok) << t;
  }
}

TEST(StandardBialgebra, CartanIsCoisotropicAndRecoversFlag) {
  for (const auto& t : std::vector<std::string>{"A1", "A2"}) {
    const auto rs = build_root_system(t);
    const auto c = chevalley_algebra(rs);
    const auto mp = coisotropic_double(standard_bialgebra(c), c.cartan_sub);
    const auto rel = relative_cohomology(mp.l, mp.h);
    EXPECT_EQ(rel, flag_betti(kDegrees.at(t))) << t;
    EXPECT_EQ(cohomology_dims(n_side_invariant_complex(mp).complex), rel) << t;
  }
}
