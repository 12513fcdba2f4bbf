#include <gtest/gtest.h>

#include "algebra_zoo.hpp"
#include "plie/io.hpp"
#include "test_support.hpp"

using namespace plie;
using plie::io::Json;
using plie::testing::RatGen;
using plie::testing::vec;

namespace {

std::string pointer_of(const std::string& text) {
  try {
    io::parse_algebra_json(text);
  } catch (const io::SchemaError& e) {
    return e.pointer();
  }
  return "<none>";
}

} // namespace

TEST(Json, Rationals) {
  EXPECT_EQ(io::rat_from_json(Json("1/3"), ""), make_rat(1, 3));
  EXPECT_EQ(io::rat_from_json(Json("-2/6"), ""), make_rat(-1, 3));
  EXPECT_EQ(io::rat_from_json(Json(7), ""), Rat(7));
  EXPECT_EQ(io::rat_to_json(make_rat(-1, 3)), Json("-1/3"));
  EXPECT_EQ(io::rat_to_json(Rat(4)), Json(4));
  EXPECT_THROW(io::rat_from_json(Json(0.5), "/x"), io::SchemaError);
  EXPECT_THROW(io::rat_from_json(Json("1/0"), "/x"), io::SchemaError);
  Rat big("123456789012345678901234567890");
  EXPECT_EQ(io::rat_from_json(io::rat_to_json(big), ""), big);
}

TEST(Json, MinimalAlgebra) {
  auto parsed = io::parse_algebra_json(R"({"dim":1,"basis":["x"],"brackets":[]})");
  ASSERT_TRUE(std::holds_alternative<LieAlgebra>(parsed));
  EXPECT_EQ(std::get<LieAlgebra>(parsed).basis_names(), (std::vector<std::string>{"x"}));
  EXPECT_EQ(std::get<LieAlgebra>(parsed).dim(), 1u);
  EXPECT_TRUE(validate_jacobi(std::get<LieAlgebra>(parsed)).ok);
}

TEST(Json, CoefficientForms) {
  const auto g = io::algebra_from_json(io::parse_text(
      R"({"dim":2,"basis":["a","b"],"brackets":[{"i":1,"j":0,"coeffs":{"b":"1/3","1":"1/3"}}]})"));
  EXPECT_EQ(g.bracket_basis(0, 1), (Vec{Rat(0), make_rat(-2, 3)}));
  const auto h = io::algebra_from_json(io::parse_text(R"({"dim":2,"brackets":[{"i":0,"j":1,"coeffs":[0,"1/3"]}]})"));
  EXPECT_EQ(h.basis_names(), (std::vector<std::string>{"e0", "e1"}));
  EXPECT_EQ(h.bracket_basis(0, 1), (Vec{Rat(0), make_rat(1, 3)}));
}

TEST(Json, SchemaErrorsCarryPointers) {
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":2,"coeffs":{}}]})"), "/brackets/0/j");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","b"],"brackets":[],"extra":1})"), "/extra");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a"],"brackets":[]})"), "/basis");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","a"],"brackets":[]})"), "/basis/1");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","b"]})"), "/brackets");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{"c":1}}]})"),
            "/brackets/0/coeffs/c");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","b"],"brackets":[{"i":0,"j":1,"coeffs":{}},{"i":1,"j":0,"coeffs":{}}]})"),
            "/brackets/1");
  EXPECT_EQ(pointer_of(R"({"dim":2,"basis":["a","b"],"brackets":[],"delta":[{"i":0,"wedge":[[0,0,1]]}]})"),
            "/delta/0/wedge/0");
  EXPECT_EQ(pointer_of(R"({"g_dim":1,"p_dim":1,"sigma":[[1,2]],"pi_sharp":[[0]]})"), "/sigma/0");
  EXPECT_EQ(pointer_of(R"({"g_dim":1,"p_dim":2,"sigma":[[1],[0]],"pi_sharp":[[0,1],[1,0]]})"), "/pi_sharp");
  EXPECT_EQ(pointer_of("[1, 2"), "");
}

TEST(Json, AlgebraRoundTrip) {
  auto algebras = plie::testing::zoo();
  for (const auto& t : {"A2", "G2"}) algebras.push_back(chevalley_algebra(build_root_system(t)).g);
  algebras.push_back(build_double(standard_sl2_bialgebra()).d);
  for (const auto& g : algebras) {
    const Json j = io::algebra_to_json(g);
    const LieAlgebra back = io::algebra_from_json(io::parse_text(j.dump()));
    EXPECT_EQ(back, g);
    EXPECT_EQ(io::algebra_to_json(back).dump(), j.dump());
  }
}

TEST(Json, BialgebraRoundTrip) {
  RatGen gen(2);
  std::vector<LieBialgebra> bs{standard_sl2_bialgebra(),
                               standard_bialgebra(chevalley_algebra(build_root_system("B2")))};
  for (int t = 0; t < 5; ++t) bs.push_back(make_coboundary(sl2(), gen.vec(3)));
  for (const auto& b : bs) {
    const auto back = io::bialgebra_from_json(io::parse_text(io::bialgebra_to_json(b).dump()));
    EXPECT_EQ(back.g, b.g);
    EXPECT_EQ(back.delta, b.delta);
  }
  auto parsed = io::parse_algebra_json(io::bialgebra_to_json(bs[0]).dump());
  EXPECT_TRUE(std::holds_alternative<LieBialgebra>(parsed));
}

TEST(Json, WedgeOrderNormalized) {
  const auto b = io::bialgebra_from_json(io::parse_text(
      R"({"dim":3,"basis":["e","h","f"],"brackets":[],"delta":[{"i":1,"wedge":[[2,0,"1/2"]]}]})"));
  EXPECT_EQ(b.delta[1][wedge2_index(3, 0, 2)], make_rat(-1, 2));
}

TEST(Json, PointDataAndFiberRoundTrip) {
  RatGen gen(6);
  for (int t = 0; t < 10; ++t) {
    const std::size_t g = gen.uniform(1, 4), p = gen.uniform(1, 4);
    Mat u = gen.mat(p, 2);
    Mat pi = u * Mat{{0, 1}, {-1, 0}} * u.transpose();
    PointActionData d(gen.mat(p, g), pi);
    auto parsed = io::parse_algebra_json(io::point_data_to_json(d).dump());
    ASSERT_TRUE(std::holds_alternative<PointActionData>(parsed));
    EXPECT_EQ(std::get<PointActionData>(parsed).sigma(), d.sigma());
    EXPECT_EQ(std::get<PointActionData>(parsed).pi_sharp(), d.pi_sharp());

    const auto r = anchor_kernel(d);
    Json fj = io::fiber_to_json(r);
    fj["ambient_dim"] = g + p;
    const auto back = io::fiber_from_json(io::parse_text(fj.dump()));
    EXPECT_EQ(back.lp, r.lp);
    EXPECT_EQ(back.dim_overlap, r.dim_overlap);
  }
}

TEST(Json, MatchedRoundTrip) {
  const auto mp = coisotropic_double(standard_sl2_bialgebra(), Subspace::span(3, {vec({0, 1, 0})}));
  const Json j = io::matched_to_json(mp);
  const auto back = io::matched_from_json(io::parse_text(j.dump()));
  EXPECT_EQ(back.l, mp.l);
  EXPECT_EQ(back.act_h_on_n, mp.act_h_on_n);
  EXPECT_EQ(back.act_n_on_h, mp.act_n_on_h);
  EXPECT_EQ(io::matched_to_json(back).dump(), j.dump());

  Json tampered = j;
  tampered["act_h_on_n"][0][0][0] = 5;
  EXPECT_THROW(io::matched_from_json(tampered), io::SchemaError);
}

TEST(Json, FlagRoundTrip) {
  const auto t = flag_cohomology(build_root_system("A2"));
  EXPECT_EQ(io::flag_to_json(t).dump(), R"({"type":"A2","dims":[1,0,2,0,2,0,1],"total":6})");
  const auto back = io::flag_from_json(io::flag_to_json(t));
  EXPECT_EQ(back.dims, t.dims);
  EXPECT_EQ(back.type_name, t.type_name);
  Json bad = io::flag_to_json(t);
  bad["total"] = 7;
  EXPECT_THROW(io::flag_from_json(bad), io::SchemaError);
}

TEST(Json, CartanInput) {
  const auto rs = io::root_system_from_json(io::parse_text(R"({"cartan":[[2,-3],[-1,2]],"name":"G2"})"));
  EXPECT_EQ(rs.positive_roots.size(), 6u);
  EXPECT_THROW(io::root_system_from_json(io::parse_text(R"({"cartan":[[2,-1],[-1,3]]})")), io::SchemaError);
  EXPECT_THROW(io::root_system_from_json(io::parse_text(R"({"cartan":[[2,-2],[-2,2]]})")), MathRejection);
}
