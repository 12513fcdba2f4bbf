#include "plie/matched.hpp"

#include <string>
#include <utility>

namespace plie {

namespace {

// Basis names for a subspace: the ambient name when a basis vector is a
// coordinate vector, otherwise prefix + position.
std::vector<std::string> subspace_names(const std::vector<std::string>& ambient, const Subspace& s,
                                        const std::string& prefix) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < s.dim(); ++i) {
    const Vec v = s.basis_vector(i);
    const std::size_t p = s.pivots()[i];
    bool unit = true;
    for (std::size_t k = 0; k < v.size() && unit; ++k) unit = (k == p) || sgn(v[k]) == 0;
    out.push_back(unit ? ambient[p] : prefix + std::to_string(i));
  }
  return out;
}

Vec concat(const Vec& a, const Vec& b) {
  Vec out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Mat split_change(const MatchedPair& mp) { return vstack(mp.h.basis(), mp.n.basis()); }

} // namespace

MatchedPair split_matched_pair(const LieAlgebra& l, const Subspace& h, const Subspace& n) {
  const std::size_t dim = l.dim();
  if (h.ambient_dim() != dim || n.ambient_dim() != dim) throw DimensionError("h and n must be subspaces of l");
  if (h.dim() + n.dim() != dim || intersect(h, n).dim() != 0)
    throw ConditionFailure(Condition::not_direct, "h and n do not form a direct sum decomposition of l");
  if (!is_subalgebra(l, h)) throw ConditionFailure(Condition::h_not_subalgebra, "h is not a subalgebra of l");
  if (!is_subalgebra(l, n)) throw ConditionFailure(Condition::n_not_subalgebra, "n is not a subalgebra of l");

  MatchedPair mp;
  mp.l = l;
  mp.h = h;
  mp.n = n;
  const auto hb = h.basis_vectors(), nb = n.basis_vectors();
  mp.h_algebra = restrict_to(l, hb, subspace_names(l.basis_names(), h, "h"));
  mp.n_algebra = restrict_to(l, nb, subspace_names(l.basis_names(), n, "n"));

  // split coordinates: v = c_h · hb + c_n · nb
  const Mat to_split = inverse(split_change(mp)).transpose();
  const std::size_t k = h.dim(), m = n.dim();
  mp.act_h_on_n.assign(k, Mat(m, m));
  mp.act_n_on_h.assign(m, Mat(k, k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < m; ++a) {
      const Vec c = to_split.apply(l.bracket(hb[i], nb[a]));
      for (std::size_t b = 0; b < m; ++b) mp.act_h_on_n[i](b, a) = c[k + b];
      for (std::size_t j = 0; j < k; ++j) mp.act_n_on_h[a](j, i) = -c[j];
    }
  return mp;
}

LieAlgebra reassemble(const MatchedPair& mp) {
  const std::size_t k = mp.h.dim(), m = mp.n.dim();
  std::vector<BracketEntry> entries;
  auto push = [&](std::size_t i, std::size_t j, Vec v) {
    if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) push(i, j, concat(mp.h_algebra.bracket_basis(i, j), zero_vec(m)));
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      push(k + a, k + b, concat(zero_vec(k), mp.n_algebra.bracket_basis(a, b)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < m; ++a)
      push(i, k + a, concat(scale(Rat(-1), mp.act_n_on_h[a].col(i)), mp.act_h_on_n[i].col(a)));
  std::vector<std::string> names = mp.h_algebra.basis_names();
  for (const auto& s : mp.n_algebra.basis_names()) names.push_back(s);
  return LieAlgebra(std::move(names), entries);
}

LieAlgebra in_split_basis(const MatchedPair& mp) {
  std::vector<std::string> names = mp.h_algebra.basis_names();
  for (const auto& s : mp.n_algebra.basis_names()) names.push_back(s);
  return change_basis(mp.l, split_change(mp), std::move(names));
}

namespace {

struct CoisotropicData {
  Subspace h_perp;
  std::vector<Vec> rows; // h basis then h^⊥ basis, in double coordinates
};

CoisotropicData coisotropic_rows(const LieBialgebra& b, const Subspace& h) {
  check_shape(b);
  const std::size_t n = b.dim();
  if (h.ambient_dim() != n) throw DimensionError("h must be a subspace of g");
  if (!is_subalgebra(b.g, h)) throw ConditionFailure(Condition::h_not_subalgebra, "h is not a subalgebra of g");
  CoisotropicData out{annihilator(h), {}};
  if (!is_subalgebra(dual_algebra(b), out.h_perp))
    throw ConditionFailure(Condition::not_coisotropic,
                           "h is not coisotropic: its annihilator is not closed under the dual bracket");
  for (const auto& v : h.basis_vectors()) out.rows.push_back(concat(v, zero_vec(n)));
  for (const auto& v : out.h_perp.basis_vectors()) out.rows.push_back(concat(zero_vec(n), v));
  return out;
}

} // namespace

Subspace coisotropic_subspace(const LieBialgebra& b, const Subspace& h) {
  return Subspace::span(2 * b.dim(), coisotropic_rows(b, h).rows);
}

MatchedPair coisotropic_double(const LieBialgebra& b, const Subspace& h) {
  auto data = coisotropic_rows(b, h);
  const DoubleLieAlgebra d = build_double(b);
  const std::size_t n = b.dim();
  std::vector<std::string> names = subspace_names(b.g.basis_names(), h, "h");
  for (const auto& s : subspace_names(dual_algebra(b).basis_names(), data.h_perp, "p")) names.push_back(s);
  LieAlgebra l = restrict_to(d.d, data.rows, std::move(names));

  std::vector<std::size_t> lo, hi;
  for (std::size_t i = 0; i < h.dim(); ++i) lo.push_back(i);
  for (std::size_t i = h.dim(); i < n; ++i) hi.push_back(i);
  return split_matched_pair(l, Subspace::coordinate(n, lo), Subspace::coordinate(n, hi));
}

LieAlgebra lp_at_vanishing_point(const LieBialgebra& b, const Mat& sigma, const LieAlgebra& t_bracket,
                                 const std::vector<Mat>& gp_action) {
  check_shape(b);
  const std::size_t n = b.dim(), p = sigma.rows();
  if (sigma.cols() != n) throw DimensionError("sigma needs one column per basis vector of g");
  if (t_bracket.dim() != p) throw DimensionError("transversal algebra must have dimension dim T_pP");

  const Subspace gp = kernel_basis(sigma);
  const std::size_t k = gp.dim();
  if (gp_action.size() != k)
    throw DimensionError("gp_action has " + std::to_string(gp_action.size()) +
                         " matrices but the stabilizer has dimension " + std::to_string(k));
  for (const auto& a : gp_action)
    if (a.rows() != p || a.cols() != p) throw DimensionError("gp_action matrices must be dim T_pP square");

  const LieAlgebra& g = b.g;
  if (!is_subalgebra(g, gp))
    throw ConditionFailure(Condition::stabilizer_not_closed, "ker sigma is not a subalgebra of g");
  {
    auto report = validate_jacobi(t_bracket);
    if (!report.ok) throw JacobiFailure(std::move(report), "transversal bracket fails Jacobi");
  }

  const LieAlgebra gs = dual_algebra(b);
  const auto xs = gp.basis_vectors();
  const Mat sigma_t = sigma.transpose();
  // ad*_{φα} x for every covector basis α and stabilizer basis x, in g_p coordinates
  std::vector<std::vector<Vec>> coad(p, std::vector<Vec>(k));
  for (std::size_t a = 0; a < p; ++a) {
    const Vec phi = sigma_t.apply(unit_vec(p, a));
    for (std::size_t i = 0; i < k; ++i) {
      const Vec v = dual_coadjoint(gs, phi, xs[i]);
      if (!gp.contains(v))
        throw ConditionFailure(Condition::coadjoint_leaves_stabilizer,
                               "ad* of phi(alpha_" + std::to_string(a) + ") moves stabilizer vector " +
                                   std::to_string(i) + " out of ker sigma");
      coad[a][i] = gp.coordinates(v);
    }
  }

  std::vector<BracketEntry> entries;
  auto push = [&](std::size_t i, std::size_t j, Vec v) {
    if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
  };
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) push(i, j, concat(gp.coordinates(g.bracket(xs[i], xs[j])), zero_vec(p)));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t a = 0; a < p; ++a) push(i, k + a, concat(scale(Rat(-1), coad[a][i]), gp_action[i].col(a)));
  for (std::size_t a = 0; a < p; ++a)
    for (std::size_t c = a + 1; c < p; ++c) push(k + a, k + c, concat(zero_vec(k), t_bracket.bracket_basis(a, c)));

  std::vector<std::string> names = subspace_names(g.basis_names(), gp, "s");
  for (std::size_t a = 0; a < p; ++a) names.push_back("a" + std::to_string(a));
  LieAlgebra out(std::move(names), entries);
  auto report = validate_jacobi(out);
  if (!report.ok) throw JacobiFailure(std::move(report), "fiber algebra at the vanishing point fails Jacobi");
  return out.validated();
}

} // namespace plie
