#include "plie/bialg.hpp"

#include <string>
#include <utility>

namespace plie {

std::size_t wedge2_dim(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::size_t wedge2_index(std::size_t n, std::size_t j, std::size_t k) {
  if (!(j < k && k < n)) throw InputError("wedge index requires j < k < n");
  return j * n - j * (j + 1) / 2 + (k - j - 1);
}

std::pair<std::size_t, std::size_t> wedge2_pair(std::size_t n, std::size_t index) {
  for (std::size_t j = 0; j + 1 < n; ++j) {
    const std::size_t row = n - 1 - j;
    if (index < row) return {j, j + 1 + index};
    index -= row;
  }
  throw InputError("wedge index out of range");
}

Vec wedge2(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw DimensionError("wedge of vectors with different lengths");
  const std::size_t n = u.size();
  Vec out = zero_vec(wedge2_dim(n));
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) out[wedge2_index(n, j, k)] = u[j] * v[k] - u[k] * v[j];
  return out;
}

Rat wedge2_pairing(const Vec& a, const Vec& b, std::size_t n) {
  if (a.size() != wedge2_dim(n) || b.size() != wedge2_dim(n)) throw DimensionError("Λ² vector has wrong length");
  return dot(a, b);
}

Mat wedge2_matrix(const Vec& r, std::size_t n) {
  if (r.size() != wedge2_dim(n)) throw DimensionError("Λ² vector has wrong length");
  Mat m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = j + 1; k < n; ++k) {
      m(j, k) = r[wedge2_index(n, j, k)];
      m(k, j) = -m(j, k);
    }
  return m;
}

Vec contract(const Vec& x, const Vec& r, std::size_t n) {
  if (x.size() != n) throw DimensionError("contraction argument has wrong length");
  return wedge2_matrix(r, n).transpose().apply(x);
}

Vec LieBialgebra::cocommutator(const Vec& x) const {
  if (x.size() != dim()) throw DimensionError("cocommutator argument has wrong length");
  Vec out = zero_vec(wedge2_dim(dim()));
  for (std::size_t i = 0; i < dim(); ++i)
    if (sgn(x[i]) != 0) axpy(out, x[i], delta[i]);
  return out;
}

void check_shape(const LieBialgebra& b) {
  if (b.delta.size() != b.dim()) throw DimensionError("cocommutator needs one entry per basis vector");
  for (const auto& d : b.delta)
    if (d.size() != wedge2_dim(b.dim())) throw DimensionError("cocommutator entry has wrong Λ² length");
}

LieAlgebra dual_algebra(const LieBialgebra& b) {
  check_shape(b);
  const std::size_t n = b.dim();
  std::vector<BracketEntry> entries;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t c = a + 1; c < n; ++c) {
      Vec v = zero_vec(n);
      const std::size_t w = wedge2_index(n, a, c);
      for (std::size_t k = 0; k < n; ++k) v[k] = b.delta[k][w];
      if (!is_zero(v)) entries.push_back({a, c, std::move(v)});
    }
  std::vector<std::string> names;
  for (const auto& s : b.g.basis_names()) names.push_back(s + "*");
  return LieAlgebra(std::move(names), entries);
}

LieBialgebra dual_bialgebra(const LieBialgebra& b) {
  const std::size_t n = b.dim();
  LieBialgebra out{dual_algebra(b), {}};
  for (std::size_t c = 0; c < n; ++c) {
    Vec d = zero_vec(wedge2_dim(n));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) d[wedge2_index(n, j, k)] = b.g.constant(j, k, c);
    out.delta.push_back(std::move(d));
  }
  return out;
}

Vec dual_coadjoint(const LieAlgebra& dual, const Vec& xi, const Vec& x) { return coadjoint(dual, xi, x); }

namespace {

Vec embed(const Vec& v, std::size_t total, std::size_t offset) {
  Vec out = zero_vec(total);
  for (std::size_t i = 0; i < v.size(); ++i) out[offset + i] = v[i];
  return out;
}

} // namespace

DoubleLieAlgebra assemble_double(const LieBialgebra& b) {
  check_shape(b);
  const std::size_t n = b.dim();
  const LieAlgebra& g = b.g;
  const LieAlgebra gs = dual_algebra(b);
  std::vector<BracketEntry> entries;
  auto push = [&](std::size_t i, std::size_t j, Vec v) {
    if (!is_zero(v)) entries.push_back({i, j, std::move(v)});
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      push(i, j, embed(g.bracket_basis(i, j), 2 * n, 0));
      push(n + i, n + j, embed(gs.bracket_basis(i, j), 2 * n, n));
    }
  // [x, xi] = -ad*_xi x + ad*_x xi
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t a = 0; a < n; ++a) {
      Vec x = unit_vec(n, i), xi = unit_vec(n, a);
      Vec gpart = scale(Rat(-1), dual_coadjoint(gs, xi, x));
      Vec spart = coadjoint(g, x, xi);
      push(i, n + a, add(embed(gpart, 2 * n, 0), embed(spart, 2 * n, n)));
    }
  std::vector<std::string> names = g.basis_names();
  for (const auto& s : gs.basis_names()) names.push_back(s);

  DoubleLieAlgebra d;
  d.d = LieAlgebra(std::move(names), entries);
  std::vector<std::size_t> lo, hi;
  for (std::size_t i = 0; i < n; ++i) {
    lo.push_back(i);
    hi.push_back(n + i);
  }
  d.g_part = Subspace::coordinate(2 * n, lo);
  d.gstar_part = Subspace::coordinate(2 * n, hi);
  d.pairing = Mat(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    d.pairing(i, n + i) = 1;
    d.pairing(n + i, i) = 1;
  }
  return d;
}

DoubleLieAlgebra build_double(const LieBialgebra& b) {
  DoubleLieAlgebra d = assemble_double(b);
  auto report = validate_jacobi(d.d);
  if (!report.ok) throw JacobiFailure(std::move(report), "double Lie algebra fails Jacobi: (g, delta) is not a Lie bialgebra");
  d.d = d.d.validated();
  return d;
}

JacobiReport check_mixed_identity(const LieBialgebra& b) {
  check_shape(b);
  const std::size_t n = b.dim();
  const LieAlgebra& g = b.g;
  const LieAlgebra gs = dual_algebra(b);
  JacobiReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k) {
        Vec x = unit_vec(n, i), y = unit_vec(n, j), xi = unit_vec(n, k);
        Vec lhs = dual_coadjoint(gs, xi, g.bracket(x, y));
        Vec rhs = g.bracket(dual_coadjoint(gs, xi, x), y);
        rhs = add(rhs, g.bracket(x, dual_coadjoint(gs, xi, y)));
        rhs = add(rhs, dual_coadjoint(gs, coadjoint(g, y, xi), x));
        rhs = sub(rhs, dual_coadjoint(gs, coadjoint(g, x, xi), y));
        Vec r = sub(lhs, rhs);
        if (!is_zero(r)) report.witnesses.push_back({i, j, n + k, embed(r, 2 * n, 0)});
      }
  report.ok = report.witnesses.empty();
  return report;
}

JacobiReport check_compatibility(const LieBialgebra& b) {
  check_shape(b);
  const std::size_t n = b.dim();
  JacobiReport report;
  for (auto& w : validate_jacobi(b.g).witnesses)
    report.witnesses.push_back({w.i, w.j, w.k, embed(w.residual, 2 * n, 0)});
  for (auto& w : validate_jacobi(dual_algebra(b)).witnesses)
    report.witnesses.push_back({n + w.i, n + w.j, n + w.k, embed(w.residual, 2 * n, n)});
  for (auto& w : check_mixed_identity(b).witnesses) report.witnesses.push_back(std::move(w));
  report.ok = report.witnesses.empty();
  return report;
}

bool is_isotropic(const DoubleLieAlgebra& d, const Subspace& s) {
  auto v = s.basis_vectors();
  for (std::size_t a = 0; a < v.size(); ++a)
    for (std::size_t c = a; c < v.size(); ++c)
      if (sgn(d.pair(v[a], v[c])) != 0) return false;
  return true;
}

bool check_manin_triple(const DoubleLieAlgebra& d, const Subspace& a, const Subspace& b) {
  const std::size_t n = d.d.dim();
  if (a.ambient_dim() != n || b.ambient_dim() != n) throw DimensionError("Manin triple subspaces must live in d");
  if (a.dim() + b.dim() != n) return false;
  if (intersect(a, b).dim() != 0) return false;
  if (!is_isotropic(d, a) || !is_isotropic(d, b)) return false;
  return is_subalgebra(d.d, a) && is_subalgebra(d.d, b);
}

Subspace lagrangian_graph(const DoubleLieAlgebra& d, const Vec& r) {
  const std::size_t n = d.half_dim();
  if (r.size() != wedge2_dim(n)) throw DimensionError("r must be a Λ²g* vector");
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < n; ++i) {
    Vec v = zero_vec(2 * n);
    v[i] = 1;
    Vec c = contract(unit_vec(n, i), r, n);
    for (std::size_t k = 0; k < n; ++k) v[n + k] = -c[k];
    rows.push_back(std::move(v));
  }
  return Subspace::span(2 * n, rows);
}

LieBialgebra make_coboundary(const LieAlgebra& g, const Vec& r) {
  const std::size_t n = g.dim();
  if (r.size() != wedge2_dim(n)) throw DimensionError("r must be a Λ²g vector");
  LieBialgebra b{g, {}};
  for (std::size_t i = 0; i < n; ++i) {
    Vec x = unit_vec(n, i);
    Vec out = zero_vec(wedge2_dim(n));
    for (std::size_t w = 0; w < r.size(); ++w) {
      if (sgn(r[w]) == 0) continue;
      auto [j, k] = wedge2_pair(n, w);
      Vec ej = unit_vec(n, j), ek = unit_vec(n, k);
      axpy(out, r[w], wedge2(g.bracket(x, ej), ek));
      axpy(out, r[w], wedge2(ej, g.bracket(x, ek)));
    }
    b.delta.push_back(std::move(out));
  }
  return b;
}

LieBialgebra standard_sl2_bialgebra() {
  Vec r = zero_vec(3);
  r[wedge2_index(3, 0, 2)] = 1; // e ^ f
  return make_coboundary(sl2(), r);
}

} // namespace plie
