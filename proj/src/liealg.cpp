#include "plie/liealg.hpp"

#include <set>
#include <utility>

namespace plie {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& brackets)
    : names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  table_.assign(n * n, zero_vec(n));
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n)
      throw InputError("bracket index out of range: (" + std::to_string(b.i) + "," + std::to_string(b.j) +
                       ") for dimension " + std::to_string(n));
    if (b.coeffs.size() != n) throw DimensionError("bracket coefficient vector has wrong length");
    if (b.i == b.j) {
      if (!is_zero(b.coeffs)) throw InputError("nonzero self-bracket [e_i, e_i]");
      continue;
    }
    auto key = std::minmax(b.i, b.j);
    if (!seen.insert(key).second)
      throw InputError("bracket pair (" + std::to_string(key.first) + "," + std::to_string(key.second) +
                       ") given twice");
    table_[b.i * n + b.j] = b.coeffs;
    table_[b.j * n + b.i] = scale(Rat(-1), b.coeffs);
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("x" + std::to_string(i));
  LieAlgebra g(std::move(names), {});
  g.trusted_ = true;
  return g;
}

LieAlgebra LieAlgebra::from_table(std::vector<std::string> basis_names, std::vector<Vec> table) {
  const std::size_t n = basis_names.size();
  if (table.size() != n * n) throw DimensionError("structure table has wrong size");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (table[i * n + j].size() != n) throw DimensionError("structure table entry has wrong length");
      if (!is_zero(add(table[i * n + j], table[j * n + i])))
        throw InputError("structure constants are not antisymmetric at (" + std::to_string(i) + "," +
                         std::to_string(j) + ")");
    }
  LieAlgebra g;
  g.names_ = std::move(basis_names);
  g.table_ = std::move(table);
  return g;
}

Vec LieAlgebra::bracket(const Vec& x, const Vec& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionError("bracket arguments must have length dim");
  Vec out = zero_vec(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x[i]) == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j || sgn(y[j]) == 0) continue;
      axpy(out, x[i] * y[j], table_[i * n + j]);
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  const std::size_t n = dim();
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    Vec c = bracket(x, unit_vec(n, i));
    for (std::size_t k = 0; k < n; ++k) m(k, i) = c[k];
  }
  return m;
}

LieAlgebra LieAlgebra::validated() const {
  auto report = validate_jacobi(*this);
  if (!report.ok) throw JacobiFailure(std::move(report));
  LieAlgebra g = *this;
  g.trusted_ = true;
  return g;
}

std::vector<BracketEntry> LieAlgebra::nonzero_brackets() const {
  std::vector<BracketEntry> out;
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = i + 1; j < dim(); ++j)
      if (!is_zero(bracket_basis(i, j))) out.push_back({i, j, bracket_basis(i, j)});
  return out;
}

JacobiFailure::JacobiFailure(JacobiReport report, const std::string& what)
    : MathRejection(what), report_(std::move(report)) {}

Vec bracket_of(const LieAlgebra& g, const Vec& x, const Vec& y) { return g.bracket(x, y); }

JacobiReport validate_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  JacobiReport report;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec ei = unit_vec(n, i), ej = unit_vec(n, j), ek = unit_vec(n, k);
        Vec r = g.bracket(g.bracket_basis(i, j), ek);
        r = add(r, g.bracket(g.bracket_basis(j, k), ei));
        r = add(r, g.bracket(g.bracket_basis(k, i), ej));
        if (!is_zero(r)) report.witnesses.push_back({i, j, k, std::move(r)});
      }
  report.ok = report.witnesses.empty();
  return report;
}

Vec coadjoint(const LieAlgebra& g, const Vec& x, const Vec& xi) {
  const std::size_t n = g.dim();
  if (x.size() != n || xi.size() != n) throw DimensionError("coadjoint arguments must have length dim");
  Vec out = zero_vec(n);
  for (std::size_t k = 0; k < n; ++k) out[k] = -dot(xi, g.bracket(x, unit_vec(n, k)));
  return out;
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& s) {
  if (s.ambient_dim() != g.dim()) throw DimensionError("subspace ambient dimension differs from algebra");
  auto b = s.basis_vectors();
  for (std::size_t a = 0; a < b.size(); ++a)
    for (std::size_t c = a + 1; c < b.size(); ++c)
      if (!s.contains(g.bracket(b[a], b[c]))) return false;
  return true;
}

namespace {

// Coordinates of v in the (independent, not necessarily canonical) rows of basis.
Vec coords_in(const Mat& basis_t, const Vec& v) {
  Vec x;
  if (!solve(basis_t, v, x)) throw MathRejection("bracket leaves the span of the given basis");
  return x;
}

} // namespace

LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vec>& basis, std::vector<std::string> names) {
  const std::size_t k = basis.size();
  if (names.size() != k) throw DimensionError("name count differs from basis size");
  Mat bt = Mat::from_rows(g.dim(), basis).transpose();
  if (rank(bt) != k) throw InputError("restriction basis is linearly dependent");
  std::vector<Vec> table(k * k, zero_vec(k));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vec c = coords_in(bt, g.bracket(basis[a], basis[b]));
      table[b * k + a] = scale(Rat(-1), c);
      table[a * k + b] = std::move(c);
    }
  LieAlgebra out = LieAlgebra::from_table(std::move(names), std::move(table));
  out.trusted_ = g.trusted_;
  return out;
}

LieAlgebra change_basis(const LieAlgebra& g, const Mat& change, std::vector<std::string> names) {
  if (change.rows() != g.dim() || change.cols() != g.dim()) throw DimensionError("change of basis must be square");
  return restrict_to(g, change.row_vectors(), std::move(names));
}

LieAlgebra sl2() {
  // basis (e, h, f)
  return LieAlgebra({"e", "h", "f"},
                    {{0, 1, {Rat(-2), Rat(0), Rat(0)}},
                     {0, 2, {Rat(0), Rat(1), Rat(0)}},
                     {1, 2, {Rat(0), Rat(0), Rat(-2)}}})
      .validated();
}

} // namespace plie
