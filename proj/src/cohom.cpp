#include "plie/cohom.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace plie {

// ---------------------------------------------------------------- sparse

SparseVec normalize(SparseVec v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  out.reserve(v.size());
  for (auto& [i, x] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += x;
    else
      out.emplace_back(i, std::move(x));
  }
  std::erase_if(out, [](const auto& e) { return sgn(e.second) == 0; });
  return out;
}

SparseVec to_sparse(const Vec& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (sgn(v[i]) != 0) out.emplace_back(i, v[i]);
  return out;
}

Vec to_dense(const SparseVec& v, std::size_t n) {
  Vec out = zero_vec(n);
  for (const auto& [i, x] : v) {
    if (i >= n) throw DimensionError("sparse index out of range");
    out[i] = x;
  }
  return out;
}

namespace {

// a + s * b for sorted sparse vectors
SparseVec sparse_axpy(const SparseVec& a, const Rat& s, const SparseVec& b) {
  SparseVec out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      out.emplace_back(b[j].first, s * b[j].second);
      ++j;
    } else {
      Rat x = a[i].second + s * b[j].second;
      if (sgn(x) != 0) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

Rat sparse_get(const SparseVec& v, std::size_t index) {
  auto it = std::lower_bound(v.begin(), v.end(), index, [](const auto& e, std::size_t k) { return e.first < k; });
  return (it != v.end() && it->first == index) ? it->second : Rat(0);
}

// Row echelon form keyed by leading index; rows are not back-reduced.
class Echelon {
public:
  bool insert(SparseVec v) {
    while (!v.empty()) {
      auto it = rows_.find(v.front().first);
      if (it == rows_.end()) {
        const Rat lead = v.front().second;
        for (auto& e : v) e.second /= lead;
        const std::size_t key = v.front().first;
        rows_.emplace(key, std::move(v));
        return true;
      }
      const Rat c = v.front().second;
      v = sparse_axpy(v, -c, it->second);
    }
    return false;
  }
  std::size_t rank() const { return rows_.size(); }

private:
  std::unordered_map<std::size_t, SparseVec> rows_;
};

} // namespace

void SparseMatrix::set_column(std::size_t j, SparseVec v) {
  v = normalize(std::move(v));
  if (!v.empty() && v.back().first >= rows_) throw DimensionError("sparse column entry out of range");
  columns_.at(j) = std::move(v);
}

SparseMatrix SparseMatrix::from_dense(const Mat& m) {
  SparseMatrix out(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) out.columns_[j] = to_sparse(m.col(j));
  return out;
}

SparseMatrix SparseMatrix::identity(std::size_t n) {
  SparseMatrix out(n, n);
  for (std::size_t j = 0; j < n; ++j) out.columns_[j] = {{j, Rat(1)}};
  return out;
}

SparseVec SparseMatrix::apply(const SparseVec& v) const {
  SparseVec acc;
  for (const auto& [j, x] : v) {
    if (j >= cols_) throw DimensionError("sparse vector longer than matrix width");
    for (const auto& [i, y] : columns_[j]) acc.emplace_back(i, x * y);
  }
  return normalize(std::move(acc));
}

Vec SparseMatrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("vector length differs from matrix width");
  return plie::to_dense(apply(to_sparse(v)), rows_);
}

Mat SparseMatrix::to_dense() const {
  Mat m(rows_, cols_);
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& [i, x] : columns_[j]) m(i, j) = x;
  return m;
}

bool SparseMatrix::is_zero() const {
  return std::all_of(columns_.begin(), columns_.end(), [](const SparseVec& c) { return c.empty(); });
}

bool SparseMatrix::is_diagonal() const {
  for (std::size_t j = 0; j < cols_; ++j)
    for (const auto& e : columns_[j])
      if (e.first != j) return false;
  return true;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("sparse product shape mismatch");
  SparseMatrix out(a.rows_, b.cols_);
  for (std::size_t j = 0; j < b.cols_; ++j) out.columns_[j] = a.apply(b.columns_[j]);
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("sparse sum shape mismatch");
  SparseMatrix out(a.rows_, a.cols_);
  for (std::size_t j = 0; j < a.cols_; ++j) out.columns_[j] = sparse_axpy(a.columns_[j], Rat(1), b.columns_[j]);
  return out;
}

std::size_t sparse_rank(const std::vector<SparseVec>& vectors) {
  Echelon e;
  for (const auto& v : vectors) e.insert(v);
  return e.rank();
}

std::size_t rank(const SparseMatrix& m) {
  Echelon e;
  for (std::size_t j = 0; j < m.cols(); ++j) e.insert(m.column(j));
  return e.rank();
}

SparseKernel sparse_kernel(const std::vector<SparseMatrix>& stacked, std::size_t cols) {
  // reduced rows keyed by pivot column; no pivot row has entries in other pivot columns
  std::map<std::size_t, SparseVec> pivots;
  for (const auto& m : stacked) {
    if (m.cols() != cols) throw DimensionError("stacked matrices must share the column count");
    std::vector<SparseVec> rows(m.rows());
    for (std::size_t j = 0; j < cols; ++j)
      for (const auto& [i, x] : m.column(j)) rows[i].emplace_back(j, x);
    for (auto& r : rows) {
      SparseVec acc = r;
      for (const auto& [c, x] : r) {
        auto it = pivots.find(c);
        if (it != pivots.end())
          for (const auto& [k, y] : it->second) acc.emplace_back(k, -x * y);
      }
      acc = normalize(std::move(acc));
      if (acc.empty()) continue;
      const std::size_t q = acc.front().first;
      const Rat lead = acc.front().second;
      for (auto& e : acc) e.second /= lead;
      for (auto& [p, row] : pivots) {
        const Rat c = sparse_get(row, q);
        if (sgn(c) != 0) row = sparse_axpy(row, -c, acc);
      }
      pivots.emplace(q, std::move(acc));
    }
  }
  SparseKernel out;
  std::vector<std::size_t> position(cols, cols);
  for (std::size_t c = 0; c < cols; ++c)
    if (!pivots.count(c)) {
      position[c] = out.free.size();
      out.free.push_back(c);
      out.basis.push_back({{c, Rat(1)}});
    }
  for (const auto& [p, row] : pivots)
    for (const auto& [c, x] : row)
      if (c != p) out.basis[position[c]].emplace_back(p, -x);
  for (auto& v : out.basis) v = normalize(std::move(v));
  return out;
}

// ---------------------------------------------------------------- exterior basis

ExteriorBasis::ExteriorBasis(std::size_t n) : n_(n), masks_(n + 1) {
  if (n > 24) throw InputError("exterior algebra on more than 24 generators is not supported");
  for (std::size_t k = 0; k <= n; ++k) {
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    while (true) {
      const std::uint64_t m = mask_of(idx);
      index_.emplace(m, masks_[k].size());
      masks_[k].push_back(m);
      // next k-combination in lexicographic order
      std::size_t i = k;
      while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
      if (i == 0) break;
      ++idx[i - 1];
      for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
  }
}

std::size_t ExteriorBasis::index_of(std::uint64_t mask) const {
  auto it = index_.find(mask);
  if (it == index_.end()) throw InputError("monomial outside the exterior basis");
  return it->second;
}

std::vector<std::size_t> ExteriorBasis::indices(std::uint64_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1) out.push_back(i);
  return out;
}

std::uint64_t ExteriorBasis::mask_of(const std::vector<std::size_t>& indices) {
  std::uint64_t m = 0;
  for (auto i : indices) {
    const std::uint64_t bit = std::uint64_t{1} << i;
    if (m & bit) throw InputError("repeated generator in wedge monomial");
    m |= bit;
  }
  return m;
}

std::string ExteriorBasis::label(std::uint64_t mask, const std::vector<std::string>& names) const {
  if (mask == 0) return "1";
  std::string out;
  for (auto i : indices(mask)) {
    if (!out.empty()) out += "^";
    out += names.at(i) + "*";
  }
  return out;
}

namespace {

int parity_sign(std::size_t count) { return (count % 2 == 0) ? 1 : -1; }

// number of set bits of m strictly below position i
std::size_t below(std::uint64_t m, std::size_t i) {
  return static_cast<std::size_t>(std::popcount(m & ((std::uint64_t{1} << i) - 1)));
}

} // namespace

// ---------------------------------------------------------------- complexes

CochainComplex::CochainComplex(std::vector<std::size_t> dims, std::vector<SparseMatrix> diffs,
                               std::vector<std::vector<std::string>> labels)
    : dims_(std::move(dims)), diffs_(std::move(diffs)), labels_(std::move(labels)) {
  if (dims_.empty()) throw InputError("a cochain complex needs at least degree 0");
  if (diffs_.size() + 1 != dims_.size()) throw DimensionError("need one differential between consecutive degrees");
  if (!labels_.empty()) {
    if (labels_.size() != dims_.size()) throw DimensionError("labels must cover every degree");
    for (std::size_t k = 0; k < dims_.size(); ++k)
      if (labels_[k].size() != dims_[k]) throw DimensionError("label count differs from degree dimension");
  }
  for (std::size_t k = 0; k < diffs_.size(); ++k)
    if (diffs_[k].cols() != dims_[k] || diffs_[k].rows() != dims_[k + 1])
      throw DimensionError("differential " + std::to_string(k) + " has the wrong shape");
  for (std::size_t k = 0; k + 1 < diffs_.size(); ++k)
    if (!(diffs_[k + 1] * diffs_[k]).is_zero())
      throw MathRejection("d∘d is nonzero starting from degree " + std::to_string(k));
}

std::vector<std::size_t> cohomology_dims(const CochainComplex& c) {
  const std::size_t top = c.top_degree();
  std::vector<std::size_t> ranks(top + 1, 0);
  for (std::size_t k = 0; k < top; ++k) ranks[k] = rank(c.diff(k));
  std::vector<std::size_t> out(top + 1);
  for (std::size_t k = 0; k <= top; ++k) out[k] = c.dim(k) - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
  return out;
}

void Representation::validate() const {
  const std::size_t n = algebra.dim();
  if (rho.size() != n) throw DimensionError("representation needs one matrix per basis vector");
  for (const auto& m : rho)
    if (m.rows() != space_dim || m.cols() != space_dim) throw DimensionError("representation matrix has wrong shape");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Mat lhs(space_dim, space_dim);
      const Vec& c = algebra.bracket_basis(i, j);
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(c[k]) != 0) lhs = lhs + c[k] * rho[k];
      if (lhs != rho[i] * rho[j] - rho[j] * rho[i])
        throw ConditionFailure(Condition::invalid_representation,
                               "rho([e_" + std::to_string(i) + ", e_" + std::to_string(j) +
                                   "]) differs from the commutator of rho(e_" + std::to_string(i) + ") and rho(e_" +
                                   std::to_string(j) + ")");
    }
}

Representation Representation::trivial(const LieAlgebra& g) { return {g, 1, std::vector<Mat>(g.dim(), Mat(1, 1))}; }

Representation Representation::adjoint(const LieAlgebra& g) {
  Representation r{g, g.dim(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) r.rho.push_back(g.ad(unit_vec(g.dim(), i)));
  return r;
}

Representation Representation::coadjoint(const LieAlgebra& g) {
  Representation r{g, g.dim(), {}};
  for (std::size_t i = 0; i < g.dim(); ++i) r.rho.push_back(Rat(-1) * g.ad(unit_vec(g.dim(), i)).transpose());
  return r;
}

namespace {

struct BracketTerm {
  std::size_t p, q;
  Rat coef;
};

// Raw CE differentials on Λ(V*) ⊗ M for a skew bracket given as, for each
// target generator c, the list of (p < q, coefficient of e_c in [e_p, e_q]).
std::vector<SparseMatrix> ce_differentials(const ExteriorBasis& basis, const std::vector<std::vector<BracketTerm>>& by_target,
                                           const std::vector<Mat>& rho, std::size_t dm) {
  const std::size_t n = basis.generators();
  std::vector<SparseMatrix> diffs;
  for (std::size_t k = 0; k < n; ++k) {
    SparseMatrix d(basis.size(k + 1) * dm, basis.size(k) * dm);
    for (std::size_t s = 0; s < basis.size(k); ++s) {
      const std::uint64_t S = basis.mask(k, s);
      for (std::size_t a = 0; a < dm; ++a) {
        SparseVec col;
        for (std::size_t u = 0; u < n; ++u) {
          const std::uint64_t bit = std::uint64_t{1} << u;
          if (S & bit) continue;
          const std::uint64_t U = S | bit;
          const int sign = parity_sign(below(U, u));
          const std::size_t target = basis.index_of(U) * dm;
          for (std::size_t b = 0; b < dm; ++b)
            if (sgn(rho[u](b, a)) != 0) col.emplace_back(target + b, sign * rho[u](b, a));
        }
        for (std::size_t c = 0; c < n; ++c) {
          const std::uint64_t cbit = std::uint64_t{1} << c;
          if (!(S & cbit)) continue;
          const std::uint64_t rest = S & ~cbit;
          const int sign_c = parity_sign(below(rest, c));
          for (const auto& t : by_target[c]) {
            const std::uint64_t pb = std::uint64_t{1} << t.p, qb = std::uint64_t{1} << t.q;
            if ((rest & pb) || (rest & qb)) continue;
            const std::uint64_t U = rest | pb | qb;
            const int sign = sign_c * parity_sign(below(U, t.p) + below(U, t.q));
            col.emplace_back(basis.index_of(U) * dm + a, sign * t.coef);
          }
        }
        d.set_column(s * dm + a, std::move(col));
      }
    }
    diffs.push_back(std::move(d));
  }
  return diffs;
}

std::vector<std::vector<BracketTerm>> bracket_terms(const LieAlgebra& g) {
  std::vector<std::vector<BracketTerm>> out(g.dim());
  for (const auto& e : g.nonzero_brackets())
    for (std::size_t c = 0; c < g.dim(); ++c)
      if (sgn(e.coeffs[c]) != 0) out[c].push_back({e.i, e.j, e.coeffs[c]});
  return out;
}

std::vector<std::vector<std::string>> cochain_labels(const ExteriorBasis& basis, const std::vector<std::string>& names,
                                                     std::size_t dm) {
  std::vector<std::vector<std::string>> out(basis.top_degree() + 1);
  for (std::size_t k = 0; k <= basis.top_degree(); ++k)
    for (std::size_t s = 0; s < basis.size(k); ++s) {
      const std::string mono = basis.label(basis.mask(k, s), names);
      for (std::size_t a = 0; a < dm; ++a) out[k].push_back(dm == 1 ? mono : mono + "⊗m" + std::to_string(a));
    }
  return out;
}

std::vector<std::size_t> cochain_dims(const ExteriorBasis& basis, std::size_t dm) {
  std::vector<std::size_t> dims;
  for (std::size_t k = 0; k <= basis.top_degree(); ++k) dims.push_back(basis.size(k) * dm);
  return dims;
}

// Subcomplex of a graded space with maps `diffs` (not necessarily squaring to
// zero outside the subcomplex); the result is checked as a CochainComplex.
InvariantSubcomplex restrict_invariants(const std::vector<std::size_t>& dims, const std::vector<SparseMatrix>& diffs,
                                        const std::vector<std::vector<std::string>>& labels,
                                        const std::vector<std::vector<SparseMatrix>>& actions) {
  const std::size_t top = dims.size() - 1;
  if (actions.size() != dims.size()) throw DimensionError("need one action list per degree");
  bool diagonal = true;
  for (std::size_t k = 0; k <= top; ++k)
    for (const auto& a : actions[k]) {
      if (a.rows() != dims[k] || a.cols() != dims[k])
        throw DimensionError("action matrix at degree " + std::to_string(k) + " has the wrong shape");
      diagonal = diagonal && a.is_diagonal();
    }

  std::vector<SparseKernel> kernels(top + 1);
  for (std::size_t k = 0; k <= top; ++k) {
    if (diagonal) {
      for (std::size_t i = 0; i < dims[k]; ++i) {
        bool killed = true;
        for (const auto& a : actions[k]) killed = killed && a.column(i).empty();
        if (killed) {
          kernels[k].free.push_back(i);
          kernels[k].basis.push_back({{i, Rat(1)}});
        }
      }
    } else {
      kernels[k] = sparse_kernel(actions[k], dims[k]);
    }
  }

  InvariantSubcomplex out;
  std::vector<std::size_t> sub_dims;
  for (std::size_t k = 0; k <= top; ++k) {
    sub_dims.push_back(kernels[k].basis.size());
    SparseMatrix inc(dims[k], kernels[k].basis.size());
    for (std::size_t j = 0; j < kernels[k].basis.size(); ++j) inc.set_column(j, kernels[k].basis[j]);
    out.inclusion.push_back(std::move(inc));
  }
  std::vector<SparseMatrix> sub_diffs;
  for (std::size_t k = 0; k < top; ++k) {
    const auto& next = kernels[k + 1];
    std::vector<std::size_t> position(dims[k + 1], dims[k + 1]);
    for (std::size_t j = 0; j < next.free.size(); ++j) position[next.free[j]] = j;
    SparseMatrix d(next.basis.size(), kernels[k].basis.size());
    for (std::size_t j = 0; j < kernels[k].basis.size(); ++j) {
      const SparseVec w = diffs[k].apply(kernels[k].basis[j]);
      bool inside = true;
      if (diagonal) {
        for (const auto& e : w) inside = inside && position[e.first] != dims[k + 1];
      } else {
        for (const auto& a : actions[k + 1]) inside = inside && a.apply(w).empty();
      }
      if (!inside)
        throw ConditionFailure(Condition::not_invariant, "differential from degree " + std::to_string(k) +
                                                             " leaves the invariant subspace in degree " +
                                                             std::to_string(k + 1));
      SparseVec coords;
      for (const auto& [i, x] : w)
        if (position[i] != dims[k + 1]) coords.emplace_back(position[i], x);
      d.set_column(j, std::move(coords));
    }
    sub_diffs.push_back(std::move(d));
  }
  std::vector<std::vector<std::string>> sub_labels;
  if (!labels.empty()) {
    sub_labels.resize(top + 1);
    for (std::size_t k = 0; k <= top; ++k)
      for (auto f : kernels[k].free) sub_labels[k].push_back(labels[k][f]);
  }
  out.complex = CochainComplex(std::move(sub_dims), std::move(sub_diffs), std::move(sub_labels));
  return out;
}

std::vector<SparseMatrix> raw_diffs(const CochainComplex& c) {
  std::vector<SparseMatrix> out;
  for (std::size_t k = 0; k < c.top_degree(); ++k) out.push_back(c.diff(k));
  return out;
}

} // namespace

CochainComplex ce_complex(const LieAlgebra& g) { return ce_complex(g, Representation::trivial(g)); }

CochainComplex ce_complex(const LieAlgebra& g, const Representation& m) {
  if (!(m.algebra == g)) throw InputError("representation is defined over a different Lie algebra");
  m.validate();
  const ExteriorBasis basis(g.dim());
  return CochainComplex(cochain_dims(basis, m.space_dim),
                        ce_differentials(basis, bracket_terms(g), m.rho, m.space_dim),
                        cochain_labels(basis, g.basis_names(), m.space_dim));
}

std::vector<SparseMatrix> derivation_on_exterior(const Mat& t, const ExteriorBasis& basis) {
  const std::size_t n = basis.generators();
  if (t.rows() != n || t.cols() != n) throw DimensionError("operator size differs from the number of generators");
  std::vector<SparseMatrix> out;
  for (std::size_t k = 0; k <= n; ++k) {
    SparseMatrix d(basis.size(k), basis.size(k));
    for (std::size_t s = 0; s < basis.size(k); ++s) {
      const std::uint64_t S = basis.mask(k, s);
      SparseVec col;
      for (auto st : ExteriorBasis::indices(S)) {
        const std::uint64_t rest = S & ~(std::uint64_t{1} << st);
        for (std::size_t i = 0; i < n; ++i) {
          if (sgn(t(i, st)) == 0) continue;
          if (i == st) {
            col.emplace_back(s, t(i, st));
            continue;
          }
          const std::uint64_t ibit = std::uint64_t{1} << i;
          if (rest & ibit) continue;
          // ε^i sits where ε^st was; sorting moves it past the generators strictly between
          const std::size_t lo = std::min(i, st), hi = std::max(i, st);
          const std::size_t between = below(rest, hi) - below(rest, lo + 1);
          col.emplace_back(basis.index_of(rest | ibit), parity_sign(between) * t(i, st));
        }
      }
      d.set_column(s, std::move(col));
    }
    out.push_back(std::move(d));
  }
  return out;
}

std::vector<SparseMatrix> cochain_action(const LieAlgebra& g, const Representation& m, const Vec& x) {
  const std::size_t n = g.dim(), dm = m.space_dim;
  if (x.size() != n) throw DimensionError("acting vector has wrong length");
  Mat t(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Vec c = coadjoint(g, x, unit_vec(n, j));
    for (std::size_t i = 0; i < n; ++i) t(i, j) = c[i];
  }
  Mat rx(dm, dm);
  for (std::size_t i = 0; i < n; ++i)
    if (sgn(x[i]) != 0) rx = rx + x[i] * m.rho.at(i);
  const ExteriorBasis basis(n);
  auto der = derivation_on_exterior(t, basis);
  std::vector<SparseMatrix> out;
  for (std::size_t k = 0; k <= n; ++k) {
    SparseMatrix a(basis.size(k) * dm, basis.size(k) * dm);
    for (std::size_t s = 0; s < basis.size(k); ++s)
      for (std::size_t c = 0; c < dm; ++c) {
        SparseVec col;
        for (const auto& [s2, v] : der[k].column(s)) col.emplace_back(s2 * dm + c, v);
        for (std::size_t b = 0; b < dm; ++b)
          if (sgn(rx(b, c)) != 0) col.emplace_back(s * dm + b, rx(b, c));
        a.set_column(s * dm + c, std::move(col));
      }
    out.push_back(std::move(a));
  }
  return out;
}

InvariantSubcomplex invariant_subcomplex(const CochainComplex& c,
                                         const std::vector<std::vector<SparseMatrix>>& actions) {
  return restrict_invariants(c.dims(), raw_diffs(c), c.labels(), actions);
}

InvariantSubcomplex coordinate_subcomplex(const CochainComplex& c, const std::vector<std::vector<std::size_t>>& keep) {
  if (keep.size() != c.dims().size()) throw DimensionError("need one selection per degree");
  // a selection is the kernel of the diagonal projector onto the dropped coordinates
  std::vector<std::vector<SparseMatrix>> actions(keep.size());
  for (std::size_t k = 0; k < keep.size(); ++k) {
    std::vector<bool> kept(c.dim(k), false);
    for (auto i : keep[k]) kept.at(i) = true;
    SparseMatrix drop(c.dim(k), c.dim(k));
    for (std::size_t i = 0; i < c.dim(k); ++i)
      if (!kept[i]) drop.set_column(i, {{i, Rat(1)}});
    actions[k].push_back(std::move(drop));
  }
  return restrict_invariants(c.dims(), raw_diffs(c), c.labels(), actions);
}

InvariantSubcomplex relative_complex(const LieAlgebra& l, const Subspace& h) {
  const std::size_t n = l.dim();
  if (h.ambient_dim() != n) throw DimensionError("h must be a subspace of l");
  if (!is_subalgebra(l, h)) throw ConditionFailure(Condition::h_not_subalgebra, "h is not a subalgebra of l");
  const std::size_t k = h.dim(), q = n - k;

  // basis of l: h's canonical basis, then coordinate vectors off h's pivots
  std::vector<Vec> rows = h.basis_vectors();
  std::vector<std::string> names;
  for (std::size_t i = 0; i < k; ++i) names.push_back("h" + std::to_string(i));
  std::vector<std::string> complement_names;
  {
    std::vector<bool> pivot(n, false);
    for (auto p : h.pivots()) pivot[p] = true;
    for (std::size_t c = 0; c < n; ++c)
      if (!pivot[c]) {
        rows.push_back(unit_vec(n, c));
        names.push_back(l.basis_names()[c]);
        complement_names.push_back(l.basis_names()[c]);
      }
  }
  const LieAlgebra lb = change_basis(l, Mat::from_rows(n, rows), names);

  // bracket of the complement projected along h
  std::vector<std::vector<BracketTerm>> by_target(q);
  for (std::size_t a = 0; a < q; ++a)
    for (std::size_t b = a + 1; b < q; ++b) {
      const Vec& c = lb.bracket_basis(k + a, k + b);
      for (std::size_t t = 0; t < q; ++t)
        if (sgn(c[k + t]) != 0) by_target[t].push_back({a, b, c[k + t]});
    }
  const ExteriorBasis basis(q);
  const auto diffs = ce_differentials(basis, by_target, std::vector<Mat>(q, Mat(1, 1)), 1);

  // h acts on horizontal covectors: (x·ε^t)(y_b) = -ε^t(π[x, y_b])
  std::vector<std::vector<SparseMatrix>> actions(q + 1);
  for (std::size_t i = 0; i < k; ++i) {
    Mat t(q, q);
    for (std::size_t b = 0; b < q; ++b) {
      const Vec& c = lb.bracket_basis(i, k + b);
      for (std::size_t s = 0; s < q; ++s) t(b, s) = -c[k + s];
    }
    auto der = derivation_on_exterior(t, basis);
    for (std::size_t deg = 0; deg <= q; ++deg) actions[deg].push_back(std::move(der[deg]));
  }
  return restrict_invariants(cochain_dims(basis, 1), diffs, cochain_labels(basis, complement_names, 1), actions);
}

std::vector<std::size_t> relative_cohomology(const LieAlgebra& l, const Subspace& h) {
  return cohomology_dims(relative_complex(l, h).complex);
}

InvariantSubcomplex n_side_invariant_complex(const MatchedPair& mp) {
  const CochainComplex c = ce_complex(mp.n_algebra);
  const ExteriorBasis basis(mp.n.dim());
  std::vector<std::vector<SparseMatrix>> actions(basis.top_degree() + 1);
  for (const auto& a : mp.act_h_on_n) {
    auto der = derivation_on_exterior(Rat(-1) * a.transpose(), basis);
    for (std::size_t deg = 0; deg <= basis.top_degree(); ++deg) actions[deg].push_back(std::move(der[deg]));
  }
  return invariant_subcomplex(c, actions);
}

} // namespace plie
