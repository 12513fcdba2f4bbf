#include "plie/exactlin.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace plie {

Rat make_rat(long num, long den) {
  if (den == 0) throw InputError("rational with zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rat parse_rat(std::string_view text) {
  auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den[0] == '-' || den[0] == '+')
    throw InputError("not a rational literal: \"" + std::string(text) + "\"");
  std::string n(num);
  if (n[0] == '+') n.erase(0, 1);
  mpz_class zn(n, 10);
  mpz_class zd(std::string(den), 10);
  if (zd == 0) throw InputError("zero denominator in \"" + std::string(text) + "\"");
  Rat r(zn, zd);
  r.canonicalize();
  return r;
}

std::string to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

Vec unit_vec(std::size_t n, std::size_t i) {
  Vec v(n, Rat(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) == 0; });
}

static void check_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw DimensionError("vector length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
}

Vec add(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Vec sub(const Vec& a, const Vec& b) {
  check_len(a, b);
  Vec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Vec scale(const Rat& s, const Vec& v) {
  Vec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

void axpy(Vec& a, const Rat& s, const Vec& b) {
  check_len(a, b);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

Rat dot(const Vec& a, const Vec& b) {
  check_len(a, b);
  Rat r(0);
  for (std::size_t i = 0; i < a.size(); ++i) r += a[i] * b[i];
  return r;
}

// ---------------------------------------------------------------- Mat

Mat::Mat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Mat Mat::identity(std::size_t n) {
  Mat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::from_rows(std::size_t cols, const std::vector<Vec>& rows) {
  Mat m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("row length does not match column count");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

Vec Mat::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vec Mat::col(std::size_t c) const {
  Vec v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

std::vector<Vec> Mat::row_vectors() const {
  std::vector<Vec> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Mat Mat::transpose() const {
  Mat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Vec Mat::apply(const Vec& v) const {
  if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
  Vec out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (sgn((*this)(r, c)) != 0 && sgn(v[c]) != 0) out[r] += (*this)(r, c) * v[c];
  return out;
}

bool Mat::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rat& x) { return sgn(x) == 0; });
}

Mat operator*(const Mat& a, const Mat& b) {
  if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
  Mat m(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0) m(i, j) += aik * b(k, j);
    }
  return m;
}

Mat operator+(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix sum size mismatch");
  Mat m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] += b.data_[i];
  return m;
}

Mat operator-(const Mat& a, const Mat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionError("matrix difference size mismatch");
  Mat m = a;
  for (std::size_t i = 0; i < m.data_.size(); ++i) m.data_[i] -= b.data_[i];
  return m;
}

Mat operator*(const Rat& s, const Mat& a) {
  Mat m = a;
  for (auto& x : m.data_) x *= s;
  return m;
}

Mat vstack(const Mat& a, const Mat& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw DimensionError("vstack column mismatch");
  Mat m(a.rows() + b.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) m(a.rows() + r, c) = b(r, c);
  return m;
}

Mat hstack(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw DimensionError("hstack row mismatch");
  Mat m(a.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) m(r, c) = a(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) m(r, a.cols() + c) = b(r, c);
  }
  return m;
}

RrefResult rref(Mat m) {
  RrefResult out;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t p = lead_row;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != lead_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(lead_row, k));
    Rat inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < cols; ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || sgn(m(r, c)) == 0) continue;
      Rat f = m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (sgn(m(lead_row, k)) != 0) m(r, k) -= f * m(lead_row, k);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Mat& m) { return rref(m).pivots.size(); }

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  auto r = rref(hstack(m, Mat::identity(n)));
  if (r.pivots.size() < n || (n > 0 && r.pivots[n - 1] >= n)) throw MathRejection("matrix is singular");
  Mat inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::row_space(const Mat& m) {
  Subspace s;
  s.ambient_ = m.cols();
  auto r = rref(m);
  const std::size_t k = r.pivots.size();
  s.basis_ = Mat(k, m.cols());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_(i, c) = r.reduced(i, c);
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return zero(ambient_dim);
  return row_space(Mat::from_rows(ambient_dim, vectors));
}

Subspace Subspace::zero(std::size_t ambient_dim) {
  Subspace s;
  s.ambient_ = ambient_dim;
  s.basis_ = Mat(0, ambient_dim);
  return s;
}

Subspace Subspace::full(std::size_t ambient_dim) { return row_space(Mat::identity(ambient_dim)); }

Subspace Subspace::coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices) {
  std::vector<Vec> vs;
  for (auto i : indices) vs.push_back(unit_vec(ambient_dim, i));
  return span(ambient_dim, vs);
}

Vec Subspace::coordinates(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vec coeffs(dim());
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    coeffs[i] = rest[pivots_[i]];
    if (sgn(coeffs[i]) != 0) axpy(rest, -coeffs[i], basis_.row(i));
  }
  if (!is_zero(rest)) throw MathRejection("vector is not in the subspace");
  return coeffs;
}

bool Subspace::contains(const Vec& v) const {
  if (v.size() != ambient_) throw DimensionError("vector does not live in the ambient space");
  Vec rest = v;
  for (std::size_t i = 0; i < dim(); ++i) {
    Rat c = rest[pivots_[i]];
    if (sgn(c) != 0) axpy(rest, -c, basis_.row(i));
  }
  return is_zero(rest);
}

Subspace kernel_basis(const Mat& m) {
  const std::size_t n = m.cols();
  auto r = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v = unit_vec(n, f);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) v[r.pivots[i]] = -r.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace column_space(const Mat& m) { return Subspace::row_space(m.transpose()); }

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace ambient dimensions differ");
  return Subspace::row_space(vstack(a.basis(), b.basis()));
}

Subspace annihilator(const Subspace& s) { return kernel_basis(s.basis()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw DimensionError("subspace ambient dimensions differ");
  // a ∩ b = ann(ann(a) + ann(b))
  Mat constraints = vstack(annihilator(a).basis(), annihilator(b).basis());
  if (constraints.rows() == 0) return Subspace::full(a.ambient_dim());
  return kernel_basis(constraints);
}

bool solve(const Mat& m, const Vec& b, Vec& x) {
  if (b.size() != m.rows()) throw DimensionError("right-hand side length mismatch");
  Mat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  auto red = rref(aug);
  if (!red.pivots.empty() && red.pivots.back() == m.cols()) return false;
  x = zero_vec(m.cols());
  for (std::size_t i = 0; i < red.pivots.size(); ++i) x[red.pivots[i]] = red.reduced(i, m.cols());
  return true;
}

} // namespace plie
