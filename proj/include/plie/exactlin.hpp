#pragma once

// Exact rational linear algebra. Everything downstream (brackets, kernels,
// cohomology ranks) runs over Q with arbitrary precision.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "plie/errors.hpp"

namespace plie {

using Rat = mpq_class;
using Vec = std::vector<Rat>;

/// Canonical rational num/den. Throws InputError on a zero denominator.
Rat make_rat(long num, long den = 1);

/// Parses "7", "-3", "1/3", "-2/6" exactly. Throws InputError.
Rat parse_rat(std::string_view text);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rat& r);

Vec zero_vec(std::size_t n);
Vec unit_vec(std::size_t n, std::size_t i);
bool is_zero(const Vec& v);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rat& s, const Vec& v);
/// a += s * b
void axpy(Vec& a, const Rat& s, const Vec& b);
Rat dot(const Vec& a, const Vec& b);

/// Dense row-major rational matrix.
class Mat {
public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(std::size_t n);
  static Mat from_rows(std::size_t cols, const std::vector<Vec>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec row(std::size_t r) const;
  Vec col(std::size_t c) const;
  std::vector<Vec> row_vectors() const;

  Mat transpose() const;
  Vec apply(const Vec& v) const;
  bool is_zero() const;

  friend Mat operator*(const Mat& a, const Mat& b);
  friend Mat operator+(const Mat& a, const Mat& b);
  friend Mat operator-(const Mat& a, const Mat& b);
  friend Mat operator*(const Rat& s, const Mat& a);
  friend bool operator==(const Mat& a, const Mat& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

/// Stacks a above b (equal column counts).
Mat vstack(const Mat& a, const Mat& b);
/// Places a left of b (equal row counts).
Mat hstack(const Mat& a, const Mat& b);

struct RrefResult {
  Mat reduced;                     // full RREF, zero rows at the bottom
  std::vector<std::size_t> pivots; // pivot column of each nonzero row
};

RrefResult rref(Mat m);
std::size_t rank(const Mat& m);

/// Inverse of a square matrix; throws MathRejection if singular.
Mat inverse(const Mat& m);

/// Finite-dimensional subspace of Q^n held as a canonical RREF basis.
class Subspace {
public:
  Subspace() = default;
  /// Span of the given vectors, canonicalized.
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& vectors);
  static Subspace row_space(const Mat& m);
  static Subspace zero(std::size_t ambient_dim);
  static Subspace full(std::size_t ambient_dim);
  /// Span of the coordinate vectors e_i for the listed indices.
  static Subspace coordinate(std::size_t ambient_dim, std::span<const std::size_t> indices);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const Mat& basis() const { return basis_; }
  Vec basis_vector(std::size_t i) const { return basis_.row(i); }
  std::vector<Vec> basis_vectors() const { return basis_.row_vectors(); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(const Vec& v) const;
  /// Coordinates of v in the canonical basis; throws MathRejection if v is outside.
  Vec coordinates(const Vec& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Right null space {v : m v = 0}.
Subspace kernel_basis(const Mat& m);
/// Column space of m as a subspace of Q^rows.
Subspace column_space(const Mat& m);
Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);
/// {f : f(v) = 0 for all v in s}, in dual coordinates.
Subspace annihilator(const Subspace& s);

/// Solves m x = b for some x; returns false if inconsistent.
bool solve(const Mat& m, const Vec& b, Vec& x);

} // namespace plie
