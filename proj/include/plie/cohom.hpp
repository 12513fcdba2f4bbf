#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "plie/liealg.hpp"
#include "plie/matched.hpp"

namespace plie {

/// Sparse vector: (index, value) pairs, indices strictly increasing, no zeros.
using SparseVec = std::vector<std::pair<std::size_t, Rat>>;

/// Column-stored sparse matrix; column j is the image of the j-th basis vector.
class SparseMatrix {
public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), columns_(cols) {}

  static SparseMatrix from_dense(const Mat& m);
  static SparseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const SparseVec& column(std::size_t j) const { return columns_[j]; }
  /// Replaces column j; entries are sorted, merged and zeros dropped.
  void set_column(std::size_t j, SparseVec v);

  SparseVec apply(const SparseVec& v) const;
  Vec apply(const Vec& v) const;
  Mat to_dense() const;
  bool is_zero() const;
  bool is_diagonal() const;
  std::size_t nonzeros() const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<SparseVec> columns_;
};

/// Sorts by index, sums duplicates and drops zeros.
SparseVec normalize(SparseVec v);
SparseVec to_sparse(const Vec& v);
Vec to_dense(const SparseVec& v, std::size_t n);

/// Rank of a family of sparse vectors.
std::size_t sparse_rank(const std::vector<SparseVec>& vectors);
std::size_t rank(const SparseMatrix& m);

/// Basis of {v : m v = 0}. Each basis vector has a distinguished free
/// coordinate where it is 1 and every other basis vector is 0; those
/// coordinates are returned in `free`.
struct SparseKernel {
  std::vector<SparseVec> basis;
  std::vector<std::size_t> free;
};
SparseKernel sparse_kernel(const std::vector<SparseMatrix>& stacked, std::size_t cols);

/// Wedge monomials of {0..n-1} as bitmasks, lexicographic in each degree.
class ExteriorBasis {
public:
  explicit ExteriorBasis(std::size_t n);

  std::size_t generators() const { return n_; }
  std::size_t top_degree() const { return n_; }
  std::size_t size(std::size_t degree) const { return masks_[degree].size(); }
  std::uint64_t mask(std::size_t degree, std::size_t index) const { return masks_[degree][index]; }
  /// Index of a monomial within its degree; throws InputError for unknown masks.
  std::size_t index_of(std::uint64_t mask) const;
  /// Sorted generator indices of a monomial.
  static std::vector<std::size_t> indices(std::uint64_t mask);
  static std::uint64_t mask_of(const std::vector<std::size_t>& indices);
  /// "x*^y*" from generator names.
  std::string label(std::uint64_t mask, const std::vector<std::string>& names) const;

private:
  std::size_t n_;
  std::vector<std::vector<std::uint64_t>> masks_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Graded space with differentials d_k: C^k -> C^{k+1}; d² = 0 is checked
/// at construction (throws MathRejection naming the degree).
class CochainComplex {
public:
  CochainComplex() = default;
  CochainComplex(std::vector<std::size_t> dims, std::vector<SparseMatrix> diffs,
                 std::vector<std::vector<std::string>> labels = {});

  std::size_t top_degree() const { return dims_.empty() ? 0 : dims_.size() - 1; }
  std::size_t dim(std::size_t k) const { return dims_[k]; }
  const std::vector<std::size_t>& dims() const { return dims_; }
  /// d_k, defined for k < top_degree().
  const SparseMatrix& diff(std::size_t k) const { return diffs_[k]; }
  const std::vector<std::vector<std::string>>& labels() const { return labels_; }

private:
  std::vector<std::size_t> dims_;
  std::vector<SparseMatrix> diffs_;
  std::vector<std::vector<std::string>> labels_;
};

/// dim H^k = dim ker d_k - rank d_{k-1}.
std::vector<std::size_t> cohomology_dims(const CochainComplex& c);

/// Module over a Lie algebra: rho[i] is the action of the i-th basis vector.
struct Representation {
  LieAlgebra algebra;
  std::size_t space_dim = 0;
  std::vector<Mat> rho;

  /// Throws DimensionError on shapes, ConditionFailure(invalid_representation)
  /// naming the first basis pair where rho([x,y]) != [rho x, rho y].
  void validate() const;

  static Representation trivial(const LieAlgebra& g);
  static Representation adjoint(const LieAlgebra& g);
  static Representation coadjoint(const LieAlgebra& g);
};

/// C^k = Λ^k g* ⊗ M with basis (monomial, module index), monomial-major.
CochainComplex ce_complex(const LieAlgebra& g);
CochainComplex ce_complex(const LieAlgebra& g, const Representation& m);

/// Extends an operator T on V* (column j = T ε^j) to a derivation of ΛV*;
/// one sparse matrix per degree 0..dim V.
std::vector<SparseMatrix> derivation_on_exterior(const Mat& t, const ExteriorBasis& basis);

/// Action of x on the cochains of ce_complex(g, m):
/// (x·f)(y_1..y_k) = ρ(x) f(y_1..y_k) - Σ f(.., [x, y_i], ..).
std::vector<SparseMatrix> cochain_action(const LieAlgebra& g, const Representation& m, const Vec& x);

/// Subcomplex together with its inclusion: inclusion[k] has one column per
/// basis vector of complex degree k, in the ambient coordinates.
struct InvariantSubcomplex {
  CochainComplex complex;
  std::vector<SparseMatrix> inclusion;
};

/// Simultaneous kernel of actions[k][a] in each degree k, with the restricted
/// differential. Throws ConditionFailure(not_invariant) naming the degree if a
/// differential leaves the invariant subspace.
InvariantSubcomplex invariant_subcomplex(const CochainComplex& c,
                                         const std::vector<std::vector<SparseMatrix>>& actions);

/// Keeps the listed coordinates in each degree. Throws
/// ConditionFailure(not_invariant) if a differential leaves the selection.
InvariantSubcomplex coordinate_subcomplex(const CochainComplex& c, const std::vector<std::vector<std::size_t>>& keep);

/// Cohomology of the h-basic cochains of l (killed by interior products with
/// h and invariant under h). Throws ConditionFailure(h_not_subalgebra).
std::vector<std::size_t> relative_cohomology(const LieAlgebra& l, const Subspace& h);
InvariantSubcomplex relative_complex(const LieAlgebra& l, const Subspace& h);

/// ((Λn*)^h, d_n) for a matched pair, with h acting through act_h_on_n.
InvariantSubcomplex n_side_invariant_complex(const MatchedPair& mp);

} // namespace plie
