#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plie/exactlin.hpp"

namespace plie {

struct JacobiWitness {
  std::size_t i, j, k;
  Vec residual; // [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

struct JacobiReport {
  bool ok = true;
  std::vector<JacobiWitness> witnesses;
};

/// One nonzero bracket entry [e_i, e_j] = coeffs; the pair (j, i) is implied.
struct BracketEntry {
  std::size_t i, j;
  Vec coeffs;
};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Construction only enforces antisymmetry; the Jacobi identity is checked by
/// validate_jacobi, and `trusted()` records whether that check has passed.
class LieAlgebra {
public:
  LieAlgebra() = default;

  /// Builds from the upper-triangular entries; omitted pairs are zero.
  /// Throws InputError on out-of-range indices, i == j with nonzero bracket,
  /// duplicated pairs, or coefficient vectors of the wrong length.
  LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& brackets);

  static LieAlgebra abelian(std::size_t dim);
  /// Full table c[i*dim + j] = [e_i, e_j]; antisymmetry is verified.
  static LieAlgebra from_table(std::vector<std::string> basis_names, std::vector<Vec> table);

  std::size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const Vec& bracket_basis(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  const Rat& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[i * dim() + j][k]; }

  Vec bracket(const Vec& x, const Vec& y) const;
  /// Matrix of ad_x: column i is [x, e_i].
  Mat ad(const Vec& x) const;

  bool trusted() const { return trusted_; }
  /// Copy marked trusted; throws JacobiFailure if the identity fails.
  LieAlgebra validated() const;

  /// Nonzero upper-triangular entries in (i, j) order.
  std::vector<BracketEntry> nonzero_brackets() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_ == b.names_ && a.table_ == b.table_;
  }

private:
  friend LieAlgebra restrict_to(const LieAlgebra&, const std::vector<Vec>&, std::vector<std::string>);

  std::vector<std::string> names_;
  std::vector<Vec> table_;
  bool trusted_ = false;
};

class JacobiFailure : public MathRejection {
public:
  explicit JacobiFailure(JacobiReport report, const std::string& what = "Jacobi identity fails");
  const JacobiReport& report() const { return report_; }

private:
  JacobiReport report_;
};

Vec bracket_of(const LieAlgebra& g, const Vec& x, const Vec& y);

/// Checks Jacobi on every basis triple i < j < k (the cyclic sum is
/// alternating, so this covers all triples).
JacobiReport validate_jacobi(const LieAlgebra& g);

/// ad*_x xi, defined by <ad*_x xi, y> = -<xi, [x, y]>.
Vec coadjoint(const LieAlgebra& g, const Vec& x, const Vec& xi);

bool is_subalgebra(const LieAlgebra& g, const Subspace& s);

/// The Lie algebra carried by a subalgebra, in the coordinates of `basis`
/// (rows must be independent and span a subalgebra). Throws MathRejection
/// if the span is not closed. Trust is inherited from g.
LieAlgebra restrict_to(const LieAlgebra& g, const std::vector<Vec>& basis,
                       std::vector<std::string> names);

/// Same algebra in the basis given by the rows of `change` (invertible).
LieAlgebra change_basis(const LieAlgebra& g, const Mat& change, std::vector<std::string> names);

/// sl2 with basis (e, h, f): [h,e]=2e, [h,f]=-2f, [e,f]=h.
LieAlgebra sl2();

} // namespace plie
