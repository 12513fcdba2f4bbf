#pragma once

#include <cstddef>

#include "plie/exactlin.hpp"

namespace plie {

/// Linear data of a Poisson action at one point p of P.
///
/// sigma is p_dim × g_dim with column j the tangent vector of e_j at p;
/// pi_sharp is the p_dim × p_dim matrix of π#(p): T*_pP → T_pP in dual
/// coordinates, so it must be skew.
class PointActionData {
public:
  /// Throws DimensionError on shape mismatch and InputError if pi_sharp is not skew.
  PointActionData(Mat sigma, Mat pi_sharp);

  std::size_t g_dim() const { return sigma_.cols(); }
  std::size_t p_dim() const { return sigma_.rows(); }
  const Mat& sigma() const { return sigma_; }
  const Mat& pi_sharp() const { return pi_sharp_; }

private:
  Mat sigma_;
  Mat pi_sharp_;
};

/// Kernel of the anchor (x, α) ↦ -σx - π#α inside g ⊕ T*_pP, with the
/// decomposition dim lp = dim_gp + dim_tp + dim_overlap.
struct FiberResult {
  Subspace lp;
  std::size_t dim_gp = 0;      // dim ker sigma
  std::size_t dim_tp = 0;      // dim ker pi_sharp
  std::size_t dim_overlap = 0; // dim (image sigma ∩ image pi_sharp)
};

FiberResult anchor_kernel(const PointActionData& d);

/// <(x,α), (y,β)>_p = β(σx) + α(σy).
Rat point_pairing(const PointActionData& d, const Vec& u, const Vec& v);

/// Whether point_pairing vanishes on lp × lp.
bool isotropy_check(const PointActionData& d, const Subspace& lp);

/// (x, α) ↦ (x, σᵀα) in g ⊕ g*.
Vec phi_map(const PointActionData& d, const Vec& u);

/// Image of lp under phi_map, as a subspace of the 2·g_dim space g ⊕ g*.
Subspace phi_embed(const PointActionData& d, const Subspace& lp);

} // namespace plie
