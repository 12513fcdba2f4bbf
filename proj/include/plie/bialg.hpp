#pragma once

#include <cstddef>
#include <vector>

#include "plie/exactlin.hpp"
#include "plie/liealg.hpp"

namespace plie {

// Second exterior power coordinates. The basis {e_j ^ e_k : j < k} is ordered
// lexicographically; every Λ² coefficient vector in the library uses it.

std::size_t wedge2_dim(std::size_t n);
std::size_t wedge2_index(std::size_t n, std::size_t j, std::size_t k);
/// (j, k) for a wedge2 index.
std::pair<std::size_t, std::size_t> wedge2_pair(std::size_t n, std::size_t index);
/// Coordinates of u ^ v.
Vec wedge2(const Vec& u, const Vec& v);
/// <u ^ v, xi ^ eta> = xi(u) eta(v) - xi(v) eta(u), extended bilinearly.
Rat wedge2_pairing(const Vec& a, const Vec& b, std::size_t n);
/// x ⌟ r for r in Λ²V*: the covector y ↦ r(x, y).
Vec contract(const Vec& x, const Vec& r, std::size_t n);
/// Skew matrix R with R(j,k) = r(e_j, e_k).
Mat wedge2_matrix(const Vec& r, std::size_t n);

/// A Lie algebra with a cocommutator. delta[i] holds δ(e_i) in Λ²g.
struct LieBialgebra {
  LieAlgebra g;
  std::vector<Vec> delta;

  std::size_t dim() const { return g.dim(); }
  /// δ(x) by linearity.
  Vec cocommutator(const Vec& x) const;
};

/// Shape check: one Λ² vector of the right length per basis element.
void check_shape(const LieBialgebra& b);

/// d = g ⊕ g* with the hyperbolic pairing. Basis: g's basis, then the dual basis.
struct DoubleLieAlgebra {
  LieAlgebra d;
  Subspace g_part;
  Subspace gstar_part;
  Mat pairing;

  std::size_t half_dim() const { return g_part.dim(); }
  Rat pair(const Vec& a, const Vec& b) const { return dot(a, pairing.apply(b)); }
};

/// Bracket on g* dual to δ: ([xi, eta], x) = (δ(x), xi ^ eta).
/// The result is not validated; run validate_jacobi if needed.
LieAlgebra dual_algebra(const LieBialgebra& b);

/// (g*, δ*) where δ* is the transpose of g's bracket.
LieBialgebra dual_bialgebra(const LieBialgebra& b);

/// ad*_xi x in g, defined by <ad*_xi x, eta> = -<x, [xi, eta]>.
Vec dual_coadjoint(const LieAlgebra& dual, const Vec& xi, const Vec& x);

/// The double bracket assembled without any Jacobi check.
DoubleLieAlgebra assemble_double(const LieBialgebra& b);

/// Assembled double, validated. Throws JacobiFailure carrying the witnesses
/// (indices in the 2n-dimensional basis) if (g, δ) is not a Lie bialgebra.
DoubleLieAlgebra build_double(const LieBialgebra& b);

/// Report whose `ok` agrees with "the double satisfies Jacobi".
///
/// Witnesses use double indices (g: 0..n-1, g*: n..2n-1): failures of Jacobi
/// on g, failures on the dual bracket, and triples (x_i, x_j, xi_k) where
///   ad*_xi [x,y] = [ad*_xi x, y] + [x, ad*_xi y] + ad*_{ad*_y xi} x - ad*_{ad*_x xi} y
/// does not hold (the residual is stored in the g coordinates of the double).
JacobiReport check_compatibility(const LieBialgebra& b);

/// Only the mixed identity above, without the Jacobi checks on g and g*.
JacobiReport check_mixed_identity(const LieBialgebra& b);

bool is_isotropic(const DoubleLieAlgebra& d, const Subspace& s);

/// a, b subalgebras, isotropic, a ∩ b = 0 and dim a + dim b = dim d.
bool check_manin_triple(const DoubleLieAlgebra& d, const Subspace& a, const Subspace& b);

/// {x - x⌟r : x in g} inside d, for r in Λ²g*.
Subspace lagrangian_graph(const DoubleLieAlgebra& d, const Vec& r);

/// δ(x) = ad_x r = (ad_x ⊗ 1 + 1 ⊗ ad_x) r for r in Λ²g. Not validated.
LieBialgebra make_coboundary(const LieAlgebra& g, const Vec& r);

/// sl2 with δ(e) = e^h, δ(h) = 0, δ(f) = f^h; the coboundary of r = e^f.
LieBialgebra standard_sl2_bialgebra();

} // namespace plie
