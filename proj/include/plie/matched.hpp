#pragma once

#include <vector>

#include "plie/bialg.hpp"

namespace plie {

/// l = h ⊕ n split into two subalgebras with mutual actions
///   [x, ξ] = -(ξ·x) + (x·ξ),   x in h, ξ in n.
///
/// Coordinates on h and n are those of their canonical (RREF) bases.
/// act_h_on_n[i] is the dim n × dim n matrix of ξ ↦ h_i·ξ;
/// act_n_on_h[a] is the dim h × dim h matrix of x ↦ n_a·x.
struct MatchedPair {
  LieAlgebra l;
  Subspace h;
  Subspace n;
  LieAlgebra h_algebra;
  LieAlgebra n_algebra;
  std::vector<Mat> act_h_on_n;
  std::vector<Mat> act_n_on_h;
};

/// Throws ConditionFailure (not_direct, h_not_subalgebra, n_not_subalgebra).
MatchedPair split_matched_pair(const LieAlgebra& l, const Subspace& h, const Subspace& n);

/// The bracket rebuilt from (h_algebra, n_algebra, actions) in the basis
/// "h basis, then n basis".
LieAlgebra reassemble(const MatchedPair& mp);

/// l written in the same basis as reassemble(mp), straight from l's bracket.
LieAlgebra in_split_basis(const MatchedPair& mp);

/// h + h^⊥ inside the double of b, as a subspace of g ⊕ g*.
Subspace coisotropic_subspace(const LieBialgebra& b, const Subspace& h);

/// Matched pair carried by h + h^⊥ ⊂ d. The algebra l has basis h's
/// canonical basis followed by h^⊥'s canonical basis (in g* coordinates).
/// Throws ConditionFailure (h_not_subalgebra, not_coisotropic) and
/// JacobiFailure when b is not a Lie bialgebra.
MatchedPair coisotropic_double(const LieBialgebra& b, const Subspace& h);

/// Fiber algebra at a point where the Poisson bivector vanishes.
///
/// sigma: p × n matrix of the infinitesimal action at the point. The
/// stabilizer g_p = ker sigma is taken in its canonical basis, and
/// gp_action[i] is the p × p matrix by which its i-th basis vector acts on
/// T*_pP. t_bracket is the transversal Lie algebra on T*_pP. The result has
/// basis (g_p basis, then the p coordinate covectors) and bracket
///   [(x,α),(y,β)] = ([x,y] + ad*_{φα} y - ad*_{φβ} x, [α,β] + x·β - y·α)
/// with φ(α) = sigmaᵀ α.
///
/// Throws DimensionError on shape mismatches, ConditionFailure
/// (stabilizer_not_closed, coadjoint_leaves_stabilizer) and JacobiFailure
/// for t_bracket or the assembled algebra.
LieAlgebra lp_at_vanishing_point(const LieBialgebra& b, const Mat& sigma, const LieAlgebra& t_bracket,
                                 const std::vector<Mat>& gp_action);

} // namespace plie
