#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plie/bialg.hpp"
#include "plie/cohom.hpp"
#include "plie/roots.hpp"

namespace plie {

struct FlagCohomologyTable {
  std::string type_name;
  std::vector<std::size_t> dims; // degrees 0..2|Δ⁺|
  std::size_t total = 0;
};

/// Weight-zero part of Λ(n ⊕ n₋)* with the CE differential of the direct sum.
///
/// m has basis E1..EN then F1..FN (the root vectors of the Chevalley basis);
/// `weights` holds the h-weight of each cochain generator ε^j, i.e. minus
/// the root of the j-th basis vector.
struct FlagComplex {
  ChevalleyAlgebra chevalley;
  LieAlgebra m;
  std::vector<Root> weights;
  CochainComplex full;
  InvariantSubcomplex invariant;
};

FlagComplex flag_complex(const RootSystem& rs);

FlagCohomologyTable flag_cohomology(const RootSystem& rs);
FlagCohomologyTable flag_cohomology(const FlagComplex& fc);

/// One Kostant class of H(n): degree, h-weight of the class, and the Weyl
/// element (index into weyl_enumerate) it is matched to.
struct KostantClass {
  std::size_t degree = 0;
  Root weight;
  std::size_t weyl_index = 0;
};

struct KostantReport {
  std::string type_name;
  std::vector<std::size_t> nilradical_dims;  // dim H^k(n)
  std::vector<std::size_t> length_histogram; // #{w : l(w) = k}
  std::vector<KostantClass> classes;
  bool dims_match = false;
  bool weights_match = false;   // every class weight is -Σ inv(w) for a unique w with l(w) = degree
  bool weights_distinct = false;
  bool ok() const { return dims_match && weights_match && weights_distinct; }
};

/// H(n) split by h-weight and compared with the Weyl group.
KostantReport kostant_check(const RootSystem& rs);

struct KostantRepresentative {
  std::vector<std::size_t> generators; // indices into the m basis, increasing
  std::size_t degree = 0;
  std::string label;
  bool weight_zero = false;
  bool closed = false;
  bool non_exact = false;
};

/// ∧_{β ∈ inv(w)} (e_β* ∧ f_β*) in the flag complex.
KostantRepresentative kostant_representative(const FlagComplex& fc, const WeylElement& w);

/// Rank of the span of the given representatives' classes in each degree.
std::vector<std::size_t> representative_class_ranks(const FlagComplex& fc, const std::vector<WeylElement>& ws);

struct BruhatLeaf {
  std::size_t weyl_index = 0;
  std::size_t length = 0;
  std::size_t leaf_dim = 0;
};

/// One symplectic leaf (Bruhat cell) per Weyl element, of dimension 2 l(w).
std::vector<BruhatLeaf> bruhat_leaves(const RootSystem& rs);

/// Coboundary bialgebra of r = Σ_{α>0} (α,α)/2 · E_α ∧ F_α.
LieBialgebra standard_bialgebra(const ChevalleyAlgebra& c);

} // namespace plie
