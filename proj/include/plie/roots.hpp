#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "plie/liealg.hpp"

namespace plie {

/// Integer vector in the basis of simple roots.
using Root = std::vector<long>;
using IntMatrix = std::vector<std::vector<long>>;

/// Cartan matrix convention: cartan[i][j] = <α_j, α_i^∨>.
struct RootSystem {
  std::string type_name; // empty for matrices supplied directly
  std::size_t rank = 0;
  IntMatrix cartan;
  /// Sorted by height, then lexicographically.
  std::vector<Root> positive_roots;
  /// (α_i, α_i), scaled so the shortest simple root in each component has length 2.
  std::vector<Rat> simple_lengths;

  /// <β, α_i^∨>
  long coroot_pairing(const Root& beta, std::size_t i) const;
  /// Invariant form (β, γ).
  Rat form(const Root& beta, const Root& gamma) const;
  /// Position of a positive root, or -1.
  long index_of(const Root& beta) const;
  Root rho_doubled() const;
};

/// Built-in Cartan matrices for A1, A2, A3, B2, B3, C3, G2 (Bourbaki
/// numbering; G2 has α1 short). Throws InputError for unknown names.
IntMatrix cartan_matrix(const std::string& type_name);
std::vector<std::string> builtin_types();

/// Throws InputError for malformed matrices and MathRejection when the matrix
/// is not of finite type (root generation exceeds its cap).
RootSystem build_root_system(const IntMatrix& cartan, const std::string& type_name = "");
RootSystem build_root_system(const std::string& type_name);

/// Chevalley basis: positive root vectors E1..EN (order of positive_roots),
/// then H1..Hr, then negative root vectors F1..FN with F_k = e_{-β_k}.
struct ChevalleyAlgebra {
  RootSystem roots;
  LieAlgebra g;
  Subspace cartan_sub;
  Subspace nilradical;
  Subspace opposite;
  /// Weight of each basis vector in simple-root coordinates (0 for H_i).
  std::vector<Root> root_of_basis;

  std::size_t positive_count() const { return roots.positive_roots.size(); }
  std::size_t e_index(std::size_t k) const { return k; }
  std::size_t h_index(std::size_t i) const { return positive_count() + i; }
  std::size_t f_index(std::size_t k) const { return positive_count() + roots.rank + k; }
};

/// N_{α,β} = ±(p+1) with positive signs on extraspecial pairs; validated by
/// Jacobi (JacobiFailure would indicate an internal error).
ChevalleyAlgebra chevalley_algebra(const RootSystem& rs);

struct WeylElement {
  IntMatrix matrix;   // action on simple-root coordinates (column j = w α_j)
  IntMatrix inverse;
  std::size_t length = 0;
  std::vector<std::size_t> inversion_set; // indices into positive_roots, increasing

  Root apply(const Root& beta) const;
};

/// Breadth-first closure under left multiplication by simple reflections,
/// identity first. Throws MathRejection if the group exceeds its cap.
std::vector<WeylElement> weyl_enumerate(const RootSystem& rs);

/// {β > 0 : w⁻¹β < 0} as indices into positive_roots.
std::vector<std::size_t> inversion_set(const RootSystem& rs, const WeylElement& w);

/// histogram[k] = #{w : length(w) = k}, k = 0..|Δ⁺|.
std::vector<std::size_t> length_histogram(const std::vector<WeylElement>& w, std::size_t positive_count);

} // namespace plie
