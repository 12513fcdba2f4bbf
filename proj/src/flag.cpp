#include "plie/flag.hpp"

#include <algorithm>
#include <map>

namespace plie {

namespace {

Root sum_roots(const RootSystem& rs, const std::vector<std::size_t>& indices) {
  Root out(rs.rank, 0);
  for (auto k : indices)
    for (std::size_t i = 0; i < rs.rank; ++i) out[i] += rs.positive_roots[k][i];
  return out;
}

Root negated(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

Root monomial_weight(const std::vector<Root>& weights, std::uint64_t mask, std::size_t rank) {
  Root out(rank, 0);
  for (auto j : ExteriorBasis::indices(mask))
    for (std::size_t i = 0; i < rank; ++i) out[i] += weights[j][i];
  return out;
}

bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

// Subalgebra spanned by the listed Chevalley basis vectors, in that order.
LieAlgebra coordinate_restriction(const LieAlgebra& g, const std::vector<std::size_t>& idx) {
  std::vector<Vec> rows;
  std::vector<std::string> names;
  for (auto i : idx) {
    rows.push_back(unit_vec(g.dim(), i));
    names.push_back(g.basis_names()[i]);
  }
  return restrict_to(g, rows, std::move(names));
}

// Position of an ambient coordinate among the columns of a coordinate inclusion.
long inclusion_position(const SparseMatrix& inclusion, std::size_t ambient) {
  for (std::size_t j = 0; j < inclusion.cols(); ++j) {
    const auto& c = inclusion.column(j);
    if (c.size() == 1 && c.front().first == ambient) return static_cast<long>(j);
  }
  return -1;
}

} // namespace

FlagComplex flag_complex(const RootSystem& rs) {
  FlagComplex fc;
  fc.chevalley = chevalley_algebra(rs);
  const auto& ch = fc.chevalley;
  const std::size_t np = ch.positive_count();

  // n ⊕ n₋ with vanishing cross brackets
  const LieAlgebra n = coordinate_restriction(ch.g, [&] {
    std::vector<std::size_t> v;
    for (std::size_t k = 0; k < np; ++k) v.push_back(ch.e_index(k));
    return v;
  }());
  const LieAlgebra nm = coordinate_restriction(ch.g, [&] {
    std::vector<std::size_t> v;
    for (std::size_t k = 0; k < np; ++k) v.push_back(ch.f_index(k));
    return v;
  }());
  std::vector<BracketEntry> entries;
  for (const auto& e : n.nonzero_brackets()) {
    Vec c = e.coeffs;
    c.resize(2 * np);
    entries.push_back({e.i, e.j, std::move(c)});
  }
  for (const auto& e : nm.nonzero_brackets()) {
    Vec c = zero_vec(np);
    c.insert(c.end(), e.coeffs.begin(), e.coeffs.end());
    entries.push_back({np + e.i, np + e.j, std::move(c)});
  }
  std::vector<std::string> names = n.basis_names();
  names.insert(names.end(), nm.basis_names().begin(), nm.basis_names().end());
  fc.m = LieAlgebra(std::move(names), entries).validated();

  for (std::size_t k = 0; k < np; ++k) fc.weights.push_back(negated(rs.positive_roots[k]));
  for (std::size_t k = 0; k < np; ++k) fc.weights.push_back(rs.positive_roots[k]);

  fc.full = ce_complex(fc.m);
  // H_i acts on ε^j by <weight_j, α_i^∨>
  const ExteriorBasis basis(fc.m.dim());
  std::vector<std::vector<SparseMatrix>> actions(basis.top_degree() + 1);
  for (std::size_t i = 0; i < rs.rank; ++i) {
    Mat t(fc.m.dim(), fc.m.dim());
    for (std::size_t j = 0; j < fc.m.dim(); ++j) t(j, j) = rs.coroot_pairing(fc.weights[j], i);
    auto der = derivation_on_exterior(t, basis);
    for (std::size_t k = 0; k <= basis.top_degree(); ++k) actions[k].push_back(std::move(der[k]));
  }
  fc.invariant = invariant_subcomplex(fc.full, actions);
  return fc;
}

FlagCohomologyTable flag_cohomology(const FlagComplex& fc) {
  FlagCohomologyTable t;
  t.type_name = fc.chevalley.roots.type_name;
  t.dims = cohomology_dims(fc.invariant.complex);
  for (auto d : t.dims) t.total += d;
  return t;
}

FlagCohomologyTable flag_cohomology(const RootSystem& rs) { return flag_cohomology(flag_complex(rs)); }

KostantReport kostant_check(const RootSystem& rs) {
  KostantReport rep;
  rep.type_name = rs.type_name;
  const std::size_t np = rs.positive_roots.size();
  const ChevalleyAlgebra ch = chevalley_algebra(rs);
  std::vector<std::size_t> e_idx;
  for (std::size_t k = 0; k < np; ++k) e_idx.push_back(ch.e_index(k));
  const LieAlgebra n = coordinate_restriction(ch.g, e_idx);
  const CochainComplex c = ce_complex(n);

  // the differential preserves h-weight, so H(n) splits by weight
  std::vector<Root> gen_weights;
  for (std::size_t k = 0; k < np; ++k) gen_weights.push_back(negated(rs.positive_roots[k]));
  const ExteriorBasis basis(np);
  std::map<Root, std::vector<std::vector<std::size_t>>> by_weight;
  for (std::size_t k = 0; k <= np; ++k)
    for (std::size_t s = 0; s < basis.size(k); ++s) {
      auto& keep = by_weight[monomial_weight(gen_weights, basis.mask(k, s), rs.rank)];
      keep.resize(np + 1);
      keep[k].push_back(s);
    }
  rep.nilradical_dims.assign(np + 1, 0);
  for (const auto& [weight, keep] : by_weight) {
    const auto dims = cohomology_dims(coordinate_subcomplex(c, keep).complex);
    for (std::size_t k = 0; k <= np; ++k) {
      rep.nilradical_dims[k] += dims[k];
      for (std::size_t copy = 0; copy < dims[k]; ++copy) rep.classes.push_back({k, weight, 0});
    }
  }

  const auto weyl = weyl_enumerate(rs);
  rep.length_histogram = length_histogram(weyl, np);
  rep.dims_match = rep.nilradical_dims == rep.length_histogram;

  std::vector<std::size_t> used(weyl.size(), 0);
  rep.weights_match = rep.classes.size() == weyl.size();
  for (auto& cl : rep.classes) {
    std::size_t hits = 0;
    for (std::size_t w = 0; w < weyl.size(); ++w)
      if (weyl[w].length == cl.degree && negated(sum_roots(rs, weyl[w].inversion_set)) == cl.weight) {
        cl.weyl_index = w;
        ++hits;
      }
    if (hits != 1) rep.weights_match = false;
    else used[cl.weyl_index]++;
  }
  for (auto u : used)
    if (u != 1) rep.weights_match = false;

  std::vector<Root> ws;
  for (const auto& cl : rep.classes) ws.push_back(cl.weight);
  std::sort(ws.begin(), ws.end());
  rep.weights_distinct = std::adjacent_find(ws.begin(), ws.end()) == ws.end();
  std::sort(rep.classes.begin(), rep.classes.end(), [](const KostantClass& a, const KostantClass& b) {
    return a.degree != b.degree ? a.degree < b.degree : a.weight < b.weight;
  });
  return rep;
}

KostantRepresentative kostant_representative(const FlagComplex& fc, const WeylElement& w) {
  const std::size_t np = fc.chevalley.positive_count();
  KostantRepresentative out;
  for (auto k : w.inversion_set) out.generators.push_back(k);
  for (auto k : w.inversion_set) out.generators.push_back(np + k);
  std::sort(out.generators.begin(), out.generators.end());
  out.degree = out.generators.size();

  const ExteriorBasis basis(fc.m.dim());
  const std::uint64_t mask = ExteriorBasis::mask_of(out.generators);
  out.label = basis.label(mask, fc.m.basis_names());
  out.weight_zero = is_zero_root(monomial_weight(fc.weights, mask, fc.chevalley.roots.rank));

  const std::size_t ambient = basis.index_of(mask);
  out.closed = out.degree == fc.full.top_degree() || fc.full.diff(out.degree).column(ambient).empty();

  const long pos = inclusion_position(fc.invariant.inclusion[out.degree], ambient);
  if (pos < 0 || !out.closed) return out;
  if (out.degree == 0) {
    out.non_exact = true;
    return out;
  }
  const SparseMatrix& d = fc.invariant.complex.diff(out.degree - 1);
  std::vector<SparseVec> image;
  for (std::size_t j = 0; j < d.cols(); ++j) image.push_back(d.column(j));
  const std::size_t r = sparse_rank(image);
  image.push_back({{static_cast<std::size_t>(pos), Rat(1)}});
  out.non_exact = sparse_rank(image) > r;
  return out;
}

std::vector<std::size_t> representative_class_ranks(const FlagComplex& fc, const std::vector<WeylElement>& ws) {
  const auto& inv = fc.invariant;
  const std::size_t top = inv.complex.top_degree();
  std::vector<std::vector<SparseVec>> reps(top + 1);
  const ExteriorBasis basis(fc.m.dim());
  for (const auto& w : ws) {
    const auto r = kostant_representative(fc, w);
    const long pos = inclusion_position(inv.inclusion[r.degree], basis.index_of(ExteriorBasis::mask_of(r.generators)));
    if (pos >= 0) reps[r.degree].push_back({{static_cast<std::size_t>(pos), Rat(1)}});
  }
  std::vector<std::size_t> out(top + 1, 0);
  for (std::size_t k = 0; k <= top; ++k) {
    std::vector<SparseVec> vs;
    if (k > 0)
      for (std::size_t j = 0; j < inv.complex.diff(k - 1).cols(); ++j) vs.push_back(inv.complex.diff(k - 1).column(j));
    const std::size_t base = sparse_rank(vs);
    vs.insert(vs.end(), reps[k].begin(), reps[k].end());
    out[k] = sparse_rank(vs) - base;
  }
  return out;
}

std::vector<BruhatLeaf> bruhat_leaves(const RootSystem& rs) {
  std::vector<BruhatLeaf> out;
  const auto ws = weyl_enumerate(rs);
  for (std::size_t i = 0; i < ws.size(); ++i) out.push_back({i, ws[i].length, 2 * ws[i].length});
  return out;
}

LieBialgebra standard_bialgebra(const ChevalleyAlgebra& c) {
  const std::size_t dim = c.g.dim();
  Vec r = zero_vec(wedge2_dim(dim));
  for (std::size_t k = 0; k < c.positive_count(); ++k) {
    const Root& beta = c.roots.positive_roots[k];
    r[wedge2_index(dim, c.e_index(k), c.f_index(k))] = c.roots.form(beta, beta) / 2;
  }
  return make_coboundary(c.g, r);
}

} // namespace plie
