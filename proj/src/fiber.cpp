#include "plie/fiber.hpp"

#include <string>
#include <utility>

namespace plie {

PointActionData::PointActionData(Mat sigma, Mat pi_sharp) : sigma_(std::move(sigma)), pi_sharp_(std::move(pi_sharp)) {
  if (pi_sharp_.rows() != sigma_.rows() || pi_sharp_.cols() != sigma_.rows())
    throw DimensionError("pi_sharp must be p_dim × p_dim with p_dim = rows of sigma");
  for (std::size_t i = 0; i < pi_sharp_.rows(); ++i)
    for (std::size_t j = i; j < pi_sharp_.cols(); ++j)
      if (pi_sharp_(i, j) != -pi_sharp_(j, i))
        throw InputError("pi_sharp is not skew at (" + std::to_string(i) + ", " + std::to_string(j) + ")");
}

FiberResult anchor_kernel(const PointActionData& d) {
  FiberResult r;
  r.lp = kernel_basis(hstack(d.sigma(), d.pi_sharp()));
  r.dim_gp = d.g_dim() - rank(d.sigma());
  r.dim_tp = d.p_dim() - rank(d.pi_sharp());
  r.dim_overlap = intersect(column_space(d.sigma()), column_space(d.pi_sharp())).dim();
  return r;
}

namespace {

std::pair<Vec, Vec> split(const PointActionData& d, const Vec& u) {
  if (u.size() != d.g_dim() + d.p_dim()) throw DimensionError("vector is not in g ⊕ T*_pP");
  return {Vec(u.begin(), u.begin() + d.g_dim()), Vec(u.begin() + d.g_dim(), u.end())};
}

} // namespace

Rat point_pairing(const PointActionData& d, const Vec& u, const Vec& v) {
  auto [x, alpha] = split(d, u);
  auto [y, beta] = split(d, v);
  return dot(beta, d.sigma().apply(x)) + dot(alpha, d.sigma().apply(y));
}

bool isotropy_check(const PointActionData& d, const Subspace& lp) {
  if (lp.ambient_dim() != d.g_dim() + d.p_dim()) throw DimensionError("lp is not in g ⊕ T*_pP");
  const auto basis = lp.basis_vectors();
  for (std::size_t a = 0; a < basis.size(); ++a)
    for (std::size_t b = a; b < basis.size(); ++b)
      if (sgn(point_pairing(d, basis[a], basis[b])) != 0) return false;
  return true;
}

Vec phi_map(const PointActionData& d, const Vec& u) {
  auto [x, alpha] = split(d, u);
  Vec out = std::move(x);
  for (auto& c : d.sigma().transpose().apply(alpha)) out.push_back(std::move(c));
  return out;
}

Subspace phi_embed(const PointActionData& d, const Subspace& lp) {
  if (lp.ambient_dim() != d.g_dim() + d.p_dim()) throw DimensionError("lp is not in g ⊕ T*_pP");
  std::vector<Vec> rows;
  for (const auto& u : lp.basis_vectors()) rows.push_back(phi_map(d, u));
  return Subspace::span(2 * d.g_dim(), rows);
}

} // namespace plie
