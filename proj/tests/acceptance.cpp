// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.
// Usage: plie_acceptance [path-to-plie-cli]

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "algebra_zoo.hpp"
#include "plie/io.hpp"
#include "test_support.hpp"

using namespace plie;
using plie::testing::RatGen;

namespace {

using Sizes = std::vector<std::size_t>;

const std::vector<std::string> kTypes{"A1", "A2", "B2", "G2", "A3"};

// Even-degree entries expected for each type.
const std::map<std::string, Sizes> kEven{{"A1", {1, 1}},
                                         {"A2", {1, 2, 2, 1}},
                                         {"B2", {1, 2, 2, 2, 1}},
                                         {"G2", {1, 2, 2, 2, 2, 2, 1}},
                                         {"A3", {1, 3, 5, 6, 5, 3, 1}}};

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

std::string join(const Sizes& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string run_command(const std::string& cmd, int& status) {
  std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
  std::string out;
  if (!pipe) {
    status = -1;
    return out;
  }
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe.get())) out.append(buf, n);
  status = pclose(pipe.release());
  return out;
}

Outcome flag_tables(const std::string& cli) {
  Outcome o;
  for (const auto& t : kTypes) {
    FlagCohomologyTable table;
    if (!cli.empty()) {
      int status = 0;
      const std::string out = run_command("\"" + cli + "\" flag --json --type " + t, status);
      o.require(status == 0, t + ": CLI exit status " + std::to_string(status));
      if (status != 0) continue;
      table = io::flag_from_json(io::parse_text(out));
    } else {
      table = flag_cohomology(build_root_system(t));
    }
    const auto rs = build_root_system(t);
    const auto ws = weyl_enumerate(rs);
    const Sizes hist = length_histogram(ws, rs.positive_roots.size());
    o.require(table.dims.size() == 2 * hist.size() - 1, t + ": wrong number of degrees");
    for (std::size_t k = 0; k < table.dims.size() && o.ok; ++k) {
      if (k % 2 == 1) o.require(table.dims[k] == 0, t + ": odd degree " + std::to_string(k) + " nonzero");
      else o.require(table.dims[k] == hist[k / 2], t + ": degree " + std::to_string(k) + " differs from Weyl count");
    }
    o.require(hist == kEven.at(t), t + ": Weyl histogram " + join(hist));
    o.require(table.total == ws.size(), t + ": total " + std::to_string(table.total) + " != |W|");
  }
  return o;
}

Outcome kostant() {
  Outcome o;
  for (const auto& t : kTypes) {
    const auto rep = kostant_check(build_root_system(t));
    o.require(rep.dims_match, t + ": dim H(n) = " + join(rep.nilradical_dims) + " vs " + join(rep.length_histogram));
    o.require(rep.weights_match, t + ": class weights are not -sum inv(w)");
    o.require(rep.weights_distinct, t + ": class weights repeat");
  }
  return o;
}

Outcome n_side_equivalence() {
  Outcome o;
  for (const auto& t : {"A1", "A2"}) {
    const auto c = chevalley_algebra(build_root_system(t));
    const auto mp = coisotropic_double(standard_bialgebra(c), c.cartan_sub);
    const Sizes lhs = cohomology_dims(n_side_invariant_complex(mp).complex);
    const Sizes rhs = relative_cohomology(mp.l, mp.h);
    o.require(lhs == rhs, std::string(t) + ": " + join(lhs) + " vs " + join(rhs));
  }
  return o;
}

bool pairing_invariant(const DoubleLieAlgebra& d) {
  const std::size_t n = d.d.dim();
  for (std::size_t z = 0; z < n; ++z)
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        const Vec ez = unit_vec(n, z), ea = unit_vec(n, a), eb = unit_vec(n, b);
        if (d.pair(d.d.bracket(ez, ea), eb) + d.pair(ea, d.d.bracket(ez, eb)) != 0) return false;
      }
  return true;
}

Outcome double_soundness() {
  Outcome o;
  auto agree = [&](const LieBialgebra& b, const std::string& label) {
    const bool compat = check_compatibility(b).ok;
    bool sound = false;
    try {
      const auto d = build_double(b);
      sound = validate_jacobi(d.d).ok && pairing_invariant(d);
    } catch (const JacobiFailure& e) {
      o.require(!e.report().witnesses.empty(), label + ": rejection without witnesses");
    }
    o.require(compat == sound, label + ": compatibility and double disagree");
    return compat;
  };
  o.require(agree(standard_sl2_bialgebra(), "standard sl2"), "standard sl2 rejected");

  RatGen gen(606);
  const auto algebras = plie::testing::zoo();
  int accepted = 0, rejected = 0;
  for (int t = 0; t < 50; ++t) {
    const auto& g = algebras[t % algebras.size()];
    Vec r(wedge2_dim(g.dim()));
    for (auto& x : r) x = gen.sparse_rat(0.3);
    (agree(make_coboundary(g, r), "candidate " + std::to_string(t)) ? accepted : rejected)++;
  }
  o.require(accepted > 0 && rejected > 0, "random candidates did not exercise both outcomes");

  // corrupted cocommutators: δ(h) = e∧f on sl2, and perturbed standard ones
  std::vector<LieBialgebra> corrupted;
  LieBialgebra bad{sl2(), std::vector<Vec>(3, zero_vec(3))};
  bad.delta[1][wedge2_index(3, 0, 2)] = 1;
  corrupted.push_back(bad);
  for (int t = 0; t < 10; ++t) {
    auto b = standard_sl2_bialgebra();
    b.delta[gen.uniform(0, 2)][gen.uniform(0, 2)] += gen.uniform(1, 3);
    corrupted.push_back(b);
  }
  for (std::size_t i = 0; i < corrupted.size(); ++i) {
    const auto report = check_compatibility(corrupted[i]);
    if (i == 0) o.require(!report.ok, "delta(h) = e^f accepted");
    if (!report.ok) {
      o.require(!report.witnesses.empty(), "rejection without witnesses");
      bool threw = false;
      try {
        build_double(corrupted[i]);
      } catch (const JacobiFailure& e) {
        threw = !e.report().witnesses.empty();
      }
      o.require(threw, "build_double accepted a corrupted cocommutator");
    }
    agree(corrupted[i], "corrupted " + std::to_string(i));
  }
  o.detail = o.ok ? std::to_string(accepted) + " accepted, " + std::to_string(rejected) + " rejected" : o.detail;
  return o;
}

Mat random_skew(RatGen& gen, std::size_t p, std::size_t k) {
  Mat u = gen.mat(p, 2 * k, 0.3);
  Mat j(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    j(2 * i, 2 * i + 1) = 1;
    j(2 * i + 1, 2 * i) = -1;
  }
  return u * j * u.transpose();
}

Outcome fiber() {
  Outcome o;
  RatGen gen(4242);
  for (int t = 0; t < 200; ++t) {
    const std::size_t g = gen.uniform(1, 8), p = gen.uniform(1, 8);
    const Mat sigma = gen.coin(0.3) ? gen.mat(p, 1, 0.2) * gen.mat(1, g, 0.2) : gen.mat(p, g, 0.6);
    const PointActionData d(sigma, random_skew(gen, p, gen.uniform(0, 3)));
    const auto r = anchor_kernel(d);
    const std::string label = "instance " + std::to_string(t);
    o.require(r.lp.dim() == r.dim_gp + r.dim_tp + r.dim_overlap, label + ": dimension identity");
    o.require(isotropy_check(d, r.lp), label + ": lp not isotropic");
    const auto basis = r.lp.basis_vectors();
    for (const auto& u : basis)
      for (const auto& v : basis) {
        const Vec a = phi_map(d, u), b = phi_map(d, v);
        Rat hyper = 0;
        for (std::size_t i = 0; i < g; ++i) hyper += a[i] * b[g + i] + a[g + i] * b[i];
        o.require(hyper == point_pairing(d, u, v), label + ": phi does not preserve the pairing");
      }
  }
  return o;
}

Outcome whitehead() {
  Outcome o;
  o.require(cohomology_dims(ce_complex(sl2())) == Sizes{1, 0, 0, 1}, "sl2 trivial coefficients");
  for (std::size_t n = 1; n <= 7; ++n) {
    Sizes binom(n + 1, 1);
    for (std::size_t k = 1; k <= n; ++k) binom[k] = binom[k - 1] * (n - k + 1) / k;
    o.require(cohomology_dims(ce_complex(LieAlgebra::abelian(n))) == binom, "abelian dim " + std::to_string(n));
  }
  return o;
}

Outcome leaves() {
  Outcome o;
  for (const auto& t : kTypes) {
    const auto rs = build_root_system(t);
    const auto ws = weyl_enumerate(rs);
    const auto ls = bruhat_leaves(rs);
    o.require(ls.size() == ws.size(), t + ": leaf count");
    std::size_t zero = 0, top = 0;
    for (const auto& l : ls) {
      o.require(l.leaf_dim == 2 * ws[l.weyl_index].length, t + ": leaf dimension");
      zero += l.leaf_dim == 0;
      top += l.leaf_dim == 2 * rs.positive_roots.size();
    }
    o.require(zero == 1 && top == 1, t + ": point and open cell counts");
  }
  return o;
}

} // namespace

int main(int argc, char** argv) {
  const std::string cli = argc > 1 ? argv[1] : "";
  struct Criterion {
    int id;
    std::string name;
    double budget_s;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "flag cohomology equals the Weyl length histogram", 60, [&] { return flag_tables(cli); }},
      {2, "nilradical cohomology matches the Weyl group", 30, kostant},
      {3, "n-side invariant complex equals relative cohomology", 0, n_side_equivalence},
      {4, "double Jacobi agrees with the compatibility check", 0, double_soundness},
      {5, "anchor kernel dimension, isotropy and pairing", 0, fiber},
      {6, "CE cohomology of sl2 and abelian algebras", 0, whitehead},
      {7, "Bruhat leaf census", 0, leaves},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0 && secs > c.budget_s) o.require(false, "over the time budget");
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(2);
    line << (o.ok ? "PASS" : "FAIL") << "  " << c.id << "  " << c.name << "  (" << secs << " s";
    if (c.budget_s > 0) line << ", budget " << c.budget_s << " s";
    line << ")";
    if (!o.detail.empty()) line << "  " << o.detail;
    std::cout << line.str() << std::endl;
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
