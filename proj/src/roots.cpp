#include "plie/roots.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace plie {

namespace {

constexpr std::size_t kRootCap = 2000;
constexpr std::size_t kWeylCap = 200000;

long height(const Root& r) {
  long h = 0;
  for (long x : r) h += x;
  return h;
}

bool root_less(const Root& a, const Root& b) {
  const long ha = height(a), hb = height(b);
  return ha != hb ? ha < hb : a < b;
}

Root negate(Root r) {
  for (auto& x : r) x = -x;
  return r;
}

Root plus(const Root& a, const Root& b) {
  Root out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

bool is_zero_root(const Root& r) {
  return std::all_of(r.begin(), r.end(), [](long x) { return x == 0; });
}

bool is_positive(const Root& r) {
  return !is_zero_root(r) && std::all_of(r.begin(), r.end(), [](long x) { return x >= 0; });
}

bool is_negative(const Root& r) {
  return !is_zero_root(r) && std::all_of(r.begin(), r.end(), [](long x) { return x <= 0; });
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  const std::size_t n = a.size();
  IntMatrix out(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

void check_cartan(const IntMatrix& a) {
  const std::size_t r = a.size();
  if (r == 0) throw InputError("Cartan matrix must be nonempty");
  for (const auto& row : a)
    if (row.size() != r) throw InputError("Cartan matrix must be square");
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      if (i == j) {
        if (a[i][i] != 2) throw InputError("Cartan matrix diagonal entries must be 2");
        continue;
      }
      if (a[i][j] > 0) throw InputError("Cartan matrix off-diagonal entries must be <= 0");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw InputError("Cartan matrix zero pattern must be symmetric");
      if (a[i][j] * a[j][i] > 3)
        throw MathRejection("Cartan matrix is not of finite type: a_ij a_ji > 3 at (" + std::to_string(i) + ", " +
                            std::to_string(j) + ")");
    }
}

std::vector<Rat> symmetrize(const IntMatrix& a) {
  const std::size_t r = a.size();
  std::vector<Rat> d(r, Rat(0));
  for (std::size_t start = 0; start < r; ++start) {
    if (sgn(d[start]) != 0) continue;
    std::vector<std::size_t> component{start};
    d[start] = 1;
    for (std::size_t pos = 0; pos < component.size(); ++pos) {
      const std::size_t i = component[pos];
      for (std::size_t j = 0; j < r; ++j) {
        if (j == i || a[i][j] == 0) continue;
        // (α_i, α_j) = a_ij d_i / 2 must equal a_ji d_j / 2
        const Rat dj = Rat(a[i][j]) * d[i] / Rat(a[j][i]);
        if (sgn(d[j]) == 0) {
          d[j] = dj;
          component.push_back(j);
        } else if (d[j] != dj) {
          throw MathRejection("Cartan matrix is not symmetrizable");
        }
      }
    }
    Rat shortest = d[start];
    for (auto i : component) shortest = std::min(shortest, d[i]);
    for (auto i : component) d[i] = Rat(2) * d[i] / shortest;
  }
  return d;
}

} // namespace

long RootSystem::coroot_pairing(const Root& beta, std::size_t i) const {
  long s = 0;
  for (std::size_t j = 0; j < rank; ++j) s += beta[j] * cartan[i][j];
  return s;
}

Rat RootSystem::form(const Root& beta, const Root& gamma) const {
  Rat s = 0;
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < rank; ++j)
      if (beta[i] != 0 && gamma[j] != 0) s += Rat(beta[i] * gamma[j] * cartan[i][j]) * simple_lengths[i] / 2;
  return s;
}

long RootSystem::index_of(const Root& beta) const {
  auto it = std::lower_bound(positive_roots.begin(), positive_roots.end(), beta, root_less);
  return (it != positive_roots.end() && *it == beta) ? static_cast<long>(it - positive_roots.begin()) : -1;
}

Root RootSystem::rho_doubled() const {
  Root out(rank, 0);
  for (const auto& b : positive_roots) out = plus(out, b);
  return out;
}

std::vector<std::string> builtin_types() { return {"A1", "A2", "A3", "B2", "B3", "C3", "G2"}; }

IntMatrix cartan_matrix(const std::string& t) {
  if (t == "A1") return {{2}};
  if (t == "A2") return {{2, -1}, {-1, 2}};
  if (t == "A3") return {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  if (t == "B2") return {{2, -1}, {-2, 2}};
  if (t == "B3") return {{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}};
  if (t == "C3") return {{2, -1, 0}, {-1, 2, -2}, {0, -1, 2}};
  if (t == "G2") return {{2, -3}, {-1, 2}};
  throw InputError("unknown root system type '" + t + "'");
}

RootSystem build_root_system(const std::string& type_name) {
  return build_root_system(cartan_matrix(type_name), type_name);
}

RootSystem build_root_system(const IntMatrix& cartan, const std::string& type_name) {
  check_cartan(cartan);
  RootSystem rs;
  rs.type_name = type_name;
  rs.rank = cartan.size();
  rs.cartan = cartan;
  rs.simple_lengths = symmetrize(cartan);

  std::set<Root> seen;
  std::deque<Root> queue;
  for (std::size_t i = 0; i < rs.rank; ++i) {
    Root a(rs.rank, 0);
    a[i] = 1;
    seen.insert(a);
    queue.push_back(a);
  }
  while (!queue.empty()) {
    Root beta = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < rs.rank; ++i) {
      Root s = beta;
      s[i] -= rs.coroot_pairing(beta, i);
      if (is_positive(s) && seen.insert(s).second) {
        if (seen.size() > kRootCap)
          throw MathRejection("Cartan matrix is not of finite type: more than " + std::to_string(kRootCap) +
                              " positive roots generated");
        queue.push_back(std::move(s));
      }
    }
  }
  rs.positive_roots.assign(seen.begin(), seen.end());
  std::sort(rs.positive_roots.begin(), rs.positive_roots.end(), root_less);
  return rs;
}

namespace {

class StructureConstants {
public:
  explicit StructureConstants(const RootSystem& rs) : rs_(rs), n_(rs.positive_roots.size()) {
    table_.assign(n_, std::vector<long>(n_, 0));
    for (std::size_t x = 0; x < n_; ++x) {
      const Root& xi = rs.positive_roots[x];
      std::vector<std::pair<std::size_t, std::size_t>> special;
      for (std::size_t a = 0; a < x; ++a) {
        const long b = rs.index_of(plus(xi, negate(rs.positive_roots[a])));
        if (b > static_cast<long>(a)) special.emplace_back(a, static_cast<std::size_t>(b));
      }
      if (special.empty()) continue;
      const auto [ea, eb] = special.front();
      const Root& alpha = rs.positive_roots[ea];
      const Root& beta = rs.positive_roots[eb];
      set(ea, eb, string_length(alpha, beta) + 1);
      const Rat nab = Rat(table_[ea][eb]);
      for (std::size_t s = 1; s < special.size(); ++s) {
        const auto [gi, di] = special[s];
        const Root& gamma = rs.positive_roots[gi];
        const Root& delta = rs.positive_roots[di];
        Rat acc = 0;
        const Root bg = plus(beta, negate(gamma));
        if (is_root(bg)) acc += Rat(get(beta, negate(gamma)) * get(alpha, negate(delta))) / rs.form(bg, bg);
        const Root ag = plus(alpha, negate(gamma));
        if (is_root(ag)) acc += Rat(get(negate(gamma), alpha) * get(beta, negate(delta))) / rs.form(ag, ag);
        set(gi, di, to_long(rs.form(xi, xi) / nab * acc));
      }
    }
  }

  bool is_root(const Root& r) const {
    if (is_positive(r)) return rs_.index_of(r) >= 0;
    if (is_negative(r)) return rs_.index_of(negate(r)) >= 0;
    return false;
  }

  /// N_{a,b} for roots a, b with a + b != 0.
  long get(const Root& a, const Root& b) const {
    const Root s = plus(a, b);
    if (!is_root(s)) return 0;
    if (is_positive(a) && is_positive(b))
      return table_[static_cast<std::size_t>(rs_.index_of(a))][static_cast<std::size_t>(rs_.index_of(b))];
    if (is_negative(a) && is_negative(b)) return -get(negate(a), negate(b));
    if (is_negative(a)) return -get(b, a);
    // a > 0 > b; c = -(a+b); N_{a,b}/(c,c) = N_{b,c}/(a,a) = N_{c,a}/(b,b)
    const Root c = negate(s);
    if (is_negative(c)) return to_long(rs_.form(c, c) / rs_.form(a, a) * Rat(-get(negate(b), negate(c))));
    return to_long(rs_.form(c, c) / rs_.form(b, b) * Rat(get(c, a)));
  }

private:
  void set(std::size_t a, std::size_t b, long v) {
    table_[a][b] = v;
    table_[b][a] = -v;
  }

  // largest p with beta - p alpha a root
  long string_length(const Root& alpha, const Root& beta) const {
    long p = 0;
    Root r = beta;
    while (true) {
      r = plus(r, negate(alpha));
      if (!is_root(r)) return p;
      ++p;
    }
  }

  static long to_long(const Rat& r) {
    if (r.get_den() != 1) throw MathRejection("non-integral Chevalley structure constant");
    return r.get_num().get_si();
  }

  const RootSystem& rs_;
  std::size_t n_;
  std::vector<std::vector<long>> table_;
};

} // namespace

ChevalleyAlgebra chevalley_algebra(const RootSystem& rs) {
  const std::size_t np = rs.positive_roots.size(), r = rs.rank, dim = r + 2 * np;
  const StructureConstants sc(rs);

  ChevalleyAlgebra out;
  out.roots = rs;
  std::vector<std::string> names;
  for (std::size_t k = 0; k < np; ++k) {
    names.push_back("E" + std::to_string(k + 1));
    out.root_of_basis.push_back(rs.positive_roots[k]);
  }
  for (std::size_t i = 0; i < r; ++i) {
    names.push_back("H" + std::to_string(i + 1));
    out.root_of_basis.push_back(Root(r, 0));
  }
  for (std::size_t k = 0; k < np; ++k) {
    names.push_back("F" + std::to_string(k + 1));
    out.root_of_basis.push_back(negate(rs.positive_roots[k]));
  }

  auto basis_of_root = [&](const Root& a) -> std::size_t {
    if (is_positive(a)) return static_cast<std::size_t>(rs.index_of(a));
    return r + np + static_cast<std::size_t>(rs.index_of(negate(a)));
  };
  // h_a = Σ a_i (α_i, α_i)/(a, a) H_i for a positive; h_{-a} = -h_a
  auto coroot = [&](const Root& a) {
    Vec v = zero_vec(dim);
    const Root pos = is_positive(a) ? a : negate(a);
    const Rat len = rs.form(pos, pos);
    for (std::size_t i = 0; i < r; ++i) v[np + i] = Rat(pos[i]) * rs.simple_lengths[i] / len;
    return is_positive(a) ? v : scale(Rat(-1), v);
  };

  std::vector<Vec> table(dim * dim, zero_vec(dim));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      const Root& a = out.root_of_basis[i];
      const Root& b = out.root_of_basis[j];
      const bool ha = i >= np && i < np + r, hb = j >= np && j < np + r;
      Vec& v = table[i * dim + j];
      if (ha && hb) continue;
      if (ha) {
        v[j] = rs.coroot_pairing(b, i - np);
      } else if (hb) {
        v[i] = -rs.coroot_pairing(a, j - np);
      } else if (is_zero_root(plus(a, b))) {
        v = coroot(a);
      } else if (const long nab = sc.get(a, b); nab != 0) {
        v[basis_of_root(plus(a, b))] = nab;
      }
    }
  out.g = LieAlgebra::from_table(std::move(names), std::move(table)).validated();

  std::vector<std::size_t> e, h, f;
  for (std::size_t k = 0; k < np; ++k) {
    e.push_back(k);
    f.push_back(np + r + k);
  }
  for (std::size_t i = 0; i < r; ++i) h.push_back(np + i);
  out.nilradical = Subspace::coordinate(dim, e);
  out.cartan_sub = Subspace::coordinate(dim, h);
  out.opposite = Subspace::coordinate(dim, f);
  return out;
}

Root WeylElement::apply(const Root& beta) const {
  Root out(beta.size(), 0);
  for (std::size_t i = 0; i < beta.size(); ++i)
    for (std::size_t j = 0; j < beta.size(); ++j) out[i] += matrix[i][j] * beta[j];
  return out;
}

std::vector<std::size_t> inversion_set(const RootSystem& rs, const WeylElement& w) {
  WeylElement inv{w.inverse, w.matrix, 0, {}};
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rs.positive_roots.size(); ++k)
    if (is_negative(inv.apply(rs.positive_roots[k]))) out.push_back(k);
  return out;
}

std::vector<WeylElement> weyl_enumerate(const RootSystem& rs) {
  const std::size_t r = rs.rank;
  std::vector<IntMatrix> reflections;
  for (std::size_t i = 0; i < r; ++i) {
    IntMatrix s(r, std::vector<long>(r, 0));
    for (std::size_t j = 0; j < r; ++j) {
      s[j][j] = 1;
      s[i][j] -= rs.cartan[i][j];
    }
    reflections.push_back(std::move(s));
  }
  IntMatrix id(r, std::vector<long>(r, 0));
  for (std::size_t i = 0; i < r; ++i) id[i][i] = 1;

  std::vector<WeylElement> out{{id, id, 0, {}}};
  std::map<IntMatrix, std::size_t> seen{{id, 0}};
  for (std::size_t pos = 0; pos < out.size(); ++pos)
    for (const auto& s : reflections) {
      IntMatrix m = multiply(s, out[pos].matrix);
      if (seen.count(m)) continue;
      if (out.size() >= kWeylCap)
        throw MathRejection("Weyl group exceeds " + std::to_string(kWeylCap) + " elements");
      seen.emplace(m, out.size());
      WeylElement w{std::move(m), multiply(out[pos].inverse, s), out[pos].length + 1, {}};
      out.push_back(std::move(w));
    }
  for (auto& w : out) w.inversion_set = inversion_set(rs, w);
  return out;
}

std::vector<std::size_t> length_histogram(const std::vector<WeylElement>& w, std::size_t positive_count) {
  std::vector<std::size_t> hist(positive_count + 1, 0);
  for (const auto& e : w) hist.at(e.length)++;
  return hist;
}

} // namespace plie
