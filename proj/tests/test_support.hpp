#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

#include "plie/exactlin.hpp"

namespace plie::testing {

inline Vec vec(std::initializer_list<long> xs) {
  Vec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

/// Small random rationals, deterministic per seed.
class RatGen {
public:
  explicit RatGen(std::uint32_t seed) : rng_(seed) {}

  Rat rat(int span = 3, int max_den = 3) {
    std::uniform_int_distribution<int> num(-span, span);
    std::uniform_int_distribution<int> den(1, max_den);
    return make_rat(num(rng_), den(rng_));
  }

  /// Mostly small integers with some zeros, so ranks vary.
  Rat sparse_rat(double zero_prob = 0.4) {
    std::bernoulli_distribution z(zero_prob);
    return z(rng_) ? Rat(0) : rat();
  }

  Vec vec(std::size_t n) {
    Vec v(n);
    for (auto& x : v) x = rat();
    return v;
  }

  Mat mat(std::size_t r, std::size_t c, double zero_prob = 0.4) {
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = sparse_rat(zero_prob);
    return m;
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::mt19937& engine() { return rng_; }

private:
  std::mt19937 rng_;
};

} // namespace plie::testing
