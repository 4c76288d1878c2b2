#pragma once

// Deterministic random generators shared by the unit and acceptance suites.

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "abcd/mat_core.hpp"
#include "abcd/multilayer.hpp"

namespace abcd::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  // Product of 1..6 factors drawn from rot2, boost2, squeeze2 with bounded parameters.
  Mat2 unimodular(double max_rapidity = 1.5) {
    Mat2 m;
    const int factors = integer(1, 6);
    for (int i = 0; i < factors; ++i) {
      switch (integer(0, 2)) {
        case 0: m = m * rot2(uniform(-2 * std::numbers::pi, 2 * std::numbers::pi)); break;
        case 1: m = m * boost2(uniform(-max_rapidity, max_rapidity)); break;
        default: m = m * squeeze2(uniform(-max_rapidity, max_rapidity)); break;
      }
    }
    return m;
  }

  LayerStack stack(double max_eta = 3.0) {
    return {uniform(-std::numbers::pi, std::numbers::pi), uniform(-std::numbers::pi, std::numbers::pi),
            uniform(-max_eta, max_eta), 0};
  }

 private:
  std::mt19937_64 rng_;
};

// Iterated multiplication; the brute-force oracle for powers.
inline Mat2 iterate(const Mat2& m, std::int64_t n) {
  Mat2 out;
  for (std::int64_t i = 0; i < n; ++i) out = out * m;
  return out;
}

inline double max_rel_diff(const Mat2& got, const Mat2& want) {
  return max_abs_diff(got, want) / std::max(1.0, want.max_abs());
}

}  // namespace abcd::testing
