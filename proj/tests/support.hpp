#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

#include "gft/series.hpp"

namespace gft::test {

// Small seeded generator for property tests.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (double(engine_() >> 11) * 0x1.0p-53);
  }
  int integer(int lo, int hi) { return lo + int(engine_() % std::uint64_t(hi - lo + 1)); }

  /// Uniform in the disc |z| < radius.
  Complex in_disc(double radius) {
    return std::polar(radius * std::sqrt(uniform(0.0, 1.0)), uniform(0.0, 2.0 * std::numbers::pi));
  }

  std::vector<Complex> coeffs(int n, double scale) {
    std::vector<Complex> out(static_cast<std::size_t>(n));
    for (auto& c : out) c = in_disc(scale);
    return out;
  }

 private:
  std::mt19937_64 engine_;
};

inline double max_abs_diff(const PowerSeries& a, const PowerSeries& b) {
  double worst = 0.0;
  const int n = std::max(a.order(), b.order());
  for (int i = 0; i <= n; ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

inline PowerSeries koebe_series(int order) {
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  for (int n = 1; n <= order; ++n) c[static_cast<std::size_t>(n)] = double(n);
  return PowerSeries(c, order);
}

inline PowerSeries geometric_series(int order) {
  return PowerSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1, 1.0), order);
}

}  // namespace gft::test
