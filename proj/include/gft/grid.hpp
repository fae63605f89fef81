#pragma once

#include <vector>

#include "gft/kernels.hpp"

namespace gft {

/// Sampling plan shared by membership checks, lemma audits and the radius
/// estimator: n_theta equispaced angles, n_radial radial steps up to r_cap.
struct GridSpec {
  int n_theta = 720;
  int n_radial = 512;
  double r_cap = 0.99;
  double tol = 1e-6;

  /// Throws InvalidParams unless n_theta >= 64, n_radial >= 1,
  /// 0 < r_cap <= 0.999 and tol >= 1e-8.
  void validate() const;
};

/// 720 angles x 32 radii, used for class-membership checks and lemma audits.
inline GridSpec membership_grid(double r_cap = 0.95) { return GridSpec{720, 32, r_cap, 1e-6}; }

/// n points r e^{2 pi i j / n}, j = 0..n-1.
std::vector<Complex> ring_points(double r, int n);

}  // namespace gft
