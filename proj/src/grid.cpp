#include "gft/grid.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "gft/error.hpp"

namespace gft {

void GridSpec::validate() const {
  if (n_theta < 64) throw Error(Errc::InvalidParams, "n_theta must be >= 64, got " + std::to_string(n_theta));
  if (n_radial < 1) throw Error(Errc::InvalidParams, "n_radial must be >= 1, got " + std::to_string(n_radial));
  if (!(r_cap > 0.0 && r_cap <= 0.999)) {
    throw Error(Errc::InvalidParams, "r_cap must lie in (0, 0.999], got " + std::to_string(r_cap));
  }
  if (!(tol >= 1e-8)) throw Error(Errc::InvalidParams, "tol must be >= 1e-8, got " + std::to_string(tol));
}

std::vector<Complex> ring_points(double r, int n) {
  std::vector<Complex> z(static_cast<std::size_t>(n));
  for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j)] = std::polar(r, 2.0 * std::numbers::pi * j / n);
  return z;
}

}  // namespace gft
