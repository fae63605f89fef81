#pragma once

#include <cmath>
#include <complex>

namespace gft::detail {

using Complex = std::complex<double>;

/// log(1 + w), accurate for small |w| (Kahan's correction).
inline Complex log1p(Complex w) {
  const Complex u = 1.0 + w;
  if (u == 1.0) return w;
  return std::log(u) * (w / (u - 1.0));
}

/// exp(w) - 1, accurate for small |w|.
inline Complex expm1(Complex w) {
  const double x = w.real(), y = w.imag();
  const double half_sin = std::sin(0.5 * y);
  return {std::expm1(x) * std::cos(y) - 2.0 * half_sin * half_sin, std::exp(x) * std::sin(y)};
}

}  // namespace gft::detail
