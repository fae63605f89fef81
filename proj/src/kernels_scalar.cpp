#include <algorithm>

#include "gft/kernels.hpp"

namespace gft::kernels::scalar {

Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept {
  const std::size_t n = std::min(x.size(), y.size());
  double re = 0.0;
  double im = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    const double xr = x[k].real(), xi = x[k].imag();
    const double yr = y[k].real(), yi = y[k].imag();
    re += xr * yr - xi * yi;
    im += xr * yi + xi * yr;
  }
  return {re, im};
}

void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> zs,
                  std::span<EvalResult> out) noexcept {
  const std::size_t count = std::min(zs.size(), out.size());
  if (coeffs.empty()) {
    std::fill_n(out.begin(), count, EvalResult{});
    return;
  }
  const std::size_t top = coeffs.size() - 1;
  for (std::size_t j = 0; j < count; ++j) {
    const double zr = zs[j].real(), zi = zs[j].imag();
    double v_re = coeffs[top].real(), v_im = coeffs[top].imag();
    double d_re = 0.0, d_im = 0.0;
    double h_re = 0.0, h_im = 0.0;  // half of the second derivative
    for (std::size_t n = top; n-- > 0;) {
      const double nh_re = h_re * zr - h_im * zi + d_re;
      const double nh_im = h_re * zi + h_im * zr + d_im;
      const double nd_re = d_re * zr - d_im * zi + v_re;
      const double nd_im = d_re * zi + d_im * zr + v_im;
      const double nv_re = v_re * zr - v_im * zi + coeffs[n].real();
      const double nv_im = v_re * zi + v_im * zr + coeffs[n].imag();
      h_re = nh_re;
      h_im = nh_im;
      d_re = nd_re;
      d_im = nd_im;
      v_re = nv_re;
      v_im = nv_im;
    }
    out[j] = EvalResult{{v_re, v_im}, {d_re, d_im}, {2.0 * h_re, 2.0 * h_im}};
  }
}

}  // namespace gft::kernels::scalar
