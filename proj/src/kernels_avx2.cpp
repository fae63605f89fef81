#include <immintrin.h>

#include <algorithm>

#include "gft/kernels.hpp"

namespace gft::kernels::avx2 {

namespace {

// Complex numbers are stored interleaved (re, im), so one 256-bit register
// holds two of them.
inline const double* as_doubles(const Complex* p) { return reinterpret_cast<const double*>(p); }

struct Lanes {
  __m256d re;
  __m256d im;
};

inline Lanes cmul_add(Lanes a, __m256d zr, __m256d zi, __m256d add_re, __m256d add_im) {
  const __m256d re = _mm256_fmadd_pd(a.re, zr, _mm256_fnmadd_pd(a.im, zi, add_re));
  const __m256d im = _mm256_fmadd_pd(a.re, zi, _mm256_fmadd_pd(a.im, zr, add_im));
  return {re, im};
}

}  // namespace

bool compiled() noexcept { return true; }

Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept {
  const std::size_t n = std::min(x.size(), y.size());
  const double* xp = as_doubles(x.data());
  const double* yp = as_doubles(y.data());

  __m256d real_parts0 = _mm256_setzero_pd(), imag_parts0 = _mm256_setzero_pd();
  __m256d real_parts1 = _mm256_setzero_pd(), imag_parts1 = _mm256_setzero_pd();
  std::size_t k = 0;
  for (; k + 4 <= n; k += 4) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * k);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * k);
    const __m256d xb = _mm256_loadu_pd(xp + 2 * k + 4);
    const __m256d yb = _mm256_loadu_pd(yp + 2 * k + 4);
    real_parts0 = _mm256_fmadd_pd(xa, _mm256_movedup_pd(ya), real_parts0);
    imag_parts0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0xF), imag_parts0);
    real_parts1 = _mm256_fmadd_pd(xb, _mm256_movedup_pd(yb), real_parts1);
    imag_parts1 = _mm256_fmadd_pd(xb, _mm256_permute_pd(yb, 0xF), imag_parts1);
  }
  for (; k + 2 <= n; k += 2) {
    const __m256d xa = _mm256_loadu_pd(xp + 2 * k);
    const __m256d ya = _mm256_loadu_pd(yp + 2 * k);
    real_parts0 = _mm256_fmadd_pd(xa, _mm256_movedup_pd(ya), real_parts0);
    imag_parts0 = _mm256_fmadd_pd(xa, _mm256_permute_pd(ya, 0xF), imag_parts0);
  }
  // Lanes of the "real" accumulator hold (xr*yr, xi*yr), the other (xr*yi, xi*yi).
  alignas(32) double by_yr[4];
  alignas(32) double by_yi[4];
  _mm256_store_pd(by_yr, _mm256_add_pd(real_parts0, real_parts1));
  _mm256_store_pd(by_yi, _mm256_add_pd(imag_parts0, imag_parts1));
  double re = (by_yr[0] + by_yr[2]) - (by_yi[1] + by_yi[3]);
  double im = (by_yr[1] + by_yr[3]) + (by_yi[0] + by_yi[2]);
  for (; k < n; ++k) {
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
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d zr = _mm256_setr_pd(zs[j].real(), zs[j + 1].real(), zs[j + 2].real(), zs[j + 3].real());
    const __m256d zi = _mm256_setr_pd(zs[j].imag(), zs[j + 1].imag(), zs[j + 2].imag(), zs[j + 3].imag());
    Lanes value{_mm256_set1_pd(coeffs[top].real()), _mm256_set1_pd(coeffs[top].imag())};
    Lanes first{_mm256_setzero_pd(), _mm256_setzero_pd()};
    Lanes half_second{_mm256_setzero_pd(), _mm256_setzero_pd()};
    for (std::size_t n = top; n-- > 0;) {
      half_second = cmul_add(half_second, zr, zi, first.re, first.im);
      first = cmul_add(first, zr, zi, value.re, value.im);
      value = cmul_add(value, zr, zi, _mm256_set1_pd(coeffs[n].real()), _mm256_set1_pd(coeffs[n].imag()));
    }
    alignas(32) double v_re[4], v_im[4], d_re[4], d_im[4], h_re[4], h_im[4];
    _mm256_store_pd(v_re, value.re);
    _mm256_store_pd(v_im, value.im);
    _mm256_store_pd(d_re, first.re);
    _mm256_store_pd(d_im, first.im);
    _mm256_store_pd(h_re, half_second.re);
    _mm256_store_pd(h_im, half_second.im);
    for (int lane = 0; lane < 4; ++lane) {
      out[j + lane] = EvalResult{{v_re[lane], v_im[lane]},
                                 {d_re[lane], d_im[lane]},
                                 {2.0 * h_re[lane], 2.0 * h_im[lane]}};
    }
  }
  if (j < count) {
    scalar::horner_batch(coeffs, zs.subspan(j, count - j), out.subspan(j, count - j));
  }
}

}  // namespace gft::kernels::avx2
