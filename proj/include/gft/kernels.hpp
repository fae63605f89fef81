#pragma once

// Data-parallel inner loops used by the series engine. Every kernel has a
// scalar reference implementation; vectorized variants are selected once at
// startup from the host CPU and must agree with the reference to rounding.

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace gft {

using Complex = std::complex<double>;

/// Value and first two derivatives of a function at one point.
struct EvalResult {
  Complex value;
  Complex d1;
  Complex d2;
};

namespace kernels {

enum class Isa { scalar, avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Best ISA supported by both the build and the running CPU.
Isa detect_isa() noexcept;

/// ISA currently used by the dispatching entry points below.
Isa active_isa() noexcept;

/// Forces a dispatch target (tests, benchmarking). Requests for an ISA the
/// host cannot run fall back to scalar; returns the ISA actually selected.
Isa set_active_isa(Isa isa) noexcept;

/// sum_k x[k] * y[k] over min(x.size(), y.size()) terms.
Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept;

/// Horner evaluation of sum_n coeffs[n] z^n together with its first and
/// second derivative at every point of `zs`. out.size() must equal zs.size().
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> zs,
                  std::span<EvalResult> out) noexcept;

namespace scalar {
Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept;
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> zs,
                  std::span<EvalResult> out) noexcept;
}  // namespace scalar

namespace avx2 {
bool compiled() noexcept;
Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept;
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> zs,
                  std::span<EvalResult> out) noexcept;
}  // namespace avx2

}  // namespace kernels
}  // namespace gft
