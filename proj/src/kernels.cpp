#include "gft/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

namespace gft::kernels {

namespace {

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa initial_isa() noexcept {
  // GFT_FORCE_SCALAR=1 pins the reference path for the whole process.
  if (const char* env = std::getenv("GFT_FORCE_SCALAR"); env && std::strcmp(env, "0") != 0) {
    return Isa::scalar;
  }
  return detect_isa();
}

std::atomic<Isa>& active() noexcept {
  static std::atomic<Isa> isa{initial_isa()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) noexcept {
  switch (isa) {
    case Isa::scalar: return "scalar";
    case Isa::avx2: return "avx2";
  }
  return "unknown";
}

Isa detect_isa() noexcept {
  if (avx2::compiled() && cpu_has_avx2()) return Isa::avx2;
  return Isa::scalar;
}

Isa active_isa() noexcept { return active().load(std::memory_order_relaxed); }

Isa set_active_isa(Isa isa) noexcept {
  if (isa == Isa::avx2 && detect_isa() != Isa::avx2) isa = Isa::scalar;
  active().store(isa, std::memory_order_relaxed);
  return isa;
}

Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept {
  if (active_isa() == Isa::avx2) return avx2::dot(x, y);
  return scalar::dot(x, y);
}

void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> zs,
                  std::span<EvalResult> out) noexcept {
  if (active_isa() == Isa::avx2) {
    avx2::horner_batch(coeffs, zs, out);
  } else {
    scalar::horner_batch(coeffs, zs, out);
  }
}

#if !defined(GFT_HAVE_AVX2)
namespace avx2 {
bool compiled() noexcept { return false; }
Complex dot(std::span<const Complex> x, std::span<const Complex> y) noexcept {
  return scalar::dot(x, y);
}
void horner_batch(std::span<const Complex> coeffs, std::span<const Complex> zs,
                  std::span<EvalResult> out) noexcept {
  scalar::horner_batch(coeffs, zs, out);
}
}  // namespace avx2
#endif

}  // namespace gft::kernels
