#pragma once

// Truncated complex Taylor series about the origin.
//
// A PowerSeries of order N stores a_0..a_N. Products, reciprocals and the
// exp/log recurrences are exact up to degree N in exact arithmetic; nothing
// beyond degree N is ever inferred.

#include <complex>
#include <span>
#include <vector>

#include "gft/kernels.hpp"

namespace gft {

inline constexpr int kMinOrder = 8;
inline constexpr int kDefaultOrder = 256;

/// Largest |z| at which a series is evaluated; beyond it use closed forms.
inline constexpr double kSeriesRadiusMax = 0.95;

/// Largest admissible truncation-tail estimate for a series evaluation.
inline constexpr double kTailTolerance = 1e-8;

class PowerSeries {
 public:
  /// The zero series of the given order.
  explicit PowerSeries(int order = kDefaultOrder);

  /// Coefficients a_0..a_{size-1}; a shorter vector is zero-padded to `order`.
  PowerSeries(std::vector<Complex> coeffs, int order);
  explicit PowerSeries(std::vector<Complex> coeffs);

  static PowerSeries constant(Complex c, int order = kDefaultOrder);
  static PowerSeries identity(int order = kDefaultOrder);

  int order() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  /// a_n, or 0 for n outside [0, N].
  Complex operator[](int n) const noexcept;

  /// a_0 = 0 and a_1 = 1 within `tol`.
  bool is_normalized(double tol = 0.0) const noexcept;

  /// Truncated or zero-padded copy.
  PowerSeries with_order(int order) const;

  /// f(z)/z for a series with a_0 = 0 (the top coefficient becomes 0).
  PowerSeries divided_by_z() const;
  /// z f(z), truncated at the same order.
  PowerSeries times_z() const;

  PowerSeries& operator+=(const PowerSeries& rhs);
  PowerSeries& operator-=(const PowerSeries& rhs);
  PowerSeries& operator*=(Complex scale);

  friend PowerSeries operator+(PowerSeries lhs, const PowerSeries& rhs) { return lhs += rhs; }
  friend PowerSeries operator-(PowerSeries lhs, const PowerSeries& rhs) { return lhs -= rhs; }
  friend PowerSeries operator*(PowerSeries lhs, Complex scale) { return lhs *= scale; }
  friend PowerSeries operator*(Complex scale, PowerSeries rhs) { return rhs *= scale; }
  friend PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs);

 private:
  void validate() const;

  std::vector<Complex> coeffs_;
};

PowerSeries derivative(const PowerSeries& a);

/// Antiderivative with zero constant term.
PowerSeries integral(const PowerSeries& a);

/// 1/a; requires a_0 != 0.
PowerSeries reciprocal(const PowerSeries& a);

/// Principal-branch logarithm; requires a_0 != 0.
PowerSeries log(const PowerSeries& a);

/// exp(a); requires a_0 = 0.
PowerSeries exp(const PowerSeries& a);

/// Principal-branch a^c = a_0^c exp(c (log a - log a_0)); requires a_0 != 0.
PowerSeries pow(const PowerSeries& a, Complex c);

/// p = z f'/f and q = 1 + z f''/f' for a series with f(0) = 0, f'(0) != 0.
struct LogDerivatives {
  PowerSeries p;
  PowerSeries q;
};
LogDerivatives log_derivative_functionals(const PowerSeries& f);

struct EvalLimits {
  double r_max = kSeriesRadiusMax;
  double tail_tol = kTailTolerance;
};

struct SeriesEval {
  EvalResult at;
  double tail_estimate = 0.0;
};

/// |a_N| r^N N^2, taking the largest of the last few coefficients so that a
/// derivative's structurally-zero top coefficient does not hide the tail.
double tail_estimate(const PowerSeries& a, double radius) noexcept;

/// Value, first and second derivative at z.
/// Throws RadiusTooLarge past limits.r_max, TruncationUnreliable when the tail
/// estimate exceeds limits.tail_tol.
SeriesEval evaluate(const PowerSeries& a, Complex z, const EvalLimits& limits = {});

/// Batched evaluation through the dispatched Horner kernel; same checks as the
/// single-point overload, applied at the largest |z| in the batch.
std::vector<EvalResult> evaluate(const PowerSeries& a, std::span<const Complex> zs,
                                 const EvalLimits& limits = {});

}  // namespace gft
