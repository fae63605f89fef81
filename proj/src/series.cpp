#include "gft/series.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "gft/error.hpp"

namespace gft {

namespace {

constexpr double kConstantTermFloor = 1e-14;

bool finite(Complex c) noexcept { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

void require_order(int order) {
  if (order < kMinOrder) {
    throw Error(Errc::InvariantViolation,
                "series order " + std::to_string(order) + " is below the minimum " + std::to_string(kMinOrder));
  }
}

// Coefficients b_0..b_N stored back to front, so that b_{n-k} for increasing k
// is a contiguous ascending run and the recurrences reduce to dot products.
class ReversedBuffer {
 public:
  explicit ReversedBuffer(int order) : order_(order), data_(static_cast<std::size_t>(order) + 1) {}

  void set(int n, Complex value) { data_[static_cast<std::size_t>(order_ - n)] = value; }

  /// b_{count-1}, b_{count-2}, ..., b_0 as a span: element k is b_{count-1-k}.
  std::span<const Complex> latest(int count) const {
    return std::span<const Complex>(data_).subspan(static_cast<std::size_t>(order_ - count + 1),
                                                   static_cast<std::size_t>(count));
  }

 private:
  int order_;
  std::vector<Complex> data_;
};

// Highest degree whose term can still matter at radius rho.
int effective_degree(std::span<const Complex> a, double rho) {
  const int top = static_cast<int>(a.size()) - 1;
  if (rho == 0.0) return std::min(top, 2);
  std::vector<double> weight(a.size());
  double power = 1.0;
  double largest = 0.0;
  for (int n = 0; n <= top; ++n) {
    weight[static_cast<std::size_t>(n)] = std::abs(a[static_cast<std::size_t>(n)]) * power * (1.0 + double(n) * n);
    largest = std::max(largest, weight[static_cast<std::size_t>(n)]);
    power *= rho;
  }
  const double cutoff = 1e-18 * largest;
  int degree = top;
  while (degree > 2 && weight[static_cast<std::size_t>(degree)] <= cutoff) --degree;
  return degree;
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", x);
  return buf;
}

void check_limits(const PowerSeries& a, double radius, const EvalLimits& limits) {
  if (radius > limits.r_max + 1e-15) {
    throw Error(Errc::RadiusTooLarge, "|z| = " + num(radius) + " exceeds series radius " + num(limits.r_max));
  }
  const double tail = tail_estimate(a, radius);
  if (!(tail <= limits.tail_tol)) {
    throw Error(Errc::TruncationUnreliable, "tail estimate " + num(tail) + " at |z| = " + num(radius) +
                                                " (order " + std::to_string(a.order()) + ")");
  }
}

}  // namespace

PowerSeries::PowerSeries(int order) {
  require_order(order);
  coeffs_.assign(static_cast<std::size_t>(order) + 1, Complex{});
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs, int order) : coeffs_(std::move(coeffs)) {
  require_order(order);
  coeffs_.resize(static_cast<std::size_t>(order) + 1);
  validate();
}

PowerSeries::PowerSeries(std::vector<Complex> coeffs)
    : PowerSeries(coeffs, std::max(static_cast<int>(coeffs.size()) - 1, kMinOrder)) {}

PowerSeries PowerSeries::constant(Complex c, int order) { return PowerSeries({c}, order); }

PowerSeries PowerSeries::identity(int order) { return PowerSeries({0.0, 1.0}, order); }

Complex PowerSeries::operator[](int n) const noexcept {
  if (n < 0 || n > order()) return {};
  return coeffs_[static_cast<std::size_t>(n)];
}

bool PowerSeries::is_normalized(double tol) const noexcept {
  return std::abs(coeffs_[0]) <= tol && std::abs(coeffs_[1] - 1.0) <= tol;
}

PowerSeries PowerSeries::with_order(int order) const {
  std::vector<Complex> c(coeffs_.begin(), coeffs_.begin() + std::min<std::ptrdiff_t>(coeffs_.size(), order + 1));
  return PowerSeries(std::move(c), order);
}

PowerSeries PowerSeries::divided_by_z() const {
  std::vector<Complex> c(coeffs_.begin() + 1, coeffs_.end());
  return PowerSeries(std::move(c), order());
}

PowerSeries PowerSeries::times_z() const {
  std::vector<Complex> c(coeffs_.size());
  std::copy(coeffs_.begin(), coeffs_.end() - 1, c.begin() + 1);
  return PowerSeries(std::move(c), order());
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs) {
  if (rhs.order() > order()) coeffs_.resize(rhs.coeffs_.size());
  for (int n = 0; n <= rhs.order(); ++n) coeffs_[static_cast<std::size_t>(n)] += rhs[n];
  validate();
  return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs) {
  if (rhs.order() > order()) coeffs_.resize(rhs.coeffs_.size());
  for (int n = 0; n <= rhs.order(); ++n) coeffs_[static_cast<std::size_t>(n)] -= rhs[n];
  validate();
  return *this;
}

PowerSeries& PowerSeries::operator*=(Complex scale) {
  for (auto& c : coeffs_) c *= scale;
  validate();
  return *this;
}

PowerSeries operator*(const PowerSeries& lhs, const PowerSeries& rhs) {
  const int order = std::max(lhs.order(), rhs.order());
  const PowerSeries a = lhs.order() == order ? lhs : lhs.with_order(order);
  ReversedBuffer b(order);
  for (int n = 0; n <= order; ++n) b.set(n, rhs[n]);
  const auto b_all = b.latest(order + 1);  // element k is b_{order-k}
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  for (int n = 0; n <= order; ++n) {
    out[static_cast<std::size_t>(n)] =
        kernels::dot(a.coeffs().first(static_cast<std::size_t>(n) + 1),
                     b_all.subspan(static_cast<std::size_t>(order - n)));
  }
  return PowerSeries(std::move(out), order);
}

void PowerSeries::validate() const {
  for (std::size_t n = 0; n < coeffs_.size(); ++n) {
    if (!finite(coeffs_[n])) {
      throw Error(Errc::InvariantViolation, "non-finite coefficient at degree " + std::to_string(n));
    }
  }
}

PowerSeries derivative(const PowerSeries& a) {
  std::vector<Complex> out(static_cast<std::size_t>(a.order()) + 1);
  for (int n = 0; n < a.order(); ++n) out[static_cast<std::size_t>(n)] = double(n + 1) * a[n + 1];
  return PowerSeries(std::move(out), a.order());
}

PowerSeries integral(const PowerSeries& a) {
  std::vector<Complex> out(static_cast<std::size_t>(a.order()) + 1);
  for (int n = 1; n <= a.order(); ++n) out[static_cast<std::size_t>(n)] = a[n - 1] / double(n);
  return PowerSeries(std::move(out), a.order());
}

PowerSeries reciprocal(const PowerSeries& a) {
  const int order = a.order();
  if (std::abs(a[0]) <= kConstantTermFloor) {
    throw Error(Errc::ZeroConstantTerm, "reciprocal of a series with vanishing constant term");
  }
  const Complex inv = 1.0 / a[0];
  ReversedBuffer b(order);
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  out[0] = inv;
  b.set(0, inv);
  for (int n = 1; n <= order; ++n) {
    // sum_{k=1..n} a_k b_{n-k}
    const Complex s = kernels::dot(a.coeffs().subspan(1, static_cast<std::size_t>(n)), b.latest(n));
    out[static_cast<std::size_t>(n)] = -s * inv;
    b.set(n, out[static_cast<std::size_t>(n)]);
  }
  return PowerSeries(std::move(out), order);
}

PowerSeries log(const PowerSeries& a) {
  if (std::abs(a[0]) <= kConstantTermFloor) {
    throw Error(Errc::ZeroConstantTerm, "logarithm of a series with vanishing constant term");
  }
  PowerSeries out = integral(derivative(a) * reciprocal(a));
  return out + PowerSeries::constant(std::log(a[0]), a.order());
}

PowerSeries exp(const PowerSeries& a) {
  const int order = a.order();
  if (std::abs(a[0]) > kConstantTermFloor) {
    throw Error(Errc::NonzeroConstantTerm, "exp requires a zero constant term");
  }
  std::vector<Complex> weighted(static_cast<std::size_t>(order) + 1);
  for (int k = 1; k <= order; ++k) weighted[static_cast<std::size_t>(k)] = double(k) * a[k];
  const std::span<const Complex> ka(weighted);

  ReversedBuffer b(order);
  std::vector<Complex> out(static_cast<std::size_t>(order) + 1);
  out[0] = 1.0;
  b.set(0, 1.0);
  for (int n = 1; n <= order; ++n) {
    // n b_n = sum_{k=1..n} k a_k b_{n-k}
    const Complex s = kernels::dot(ka.subspan(1, static_cast<std::size_t>(n)), b.latest(n));
    out[static_cast<std::size_t>(n)] = s / double(n);
    b.set(n, out[static_cast<std::size_t>(n)]);
  }
  return PowerSeries(std::move(out), order);
}

PowerSeries pow(const PowerSeries& a, Complex c) {
  if (std::abs(a[0]) <= kConstantTermFloor) {
    throw Error(Errc::ZeroConstantTerm, "power of a series with vanishing constant term");
  }
  PowerSeries shifted = log(a);
  shifted -= PowerSeries::constant(shifted[0], a.order());
  return std::pow(a[0], c) * exp(c * shifted);
}

LogDerivatives log_derivative_functionals(const PowerSeries& f) {
  if (std::abs(f[0]) > 1e-12) {
    throw Error(Errc::InvariantViolation, "log-derivative functionals need f(0) = 0");
  }
  const PowerSeries df = derivative(f);
  const PowerSeries f_over_z = f.divided_by_z();
  if (std::abs(f_over_z[0]) <= kConstantTermFloor) {
    throw Error(Errc::ZeroConstantTerm, "f'(0) = 0: f is not normalized");
  }
  PowerSeries p = df * reciprocal(f_over_z);
  // q = (z f')' / f', and (z f')' has coefficients (n+1)^2 a_{n+1}.
  std::vector<Complex> zdf_prime(static_cast<std::size_t>(f.order()) + 1);
  for (int n = 0; n < f.order(); ++n) {
    zdf_prime[static_cast<std::size_t>(n)] = double(n + 1) * double(n + 1) * f[n + 1];
  }
  PowerSeries q = PowerSeries(std::move(zdf_prime), f.order()) * reciprocal(df);
  return {std::move(p), std::move(q)};
}

double tail_estimate(const PowerSeries& a, double radius) noexcept {
  const int top = a.order();
  double worst = 0.0;
  for (int n = std::max(0, top - 3); n <= top; ++n) {
    worst = std::max(worst, std::abs(a[n]) * std::pow(radius, n));
  }
  return worst * double(top) * double(top);
}

SeriesEval evaluate(const PowerSeries& a, Complex z, const EvalLimits& limits) {
  const double radius = std::abs(z);
  check_limits(a, radius, limits);
  const int degree = effective_degree(a.coeffs(), radius);
  EvalResult at;
  kernels::horner_batch(a.coeffs().first(static_cast<std::size_t>(degree) + 1), std::span<const Complex>(&z, 1),
                        std::span<EvalResult>(&at, 1));
  return {at, tail_estimate(a, radius)};
}

std::vector<EvalResult> evaluate(const PowerSeries& a, std::span<const Complex> zs, const EvalLimits& limits) {
  double radius = 0.0;
  for (const Complex z : zs) radius = std::max(radius, std::abs(z));
  check_limits(a, radius, limits);
  const int degree = effective_degree(a.coeffs(), radius);
  std::vector<EvalResult> out(zs.size());
  kernels::horner_batch(a.coeffs().first(static_cast<std::size_t>(degree) + 1), zs, out);
  return out;
}

}  // namespace gft
