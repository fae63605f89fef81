#include "gft/volterra.hpp"

#include <array>
#include <cmath>
#include <memory>
#include <numbers>

#include "gft/error.hpp"

namespace gft {

namespace {

constexpr int kNodes = 32;

struct GaussLegendre {
  std::array<double, kNodes> x{};
  std::array<double, kNodes> w{};

  GaussLegendre() {
    for (int i = 0; i < kNodes; ++i) {
      double t = std::cos(std::numbers::pi * (i + 0.75) / (kNodes + 0.5));
      double dp = 0.0;
      for (int iter = 0; iter < 100; ++iter) {
        double p0 = 1.0, p1 = t;
        for (int n = 2; n <= kNodes; ++n) {
          const double p2 = ((2.0 * n - 1.0) * t * p1 - (n - 1.0) * p0) / n;
          p0 = p1;
          p1 = p2;
        }
        dp = kNodes * (t * p1 - p0) / (t * t - 1.0);
        const double step = p1 / dp;
        t -= step;
        if (std::abs(step) < 1e-16) break;
      }
      x[static_cast<std::size_t>(i)] = t;
      w[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - t * t) * dp * dp);
    }
  }
};

const GaussLegendre& rule() {
  static const GaussLegendre r;
  return r;
}

OperatorResult from_series(PowerSeries s) {
  auto shared = std::make_shared<const PowerSeries>(s);
  return {std::move(s), [shared](Complex z) { return evaluate(*shared, z).at; }};
}

std::optional<PowerSeries> both_series(const AnalyticFn& f, const AnalyticFn& g,
                                       PowerSeries (*op)(const PowerSeries&, const PowerSeries&)) {
  if (!f.series() || !g.series()) return std::nullopt;
  return op(*f.series(), *g.series());
}

PowerSeries t_series(const PowerSeries& f, const PowerSeries& g) { return integral(f * derivative(g)); }
PowerSeries j_series(const PowerSeries& f, const PowerSeries& g) { return integral(derivative(f) * g); }
PowerSeries m_series(const PowerSeries& f, const PowerSeries& g) { return f * g; }

}  // namespace

std::span<const double> gauss_legendre_nodes() { return rule().x; }
std::span<const double> gauss_legendre_weights() { return rule().w; }

Complex integrate_segment(const std::function<Complex(Complex)>& h, Complex z) {
  const auto& r = rule();
  Complex sum = 0.0;
  for (int i = 0; i < kNodes; ++i) {
    const double t = 0.5 * (r.x[static_cast<std::size_t>(i)] + 1.0);
    sum += r.w[static_cast<std::size_t>(i)] * h(t * z);
  }
  return 0.5 * z * sum;
}

OperatorResult t_g(const PowerSeries& f, const PowerSeries& g) { return from_series(t_series(f, g)); }
OperatorResult j_g(const PowerSeries& f, const PowerSeries& g) { return from_series(j_series(f, g)); }
OperatorResult m_g(const PowerSeries& f, const PowerSeries& g) { return from_series(m_series(f, g)); }

OperatorResult t_g(const AnalyticFn& f, const AnalyticFn& g) {
  auto eval = [f, g](Complex z) {
    const EvalResult fv = f(z), gv = g(z);
    const Complex value = integrate_segment([&](Complex s) { return f(s).value * g(s).d1; }, z);
    return EvalResult{value, fv.value * gv.d1, fv.d1 * gv.d1 + fv.value * gv.d2};
  };
  return {both_series(f, g, t_series), eval};
}

OperatorResult j_g(const AnalyticFn& f, const AnalyticFn& g) {
  auto eval = [f, g](Complex z) {
    const EvalResult fv = f(z), gv = g(z);
    const Complex value = integrate_segment([&](Complex s) { return f(s).d1 * g(s).value; }, z);
    return EvalResult{value, fv.d1 * gv.value, fv.d2 * gv.value + fv.d1 * gv.d1};
  };
  return {both_series(f, g, j_series), eval};
}

OperatorResult m_g(const AnalyticFn& f, const AnalyticFn& g) {
  auto eval = [f, g](Complex z) {
    const EvalResult fv = f(z), gv = g(z);
    return EvalResult{fv.value * gv.value, fv.d1 * gv.value + fv.value * gv.d1,
                      fv.d2 * gv.value + 2.0 * fv.d1 * gv.d1 + fv.value * gv.d2};
  };
  return {both_series(f, g, m_series), eval};
}

Complex convexity_functional_T(const EvalResult& f, const EvalResult& g, Complex z) {
  if (z == 0.0) return 2.0;
  if (std::abs(f.value) <= 1e-12 * std::abs(z)) {
    throw Error(Errc::PoleAtEvaluationPoint, "f vanishes at the evaluation point");
  }
  if (std::abs(g.d1) <= 1e-12) {
    throw Error(Errc::PoleAtEvaluationPoint, "g' vanishes at the evaluation point");
  }
  return z * f.d1 / f.value + z * g.d2 / g.d1 + 1.0;
}

Complex convexity_functional_T(const AnalyticFn& f, const AnalyticFn& g, Complex z) {
  if (z == 0.0) return 2.0;
  return convexity_functional_T(f(z), g(z), z);
}

}  // namespace gft
