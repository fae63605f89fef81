#pragma once

// The Volterra-type operator T_g f = int_0^z f(s) g'(s) ds, its companion
// J_g f = int_0^z f'(s) g(s) ds and multiplication M_g f = g f.
//
// For normalized f and g, J_g f + T_g f = g f. T_g f is not normalized
// (T'(0) = f(0) g'(0) = 0), but 1 + z T''/T' is defined through T' = f g'.

#include <functional>
#include <optional>
#include <span>

#include "gft/families.hpp"
#include "gft/series.hpp"

namespace gft {

struct OperatorResult {
  /// Present when both inputs carry series.
  std::optional<PowerSeries> series;
  /// (T, T', T'') at a point.
  std::function<EvalResult(Complex)> evaluator;
};

OperatorResult t_g(const PowerSeries& f, const PowerSeries& g);
OperatorResult j_g(const PowerSeries& f, const PowerSeries& g);
OperatorResult m_g(const PowerSeries& f, const PowerSeries& g);

/// Closed-form composition; the value T(z) is a 32-node Gauss-Legendre
/// quadrature of f g' along [0, z], derivatives are exact products.
OperatorResult t_g(const AnalyticFn& f, const AnalyticFn& g);
OperatorResult j_g(const AnalyticFn& f, const AnalyticFn& g);
OperatorResult m_g(const AnalyticFn& f, const AnalyticFn& g);

/// 1 + z T''/T' = z f'/f + z g''/g' + 1 from (f, f', f'') and (g, g', g'')
/// at z; returns 2 at z = 0. Throws PoleAtEvaluationPoint when f(z)/z or
/// g'(z) vanishes (tolerance 1e-12).
Complex convexity_functional_T(const EvalResult& f, const EvalResult& g, Complex z);
Complex convexity_functional_T(const AnalyticFn& f, const AnalyticFn& g, Complex z);

/// Nodes and weights of the 32-point Gauss-Legendre rule on [-1, 1].
std::span<const double> gauss_legendre_nodes();
std::span<const double> gauss_legendre_weights();

/// int_0^z h(s) ds along the straight segment.
Complex integrate_segment(const std::function<Complex(Complex)>& h, Complex z);

}  // namespace gft
