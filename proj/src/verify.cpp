#include "gft/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "gft/error.hpp"
#include "gft/volterra.hpp"
#include "random.hpp"

namespace gft {

namespace {

using RingValues = std::function<std::vector<double>(std::span<const Complex>)>;

// Re of the functional at each point; a single-point call is used by the
// golden-section refinement.
RingMinimum ring_minimum(const RingValues& values, double r, int n_theta) {
  const auto z = ring_points(r, n_theta);
  const auto re = values(z);
  const auto it = std::min_element(re.begin(), re.end());
  const auto j = static_cast<int>(it - re.begin());
  const double h = 2.0 * std::numbers::pi / n_theta;

  auto at = [&](double theta) {
    const Complex p = std::polar(r, theta);
    return values(std::span<const Complex>(&p, 1)).front();
  };
  constexpr double inv_phi = 0.6180339887498949;
  double a = (j - 1) * h, b = (j + 1) * h;
  double x1 = b - inv_phi * (b - a), x2 = a + inv_phi * (b - a);
  double f1 = at(x1), f2 = at(x2);
  for (int iter = 0; iter < 40; ++iter) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = at(x1);
    } else {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = at(x2);
    }
  }
  RingMinimum best{*it, j * h};
  if (f1 < best.value) best = {f1, x1};
  if (f2 < best.value) best = {f2, x2};
  best.angle = std::remainder(best.angle, 2.0 * std::numbers::pi);
  if (best.angle < 0.0) best.angle += 2.0 * std::numbers::pi;
  return best;
}

RingValues pair_values(const FunctionPair& pair) {
  return [&pair](std::span<const Complex> z) {
    const auto fv = pair.f.evaluate(z);
    const auto gv = pair.g.evaluate(z);
    std::vector<double> out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) out[j] = convexity_functional_T(fv[j], gv[j], z[j]).real();
    return out;
  };
}

RingValues single_values(const AnalyticFn& f) {
  return [&f](std::span<const Complex> z) {
    const auto fv = f.evaluate(z);
    std::vector<double> out(z.size());
    for (std::size_t j = 0; j < z.size(); ++j) {
      if (std::abs(fv[j].d1) <= 1e-12) throw Error(Errc::PoleAtEvaluationPoint, "f' vanishes");
      out[j] = (1.0 + z[j] * fv[j].d2 / fv[j].d1).real();
    }
    return out;
  };
}

RadiusEstimate scan(const RingValues& values, double alpha, double cap, const GridSpec& grid) {
  grid.validate();
  auto excess = [&](double r) { return ring_minimum(values, r, grid.n_theta); };

  constexpr double kNearOrigin = 1e-4;
  if (!(excess(std::min(kNearOrigin, cap)).value - alpha > 0.0)) {
    throw Error(Errc::HypothesisViolatedAtOrigin, "convexity functional is not above alpha next to 0");
  }

  RadiusEstimate out;
  out.cap = cap;
  const double step = 1.0 / grid.n_radial;
  double good = 0.0;
  double good_angle = 0.0;
  for (int j = 1;; ++j) {
    const double r = std::min(j * step, cap);
    RingMinimum m;
    try {
      m = excess(r);
    } catch (const Error& e) {
      out.radius = good;
      out.failure_radius = r;
      out.failure = e.what();
      out.worst_angle = good_angle;
      return out;
    }
    if (m.value - alpha <= 0.0) {
      double lo = good, hi = r;
      while (hi - lo > grid.tol) {
        const double mid = 0.5 * (lo + hi);
        try {
          const RingMinimum mm = excess(mid);
          if (mm.value - alpha > 0.0) {
            lo = mid;
            good_angle = mm.angle;
          } else {
            hi = mid;
          }
        } catch (const Error& e) {
          hi = mid;
          if (!out.failure_radius) {
            out.failure_radius = mid;
            out.failure = e.what();
          }
        }
      }
      out.radius = lo;
      out.worst_angle = good_angle;
      return out;
    }
    good = r;
    good_angle = m.angle;
    if (r >= cap) break;
  }
  out.radius = cap;
  out.saturated = true;
  out.worst_angle = good_angle;
  return out;
}

struct Bound {
  double lhs;
  double rhs;
};

Bound lemma_sides(const Lemma& lemma, Complex z, const EvalResult& v) {
  const double r = std::abs(z);
  const double r2 = r * r;
  const Complex ratio = v.d2 / v.d1;
  switch (lemma.kind) {
    case LemmaKind::L31:
      return {std::abs(z * ratio - 2.0 * r2 / (1.0 - r2)), 2.0 * lemma.param * r / (1.0 - r2)};
    case LemmaKind::L32:
      return {std::abs(-std::conj(z) + 0.5 * (1.0 - r2) * ratio), lemma.param};
    case LemmaKind::L33:
      return {std::abs(z * ratio - 2.0 * r2 / (1.0 - r2)), 4.0 * r / (1.0 - r2)};
    case LemmaKind::L34:
      return {std::abs(ratio), lemma.param / (1.0 - r)};
    case LemmaKind::RobertsonVk:
      return {std::abs(z * ratio - 2.0 * r2 / (1.0 - r2)), lemma.param * r / (1.0 - r2)};
  }
  return {0.0, 0.0};
}

ClassSpec f_class(const RadiusQuery& q) {
  if (q.theorem == Theorem::T41) return ClassSpec::janowski_starlike(q.A, q.B);
  return ClassSpec::starlike(q.alpha);
}

ClassSpec g_class(const RadiusQuery& q) {
  switch (q.theorem) {
    case Theorem::T41: return ClassSpec::janowski_convex(q.A, q.B);
    case Theorem::T42: return ClassSpec::universal_lif(q.gamma);
    case Theorem::T43: return ClassSpec::lif_order(1.0);
    case Theorem::T44: return ClassSpec::univalent();
    case Theorem::T45: return ClassSpec::g_beta(q.beta);
    case Theorem::T46: return ClassSpec::boundary_rotation(q.k);
  }
  throw Error(Errc::UnsupportedSpec, "unknown theorem");
}


}  // namespace

RingMinimum min_real_convexity(const FunctionPair& pair, double r, const GridSpec& grid) {
  return ring_minimum(pair_values(pair), r, grid.n_theta);
}

RingMinimum min_real_convexity(const AnalyticFn& f, double r, const GridSpec& grid) {
  return ring_minimum(single_values(f), r, grid.n_theta);
}

RadiusEstimate estimate_radius(const FunctionPair& pair, double alpha, const GridSpec& grid) {
  const double cap = std::min({grid.r_cap, pair.f.max_radius(), pair.g.max_radius()});
  return scan(pair_values(pair), alpha, cap, grid);
}

RadiusEstimate estimate_convexity_radius(const AnalyticFn& f, double alpha, const GridSpec& grid) {
  return scan(single_values(f), alpha, std::min(grid.r_cap, f.max_radius()), grid);
}

std::string_view to_string(LemmaKind kind) noexcept {
  switch (kind) {
    case LemmaKind::L31: return "L31";
    case LemmaKind::L32: return "L32";
    case LemmaKind::L33: return "L33";
    case LemmaKind::L34: return "L34";
    case LemmaKind::RobertsonVk: return "RobertsonVk";
  }
  return "unknown";
}

AuditResult lemma_audit(const AnalyticFn& f, const Lemma& lemma, const GridSpec& grid) {
  AuditResult out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  out.real_axis_gap = std::numeric_limits<double>::infinity();
  const int half_turn = grid.n_theta / 2;
  for (int i = 1; i <= grid.n_radial; ++i) {
    const double rho = grid.r_cap * i / grid.n_radial;
    auto z = ring_points(rho, grid.n_theta);
    z[0] = rho;
    if (grid.n_theta % 2 == 0) z[static_cast<std::size_t>(half_turn)] = -rho;
    const auto vals = f.evaluate(z);
    for (std::size_t j = 0; j < z.size(); ++j) {
      const Bound b = lemma_sides(lemma, z[j], vals[j]);
      const double violation = b.lhs - b.rhs;
      if (violation > out.max_violation) {
        out.max_violation = violation;
        out.argmax = z[j];
      }
      if (z[j].imag() == 0.0 && std::abs(violation) < out.real_axis_gap) {
        out.real_axis_gap = std::abs(violation);
        out.real_axis_point = z[j];
      }
    }
  }
  return out;
}

double janowski_starlike_lower_bound(Complex A, Complex B, double alpha, double r) {
  const double re_ab = (A * std::conj(B)).real();
  const double b2 = std::norm(B);
  return (1.0 - alpha - std::abs(B - A) * r - (re_ab - alpha * b2) * r * r) / (1.0 - b2 * r * r);
}

double janowski_convex_lower_bound(Complex A, Complex B, double r) {
  return janowski_starlike_lower_bound(A, B, 0.0, r);
}

double convexity_threshold(const RadiusQuery& q) noexcept { return q.theorem == Theorem::T41 ? q.alpha : 0.0; }

std::pair<std::uint64_t, std::uint64_t> sample_seeds(std::uint64_t seed, int i) noexcept {
  const auto index = 2 * static_cast<std::uint64_t>(i);
  return {detail::derive_seed(seed, index), detail::derive_seed(seed, index + 1)};
}

HypothesisClasses hypothesis_classes(const RadiusQuery& q) {
  q.validate();
  return {f_class(q), g_class(q), q.theorem == Theorem::T41 || q.theorem == Theorem::T45};
}

FunctionPair extremal_pair(const RadiusQuery& q, int order) {
  q.validate();
  return {extremal(f_class(q), order), extremal(g_class(q), order)};
}

std::vector<RadiusReport> verify_theorem(const RadiusQuery& q, const VerifyOptions& options,
                                         const GridSpec& grid) {
  q.validate();
  grid.validate();
  const RadiusValue formula = radius_formula(q);

  std::vector<FunctionPair> pairs;
  if (options.mode == VerifyMode::extremal) {
    pairs.push_back(extremal_pair(q));
  } else {
    if (options.samples < 0) throw Error(Errc::InvalidParams, "sample count must be >= 0");
    const auto [fs, gs, sample_g] = hypothesis_classes(q);
    const SampleOptions sample{options.order, options.factors, 0.9};
    const AnalyticFn g_extremal = extremal(gs);
    for (int i = 0; i < options.samples; ++i) {
      const auto [f_seed, g_seed] = sample_seeds(options.seed, i);
      AnalyticFn f = AnalyticFn::from_series(sample_member(fs, f_seed, sample),
                                             "sample:" + fs.label() + "#" + std::to_string(i));
      AnalyticFn g = sample_g
                         ? AnalyticFn::from_series(sample_member(gs, g_seed, sample),
                                                   "sample:" + gs.label() + "#" + std::to_string(i))
                         : g_extremal;
      pairs.push_back({std::move(f), std::move(g)});
    }
  }

  std::vector<RadiusReport> reports;
  reports.reserve(pairs.size());
  for (const auto& pair : pairs) {
    const RadiusEstimate est = estimate_radius(pair, convexity_threshold(q), grid);
    RadiusReport rep;
    rep.query = q;
    rep.r_formula = formula.r;
    rep.branch = formula.branch;
    rep.r_estimate = est.radius;
    rep.margin = est.radius - std::min(formula.r, est.cap);
    rep.worst_angle = est.worst_angle;
    rep.pair_label = pair.label();
    rep.grid = grid;
    rep.r_cap = est.cap;
    rep.saturated = est.saturated;
    rep.failure_radius = est.failure_radius;
    if (est.failure_radius) rep.note = est.failure;
    if (q.theorem == Theorem::T41) {
      if (!rep.note.empty()) rep.note += "; ";
      rep.note += "Janowski domain |A| > 1, |B| <= 1 as hypothesized; classical -1 <= B < A <= 1 not covered";
    }
    rep.order = options.mode == VerifyMode::sampled ? options.order : kDefaultOrder;
    rep.seed = options.seed;
    reports.push_back(std::move(rep));
  }
  return reports;
}

}  // namespace gft
