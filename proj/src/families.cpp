#include "gft/families.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <memory>
#include <numbers>
#include <sstream>

#include "complex_math.hpp"
#include "gft/error.hpp"
#include "random.hpp"

namespace gft {

namespace {

using detail::expm1;
using detail::log1p;

constexpr std::array<std::pair<ClassTag, std::string_view>, 9> kTagNames{{
    {ClassTag::StarlikeOrder, "StarlikeOrder"},
    {ClassTag::ConvexOrder, "ConvexOrder"},
    {ClassTag::JanowskiStarlike, "JanowskiStarlike"},
    {ClassTag::JanowskiConvex, "JanowskiConvex"},
    {ClassTag::GBeta, "GBeta"},
    {ClassTag::BoundaryRotation, "BoundaryRotation"},
    {ClassTag::UniversalLIF, "UniversalLIF"},
    {ClassTag::LIFOrder, "LIFOrder"},
    {ClassTag::Univalent, "Univalent"},
}};

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidParams, what); }

std::string num(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

std::string num(Complex c) {
  std::ostringstream os;
  os << c.real();
  if (c.imag() != 0.0) os << (c.imag() < 0 ? "" : "+") << c.imag() << "i";
  return os.str();
}

void check_alpha(double alpha) {
  if (!(alpha >= 0.0 && alpha < 1.0)) invalid("alpha must lie in [0, 1), got " + num(alpha));
}

void check_janowski(Complex A, Complex B, bool classical_range) {
  if (classical_range) {
    if (A.imag() != 0.0 || B.imag() != 0.0) invalid("classical Janowski range needs real A and B");
    if (!(-1.0 <= B.real() && B.real() < A.real() && A.real() <= 1.0)) {
      invalid("classical Janowski range needs -1 <= B < A <= 1, got A = " + num(A) + ", B = " + num(B));
    }
    return;
  }
  if (!(std::abs(A) > 1.0)) invalid("Janowski classes need |A| > 1, got |A| = " + num(std::abs(A)));
  if (!(std::abs(B) <= 1.0)) invalid("Janowski classes need |B| <= 1, got |B| = " + num(std::abs(B)));
}

// f = z exp(H): given (H, H', H'') at z returns (f, f', f'').
EvalResult starlike_from_exponent(Complex z, Complex H, Complex H1, Complex H2) {
  const Complex h = std::exp(H);
  return {z * h, h * (1.0 + z * H1), h * (2.0 * H1 + z * (H1 * H1 + H2))};
}

// ((1+z)/(1-z))^{k/2} - 1 over k, with derivatives; the UL_gamma extremal is k = 2 gamma.
EvalResult rotation_extremal(Complex z, double k) {
  const double half = 0.5 * k;
  const Complex lp = log1p(z);
  const Complex lm = log1p(-z);
  const Complex d1 = std::exp((half - 1.0) * lp - (half + 1.0) * lm);
  const Complex d2 = d1 * ((half - 1.0) / (1.0 + z) + (half + 1.0) / (1.0 - z));
  return {expm1(half * (lp - lm)) / k, d1, d2};
}

PowerSeries one_minus_z(int order) { return PowerSeries({1.0, -1.0}, order); }

PowerSeries rotation_series(double k, int order) {
  const PowerSeries one_plus_z({1.0, 1.0}, order);
  return integral(pow(one_plus_z, 0.5 * k - 1.0) * pow(one_minus_z(order), -0.5 * k - 1.0));
}

}  // namespace

std::string_view to_string(ClassTag tag) noexcept {
  for (const auto& [t, name] : kTagNames) {
    if (t == tag) return name;
  }
  return "Unknown";
}

std::optional<ClassTag> class_tag_from_string(std::string_view name) noexcept {
  for (const auto& [t, n] : kTagNames) {
    if (n == name) return t;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// ClassSpec

ClassSpec ClassSpec::starlike(double alpha) {
  ClassSpec s{.tag = ClassTag::StarlikeOrder, .alpha = alpha};
  s.validate();
  return s;
}

ClassSpec ClassSpec::convex(double alpha) {
  ClassSpec s{.tag = ClassTag::ConvexOrder, .alpha = alpha};
  s.validate();
  return s;
}

ClassSpec ClassSpec::janowski_starlike(Complex A, Complex B, bool classical_range) {
  ClassSpec s{.tag = ClassTag::JanowskiStarlike, .A = A, .B = B, .classical_range = classical_range};
  s.validate();
  return s;
}

ClassSpec ClassSpec::janowski_convex(Complex A, Complex B, bool classical_range) {
  ClassSpec s{.tag = ClassTag::JanowskiConvex, .A = A, .B = B, .classical_range = classical_range};
  s.validate();
  return s;
}

ClassSpec ClassSpec::g_beta(double beta) {
  ClassSpec s{.tag = ClassTag::GBeta, .beta = beta};
  s.validate();
  return s;
}

ClassSpec ClassSpec::boundary_rotation(double k) {
  ClassSpec s{.tag = ClassTag::BoundaryRotation, .k = k};
  s.validate();
  return s;
}

ClassSpec ClassSpec::universal_lif(double gamma) {
  ClassSpec s{.tag = ClassTag::UniversalLIF, .gamma = gamma};
  s.validate();
  return s;
}

ClassSpec ClassSpec::lif_order(double delta) {
  ClassSpec s{.tag = ClassTag::LIFOrder, .delta = delta};
  s.validate();
  return s;
}

ClassSpec ClassSpec::univalent() { return ClassSpec{.tag = ClassTag::Univalent}; }

void ClassSpec::validate() const {
  switch (tag) {
    case ClassTag::StarlikeOrder:
    case ClassTag::ConvexOrder:
      check_alpha(alpha);
      break;
    case ClassTag::JanowskiStarlike:
    case ClassTag::JanowskiConvex:
      check_janowski(A, B, classical_range);
      break;
    case ClassTag::GBeta:
      if (!(beta > 0.0 && beta <= 1.0)) invalid("beta must lie in (0, 1], got " + num(beta));
      break;
    case ClassTag::BoundaryRotation:
      if (!(k >= 2.0 && std::isfinite(k))) invalid("k must be >= 2, got " + num(k));
      break;
    case ClassTag::UniversalLIF:
      if (!(gamma >= 1.0 && std::isfinite(gamma))) invalid("gamma must be >= 1, got " + num(gamma));
      break;
    case ClassTag::LIFOrder:
      if (!(delta >= 1.0 && std::isfinite(delta))) invalid("delta must be >= 1, got " + num(delta));
      break;
    case ClassTag::Univalent:
      break;
  }
}

std::string ClassSpec::label() const {
  std::string out(to_string(tag));
  switch (tag) {
    case ClassTag::StarlikeOrder:
    case ClassTag::ConvexOrder: return out + "(" + num(alpha) + ")";
    case ClassTag::JanowskiStarlike:
    case ClassTag::JanowskiConvex: return out + "(" + num(A) + "," + num(B) + ")";
    case ClassTag::GBeta: return out + "(" + num(beta) + ")";
    case ClassTag::BoundaryRotation: return out + "(" + num(k) + ")";
    case ClassTag::UniversalLIF: return out + "(" + num(gamma) + ")";
    case ClassTag::LIFOrder: return out + "(" + num(delta) + ")";
    case ClassTag::Univalent: return out;
  }
  return out;
}

// ---------------------------------------------------------------------------
// AnalyticFn

AnalyticFn::AnalyticFn(std::string label, Evaluator evaluator, double max_radius, std::optional<PowerSeries> series)
    : label_(std::move(label)), evaluator_(std::move(evaluator)), max_radius_(max_radius), series_(std::move(series)) {}

AnalyticFn AnalyticFn::from_series(PowerSeries series, std::string label, EvalLimits limits) {
  auto shared = std::make_shared<const PowerSeries>(std::move(series));
  AnalyticFn fn(
      std::move(label), [shared, limits](Complex z) { return gft::evaluate(*shared, z, limits).at; }, limits.r_max,
      *shared);
  fn.limits_ = limits;
  return fn;
}

EvalResult AnalyticFn::operator()(Complex z) const {
  if (std::abs(z) > max_radius_ + 1e-12) {
    throw Error(Errc::RadiusTooLarge, label_ + ": |z| = " + num(std::abs(z)) + " beyond " + num(max_radius_));
  }
  return evaluator_(z);
}

std::vector<EvalResult> AnalyticFn::evaluate(std::span<const Complex> zs) const {
  if (limits_ && series_) return gft::evaluate(*series_, zs, *limits_);
  std::vector<EvalResult> out;
  out.reserve(zs.size());
  for (const Complex z : zs) out.push_back((*this)(z));
  return out;
}

// ---------------------------------------------------------------------------
// Moebius maps

void MoebiusParams::validate() const {
  if (!(std::abs(a) < 1.0)) invalid("automorphism parameter needs |a| < 1, got |a| = " + num(std::abs(a)));
}

EvalResult MoebiusParams::operator()(Complex z) const {
  const Complex rot = std::polar(1.0, theta);
  const Complex den = 1.0 + std::conj(a) * z;
  const double scale = 1.0 - std::norm(a);
  return {rot * (z + a) / den, rot * scale / (den * den), -2.0 * std::conj(a) * rot * scale / (den * den * den)};
}

MoebiusParams compose(const MoebiusParams& outer, const MoebiusParams& inner) {
  const EvalResult in0 = inner(0.0);
  const EvalResult out_at = outer(in0.value);
  const Complex value0 = out_at.value;
  const Complex slope0 = out_at.d1 * in0.d1;
  const double theta = std::arg(slope0);
  return {value0 * std::polar(1.0, -theta), theta};
}

// ---------------------------------------------------------------------------
// Extremals

AnalyticFn extremal(const ClassSpec& spec, int order) {
  spec.validate();
  const std::string label = "extremal:" + spec.label();
  const PowerSeries z_series = PowerSeries::identity(order);
  switch (spec.tag) {
    case ClassTag::StarlikeOrder:
    case ClassTag::Univalent: {
      const double c = spec.tag == ClassTag::Univalent ? 2.0 : 2.0 * (1.0 - spec.alpha);
      auto eval = [c](Complex z) {
        const Complex w = 1.0 - z;
        return starlike_from_exponent(z, -c * log1p(-z), c / w, c / (w * w));
      };
      PowerSeries s = (z_series * pow(one_minus_z(order), -c)).with_order(order);
      return AnalyticFn(label, eval, 0.999, std::move(s));
    }
    case ClassTag::ConvexOrder: {
      const double c = 2.0 * (1.0 - spec.alpha);
      auto eval = [c](Complex z) {
        const Complex L = log1p(-z);
        const Complex d1 = std::exp(-c * L);
        const Complex value = std::abs(c - 1.0) < 1e-12 ? -L : expm1((1.0 - c) * L) / (c - 1.0);
        return EvalResult{value, d1, d1 * c / (1.0 - z)};
      };
      return AnalyticFn(label, eval, 0.999, integral(pow(one_minus_z(order), -c)));
    }
    case ClassTag::JanowskiStarlike: {
      const Complex A = spec.A, B = spec.B;
      auto eval = [A, B](Complex z) {
        const Complex w = 1.0 + B * z;
        const Complex H = B == 0.0 ? A * z : (A - B) / B * log1p(B * z);
        return starlike_from_exponent(z, H, (A - B) / w, -B * (A - B) / (w * w));
      };
      const PowerSeries core =
          B == 0.0 ? exp(A * z_series) : pow(PowerSeries({1.0, B}, order), (A - B) / B);
      return AnalyticFn(label, eval, 0.999, z_series * core);
    }
    case ClassTag::JanowskiConvex: {
      const Complex A = spec.A, B = spec.B;
      auto eval = [A, B](Complex z) {
        const Complex lw = log1p(B * z);
        const Complex H = B == 0.0 ? A * z : (A - B) / B * lw;
        const Complex d1 = std::exp(H);
        // g = ((1 + Bz)^{A/B} - 1)/A, or (e^{Az} - 1)/A for B = 0.
        return EvalResult{expm1(H + lw) / A, d1, d1 * (A - B) / (1.0 + B * z)};
      };
      const PowerSeries core =
          B == 0.0 ? exp(A * z_series) : pow(PowerSeries({1.0, B}, order), (A - B) / B);
      return AnalyticFn(label, eval, 0.999, integral(core));
    }
    case ClassTag::GBeta: {
      const double beta = spec.beta;
      auto eval = [beta](Complex z) {
        const Complex L = log1p(-z);
        const Complex d1 = std::exp(beta * L);
        return EvalResult{-expm1((beta + 1.0) * L) / (beta + 1.0), d1, -beta * d1 / (1.0 - z)};
      };
      return AnalyticFn(label, eval, 0.999, integral(pow(one_minus_z(order), beta)));
    }
    case ClassTag::BoundaryRotation:
    case ClassTag::UniversalLIF:
    case ClassTag::LIFOrder: {
      const double k = spec.tag == ClassTag::BoundaryRotation ? spec.k
                       : spec.tag == ClassTag::UniversalLIF   ? 2.0 * spec.gamma
                                                              : 2.0 * spec.delta;
      return AnalyticFn(label, [k](Complex z) { return rotation_extremal(z, k); }, 0.999,
                        rotation_series(k, order));
    }
  }
  throw Error(Errc::UnsupportedSpec, "no extremal for " + spec.label());
}

// ---------------------------------------------------------------------------
// Inverse constructions

PowerSeries from_log_derivative(const PowerSeries& p) {
  if (std::abs(p[0] - 1.0) > 1e-12) {
    throw Error(Errc::ConstantTermNotOne, "log-derivative profile needs p(0) = 1, got " + num(p[0]));
  }
  // (p - 1)/s has coefficients p_{n+1}.
  const PowerSeries exponent = integral(p.divided_by_z());
  return exp(exponent).times_z();
}

PowerSeries from_convexity_profile(const PowerSeries& q) {
  if (std::abs(q[0] - 1.0) > 1e-12) {
    throw Error(Errc::ConstantTermNotOne, "convexity profile needs q(0) = 1, got " + num(q[0]));
  }
  return integral(exp(integral(q.divided_by_z())));
}

// ---------------------------------------------------------------------------
// Sampling

SchurWitness SchurWitness::sample(std::uint64_t seed, int factors) {
  detail::UniformSource rng(seed);
  SchurWitness w;
  for (int j = 0; j < factors; ++j) {
    const double radius = 0.8 * std::sqrt(rng.next());
    const double phase = 2.0 * std::numbers::pi * rng.next();
    const double theta = 2.0 * std::numbers::pi * rng.next();
    w.factors_.push_back({std::polar(radius, phase), theta});
  }
  return w;
}

Complex SchurWitness::operator()(Complex z) const {
  Complex out = z;
  for (const auto& f : factors_) out *= std::polar(1.0, f.theta) * (z + f.a) / (1.0 + std::conj(f.a) * z);
  return out;
}

PowerSeries SchurWitness::series(int order) const {
  PowerSeries out = PowerSeries::identity(order);
  for (const auto& f : factors_) {
    const PowerSeries numerator({f.a, 1.0}, order);
    const PowerSeries denominator({1.0, std::conj(f.a)}, order);
    out = out * (std::polar(1.0, f.theta) * (numerator * reciprocal(denominator)));
  }
  return out;
}

PowerSeries schur_sample(std::uint64_t seed, int factors, int order) {
  return SchurWitness::sample(seed, factors).series(order);
}

PowerSeries member_from_witness(const ClassSpec& spec, const PowerSeries& w) {
  spec.validate();
  const int order = w.order();
  const PowerSeries one = PowerSeries::constant(1.0, order);
  switch (spec.tag) {
    case ClassTag::StarlikeOrder:
    case ClassTag::ConvexOrder: {
      // (1 + (1 - 2 alpha) w)/(1 - w) maps the disc onto Re > alpha.
      const PowerSeries profile = (one + (1.0 - 2.0 * spec.alpha) * w) * reciprocal(one - w);
      return spec.tag == ClassTag::StarlikeOrder ? from_log_derivative(profile) : from_convexity_profile(profile);
    }
    case ClassTag::JanowskiStarlike:
    case ClassTag::JanowskiConvex: {
      const PowerSeries profile = (one + spec.A * w) * reciprocal(one + spec.B * w);
      return spec.tag == ClassTag::JanowskiStarlike ? from_log_derivative(profile)
                                                    : from_convexity_profile(profile);
    }
    case ClassTag::GBeta: {
      // 1 - beta w/(1 - w) maps the disc onto Re < 1 + beta/2.
      const PowerSeries profile = one - spec.beta * (w * reciprocal(one - w));
      return from_convexity_profile(profile);
    }
    default:
      throw Error(Errc::UnsupportedSpec, "no sampler for " + spec.label());
  }
}

PowerSeries sample_member(const ClassSpec& spec, std::uint64_t seed, const SampleOptions& options) {
  PowerSeries f = member_from_witness(spec, schur_sample(seed, options.factors, options.order));
  const double margin = check_membership(f, spec, options.check_radius);
  if (!(margin >= -1e-8)) {
    throw Error(Errc::MembershipCheckFailed, spec.label() + " sample (seed " + std::to_string(seed) +
                                                 ") has margin " + num(margin));
  }
  return f;
}

PowerSeries random_normalized_series(std::uint64_t seed, int order) {
  detail::UniformSource rng(seed);
  std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
  c[1] = 1.0;
  for (int n = 2; n <= order; ++n) {
    c[static_cast<std::size_t>(n)] = std::polar(std::sqrt(rng.next()), 2.0 * std::numbers::pi * rng.next());
  }
  return PowerSeries(std::move(c), order);
}

// ---------------------------------------------------------------------------
// Membership

double check_membership(const AnalyticFn& f, const ClassSpec& spec, double r, const GridSpec& grid) {
  spec.validate();
  if (r > f.max_radius() + 1e-12) {
    throw Error(Errc::RadiusTooLarge, f.label() + ": membership radius " + num(r) + " beyond " +
                                          num(f.max_radius()));
  }
  const int n_theta = grid.n_theta;

  if (spec.tag == ClassTag::BoundaryRotation) {
    const auto z = ring_points(r, n_theta);
    const auto vals = f.evaluate(z);
    double total = 0.0;
    for (std::size_t j = 0; j < z.size(); ++j) {
      total += std::abs((1.0 + z[j] * vals[j].d2 / vals[j].d1).real());
    }
    return spec.k * std::numbers::pi - 2.0 * std::numbers::pi * total / n_theta;
  }

  double margin = std::numeric_limits<double>::infinity();
  for (int i = 1; i <= grid.n_radial; ++i) {
    const double rho = r * i / grid.n_radial;
    const auto z = ring_points(rho, n_theta);
    const auto vals = f.evaluate(z);
    for (std::size_t j = 0; j < z.size(); ++j) {
      const EvalResult& v = vals[j];
      const Complex p = z[j] * v.d1 / v.value;
      const Complex q = 1.0 + z[j] * v.d2 / v.d1;
      double slack = 0.0;
      switch (spec.tag) {
        case ClassTag::StarlikeOrder: slack = p.real() - spec.alpha; break;
        case ClassTag::ConvexOrder: slack = q.real() - spec.alpha; break;
        case ClassTag::JanowskiStarlike:
        case ClassTag::JanowskiConvex: {
          // Schwarz witness of the subordination: w = (h - 1)/(A - B h) must satisfy |w| <= |z|.
          const Complex h = spec.tag == ClassTag::JanowskiStarlike ? p : q;
          const Complex w = (h - 1.0) / (spec.A - spec.B * h);
          slack = std::isfinite(std::abs(w)) ? rho - std::abs(w) : -std::numeric_limits<double>::infinity();
          break;
        }
        case ClassTag::GBeta: slack = 1.0 + 0.5 * spec.beta - q.real(); break;
        case ClassTag::UniversalLIF:
        case ClassTag::LIFOrder:
        case ClassTag::Univalent: {
          const double bound = spec.tag == ClassTag::UniversalLIF ? spec.gamma
                               : spec.tag == ClassTag::LIFOrder   ? spec.delta
                                                                  : 2.0;
          const double functional = std::abs(-std::conj(z[j]) + 0.5 * (1.0 - rho * rho) * v.d2 / v.d1);
          slack = bound - functional;
          break;
        }
        case ClassTag::BoundaryRotation: break;
      }
      if (!std::isfinite(slack)) slack = -std::numeric_limits<double>::infinity();
      margin = std::min(margin, slack);
    }
  }
  return margin;
}

double check_membership(const PowerSeries& f, const ClassSpec& spec, double r, const GridSpec& grid) {
  return check_membership(AnalyticFn::from_series(f, "series"), spec, r, grid);
}

// ---------------------------------------------------------------------------
// Linear-invariant transform

AnalyticFn lif_transform(const AnalyticFn& f, const MoebiusParams& phi) {
  phi.validate();
  const EvalResult phi0 = phi(0.0);
  const EvalResult f_at = f(phi0.value);
  const Complex base = f_at.value;
  const Complex scale = f_at.d1 * phi0.d1;
  auto eval = [f, phi, base, scale](Complex z) {
    const EvalResult m = phi(z);
    const EvalResult v = f(m.value);
    return EvalResult{(v.value - base) / scale, v.d1 * m.d1 / scale,
                      (v.d2 * m.d1 * m.d1 + v.d1 * m.d2) / scale};
  };
  return AnalyticFn("lif:" + f.label(), eval, f.max_radius());
}

}  // namespace gft
