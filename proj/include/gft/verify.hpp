#pragma once

// Numerical certification of the convexity radii: a grid/bisection estimate
// of where Re{1 + z T''/T'} first drops to alpha, audits of the classical
// distortion-type bounds, and per-theorem reports comparing the estimate with
// the closed-form radius.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gft/families.hpp"
#include "gft/grid.hpp"
#include "gft/radius.hpp"

namespace gft {

/// Acceptance tolerance for the lower-bound check r_estimate >= r_formula - tol.
inline constexpr double kTolAccept = 1e-3;

struct FunctionPair {
  AnalyticFn f;
  AnalyticFn g;

  std::string label() const { return "f=" + f.label() + ";g=" + g.label(); }
};

struct RingMinimum {
  double value = 0.0;
  double angle = 0.0;
};

/// min over |z| = r of Re{1 + z T''/T'}: n_theta equispaced angles, then one
/// golden-section refinement around the discrete minimizer.
RingMinimum min_real_convexity(const FunctionPair& pair, double r, const GridSpec& grid);

/// Same for a single function's own functional Re{1 + z f''/f'}.
RingMinimum min_real_convexity(const AnalyticFn& f, double r, const GridSpec& grid);

struct RadiusEstimate {
  double radius = 0.0;
  /// min(grid.r_cap, max radius of the evaluators).
  double cap = 0.0;
  /// No sign change up to the cap; the true radius is >= cap.
  bool saturated = false;
  /// First radius at which evaluation failed (pole, truncation), if any.
  std::optional<double> failure_radius;
  std::string failure;
  double worst_angle = 0.0;
};

/// Largest r (to grid.tol) with min_{|z|=r} Re{1 + z T''/T'} > alpha: radial
/// scan with step 1/n_radial, then bisection on the first bracket.
/// Throws HypothesisViolatedAtOrigin if the condition fails next to 0.
RadiusEstimate estimate_radius(const FunctionPair& pair, double alpha, const GridSpec& grid);

/// Radius of convexity of order alpha of f itself.
RadiusEstimate estimate_convexity_radius(const AnalyticFn& f, double alpha, const GridSpec& grid);

enum class LemmaKind { L31, L32, L33, L34, RobertsonVk };

std::string_view to_string(LemmaKind kind) noexcept;

/// One of the bounds
///   L31(gamma)  |z f''/f' - 2|z|^2/(1-|z|^2)| <= 2 gamma |z|/(1-|z|^2)
///   L32(delta)  |-conj(z) + (1-|z|^2) f''/(2 f')| <= delta
///   L33         |z f''/f' - 2r^2/(1-r^2)| <= 4r/(1-r^2)
///   L34(beta)   |f''/f'| <= beta/(1-|z|)
///   Vk(k)       |z f''/f' - 2|z|^2/(1-|z|^2)| <= k|z|/(1-|z|^2)
struct Lemma {
  LemmaKind kind = LemmaKind::L33;
  double param = 0.0;
};

struct AuditResult {
  /// max over the grid of lhs - rhs; <= 0 means the bound holds.
  double max_violation = 0.0;
  Complex argmax{};
  /// min over grid points on the real axis of |lhs - rhs| (sharpness).
  double real_axis_gap = 0.0;
  Complex real_axis_point{};
};

/// Audit on grid.n_radial radii up to grid.r_cap times grid.n_theta angles.
AuditResult lemma_audit(const AnalyticFn& f, const Lemma& lemma, const GridSpec& grid = membership_grid());

/// Lower bound on Re{z f'/f} - alpha for f in S*(A,B) at |z| = r.
double janowski_starlike_lower_bound(Complex A, Complex B, double alpha, double r);
/// Lower bound on Re{1 + z g''/g'} for g in K(A,B) at |z| = r.
double janowski_convex_lower_bound(Complex A, Complex B, double r);

enum class VerifyMode { extremal, sampled };

struct VerifyOptions {
  VerifyMode mode = VerifyMode::extremal;
  int samples = 20;
  std::uint64_t seed = 42;
  int order = 1024;
  int factors = 2;
};

struct RadiusReport {
  RadiusQuery query;
  double r_formula = 0.0;
  Branch branch = Branch::quadratic;
  double r_estimate = 0.0;
  /// r_estimate - min(r_formula, r_cap); see RadiusEstimate::saturated.
  double margin = 0.0;
  double worst_angle = 0.0;
  std::string pair_label;
  GridSpec grid;
  double r_cap = 0.0;
  bool saturated = false;
  std::optional<double> failure_radius;
  std::string note;
  int order = 0;
  std::uint64_t seed = 0;

  bool sound(double tol_accept = kTolAccept) const { return margin >= -tol_accept; }
};

/// Level that min Re{1 + z T''/T'} must exceed: alpha for T41 (convexity of
/// order alpha), 0 for T42-T46, where alpha is the starlikeness order of f.
double convexity_threshold(const RadiusQuery& q) noexcept;

struct HypothesisClasses {
  ClassSpec f;
  ClassSpec g;
  /// Sampled mode draws g as well (T41, T45); otherwise g is the extremal.
  bool sample_g = false;
};

HypothesisClasses hypothesis_classes(const RadiusQuery& q);

/// (f, g) extremal pair for the theorem's hypothesis classes.
FunctionPair extremal_pair(const RadiusQuery& q, int order = kDefaultOrder);

/// Seeds of the f and g members of sampled pair i.
std::pair<std::uint64_t, std::uint64_t> sample_seeds(std::uint64_t seed, int i) noexcept;

/// One report per pair: a single extremal pair, or options.samples seeded
/// sampled pairs (sampled f; sampled g for T41 and T45, extremal g otherwise).
std::vector<RadiusReport> verify_theorem(const RadiusQuery& q, const VerifyOptions& options,
                                         const GridSpec& grid = {});

}  // namespace gft
