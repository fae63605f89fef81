#pragma once

// Members of the classical subclasses of normalized analytic functions on the
// unit disc: closed-form extremals, seeded random members built from Schur
// functions, numerical membership checks and the Koebe transform over disc
// automorphisms.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gft/grid.hpp"
#include "gft/series.hpp"

namespace gft {

enum class ClassTag {
  StarlikeOrder,     // Re{z f'/f} > alpha
  ConvexOrder,       // Re{1 + z f''/f'} > alpha
  JanowskiStarlike,  // z f'/f subordinate to (1 + Az)/(1 + Bz)
  JanowskiConvex,    // 1 + z f''/f' subordinate to (1 + Az)/(1 + Bz)
  GBeta,             // Re{1 + z f''/f'} < 1 + beta/2
  BoundaryRotation,  // boundary rotation at most k pi
  UniversalLIF,      // universal linear-invariant family of order gamma
  LIFOrder,          // linear-invariant family of order delta
  Univalent,
};

std::string_view to_string(ClassTag tag) noexcept;
std::optional<ClassTag> class_tag_from_string(std::string_view name) noexcept;

/// A function class with its parameters. Only the parameters relevant to the
/// tag are meaningful; the factories validate ranges.
struct ClassSpec {
  ClassTag tag = ClassTag::Univalent;
  double alpha = 0.0;
  Complex A{};
  Complex B{};
  double beta = 0.0;
  double k = 0.0;
  double gamma = 0.0;
  double delta = 0.0;
  /// Janowski classes only: admit the classical real range -1 <= B < A <= 1
  /// instead of |A| > 1, |B| <= 1.
  bool classical_range = false;

  static ClassSpec starlike(double alpha);
  static ClassSpec convex(double alpha);
  static ClassSpec janowski_starlike(Complex A, Complex B, bool classical_range = false);
  static ClassSpec janowski_convex(Complex A, Complex B, bool classical_range = false);
  static ClassSpec g_beta(double beta);
  static ClassSpec boundary_rotation(double k);
  static ClassSpec universal_lif(double gamma);
  static ClassSpec lif_order(double delta);
  static ClassSpec univalent();

  /// Throws InvalidParams naming the violated range.
  void validate() const;

  std::string label() const;
};

/// A normalized analytic function given by an evaluator of (f, f', f'').
class AnalyticFn {
 public:
  using Evaluator = std::function<EvalResult(Complex)>;

  AnalyticFn(std::string label, Evaluator evaluator, double max_radius = 0.999,
             std::optional<PowerSeries> series = std::nullopt);

  /// Evaluates through the series engine (batched Horner kernel); limited to
  /// |z| <= limits.r_max.
  static AnalyticFn from_series(PowerSeries series, std::string label, EvalLimits limits = {});

  /// Throws RadiusTooLarge for |z| > max_radius().
  EvalResult operator()(Complex z) const;
  std::vector<EvalResult> evaluate(std::span<const Complex> zs) const;

  const std::string& label() const noexcept { return label_; }
  double max_radius() const noexcept { return max_radius_; }
  const std::optional<PowerSeries>& series() const noexcept { return series_; }
  bool series_backed() const noexcept { return limits_.has_value(); }

 private:
  std::string label_;
  Evaluator evaluator_;
  double max_radius_;
  std::optional<PowerSeries> series_;
  std::optional<EvalLimits> limits_;
};

/// Disc automorphism z -> e^{i theta} (z + a)/(1 + conj(a) z).
struct MoebiusParams {
  Complex a{};
  double theta = 0.0;

  void validate() const;
  /// (phi, phi', phi'') at z.
  EvalResult operator()(Complex z) const;
};

/// The automorphism outer o inner, in the same parametrization.
MoebiusParams compose(const MoebiusParams& outer, const MoebiusParams& inner);

/// Closed-form extremal of the class, with its series attached at `order`.
///   StarlikeOrder(a)     z/(1-z)^{2(1-a)}
///   ConvexOrder(a)       primitive of (1-z)^{-2(1-a)}
///   JanowskiStarlike     z (1+Bz)^{(A-B)/B}, or z e^{Az} for B = 0
///   JanowskiConvex       primitive of (1+Bz)^{(A-B)/B}, or of e^{Az}
///   GBeta(b)             primitive of (1-z)^b
///   Univalent            Koebe z/(1-z)^2
///   BoundaryRotation(k)  primitive of (1+z)^{k/2-1} (1-z)^{-k/2-1}
///   UniversalLIF(g)      (1/(2g)) [((1+z)/(1-z))^g - 1]; LIFOrder(d) likewise
AnalyticFn extremal(const ClassSpec& spec, int order = kDefaultOrder);

/// Normalized f with z f'/f = p, i.e. f = z exp(int_0^z (p(s) - 1)/s ds).
PowerSeries from_log_derivative(const PowerSeries& p);

/// Normalized g with 1 + z g''/g' = q: g' = exp(int_0^z (q(s) - 1)/s ds).
PowerSeries from_convexity_profile(const PowerSeries& q);

/// Schur-type witness z * prod_j e^{i theta_j} (z + a_j)/(1 + conj(a_j) z) with
/// |a_j| <= 0.8; satisfies w(0) = 0 and |w(z)| <= |z|.
class SchurWitness {
 public:
  struct Factor {
    Complex a;
    double theta;
  };

  static SchurWitness sample(std::uint64_t seed, int factors);

  const std::vector<Factor>& factors() const noexcept { return factors_; }
  Complex operator()(Complex z) const;
  PowerSeries series(int order) const;

 private:
  std::vector<Factor> factors_;
};

PowerSeries schur_sample(std::uint64_t seed, int factors, int order = kDefaultOrder);

struct SampleOptions {
  int order = 1024;
  int factors = 2;
  double check_radius = 0.9;
};

/// Member of `spec` whose defining functional is the class's half-plane or
/// Janowski map composed with the witness w.
PowerSeries member_from_witness(const ClassSpec& spec, const PowerSeries& witness);

/// Seeded random member; re-verified with check_membership at
/// options.check_radius before it is returned (MembershipCheckFailed otherwise).
/// Supported tags: StarlikeOrder, ConvexOrder, JanowskiStarlike,
/// JanowskiConvex, GBeta.
PowerSeries sample_member(const ClassSpec& spec, std::uint64_t seed, const SampleOptions& options = {});

/// Worst-case slack of the class's defining inequality over the grid points
/// with |z| <= r (positive: satisfied). BoundaryRotation reports k pi minus the
/// trapezoid value of the integral of |Re{1 + z f''/f'}| on |z| = r; the
/// linear-invariant classes report the order minus the grid supremum of
/// |-conj(z) + (1 - |z|^2) f''/(2 f')|. Univalent uses the latter with order 2
/// (a necessary condition only).
double check_membership(const AnalyticFn& f, const ClassSpec& spec, double r,
                        const GridSpec& grid = membership_grid());
double check_membership(const PowerSeries& f, const ClassSpec& spec, double r,
                        const GridSpec& grid = membership_grid());

/// (f(phi(z)) - f(phi(0))) / (f'(phi(0)) phi'(0)).
AnalyticFn lif_transform(const AnalyticFn& f, const MoebiusParams& phi);

/// Random normalized series with coefficients a_n (n >= 2) uniform in the
/// unit disc. Not a member of any particular class.
PowerSeries random_normalized_series(std::uint64_t seed, int order);

}  // namespace gft
