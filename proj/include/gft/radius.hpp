#pragma once

// Closed-form radii of convexity of T_g f for the six hypothesis pairs
// (f-class, g-class), and an independent bisection oracle for the
// polynomials whose first positive root defines each radius.

#include <optional>
#include <string_view>

#include "gft/kernels.hpp"

namespace gft {

enum class Theorem { T41, T42, T43, T44, T45, T46 };

std::string_view to_string(Theorem t) noexcept;
/// Accepts "t41".."t46" (any case) and "T41".."T46".
std::optional<Theorem> theorem_from_string(std::string_view name) noexcept;

enum class Branch { quadratic, linear, whole_disc };

std::string_view to_string(Branch b) noexcept;

/// Which parameters matter depends on the theorem:
///   T41  f in S*(A,B), g in K(A,B)         alpha, A, B   (|A| > 1, |B| <= 1)
///   T42  f in S*(alpha), g in UL_gamma     alpha, gamma  (gamma >= 1)
///   T43  f in S*(alpha), g in LIF order 1  alpha
///   T44  f in S*(alpha), g univalent       alpha
///   T45  f in S*(alpha), g in G(beta)      alpha, beta   (0 < beta <= 1)
///   T46  f in S*(alpha), g in V_k          alpha, k      (k >= 2)
struct RadiusQuery {
  Theorem theorem = Theorem::T44;
  double alpha = 0.0;
  Complex A{2.0, 0.0};
  Complex B{1.0, 0.0};
  double gamma = 1.0;
  double beta = 1.0;
  double k = 2.0;

  /// Throws InvalidParams naming the violated range.
  void validate() const;
};

struct RadiusValue {
  double r = 0.0;
  Branch branch = Branch::quadratic;
};

/// Radius for f in S*(A,B), g in K(A,B): the first positive root of
///   phi(r) = 2 - alpha - 2|B-A| r - (2 Re{A conj(B)} - alpha |B|^2) r^2,
/// i.e. (|B-A| - |(alpha-1)B - A|)/(alpha|B|^2 - 2 Re{A conj(B)}) for B != 0
/// and (2 - alpha)/(2|A|) for B = 0.
RadiusValue radius_janowski(Complex A, Complex B, double alpha);

RadiusValue radius_formula(const RadiusQuery& q);

/// c0 + c1 r + c2 r^2.
struct Quadratic {
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  /// Evaluated about r = 1 for r > 1/2, where the radii cluster.
  double operator()(double r) const noexcept;
};

/// The positivity polynomial whose first root on (0, 1] is the radius.
Quadratic proof_polynomial(const RadiusQuery& q);

struct OracleRoot {
  double r = 1.0;
  bool whole_disc = false;
};

/// Smallest root of c0 + c1 r + c2 r^2 in (0, 1] by bisection (tolerance
/// 1e-12) on the first sign change; whole-disc when the polynomial stays
/// positive up to r = 1 - 1e-12. Throws NoPositiveStart when c0 <= 0.
OracleRoot quad_root_oracle(double c2, double c1, double c0);

}  // namespace gft
