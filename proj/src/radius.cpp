#include "gft/radius.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <string>

#include "gft/error.hpp"

namespace gft {

namespace {

constexpr double kWholeDiscEdge = 1.0 - 1e-12;

[[noreturn]] void invalid(const std::string& what) { throw Error(Errc::InvalidParams, what); }

RadiusValue capped(double r, Branch branch) {
  if (!(r > 0.0)) invalid("radius formula produced a non-positive value " + std::to_string(r));
  if (r >= kWholeDiscEdge) return {1.0, Branch::whole_disc};
  return {r, branch};
}

}  // namespace

std::string_view to_string(Theorem t) noexcept {
  switch (t) {
    case Theorem::T41: return "t41";
    case Theorem::T42: return "t42";
    case Theorem::T43: return "t43";
    case Theorem::T44: return "t44";
    case Theorem::T45: return "t45";
    case Theorem::T46: return "t46";
  }
  return "unknown";
}

std::optional<Theorem> theorem_from_string(std::string_view name) noexcept {
  static constexpr std::array<Theorem, 6> all{Theorem::T41, Theorem::T42, Theorem::T43,
                                              Theorem::T44, Theorem::T45, Theorem::T46};
  std::string lower(name);
  for (auto& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  for (const Theorem t : all) {
    if (to_string(t) == lower) return t;
  }
  return std::nullopt;
}

std::string_view to_string(Branch b) noexcept {
  switch (b) {
    case Branch::quadratic: return "quadratic";
    case Branch::linear: return "linear";
    case Branch::whole_disc: return "whole-disc";
  }
  return "unknown";
}

void RadiusQuery::validate() const {
  if (!(alpha >= 0.0 && alpha < 1.0)) invalid("alpha must lie in [0, 1), got " + std::to_string(alpha));
  switch (theorem) {
    case Theorem::T41:
      if (!(std::abs(A) > 1.0)) invalid("t41 needs |A| > 1, got |A| = " + std::to_string(std::abs(A)));
      if (!(std::abs(B) <= 1.0)) invalid("t41 needs |B| <= 1, got |B| = " + std::to_string(std::abs(B)));
      break;
    case Theorem::T42:
      if (!(gamma >= 1.0 && std::isfinite(gamma))) invalid("t42 needs gamma >= 1, got " + std::to_string(gamma));
      break;
    case Theorem::T45:
      if (!(beta > 0.0 && beta <= 1.0)) invalid("t45 needs beta in (0, 1], got " + std::to_string(beta));
      break;
    case Theorem::T46:
      if (!(k >= 2.0 && std::isfinite(k))) invalid("t46 needs k >= 2, got " + std::to_string(k));
      break;
    case Theorem::T43:
    case Theorem::T44:
      break;
  }
}

RadiusValue radius_janowski(Complex A, Complex B, double alpha) {
  RadiusQuery q{.theorem = Theorem::T41, .alpha = alpha, .A = A, .B = B};
  q.validate();
  if (B == 0.0) return capped((2.0 - alpha) / (2.0 * std::abs(A)), Branch::linear);
  // The printed root (|B-A| - |(a-1)B-A|)/c2 rationalized: the numerator
  // difference of squares equals c2 (2 - a), which removes the cancellation
  // and covers c2 = 0, where phi is linear.
  const double c2 = alpha * std::norm(B) - 2.0 * (A * std::conj(B)).real();
  const double r = (2.0 - alpha) / (std::abs(B - A) + std::abs((alpha - 1.0) * B - A));
  return capped(r, c2 == 0.0 ? Branch::linear : Branch::quadratic);
}

RadiusValue radius_formula(const RadiusQuery& q) {
  q.validate();
  const double a = q.alpha;
  switch (q.theorem) {
    case Theorem::T41:
      return radius_janowski(q.A, q.B, a);
    case Theorem::T42:
      // (gamma - sqrt(a^2 + gamma^2 - 1))/(1 - a), rationalized.
      return capped((1.0 + a) / (q.gamma + std::sqrt(a * a + q.gamma * q.gamma - 1.0)), Branch::quadratic);
    case Theorem::T43:
      return {1.0, Branch::whole_disc};
    case Theorem::T44:
      // (2 - sqrt(3 + a^2))/(1 - a), rationalized.
      return capped((1.0 + a) / (2.0 + std::sqrt(3.0 + a * a)), Branch::quadratic);
    case Theorem::T45:
      return capped((1.0 + a) / (1.0 + a + q.beta), Branch::linear);
    case Theorem::T46:
      // (k - sqrt(k^2 - 4(1 - a^2)))/(2(1 - a)), rationalized.
      return capped(2.0 * (1.0 + a) / (q.k + std::sqrt(q.k * q.k - 4.0 * (1.0 - a * a))), Branch::quadratic);
  }
  invalid("unknown theorem");
}

double Quadratic::operator()(double r) const noexcept {
  if (r <= 0.5) return c0 + r * (c1 + r * c2);
  const double at_one = c0 + c1 + c2;
  const double slope_at_one = c1 + 2.0 * c2;
  const double d = r - 1.0;
  return at_one + d * (slope_at_one + d * c2);
}

Quadratic proof_polynomial(const RadiusQuery& q) {
  q.validate();
  const double a = q.alpha;
  switch (q.theorem) {
    case Theorem::T41: {
      const double re_ab = (q.A * std::conj(q.B)).real();
      return {a * std::norm(q.B) - 2.0 * re_ab, -2.0 * std::abs(q.B - q.A), 2.0 - a};
    }
    case Theorem::T42: return {1.0 - a, -2.0 * q.gamma, 1.0 + a};
    case Theorem::T43: return {1.0 - a, -2.0, 1.0 + a};
    case Theorem::T44: return {1.0 - a, -4.0, 1.0 + a};
    case Theorem::T45: return {0.0, -(1.0 + a + q.beta), 1.0 + a};
    case Theorem::T46: return {1.0 - a, -q.k, 1.0 + a};
  }
  invalid("unknown theorem");
}

OracleRoot quad_root_oracle(double c2, double c1, double c0) {
  if (!(c0 > 0.0)) {
    throw Error(Errc::NoPositiveStart, "polynomial is not positive at r = 0 (c0 = " + std::to_string(c0) + ")");
  }
  const Quadratic p{c2, c1, c0};
  // Split [0, 1) at the vertex so that every piece is monotone.
  std::array<double, 3> knots{0.0, kWholeDiscEdge, kWholeDiscEdge};
  if (c2 != 0.0) {
    const double vertex = -c1 / (2.0 * c2);
    if (vertex > 0.0 && vertex < kWholeDiscEdge) knots[1] = vertex;
  }
  for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
    double lo = knots[i];
    double hi = knots[i + 1];
    if (hi <= lo || p(hi) > 0.0) continue;
    while (hi - lo > 1e-12) {
      const double mid = 0.5 * (lo + hi);
      if (p(mid) > 0.0) {
        lo = mid;
      } else {
        hi = mid;
      }
    }
    return {0.5 * (lo + hi), false};
  }
  return {1.0, true};
}

}  // namespace gft
