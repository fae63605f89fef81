#include <doctest.h>

#include "gft/error.hpp"
#include "gft/families.hpp"
#include "gft/volterra.hpp"
#include "support.hpp"

using namespace gft;
using test::max_abs_diff;

namespace {

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

}  // namespace

TEST_CASE("operator examples") {
  const int n = 32;
  const PowerSeries z = PowerSeries::identity(n);
  CHECK(max_abs_diff(*t_g(z, z).series, PowerSeries({0.0, 0.0, 0.5}, n)) < 1e-16);
  CHECK(max_abs_diff(*j_g(z, z).series, PowerSeries({0.0, 0.0, 0.5}, n)) < 1e-16);
  CHECK(max_abs_diff(*j_g(PowerSeries({0.0, 0.0, 1.0}, n), z).series, PowerSeries({0.0, 0.0, 0.0, 2.0 / 3.0}, n)) <
        1e-16);

  const PowerSeries t = *t_g(test::koebe_series(n), z).series;
  CHECK(t[0] == Complex{});
  CHECK(t[1] == Complex{});
  for (int k = 1; k < n; ++k) CHECK(std::abs(t[k + 1] - double(k) / (k + 1)) < 1e-15);
}

TEST_CASE("property: J_g f + T_g f = f g on random series") {
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    const PowerSeries f = random_normalized_series(2 * seed, 128);
    const PowerSeries g = random_normalized_series(2 * seed + 1, 128);
    const PowerSeries lhs = *j_g(f, g).series + *t_g(f, g).series;
    CHECK(max_abs_diff(lhs, *m_g(f, g).series) <= 1e-12);
  }
}

TEST_CASE("property: T_g is linear in f and in g") {
  test::Gen gen(31);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = gen.integer(8, 100);
    const PowerSeries f1(gen.coeffs(n + 1, 1.0), n), f2(gen.coeffs(n + 1, 1.0), n), g(gen.coeffs(n + 1, 1.0), n);
    const Complex a = gen.in_disc(2.0), b = gen.in_disc(2.0);
    const PowerSeries lhs = *t_g(a * f1 + b * f2, g).series;
    const PowerSeries rhs = a * *t_g(f1, g).series + b * *t_g(f2, g).series;
    CHECK(max_abs_diff(lhs, rhs) < 1e-11);
    CHECK(max_abs_diff(*t_g(g, a * f1 + b * f2).series, a * *t_g(g, f1).series + b * *t_g(g, f2).series) < 1e-11);
  }
}

TEST_CASE("closed-form evaluators satisfy the identity pointwise") {
  const AnalyticFn f = extremal(ClassSpec::starlike(0.0));
  const AnalyticFn g = extremal(ClassSpec::boundary_rotation(4.0));
  const auto T = t_g(f, g), J = j_g(f, g), M = m_g(f, g);
  test::Gen gen(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex z = gen.in_disc(0.9);
    const EvalResult t = T.evaluator(z), j = J.evaluator(z), m = M.evaluator(z);
    CHECK(rel(t.value + j.value, m.value) < 1e-10);
    CHECK(rel(t.d1 + j.d1, m.d1) < 1e-12);
    CHECK(rel(t.d2 + j.d2, m.d2) < 1e-12);
  }
}

TEST_CASE("series and closed-form operators agree at order 1024") {
  const AnalyticFn f = extremal(ClassSpec::janowski_starlike(2.0, -1.0), 1024);
  const AnalyticFn g = extremal(ClassSpec::g_beta(0.5), 1024);
  const auto closed = t_g(f, g);
  const auto series = t_g(*f.series(), *g.series());
  REQUIRE(series.series);
  test::Gen gen(33);
  for (int trial = 0; trial < 50; ++trial) {
    const Complex z = gen.in_disc(0.9);
    const EvalResult a = closed.evaluator(z), b = series.evaluator(z);
    CHECK(rel(a.value, b.value) < 1e-8);
    CHECK(rel(a.d1, b.d1) < 1e-8);
    CHECK(rel(a.d2, b.d2) < 1e-8);
  }
}

TEST_CASE("Gauss-Legendre rule") {
  const auto x = gauss_legendre_nodes();
  const auto w = gauss_legendre_weights();
  REQUIRE(x.size() == 32);
  REQUIRE(w.size() == 32);
  double total = 0.0;
  for (const double wi : w) total += wi;
  CHECK(total == doctest::Approx(2.0).epsilon(1e-14));
  // Exact for polynomials up to degree 63.
  for (int deg : {2, 10, 40, 62}) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) s += w[i] * std::pow(x[i], deg);
    CHECK(s == doctest::Approx(2.0 / (deg + 1)).epsilon(1e-13));
  }
  const Complex z(0.4, 0.5);
  CHECK(rel(integrate_segment([](Complex s) { return std::exp(s); }, z), std::exp(z) - 1.0) < 1e-14);
}

TEST_CASE("convexity functional of T") {
  const EvalResult id{0.3, 1.0, 0.0};
  CHECK(convexity_functional_T(id, id, 0.3) == Complex(2.0));
  CHECK(convexity_functional_T(EvalResult{}, EvalResult{0.0, 1.0, 0.0}, 0.0) == Complex(2.0));

  const AnalyticFn koebe = extremal(ClassSpec::univalent());
  const AnalyticFn z("z", [](Complex w) { return EvalResult{w, 1.0, 0.0}; });
  CHECK(std::abs(convexity_functional_T(koebe, z, 0.5) - 4.0) < 1e-14);

  // Independent check through the series of T: 1 + z T''/T'.
  const AnalyticFn f = extremal(ClassSpec::starlike(0.3), 1024);
  const AnalyticFn g = extremal(ClassSpec::janowski_convex(2.0, 1.0), 1024);
  const PowerSeries T = *t_g(*f.series(), *g.series()).series;
  test::Gen gen(34);
  for (int trial = 0; trial < 100; ++trial) {
    const Complex w = gen.in_disc(0.85);
    const EvalResult t = evaluate(T, w).at;
    CHECK(rel(convexity_functional_T(f, g, w), 1.0 + w * t.d2 / t.d1) < 1e-8);
  }

  CHECK_THROWS_AS(convexity_functional_T(EvalResult{0.0, 1.0, 0.0}, id, 0.5), Error);
  CHECK_THROWS_AS(convexity_functional_T(id, EvalResult{0.3, 0.0, 1.0}, 0.3), Error);
}
