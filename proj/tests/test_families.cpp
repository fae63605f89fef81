#include <doctest.h>

#include "gft/error.hpp"
#include "gft/families.hpp"
#include "support.hpp"

using namespace gft;
using test::max_abs_diff;

namespace {

std::vector<ClassSpec> all_extremal_specs() {
  return {
      ClassSpec::starlike(0.0),
      ClassSpec::starlike(0.5),
      ClassSpec::convex(0.0),
      ClassSpec::convex(0.3),
      ClassSpec::janowski_starlike(2.0, 1.0),
      ClassSpec::janowski_starlike(2.0, -1.0),
      ClassSpec::janowski_starlike(Complex(1.5, 0.5), Complex(0.0, 0.7)),
      ClassSpec::janowski_starlike(2.0, 0.0),
      ClassSpec::janowski_convex(2.0, 1.0),
      ClassSpec::janowski_convex(2.0, -1.0),
      ClassSpec::janowski_convex(Complex(0.0, 1.5), 0.0),
      ClassSpec::g_beta(0.5),
      ClassSpec::g_beta(1.0),
      ClassSpec::boundary_rotation(2.0),
      ClassSpec::boundary_rotation(4.0),
      ClassSpec::boundary_rotation(7.0),
      ClassSpec::universal_lif(1.0),
      ClassSpec::universal_lif(2.5),
      ClassSpec::lif_order(1.0),
      ClassSpec::lif_order(3.0),
      ClassSpec::univalent(),
  };
}

}  // namespace

TEST_CASE("class specs validate their ranges") {
  CHECK_THROWS_AS(ClassSpec::starlike(1.0), Error);
  CHECK_THROWS_AS(ClassSpec::starlike(-0.1), Error);
  CHECK_THROWS_AS(ClassSpec::janowski_starlike(0.5, 0.2), Error);
  CHECK_THROWS_AS(ClassSpec::janowski_starlike(2.0, 1.5), Error);
  CHECK_NOTHROW(ClassSpec::janowski_starlike(0.5, -0.5, true));
  CHECK_THROWS_AS(ClassSpec::janowski_starlike(-0.5, 0.5, true), Error);
  CHECK_THROWS_AS(ClassSpec::g_beta(0.0), Error);
  CHECK_THROWS_AS(ClassSpec::g_beta(1.1), Error);
  CHECK_THROWS_AS(ClassSpec::boundary_rotation(1.9), Error);
  CHECK_THROWS_AS(ClassSpec::universal_lif(0.9), Error);
  CHECK_THROWS_AS(ClassSpec::lif_order(0.5), Error);
  for (const auto& s : all_extremal_specs()) {
    const auto tag = class_tag_from_string(to_string(s.tag));
    REQUIRE(tag);
    CHECK(*tag == s.tag);
  }
  CHECK_FALSE(class_tag_from_string("Nope"));
}

TEST_CASE("extremal examples") {
  const AnalyticFn koebe = extremal(ClassSpec::starlike(0.0), 64);
  REQUIRE(koebe.series());
  for (int n = 1; n <= 64; ++n) CHECK(std::abs((*koebe.series())[n] - double(n)) < 1e-12);

  // z(1+z): z f'/f = (1+2z)/(1+z).
  const AnalyticFn jan = extremal(ClassSpec::janowski_starlike(2.0, 1.0), 32);
  CHECK(max_abs_diff(*jan.series(), PowerSeries({0.0, 1.0, 1.0}, 32)) < 1e-14);
  const Complex z(0.3, 0.4);
  const EvalResult v = jan(z);
  CHECK(std::abs(z * v.d1 / v.value - (1.0 + 2.0 * z) / (1.0 + z)) < 1e-14);

  // z - z^2/2: 1 + z f''/f' = 1 - z/(1-z).
  const AnalyticFn gb = extremal(ClassSpec::g_beta(1.0), 32);
  CHECK(max_abs_diff(*gb.series(), PowerSeries({0.0, 1.0, -0.5}, 32)) < 1e-14);
  const EvalResult w = gb(z);
  CHECK(std::abs(1.0 + z * w.d2 / w.d1 - (1.0 - z / (1.0 - z))) < 1e-14);

  const EvalResult c = extremal(ClassSpec::convex(0.0))(z);
  CHECK(std::abs(c.value - z / (1.0 - z)) < 1e-14);
}

TEST_CASE("property: closed forms agree with their attached series") {
  test::Gen gen(21);
  for (const auto& spec : all_extremal_specs()) {
    INFO(spec.label());
    const AnalyticFn f = extremal(spec, 1024);
    REQUIRE(f.series());
    const PowerSeries& s = *f.series();
    CHECK(s.is_normalized(1e-14));
    for (int trial = 0; trial < 20; ++trial) {
      const Complex z = gen.in_disc(0.8);
      const EvalResult a = f(z);
      const EvalResult b = evaluate(s, z).at;
      const double scale = std::max({1.0, std::abs(a.value), std::abs(a.d1), std::abs(a.d2)});
      CHECK(std::abs(a.value - b.value) < 1e-9 * scale);
      CHECK(std::abs(a.d1 - b.d1) < 1e-9 * scale);
      CHECK(std::abs(a.d2 - b.d2) < 1e-9 * scale);
    }
  }
}

TEST_CASE("every extremal passes its own membership check at r = 0.95") {
  for (const auto& spec : all_extremal_specs()) {
    INFO(spec.label());
    CHECK(check_membership(extremal(spec), spec, 0.95) >= -1e-8);
  }
}

TEST_CASE("membership examples") {
  const AnalyticFn koebe = extremal(ClassSpec::univalent());
  CHECK(check_membership(koebe, ClassSpec::starlike(0.0), 0.99) >= 0.0);
  const AnalyticFn id("z", [](Complex z) { return EvalResult{z, 1.0, 0.0}; });
  for (const double alpha : {0.0, 0.4, 0.9}) {
    CHECK(check_membership(id, ClassSpec::convex(alpha), 0.99) == doctest::Approx(1.0 - alpha).epsilon(1e-12));
  }
  CHECK(check_membership(koebe, ClassSpec::convex(0.0), 0.5) < 0.0);
  // U is contained in UL_2: the LIF functional stays below 2 for Koebe.
  CHECK(check_membership(koebe, ClassSpec::lif_order(2.0), 0.99) >= -1e-6);
  CHECK(check_membership(koebe, ClassSpec::lif_order(1.5), 0.99) < 0.0);
}

TEST_CASE("from_log_derivative and from_convexity_profile") {
  const int n = 64;
  const PowerSeries one = PowerSeries::constant(1.0, n);
  CHECK(max_abs_diff(from_log_derivative(one), PowerSeries::identity(n)) < 1e-15);
  CHECK(max_abs_diff(from_convexity_profile(one), PowerSeries::identity(n)) < 1e-15);

  std::vector<Complex> zgeo(n + 1, 1.0);
  zgeo[0] = 0.0;
  CHECK(max_abs_diff(from_log_derivative(test::geometric_series(n)), PowerSeries(zgeo, n)) < 1e-12);

  const PowerSeries jp = PowerSeries({1.0, 2.0}, n) * reciprocal(PowerSeries({1.0, 1.0}, n));
  CHECK(max_abs_diff(from_log_derivative(jp), PowerSeries({0.0, 1.0, 1.0}, n)) < 1e-12);
  CHECK(max_abs_diff(from_convexity_profile(jp), *extremal(ClassSpec::janowski_convex(2.0, 1.0), n).series()) <
        1e-12);

  const PowerSeries half_plane = PowerSeries({1.0, 1.0}, n) * reciprocal(PowerSeries({1.0, -1.0}, n));
  const PowerSeries g = from_convexity_profile(half_plane);
  CHECK(max_abs_diff(g, PowerSeries(zgeo, n)) < 1e-12);
  CHECK(max_abs_diff(log_derivative_functionals(g).q.with_order(n - 1), half_plane.with_order(n - 1)) < 1e-10);

  CHECK_THROWS_AS(from_log_derivative(PowerSeries::constant(2.0, n)), Error);
  CHECK_THROWS_AS(from_convexity_profile(PowerSeries(n)), Error);
}

TEST_CASE("property: from_log_derivative inverts log_derivative_functionals") {
  test::Gen gen(22);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = gen.integer(8, 150);
    auto c = gen.coeffs(n + 1, 0.5);
    c[0] = 0.0;
    c[1] = 1.0;
    for (std::size_t i = 2; i < c.size(); ++i) c[i] *= std::pow(0.7, double(i));
    const PowerSeries f(c, n);
    const PowerSeries p = log_derivative_functionals(f).p;
    CHECK(max_abs_diff(from_log_derivative(p).with_order(n - 1), f.with_order(n - 1)) < 1e-10);
  }
}

TEST_CASE("Schur witnesses") {
  const int n = 256;
  CHECK(max_abs_diff(schur_sample(1, 0, n), PowerSeries::identity(n)) == 0.0);

  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const PowerSeries w = schur_sample(seed, 1 + int(seed % 4), n);
    CHECK(w[0] == Complex{});
    CHECK(std::abs(w[1]) <= 1.0 + 1e-15);
    const SchurWitness sw = SchurWitness::sample(seed, 3);
    CHECK(sw.factors().size() == 3);
    for (const auto& f : sw.factors()) CHECK(std::abs(f.a) <= 0.8);
  }

  const SchurWitness w = SchurWitness::sample(7, 2);
  double worst = 0.0;
  for (int j = 0; j < 360; ++j) worst = std::max(worst, std::abs(w(std::polar(0.9, 2.0 * std::numbers::pi * j / 360))));
  CHECK(worst <= 0.9);

  const PowerSeries s = w.series(n);
  test::Gen gen(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Complex z = gen.in_disc(0.9);
    CHECK(std::abs(evaluate(s, z).at.value - w(z)) < 1e-10);
  }
  CHECK(max_abs_diff(schur_sample(7, 2, n), schur_sample(7, 2, n)) == 0.0);
  CHECK(max_abs_diff(schur_sample(7, 2, n), schur_sample(8, 2, n)) > 1e-3);
}

TEST_CASE("sampled members") {
  const SampleOptions options{1024, 0, 0.9};
  CHECK(max_abs_diff(sample_member(ClassSpec::starlike(0.0), 5, options), test::koebe_series(1024)) < 1e-9);
  CHECK(max_abs_diff(sample_member(ClassSpec::janowski_starlike(2.0, 1.0), 5, options),
                     PowerSeries({0.0, 1.0, 1.0}, 1024)) < 1e-12);

  const std::vector<ClassSpec> specs{
      ClassSpec::starlike(0.0),
      ClassSpec::starlike(0.5),
      ClassSpec::convex(0.0),
      ClassSpec::convex(0.5),
      ClassSpec::janowski_starlike(2.0, 1.0),
      ClassSpec::janowski_starlike(2.0, -1.0),
      ClassSpec::janowski_convex(Complex(1.2, 0.8), Complex(0.3, -0.3)),
      ClassSpec::g_beta(0.5),
      ClassSpec::g_beta(1.0),
  };
  for (const auto& spec : specs) {
    INFO(spec.label());
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      const PowerSeries a = sample_member(spec, seed);
      CHECK(a.is_normalized(1e-12));
      CHECK(check_membership(a, spec, 0.9) >= -1e-8);
      CHECK(max_abs_diff(a, sample_member(spec, seed)) == 0.0);
    }
  }
  CHECK_THROWS_AS(sample_member(ClassSpec::univalent(), 1), Error);
  CHECK_THROWS_AS(sample_member(ClassSpec::boundary_rotation(4.0), 1), Error);
}

TEST_CASE("disc automorphisms and the LIF transform") {
  const AnalyticFn koebe = extremal(ClassSpec::univalent());
  const AnalyticFn same = lif_transform(koebe, MoebiusParams{});
  test::Gen gen(24);
  for (int trial = 0; trial < 10; ++trial) {
    const Complex z = gen.in_disc(0.9);
    CHECK(std::abs(same(z).value - koebe(z).value) < 1e-12 * std::abs(koebe(z).value));
  }

  const AnalyticFn id("z", [](Complex z) { return EvalResult{z, 1.0, 0.0}; });
  const MoebiusParams phi{Complex(0.3, -0.5), 0.0};
  const AnalyticFn F = lif_transform(id, phi);
  for (int j = 0; j < 10; ++j) {
    const Complex z = std::polar(0.8, 0.6 * j);
    CHECK(std::abs(F(z).value - z / (1.0 + std::conj(phi.a) * z)) < 1e-14);
  }

  const AnalyticFn convex = extremal(ClassSpec::convex(0.0));
  for (int trial = 0; trial < 10; ++trial) {
    const MoebiusParams p{gen.in_disc(0.9), gen.uniform(-3.0, 3.0)};
    const AnalyticFn T = lif_transform(convex, p);
    const EvalResult at0 = T(0.0);
    CHECK(std::abs(at0.value) < 1e-12);
    CHECK(std::abs(at0.d1 - 1.0) < 1e-12);
    CHECK(check_membership(T, ClassSpec::convex(0.0), 0.9) >= -1e-8);
  }

  for (int trial = 0; trial < 20; ++trial) {
    const MoebiusParams p1{gen.in_disc(0.7), gen.uniform(-3.0, 3.0)};
    const MoebiusParams p2{gen.in_disc(0.7), gen.uniform(-3.0, 3.0)};
    const MoebiusParams p12 = compose(p1, p2);
    const Complex z = gen.in_disc(0.3);
    CHECK(std::abs(p12(z).value - p1(p2(z).value).value) < 1e-13);
    const AnalyticFn twice = lif_transform(lif_transform(koebe, p1), p2);
    const AnalyticFn once = lif_transform(koebe, p12);
    const EvalResult a = twice(z), b = once(z);
    CHECK(std::abs(a.value - b.value) < 1e-9 * std::max(1.0, std::abs(b.value)));
    CHECK(std::abs(a.d1 - b.d1) < 1e-9 * std::max(1.0, std::abs(b.d1)));
    CHECK(std::abs(a.d2 - b.d2) < 1e-9 * std::max(1.0, std::abs(b.d2)));
  }
  CHECK_THROWS_AS(lif_transform(koebe, MoebiusParams{1.0, 0.0}), Error);
}

TEST_CASE("random normalized series") {
  const PowerSeries a = random_normalized_series(42, 128);
  CHECK(a.is_normalized());
  for (int n = 2; n <= 128; ++n) CHECK(std::abs(a[n]) <= 1.0);
  CHECK(max_abs_diff(a, random_normalized_series(42, 128)) == 0.0);
}
