#include <doctest.h>

#include "gft/error.hpp"
#include "gft/series.hpp"
#include "support.hpp"

using namespace gft;
using test::max_abs_diff;

TEST_CASE("arithmetic examples") {
  const PowerSeries one_plus_z({1.0, 1.0}, 16);
  const PowerSeries one_minus_z({1.0, -1.0}, 16);
  CHECK(max_abs_diff(one_plus_z * one_minus_z, PowerSeries({1.0, 0.0, -1.0}, 16)) == 0.0);

  const int n = 64;
  CHECK(max_abs_diff(PowerSeries::identity(n) * reciprocal(one_minus_z.with_order(n) * one_minus_z.with_order(n)),
                     test::koebe_series(n)) < 1e-12);
  CHECK(max_abs_diff(one_plus_z + PowerSeries(16), one_plus_z) == 0.0);
}

TEST_CASE("construction rejects bad input") {
  CHECK_THROWS_AS(PowerSeries(4), Error);
  CHECK_THROWS_AS(PowerSeries({1.0, std::nan("")}, 16), Error);
  CHECK(PowerSeries({1.0, 2.0, 3.0}, 8)[5] == Complex{});
  CHECK(PowerSeries({1.0, 2.0, 3.0}, 8)[-1] == Complex{});
}

TEST_CASE("calculus examples") {
  CHECK(max_abs_diff(integral(PowerSeries::constant(1.0, 16)), PowerSeries::identity(16)) == 0.0);

  std::vector<Complex> zgeo(33, 1.0);
  zgeo[0] = 0.0;
  const PowerSeries d = derivative(PowerSeries(zgeo, 32));
  for (int n = 0; n < 32; ++n) CHECK(d[n] == Complex(n + 1.0));

  test::Gen gen(3);
  for (int trial = 0; trial < 20; ++trial) {
    const PowerSeries a(gen.coeffs(40, 1.0), 39);
    std::vector<Complex> expect(a.coeffs().begin(), a.coeffs().end());
    expect[0] = 0.0;
    CHECK(max_abs_diff(integral(derivative(a)), PowerSeries(expect, 39)) < 1e-14);
  }
}

TEST_CASE("transcendental examples") {
  const PowerSeries one_minus_z({1.0, -1.0}, 64);
  CHECK(max_abs_diff(reciprocal(one_minus_z), test::geometric_series(64)) < 1e-14);
  CHECK(max_abs_diff(pow(PowerSeries({1.0, 1.0}, 32), 2.0), PowerSeries({1.0, 2.0, 1.0}, 32)) < 1e-14);

  const PowerSeries r = exp(log(PowerSeries({1.0, 1.0}, 64)));
  CHECK_THROWS_AS(exp(PowerSeries::constant(1.0, 16)), Error);
  CHECK(std::abs(r[0] - 1.0) < 1e-12);
  CHECK(std::abs(r[1] - 1.0) < 1e-12);
  for (int n = 2; n <= 64; ++n) CHECK(std::abs(r[n]) < 1e-12);

  CHECK_THROWS_AS(reciprocal(PowerSeries::identity(16)), Error);
  CHECK_THROWS_AS(log(PowerSeries::identity(16)), Error);
}

TEST_CASE("property: reciprocal, log/exp and pow round trips") {
  test::Gen gen(4);
  for (int trial = 0; trial < 50; ++trial) {
    const int order = gen.integer(8, 120);
    auto c = gen.coeffs(gen.integer(2, 6), 0.3);
    c[0] = std::polar(gen.uniform(0.5, 2.0), gen.uniform(-1.0, 1.0));
    const PowerSeries a(c, order);
    CHECK(max_abs_diff(a * reciprocal(a), PowerSeries::constant(1.0, order)) < 1e-10);
    const PowerSeries l = log(a);
    CHECK(std::abs(l[0] - std::log(c[0])) < 1e-15);
    CHECK(max_abs_diff(std::exp(l[0]) * exp(l - PowerSeries::constant(l[0], order)), a) < 1e-10);
    const Complex e(gen.uniform(-2.0, 2.0), gen.uniform(-1.0, 1.0));
    CHECK(max_abs_diff(pow(pow(a, e), 1.0 / e), a) < 1e-9);
    CHECK(max_abs_diff(pow(a, 3.0), a * a * a) < 1e-10);
  }
}

TEST_CASE("property: product is commutative and distributes over addition") {
  test::Gen gen(5);
  for (int trial = 0; trial < 30; ++trial) {
    const int order = gen.integer(8, 200);
    const PowerSeries a(gen.coeffs(order + 1, 1.0), order);
    const PowerSeries b(gen.coeffs(order + 1, 1.0), order);
    const PowerSeries c(gen.coeffs(order + 1, 1.0), order);
    CHECK(max_abs_diff(a * b, b * a) < 1e-12);
    CHECK(max_abs_diff(a * (b + c), a * b + a * c) < 1e-11);
  }
}

TEST_CASE("log-derivative functionals") {
  const int n = 128;
  const auto fz = log_derivative_functionals(PowerSeries::identity(n));
  CHECK(max_abs_diff(fz.p, PowerSeries::constant(1.0, n)) < 1e-15);
  CHECK(max_abs_diff(fz.q, PowerSeries::constant(1.0, n)) < 1e-15);

  std::vector<Complex> zgeo(n + 1, 1.0);
  zgeo[0] = 0.0;
  // The top coefficient of p depends on a_{N+1}, which truncation drops.
  CHECK(max_abs_diff(log_derivative_functionals(PowerSeries(zgeo, n)).p.with_order(n - 1),
                     test::geometric_series(n - 1)) < 1e-12);

  // 1 + z f''/f' for Koebe is (1 + 4z + z^2)/(1 - z^2).
  const auto koebe = log_derivative_functionals(test::koebe_series(256));
  const Complex z = 0.5;
  const Complex oracle = (1.0 + 4.0 * z + z * z) / (1.0 - z * z);
  CHECK(std::abs(oracle - 13.0 / 3.0) < 1e-15);
  CHECK(std::abs(evaluate(koebe.q, z).at.value - oracle) < 1e-9);

  CHECK_THROWS_AS(log_derivative_functionals(PowerSeries::constant(1.0, 16)), Error);
}

TEST_CASE("evaluation examples") {
  CHECK(std::abs(evaluate(test::geometric_series(128), 0.5).at.value - 2.0) < 1e-9);
  const auto id = evaluate(PowerSeries::identity(16), Complex(0.3, -0.4)).at;
  CHECK(id.value == Complex(0.3, -0.4));
  CHECK(id.d1 == Complex(1.0));
  CHECK(id.d2 == Complex(0.0));

  const auto k = evaluate(test::koebe_series(256), 0.3).at;
  CHECK(std::abs(k.value - 0.3 / 0.49) < 1e-9);
  CHECK(std::abs(k.d1 - 1.3 / (0.7 * 0.7 * 0.7)) < 1e-9);
  CHECK(std::abs(k.d2 - (4.0 + 2.0 * 0.3) / std::pow(0.7, 4)) < 1e-9);
}

TEST_CASE("evaluation limits") {
  const PowerSeries k = test::koebe_series(256);
  CHECK_THROWS_AS(evaluate(k, 0.96), Error);
  try {
    evaluate(k, 0.96);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::RadiusTooLarge);
  }
  // Koebe truncated at N = 64 is far from converged at 0.9.
  try {
    evaluate(test::koebe_series(64), 0.9);
    FAIL("expected TruncationUnreliable");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::TruncationUnreliable);
  }
  CHECK(tail_estimate(PowerSeries::identity(16), 0.9) == 0.0);
}

TEST_CASE("property: batched evaluation equals pointwise evaluation") {
  test::Gen gen(6);
  const PowerSeries k = test::koebe_series(1024);
  std::vector<Complex> zs(50);
  for (auto& z : zs) z = gen.in_disc(0.9);
  const auto batch = evaluate(k, zs);
  for (std::size_t j = 0; j < zs.size(); ++j) {
    const Complex z = zs[j];
    const Complex oracle = z / ((1.0 - z) * (1.0 - z));
    CHECK(std::abs(batch[j].value - evaluate(k, z).at.value) < 1e-12);
    CHECK(std::abs(batch[j].value - oracle) < 1e-8 * std::max(1.0, std::abs(oracle)));
  }
}
