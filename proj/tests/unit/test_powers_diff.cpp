#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "defml/powers_diff.hpp"

using namespace defml;

TEST_CASE("generalized powers, numeric") {
  CHECK(generalized_power(7.5, 0, 3.0, PowerVariant::Falling) == 1.0);
  CHECK(generalized_power(7.5, 0, 3.0, PowerVariant::Rising) == 1.0);
  CHECK(generalized_power(6.0, 3, 2.0, PowerVariant::Falling) == 48.0);
  CHECK(generalized_power(1.0, 3, 1.0, PowerVariant::Rising) == 6.0);
  CHECK(generalized_power(Rational(6), 3, Rational(2), PowerVariant::Falling) ==
        Rational(48));
}

TEST_CASE("generalized powers, symbolic") {
  CHECK(generalized_power_symbolic(0, PowerVariant::Falling) == BivarPoly::one());
  CHECK(generalized_power_symbolic(2, PowerVariant::Falling) ==
        BivarPoly::y(2) - BivarPoly::term(Rational(1), 1, 1));
  CHECK(generalized_power_symbolic(2, PowerVariant::Rising) ==
        BivarPoly::y(2) + BivarPoly::term(Rational(1), 1, 1));
}

TEST_CASE("numeric and symbolic generalized powers agree exactly") {
  std::mt19937_64 rng(1337);
  std::uniform_int_distribution<long> num(-20, 20), den(1, 7);
  for (int t = 0; t < 40; ++t) {
    const Rational z(num(rng), den(rng));
    const Rational h(num(rng), den(rng));
    for (unsigned n = 0; n <= 6; ++n)
      for (const auto v : {PowerVariant::Falling, PowerVariant::Rising})
        CHECK(generalized_power_symbolic(n, v).eval_exact(z, h) ==
              generalized_power(z, n, h, v));
  }
}

TEST_CASE("h-difference on generalized powers and monomials") {
  // Delta y^(3,h) = 3 y^(2,h)
  CHECK(h_difference(generalized_power_symbolic(3, PowerVariant::Falling)) ==
        generalized_power_symbolic(2, PowerVariant::Falling).scaled(Rational(3)));
  // Delta y^2 = 2y + h
  CHECK(h_difference(BivarPoly::y(2)) ==
        BivarPoly::term(Rational(2), 1, 0) + BivarPoly::h());
  CHECK(h_difference(BivarPoly::constant(Rational(9))).is_zero());
}

TEST_CASE("h-difference product rule on random pairs") {
  std::mt19937_64 rng(777);
  std::uniform_int_distribution<unsigned> dy(0, 5), dh(0, 3);
  std::uniform_int_distribution<long> num(-6, 6), den(1, 4);
  const auto rand_poly = [&] {
    BivarPoly p;
    for (int i = 0; i < 5; ++i)
      p += BivarPoly::term(Rational(num(rng), den(rng)), dy(rng), dh(rng));
    return p;
  };
  for (int t = 0; t < 30; ++t) {
    const BivarPoly f = rand_poly(), g = rand_poly();
    CHECK(h_difference(f * g) ==
          f.shift_y_by_h() * h_difference(g) + h_difference(f) * g);
  }
}

TEST_CASE("deformed exponential, pointwise") {
  CHECK(deformed_exp(0.0, 5.0, 2.0) == doctest::Approx(1.0));
  CHECK(deformed_exp(1.0, 0.0, 2.0) == doctest::Approx(1.0));
  CHECK(deformed_exp(1.0, 2.0, 1.0) == doctest::Approx(4.0));
  // e_{-h}(x, y) = e_h(-x, -y): h = -1 evaluated directly
  CHECK(deformed_exp(0.5, 3.0, -1.0) == doctest::Approx(8.0));
  CHECK(deformed_exp(-0.5, -3.0, 1.0) == doctest::Approx(8.0));

  CHECK_THROWS_AS(deformed_exp(-1.0, 1.0, 1.0), std::domain_error);  // pole
  CHECK_THROWS_AS(deformed_exp(-2.0, 1.0, 1.0), std::domain_error);  // base < 0
  CHECK_THROWS_AS(deformed_exp(1.0, 1.0, 0.0), std::domain_error);

  const std::complex<double> zx(0.3, 0.4);
  const std::complex<double> v = deformed_exp(zx, 2.0, 1.0);
  const std::complex<double> want = std::pow(1.0 + zx, 2.0);
  CHECK(std::abs(v - want) < 1e-12);
  CHECK(deformed_exp(std::complex<double>(0.5, 0.0), 3.0, 2.0).real() ==
        doctest::Approx(deformed_exp(0.5, 3.0, 2.0)));
}

TEST_CASE("additivity in the second argument") {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ys(-4.0, 4.0), xs(-0.4, 0.9);
  for (int t = 0; t < 40; ++t) {
    const double x = xs(rng), y1 = ys(rng), y2 = ys(rng);
    const double lhs = deformed_exp(x, y1, 1.0) * deformed_exp(x, y2, 1.0);
    const double rhs = deformed_exp(x, y1 + y2, 1.0);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
  }
}

TEST_CASE("deformed exponential series coefficients") {
  const PowerSeries plus1 = deformed_exp_series(1, ExpSign::PlusH);
  CHECK(plus1.coeff(0) == BivarPoly::one());
  CHECK(plus1.coeff(1) == BivarPoly::y());

  const PowerSeries plus2 = deformed_exp_series(2, ExpSign::PlusH);
  CHECK(plus2.coeff(2) ==
        BivarPoly::term(Rational(1, 2), 2, 0) + BivarPoly::term(Rational(-1, 2), 1, 1));
  const PowerSeries minus2 = deformed_exp_series(2, ExpSign::MinusH);
  CHECK(minus2.coeff(2) ==
        BivarPoly::term(Rational(1, 2), 2, 0) + BivarPoly::term(Rational(1, 2), 1, 1));
}

TEST_CASE("difference and differential relations of the exponential series") {
  const unsigned order = 10;
  const PowerSeries plus = deformed_exp_series(order, ExpSign::PlusH);
  const PowerSeries minus = deformed_exp_series(order, ExpSign::MinusH);

  PowerSeries d_plus(order), d_minus(order);
  for (unsigned n = 0; n <= order; ++n) {
    d_plus.set_coeff(n, h_difference(plus.coeff(n)));
    d_minus.set_coeff(n, h_difference(minus.coeff(n)));
  }
  CHECK(d_plus == plus.shifted_up(1));
  CHECK(d_minus == minus.shift_y_by_h().shifted_up(1));

  PowerSeries one_plus_hx = PowerSeries::one(order - 1);
  one_plus_hx.set_coeff(1, BivarPoly::h());
  CHECK(one_plus_hx * plus.derivative_x() ==
        plus.truncated(order - 1).scaled(BivarPoly::y()));
}

TEST_CASE("series evaluation matches the pointwise function in its disc") {
  // Partial sums of the expansion approach (1+hx)^(y/h) for |hx| < 1.
  const PowerSeries s = deformed_exp_series(24, ExpSign::PlusH);
  const double x = 0.35, y = 1.75, h = 0.8;
  double acc = 0.0, xp = 1.0;
  for (unsigned n = 0; n <= 24; ++n) {
    acc += s.coeff(n).eval<double>(y, h) * xp;
    xp *= x;
  }
  CHECK(acc == doctest::Approx(deformed_exp(x, y, h)).epsilon(1e-10));
}
