#include <doctest.h>

#include <random>

#include "defml/errors.hpp"
#include "defml/families.hpp"
#include "defml/powers_diff.hpp"

using namespace defml;

namespace {

// The published low-order members, frozen.
BivarPoly g_table(unsigned n) {
  switch (n) {
    case 0: return BivarPoly::one();
    case 1: return BivarPoly::term(Rational(2), 1, 0);
    case 2: return BivarPoly::term(Rational(2), 2, 0);
    case 3:  // (2/3) y (2y^2 + h^2)
      return BivarPoly::term(Rational(4, 3), 3, 0) + BivarPoly::term(Rational(2, 3), 1, 2);
    case 4:  // (2/3) y^2 (y^2 + 2h^2)
      return BivarPoly::term(Rational(2, 3), 4, 0) + BivarPoly::term(Rational(4, 3), 2, 2);
    case 5:  // (2/15) y (2y^4 + 10 h^2 y^2 + 3 h^4)
      return BivarPoly::term(Rational(4, 15), 5, 0) +
             BivarPoly::term(Rational(4, 3), 3, 2) +
             BivarPoly::term(Rational(2, 5), 1, 4);
  }
  REQUIRE(false);
  return {};
}

// Monic phi members at h = 1, frozen.
BivarPoly phi_monic_table_h1(unsigned n) {
  switch (n) {
    case 0: return BivarPoly::one();
    case 1: return BivarPoly::y();
    case 2: return BivarPoly::y(2) + BivarPoly::constant(Rational(-1, 2));
    case 3: return BivarPoly::y(3) + BivarPoly::term(Rational(-2), 1, 0);
    case 4:
      return BivarPoly::y(4) + BivarPoly::term(Rational(-5), 2, 0) +
             BivarPoly::constant(Rational(3, 2));
    case 5:
      return BivarPoly::y(5) + BivarPoly::term(Rational(-10), 3, 0) +
             BivarPoly::term(Rational(23, 2), 1, 0);
  }
  REQUIRE(false);
  return {};
}

}  // namespace

TEST_CASE("g by recurrence reproduces the published members") {
  const FamilySequence g = g_by_recurrence(5);
  for (unsigned n = 0; n <= 5; ++n) CHECK(g.at(n) == g_table(n));
}

TEST_CASE("g by convolution") {
  CHECK(g_by_convolution(0) == BivarPoly::one());
  CHECK(g_by_convolution(2) == BivarPoly::term(Rational(2), 2, 0));
  CHECK(g_by_convolution(3) == g_table(3));
}

TEST_CASE("g by generating function") {
  const FamilySequence g = g_by_genfun(4);
  CHECK(g.at(0) == BivarPoly::one());
  CHECK(g.at(1) == BivarPoly::term(Rational(2), 1, 0));
  CHECK(g.at(4) == g_table(4));
}

TEST_CASE("three independent g routes agree") {
  const unsigned n_max = 12;
  const FamilySequence rec = g_by_recurrence(n_max);
  const FamilySequence gen = g_by_genfun(n_max);
  for (unsigned n = 0; n <= n_max; ++n) {
    CHECK(rec.at(n) == g_by_convolution(n));
    CHECK(rec.at(n) == gen.at(n));
    CHECK(rec.at(n).degree_y() == n);
  }
}

TEST_CASE("hypergeometric representation") {
  // n = 1: the terminating sum has a single term, so g_1 = 2y.
  CHECK(g_hypergeometric(1, Rational(7, 3), Rational(5)) == Rational(14, 3));
  // n = 2, y = 3, h = 1: two-term sum, 18 = 2 y^2.
  CHECK(g_hypergeometric(2, Rational(3), Rational(1)) == Rational(18));
  // n = 3, y = 1, h = 2 equals the degree-3 member evaluated there.
  CHECK(g_hypergeometric(3, Rational(1), Rational(2)) == Rational(4));
  CHECK_THROWS_AS(g_hypergeometric(3, Rational(1), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(g_hypergeometric(0, Rational(1), Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("hypergeometric equals member evaluation on random rationals") {
  std::mt19937_64 rng(60221415);
  std::uniform_int_distribution<long> num(-25, 25), den(1, 9);
  const FamilySequence g = g_by_recurrence(15);
  for (int t = 0; t < 25; ++t) {
    const Rational y(num(rng), den(rng));
    Rational h(num(rng), den(rng));
    if (h.is_zero()) h = Rational(1, 3);
    for (unsigned n = 1; n <= 15; ++n)
      CHECK(g_hypergeometric(n, y, h) == g.at(n).eval_exact(y, h));
  }
}

TEST_CASE("monic rescaling") {
  const FamilySequence g_monic = to_monic(g_by_recurrence(3));
  CHECK(g_monic.at(0) == BivarPoly::one());
  CHECK(g_monic.at(2) == BivarPoly::y(2));

  const FamilySequence phi_monic = to_monic(phi_by_recurrence(3));
  CHECK(phi_monic.at(2).substitute_h(Rational(1)) == phi_monic_table_h1(2));
  CHECK(phi_monic.at(2) ==
        BivarPoly::y(2) + BivarPoly::term(Rational(-1, 2), 0, 2));  // y^2 - h^2/2

  CHECK_THROWS_AS(to_monic(phi_monic), std::invalid_argument);
}

TEST_CASE("phi by recurrence") {
  const FamilySequence phi = phi_by_recurrence(3);
  CHECK(phi.at(0) == BivarPoly::constant(Rational(2)));
  CHECK(phi.at(1) == BivarPoly::term(Rational(2), 1, 0));
  CHECK(phi.at(2) ==
        BivarPoly::term(Rational(4, 3), 2, 0) + BivarPoly::term(Rational(-2, 3), 0, 2));
  CHECK(to_monic(phi).at(3).substitute_h(Rational(1)) == phi_monic_table_h1(3));
}

TEST_CASE("phi from g transform") {
  const FamilySequence g = g_by_recurrence(7);
  CHECK(phi_from_g(g, 0) == BivarPoly::constant(Rational(2)));
  CHECK(phi_from_g(g, 1) == BivarPoly::term(Rational(2), 1, 0));
  CHECK(phi_from_g(g, 2) ==
        BivarPoly::term(Rational(4, 3), 2, 0) + BivarPoly::term(Rational(-2, 3), 0, 2));
  CHECK_THROWS_AS(phi_from_g(g, 7), std::invalid_argument);
  CHECK_THROWS_AS(phi_from_g(to_monic(g), 1), std::invalid_argument);
}

TEST_CASE("phi routes agree") {
  const unsigned n_max = 12;
  const FamilySequence rec = phi_by_recurrence(n_max);
  const FamilySequence gen = phi_by_genfun(n_max);
  const FamilySequence g = g_by_recurrence(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) {
    CHECK(rec.at(n) == gen.at(n));
    CHECK(rec.at(n) == phi_from_g(g, n));
  }
}

TEST_CASE("monic phi generating function matches the recurrence and the table") {
  const FamilySequence egf = phi_monic_genfun(5);
  CHECK(egf.at(0) == BivarPoly::one());
  CHECK(egf.at(2) == BivarPoly::y(2) + BivarPoly::term(Rational(-1, 2), 0, 2));
  for (unsigned n = 0; n <= 5; ++n)
    CHECK(egf.at(n).substitute_h(Rational(1)) == phi_monic_table_h1(n));
}

TEST_CASE("parity and h-sign invariance") {
  const FamilySequence g = g_by_recurrence(10);
  const FamilySequence phi = phi_by_recurrence(10);
  for (unsigned n = 0; n <= 10; ++n) {
    const Rational sign(n % 2 == 0 ? 1 : -1);
    CHECK(g.at(n).negate_y() == g.at(n).scaled(sign));
    CHECK(phi.at(n).negate_y() == phi.at(n).scaled(sign));
    CHECK(g.at(n).even_in_h());
    CHECK(phi.at(n).even_in_h());
  }
}

TEST_CASE("shift identity between consecutive g members") {
  const FamilySequence g = g_by_recurrence(10);
  const BivarPoly h1 = BivarPoly::h();
  for (unsigned n = 1; n <= 10; ++n) {
    const BivarPoly lhs = g.at(n).shift_y_by_h() - g.at(n);
    const BivarPoly rhs = h1 * (g.at(n - 1).shift_y_by_h() + g.at(n - 1));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("monic recurrences hold for the rescaled sequences") {
  const FamilySequence gm = to_monic(g_by_recurrence(10));
  const FamilySequence pm = to_monic(phi_by_recurrence(10));
  const BivarPoly y = BivarPoly::y();
  const BivarPoly h2 = BivarPoly::h(2);
  for (unsigned n = 1; n <= 9; ++n) {
    const Rational cg(static_cast<long>(n) * (static_cast<long>(n) - 1), 4);
    CHECK(gm.at(n + 1) == y * gm.at(n) + (h2 * gm.at(n - 1)).scaled(cg));
    const Rational cp(static_cast<long>(n) * (static_cast<long>(n) + 1), 4);
    CHECK(pm.at(n + 1) == y * pm.at(n) - (h2 * pm.at(n - 1)).scaled(cp));
  }
}

TEST_CASE("derivative relation of the generating series") {
  const unsigned order = 12;
  const PowerSeries G = deformed_exp_series(order, ExpSign::PlusH) *
                        deformed_exp_series(order, ExpSign::MinusH);
  PowerSeries one_minus = PowerSeries::one(order - 1);
  one_minus.set_coeff(2, BivarPoly::term(Rational(-1), 0, 2));
  CHECK(one_minus * G.derivative_x() ==
        G.truncated(order - 1).scaled(BivarPoly::term(Rational(2), 1, 0)));
}
