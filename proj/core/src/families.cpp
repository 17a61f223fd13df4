#include "defml/families.hpp"

#include <stdexcept>
#include <string>

#include "defml/errors.hpp"
#include "defml/powers_diff.hpp"

namespace defml {

namespace {

const BivarPoly kTwoY = BivarPoly::term(Rational(2), 1, 0);

// (2y/h) arctan(c*h*x) as a series in x: the coefficient of x^(2k+1) is
// 2y (-1)^k c^(2k+1) h^(2k) / (2k+1), already polynomial in h.
PowerSeries scaled_arctan_exponent(unsigned order, const Rational& c) {
  PowerSeries a(order);
  Rational c_pow = c;  // c^(2k+1)
  long sign = 1;
  for (unsigned k = 0; 2 * k + 1 <= order; ++k) {
    const Rational coeff = Rational(2 * sign, 2 * static_cast<long>(k) + 1) * c_pow;
    a.set_coeff(2 * k + 1, BivarPoly::term(coeff, 1, 2 * k));
    c_pow *= c * c;
    sign = -sign;
  }
  return a;
}

}  // namespace

Rational monic_scale(FamilyKind kind, unsigned n) {
  switch (kind) {
    case FamilyKind::G:
      return Rational::factorial(n) / Rational(2).pow(n);
    case FamilyKind::Phi:
      return Rational::factorial(n + 1) / Rational(2).pow(n + 1);
    default:
      throw std::invalid_argument("monic_scale: family is already monic");
  }
}

FamilySequence g_by_recurrence(unsigned n_max) {
  FamilySequence seq{FamilyKind::G, Provenance::Recurrence, {}};
  seq.members.reserve(n_max + 1);
  seq.members.push_back(BivarPoly::one());
  if (n_max == 0) return seq;
  seq.members.push_back(kTwoY);
  const BivarPoly h_sq = BivarPoly::h(2);
  for (unsigned n = 1; n < n_max; ++n) {
    BivarPoly next = kTwoY * seq.members[n] +
                     (h_sq * seq.members[n - 1]).scaled(Rational(static_cast<long>(n) - 1));
    seq.members.push_back(next.scaled(Rational(1, static_cast<long>(n) + 1)));
  }
  return seq;
}

BivarPoly g_by_convolution(unsigned n) {
  BivarPoly sum;
  for (unsigned m = 0; m <= n; ++m)
    sum += (generalized_power_symbolic(m, PowerVariant::Falling) *
            generalized_power_symbolic(n - m, PowerVariant::Rising))
               .scaled(Rational::binomial(n, m));
  return sum.scaled(Rational(1) / Rational::factorial(n));
}

FamilySequence g_by_genfun(unsigned n_max) {
  const PowerSeries product = deformed_exp_series(n_max, ExpSign::PlusH) *
                              deformed_exp_series(n_max, ExpSign::MinusH);
  FamilySequence seq{FamilyKind::G, Provenance::GenFun, {}};
  seq.members.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) seq.members.push_back(product.coeff(n));
  return seq;
}

Rational g_hypergeometric(unsigned n, const Rational& y, const Rational& h) {
  if (n < 1) throw std::invalid_argument("g_hypergeometric: n must be >= 1");
  if (h.is_zero())
    throw std::domain_error("g_hypergeometric: representation requires h != 0");
  // Terminating 2F1(1-n, 1-y/h; 2 | 2): k runs to n-1 because (1-n)_k
  // vanishes beyond that.
  const Rational a(1 - static_cast<long>(n));
  const Rational b = Rational(1) - y / h;
  Rational term(1);  // (a)_k (b)_k / (2)_k * 2^k / k!
  Rational sum(1);
  for (unsigned k = 0; k + 1 < n; ++k) {
    const Rational kk(static_cast<long>(k));
    term *= (a + kk) * (b + kk) * Rational(2) /
            ((Rational(2) + kk) * (kk + Rational(1)));
    sum += term;
  }
  return Rational(2) * y * h.pow(static_cast<long>(n) - 1) * sum;
}

FamilySequence to_monic(const FamilySequence& seq) {
  FamilyKind monic_kind;
  if (seq.kind == FamilyKind::G)
    monic_kind = FamilyKind::GMonic;
  else if (seq.kind == FamilyKind::Phi)
    monic_kind = FamilyKind::PhiMonic;
  else
    throw std::invalid_argument("to_monic: sequence is already monic");

  FamilySequence out{monic_kind, seq.provenance, {}};
  out.members.reserve(seq.members.size());
  for (unsigned n = 0; n < seq.members.size(); ++n)
    out.members.push_back(seq.members[n].scaled(monic_scale(seq.kind, n)));
  return out;
}

FamilySequence phi_by_recurrence(unsigned n_max) {
  FamilySequence seq{FamilyKind::Phi, Provenance::Recurrence, {}};
  seq.members.reserve(n_max + 1);
  seq.members.push_back(BivarPoly::constant(Rational(2)));
  if (n_max == 0) return seq;
  seq.members.push_back(kTwoY);
  const BivarPoly h_sq = BivarPoly::h(2);
  for (unsigned n = 1; n < n_max; ++n) {
    BivarPoly next = kTwoY * seq.members[n] -
                     (h_sq * seq.members[n - 1]).scaled(Rational(static_cast<long>(n)));
    seq.members.push_back(next.scaled(Rational(1, static_cast<long>(n) + 2)));
  }
  return seq;
}

BivarPoly phi_from_g(const FamilySequence& g_seq, unsigned n) {
  if (g_seq.kind != FamilyKind::G)
    throw std::invalid_argument("phi_from_g: source must be the g family");
  if (n + 1 >= g_seq.members.size())
    throw std::invalid_argument("phi_from_g: source sequence too short for n=" +
                                std::to_string(n));
  // g_{n+1}(iy) as exact real and imaginary parts, then divided by
  // i^(n+1) via the four-cycle.
  const auto parts = g_seq.members[n + 1].substitute_y_imaginary();
  BivarPoly re, im;
  switch ((n + 1) % 4) {
    case 0: re = parts.re;  im = parts.im;  break;
    case 1: re = parts.im;  im = -parts.re; break;
    case 2: re = -parts.re; im = -parts.im; break;
    case 3: re = -parts.im; im = parts.re;  break;
  }
  if (!im.is_zero())
    throw InternalConsistencyError(
        "phi_from_g: residual imaginary part " + im.to_string() + " at n=" +
        std::to_string(n));
  try {
    return re.divide_exact_by_y();
  } catch (const std::domain_error& e) {
    throw InternalConsistencyError("phi_from_g: " + std::string(e.what()));
  }
}

FamilySequence phi_by_genfun(unsigned n_max) {
  // Expand exp((2y/h) arctan(hx)) one order beyond n_max, strip the
  // constant term, and divide by x and by y.
  const PowerSeries exponent = scaled_arctan_exponent(n_max + 1, Rational(1));
  const PowerSeries numerator = exponent.exp() - PowerSeries::one(n_max + 1);
  const PowerSeries phi = numerator.divide_exact_by_x(1).divide_exact_by_y();

  FamilySequence seq{FamilyKind::Phi, Provenance::GenFun, {}};
  seq.members.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) seq.members.push_back(phi.coeff(n));
  return seq;
}

FamilySequence phi_monic_genfun(unsigned n_max) {
  // exp((2y/h) arctan(hx/2)) / (1 + h^2 x^2 / 4), coefficients scaled
  // by n! to undo the exponential generating convention.
  const PowerSeries exponent = scaled_arctan_exponent(n_max, Rational(1, 2));
  PowerSeries denom = PowerSeries::one(n_max);
  if (n_max >= 2) denom.set_coeff(2, BivarPoly::term(Rational(1, 4), 0, 2));
  const PowerSeries egf = exponent.exp().divide_by_unit_series(denom);

  FamilySequence seq{FamilyKind::PhiMonic, Provenance::GenFun, {}};
  seq.members.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n)
    seq.members.push_back(egf.coeff(n).scaled(Rational::factorial(n)));

  const FamilySequence by_rec = to_monic(phi_by_recurrence(n_max));
  for (unsigned n = 0; n <= n_max; ++n)
    if (!(seq.members[n] == by_rec.members[n]))
      throw InternalConsistencyError(
          "phi_monic_genfun: generating function disagrees with recurrence at n=" +
          std::to_string(n) + ": " + seq.members[n].to_string() + " vs " +
          by_rec.members[n].to_string());
  return seq;
}

}  // namespace defml
