#include "defml/powers_diff.hpp"

#include <cmath>
#include <stdexcept>

namespace defml {

double generalized_power(double z, unsigned n, double h, PowerVariant v) {
  const double step = (v == PowerVariant::Falling) ? -h : h;
  double p = 1.0;
  for (unsigned k = 0; k < n; ++k) p *= z + step * k;
  return p;
}

Rational generalized_power(const Rational& z, unsigned n, const Rational& h,
                           PowerVariant v) {
  const Rational step = (v == PowerVariant::Falling) ? -h : h;
  Rational p(1);
  for (unsigned k = 0; k < n; ++k)
    p *= z + step * Rational(static_cast<long>(k));
  return p;
}

BivarPoly generalized_power_symbolic(unsigned n, PowerVariant v) {
  const long sign = (v == PowerVariant::Falling) ? -1 : 1;
  BivarPoly p = BivarPoly::one();
  for (unsigned k = 0; k < n; ++k)
    p = p * (BivarPoly::y() + BivarPoly::term(Rational(sign * static_cast<long>(k)), 0, 1));
  return p;
}

BivarPoly h_difference(const BivarPoly& p) {
  return (p.shift_y_by_h() - p).divide_exact_by_h();
}

double deformed_exp(double x, double y, double h) {
  if (h == 0.0) throw std::domain_error("deformed_exp: h must be nonzero");
  const double base = 1.0 + h * x;
  if (base == 0.0) throw std::domain_error("deformed_exp: pole at x = -1/h");
  if (base < 0.0)
    throw std::domain_error("deformed_exp: non-positive base in real mode");
  return std::exp((y / h) * std::log1p(h * x));
}

std::complex<double> deformed_exp(const std::complex<double>& x, double y, double h) {
  if (h == 0.0) throw std::domain_error("deformed_exp: h must be nonzero");
  const std::complex<double> base = 1.0 + h * x;
  if (base == 0.0) throw std::domain_error("deformed_exp: pole at x = -1/h");
  return std::exp((y / h) * std::log(base));
}

PowerSeries deformed_exp_series(unsigned order, ExpSign sign) {
  const PowerVariant v =
      (sign == ExpSign::PlusH) ? PowerVariant::Falling : PowerVariant::Rising;
  PowerSeries s(order);
  for (unsigned n = 0; n <= order; ++n)
    s.set_coeff(n, generalized_power_symbolic(n, v).scaled(
                       Rational(1) / Rational::factorial(n)));
  return s;
}

}  // namespace defml
