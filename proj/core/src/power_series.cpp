#include "defml/power_series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace defml {

PowerSeries PowerSeries::truncated(unsigned new_order) const {
  if (new_order > order())
    throw std::invalid_argument("PowerSeries::truncated: order may only shrink");
  PowerSeries r(new_order);
  for (unsigned n = 0; n <= new_order; ++n) r.coeffs_[n] = coeffs_[n];
  return r;
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r(order());
  for (unsigned n = 0; n <= order(); ++n) r.coeffs_[n] = -coeffs_[n];
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const unsigned ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (unsigned n = 0; n <= ord; ++n) r.coeffs_[n] = a.coeffs_[n] + b.coeffs_[n];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) {
  const unsigned ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (unsigned n = 0; n <= ord; ++n) r.coeffs_[n] = a.coeffs_[n] - b.coeffs_[n];
  return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const unsigned ord = std::min(a.order(), b.order());
  PowerSeries r(ord);
  for (unsigned n = 0; n <= ord; ++n) {
    BivarPoly acc;
    for (unsigned k = 0; k <= n; ++k) acc += a.coeffs_[k] * b.coeffs_[n - k];
    r.coeffs_[n] = std::move(acc);
  }
  return r;
}

PowerSeries PowerSeries::scaled(const BivarPoly& c) const {
  PowerSeries r(order());
  for (unsigned n = 0; n <= order(); ++n) r.coeffs_[n] = coeffs_[n] * c;
  return r;
}

PowerSeries PowerSeries::scaled(const Rational& c) const {
  PowerSeries r(order());
  for (unsigned n = 0; n <= order(); ++n) r.coeffs_[n] = coeffs_[n].scaled(c);
  return r;
}

PowerSeries PowerSeries::derivative_x() const {
  if (order() == 0)
    throw std::invalid_argument("PowerSeries::derivative_x: order 0 series");
  PowerSeries r(order() - 1);
  for (unsigned n = 1; n <= order(); ++n)
    r.coeffs_[n - 1] = coeffs_[n].scaled(Rational(static_cast<long>(n)));
  return r;
}

PowerSeries PowerSeries::shifted_up(unsigned k) const {
  PowerSeries r(order());
  for (unsigned n = k; n <= order(); ++n) r.coeffs_[n] = coeffs_[n - k];
  return r;
}

PowerSeries PowerSeries::exp() const {
  if (!coeffs_[0].is_zero())
    throw std::domain_error("series_exp requires zero constant term");
  // b = exp(a) satisfies b' = a'b, i.e. n*b_n = sum_{k=1..n} k*a_k*b_{n-k}.
  PowerSeries b(order());
  b.coeffs_[0] = BivarPoly::one();
  for (unsigned n = 1; n <= order(); ++n) {
    BivarPoly acc;
    for (unsigned k = 1; k <= n; ++k)
      acc += coeffs_[k].scaled(Rational(static_cast<long>(k))) * b.coeffs_[n - k];
    b.coeffs_[n] = acc.scaled(Rational(1, static_cast<long>(n)));
  }
  return b;
}

PowerSeries PowerSeries::divide_exact_by_x(unsigned k) const {
  if (k > order())
    throw std::invalid_argument("division by x^k exceeds series order");
  for (unsigned n = 0; n < k; ++n)
    if (!coeffs_[n].is_zero())
      throw std::domain_error("series division by x^" + std::to_string(k) +
                              " not exact: coefficient of x^" + std::to_string(n) +
                              " is " + coeffs_[n].to_string());
  PowerSeries r(order() - k);
  for (unsigned n = k; n <= order(); ++n) r.coeffs_[n - k] = coeffs_[n];
  return r;
}

PowerSeries PowerSeries::divide_exact_by_y() const {
  PowerSeries r(order());
  for (unsigned n = 0; n <= order(); ++n) {
    try {
      r.coeffs_[n] = coeffs_[n].divide_exact_by_y();
    } catch (const std::domain_error& e) {
      throw std::domain_error("series division by y not exact at x^" +
                              std::to_string(n) + ": " + e.what());
    }
  }
  return r;
}

PowerSeries PowerSeries::divide_by_unit_series(const PowerSeries& d) const {
  if (!(d.coeffs_[0] == BivarPoly::one()))
    throw std::domain_error("series division requires unit constant term in divisor");
  const unsigned ord = std::min(order(), d.order());
  PowerSeries q(ord);
  for (unsigned n = 0; n <= ord; ++n) {
    BivarPoly acc = coeffs_[n];
    for (unsigned k = 1; k <= n; ++k) acc -= d.coeffs_[k] * q.coeffs_[n - k];
    q.coeffs_[n] = std::move(acc);
  }
  return q;
}

PowerSeries PowerSeries::shift_y_by_h() const {
  PowerSeries r(order());
  for (unsigned n = 0; n <= order(); ++n) r.coeffs_[n] = coeffs_[n].shift_y_by_h();
  return r;
}

}  // namespace defml
