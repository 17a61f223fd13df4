#pragma once

#include <vector>

#include "defml/bivar_poly.hpp"

namespace defml {

/// Truncated formal power series in x with BivarPoly coefficients.
///
/// The truncation order is explicit state: a series of order N stores
/// coefficients of x^0..x^N. Arithmetic between operands of different
/// orders truncates the result to the minimum order; nothing is ever
/// promoted silently.
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order) : coeffs_(order + 1) {}

  static PowerSeries constant(const BivarPoly& c, unsigned order) {
    PowerSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }
  static PowerSeries one(unsigned order) { return constant(BivarPoly::one(), order); }

  unsigned order() const { return static_cast<unsigned>(coeffs_.size()) - 1; }
  const BivarPoly& coeff(unsigned n) const { return coeffs_.at(n); }
  void set_coeff(unsigned n, BivarPoly c) { coeffs_.at(n) = std::move(c); }

  PowerSeries truncated(unsigned new_order) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  /// Cauchy product, truncated to min(a.order, b.order).
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

  PowerSeries scaled(const BivarPoly& c) const;
  PowerSeries scaled(const Rational& c) const;

  friend bool operator==(const PowerSeries& a, const PowerSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Formal d/dx; the result has order() - 1.
  PowerSeries derivative_x() const;

  /// Multiplication by x^k with truncation to the same order.
  PowerSeries shifted_up(unsigned k) const;

  /// Formal exponential via the derivative recurrence; the constant
  /// coefficient must be zero.
  PowerSeries exp() const;

  /// Exact division by x^k: the k lowest coefficients must vanish.
  /// The result keeps the coefficients of x^0..x^(order-k).
  PowerSeries divide_exact_by_x(unsigned k) const;

  /// Coefficient-wise exact division by y.
  PowerSeries divide_exact_by_y() const;

  /// Division by a series with unit constant term (long division,
  /// exact over the coefficient ring).
  PowerSeries divide_by_unit_series(const PowerSeries& d) const;

  /// Coefficient-wise substitution y -> y + h.
  PowerSeries shift_y_by_h() const;

 private:
  std::vector<BivarPoly> coeffs_;  // index = power of x
};

}  // namespace defml
