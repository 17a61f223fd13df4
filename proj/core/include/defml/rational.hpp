#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace defml {

/// Exact arbitrary-precision rational number.
///
/// Always stored in lowest terms with a positive denominator; every
/// operation is exact. Backed by GMP's mpq, which canonicalizes on
/// construction.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "p", "p/q", or a plain decimal literal such as "0.25" (decimals
  /// are converted exactly).
  static Rational from_string(const std::string& s);

  static Rational factorial(unsigned n);
  static Rational binomial(unsigned n, unsigned k);

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }

  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    v_ /= o.v_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

  Rational abs() const { return Rational(::abs(v_)); }

  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;

  /// Serialized as "p" for integers, otherwise "p/q".
  std::string to_string() const;
  std::string numerator_string() const { return v_.get_num().get_str(); }
  std::string denominator_string() const { return v_.get_den().get_str(); }

  double to_double() const { return v_.get_d(); }
  long double to_long_double() const;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace defml
