#pragma once

#include <complex>
#include <map>
#include <string>

#include "defml/rational.hpp"

namespace defml {

enum class Parity { Even, Odd, Neither };

namespace detail {

template <typename T>
struct ScalarFromRational {
  static T convert(const Rational& r) { return T(r.to_double()); }
};
template <>
struct ScalarFromRational<long double> {
  static long double convert(const Rational& r) { return r.to_long_double(); }
};
template <>
struct ScalarFromRational<Rational> {
  static Rational convert(const Rational& r) { return r; }
};

}  // namespace detail

struct ComplexPolyParts;

/// Exact sparse polynomial in the two variables (y, h) over Rational.
///
/// Terms are keyed by exponent pair; zero coefficients are never stored,
/// so structural equality is exact equality. Values are immutable in
/// spirit: every operation returns a fresh polynomial.
class BivarPoly {
 public:
  struct Monomial {
    unsigned deg_y = 0;
    unsigned deg_h = 0;
    auto operator<=>(const Monomial&) const = default;
  };
  using TermMap = std::map<Monomial, Rational>;

  BivarPoly() = default;

  static BivarPoly constant(Rational c) { return term(std::move(c), 0, 0); }
  static BivarPoly one() { return constant(Rational(1)); }
  static BivarPoly y(unsigned deg = 1) { return term(Rational(1), deg, 0); }
  static BivarPoly h(unsigned deg = 1) { return term(Rational(1), 0, deg); }
  static BivarPoly term(Rational c, unsigned deg_y, unsigned deg_h);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  unsigned degree_y() const;
  unsigned degree_h() const;
  Rational coeff(unsigned deg_y, unsigned deg_h) const;
  const TermMap& terms() const { return terms_; }

  BivarPoly operator-() const;
  BivarPoly& operator+=(const BivarPoly& o);
  BivarPoly& operator-=(const BivarPoly& o);
  friend BivarPoly operator+(BivarPoly a, const BivarPoly& b) { return a += b; }
  friend BivarPoly operator-(BivarPoly a, const BivarPoly& b) { return a -= b; }
  friend BivarPoly operator*(const BivarPoly& a, const BivarPoly& b);

  BivarPoly scaled(const Rational& c) const;

  friend bool operator==(const BivarPoly& a, const BivarPoly& b) {
    return a.terms_ == b.terms_;
  }

  /// Horner evaluation: outer in y, inner in h. T may be double,
  /// long double (the extended-precision mode), std::complex<double>,
  /// or Rational for exact evaluation.
  template <typename T>
  T eval(const T& y_val, const T& h_val) const {
    T acc{};
    unsigned prev_dy = 0;
    bool first = true;
    // Iterate degrees of y from high to low; the map is sorted ascending.
    for (auto it = terms_.rbegin(); it != terms_.rend();) {
      const unsigned dy = it->first.deg_y;
      if (first) {
        first = false;
      } else {
        for (unsigned k = dy; k < prev_dy; ++k) acc = acc * y_val;
      }
      // Inner Horner over the h-coefficients of this y-degree
      // (stored descending when iterating in reverse).
      T inner{};
      unsigned prev_dh = 0;
      bool inner_first = true;
      while (it != terms_.rend() && it->first.deg_y == dy) {
        const unsigned dh = it->first.deg_h;
        if (inner_first) {
          inner_first = false;
        } else {
          for (unsigned k = dh; k < prev_dh; ++k) inner = inner * h_val;
        }
        inner = inner + detail::ScalarFromRational<T>::convert(it->second);
        prev_dh = dh;
        ++it;
      }
      for (unsigned k = 0; k < prev_dh; ++k) inner = inner * h_val;
      acc = acc + inner;
      prev_dy = dy;
    }
    for (unsigned k = 0; k < prev_dy; ++k) acc = acc * y_val;
    return acc;
  }

  Rational eval_exact(const Rational& y_val, const Rational& h_val) const {
    return eval<Rational>(y_val, h_val);
  }

  /// Parity of the polynomial as a function of y.
  Parity parity_y() const;

  /// True iff only even powers of h occur.
  bool even_in_h() const;

  BivarPoly negate_y() const;      // y -> -y
  BivarPoly shift_y_by_h() const;  // y -> y + h, exact binomial expansion
  BivarPoly derivative_y() const;
  BivarPoly substitute_h(const Rational& h_val) const;

  /// Exact division by y; throws std::domain_error naming the first
  /// offending monomial if some term has no factor of y.
  BivarPoly divide_exact_by_y() const;

  /// Exact division by h.
  BivarPoly divide_exact_by_h() const;

  /// Substitution y -> i*y with exact bookkeeping of powers of i:
  /// the result is split into real and imaginary parts.
  ComplexPolyParts substitute_y_imaginary() const;

  /// Expanded rendering, highest y-degree first, e.g. "4/3*y^3 + 2/3*h^2*y".
  std::string to_string() const;

 private:
  void add_term(const Monomial& m, const Rational& c);
  TermMap terms_;
};

struct ComplexPolyParts {
  BivarPoly re;
  BivarPoly im;
};

}  // namespace defml
