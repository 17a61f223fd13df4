#include "defml/rational.hpp"

#include <cctype>
#include <cstdlib>

namespace defml {

Rational Rational::from_string(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("Rational: empty literal");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    // Exact decimal: digits after the dot become a power-of-ten denominator.
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const size_t frac_len = s.size() - dot - 1;
    if (frac_len == 0 || digits.empty())
      throw std::invalid_argument("Rational: malformed decimal '" + s + "'");
    for (size_t i = 0; i < digits.size(); ++i) {
      const char c = digits[i];
      if (!(std::isdigit(static_cast<unsigned char>(c)) ||
            (i == 0 && (c == '+' || c == '-'))))
        throw std::invalid_argument("Rational: malformed decimal '" + s + "'");
    }
    mpz_class num(digits, 10);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac_len);
    mpq_class q(num, den);
    q.canonicalize();
    return Rational(std::move(q));
  }
  try {
    mpq_class q(s, 10);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator");
    q.canonicalize();
    return Rational(std::move(q));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("Rational: malformed literal '" + s + "'");
  }
}

Rational Rational::factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational Rational::binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(mpq_class(b));
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero() && e < 0)
    throw std::domain_error("Rational: negative power of zero");
  const unsigned long mag = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), v_.get_num().get_mpz_t(), mag);
  mpz_pow_ui(den.get_mpz_t(), v_.get_den().get_mpz_t(), mag);
  mpq_class r = (e > 0) ? mpq_class(num, den) : mpq_class(den, num);
  r.canonicalize();
  return Rational(std::move(r));
}

std::string Rational::to_string() const {
  if (is_integer()) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

long double Rational::to_long_double() const {
  // mpq converts to double only; go through correctly-rounded string
  // conversion so the full long double mantissa is used.
  const long double n = strtold(v_.get_num().get_str().c_str(), nullptr);
  const long double d = strtold(v_.get_den().get_str().c_str(), nullptr);
  return n / d;
}

}  // namespace defml
