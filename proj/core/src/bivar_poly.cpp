#include "defml/bivar_poly.hpp"

#include <stdexcept>

namespace defml {

BivarPoly BivarPoly::term(Rational c, unsigned deg_y, unsigned deg_h) {
  BivarPoly p;
  if (!c.is_zero()) p.terms_.emplace(Monomial{deg_y, deg_h}, std::move(c));
  return p;
}

unsigned BivarPoly::degree_y() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_y);
  return d;
}

unsigned BivarPoly::degree_h() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.deg_h);
  return d;
}

Rational BivarPoly::coeff(unsigned deg_y, unsigned deg_h) const {
  const auto it = terms_.find(Monomial{deg_y, deg_h});
  return it == terms_.end() ? Rational(0) : it->second;
}

void BivarPoly::add_term(const Monomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

BivarPoly BivarPoly::operator-() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

BivarPoly& BivarPoly::operator+=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

BivarPoly& BivarPoly::operator-=(const BivarPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

BivarPoly operator*(const BivarPoly& a, const BivarPoly& b) {
  BivarPoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_)
      r.add_term({ma.deg_y + mb.deg_y, ma.deg_h + mb.deg_h}, ca * cb);
  return r;
}

BivarPoly BivarPoly::scaled(const Rational& c) const {
  BivarPoly r;
  if (c.is_zero()) return r;
  for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
  return r;
}

Parity BivarPoly::parity_y() const {
  bool has_even = false, has_odd = false;
  for (const auto& [m, c] : terms_) (m.deg_y % 2 == 0 ? has_even : has_odd) = true;
  if (has_even && has_odd) return Parity::Neither;
  return has_odd ? Parity::Odd : Parity::Even;  // zero counts as even
}

bool BivarPoly::even_in_h() const {
  for (const auto& [m, c] : terms_)
    if (m.deg_h % 2 != 0) return false;
  return true;
}

BivarPoly BivarPoly::negate_y() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, m.deg_y % 2 == 0 ? c : -c);
  return r;
}

BivarPoly BivarPoly::shift_y_by_h() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    // y^a -> sum_j C(a,j) y^j h^(a-j)
    for (unsigned j = 0; j <= m.deg_y; ++j)
      r.add_term({j, m.deg_h + (m.deg_y - j)}, c * Rational::binomial(m.deg_y, j));
  }
  return r;
}

BivarPoly BivarPoly::derivative_y() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_)
    if (m.deg_y > 0)
      r.terms_.emplace(Monomial{m.deg_y - 1, m.deg_h}, c * Rational(static_cast<long>(m.deg_y)));
  return r;
}

BivarPoly BivarPoly::substitute_h(const Rational& h_val) const {
  BivarPoly r;
  for (const auto& [m, c] : terms_)
    r.add_term({m.deg_y, 0}, c * h_val.pow(static_cast<long>(m.deg_h)));
  return r;
}

BivarPoly BivarPoly::divide_exact_by_y() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.deg_y == 0)
      throw std::domain_error("division by y not exact: monomial y^0*h^" +
                              std::to_string(m.deg_h) + " has coefficient " + c.to_string());
    r.terms_.emplace(Monomial{m.deg_y - 1, m.deg_h}, c);
  }
  return r;
}

BivarPoly BivarPoly::divide_exact_by_h() const {
  BivarPoly r;
  for (const auto& [m, c] : terms_) {
    if (m.deg_h == 0)
      throw std::domain_error("division by h not exact: monomial y^" +
                              std::to_string(m.deg_y) + "*h^0 has coefficient " + c.to_string());
    r.terms_.emplace(Monomial{m.deg_y, m.deg_h - 1}, c);
  }
  return r;
}

ComplexPolyParts BivarPoly::substitute_y_imaginary() const {
  // i^a four-cycle: 0 -> 1, 1 -> i, 2 -> -1, 3 -> -i.
  ComplexPolyParts parts;
  for (const auto& [m, c] : terms_) {
    switch (m.deg_y % 4) {
      case 0: parts.re.add_term(m, c); break;
      case 1: parts.im.add_term(m, c); break;
      case 2: parts.re.add_term(m, -c); break;
      case 3: parts.im.add_term(m, -c); break;
    }
  }
  return parts;
}

std::string BivarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  // Highest y-degree first; ties broken by descending h-degree.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    std::string piece;
    const Rational mag = c.abs();
    const bool unit = (mag == Rational(1)) && (m.deg_y + m.deg_h > 0);
    if (!unit) piece += mag.to_string();
    if (m.deg_h > 0) {
      if (!piece.empty()) piece += "*";
      piece += (m.deg_h == 1) ? "h" : "h^" + std::to_string(m.deg_h);
    }
    if (m.deg_y > 0) {
      if (!piece.empty()) piece += "*";
      piece += (m.deg_y == 1) ? "y" : "y^" + std::to_string(m.deg_y);
    }
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + piece;
    else
      out += (c.sign() < 0 ? " - " : " + ") + piece;
  }
  return out;
}

}  // namespace defml
