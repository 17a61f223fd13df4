#pragma once

#include <complex>

#include "defml/power_series.hpp"

namespace defml {

/// Step-h generalized integer powers:
/// falling z^(n,h) = z(z-h)...(z-(n-1)h), rising z^[n,h] = z(z+h)...(z+(n-1)h).
enum class PowerVariant { Falling, Rising };

/// Sign convention for the deformed exponential (1+hx)^(y/h):
/// PlusH expands with falling powers of y, MinusH with rising powers.
enum class ExpSign { PlusH, MinusH };

double generalized_power(double z, unsigned n, double h, PowerVariant v);
Rational generalized_power(const Rational& z, unsigned n, const Rational& h,
                           PowerVariant v);

/// The same product with y symbolic: an exact polynomial in (y, h).
BivarPoly generalized_power_symbolic(unsigned n, PowerVariant v);

/// Forward h-difference in y: (p(y+h, h) - p(y, h)) / h.
/// The division by h is exact in the polynomial ring.
BivarPoly h_difference(const BivarPoly& p);

/// (1+hx)^(y/h), real mode. Requires h != 0 and 1+hx > 0; the pole at
/// x = -1/h and non-positive bases raise std::domain_error rather than
/// propagating NaN.
double deformed_exp(double x, double y, double h);

/// Complex-argument variant on the principal branch; only the pole is
/// excluded.
std::complex<double> deformed_exp(const std::complex<double>& x, double y, double h);

/// Formal expansion of the deformed exponential: the coefficient of x^n
/// is the symbolic generalized power of y divided by n! (falling for
/// PlusH, rising for MinusH). The |hx| < 1 convergence region is not a
/// concern of this formal object.
PowerSeries deformed_exp_series(unsigned order, ExpSign sign);

}  // namespace defml
