#pragma once

#include <vector>

#include "defml/power_series.hpp"

namespace defml {

enum class FamilyKind { G, GMonic, Phi, PhiMonic };
enum class Provenance { Recurrence, Convolution, GenFun, Transform };

/// A polynomial family generated up to some index, with h kept symbolic.
/// members[n] is the degree-n member.
struct FamilySequence {
  FamilyKind kind;
  Provenance provenance;
  std::vector<BivarPoly> members;

  unsigned n_max() const { return static_cast<unsigned>(members.size()) - 1; }
  const BivarPoly& at(unsigned n) const { return members.at(n); }
};

/// Scale factor taking member n of a family to its monic counterpart
/// (n!/2^n for g, (n+1)!/2^(n+1) for phi).
Rational monic_scale(FamilyKind kind, unsigned n);

/// g by the three-term recurrence
/// (n+1) g_{n+1} = 2y g_n + h^2 (n-1) g_{n-1}, g_0 = 1, g_1 = 2y.
/// The step is applied from n = 1 on; at n = 1 the trailing term
/// vanishes, so this agrees with the definition.
FamilySequence g_by_recurrence(unsigned n_max);

/// Independent route: the binomial convolution of falling and rising
/// generalized powers, g_n = (1/n!) sum_m C(n,m) y^(m,h) y^[n-m,h].
BivarPoly g_by_convolution(unsigned n);

/// Independent route: coefficients of the product of the two deformed
/// exponential expansions.
FamilySequence g_by_genfun(unsigned n_max);

/// Pointwise evaluation of g_n through its terminating hypergeometric
/// representation 2y h^(n-1) 2F1(1-n, 1-y/h; 2 | 2), summed exactly
/// over rationals. Requires n >= 1 and h != 0.
Rational g_hypergeometric(unsigned n, const Rational& y, const Rational& h);

/// Exact rescaling of a g or phi sequence to its monic family.
FamilySequence to_monic(const FamilySequence& seq);

/// phi by the three-term recurrence
/// (n+2) phi_{n+1} = 2y phi_n - h^2 n phi_{n-1}, phi_0 = 2, phi_1 = 2y.
FamilySequence phi_by_recurrence(unsigned n_max);

/// Exact transform phi_n(y) = g_{n+1}(iy) / (i^(n+1) y). Powers of i are
/// tracked as exact (real, imaginary) pairs; a nonzero imaginary residue
/// or a non-exact division by y raises InternalConsistencyError.
BivarPoly phi_from_g(const FamilySequence& g_seq, unsigned n);

/// Independent route: expansion of (exp((2y/h) arctan(hx)) - 1) / (xy).
/// The exponent is built directly from the arctangent series, which is
/// polynomial in h, so no division by h ever occurs.
FamilySequence phi_by_genfun(unsigned n_max);

/// Monic phi members from the exponential generating function
/// exp((2y/h) arctan(hx/2)) / (1 + h^2 x^2 / 4); coefficient n times n!
/// gives the member. Cross-checked against the recurrence route; a
/// mismatch raises InternalConsistencyError.
FamilySequence phi_monic_genfun(unsigned n_max);

}  // namespace defml
