#pragma once

#include <complex>
#include <functional>
#include <string>
#include <vector>

#include "defml/rational.hpp"

namespace defml {

/// Recurrence data of the monic phi family seen as a Jacobi matrix:
/// diagonal identically zero (the weight is even), off-diagonal
/// parameters beta_k = h^2 k(k+1)/4, plus the total mass of the weight.
struct JacobiMatrix {
  unsigned n = 0;
  std::vector<double> alpha;  // n entries, all zero
  std::vector<double> beta;   // n-1 entries, beta[k-1] = h^2 k(k+1)/4
  double mu0 = 0.0;

  static JacobiMatrix phi_monic(unsigned n, double h);
};

struct QuadratureRule {
  std::vector<double> nodes;    // strictly increasing, symmetric about 0
  std::vector<double> weights;  // positive, symmetric
};

/// One verified identity instance: what was measured, what the two
/// candidate claims say, and how far apart they are.
struct VerificationReport {
  std::string identity;
  int n = -1;
  int m = -1;
  std::string h;  // "sym", or the substituted value
  bool measured_numeric = true;
  double measured = 0.0;
  std::string measured_text;  // used instead of `measured` for exact checks
  std::string claimed_paper;
  std::string claimed_derived;
  double abs_dev = 0.0;
  double rel_dev = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// The weight y / sinh(pi y / h); the removable singularity at y = 0 is
/// filled with the limit h / pi. Requires h > 0.
double weight_eval(double y, double h);

/// Exact coefficient of h^(k+2) in the k-th moment of the weight:
/// 2 (k+1)! (2^(k+2) - 1) |B_(k+2)| / (k+2)! for even k, zero for odd k.
/// Derived from the geometric expansion of 1/sinh and the Bernoulli
/// closed form of the even zeta values.
Rational weight_moment_coeff(unsigned k);

/// mu_k = integral of y^k * weight over the real line.
double weight_moment(unsigned k, double h);

/// Integral of f against the weight over the real line: the domain is
/// truncated where the exponential tail is negligible, then integrated
/// by tanh-sinh quadrature; the truncation point doubles until the
/// result is stable. f must have at most polynomial growth.
/// Throws NumericError (carrying the best estimate) on non-convergence.
double integrate_weighted(const std::function<double(double)>& f, double h,
                          double tol);

/// The n real zeros of the monic phi member, ascending. Computed as
/// eigenvalues of the Jacobi matrix; exact +/- symmetry is restored by
/// pairing mirrored eigenvalues, so zero is hit exactly for odd n.
std::vector<double> phi_zeros(unsigned n, double h);

/// Zeros of g_n: purely imaginary by construction, {0} joined with
/// i times the zeros of the monic phi member of degree n-1. Sorted by
/// imaginary part; 0 appears twice when n-1 is odd (double root).
std::vector<std::complex<double>> g_zeros(unsigned n, double h);

/// n-point Gauss rule for the weight, built from the Jacobi matrix
/// spectrum (nodes = eigenvalues, weights = mu0 times squared first
/// eigenvector components).
QuadratureRule gauss_rule(unsigned n, double h);

/// Scaled residual of a candidate zero: |p(z)| / (|p'(z)| max(1, |z|)),
/// i.e. the size of one Newton correction relative to |z|.
double scaled_zero_residual(const class BivarPoly& p, double z, double h);
double scaled_zero_residual(const class BivarPoly& p, const std::complex<double>& z,
                            double h);

struct OrthogonalityResult {
  std::vector<VerificationReport> cells;    // (n, m) with n <= m
  VerificationReport diagonal_constant;     // which claimed constant matched
};

/// Numeric orthogonality check of the phi family: every pair integral
/// I_nm for n, m <= n_max. Off-diagonal entries pass when
/// |I_nm| <= tol * max(I_nn, I_mm); diagonal entries are compared to
/// both the printed constant 2 h^(2n) / (n+1) and the derived constant
/// 2 h^(2n+2) / (n+1) at 100*tol relative, with the derived one deciding
/// the pass flag.
OrthogonalityResult orthogonality_matrix(unsigned n_max, const Rational& h,
                                         double tol);

}  // namespace defml
