#pragma once

#include <vector>

namespace defml {

/// Spectral data of a symmetric tridiagonal matrix: eigenvalues sorted
/// ascending; first_components[i] is the first entry of the normalized
/// eigenvector belonging to eigenvalues[i].
struct TridiagEigen {
  std::vector<double> eigenvalues;
  std::vector<double> first_components;
};

/// Implicit-shift QL for a symmetric tridiagonal matrix with diagonal
/// `diag` (size n) and off-diagonal `off` (size n-1). Only the first row
/// of the eigenvector matrix is accumulated, which is all a Gauss rule
/// needs. Throws NumericError if an eigenvalue fails to converge.
TridiagEigen tridiag_eigen_ql(std::vector<double> diag, std::vector<double> off);

/// Sturm-sequence bisection for the same matrix; eigenvalues only.
/// Slower but entirely independent of the QL path.
std::vector<double> tridiag_eigen_bisect(const std::vector<double>& diag,
                                         const std::vector<double>& off,
                                         double tol = 1e-14);

}  // namespace defml
