#include "defml/tridiagonal.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "defml/errors.hpp"

namespace defml {

namespace {

double hypot2(double a, double b) { return std::hypot(a, b); }

}  // namespace

TridiagEigen tridiag_eigen_ql(std::vector<double> diag, std::vector<double> off) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) throw std::invalid_argument("tridiag_eigen_ql: empty matrix");
  if (off.size() + 1 != diag.size())
    throw std::invalid_argument("tridiag_eigen_ql: off-diagonal size mismatch");

  std::vector<double>& d = diag;
  std::vector<double> e(n, 0.0);  // working off-diagonal, shifted by one
  for (int i = 0; i < n - 1; ++i) e[i] = off[i];
  std::vector<double> z(n, 0.0);  // first eigenvector components
  z[0] = 1.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= 1e-300 || std::fabs(e[m]) + dd == dd) break;
      }
      if (m != l) {
        if (iter++ == 50)
          throw NumericError("tridiag_eigen_ql: eigenvalue " + std::to_string(l) +
                                 " failed to converge",
                             d[l]);
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = hypot2(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, p = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = hypot2(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= p;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - p;
          r = (d[i] - g) * s + 2.0 * c * b;
          p = s * r;
          d[i + 1] = g + p;
          g = c * r - b;
          // Accumulate the Givens rotation on the tracked first row.
          f = z[i + 1];
          z[i + 1] = s * z[i] + c * f;
          z[i] = c * z[i] - s * f;
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= p;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }

  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) { return d[a] < d[b]; });

  TridiagEigen out;
  out.eigenvalues.resize(n);
  out.first_components.resize(n);
  for (int i = 0; i < n; ++i) {
    out.eigenvalues[i] = d[idx[i]];
    out.first_components[i] = z[idx[i]];
  }
  return out;
}

std::vector<double> tridiag_eigen_bisect(const std::vector<double>& diag,
                                         const std::vector<double>& off,
                                         double tol) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) throw std::invalid_argument("tridiag_eigen_bisect: empty matrix");

  // Gershgorin bound on the spectrum.
  double radius = 0.0;
  for (int i = 0; i < n; ++i) {
    double r = std::fabs(diag[i]);
    if (i > 0) r += std::fabs(off[i - 1]);
    if (i < n - 1) r += std::fabs(off[i]);
    radius = std::max(radius, r);
  }
  radius += 1.0;

  // Sturm count: number of eigenvalues strictly below x, from the signs
  // of the LDL^T pivots.
  const auto count_below = [&](double x) {
    int count = 0;
    double q = diag[0] - x;
    if (q < 0.0) ++count;
    for (int i = 1; i < n; ++i) {
      double denom = q;
      if (denom == 0.0) denom = 1e-300;
      q = diag[i] - x - off[i - 1] * off[i - 1] / denom;
      if (q < 0.0) ++count;
    }
    return count;
  };

  std::vector<double> values(n);
  for (int k = 0; k < n; ++k) {
    double lo = -radius, hi = radius;
    while (hi - lo > tol * std::max(1.0, std::fabs(lo) + std::fabs(hi))) {
      const double mid = 0.5 * (lo + hi);
      if (count_below(mid) <= k)
        lo = mid;
      else
        hi = mid;
    }
    values[k] = 0.5 * (lo + hi);
  }
  return values;
}

}  // namespace defml
