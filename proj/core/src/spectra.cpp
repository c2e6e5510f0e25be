#include "spectral_twins/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/tolerances.hpp"

namespace spectral_twins {

std::vector<double> SpectralDecomposition::eigenvector(int n) const {
  std::vector<double> v(eigenvectors.dim());
  for (int i = 0; i < eigenvectors.dim(); ++i) v[i] = eigenvectors(i, n);
  return v;
}

static double offdiag_norm(const Matrix& a) {
  double s = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

SpectralDecomposition eig_sym(const Matrix& L) {
  const int n = L.dim();
  if (n <= 0) throw Error(Err::DimensionMismatch, "empty matrix");
  if (!L.is_symmetric()) throw Error(Err::DimensionMismatch, "eig_sym needs a symmetric matrix");

  Matrix a = L;
  Matrix v = Matrix::identity(n);

  const double fro = a.frobenius_norm();
  const double thresh = tol::kJacobiOffdiagFactor * fro;
  const double rotate_floor = thresh / (10.0 * n * n);

  int sweep = 0;
  while (offdiag_norm(a) > thresh) {
    if (++sweep > tol::kJacobiSweepLimit)
      throw Error(Err::NoConvergence,
                  "jacobi sweep limit exceeded at dim " + std::to_string(n));
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::fabs(apq) <= rotate_floor) continue;

        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;
        if (std::fabs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);  // avoid theta^2 overflow
        } else {
          t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);

        a(p, p) -= t * apq;
        a(q, q) += t * apq;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (int i = 0; i < n; ++i) {
          if (i == p || i == q) continue;
          const double aip = a(i, p);
          const double aiq = a(i, q);
          a(i, p) = aip - s * (aiq + tau * aip);
          a(p, i) = a(i, p);
          a(i, q) = aiq + s * (aip - tau * aiq);
          a(q, i) = a(i, q);
        }
        for (int i = 0; i < n; ++i) {
          const double vip = v(i, p);
          const double viq = v(i, q);
          v(i, p) = c * vip - s * viq;
          v(i, q) = s * vip + c * viq;
        }
      }
    }
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) < a(y, y); });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors = Matrix(n);
  for (int col = 0; col < n; ++col) {
    const int src = order[col];
    out.eigenvalues[col] = a(src, src);

    double norm2 = 0.0;
    for (int i = 0; i < n; ++i) norm2 += v(i, src) * v(i, src);
    const double inv = 1.0 / std::sqrt(norm2);

    double max_entry = 0.0;
    for (int i = 0; i < n; ++i) max_entry = std::max(max_entry, std::fabs(v(i, src)));
    double sign = 1.0;
    for (int i = 0; i < n; ++i) {
      if (std::fabs(v(i, src)) > tol::kSignNormalizeTol * max_entry) {
        sign = v(i, src) > 0.0 ? 1.0 : -1.0;
        break;
      }
    }
    for (int i = 0; i < n; ++i) out.eigenvectors(i, col) = sign * inv * v(i, src);
  }

  const double spread = out.eigenvalues.back() - out.eigenvalues.front();
  out.degeneracy_tol = tol::kDegeneracyFactor * std::max(1.0, spread);
  out.degenerate.assign(n, false);
  for (int i = 0; i + 1 < n; ++i) {
    if (std::fabs(out.eigenvalues[i + 1] - out.eigenvalues[i]) < out.degeneracy_tol) {
      out.degenerate[i] = true;
      out.degenerate[i + 1] = true;
    }
  }
  return out;
}

std::vector<double> char_poly(const Matrix& L) {
  const int n = L.dim();
  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[0] = 1.0;

  // The recurrence telescopes traces of growing products and cancels hard
  // for the last few coefficients; extended precision buys the lost digits
  // on these small dense matrices.
  std::vector<long double> a(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[static_cast<size_t>(i) * n + j] = L(i, j);

  std::vector<long double> m = a;  // holds A * (previous auxiliary)
  std::vector<long double> next(m.size());
  for (int k = 1; k <= n; ++k) {
    long double trace = 0.0L;
    for (int i = 0; i < n; ++i) trace += m[static_cast<size_t>(i) * n + i];
    const long double ck = -trace / k;
    coeffs[k] = static_cast<double>(ck);
    if (k == n) break;
    for (int i = 0; i < n; ++i) m[static_cast<size_t>(i) * n + i] += ck;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long double s = 0.0L;
        for (int r = 0; r < n; ++r)
          s += a[static_cast<size_t>(i) * n + r] * m[static_cast<size_t>(r) * n + j];
        next[static_cast<size_t>(i) * n + j] = s;
      }
    m.swap(next);
  }
  return coeffs;
}

double char_poly_eval(const std::vector<double>& coeffs, double x) {
  double acc = 0.0;
  for (double c : coeffs) acc = acc * x + c;
  return acc;
}

IsospectralityReport isospectral(const Matrix& L1, const Matrix& L2, double tol_value) {
  if (L1.dim() != L2.dim())
    throw Error(Err::DimensionMismatch, "isospectral needs matrices of equal dimension");

  IsospectralityReport report;
  report.tolerance_used = tol_value;

  const SpectralDecomposition d1 = eig_sym(L1);
  const SpectralDecomposition d2 = eig_sym(L2);
  for (size_t i = 0; i < d1.eigenvalues.size(); ++i)
    report.max_eigenvalue_gap =
        std::max(report.max_eigenvalue_gap, std::fabs(d1.eigenvalues[i] - d2.eigenvalues[i]));

  const std::vector<double> p1 = char_poly(L1);
  const std::vector<double> p2 = char_poly(L2);
  for (size_t k = 0; k < p1.size(); ++k) {
    const double scale = std::max({1.0, std::fabs(p1[k]), std::fabs(p2[k])});
    report.charpoly_coeff_gap =
        std::max(report.charpoly_coeff_gap, std::fabs(p1[k] - p2[k]) / scale);
  }

  report.verdict =
      report.max_eigenvalue_gap <= tol_value && report.charpoly_coeff_gap <= tol_value;
  return report;
}

double verify_transplantation(const Matrix& L1, const Matrix& L2, const Matrix& T) {
  if (L1.dim() != L2.dim() || L1.dim() != T.dim())
    throw Error(Err::DimensionMismatch, "transplantation check needs equal dimensions");
  const LuDecomposition f = lu_factor(T);
  if (f.singular) throw Error(Err::SingularT, "transplantation matrix is singular");
  const Matrix conjugated = lu_solve(f, L1 * T);  // T^{-1} L1 T
  return max_abs_diff(conjugated, L2);
}

}  // namespace spectral_twins
