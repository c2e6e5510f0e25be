#include "spectral_twins/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/tolerances.hpp"

namespace spectral_twins {

Matrix Matrix::identity(int dim) {
  Matrix m(dim);
  for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(dim_);
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

double Matrix::trace() const {
  double s = 0.0;
  for (int i = 0; i < dim_; ++i) s += (*this)(i, i);
  return s;
}

double Matrix::max_norm() const {
  double m = 0.0;
  for (double x : a_) m = std::max(m, std::fabs(x));
  return m;
}

double Matrix::frobenius_norm() const {
  double s = 0.0;
  for (double x : a_) s += x * x;
  return std::sqrt(s);
}

bool Matrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

std::vector<double> Matrix::apply(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != dim_)
    throw Error(Err::DimensionMismatch, "matrix-vector size mismatch");
  std::vector<double> y(dim_, 0.0);
  for (int i = 0; i < dim_; ++i) {
    double s = 0.0;
    for (int j = 0; j < dim_; ++j) s += (*this)(i, j) * x[j];
    y[i] = s;
  }
  return y;
}

static void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) throw Error(Err::DimensionMismatch, "matrix dimensions differ");
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  Matrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const int n = a.dim();
  Matrix c(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (int j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator*(double s, const Matrix& a) {
  Matrix c(a.dim());
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) c(i, j) = s * a(i, j);
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  double m = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) m = std::max(m, std::fabs(a(i, j) - b(i, j)));
  return m;
}

LuDecomposition lu_factor(const Matrix& a) {
  const int n = a.dim();
  LuDecomposition f;
  f.lu = a;
  f.perm.resize(n);
  for (int i = 0; i < n; ++i) f.perm[i] = i;

  const double pivot_floor = tol::kSingularPivotFactor * std::max(1.0, a.max_norm());
  f.min_pivot = std::numeric_limits<double>::infinity();

  for (int col = 0; col < n; ++col) {
    int best = col;
    double best_mag = std::fabs(f.lu(col, col));
    for (int r = col + 1; r < n; ++r) {
      const double mag = std::fabs(f.lu(r, col));
      if (mag > best_mag) {
        best_mag = mag;
        best = r;
      }
    }
    if (best != col) {
      for (int j = 0; j < n; ++j) std::swap(f.lu(col, j), f.lu(best, j));
      std::swap(f.perm[col], f.perm[best]);
      f.parity = -f.parity;
    }
    f.min_pivot = std::min(f.min_pivot, best_mag);
    if (best_mag <= pivot_floor) {
      f.singular = true;
      return f;
    }
    const double pivot = f.lu(col, col);
    for (int r = col + 1; r < n; ++r) {
      const double factor = f.lu(r, col) / pivot;
      f.lu(r, col) = factor;
      for (int j = col + 1; j < n; ++j) f.lu(r, j) -= factor * f.lu(col, j);
    }
  }
  return f;
}

double lu_determinant(const LuDecomposition& f) {
  if (f.singular) return 0.0;
  double det = f.parity;
  for (int i = 0; i < f.lu.dim(); ++i) det *= f.lu(i, i);
  return det;
}

std::vector<double> lu_solve(const LuDecomposition& f, std::vector<double> rhs) {
  if (f.singular) throw Error(Err::SingularT, "singular matrix in lu_solve");
  const int n = f.lu.dim();
  if (static_cast<int>(rhs.size()) != n)
    throw Error(Err::DimensionMismatch, "rhs size mismatch in lu_solve");
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) x[i] = rhs[f.perm[i]];
  for (int i = 1; i < n; ++i) {
    double s = x[i];
    for (int j = 0; j < i; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s;
  }
  for (int i = n - 1; i >= 0; --i) {
    double s = x[i];
    for (int j = i + 1; j < n; ++j) s -= f.lu(i, j) * x[j];
    x[i] = s / f.lu(i, i);
  }
  return x;
}

Matrix lu_solve(const LuDecomposition& f, const Matrix& rhs) {
  const int n = f.lu.dim();
  if (rhs.dim() != n) throw Error(Err::DimensionMismatch, "rhs dimension mismatch in lu_solve");
  Matrix x(n);
  std::vector<double> col(n);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) col[i] = rhs(i, j);
    std::vector<double> sol = lu_solve(f, col);
    for (int i = 0; i < n; ++i) x(i, j) = sol[i];
  }
  return x;
}

double determinant(const Matrix& a) {
  if (a.dim() == 0) return 1.0;
  if (a.dim() == 1) return a(0, 0);
  if (a.dim() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  if (a.dim() == 3) {
    return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
           a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
           a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
  }
  return lu_determinant(lu_factor(a));
}

}  // namespace spectral_twins
