#pragma once

#include <vector>

namespace spectral_twins {

/// Dense square real matrix, row-major. Sized for desk-scale spectral work
/// (dim <= a few dozen); all operations are plain deterministic loops.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(int dim) : dim_(dim), a_(static_cast<size_t>(dim) * dim, 0.0) {}

  static Matrix identity(int dim);

  int dim() const { return dim_; }

  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * dim_ + j]; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * dim_ + j]; }

  Matrix transpose() const;
  double trace() const;
  double max_norm() const;        // max |a_ij|
  double frobenius_norm() const;
  bool is_symmetric() const;      // exact entrywise equality

  std::vector<double> apply(const std::vector<double>& x) const;  // A x

 private:
  int dim_ = 0;
  std::vector<double> a_;
};

Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(double s, const Matrix& a);

double max_abs_diff(const Matrix& a, const Matrix& b);

/// LU factorization with partial pivoting (deterministic pivot choice:
/// largest magnitude, lowest row index on ties).
struct LuDecomposition {
  Matrix lu;
  std::vector<int> perm;
  double parity = 1.0;      // sign of the permutation
  bool singular = false;
  double min_pivot = 0.0;   // smallest |pivot| encountered
};

LuDecomposition lu_factor(const Matrix& a);
double lu_determinant(const LuDecomposition& f);
std::vector<double> lu_solve(const LuDecomposition& f, std::vector<double> rhs);
Matrix lu_solve(const LuDecomposition& f, const Matrix& rhs);  // X with A X = rhs

double determinant(const Matrix& a);

}  // namespace spectral_twins
