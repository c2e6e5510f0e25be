#pragma once

#include <vector>

#include "spectral_twins/matrix.hpp"

namespace spectral_twins {

/// Eigenvalues ascending; eigenvectors are the matching unit-norm columns
/// with the first entry of magnitude above the sign tolerance made positive.
/// degenerate[n] marks eigenvalues closer than degeneracy_tol to a neighbor.
struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;  // column n pairs with eigenvalues[n]
  std::vector<bool> degenerate;
  double degeneracy_tol = 0.0;

  std::vector<double> eigenvector(int n) const;
};

/// Cyclic Jacobi on a symmetric matrix. Fixed sweep order and rotation
/// formulas, so identical input gives identical output run to run.
/// Throws Err::NoConvergence past the sweep limit.
SpectralDecomposition eig_sym(const Matrix& L);

/// Coefficients of det(xI - L), monic, highest degree first
/// (result[0] = 1, result[dim] = constant term). Faddeev-LeVerrier.
std::vector<double> char_poly(const Matrix& L);

/// Horner evaluation of a char_poly-style coefficient list.
double char_poly_eval(const std::vector<double>& coeffs, double x);

struct IsospectralityReport {
  double max_eigenvalue_gap = 0.0;
  double charpoly_coeff_gap = 0.0;  // per-coefficient, relative to max(1, |c1|, |c2|)
  bool verdict = false;
  double tolerance_used = 0.0;
};

/// Compares sorted spectra and characteristic polynomials; verdict is true
/// iff both gaps are within tol. Throws Err::DimensionMismatch.
IsospectralityReport isospectral(const Matrix& L1, const Matrix& L2, double tol);

/// Returns max|T^{-1} L1 T - L2|. T is inverted by pivoted elimination;
/// throws Err::SingularT when a pivot collapses.
double verify_transplantation(const Matrix& L1, const Matrix& L2, const Matrix& T);

}  // namespace spectral_twins
