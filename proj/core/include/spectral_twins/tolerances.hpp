#pragma once

// Numerical policy for the whole library. Every threshold used by more than
// one translation unit lives here so tests and CLI agree with the core.

namespace spectral_twins::tol {

// eig_sym (cyclic Jacobi)
inline constexpr int kJacobiSweepLimit = 50;
inline constexpr double kJacobiOffdiagFactor = 1e-13;  // * frobenius_norm(L)
inline constexpr double kDegeneracyFactor = 1e-9;      // * max(1, eigenvalue spread)
inline constexpr double kSignNormalizeTol = 1e-12;     // * max|entry| of the eigenvector

// nodal counting
inline constexpr double kNodalZeroTol = 1e-9;  // * max|phi|

// linear solves
inline constexpr double kSingularPivotFactor = 1e-12;  // * max|entry|

// polynomial Laplacian maps: off-diagonal sign classification
inline constexpr double kOffdiagSignTol = 1e-12;  // * max(1, max|entry|)

// metric graph secular machinery
inline constexpr double kPoleTol = 1e-8;
inline constexpr double kRootTol = 1e-10;
inline constexpr double kDipFactor = 1e-6;  // * local |h| scale
inline constexpr double kDefaultGridStep = 1e-3;
inline constexpr double kDefaultKMax = 20.0;

}  // namespace spectral_twins::tol
