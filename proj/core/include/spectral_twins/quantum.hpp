#pragma once

#include <functional>
#include <span>
#include <vector>

#include "spectral_twins/graph.hpp"
#include "spectral_twins/matrix.hpp"
#include "spectral_twins/tolerances.hpp"

namespace spectral_twins {

/// A weighted graph with a positive length per edge, carrying -d^2/dx^2 on
/// each edge under Neumann (Kirchhoff) vertex conditions.
struct MetricGraph {
  WeightedGraph underlying;
  std::vector<double> lengths;  // parallel to underlying.edges()
  double total_length = 0.0;
};

/// Lengths taken equal to the weights.
MetricGraph metric_from_weighted(const WeightedGraph& g);
MetricGraph metric_graph(const WeightedGraph& g, std::vector<double> lengths);

/// Value at x in [0, L] of the edge eigenfunction interpolating the vertex
/// values phi_i (x = 0) and phi_j (x = L) at wavenumber k.
/// Throws Err::EdgePole when |sin(kL)| < pole_tol.
double edge_eval(double phi_i, double phi_j, double length, double k, double x);

/// V x V matrix of the Neumann conditions on the edge ansatz:
/// M_vv = sum_{e at v} cot(k L_e), M_vw = -1/sin(k L_vw) on edges.
/// Throws Err::AtPole naming the offending edges.
Matrix vertex_secular_matrix(const MetricGraph& mg, double k);

/// The 3x3 secular matrix of the 7_1 pair reduced to its interior triangle:
/// diagonal 2cot(2kc)+cot(kb), 2cot(2ka)+cot(kc), 2cot(2kb)+cot(ka) and
/// off-diagonal -1/sin(kc), -1/sin(kb), -1/sin(ka). Variant 2 swaps b and c.
Matrix reduced_secular_7_1(double a, double b, double c, double k, int variant);

/// Schur complement of M onto the `interior` index set. Throws Err::AtPole
/// when the boundary block is singular.
Matrix schur_complement_interior(const Matrix& m, std::span<const int> interior,
                                 std::span<const int> boundary);

/// det(M(k)) * prod_e sin(k L_e): continuous across the cot/csc poles.
/// Each row is cleared by its incident sine factors before the determinant
/// is taken, so no cot or csc is ever evaluated near a pole.
double regularized_secular(const MetricGraph& mg, double k);

/// det(A(k)) * sin(2ka) sin(2kb) sin(2kc) for the reduced 3x3 form.
/// Equals 8 * regularized_secular(metric of the same variant, k).
double regularized_secular_7_1(double a, double b, double c, double k, int variant);

struct FlaggedCandidate {
  enum class Reason { EdgeSinePole, DoubleRootDip };
  double k;
  Reason reason;
};

/// Result of a bracketing scan of a regularized secular function.
struct SecularScan {
  double k_min = 0.0;
  double k_max = 0.0;
  double grid_step = 0.0;
  std::vector<double> roots;  // ascending, strictly inside (k_min, k_max)
  std::vector<FlaggedCandidate> flagged;
  double min_root_spacing = 0.0;   // inf when fewer than 2 roots
  double missed_root_risk = 0.0;   // grid_step / min_root_spacing
};

/// Scans h on a uniform grid, brackets sign changes and refines them by
/// bisection to root_tol. A refined root within pole_tol of a vanishing
/// edge sine is reclassified as a flagged candidate (the vertex ansatz
/// cannot represent such eigenfunctions). |h| dips below dip_tol * local
/// scale without a sign change are flagged as possible double roots, with
/// the dip located by bisecting a finite-difference derivative.
SecularScan find_roots(const std::function<double(double)>& h,
                       const std::vector<double>& edge_lengths, double k_min, double k_max,
                       double grid_step = tol::kDefaultGridStep,
                       double root_tol = tol::kRootTol);

SecularScan find_roots(const MetricGraph& mg, double k_min, double k_max,
                       double grid_step = tol::kDefaultGridStep,
                       double root_tol = tol::kRootTol);

SecularScan find_roots_reduced_7_1(double a, double b, double c, int variant, double k_min,
                                   double k_max, double grid_step = tol::kDefaultGridStep,
                                   double root_tol = tol::kRootTol);

/// Eigenvector of the smallest-magnitude eigenvalue, normalized to unit
/// max-norm: the null direction of a (near-)singular symmetric matrix.
std::vector<double> secular_null_vector(const Matrix& a);

/// Full 6-vector of vertex values for the 7_1 pair at wavenumber k, given
/// the interior values: each pendant value is its interior neighbor's value
/// divided by the cosine of k times the pendant length. Throws Err::AtPole
/// when such a cosine is below pole_tol.
std::vector<double> reconstruct_boundary_7_1(double a, double b, double c, int variant,
                                             double k, const std::vector<double>& phi_interior);

/// Max over vertices of |sum of outgoing derivatives| of the assembled edge
/// functions, with phi scaled to unit max-norm. Zero for an exact
/// eigenfunction. Throws Err::EdgePole when an edge sine vanishes.
double vertex_residual(const MetricGraph& mg, double k, const std::vector<double>& phi);

}  // namespace spectral_twins
