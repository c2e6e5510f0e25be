#pragma once

#include <vector>

#include "spectral_twins/graph.hpp"
#include "spectral_twins/matrix.hpp"
#include "spectral_twins/spectra.hpp"
#include "spectral_twins/tolerances.hpp"

namespace spectral_twins {

enum class Convention { Strong, Weak };

/// Per-vertex sign classification of an eigenvector: +1, -1, or 0 when
/// |phi(v)| <= zero_tol * max|phi|.
struct SignPattern {
  std::vector<int> signs;
  double zero_tol;
};

SignPattern sign_pattern(const std::vector<double>& phi, double zero_tol = tol::kNodalZeroTol);

/// Number of maximal connected same-sign subgraphs. Strong counting requires
/// every vertex classified nonzero and throws Err::ZeroEntry (index = vertex)
/// otherwise; weak counting merges zeros into both neighboring sign classes.
int count_nodal_domains(const WeightedGraph& g, const std::vector<double>& phi,
                        Convention convention = Convention::Strong,
                        double zero_tol = tol::kNodalZeroTol);

struct BoundViolation {
  int n;      // 1-based index into the sequence
  int count;  // nu_n
  int lower;  // n - l
  int upper;  // n
};

/// Nodal counts ordered by ascending eigenvalue; all indices reported
/// 1-based. Degenerate indices are still counted but flagged.
struct NodalReport {
  std::vector<int> counts;  // counts[i] = nu_{i+1}
  Convention convention = Convention::Strong;
  std::vector<int> degenerate_indices;
  std::vector<BoundViolation> bound_violations;
  std::vector<double> eigenvalues;
};

NodalReport nodal_sequence(const WeightedGraph& g, const Matrix& L,
                           Convention convention = Convention::Strong,
                           double zero_tol = tol::kNodalZeroTol);

/// Re-checks n - l <= nu_n <= n over the non-degenerate indices.
std::vector<BoundViolation> check_bounds(const NodalReport& report, int independent_cycles);

/// Nodal domain count of the interior triangle of the 7_1 pair, predicted
/// from the eigenvalue alone: 1 when (lambda < 0 and |lambda| > max(a,b,c))
/// or (0 < lambda < min(a,b,c)), else 2. Throws Err::ZeroEigenvalue.
int interior_rule_7_1(double lambda, double a, double b, double c);

/// Interior prediction plus 3 when lambda > 0 (each boundary pendant then
/// carries the opposite sign of its interior neighbor and forms its own domain).
int predicted_total_7_1(double lambda, double a, double b, double c);

struct IsonodalReport {
  bool verdict = false;    // sequences equal at every non-degenerate index
  bool all_equal = false;  // sequences equal everywhere
  std::vector<int> counts1;
  std::vector<int> counts2;
  std::vector<int> degenerate_indices;  // union, 1-based
  std::vector<int> mismatched_indices;  // 1-based
};

IsonodalReport isonodal(const WeightedGraph& g1, const Matrix& L1,
                        const WeightedGraph& g2, const Matrix& L2);

}  // namespace spectral_twins
