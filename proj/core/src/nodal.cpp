#include "spectral_twins/nodal.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <set>
#include <string>

#include "spectral_twins/errors.hpp"

namespace spectral_twins {

SignPattern sign_pattern(const std::vector<double>& phi, double zero_tol) {
  double max_abs = 0.0;
  for (double x : phi) max_abs = std::max(max_abs, std::fabs(x));
  const double cutoff = zero_tol * max_abs;

  SignPattern out;
  out.zero_tol = zero_tol;
  out.signs.resize(phi.size());
  for (size_t i = 0; i < phi.size(); ++i) {
    if (std::fabs(phi[i]) <= cutoff)
      out.signs[i] = 0;
    else
      out.signs[i] = phi[i] > 0.0 ? 1 : -1;
  }
  return out;
}

// Connected components of the subgraph induced on `keep`, by BFS.
static int induced_components(const WeightedGraph& g, const std::vector<bool>& keep) {
  const int n = g.vertex_count();
  std::vector<bool> visited(n, false);
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (!keep[start] || visited[start]) continue;
    ++components;
    std::queue<int> frontier;
    frontier.push(start);
    visited[start] = true;
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const auto& inc : g.incident(v)) {
        if (keep[inc.neighbor] && !visited[inc.neighbor]) {
          visited[inc.neighbor] = true;
          frontier.push(inc.neighbor);
        }
      }
    }
  }
  return components;
}

int count_nodal_domains(const WeightedGraph& g, const std::vector<double>& phi,
                        Convention convention, double zero_tol) {
  const int n = g.vertex_count();
  if (static_cast<int>(phi.size()) != n)
    throw Error(Err::LengthMismatch, "vector length does not match vertex count");

  const SignPattern pattern = sign_pattern(phi, zero_tol);

  if (convention == Convention::Strong) {
    for (int v = 0; v < n; ++v)
      if (pattern.signs[v] == 0)
        throw Error(Err::ZeroEntry,
                    "eigenvector vanishes at vertex " + std::to_string(v + 1) +
                        " (strong counting undefined)",
                    v);
    std::vector<bool> plus(n), minus(n);
    for (int v = 0; v < n; ++v) {
      plus[v] = pattern.signs[v] > 0;
      minus[v] = pattern.signs[v] < 0;
    }
    return induced_components(g, plus) + induced_components(g, minus);
  }

  // Weak counting: maximal connected nonnegative and nonpositive subgraphs.
  // A whole component of the graph made of zeros shows up on both sides and
  // is counted once.
  std::vector<bool> nonneg(n), nonpos(n), zero(n);
  for (int v = 0; v < n; ++v) {
    nonneg[v] = pattern.signs[v] >= 0;
    nonpos[v] = pattern.signs[v] <= 0;
    zero[v] = pattern.signs[v] == 0;
  }
  int count = induced_components(g, nonneg) + induced_components(g, nonpos);

  std::vector<bool> visited(n, false);
  for (int start = 0; start < n; ++start) {
    if (visited[start]) continue;
    // walk the whole-graph component of `start`
    bool all_zero = true;
    std::queue<int> frontier;
    frontier.push(start);
    visited[start] = true;
    all_zero &= zero[start];
    while (!frontier.empty()) {
      const int v = frontier.front();
      frontier.pop();
      for (const auto& inc : g.incident(v)) {
        if (!visited[inc.neighbor]) {
          visited[inc.neighbor] = true;
          all_zero &= zero[inc.neighbor];
          frontier.push(inc.neighbor);
        }
      }
    }
    if (all_zero) --count;
  }
  return count;
}

static void require_matching(const WeightedGraph& g, const Matrix& L) {
  const int n = g.vertex_count();
  if (L.dim() != n)
    throw Error(Err::DimensionMismatch, "matrix dimension does not match vertex count");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const bool has_entry = L(i, j) != 0.0;
      if (has_entry != g.adjacent(i, j))
        throw Error(Err::DimensionMismatch,
                    "matrix sparsity does not match the graph adjacency at (" +
                        std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    }
}

NodalReport nodal_sequence(const WeightedGraph& g, const Matrix& L, Convention convention,
                           double zero_tol) {
  require_matching(g, L);
  const SpectralDecomposition dec = eig_sym(L);
  const int n = g.vertex_count();

  NodalReport report;
  report.convention = convention;
  report.eigenvalues = dec.eigenvalues;
  report.counts.reserve(n);
  for (int i = 0; i < n; ++i) {
    report.counts.push_back(count_nodal_domains(g, dec.eigenvector(i), convention, zero_tol));
    if (dec.degenerate[i]) report.degenerate_indices.push_back(i + 1);
  }
  report.bound_violations = check_bounds(report, g.independent_cycles());
  return report;
}

std::vector<BoundViolation> check_bounds(const NodalReport& report, int independent_cycles) {
  std::vector<BoundViolation> violations;
  const std::set<int> degenerate(report.degenerate_indices.begin(),
                                 report.degenerate_indices.end());
  for (size_t i = 0; i < report.counts.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    if (degenerate.count(n)) continue;
    const int lower = n - independent_cycles;
    const int upper = n;
    if (report.counts[i] < lower || report.counts[i] > upper)
      violations.push_back({n, report.counts[i], lower, upper});
  }
  return violations;
}

int interior_rule_7_1(double lambda, double a, double b, double c) {
  if (lambda == 0.0)
    throw Error(Err::ZeroEigenvalue, "interior rule is undefined at eigenvalue zero");
  const double lo = std::min({a, b, c});
  const double hi = std::max({a, b, c});
  if (lambda < 0.0 && std::fabs(lambda) > hi) return 1;
  if (lambda > 0.0 && lambda < lo) return 1;
  return 2;
}

int predicted_total_7_1(double lambda, double a, double b, double c) {
  const int interior = interior_rule_7_1(lambda, a, b, c);
  return interior + (lambda > 0.0 ? 3 : 0);
}

IsonodalReport isonodal(const WeightedGraph& g1, const Matrix& L1, const WeightedGraph& g2,
                        const Matrix& L2) {
  if (g1.vertex_count() != g2.vertex_count())
    throw Error(Err::DimensionMismatch, "isonodal needs equal vertex counts");

  const NodalReport r1 = nodal_sequence(g1, L1);
  const NodalReport r2 = nodal_sequence(g2, L2);

  IsonodalReport out;
  out.counts1 = r1.counts;
  out.counts2 = r2.counts;

  std::set<int> degenerate(r1.degenerate_indices.begin(), r1.degenerate_indices.end());
  degenerate.insert(r2.degenerate_indices.begin(), r2.degenerate_indices.end());
  out.degenerate_indices.assign(degenerate.begin(), degenerate.end());

  out.all_equal = true;
  out.verdict = true;
  for (size_t i = 0; i < out.counts1.size(); ++i) {
    if (out.counts1[i] == out.counts2[i]) continue;
    const int n = static_cast<int>(i) + 1;
    out.mismatched_indices.push_back(n);
    out.all_equal = false;
    if (!degenerate.count(n)) out.verdict = false;
  }
  return out;
}

}  // namespace spectral_twins
