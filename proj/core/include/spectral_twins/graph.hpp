#pragma once

#include <array>
#include <optional>
#include <vector>

#include "spectral_twins/matrix.hpp"

namespace spectral_twins {

struct Edge {
  int u;
  int v;
  double w;
};

/// Loop-free simple graph with strictly positive edge weights and an optional
/// real on-site potential per vertex. Vertex ids are 0-based internally;
/// file and CLI I/O is 1-based. Immutable after construction.
class WeightedGraph {
 public:
  WeightedGraph() = default;  // empty placeholder; build_graph makes real ones

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int components() const { return components_; }
  /// l = E - V + C, the number of independent cycles.
  int independent_cycles() const { return edge_count() - vertex_count_ + components_; }

  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<double>& potentials() const { return potentials_; }

  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool adjacent(int u, int v) const;

  struct Incidence {
    int neighbor;
    int edge_index;
  };
  const std::vector<Incidence>& incident(int v) const { return adjacency_[v]; }

  friend WeightedGraph build_graph(int vertex_count, std::vector<Edge> edges,
                                   std::optional<std::vector<double>> potentials);

 private:
  int vertex_count_ = 0;
  int components_ = 0;
  std::vector<Edge> edges_;
  std::vector<double> potentials_;
  std::vector<std::vector<Incidence>> adjacency_;
};

/// Validates and assembles a graph. Throws Error with code LoopEdge,
/// NonPositiveWeight, DuplicateEdge, BadVertexId or LengthMismatch.
WeightedGraph build_graph(int vertex_count, std::vector<Edge> edges,
                          std::optional<std::vector<double>> potentials = std::nullopt);

/// Symmetric matrix with -w_ij off the diagonal on edges and the vertex
/// potentials on the diagonal. Off-diagonal entries are <= 0 by construction.
struct GeneralizedLaplacian {
  Matrix matrix;
};

GeneralizedLaplacian laplacian(const WeightedGraph& g);

/// Same matrix with the potentials replaced by -sum_j w_ij (the weighted
/// degree, negated). Row i then sums to exactly twice the diagonal entry;
/// flipping the sign of the potentials gives the zero-row-sum form.
GeneralizedLaplacian combinatorial_laplacian(const WeightedGraph& g);

/// Builds the line graph of `parent`: one vertex per parent edge, an edge
/// wherever two parent edges share a vertex. Parent edges must carry one of
/// the three distinct labels; adjacent parent edges must differ (a proper
/// 3-edge-coloring). The line edge gets the remaining third label as weight.
/// Line vertices are numbered by parent edge list order.
WeightedGraph line_graph(const WeightedGraph& parent, const std::array<double, 3>& labels);

/// The built-in isospectral pair "7_1" on 6 vertices with weight parameters
/// a, b, c. Vertices 0-2 are degree-1 (boundary), 3-5 form the interior
/// triangle. g2 is g1 with the roles of b and c exchanged. `transplantation`
/// is the fixed integer matrix conjugating one Laplacian into the other.
struct Builtin71 {
  WeightedGraph g1;
  WeightedGraph g2;
  Matrix transplantation;
  std::array<int, 3> boundary;
  std::array<int, 3> interior;
  double a, b, c;
};

Builtin71 builtin_7_1(double a, double b, double c);

/// P(L) evaluated by Horner in matrix arithmetic, coefficients ascending
/// (coeffs[k] multiplies L^k; the constant term acts on the diagonal).
/// `valid` reports whether the result still has no positive off-diagonal
/// entry; when it does, `graph` is the weighted graph whose Laplacian the
/// result is (off-diagonal entries below the sign tolerance are dropped).
struct PolynomialImage {
  Matrix matrix;
  bool valid = false;
  std::optional<WeightedGraph> graph;
};

PolynomialImage polynomial_apply(const Matrix& L, const std::vector<double>& coeffs);

}  // namespace spectral_twins
