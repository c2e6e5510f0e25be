#include "spectral_twins/graph.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <string>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/tolerances.hpp"

namespace spectral_twins {

bool WeightedGraph::adjacent(int u, int v) const {
  for (const Incidence& inc : adjacency_[u])
    if (inc.neighbor == v) return true;
  return false;
}

WeightedGraph build_graph(int vertex_count, std::vector<Edge> edges,
                          std::optional<std::vector<double>> potentials) {
  if (vertex_count <= 0)
    throw Error(Err::BadVertexId, "vertex count must be positive, got " +
                                      std::to_string(vertex_count));

  std::set<std::pair<int, int>> seen;
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
      throw Error(Err::BadVertexId, "edge " + std::to_string(i) + " references vertex out of range",
                  static_cast<int>(i));
    if (e.u == e.v)
      throw Error(Err::LoopEdge, "edge " + std::to_string(i) + " is a loop at vertex " +
                                     std::to_string(e.u),
                  static_cast<int>(i));
    if (!(e.w > 0.0))
      throw Error(Err::NonPositiveWeight,
                  "edge " + std::to_string(i) + " has non-positive weight", static_cast<int>(i));
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second)
      throw Error(Err::DuplicateEdge, "duplicate edge between vertices " + std::to_string(e.u) +
                                          " and " + std::to_string(e.v),
                  static_cast<int>(i));
  }

  WeightedGraph g;
  g.vertex_count_ = vertex_count;
  g.edges_ = std::move(edges);
  if (potentials) {
    if (static_cast<int>(potentials->size()) != vertex_count)
      throw Error(Err::LengthMismatch, "potentials list must have one entry per vertex");
    g.potentials_ = std::move(*potentials);
  } else {
    g.potentials_.assign(vertex_count, 0.0);
  }

  g.adjacency_.assign(vertex_count, {});
  for (size_t i = 0; i < g.edges_.size(); ++i) {
    const Edge& e = g.edges_[i];
    g.adjacency_[e.u].push_back({e.v, static_cast<int>(i)});
    g.adjacency_[e.v].push_back({e.u, static_cast<int>(i)});
  }

  // connected components by union-find
  std::vector<int> parent(vertex_count);
  for (int i = 0; i < vertex_count; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int components = vertex_count;
  for (const Edge& e : g.edges_) {
    int ru = find(e.u), rv = find(e.v);
    if (ru != rv) {
      parent[ru] = rv;
      --components;
    }
  }
  g.components_ = components;
  return g;
}

GeneralizedLaplacian laplacian(const WeightedGraph& g) {
  const int n = g.vertex_count();
  Matrix m(n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = -e.w;
    m(e.v, e.u) = -e.w;
  }
  for (int i = 0; i < n; ++i) m(i, i) = g.potentials()[i];
  return {std::move(m)};
}

GeneralizedLaplacian combinatorial_laplacian(const WeightedGraph& g) {
  const int n = g.vertex_count();
  std::vector<double> weighted_degree(n, 0.0);
  for (const Edge& e : g.edges()) {
    weighted_degree[e.u] += e.w;
    weighted_degree[e.v] += e.w;
  }
  Matrix m(n);
  for (const Edge& e : g.edges()) {
    m(e.u, e.v) = -e.w;
    m(e.v, e.u) = -e.w;
  }
  for (int i = 0; i < n; ++i) m(i, i) = -weighted_degree[i];
  return {std::move(m)};
}

WeightedGraph line_graph(const WeightedGraph& parent, const std::array<double, 3>& labels) {
  if (labels[0] == labels[1] || labels[0] == labels[2] || labels[1] == labels[2])
    throw Error(Err::TooManyLabels, "the three edge labels must be pairwise distinct");

  const auto& pe = parent.edges();
  const int ne = static_cast<int>(pe.size());

  std::vector<int> label_of(ne, -1);
  for (int i = 0; i < ne; ++i) {
    for (int l = 0; l < 3; ++l)
      if (pe[i].w == labels[l]) label_of[i] = l;
    if (label_of[i] < 0)
      throw Error(Err::TooManyLabels,
                  "parent edge " + std::to_string(i) + " carries a weight outside the label set",
                  i);
  }

  std::vector<Edge> line_edges;
  for (int i = 0; i < ne; ++i) {
    for (int j = i + 1; j < ne; ++j) {
      const bool share = pe[i].u == pe[j].u || pe[i].u == pe[j].v || pe[i].v == pe[j].u ||
                         pe[i].v == pe[j].v;
      if (!share) continue;
      if (label_of[i] == label_of[j])
        throw Error(Err::NotThreeColored, "parent edges " + std::to_string(i) + " and " +
                                              std::to_string(j) +
                                              " share a vertex and a label");
      const int complement = 3 - label_of[i] - label_of[j];
      line_edges.push_back({i, j, labels[complement]});
    }
  }
  return build_graph(ne, std::move(line_edges));
}

Builtin71 builtin_7_1(double a, double b, double c) {
  if (!(a > 0.0) || !(b > 0.0) || !(c > 0.0))
    throw Error(Err::NonPositiveWeight, "weights a, b, c must be strictly positive");

  // 0-based ids; 0-2 are the pendant (boundary) vertices, 3-5 the triangle.
  auto make = [](double p14, double p25, double p36, double t45, double t46, double t56) {
    return build_graph(6, {{0, 3, p14},
                           {1, 4, p25},
                           {2, 5, p36},
                           {3, 4, t45},
                           {3, 5, t46},
                           {4, 5, t56}});
  };

  Builtin71 out{make(c, a, b, c, b, a), make(b, a, c, b, c, a), Matrix(6),
                {0, 1, 2},             {3, 4, 5},              a, b, c};

  const int t[6][6] = {
      {0, -1, 0, 0, 0, 1},
      {-1, 0, 0, 0, 1, 0},
      {0, 0, -1, 1, 0, 0},
      {0, 0, 1, 1, 0, 0},
      {0, 1, 0, 0, 0, 1},
      {1, 0, 0, 0, 1, 0},
  };
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) out.transplantation(i, j) = t[i][j];
  return out;
}

PolynomialImage polynomial_apply(const Matrix& L, const std::vector<double>& coeffs) {
  if (coeffs.empty()) throw Error(Err::BadRange, "polynomial needs at least one coefficient");
  const int n = L.dim();

  // Horner, highest coefficient first.
  Matrix acc(n);
  for (int i = 0; i < n; ++i) acc(i, i) = coeffs.back();
  for (int k = static_cast<int>(coeffs.size()) - 2; k >= 0; --k) {
    acc = acc * L;
    for (int i = 0; i < n; ++i) acc(i, i) += coeffs[k];
  }

  // The exact result is symmetric; averaging removes multiplication roundoff.
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double s = 0.5 * (acc(i, j) + acc(j, i));
      acc(i, j) = s;
      acc(j, i) = s;
    }

  PolynomialImage out;
  out.matrix = acc;

  const double zero_tol = tol::kOffdiagSignTol * std::max(1.0, acc.max_norm());
  out.valid = true;
  for (int i = 0; i < n && out.valid; ++i)
    for (int j = i + 1; j < n; ++j)
      if (acc(i, j) > zero_tol) {
        out.valid = false;
        break;
      }

  if (out.valid) {
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (acc(i, j) < -zero_tol) edges.push_back({i, j, -acc(i, j)});
    std::vector<double> potentials(n);
    for (int i = 0; i < n; ++i) potentials[i] = acc(i, i);
    out.graph = build_graph(n, std::move(edges), std::move(potentials));
  }
  return out;
}

}  // namespace spectral_twins
