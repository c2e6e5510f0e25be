#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectral_twins/graph.hpp"

namespace spectral_twins {

/// Contents of a graph file:
///   { "vertices": V, "edges": [[u, v, w], ...],
///     "potentials": [p1..pV]?, "lengths": [l1..lE]? }
/// Vertex ids in files are 1-based.
struct GraphFile {
  WeightedGraph graph;
  std::optional<std::vector<double>> lengths;
};

GraphFile read_graph_text(const std::string& text);
GraphFile read_graph_file(const std::string& path);

std::string write_graph_text(const WeightedGraph& g,
                             const std::optional<std::vector<double>>& lengths = std::nullopt);
void write_graph_file(const std::string& path, const WeightedGraph& g,
                      const std::optional<std::vector<double>>& lengths = std::nullopt);

}  // namespace spectral_twins
