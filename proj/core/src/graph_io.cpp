#include "spectral_twins/graph_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/jsonout.hpp"

namespace spectral_twins {

using nlohmann::json;

static double as_real(const json& j, const char* what) {
  if (!j.is_number()) throw Error(Err::ParseError, std::string(what) + " must be a number");
  return j.get<double>();
}

GraphFile read_graph_text(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(Err::ParseError, std::string("graph file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw Error(Err::ParseError, "graph file must be a JSON object");
  if (!doc.contains("vertices") || !doc["vertices"].is_number_integer())
    throw Error(Err::ParseError, "missing integer field \"vertices\"");
  if (!doc.contains("edges") || !doc["edges"].is_array())
    throw Error(Err::ParseError, "missing array field \"edges\"");

  const int vertices = doc["vertices"].get<int>();
  std::vector<Edge> edges;
  for (const json& row : doc["edges"]) {
    if (!row.is_array() || row.size() != 3)
      throw Error(Err::ParseError, "each edge must be a [u, v, w] triple");
    if (!row[0].is_number_integer() || !row[1].is_number_integer())
      throw Error(Err::ParseError, "edge endpoints must be integers (1-based)");
    // file ids are 1-based
    edges.push_back({row[0].get<int>() - 1, row[1].get<int>() - 1, as_real(row[2], "edge weight")});
  }

  std::optional<std::vector<double>> potentials;
  if (doc.contains("potentials")) {
    if (!doc["potentials"].is_array())
      throw Error(Err::ParseError, "\"potentials\" must be an array");
    potentials.emplace();
    for (const json& p : doc["potentials"]) potentials->push_back(as_real(p, "potential"));
  }

  GraphFile out{build_graph(vertices, std::move(edges), std::move(potentials)), std::nullopt};

  if (doc.contains("lengths")) {
    if (!doc["lengths"].is_array()) throw Error(Err::ParseError, "\"lengths\" must be an array");
    std::vector<double> lengths;
    for (const json& l : doc["lengths"]) lengths.push_back(as_real(l, "length"));
    if (lengths.size() != out.graph.edges().size())
      throw Error(Err::LengthMismatch, "need one length per edge");
    out.lengths = std::move(lengths);
  }
  return out;
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Err::ParseError, "cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return read_graph_text(buf.str());
}

std::string write_graph_text(const WeightedGraph& g,
                             const std::optional<std::vector<double>>& lengths) {
  JsonValue doc = JsonValue::object();
  doc.set("vertices", g.vertex_count());

  JsonValue edges = JsonValue::array();
  for (const Edge& e : g.edges()) {
    JsonValue row = JsonValue::array();
    row.push(e.u + 1).push(e.v + 1).push(e.w);
    edges.push(std::move(row));
  }
  doc.set("edges", std::move(edges));

  bool nonzero_potential = false;
  for (double p : g.potentials()) nonzero_potential |= p != 0.0;
  if (nonzero_potential) {
    JsonValue pots = JsonValue::array();
    for (double p : g.potentials()) pots.push(p);
    doc.set("potentials", std::move(pots));
  }

  if (lengths) {
    JsonValue ls = JsonValue::array();
    for (double l : *lengths) ls.push(l);
    doc.set("lengths", std::move(ls));
  }
  return doc.dump() + "\n";
}

void write_graph_file(const std::string& path, const WeightedGraph& g,
                      const std::optional<std::vector<double>>& lengths) {
  std::ofstream out(path);
  if (!out) throw Error(Err::ParseError, "cannot write graph file: " + path);
  out << write_graph_text(g, lengths);
}

}  // namespace spectral_twins
