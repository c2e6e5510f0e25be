// Command-line surface: graph spectra, nodal sequences, isospectrality and
// isonodality verdicts, polynomial Laplacian maps, and metric-graph secular
// scans. Reports are JSON on stdout with sorted, fixed formatting so that
// identical invocations are byte-identical.
//
// Exit codes: 0 success / true verdict, 1 false verdict, 2 input error,
// 3 numerical failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/graph.hpp"
#include "spectral_twins/graph_io.hpp"
#include "spectral_twins/jsonout.hpp"
#include "spectral_twins/nodal.hpp"
#include "spectral_twins/quantum.hpp"
#include "spectral_twins/spectra.hpp"
#include "spectral_twins/tolerances.hpp"

namespace st = spectral_twins;

namespace {

std::vector<double> parse_reals(const std::string& csv, const char* what) {
  std::vector<double> out;
  std::string token;
  std::istringstream stream(csv);
  while (std::getline(stream, token, ',')) {
    try {
      size_t used = 0;
      out.push_back(std::stod(token, &used));
      if (used != token.size()) throw std::invalid_argument(token);
    } catch (const std::exception&) {
      throw st::Error(st::Err::ParseError, std::string("cannot parse ") + what + ": '" + token + "'");
    }
  }
  if (out.empty())
    throw st::Error(st::Err::ParseError, std::string(what) + " must be a comma-separated list");
  return out;
}

struct GraphInputOptions {
  std::string file;
  std::string builtin;
  int variant = 1;
  std::string weights = "1,2,3";
};

void add_graph_input(CLI::App* cmd, GraphInputOptions& opt) {
  cmd->add_option("file", opt.file, "graph file (JSON edge list, 1-based vertex ids)");
  cmd->add_option("--builtin", opt.builtin, "built-in pair name (7_1)");
  cmd->add_option("--variant", opt.variant, "built-in variant, 1 or 2")->check(CLI::Range(1, 2));
  cmd->add_option("--weights", opt.weights, "built-in weights a,b,c (default 1,2,3)");
}

struct ResolvedInput {
  st::WeightedGraph graph;
  std::optional<std::vector<double>> lengths;
  bool is_builtin = false;
  int variant = 1;
  double a = 0, b = 0, c = 0;
};

ResolvedInput resolve_input(const GraphInputOptions& opt) {
  if (opt.file.empty() == opt.builtin.empty())
    throw st::Error(st::Err::ParseError, "provide exactly one of: a graph file, or --builtin");

  if (!opt.builtin.empty()) {
    if (opt.builtin != "7_1")
      throw st::Error(st::Err::ParseError, "unknown builtin '" + opt.builtin + "' (have: 7_1)");
    const std::vector<double> w = parse_reals(opt.weights, "--weights");
    if (w.size() != 3)
      throw st::Error(st::Err::ParseError, "--weights needs exactly three values a,b,c");
    const st::Builtin71 pair = st::builtin_7_1(w[0], w[1], w[2]);
    ResolvedInput in;
    in.graph = opt.variant == 1 ? pair.g1 : pair.g2;
    in.is_builtin = true;
    in.variant = opt.variant;
    in.a = w[0];
    in.b = w[1];
    in.c = w[2];
    return in;
  }

  st::GraphFile gf = st::read_graph_file(opt.file);
  ResolvedInput in;
  in.graph = std::move(gf.graph);
  in.lengths = std::move(gf.lengths);
  return in;
}

st::JsonValue echo_inputs(const GraphInputOptions& opt, const ResolvedInput& in) {
  st::JsonValue echo = st::JsonValue::object();
  if (in.is_builtin) {
    echo.set("builtin", opt.builtin);
    echo.set("variant", in.variant);
    st::JsonValue w = st::JsonValue::array();
    w.push(in.a).push(in.b).push(in.c);
    echo.set("weights", std::move(w));
  } else {
    echo.set("file", opt.file);
  }
  echo.set("vertices", in.graph.vertex_count());
  echo.set("edges", in.graph.edge_count());
  return echo;
}

st::JsonValue real_list(const std::vector<double>& xs) {
  st::JsonValue arr = st::JsonValue::array();
  for (double x : xs) arr.push(x);
  return arr;
}

st::JsonValue int_list(const std::vector<int>& xs) {
  st::JsonValue arr = st::JsonValue::array();
  for (int x : xs) arr.push(x);
  return arr;
}

st::JsonValue graph_as_json(const st::WeightedGraph& g) {
  st::JsonValue doc = st::JsonValue::object();
  doc.set("vertices", g.vertex_count());
  st::JsonValue edges = st::JsonValue::array();
  for (const st::Edge& e : g.edges()) {
    st::JsonValue row = st::JsonValue::array();
    row.push(e.u + 1).push(e.v + 1).push(e.w);
    edges.push(std::move(row));
  }
  doc.set("edges", std::move(edges));
  bool nonzero = false;
  for (double p : g.potentials()) nonzero |= p != 0.0;
  if (nonzero) doc.set("potentials", real_list(g.potentials()));
  return doc;
}

void emit_report(const std::string& command, st::JsonValue inputs, st::JsonValue results,
                 const std::vector<std::string>& warnings) {
  st::JsonValue report = st::JsonValue::object();
  report.set("command", command);
  report.set("inputs", std::move(inputs));
  report.set("results", std::move(results));
  st::JsonValue warn = st::JsonValue::array();
  for (const std::string& w : warnings) warn.push(w);
  report.set("warnings", std::move(warn));
  std::cout << report.dump() << "\n";
}

int cmd_spectrum(const GraphInputOptions& opt) {
  const ResolvedInput in = resolve_input(opt);
  const st::Matrix L = st::laplacian(in.graph).matrix;
  const st::SpectralDecomposition dec = st::eig_sym(L);
  const std::vector<double> poly = st::char_poly(L);

  std::vector<std::string> warnings;
  st::JsonValue vectors = st::JsonValue::array();
  for (size_t n = 0; n < dec.eigenvalues.size(); ++n) {
    vectors.push(real_list(dec.eigenvector(static_cast<int>(n))));
    if (dec.degenerate[n])
      warnings.push_back("eigenvalue " + std::to_string(n + 1) + " is degenerate to tolerance");
  }

  st::JsonValue results = st::JsonValue::object();
  results.set("eigenvalues", real_list(dec.eigenvalues));
  results.set("eigenvectors", std::move(vectors));
  results.set("charpoly", real_list(poly));  // monic, highest degree first
  results.set("trace", L.trace());
  emit_report("spectrum", echo_inputs(opt, in), std::move(results), warnings);
  return 0;
}

int cmd_nodal(const GraphInputOptions& opt, const std::string& convention_name) {
  const ResolvedInput in = resolve_input(opt);
  const st::Convention convention =
      convention_name == "weak" ? st::Convention::Weak : st::Convention::Strong;
  const st::Matrix L = st::laplacian(in.graph).matrix;
  const st::NodalReport report = st::nodal_sequence(in.graph, L, convention);

  std::vector<std::string> warnings;
  for (int n : report.degenerate_indices)
    warnings.push_back("eigenvalue " + std::to_string(n) + " is degenerate to tolerance");
  if (convention == st::Convention::Weak) {
    const st::SpectralDecomposition dec = st::eig_sym(L);
    for (size_t n = 0; n < dec.eigenvalues.size(); ++n) {
      const st::SignPattern p = st::sign_pattern(dec.eigenvector(static_cast<int>(n)));
      for (size_t v = 0; v < p.signs.size(); ++v)
        if (p.signs[v] == 0)
          warnings.push_back("eigenvector " + std::to_string(n + 1) +
                             " vanishes at vertex " + std::to_string(v + 1));
    }
  }

  st::JsonValue results = st::JsonValue::object();
  results.set("convention", convention == st::Convention::Weak ? "weak" : "strong");
  results.set("counts", int_list(report.counts));
  results.set("eigenvalues", real_list(report.eigenvalues));
  results.set("independent_cycles", in.graph.independent_cycles());
  results.set("degenerate_indices", int_list(report.degenerate_indices));
  st::JsonValue violations = st::JsonValue::array();
  for (const st::BoundViolation& v : report.bound_violations) {
    st::JsonValue row = st::JsonValue::object();
    row.set("n", v.n);
    row.set("count", v.count);
    row.set("lower", v.lower);
    row.set("upper", v.upper);
    violations.push(std::move(row));
  }
  results.set("bound_violations", std::move(violations));

  if (in.is_builtin) {
    st::JsonValue predicted = st::JsonValue::array();
    bool all_match = true;
    for (size_t n = 0; n < report.eigenvalues.size(); ++n) {
      const int p = st::predicted_total_7_1(report.eigenvalues[n], in.a, in.b, in.c);
      predicted.push(p);
      if (p != report.counts[n]) all_match = false;
    }
    results.set("predicted_counts", std::move(predicted));
    results.set("predicted_matches", all_match);
  }

  emit_report("nodal", echo_inputs(opt, in), std::move(results), warnings);
  return 0;
}

int cmd_isospectral(const std::string& file1, const std::string& file2, double tolerance) {
  const st::GraphFile g1 = st::read_graph_file(file1);
  const st::GraphFile g2 = st::read_graph_file(file2);
  const st::IsospectralityReport rep = st::isospectral(st::laplacian(g1.graph).matrix,
                                                       st::laplacian(g2.graph).matrix, tolerance);

  st::JsonValue inputs = st::JsonValue::object();
  inputs.set("file1", file1);
  inputs.set("file2", file2);
  inputs.set("tolerance", tolerance);

  st::JsonValue results = st::JsonValue::object();
  results.set("max_eigenvalue_gap", rep.max_eigenvalue_gap);
  results.set("charpoly_coeff_gap", rep.charpoly_coeff_gap);
  results.set("verdict", rep.verdict);
  emit_report("isospectral", std::move(inputs), std::move(results), {});
  return rep.verdict ? 0 : 1;
}

int cmd_isonodal(const std::string& file1, const std::string& file2) {
  const st::GraphFile g1 = st::read_graph_file(file1);
  const st::GraphFile g2 = st::read_graph_file(file2);
  const st::IsonodalReport rep = st::isonodal(g1.graph, st::laplacian(g1.graph).matrix, g2.graph,
                                              st::laplacian(g2.graph).matrix);

  st::JsonValue inputs = st::JsonValue::object();
  inputs.set("file1", file1);
  inputs.set("file2", file2);

  std::vector<std::string> warnings;
  for (int n : rep.degenerate_indices)
    warnings.push_back("index " + std::to_string(n) + " is degenerate and only advisory");

  st::JsonValue results = st::JsonValue::object();
  results.set("counts1", int_list(rep.counts1));
  results.set("counts2", int_list(rep.counts2));
  results.set("mismatched_indices", int_list(rep.mismatched_indices));
  results.set("degenerate_indices", int_list(rep.degenerate_indices));
  results.set("verdict", rep.verdict);
  results.set("all_equal", rep.all_equal);
  emit_report("isonodal", std::move(inputs), std::move(results), warnings);
  return rep.verdict ? 0 : 1;
}

st::JsonValue polymap_side(const st::Matrix& L, const std::vector<double>& coeffs,
                           st::PolynomialImage& image) {
  image = st::polynomial_apply(L, coeffs);
  st::JsonValue side = st::JsonValue::object();
  side.set("valid", image.valid);
  st::JsonValue rows = st::JsonValue::array();
  for (int i = 0; i < image.matrix.dim(); ++i) {
    st::JsonValue row = st::JsonValue::array();
    for (int j = 0; j < image.matrix.dim(); ++j) row.push(image.matrix(i, j));
    rows.push(std::move(row));
  }
  side.set("matrix", std::move(rows));
  if (image.graph) {
    side.set("graph", graph_as_json(*image.graph));
    side.set("graph_edges", image.graph->edge_count());
  }
  return side;
}

int cmd_polymap(const GraphInputOptions& opt, const std::string& coeffs_csv,
                const std::string& out_path) {
  const std::vector<double> coeffs = parse_reals(coeffs_csv, "--coeffs");
  std::vector<std::string> warnings;

  if (!opt.builtin.empty()) {
    const std::vector<double> w = parse_reals(opt.weights, "--weights");
    if (w.size() != 3)
      throw st::Error(st::Err::ParseError, "--weights needs exactly three values a,b,c");
    const st::Builtin71 pair = st::builtin_7_1(w[0], w[1], w[2]);

    st::PolynomialImage image1, image2;
    st::JsonValue results = st::JsonValue::object();
    results.set("coefficients", real_list(coeffs));
    results.set("variant1", polymap_side(st::laplacian(pair.g1).matrix, coeffs, image1));
    results.set("variant2", polymap_side(st::laplacian(pair.g2).matrix, coeffs, image2));

    bool verdict = image1.valid && image2.valid;
    if (verdict) {
      const st::IsospectralityReport iso = st::isospectral(image1.matrix, image2.matrix, 1e-9);
      results.set("isospectral_verdict", iso.verdict);
      results.set("max_eigenvalue_gap", iso.max_eigenvalue_gap);
      const st::IsonodalReport inodal =
          st::isonodal(*image1.graph, st::laplacian(*image1.graph).matrix, *image2.graph,
                       st::laplacian(*image2.graph).matrix);
      results.set("isonodal_verdict", inodal.verdict);
      results.set("counts1", int_list(inodal.counts1));
      results.set("counts2", int_list(inodal.counts2));
      verdict = iso.verdict && inodal.verdict;
    } else {
      warnings.push_back("polynomial image violates the off-diagonal sign invariant");
    }

    if (!out_path.empty() && image1.graph) st::write_graph_file(out_path, *image1.graph);

    ResolvedInput in;
    in.graph = pair.g1;
    in.is_builtin = true;
    in.variant = opt.variant;
    in.a = w[0];
    in.b = w[1];
    in.c = w[2];
    emit_report("polymap", echo_inputs(opt, in), std::move(results), warnings);
    return verdict ? 0 : 1;
  }

  const ResolvedInput in = resolve_input(opt);
  st::PolynomialImage image;
  st::JsonValue results = st::JsonValue::object();
  results.set("coefficients", real_list(coeffs));
  results.set("image", polymap_side(st::laplacian(in.graph).matrix, coeffs, image));
  if (!image.valid) warnings.push_back("polynomial image violates the off-diagonal sign invariant");
  if (!out_path.empty() && image.graph) st::write_graph_file(out_path, *image.graph);
  emit_report("polymap", echo_inputs(opt, in), std::move(results), warnings);
  return image.valid ? 0 : 1;
}

st::JsonValue scan_as_json(const st::SecularScan& scan) {
  st::JsonValue out = st::JsonValue::object();
  out.set("roots", real_list(scan.roots));
  st::JsonValue flagged = st::JsonValue::array();
  for (const st::FlaggedCandidate& f : scan.flagged) {
    st::JsonValue row = st::JsonValue::object();
    row.set("k", f.k);
    row.set("reason", f.reason == st::FlaggedCandidate::Reason::EdgeSinePole
                          ? "edge_sine_pole"
                          : "double_root_dip");
    flagged.push(std::move(row));
  }
  out.set("flagged", std::move(flagged));
  out.set("min_root_spacing", scan.min_root_spacing);
  out.set("missed_root_risk", scan.missed_root_risk);
  return out;
}

int cmd_quantum(const GraphInputOptions& opt, double k_min, double k_max, double grid_step,
                double root_tol, const std::string& secular_csv) {
  const ResolvedInput in = resolve_input(opt);
  if (k_min <= 0.0) k_min = grid_step;
  std::vector<std::string> warnings;

  st::JsonValue results = st::JsonValue::object();
  results.set("k_min", k_min);
  results.set("k_max", k_max);
  results.set("grid_step", grid_step);

  if (in.is_builtin) {
    const st::SecularScan s1 =
        st::find_roots_reduced_7_1(in.a, in.b, in.c, 1, k_min, k_max, grid_step, root_tol);
    const st::SecularScan s2 =
        st::find_roots_reduced_7_1(in.a, in.b, in.c, 2, k_min, k_max, grid_step, root_tol);

    double max_gap = 0.0;
    const size_t shared = std::min(s1.roots.size(), s2.roots.size());
    for (size_t i = 0; i < shared; ++i)
      max_gap = std::max(max_gap, std::fabs(s1.roots[i] - s2.roots[i]));
    if (s1.roots.size() != s2.roots.size())
      warnings.push_back("variants found different root counts");

    results.set("variant1", scan_as_json(s1));
    results.set("variant2", scan_as_json(s2));
    results.set("compared_roots", static_cast<int>(shared));
    results.set("max_root_gap", max_gap);

    if (!secular_csv.empty()) {
      std::ofstream csv(secular_csv);
      if (!csv) throw st::Error(st::Err::ParseError, "cannot write " + secular_csv);
      csv << "k,h1,h2\n";
      const int steps = static_cast<int>(std::ceil((k_max - k_min) / grid_step));
      for (int i = 0; i <= steps; ++i) {
        const double k = i == steps ? k_max : k_min + i * grid_step;
        csv << st::format_double(k) << ','
            << st::format_double(st::regularized_secular_7_1(in.a, in.b, in.c, k, 1)) << ','
            << st::format_double(st::regularized_secular_7_1(in.a, in.b, in.c, k, 2)) << "\n";
      }
    }
  } else {
    const st::MetricGraph mg = in.lengths ? st::metric_graph(in.graph, *in.lengths)
                                          : st::metric_from_weighted(in.graph);
    const st::SecularScan scan = st::find_roots(mg, k_min, k_max, grid_step, root_tol);
    results.set("total_length", mg.total_length);
    results.set("scan", scan_as_json(scan));

    if (!secular_csv.empty()) {
      std::ofstream csv(secular_csv);
      if (!csv) throw st::Error(st::Err::ParseError, "cannot write " + secular_csv);
      csv << "k,h\n";
      const int steps = static_cast<int>(std::ceil((k_max - k_min) / grid_step));
      for (int i = 0; i <= steps; ++i) {
        const double k = i == steps ? k_max : k_min + i * grid_step;
        csv << st::format_double(k) << ',' << st::format_double(st::regularized_secular(mg, k))
            << "\n";
      }
    }
  }

  emit_report("quantum", echo_inputs(opt, in), std::move(results), warnings);
  return 0;
}

int classify_exit(const st::Error& e) {
  switch (e.code()) {
    case st::Err::NoConvergence:
    case st::Err::SingularT:
    case st::Err::ZeroEntry:
    case st::Err::ZeroEigenvalue:
    case st::Err::AtPole:
    case st::Err::EdgePole:
      return 3;
    default:
      return 2;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectral-twins: weighted-graph spectra, nodal counts, and quantum-graph secular scans"};
  app.require_subcommand(1);
  app.footer("Graph files: { \"vertices\": V, \"edges\": [[u, v, w], ...], "
             "\"potentials\": [...]?, \"lengths\": [...]? } with 1-based vertex ids.");

  GraphInputOptions spectrum_in, nodal_in, polymap_in, quantum_in;
  std::string nodal_convention = "strong";
  std::string iso_file1, iso_file2, inodal_file1, inodal_file2;
  double iso_tol = 1e-9;
  std::string polymap_coeffs, polymap_out;
  double q_kmin = 0.0, q_kmax = st::tol::kDefaultKMax, q_grid = st::tol::kDefaultGridStep,
         q_root_tol = st::tol::kRootTol;
  std::string q_csv;

  CLI::App* spectrum = app.add_subcommand("spectrum", "eigenvalues, eigenvectors, char poly");
  add_graph_input(spectrum, spectrum_in);

  CLI::App* nodal = app.add_subcommand("nodal", "nodal domain sequence and bound checks");
  add_graph_input(nodal, nodal_in);
  nodal->add_option("--convention", nodal_convention, "strong|weak (default strong)")
      ->check(CLI::IsMember({"strong", "weak"}));

  CLI::App* iso = app.add_subcommand("isospectral", "compare spectra of two graph files");
  iso->add_option("file1", iso_file1, "first graph file")->required();
  iso->add_option("file2", iso_file2, "second graph file")->required();
  iso->add_option("--tol", iso_tol, "verdict tolerance (default 1e-9)");

  CLI::App* inodal = app.add_subcommand("isonodal", "compare nodal sequences of two graph files");
  inodal->add_option("file1", inodal_file1, "first graph file")->required();
  inodal->add_option("file2", inodal_file2, "second graph file")->required();

  CLI::App* polymap = app.add_subcommand("polymap", "polynomial Laplacian map P(L)");
  add_graph_input(polymap, polymap_in);
  polymap->add_option("--coeffs", polymap_coeffs, "polynomial coefficients c0,c1,... (ascending)")
      ->required();
  polymap->add_option("--out", polymap_out, "write the induced graph file here when valid");

  CLI::App* quantum = app.add_subcommand("quantum", "metric-graph secular scan and roots");
  add_graph_input(quantum, quantum_in);
  quantum->add_option("--kmin", q_kmin, "scan start (default: one grid step)");
  quantum->add_option("--kmax", q_kmax, "scan end (default 20)");
  quantum->add_option("--grid", q_grid, "grid step (default 1e-3)");
  quantum->add_option("--root-tol", q_root_tol, "bisection tolerance (default 1e-10)");
  quantum->add_option("--emit-secular", q_csv, "write a (k, h) CSV table to this path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (spectrum->parsed()) return cmd_spectrum(spectrum_in);
    if (nodal->parsed()) return cmd_nodal(nodal_in, nodal_convention);
    if (iso->parsed()) return cmd_isospectral(iso_file1, iso_file2, iso_tol);
    if (inodal->parsed()) return cmd_isonodal(inodal_file1, inodal_file2);
    if (polymap->parsed()) return cmd_polymap(polymap_in, polymap_coeffs, polymap_out);
    if (quantum->parsed()) return cmd_quantum(quantum_in, q_kmin, q_kmax, q_grid, q_root_tol, q_csv);
  } catch (const st::Error& e) {
    std::cerr << "error [" << st::err_name(e.code()) << "]: " << e.what() << "\n";
    return classify_exit(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  return 2;
}
