#include <doctest.h>

#include <cmath>
#include <functional>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/graph.hpp"
#include "spectral_twins/graph_io.hpp"
#include "test_support.hpp"

using namespace spectral_twins;

static bool throws_code(Err code, const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code() == code;
  }
  return false;
}

TEST_CASE("build_graph computes V, E, C and the cycle count") {
  const WeightedGraph single = build_graph(2, {{0, 1, 1.0}});
  CHECK(single.vertex_count() == 2);
  CHECK(single.edge_count() == 1);
  CHECK(single.components() == 1);
  CHECK(single.independent_cycles() == 0);

  const WeightedGraph triangle = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK(triangle.independent_cycles() == 1);

  const WeightedGraph forest = build_graph(4, {{0, 1, 1.0}, {2, 3, 1.0}});
  CHECK(forest.components() == 2);
  CHECK(forest.independent_cycles() == 0);
}

TEST_CASE("build_graph rejects malformed input") {
  CHECK(throws_code(Err::LoopEdge, [] { build_graph(2, {{0, 0, 1.0}}); }));
  CHECK(throws_code(Err::NonPositiveWeight, [] { build_graph(2, {{0, 1, 0.0}}); }));
  CHECK(throws_code(Err::NonPositiveWeight, [] { build_graph(2, {{0, 1, -2.0}}); }));
  CHECK(throws_code(Err::DuplicateEdge, [] { build_graph(2, {{0, 1, 1.0}, {1, 0, 2.0}}); }));
  CHECK(throws_code(Err::BadVertexId, [] { build_graph(2, {{0, 2, 1.0}}); }));
  CHECK(throws_code(Err::LengthMismatch,
                    [] { build_graph(2, {{0, 1, 1.0}}, std::vector<double>{1.0}); }));
}

TEST_CASE("laplacian puts -w off the diagonal and potentials on it") {
  const WeightedGraph k2 = build_graph(2, {{0, 1, 5.0}});
  const Matrix L = laplacian(k2).matrix;
  CHECK(L(0, 0) == 0.0);
  CHECK(L(1, 1) == 0.0);
  CHECK(L(0, 1) == -5.0);
  CHECK(L(1, 0) == -5.0);

  const WeightedGraph with_potential =
      build_graph(2, {{0, 1, 1.0}}, std::vector<double>{2.5, -1.0});
  const Matrix Lp = laplacian(with_potential).matrix;
  CHECK(Lp(0, 0) == 2.5);
  CHECK(Lp(1, 1) == -1.0);
}

TEST_CASE("builtin pair matrices match their defining edge lists entrywise") {
  const double a = 1.25, b = 2.5, c = 3.75;
  const Builtin71 pair = builtin_7_1(a, b, c);

  Matrix expected1(6);
  auto put = [](Matrix& m, int i, int j, double w) {
    m(i - 1, j - 1) = -w;
    m(j - 1, i - 1) = -w;
  };
  put(expected1, 1, 4, c);
  put(expected1, 2, 5, a);
  put(expected1, 3, 6, b);
  put(expected1, 4, 5, c);
  put(expected1, 4, 6, b);
  put(expected1, 5, 6, a);
  CHECK(max_abs_diff(laplacian(pair.g1).matrix, expected1) == 0.0);

  Matrix expected2(6);
  put(expected2, 1, 4, b);
  put(expected2, 2, 5, a);
  put(expected2, 3, 6, c);
  put(expected2, 4, 5, b);
  put(expected2, 4, 6, c);
  put(expected2, 5, 6, a);
  CHECK(max_abs_diff(laplacian(pair.g2).matrix, expected2) == 0.0);

  // symmetric, zero diagonal, exactly 12 negative off-diagonal entries
  for (const WeightedGraph* g : {&pair.g1, &pair.g2}) {
    const Matrix L = laplacian(*g).matrix;
    CHECK(L.is_symmetric());
    int negatives = 0;
    for (int i = 0; i < 6; ++i) {
      CHECK(L(i, i) == 0.0);
      for (int j = 0; j < 6; ++j)
        if (i != j && L(i, j) < 0.0) ++negatives;
    }
    CHECK(negatives == 12);
  }

  // boundary vertices have degree 1, interior degree 3
  for (int v : pair.boundary) CHECK(pair.g1.degree(v) == 1);
  for (int v : pair.interior) CHECK(pair.g1.degree(v) == 3);

  CHECK(throws_code(Err::NonPositiveWeight, [] { builtin_7_1(1.0, 0.0, 2.0); }));
}

TEST_CASE("equal weights collapse the builtin pair to one graph") {
  const Builtin71 pair = builtin_7_1(1.0, 1.0, 1.0);
  REQUIRE(pair.g1.edge_count() == pair.g2.edge_count());
  for (int i = 0; i < pair.g1.edge_count(); ++i) {
    CHECK(pair.g1.edges()[i].u == pair.g2.edges()[i].u);
    CHECK(pair.g1.edges()[i].v == pair.g2.edges()[i].v);
    CHECK(pair.g1.edges()[i].w == pair.g2.edges()[i].w);
  }
}

TEST_CASE("combinatorial laplacian row sums equal twice the potential") {
  test_support::Rng rng = test_support::trial_rng(101, 0);
  for (int trial = 0; trial < 10; ++trial) {
    const WeightedGraph g = test_support::random_tree(rng, 6, 0.5, 3.0);
    const Matrix L = combinatorial_laplacian(g).matrix;
    for (int i = 0; i < L.dim(); ++i) {
      double row_sum = 0.0;
      for (int j = 0; j < L.dim(); ++j) row_sum += L(i, j);
      CHECK(row_sum == doctest::Approx(2.0 * L(i, i)).epsilon(1e-12));
    }
  }

  // flipping the potential sign gives the zero-row-sum form
  const WeightedGraph p3 = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  std::vector<double> degrees{1.0, 2.0, 1.0};
  const Matrix standard = laplacian(build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}}, degrees)).matrix;
  for (int i = 0; i < 3; ++i) {
    double row_sum = 0.0;
    for (int j = 0; j < 3; ++j) row_sum += standard(i, j);
    CHECK(row_sum == 0.0);
  }
}

TEST_CASE("line graph of a two-edge path is a single edge of the third label") {
  const WeightedGraph path = build_graph(3, {{0, 1, 1.0}, {1, 2, 2.0}});
  const WeightedGraph lg = line_graph(path, {1.0, 2.0, 3.0});
  CHECK(lg.vertex_count() == 2);
  REQUIRE(lg.edge_count() == 1);
  CHECK(lg.edges()[0].w == 3.0);
}

TEST_CASE("line graph of a three-edge star is the complementary triangle") {
  const WeightedGraph star = build_graph(4, {{0, 1, 1.0}, {0, 2, 2.0}, {0, 3, 3.0}});
  const WeightedGraph lg = line_graph(star, {1.0, 2.0, 3.0});
  CHECK(lg.vertex_count() == 3);
  REQUIRE(lg.edge_count() == 3);
  // line vertices 0,1,2 carry parent labels 1,2,3; opposite edges complement
  for (const Edge& e : lg.edges()) {
    const double w1 = star.edges()[e.u].w;
    const double w2 = star.edges()[e.v].w;
    CHECK(e.w == 6.0 - w1 - w2);
  }
}

TEST_CASE("line graph construction validates the coloring") {
  const WeightedGraph bad = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}});
  CHECK(throws_code(Err::NotThreeColored, [&] { line_graph(bad, {1.0, 2.0, 3.0}); }));

  const WeightedGraph off_label = build_graph(3, {{0, 1, 1.0}, {1, 2, 7.0}});
  CHECK(throws_code(Err::TooManyLabels, [&] { line_graph(off_label, {1.0, 2.0, 3.0}); }));

  CHECK(throws_code(Err::TooManyLabels, [&] { line_graph(bad, {1.0, 1.0, 3.0}); }));
}

TEST_CASE("line graph size invariants") {
  test_support::Rng rng = test_support::trial_rng(102, 0);
  // spider parents with three arms of two edges each admit a proper coloring
  for (int trial = 0; trial < 5; ++trial) {
    const double labels[3] = {rng.uniform(0.1, 1.0), rng.uniform(1.1, 2.0), rng.uniform(2.1, 3.0)};
    const WeightedGraph parent = build_graph(
        7, {{1, 4, labels[1]}, {2, 5, labels[2]}, {3, 6, labels[0]},
            {0, 1, labels[0]}, {0, 2, labels[1]}, {0, 3, labels[2]}});
    const WeightedGraph lg = line_graph(parent, {labels[0], labels[1], labels[2]});
    CHECK(lg.vertex_count() == parent.edge_count());
    int expected_edges = 0;
    for (int v = 0; v < parent.vertex_count(); ++v)
      expected_edges += parent.degree(v) * (parent.degree(v) - 1) / 2;
    CHECK(lg.edge_count() == expected_edges);
  }
}

TEST_CASE("a spider parent reproduces the builtin variant-1 matrix exactly") {
  const double a = 1.0, b = 2.0, c = 3.0;
  // center 0, mid vertices 1-3, tips 4-6; pendant edges first so the line
  // vertices come out in the builtin's order
  const WeightedGraph parent = build_graph(
      7, {{1, 4, b}, {2, 5, c}, {3, 6, a}, {0, 1, a}, {0, 2, b}, {0, 3, c}});
  const WeightedGraph lg = line_graph(parent, {a, b, c});
  const Builtin71 pair = builtin_7_1(a, b, c);
  CHECK(max_abs_diff(laplacian(lg).matrix, laplacian(pair.g1).matrix) == 0.0);

  // swapping b and c in the parent labels yields variant 2
  const WeightedGraph parent2 = build_graph(
      7, {{1, 4, c}, {2, 5, b}, {3, 6, a}, {0, 1, a}, {0, 2, c}, {0, 3, b}});
  const WeightedGraph lg2 = line_graph(parent2, {a, b, c});
  CHECK(max_abs_diff(laplacian(lg2).matrix, laplacian(pair.g2).matrix) == 0.0);
}

TEST_CASE("polynomial identity map returns the matrix unchanged") {
  const Builtin71 pair = builtin_7_1(1.1, 2.3, 3.7);
  const Matrix L1 = laplacian(pair.g1).matrix;
  const PolynomialImage image = polynomial_apply(L1, {0.0, 1.0});
  CHECK(image.valid);
  CHECK(max_abs_diff(image.matrix, L1) == 0.0);
  REQUIRE(image.graph.has_value());
  CHECK(image.graph->edge_count() == 6);
}

TEST_CASE("negative quadratic map is a generalized laplacian, positive is not") {
  const Builtin71 pair = builtin_7_1(1.1, 2.3, 3.7);
  const Matrix L1 = laplacian(pair.g1).matrix;

  const PolynomialImage neg = polynomial_apply(L1, {0.0, 0.0, -1.0});
  CHECK(neg.valid);
  REQUIRE(neg.graph.has_value());
  // the interior triangle stays; each boundary vertex couples to the two
  // interior vertices it reaches through its neighbor; pendant edges vanish
  CHECK(neg.graph->edge_count() == 9);
  CHECK_FALSE(neg.graph->adjacent(0, 3));
  CHECK(neg.graph->adjacent(0, 4));
  CHECK(neg.graph->adjacent(0, 5));
  CHECK(neg.graph->adjacent(3, 4));

  const PolynomialImage pos = polynomial_apply(L1, {0.0, 0.0, 1.0});
  CHECK_FALSE(pos.valid);
  CHECK_FALSE(pos.graph.has_value());
}

TEST_CASE("cubic maps of the builtin pair are complete graphs") {
  const Builtin71 pair = builtin_7_1(1.1, 2.3, 3.7);
  const PolynomialImage cubic = polynomial_apply(laplacian(pair.g1).matrix, {0.0, 0.0, 0.0, 1.0});
  CHECK(cubic.valid);
  REQUIRE(cubic.graph.has_value());
  CHECK(cubic.graph->edge_count() == 15);  // complete on 6 vertices
}

TEST_CASE("polynomial_apply rejects an empty coefficient list") {
  const Matrix L = laplacian(build_graph(2, {{0, 1, 1.0}})).matrix;
  CHECK(throws_code(Err::BadRange, [&] { polynomial_apply(L, {}); }));
}

TEST_CASE("graph files round-trip through the text format") {
  const Builtin71 pair = builtin_7_1(1.5, 2.25, 3.125);
  const std::string text = write_graph_text(pair.g1);
  const GraphFile back = read_graph_text(text);
  CHECK(back.graph.vertex_count() == 6);
  CHECK(max_abs_diff(laplacian(back.graph).matrix, laplacian(pair.g1).matrix) == 0.0);
  CHECK_FALSE(back.lengths.has_value());

  const std::string with_lengths = write_graph_text(pair.g1, std::vector<double>{1, 2, 3, 4, 5, 6});
  const GraphFile back2 = read_graph_text(with_lengths);
  REQUIRE(back2.lengths.has_value());
  CHECK(back2.lengths->size() == 6);
}

TEST_CASE("graph file parser reports malformed input") {
  CHECK(throws_code(Err::ParseError, [] { read_graph_text("not json"); }));
  CHECK(throws_code(Err::ParseError, [] { read_graph_text("{\"vertices\": 2}"); }));
  CHECK(throws_code(Err::ParseError, [] { read_graph_text("{\"vertices\": 2, \"edges\": [[1, 2]]}"); }));
  CHECK(throws_code(Err::BadVertexId,
                    [] { read_graph_text("{\"vertices\": 2, \"edges\": [[1, 3, 1.0]]}"); }));
  CHECK(throws_code(Err::LengthMismatch, [] {
    read_graph_text("{\"vertices\": 2, \"edges\": [[1, 2, 1.0]], \"lengths\": [1.0, 2.0]}");
  }));
}
