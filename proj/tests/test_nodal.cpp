#include <doctest.h>

#include <cmath>
#include <functional>

#include "spectral_twins/errors.hpp"
#include "spectral_twins/graph.hpp"
#include "spectral_twins/nodal.hpp"
#include "test_support.hpp"

using namespace spectral_twins;
using test_support::count_nodal_domains_bruteforce;

TEST_CASE("counting on two vertices") {
  const WeightedGraph k2 = build_graph(2, {{0, 1, 1.0}});
  CHECK(count_nodal_domains(k2, {1.0, 1.0}) == 1);
  CHECK(count_nodal_domains(k2, {1.0, -1.0}) == 2);
}

TEST_CASE("alternating signs on a path count every vertex") {
  const WeightedGraph p4 = build_graph(4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}});
  CHECK(count_nodal_domains(p4, {1.0, -1.0, 1.0, -1.0}) == 4);
}

TEST_CASE("one sign change on a triangle gives two domains") {
  const WeightedGraph tri = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  CHECK(count_nodal_domains(tri, {1.0, 1.0, -1.0}) == 2);
}

TEST_CASE("strong counting refuses zero entries, weak merges them") {
  const WeightedGraph tri = build_graph(3, {{0, 1, 1.0}, {1, 2, 1.0}, {0, 2, 1.0}});
  bool threw = false;
  try {
    count_nodal_domains(tri, {1.0, 0.0, -1.0});
  } catch (const Error& e) {
    threw = true;
    CHECK(e.code() == Err::ZeroEntry);
    CHECK(e.index() == 1);
  }
  CHECK(threw);
  CHECK(count_nodal_domains(tri, {1.0, 0.0, -1.0}, Convention::Weak) == 2);

  CHECK_THROWS_AS(count_nodal_domains(tri, {1.0, -1.0}), Error);
}

TEST_CASE("counting agrees with subset-enumeration brute force") {
  for (int trial = 0; trial < 40; ++trial) {
    test_support::Rng rng = test_support::trial_rng(301, trial);
    const int v = rng.uniform_int(3, 9);
    WeightedGraph g = trial % 2 == 0 ? test_support::random_tree(rng, v, 0.5, 2.0)
                                     : test_support::random_cycle(rng, v, 0.5, 2.0);
    std::vector<double> phi(v);
    for (double& x : phi) {
      x = rng.uniform(-1.0, 1.0);
      if (std::fabs(x) < 1e-3) x = 0.5;  // keep the strong convention applicable
    }
    CHECK(count_nodal_domains(g, phi) == count_nodal_domains_bruteforce(g, phi));
  }
}

TEST_CASE("global sign flips never change the count") {
  for (int trial = 0; trial < 20; ++trial) {
    test_support::Rng rng = test_support::trial_rng(302, trial);
    const WeightedGraph g = test_support::random_complete(rng, rng.uniform_int(3, 7), 0.3, 4.0);
    std::vector<double> phi(g.vertex_count());
    for (double& x : phi) x = rng.uniform(-1.0, 1.0) + (rng.next() % 2 ? 0.01 : -0.01);
    std::vector<double> flipped = phi;
    for (double& x : flipped) x = -x;
    CHECK(count_nodal_domains(g, phi) == count_nodal_domains(g, flipped));
  }
}

static NodalReport sequence_with_redraw(const std::function<WeightedGraph(test_support::Rng&)>& make,
                                        std::uint64_t suite, std::uint64_t trial, bool combinatorial,
                                        WeightedGraph* out_graph = nullptr) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    test_support::Rng rng = test_support::trial_rng(suite, trial * 1000 + attempt);
    WeightedGraph g = make(rng);
    const Matrix L = combinatorial ? combinatorial_laplacian(g).matrix : laplacian(g).matrix;
    try {
      NodalReport report = nodal_sequence(g, L);
      if (!report.degenerate_indices.empty()) continue;
      if (out_graph) *out_graph = g;
      return report;
    } catch (const Error& e) {
      if (e.code() != Err::ZeroEntry) throw;
      // non-generic draw; try again
    }
  }
}

TEST_CASE("weighted trees count 1..V") {
  for (int trial = 0; trial < 20; ++trial) {
    const NodalReport report = sequence_with_redraw(
        [&](test_support::Rng& rng) {
          return test_support::random_tree(rng, rng.uniform_int(3, 8), 0.3, 3.0);
        },
        303, trial, true);
    for (size_t i = 0; i < report.counts.size(); ++i)
      CHECK(report.counts[i] == static_cast<int>(i) + 1);
    CHECK(report.bound_violations.empty());
  }
}

TEST_CASE("weighted complete graphs count 1,2,...,2") {
  for (int trial = 0; trial < 10; ++trial) {
    const NodalReport report = sequence_with_redraw(
        [&](test_support::Rng& rng) {
          return test_support::random_complete(rng, rng.uniform_int(4, 8), 0.3, 5.0);
        },
        304, trial, false);
    CHECK(report.counts[0] == 1);
    for (size_t i = 1; i < report.counts.size(); ++i) CHECK(report.counts[i] == 2);
  }
}

TEST_CASE("weighted cycles count 1 then n minus its parity") {
  for (int trial = 0; trial < 10; ++trial) {
    const NodalReport report = sequence_with_redraw(
        [&](test_support::Rng& rng) {
          return test_support::random_cycle(rng, rng.uniform_int(4, 9), 0.3, 5.0);
        },
        305, trial, false);
    CHECK(report.counts[0] == 1);
    for (size_t i = 1; i < report.counts.size(); ++i) {
      const int n = static_cast<int>(i) + 1;
      CHECK(report.counts[i] == n - (n % 2));
    }
    CHECK(report.bound_violations.empty());
  }
}

TEST_CASE("the lowest mode of a connected combinatorial laplacian is signless") {
  for (int trial = 0; trial < 10; ++trial) {
    const NodalReport report = sequence_with_redraw(
        [&](test_support::Rng& rng) {
          const int v = rng.uniform_int(3, 8);
          return trial % 2 == 0 ? test_support::random_tree(rng, v, 0.4, 2.5)
                                : test_support::random_cycle(rng, v, 0.4, 2.5);
        },
        306, trial, true);
    CHECK(report.counts[0] == 1);
  }
}

TEST_CASE("bound check: trees force equality, fabricated reports violate") {
  NodalReport fake;
  fake.counts = {1, 4, 3};
  const std::vector<BoundViolation> violations = check_bounds(fake, 0);
  REQUIRE(violations.size() == 1);
  CHECK(violations[0].n == 2);
  CHECK(violations[0].count == 4);
  CHECK(violations[0].lower == 2);
  CHECK(violations[0].upper == 2);

  // degenerate indices are skipped
  NodalReport flagged = fake;
  flagged.degenerate_indices = {2};
  CHECK(check_bounds(flagged, 0).empty());
}

TEST_CASE("builtin pair at 1,2,3: counts stay within one of the index") {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const NodalReport report = nodal_sequence(pair.g1, laplacian(pair.g1).matrix);
  CHECK(report.bound_violations.empty());
  for (size_t i = 0; i < report.counts.size(); ++i) {
    const int n = static_cast<int>(i) + 1;
    CHECK(report.counts[i] >= n - 1);
    CHECK(report.counts[i] <= n);
  }
  // frozen sequence for this weight triple
  const int expected[6] = {1, 2, 2, 4, 5, 5};
  for (int i = 0; i < 6; ++i) CHECK(report.counts[i] == expected[i]);
}

TEST_CASE("interior rule cases") {
  const double a = 1.0, b = 2.0, c = 3.0;
  CHECK(interior_rule_7_1(-2.0 * 3.0, a, b, c) == 1);   // far negative
  CHECK(interior_rule_7_1(0.5, a, b, c) == 1);          // inside (0, min)
  CHECK(interior_rule_7_1(4.0, a, b, c) == 2);          // beyond max
  CHECK(interior_rule_7_1(-0.5, a, b, c) == 2);         // small negative
  CHECK(interior_rule_7_1(2.0, a, b, c) == 2);          // between min and max
  CHECK_THROWS_AS(interior_rule_7_1(0.0, a, b, c), Error);
}

TEST_CASE("predicted totals add the boundary contribution only for positive modes") {
  const double a = 1.0, b = 2.0, c = 3.0;
  CHECK(predicted_total_7_1(-6.0, a, b, c) == 1);
  CHECK(predicted_total_7_1(-0.5, a, b, c) == 2);
  CHECK(predicted_total_7_1(0.5, a, b, c) == 4);
  CHECK(predicted_total_7_1(2.0, a, b, c) == 5);
}

TEST_CASE("actual counts match the eigenvalue rule across random weights") {
  int checked = 0;
  for (int trial = 0; trial < 25; ++trial) {
    for (std::uint64_t attempt = 0;; ++attempt) {
      test_support::Rng rng = test_support::trial_rng(307, trial * 1000 + attempt);
      const Builtin71 pair =
          builtin_7_1(rng.uniform(1e-3, 10.0), rng.uniform(1e-3, 10.0), rng.uniform(1e-3, 10.0));
      try {
        const NodalReport r1 = nodal_sequence(pair.g1, laplacian(pair.g1).matrix);
        const NodalReport r2 = nodal_sequence(pair.g2, laplacian(pair.g2).matrix);
        bool near_zero = false;
        for (double lam : r1.eigenvalues) near_zero |= std::fabs(lam) < 1e-10;
        if (near_zero || !r1.degenerate_indices.empty()) continue;

        for (size_t i = 0; i < r1.counts.size(); ++i) {
          CHECK(r1.counts[i] == r2.counts[i]);
          CHECK(r1.counts[i] == predicted_total_7_1(r1.eigenvalues[i], pair.a, pair.b, pair.c));
        }
        CHECK(r1.bound_violations.empty());
        ++checked;
        break;
      } catch (const Error& e) {
        if (e.code() != Err::ZeroEntry) throw;
      }
    }
  }
  CHECK(checked == 25);
}

TEST_CASE("isonodal: the builtin pair and unrelated trees") {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  const IsonodalReport same = isonodal(pair.g1, laplacian(pair.g1).matrix, pair.g2,
                                       laplacian(pair.g2).matrix);
  CHECK(same.verdict);
  CHECK(same.all_equal);
  CHECK(same.mismatched_indices.empty());

  // two different trees on the same vertex count share the sequence 1..V
  test_support::Rng rng = test_support::trial_rng(308, 0);
  for (int attempt = 0; attempt < 50; ++attempt) {
    const WeightedGraph t1 = test_support::random_tree(rng, 8, 0.4, 2.5);
    const WeightedGraph t2 = test_support::random_tree(rng, 8, 0.4, 2.5);
    try {
      const IsonodalReport trees = isonodal(t1, combinatorial_laplacian(t1).matrix, t2,
                                            combinatorial_laplacian(t2).matrix);
      CHECK(trees.verdict);
      break;
    } catch (const Error& e) {
      if (e.code() != Err::ZeroEntry) throw;
    }
  }

  CHECK_THROWS_AS(isonodal(pair.g1, laplacian(pair.g1).matrix,
                           build_graph(2, {{0, 1, 1.0}}),
                           laplacian(build_graph(2, {{0, 1, 1.0}})).matrix),
                  Error);
}

TEST_CASE("nodal_sequence validates that the matrix matches the graph") {
  const Builtin71 pair = builtin_7_1(1.0, 2.0, 3.0);
  CHECK_THROWS_AS(nodal_sequence(pair.g1, Matrix::identity(4)), Error);   // wrong dimension
  CHECK_THROWS_AS(nodal_sequence(pair.g1, Matrix::identity(6)), Error);   // wrong sparsity
}
