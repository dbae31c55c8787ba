#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "caconn/errors.hpp"
#include "caconn/exact.hpp"
#include "caconn/generators.hpp"
#include "caconn/sampling.hpp"
#include "caconn/sparsify.hpp"
#include "support.hpp"

using namespace caconn;
using namespace catest;

TEST_SUITE_BEGIN("exact");

TEST_CASE("the tight edge family has the predicted optimum") {
  EcaTightRatioInstance inst = gen_eca_tight_ratio(3, 7);
  ExactResult result = min_subgraph_exact(inst.graph);
  CHECK(result.optimum_size == 9);
  CHECK(result.witness == inst.optimum_certificate);
  CHECK(is_eca_connected(edge_subgraph(inst.graph, result.witness)).holds);
}

TEST_CASE("the tight vertex families have the predicted optima") {
  VcaTightRatioInstance two = gen_vca_tight_ratio(2, 7);
  CHECK(min_subgraph_exact(two.graph, CaNotion::vca).optimum_size == 6);

  VcaTightRatioInstance four = gen_vca_tight_ratio(4, 9);
  ExactResult result =
      min_subgraph_exact(four.graph, CaNotion::vca, four.graph.edge_count());
  CHECK(result.optimum_size == 9);
}

TEST_CASE("a minimum cycle is its own unique optimal subgraph") {
  VertexColoredGraph cycle = gen_vca_min(4, 6);
  ExactResult result = min_subgraph_exact(cycle, CaNotion::vca);
  CHECK(result.optimum_size == 6);
  std::vector<int> all(cycle.edge_count());
  std::iota(all.begin(), all.end(), 0);
  CHECK(result.witness == all);
}

TEST_CASE("matroid optimum on the tight family and small uniforms") {
  EcaTightRatioInstance inst = gen_eca_tight_ratio(3, 7);
  CHECK(min_restriction_exact(graphic_matroid(inst.graph)).optimum_size == 9);

  ExactResult uniform =
      min_restriction_exact(uniform_matroid(2, {0, 0, 1, 1, 2, 2}));
  CHECK(uniform.optimum_size == 3);
  CHECK(uniform.witness == std::vector<int>{0, 2, 4});

  ExactResult rank0 = min_restriction_exact(uniform_matroid(0, {0, 0}));
  CHECK(rank0.optimum_size == 0);
  CHECK(rank0.witness.empty());
}

TEST_CASE("budgets refuse big instances explicitly") {
  EdgeColoredGraph big = gen_eca_maximal(3, 12);  // 22 edges
  CHECK_THROWS_AS(min_subgraph_exact(big), budget_error);
  try {
    min_subgraph_exact(big);
  } catch (const budget_error& e) {
    CHECK(e.budget() == kDefaultExactBudget);
    CHECK(e.actual() == 22);
  }
  // Deletion-minimal plus edge monotonicity means nothing smaller works.
  CHECK(min_subgraph_exact(big, 22).optimum_size == 22);

  CHECK_THROWS_AS(
      min_restriction_exact(graphic_matroid(big)), budget_error);
}

TEST_CASE("exact search validates its precondition") {
  CHECK_THROWS_AS(min_subgraph_exact(four_cycle_double_blue()),
                  precondition_error);
  CHECK_THROWS_AS(
      min_subgraph_exact(vertex_cycle_two_blue(), CaNotion::vca),
      precondition_error);
  CHECK_THROWS_AS(min_restriction_exact(uniform_matroid(3, {0, 0, 0, 1, 1})),
                  precondition_error);
}

TEST_CASE("pruned and unpruned searches agree") {
  std::mt19937_64 rng(89);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rand_int(rng, 2, 7);
    int k = rand_int(rng, 2, 4);
    EdgeColoredGraph g = sample_eca_instance(n, k, 14, rng);
    ExactResult pruned = min_subgraph_exact(g, 14, true);
    ExactResult unpruned = min_subgraph_exact(g, 14, false);
    CHECK(pruned.optimum_size == unpruned.optimum_size);
    CHECK(pruned.witness == unpruned.witness);
    CHECK(pruned.candidates_tested <= unpruned.candidates_tested);
  }
  for (int trial = 0; trial < 25; ++trial) {
    int n = rand_int(rng, 3, 7);
    int k = rand_int(rng, 2, 3);
    VertexColoredGraph g = sample_ivca_instance(n, k, 14, rng);
    ExactResult pruned = min_subgraph_exact(g, CaNotion::ivca, 14, true);
    ExactResult unpruned = min_subgraph_exact(g, CaNotion::ivca, 14, false);
    CHECK(pruned.optimum_size == unpruned.optimum_size);
    CHECK(pruned.witness == unpruned.witness);
  }
}

TEST_CASE("adding edges never raises the optimum") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 30; ++trial) {
    int n = rand_int(rng, 3, 7);
    int k = rand_int(rng, 2, 3);
    EdgeColoredGraph g = sample_eca_instance(n, k, 12, rng);
    std::vector<Edge> extended = g.edges();
    int u = rand_int(rng, 0, n - 1);
    int v = rand_int(rng, 0, n - 2);
    if (v >= u) ++v;
    extended.push_back({u, v, rand_int(rng, 0, k - 1)});
    EdgeColoredGraph bigger(n, extended, k);
    CHECK(min_subgraph_exact(bigger, 16).optimum_size <=
          min_subgraph_exact(g, 16).optimum_size);
  }
}

TEST_CASE("witnesses satisfy the property they optimize") {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    int n = rand_int(rng, 3, 7);
    int k = rand_int(rng, 2, 3);
    VertexColoredGraph g = sample_vca_instance(n, k, 13, rng);
    ExactResult result = min_subgraph_exact(g, CaNotion::vca, 13);
    CHECK(is_vca_connected(edge_subgraph(g, result.witness)).holds);
    CHECK(static_cast<int>(result.witness.size()) == result.optimum_size);
  }
}

TEST_CASE("graph and matroid searches agree on connected graphic inputs") {
  // A spanning rank-preserving courteous restriction of the graphic matroid
  // of a connected graph is exactly an edge-color-avoiding spanning
  // subgraph, so the two independently implemented searches must coincide.
  std::mt19937_64 rng(113);
  for (int trial = 0; trial < 20; ++trial) {
    int n = rand_int(rng, 2, 6);
    int k = rand_int(rng, 2, 3);
    EdgeColoredGraph g = sample_eca_instance(n, k, 12, rng);
    ExactResult graph_result = min_subgraph_exact(g, 12);
    ExactResult matroid_result = min_restriction_exact(graphic_matroid(g), 12);
    CHECK(graph_result.optimum_size == matroid_result.optimum_size);
    CHECK(graph_result.witness == matroid_result.witness);
  }
}

TEST_CASE("lower bound verification") {
  LowerBoundReport eca = verify_lower_bound(CaNotion::eca, 3, 7, 25, 5);
  CHECK(eca.bound == 9);
  CHECK(eca.samples_checked == 25);
  CHECK(eca.bound_violations == 0);
  REQUIRE(eca.generator_checks.size() == 2);
  CHECK(eca.ok());

  LowerBoundReport vca = verify_lower_bound(CaNotion::vca, 2, 7, 25, 6);
  CHECK(vca.bound == 6);
  CHECK(vca.ok());

  LowerBoundReport ivca = verify_lower_bound(CaNotion::ivca, 1, 5, 10, 7);
  CHECK(ivca.bound == 10);
  CHECK(ivca.ok());
}

TEST_SUITE_END();
