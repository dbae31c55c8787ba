#include <doctest.h>

#include <algorithm>
#include <set>

#include "caconn/errors.hpp"
#include "caconn/exact.hpp"
#include "caconn/generators.hpp"
#include "caconn/matroid.hpp"
#include "caconn/sampling.hpp"
#include "support.hpp"

using namespace caconn;
using namespace catest;

namespace {

bool selection_is_courteous_and_spanning(const ColoredMatroid& m,
                                         const std::vector<int>& selected) {
  int rank_total = total_rank(m);
  if (subset_rank(m, selected) != rank_total) return false;
  std::set<Color> used;
  for (int e : selected) used.insert(m.color_of(e));
  for (Color c : used) {
    std::vector<int> rest;
    for (int e : selected) {
      if (m.color_of(e) != c) rest.push_back(e);
    }
    if (subset_rank(m, rest) != rank_total) return false;
  }
  return true;
}

}  // namespace

TEST_SUITE_BEGIN("matroid");

TEST_CASE("the worked graphic matroid matches its independence list") {
  ColoredMatroid m = graphic_matroid(matroid_example_graph());
  auto dependent = matroid_example_dependent_sets();
  auto is_listed = [&](const std::vector<int>& subset) {
    return std::find(dependent.begin(), dependent.end(), subset) !=
           dependent.end();
  };
  for (int mask = 0; mask < 32; ++mask) {
    std::vector<int> subset;
    for (int e = 0; e < 5; ++e) {
      if (mask & (1 << e)) subset.push_back(e);
    }
    CHECK(m.independent(subset) == !is_listed(subset));
  }
  CHECK(subset_rank(m, {0, 1, 2}) == 2);
  CHECK(subset_rank(m, {}) == 0);
  CHECK(total_rank(m) == 3);
  CHECK(satisfies_matroid_axioms(m));
}

TEST_CASE("rank uses one oracle call per element") {
  ColoredMatroid m = graphic_matroid(matroid_example_graph());
  m.reset_oracle_calls();
  subset_rank(m, {0, 1, 2, 3, 4});
  CHECK(m.oracle_calls() == 5);
}

TEST_CASE("uniform matroids rank by cardinality") {
  ColoredMatroid m = uniform_matroid(3, {0, 0, 1, 1, 2});
  CHECK(total_rank(m) == 3);
  CHECK(subset_rank(m, {0, 1}) == 2);
  CHECK(subset_rank(m, {0, 1, 2, 3}) == 3);
  CHECK(satisfies_matroid_axioms(m));
}

TEST_CASE("courteous recognition") {
  CHECK(is_courteous(graphic_matroid(four_cycle_rainbow())));
  CHECK(is_courteous(uniform_matroid(0, {0, 0, 0})));
  ColoredMatroid lopsided = uniform_matroid(3, {0, 0, 0, 1, 1});
  CHECK_FALSE(is_courteous(lopsided));
  CHECK(courteous_violation(lopsided) == 0);
  ColoredMatroid balanced = uniform_matroid(3, {0, 0, 1, 1, 2});
  CHECK(is_courteous(balanced));
}

TEST_CASE("uniform closed form matches the oracle check") {
  CHECK(uniform_is_courteous(5, 3, {0, 0, 1, 1, 2}));
  CHECK_FALSE(uniform_is_courteous(5, 3, {0, 0, 0, 1, 1}));
  CHECK(uniform_is_courteous(4, 0, {0, 0, 0, 0}));

  std::mt19937_64 rng(5);
  for (int n = 0; n <= 6; ++n) {
    for (int threshold = 0; threshold <= n; ++threshold) {
      for (int trial = 0; trial < 12; ++trial) {
        std::vector<Color> colors(n);
        int k = n == 0 ? 1 : rand_int(rng, 1, n);
        for (int i = 0; i < n; ++i) colors[i] = rand_int(rng, 0, k - 1);
        CHECK(uniform_is_courteous(n, threshold, colors) ==
              is_courteous(uniform_matroid(threshold, colors)));
      }
    }
  }
}

TEST_CASE("increase_rank reaches full rank and keeps the seed") {
  ColoredMatroid path = graphic_matroid(
      EdgeColoredGraph(4, {{0, 1, 0}, {1, 2, 1}, {2, 3, 2}}, 3));
  CHECK(increase_rank(path, {0, 1, 2}) == std::vector<int>{0, 1, 2});
  CHECK(increase_rank(path, {}).size() == 3);
  CHECK(increase_rank(path, {0}) == std::vector<int>{0, 1, 2});

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 80; ++trial) {
    int n = rand_int(rng, 2, 7);
    int k = rand_int(rng, 1, 3);
    ColoredMatroid m = graphic_matroid(
        random_edge_colored_graph(n, rand_int(rng, k, 12), k, rng));
    std::vector<int> t;
    for (int e = 0; e < m.ground_size(); ++e) {
      if (rng() % 3 == 0) t.push_back(e);
    }
    int rank_total = total_rank(m);
    for (auto variant : {IncreaseRankVariant::weighted_greedy,
                         IncreaseRankVariant::simple_scan}) {
      std::vector<int> extended = increase_rank(m, t, {}, variant);
      CHECK(std::includes(extended.begin(), extended.end(), t.begin(),
                          t.end()));
      CHECK(subset_rank(m, extended) == rank_total);
      if (variant == IncreaseRankVariant::weighted_greedy) {
        CHECK(static_cast<int>(extended.size()) ==
              static_cast<int>(t.size()) + rank_total - subset_rank(m, t));
      }
    }
  }
}

TEST_CASE("restriction selection on a rank-zero matroid is empty") {
  ColoredMatroid m = uniform_matroid(0, {0, 0, 0});
  RestrictionResult result = courteous_restriction(m);
  CHECK(result.selected.empty());
  CHECK_THROWS_AS(courteous_restriction(uniform_matroid(0, {})),
                  precondition_error);
}

TEST_CASE("restriction selection rejects discourteous inputs") {
  ColoredMatroid m = uniform_matroid(3, {0, 0, 0, 1, 1});
  CHECK_THROWS_AS(courteous_restriction(m), precondition_error);
  try {
    courteous_restriction(m);
  } catch (const precondition_error& e) {
    CHECK(e.witness_color() == 0);
  }
  CHECK_THROWS_AS(greedy_minimal_restriction(m), precondition_error);
}

TEST_CASE("the adversarial element order doubles the tight instance") {
  EcaTightRatioInstance inst = gen_eca_tight_ratio(3, 7);
  ColoredMatroid m = graphic_matroid(inst.graph);
  RestrictionResult adversarial =
      courteous_restriction(m, inst.adversarial_order.edge_order);
  CHECK(adversarial.selected.size() == 12);
  CHECK(adversarial.selected == inst.adversarial_certificate);
  CHECK(selection_is_courteous_and_spanning(m, adversarial.selected));

  int basis_edges = 0;
  for (const SelectedElement& s : adversarial.provenance) {
    basis_edges += s.phase == SelectionPhase::basis ? 1 : 0;
  }
  CHECK(basis_edges == 6);
}

TEST_CASE("restriction selection meets its guarantees on random inputs") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rand_int(rng, 2, 7);
    int k = rand_int(rng, 2, 4);
    EdgeColoredGraph g = sample_eca_instance(n, k, 14, rng);
    ColoredMatroid m = graphic_matroid(g);
    int rank_total = total_rank(m);

    for (auto variant : {IncreaseRankVariant::weighted_greedy,
                         IncreaseRankVariant::simple_scan}) {
      m.reset_oracle_calls();
      RestrictionResult result = courteous_restriction(m, {}, {}, variant);
      CHECK(selection_is_courteous_and_spanning(m, result.selected));
      CHECK(static_cast<int>(result.selected.size()) <= 2 * rank_total);
      long long colors = static_cast<long long>(k);
      long long size = m.ground_size();
      CHECK(result.oracle_calls <= 6 * (colors + 1) * (size + 1));
    }
  }
}

TEST_CASE("pruning the worst-case selection removes nothing") {
  EcaTightRatioInstance inst = gen_eca_tight_ratio(3, 7);
  ColoredMatroid m = graphic_matroid(inst.graph);
  std::vector<int> pruned = prune_restriction(m, inst.adversarial_certificate);
  CHECK(pruned == inst.adversarial_certificate);
}

TEST_CASE("pruning removes redundant parallel elements") {
  // Three parallel edges: one element of the doubled color can go.
  ColoredMatroid tripled = graphic_matroid(
      EdgeColoredGraph(2, {{0, 1, 0}, {0, 1, 1}, {0, 1, 1}}, 2));
  CHECK(prune_restriction(tripled, {0, 1, 2}) == std::vector<int>{0, 1});

  ColoredMatroid doubled =
      graphic_matroid(EdgeColoredGraph(2, {{0, 1, 0}, {0, 1, 1}}, 2));
  CHECK(prune_restriction(doubled, {0, 1}) == std::vector<int>{0, 1});

  CHECK_THROWS_AS(prune_restriction(doubled, {0}), precondition_error);
}

TEST_CASE("single-pass greedy deletion is deletion-minimal") {
  std::mt19937_64 rng(59);
  for (int trial = 0; trial < 40; ++trial) {
    int n = rand_int(rng, 2, 6);
    int k = rand_int(rng, 2, 3);
    EdgeColoredGraph g = sample_eca_instance(n, k, 10, rng);
    ColoredMatroid m = graphic_matroid(g);
    std::vector<int> kept = greedy_minimal_restriction(m);
    CHECK(selection_is_courteous_and_spanning(m, kept));
    for (int e : kept) {
      std::vector<int> without;
      for (int x : kept) {
        if (x != e) without.push_back(x);
      }
      CHECK_FALSE(selection_is_courteous_and_spanning(m, without));
    }
  }
}

TEST_CASE("greedy deletion keeps the minimum construction intact") {
  EdgeColoredGraph g = gen_eca_min(4, 7);
  REQUIRE(g.edge_count() == 10);
  ColoredMatroid m = graphic_matroid(g);
  std::vector<int> kept = greedy_minimal_restriction(m);
  CHECK(kept.size() == 10);
  CHECK(satisfies_matroid_axioms(m));  // ten-element oracle, checked whole
}

TEST_CASE("both selection routes stay within the guaranteed ratio") {
  std::mt19937_64 rng(109);
  for (int trial = 0; trial < 60; ++trial) {
    int n = rand_int(rng, 2, 5);
    int k = rand_int(rng, 2, 3);
    EdgeColoredGraph g = sample_eca_instance(n, k, 8, rng);
    ColoredMatroid m = graphic_matroid(g);
    long long optimum = min_restriction_exact(m, 8).optimum_size;

    m.reset_oracle_calls();
    long long greedy =
        static_cast<long long>(greedy_minimal_restriction(m).size());
    long long size = m.ground_size();
    CHECK(m.oracle_calls() <= 4 * (k + 1) * (size + 1) * (size + 1));
    CHECK(greedy * k <= 2 * (k - 1) * optimum);

    long long selected =
        static_cast<long long>(courteous_restriction(m).selected.size());
    CHECK(selected * k <= 2 * (k - 1) * optimum);
  }
}

TEST_CASE("caller-supplied oracles work through the whole pipeline") {
  // Partition matroid: at most one element from each of three groups.
  std::vector<int> group{0, 0, 1, 1, 2, 2};
  auto oracle = [group](const std::vector<int>& elements) {
    int seen[3] = {0, 0, 0};
    for (int e : elements) {
      if (++seen[group[e]] > 1) return false;
    }
    return true;
  };
  ColoredMatroid m({0, 1, 0, 1, 0, 1}, oracle);
  CHECK(satisfies_matroid_axioms(m));
  CHECK(total_rank(m) == 3);
  CHECK(is_courteous(m));
  RestrictionResult result = courteous_restriction(m);
  CHECK(subset_rank(m, result.selected) == 3);
  CHECK(result.selected.size() == 6);  // one basis per color class
  CHECK(min_restriction_exact(m).optimum_size == 6);
}

TEST_CASE("element lower bound") {
  CHECK(min_elements_bound(4, 7) == 10);
  CHECK(min_elements_bound(2, 5) == 10);
  CHECK(min_elements_bound(3, 1) == 2);
  CHECK(min_elements_bound(7, 0) == 0);
  CHECK(min_elements_bound(1, 0) == 0);
  CHECK_THROWS_AS(min_elements_bound(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(min_elements_bound(4, -1), std::invalid_argument);
}

TEST_CASE("oracle call counting is resettable") {
  ColoredMatroid m = uniform_matroid(2, {0, 1, 2});
  m.reset_oracle_calls();
  m.independent({0});
  m.independent({0, 1});
  CHECK(m.oracle_calls() == 2);
  m.reset_oracle_calls();
  CHECK(m.oracle_calls() == 0);
}

TEST_SUITE_END();
