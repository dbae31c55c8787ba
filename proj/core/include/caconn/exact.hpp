#pragma once

#include <string>
#include <utility>
#include <vector>

#include "caconn/connectivity.hpp"
#include "caconn/graph.hpp"
#include "caconn/matroid.hpp"

namespace caconn {

// Instances above this many edges/elements are refused unless the caller
// raises the budget explicitly.
inline constexpr int kDefaultExactBudget = 20;

struct ExactResult {
  int optimum_size = 0;
  // Lexicographically smallest optimal subset (by index sequence).
  std::vector<int> witness;
  long long candidates_tested = 0;
};

// Minimum-cardinality spanning edge subset keeping the property, found by
// increasing-size enumeration. Pruning (connectivity and per-color edge
// deficiencies) never changes the answer; disable it to cross-check. Requires
// the input itself to satisfy the property; refuses instances over budget.
ExactResult min_subgraph_exact(const EdgeColoredGraph& g,
                               int budget = kDefaultExactBudget,
                               bool use_pruning = true);
ExactResult min_subgraph_exact(const VertexColoredGraph& g, CaNotion notion,
                               int budget = kDefaultExactBudget,
                               bool use_pruning = true);

// Minimum-cardinality subset whose restriction is courteous and
// rank-preserving. Requires a courteous input; refuses over-budget ground
// sets.
ExactResult min_restriction_exact(const ColoredMatroid& m,
                                  int budget = kDefaultExactBudget);

struct LowerBoundReport {
  long long bound = 0;
  int samples_checked = 0;
  int bound_violations = 0;
  // Named generator instances and whether their exact optimum equals the
  // bound.
  std::vector<std::pair<std::string, bool>> generator_checks;

  bool ok() const;
};

// Samples random instances with the given parameters and asserts the closed
// form is a true lower bound, with equality on the generator instances.
LowerBoundReport verify_lower_bound(CaNotion notion, int k, int n, int samples,
                                    unsigned long long seed = 1);

}  // namespace caconn
