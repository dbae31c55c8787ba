#pragma once

#include <random>
#include <vector>

#include "caconn/connectivity.hpp"
#include "caconn/graph.hpp"
#include "caconn/matroid.hpp"

namespace catest {

using namespace caconn;

// Small fixed instances used throughout the suites: a 4-vertex, 5-edge graph
// whose graphic matroid has a known independence list, two edge-colored
// 4-cycles (one color-avoiding, one not), and three vertex-colored 4-cycles
// spanning the recognition outcomes.
EdgeColoredGraph matroid_example_graph();
std::vector<std::vector<int>> matroid_example_dependent_sets();
EdgeColoredGraph four_cycle_rainbow();
EdgeColoredGraph four_cycle_double_blue();
VertexColoredGraph vertex_cycle_rainbow();
VertexColoredGraph vertex_cycle_three_blue();
VertexColoredGraph vertex_cycle_two_blue();

// Independent connectivity oracle (breadth-first search; the library uses
// union-find).
bool bfs_connected(int n, const std::vector<std::pair<int, int>>& edges);

// Exhaustive check of the independence axioms; ground sets above 10 elements
// are rejected.
bool satisfies_matroid_axioms(const ColoredMatroid& m);

// Uniform random helpers shared by the suites.
int rand_int(std::mt19937_64& rng, int lo, int hi);  // inclusive

}  // namespace catest
