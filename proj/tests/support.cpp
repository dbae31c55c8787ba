#include "support.hpp"

#include <queue>
#include <stdexcept>

namespace catest {

EdgeColoredGraph matroid_example_graph() {
  // Square 0-1-2-3 with one diagonal 0-2; elements in label order e1..e5.
  return EdgeColoredGraph(
      4, {{1, 2, 0}, {0, 1, 0}, {0, 2, 0}, {2, 3, 0}, {0, 3, 0}}, 1);
}

std::vector<std::vector<int>> matroid_example_dependent_sets() {
  return {{0, 1, 2},    {2, 3, 4},    {0, 1, 2, 3},    {0, 1, 2, 4},
          {0, 1, 3, 4}, {0, 2, 3, 4}, {1, 2, 3, 4},    {0, 1, 2, 3, 4}};
}

EdgeColoredGraph four_cycle_rainbow() {
  return EdgeColoredGraph(4, {{0, 1, 0}, {2, 3, 1}, {1, 2, 2}, {0, 3, 3}}, 4);
}

EdgeColoredGraph four_cycle_double_blue() {
  return EdgeColoredGraph(4, {{0, 1, 0}, {2, 3, 1}, {1, 2, 2}, {3, 0, 1}}, 3);
}

VertexColoredGraph vertex_cycle_rainbow() {
  return VertexColoredGraph({0, 1, 2, 3}, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}, 4);
}

VertexColoredGraph vertex_cycle_three_blue() {
  return VertexColoredGraph({0, 1, 1, 1}, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}, 2);
}

VertexColoredGraph vertex_cycle_two_blue() {
  return VertexColoredGraph({0, 1, 1, 2}, {{0, 1}, {1, 3}, {3, 2}, {2, 0}}, 3);
}

bool bfs_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  std::vector<std::vector<int>> adj(n);
  for (const auto& [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  std::vector<char> seen(n, 0);
  std::queue<int> queue;
  queue.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (int y : adj[x]) {
      if (!seen[y]) {
        seen[y] = 1;
        ++visited;
        queue.push(y);
      }
    }
  }
  return visited == n;
}

bool satisfies_matroid_axioms(const ColoredMatroid& m) {
  const int n = m.ground_size();
  if (n > 10) throw std::invalid_argument("ground set too large");
  const int subsets = 1 << n;
  std::vector<char> independent(subsets, 0);
  for (int mask = 0; mask < subsets; ++mask) {
    std::vector<int> elements;
    for (int e = 0; e < n; ++e) {
      if (mask & (1 << e)) elements.push_back(e);
    }
    independent[mask] = m.independent(elements) ? 1 : 0;
  }
  if (!independent[0]) return false;
  // Downward closure via single-element removals.
  for (int mask = 0; mask < subsets; ++mask) {
    if (!independent[mask]) continue;
    for (int e = 0; e < n; ++e) {
      if ((mask & (1 << e)) && !independent[mask ^ (1 << e)]) return false;
    }
  }
  // Exchange.
  std::vector<int> indep_masks;
  for (int mask = 0; mask < subsets; ++mask) {
    if (independent[mask]) indep_masks.push_back(mask);
  }
  for (int x : indep_masks) {
    for (int y : indep_masks) {
      if (__builtin_popcount(x) >= __builtin_popcount(y)) continue;
      bool extended = false;
      for (int e = 0; e < n && !extended; ++e) {
        if ((y & (1 << e)) && !(x & (1 << e)) && independent[x | (1 << e)]) {
          extended = true;
        }
      }
      if (!extended) return false;
    }
  }
  return true;
}

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % (hi - lo + 1));
}

}  // namespace catest
