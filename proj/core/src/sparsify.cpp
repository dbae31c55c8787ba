#include "caconn/sparsify.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

#include "caconn/errors.hpp"
#include "caconn/matroid.hpp"

namespace caconn {

namespace {

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  return order;
}

std::vector<int> resolve_order(const std::vector<int>& order, int n,
                               const char* what) {
  if (order.empty()) return identity_order(n);
  if (static_cast<int>(order.size()) != n) {
    throw std::invalid_argument(std::string(what) + " order has wrong length");
  }
  std::vector<char> seen(n, 0);
  for (int x : order) {
    if (x < 0 || x >= n || seen[x]) {
      throw std::invalid_argument(std::string(what) +
                                  " order is not a permutation");
    }
    seen[x] = 1;
  }
  return order;
}

std::vector<int> resolve_colors(const std::vector<int>& order, int universe) {
  if (order.empty()) return identity_order(universe);
  return resolve_order(order, universe, "color");
}

precondition_error reject(CaNotion notion, const CaVerdict& verdict) {
  const CaWitness& w = *verdict.witness;
  return precondition_error(
      std::string("input is not ") + to_string(notion) +
          "-connected: color " + std::to_string(w.color) + " separates " +
          std::to_string(w.u) + " and " + std::to_string(w.v),
      w.color, w.u, w.v);
}

void finalize(SparsifyResult& result) {
  result.selected.clear();
  result.selected.reserve(result.provenance.size());
  for (const SelectedEdge& s : result.provenance) {
    result.selected.push_back(s.edge);
  }
  std::sort(result.selected.begin(), result.selected.end());
}

}  // namespace

SparsifyOrder SparsifyOrder::descending(int edge_count, int vertex_count) {
  SparsifyOrder order;
  order.edge_order = identity_order(edge_count);
  std::reverse(order.edge_order.begin(), order.edge_order.end());
  order.vertex_order = identity_order(vertex_count);
  std::reverse(order.vertex_order.begin(), order.vertex_order.end());
  return order;
}

SparsifyOrder SparsifyOrder::shuffled(int edge_count, int vertex_count,
                                      unsigned long long seed) {
  std::mt19937_64 rng(seed);
  SparsifyOrder order;
  order.edge_order = identity_order(edge_count);
  std::shuffle(order.edge_order.begin(), order.edge_order.end(), rng);
  order.vertex_order = identity_order(vertex_count);
  std::shuffle(order.vertex_order.begin(), order.vertex_order.end(), rng);
  return order;
}

std::string to_string(EdgePhase phase) {
  switch (phase) {
    case EdgePhase::phase1_tree: return "phase1-tree";
    case EdgePhase::phase1_neighbor: return "phase1-neighbor";
    case EdgePhase::phase2_tree: return "phase2-tree";
    case EdgePhase::phase2_repair: return "phase2-repair";
    case EdgePhase::phase3_repair: return "phase3-repair";
    case EdgePhase::whole_graph: return "whole-graph";
  }
  return "?";
}

int SparsifyResult::phase_count(EdgePhase phase) const {
  return static_cast<int>(
      std::count_if(provenance.begin(), provenance.end(),
                    [&](const SelectedEdge& s) { return s.phase == phase; }));
}

SparsifyResult eca_sparsify(const EdgeColoredGraph& g,
                            const SparsifyOrder& order) {
  CaVerdict verdict = is_eca_connected(g);
  if (!verdict.holds) throw reject(CaNotion::eca, verdict);

  const int n = g.vertex_count();
  auto edge_order = resolve_order(order.edge_order, g.edge_count(), "edge");
  auto colors = resolve_colors(order.color_order, color_universe(g));

  SparsifyResult result;
  std::vector<char> selected(g.edge_count(), 0);

  DisjointSetUnion tree(n);
  for (int i : edge_order) {
    const Edge& e = g.edge(i);
    if (tree.unite(e.u, e.v)) {
      selected[i] = 1;
      result.provenance.push_back({i, EdgePhase::phase1_tree, -1});
    }
  }

  for (Color c : colors) {
    // Components of the selection minus color c; adding the first scanned
    // crossing edges of the c-free input realizes a spanning tree of the
    // contraction pulled back through the contraction map.
    DisjointSetUnion dsu(n);
    int components = n;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (selected[i] && g.edge(i).color != c && dsu.unite(g.edge(i).u, g.edge(i).v)) {
        --components;
      }
    }
    if (components <= 1) continue;
    for (int i : edge_order) {
      const Edge& e = g.edge(i);
      if (e.color == c || selected[i]) continue;
      if (dsu.unite(e.u, e.v)) {
        selected[i] = 1;
        result.provenance.push_back({i, EdgePhase::phase2_repair, c});
      }
    }
  }

  finalize(result);
  return result;
}

namespace {

// Per-color repair shared by the two vertex-colored sparsifiers: reconnects
// the components of (selection minus color-c vertices) using edges of the
// input that avoid color c.
void repair_color(const VertexColoredGraph& g, Color c,
                  const std::vector<int>& edge_order,
                  std::vector<char>& selected, EdgePhase phase,
                  SparsifyResult& result) {
  const int n = g.vertex_count();
  DisjointSetUnion dsu(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (!selected[i]) continue;
    const auto& [u, v] = g.edge(i);
    if (g.color(u) != c && g.color(v) != c) dsu.unite(u, v);
  }
  std::vector<char> root_seen(n, 0);
  int components = 0;
  for (int v = 0; v < n; ++v) {
    if (g.color(v) == c) continue;
    int r = dsu.find(v);
    if (!root_seen[r]) {
      root_seen[r] = 1;
      ++components;
    }
  }
  if (components <= 1) return;
  for (int i : edge_order) {
    if (selected[i]) continue;
    const auto& [u, v] = g.edge(i);
    if (g.color(u) == c || g.color(v) == c) continue;
    if (dsu.unite(u, v)) {
      selected[i] = 1;
      result.provenance.push_back({i, phase, c});
    }
  }
}

}  // namespace

SparsifyResult vca_sparsify(const VertexColoredGraph& g,
                            const SparsifyOrder& order) {
  CaVerdict verdict = is_vca_connected(g);
  if (!verdict.holds) throw reject(CaNotion::vca, verdict);

  auto edge_order = resolve_order(order.edge_order, g.edge_count(), "edge");
  auto colors = resolve_colors(order.color_order, color_universe(g));

  SparsifyResult result;
  std::vector<char> selected(g.edge_count(), 0);

  DisjointSetUnion tree(g.vertex_count());
  for (int i : edge_order) {
    const auto& [u, v] = g.edge(i);
    if (tree.unite(u, v)) {
      selected[i] = 1;
      result.provenance.push_back({i, EdgePhase::phase1_tree, -1});
    }
  }

  for (Color c : colors) {
    repair_color(g, c, edge_order, selected, EdgePhase::phase2_repair, result);
  }

  finalize(result);
  return result;
}

SparsifyResult ivca_sparsify(const VertexColoredGraph& g,
                             const SparsifyOrder& order) {
  CaVerdict verdict = is_ivca_connected(g);
  if (!verdict.holds) throw reject(CaNotion::ivca, verdict);

  const int n = g.vertex_count();
  SparsifyResult result;

  int used_colors = 0;
  {
    std::vector<char> seen;
    for (Color c : g.colors()) {
      if (c >= static_cast<int>(seen.size())) seen.resize(c + 1, 0);
      if (!seen[c]) {
        seen[c] = 1;
        ++used_colors;
      }
    }
  }
  if (used_colors <= 1) {
    for (int i = 0; i < g.edge_count(); ++i) {
      result.provenance.push_back({i, EdgePhase::whole_graph, -1});
    }
    finalize(result);
    return result;
  }

  auto edge_order = resolve_order(order.edge_order, g.edge_count(), "edge");
  auto vertex_order = resolve_order(order.vertex_order, n, "vertex");
  auto colors = resolve_colors(order.color_order, color_universe(g));

  std::vector<char> selected(g.edge_count(), 0);
  std::vector<char> has_other_color_neighbor(n, 0);

  for (int v : vertex_order) {
    if (has_other_color_neighbor[v]) continue;
    int pick = -1;
    for (int i : edge_order) {
      const auto& [a, b] = g.edge(i);
      if (a != v && b != v) continue;
      int w = a == v ? b : a;
      if (g.color(w) != g.color(v)) {
        pick = i;
        break;
      }
    }
    // An internally color-avoiding graph with two or more colors gives every
    // vertex a differently colored neighbor.
    if (pick < 0) {
      throw std::logic_error("no differently colored neighbor found");
    }
    const auto& [a, b] = g.edge(pick);
    selected[pick] = 1;
    has_other_color_neighbor[a] = 1;
    has_other_color_neighbor[b] = 1;
    result.provenance.push_back({pick, EdgePhase::phase1_neighbor, -1});
  }

  DisjointSetUnion tree(n);
  for (int i = 0; i < g.edge_count(); ++i) {
    if (selected[i]) tree.unite(g.edge(i).first, g.edge(i).second);
  }
  if (tree.set_count() > 1) {
    for (int i : edge_order) {
      if (selected[i]) continue;
      const auto& [u, v] = g.edge(i);
      if (tree.unite(u, v)) {
        selected[i] = 1;
        result.provenance.push_back({i, EdgePhase::phase2_tree, -1});
      }
    }
  }

  for (Color c : colors) {
    repair_color(g, c, edge_order, selected, EdgePhase::phase3_repair, result);
  }

  finalize(result);
  return result;
}

namespace {

bool subgraph_holds(const EdgeColoredGraph& g, const std::vector<int>& edges) {
  return is_eca_connected(edge_subgraph(g, edges)).holds;
}

bool subgraph_holds(const VertexColoredGraph& g, const std::vector<int>& edges,
                    CaNotion notion) {
  VertexColoredGraph sub = edge_subgraph(g, edges);
  return notion == CaNotion::vca ? is_vca_connected(sub).holds
                                 : is_ivca_connected(sub).holds;
}

template <typename HoldsWithout>
std::vector<int> greedy_edge_delete(int edge_count,
                                    const std::vector<int>& selected,
                                    const std::vector<int>& order,
                                    HoldsWithout&& holds_without) {
  std::vector<char> keep(edge_count, 0);
  for (int i : selected) keep[i] = 1;
  for (int i : order) {
    if (!keep[i]) continue;
    keep[i] = 0;
    std::vector<int> rest;
    for (int x = 0; x < edge_count; ++x) {
      if (keep[x]) rest.push_back(x);
    }
    if (!holds_without(rest)) keep[i] = 1;
  }
  std::vector<int> result;
  for (int i = 0; i < edge_count; ++i) {
    if (keep[i]) result.push_back(i);
  }
  return result;
}

std::vector<int> descending_or(const std::vector<int>& order, int n) {
  if (!order.empty()) return resolve_order(order, n, "edge");
  std::vector<int> desc = identity_order(n);
  std::reverse(desc.begin(), desc.end());
  return desc;
}

}  // namespace

std::vector<int> prune_subgraph(const EdgeColoredGraph& g,
                                const std::vector<int>& selected,
                                const std::vector<int>& edge_order) {
  if (!subgraph_holds(g, selected)) {
    throw precondition_error("selection is not edge-color-avoiding connected");
  }
  auto order = descending_or(edge_order, g.edge_count());
  return greedy_edge_delete(g.edge_count(), selected, order,
                            [&](const std::vector<int>& rest) {
                              return subgraph_holds(g, rest);
                            });
}

std::vector<int> prune_subgraph(const VertexColoredGraph& g,
                                const std::vector<int>& selected,
                                CaNotion notion,
                                const std::vector<int>& edge_order) {
  if (notion == CaNotion::eca) {
    throw std::invalid_argument("eca pruning needs an edge-colored graph");
  }
  if (!subgraph_holds(g, selected, notion)) {
    throw precondition_error(std::string("selection is not ") +
                             to_string(notion) + "-connected");
  }
  auto order = descending_or(edge_order, g.edge_count());
  return greedy_edge_delete(g.edge_count(), selected, order,
                            [&](const std::vector<int>& rest) {
                              return subgraph_holds(g, rest, notion);
                            });
}

std::vector<int> vca_optimal_k2(const VertexColoredGraph& g) {
  if (g.color_count() != 2 || !is_canonically_colored(g)) {
    throw precondition_error(
        "exact two-color sparsification needs exactly colors {0, 1}, both "
        "used");
  }
  CaVerdict verdict = is_vca_connected(g);
  if (!verdict.holds) throw reject(CaNotion::vca, verdict);

  std::vector<int> picked;
  for (Color c : {0, 1}) {
    // Spanning tree of the class-c induced subgraph; the class is connected
    // in any two-colored vertex-color-avoiding graph.
    DisjointSetUnion dsu(g.vertex_count());
    for (int i = 0; i < g.edge_count(); ++i) {
      const auto& [u, v] = g.edge(i);
      if (g.color(u) == c && g.color(v) == c && dsu.unite(u, v)) {
        picked.push_back(i);
      }
    }
    int class_components = 0;
    std::vector<char> root_seen(g.vertex_count(), 0);
    for (int v = 0; v < g.vertex_count(); ++v) {
      if (g.color(v) != c) continue;
      int r = dsu.find(v);
      if (!root_seen[r]) {
        root_seen[r] = 1;
        ++class_components;
      }
    }
    if (class_components > 1) {
      throw precondition_error("color class " + std::to_string(c) +
                               " induces a disconnected subgraph");
    }
  }
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edge(i);
    if (g.color(u) != g.color(v)) {
      picked.push_back(i);
      break;
    }
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

long long min_edges_bound(CaNotion notion, int color_count, int vertex_count) {
  const long long k = color_count;
  const long long n = vertex_count;
  if (n < 0 || k < 1) throw std::invalid_argument("infeasible parameters");
  switch (notion) {
    case CaNotion::eca:
      if (n <= 1) return 0;
      if (k < 2) {
        throw std::invalid_argument(
            "an edge-color-avoiding graph on two or more vertices needs at "
            "least 2 colors");
      }
      return min_elements_bound(color_count, vertex_count - 1);
    case CaNotion::vca:
      if (n < k) throw std::invalid_argument("fewer vertices than colors");
      return k <= 2 ? n - 1 : n;
    case CaNotion::ivca:
      if (n < k) throw std::invalid_argument("fewer vertices than colors");
      if (k == 1) return n * (n - 1) / 2;
      return ((2 * k - 1) * n - 2 * k + (2 * k - 3)) / (2 * k - 2);
  }
  throw std::invalid_argument("unknown notion");
}

}  // namespace caconn
