#include "caconn/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>

namespace caconn {

namespace {

void check_vertex(int x, int n, const char* what) {
  if (x < 0 || x >= n) {
    throw std::invalid_argument(std::string(what) + " index " +
                                std::to_string(x) + " out of range [0, " +
                                std::to_string(n) + ")");
  }
}

}  // namespace

bool operator==(const Edge& a, const Edge& b) {
  return a.u == b.u && a.v == b.v && a.color == b.color;
}

EdgeColoredGraph::EdgeColoredGraph(int vertex_count, std::vector<Edge> edges,
                                   int color_count)
    : n_(vertex_count), k_(color_count), edges_(std::move(edges)) {
  if (n_ < 0) throw std::invalid_argument("negative vertex count");
  if (k_ < 0) throw std::invalid_argument("negative color count");
  for (const Edge& e : edges_) {
    check_vertex(e.u, n_, "edge endpoint");
    check_vertex(e.v, n_, "edge endpoint");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    if (e.color < 0) throw std::invalid_argument("negative edge color");
  }
}

bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b) {
  return a.vertex_count() == b.vertex_count() &&
         a.color_count() == b.color_count() && a.edges() == b.edges();
}

VertexColoredGraph::VertexColoredGraph(std::vector<Color> colors,
                                       std::vector<std::pair<int, int>> edges,
                                       int color_count)
    : k_(color_count), colors_(std::move(colors)), edges_(std::move(edges)) {
  if (k_ < 0) throw std::invalid_argument("negative color count");
  const int n = vertex_count();
  for (Color c : colors_) {
    if (c < 0) throw std::invalid_argument("negative vertex color");
  }
  std::set<std::pair<int, int>> seen;
  for (const auto& [u, v] : edges_) {
    check_vertex(u, n, "edge endpoint");
    check_vertex(v, n, "edge endpoint");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    auto key = std::minmax(u, v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("parallel edges are not allowed in a "
                                  "vertex-colored graph");
    }
  }
}

bool operator==(const VertexColoredGraph& a, const VertexColoredGraph& b) {
  return a.color_count() == b.color_count() && a.colors() == b.colors() &&
         a.edges() == b.edges();
}

DisjointSetUnion::DisjointSetUnion(int n)
    : parent_(n), size_(n, 1), sets_(n) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int DisjointSetUnion::find(int x) {
  int root = x;
  while (parent_[root] != root) root = parent_[root];
  while (parent_[x] != root) {
    int next = parent_[x];
    parent_[x] = root;
    x = next;
  }
  return root;
}

bool DisjointSetUnion::unite(int a, int b) {
  a = find(a);
  b = find(b);
  if (a == b) return false;
  if (size_[a] < size_[b]) std::swap(a, b);
  parent_[b] = a;
  size_[a] += size_[b];
  --sets_;
  return true;
}

bool is_partition_of(const Partition& p, int n) {
  std::vector<char> seen(n, 0);
  int covered = 0;
  for (const auto& part : p.parts) {
    for (int v : part) {
      if (v < 0 || v >= n || seen[v]) return false;
      seen[v] = 1;
      ++covered;
    }
  }
  return covered == n;
}

bool is_connected(int n, const std::vector<std::pair<int, int>>& edges) {
  if (n <= 1) return true;
  DisjointSetUnion dsu(n);
  for (const auto& [u, v] : edges) dsu.unite(u, v);
  return dsu.set_count() == 1;
}

bool is_connected(const EdgeColoredGraph& g) {
  if (g.vertex_count() <= 1) return true;
  DisjointSetUnion dsu(g.vertex_count());
  for (const Edge& e : g.edges()) dsu.unite(e.u, e.v);
  return dsu.set_count() == 1;
}

bool is_connected(const VertexColoredGraph& g) {
  return is_connected(g.vertex_count(), g.edges());
}

Partition connected_components(int n,
                               const std::vector<std::pair<int, int>>& edges) {
  DisjointSetUnion dsu(n);
  for (const auto& [u, v] : edges) dsu.unite(u, v);
  std::map<int, std::vector<int>> by_root;
  for (int v = 0; v < n; ++v) by_root[dsu.find(v)].push_back(v);
  Partition result;
  for (auto& [root, members] : by_root) result.parts.push_back(members);
  std::sort(result.parts.begin(), result.parts.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return result;
}

EdgeColoredGraph delete_color_edges(const EdgeColoredGraph& g, Color c) {
  std::vector<Edge> kept;
  kept.reserve(g.edges().size());
  for (const Edge& e : g.edges()) {
    if (e.color != c) kept.push_back(e);
  }
  return EdgeColoredGraph(g.vertex_count(), std::move(kept), g.color_count());
}

VertexDeletionResult delete_color_vertices(const VertexColoredGraph& g,
                                           Color c) {
  VertexDeletionResult result;
  result.old_to_new.assign(g.vertex_count(), -1);
  std::vector<Color> colors;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.color(v) != c) {
      result.old_to_new[v] = static_cast<int>(result.new_to_old.size());
      result.new_to_old.push_back(v);
      colors.push_back(g.color(v));
    }
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges()) {
    int nu = result.old_to_new[u];
    int nv = result.old_to_new[v];
    if (nu >= 0 && nv >= 0) edges.emplace_back(nu, nv);
  }
  result.graph =
      VertexColoredGraph(std::move(colors), std::move(edges), g.color_count());
  return result;
}

ContractionResult contract_partition(const EdgeColoredGraph& g,
                                     const Partition& w) {
  if (!is_partition_of(w, g.vertex_count())) {
    throw std::invalid_argument("not a partition of the vertex set");
  }
  std::vector<int> part_of(g.vertex_count(), -1);
  for (int p = 0; p < static_cast<int>(w.parts.size()); ++p) {
    for (int v : w.parts[p]) part_of[v] = p;
  }
  ContractionResult result;
  std::vector<Edge> edges;
  std::set<std::tuple<int, int, Color>> seen;
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    int pu = part_of[e.u];
    int pv = part_of[e.v];
    if (pu == pv) continue;
    auto [lo, hi] = std::minmax(pu, pv);
    if (!seen.insert({lo, hi, e.color}).second) continue;
    edges.push_back(Edge{lo, hi, e.color});
    result.edge_origin.push_back(i);
  }
  result.graph = EdgeColoredGraph(static_cast<int>(w.parts.size()),
                                  std::move(edges), g.color_count());
  return result;
}

namespace {

bool canonical(const std::vector<Color>& used, int k) {
  std::vector<char> seen(std::max(k, 0), 0);
  for (Color c : used) {
    if (c >= k) return false;
    seen[c] = 1;
  }
  return std::all_of(seen.begin(), seen.end(), [](char x) { return x != 0; });
}

}  // namespace

bool is_canonically_colored(const EdgeColoredGraph& g) {
  std::vector<Color> used;
  used.reserve(g.edge_count());
  for (const Edge& e : g.edges()) used.push_back(e.color);
  return canonical(used, g.color_count());
}

bool is_canonically_colored(const VertexColoredGraph& g) {
  return canonical(g.colors(), g.color_count());
}

int color_universe(const EdgeColoredGraph& g) {
  int u = g.color_count();
  for (const Edge& e : g.edges()) u = std::max(u, e.color + 1);
  return u;
}

int color_universe(const VertexColoredGraph& g) {
  int u = g.color_count();
  for (Color c : g.colors()) u = std::max(u, c + 1);
  return u;
}

EdgeColoredGraph edge_subgraph(const EdgeColoredGraph& g,
                               const std::vector<int>& edge_ids) {
  std::vector<Edge> edges;
  edges.reserve(edge_ids.size());
  for (int i : edge_ids) edges.push_back(g.edge(i));
  return EdgeColoredGraph(g.vertex_count(), std::move(edges), g.color_count());
}

VertexColoredGraph edge_subgraph(const VertexColoredGraph& g,
                                 const std::vector<int>& edge_ids) {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(edge_ids.size());
  for (int i : edge_ids) edges.push_back(g.edge(i));
  return VertexColoredGraph(g.colors(), std::move(edges), g.color_count());
}

}  // namespace caconn
