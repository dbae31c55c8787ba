#include "caconn/connectivity.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace caconn {

const char* to_string(CaNotion notion) {
  switch (notion) {
    case CaNotion::eca: return "eca";
    case CaNotion::vca: return "vca";
    case CaNotion::ivca: return "ivca";
  }
  return "?";
}

namespace {

std::vector<std::vector<int>> adjacency(const VertexColoredGraph& g) {
  std::vector<std::vector<int>> adj(g.vertex_count());
  for (const auto& [u, v] : g.edges()) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  return adj;
}

// BFS from u over the allowed vertices; returns true when v is reached.
// allowed[u] and allowed[v] are assumed true by the caller.
bool reaches(const std::vector<std::vector<int>>& adj, int u, int v,
             const std::vector<char>& allowed) {
  if (u == v) return true;
  std::vector<char> seen(adj.size(), 0);
  std::queue<int> queue;
  queue.push(u);
  seen[u] = 1;
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (int y : adj[x]) {
      if (seen[y] || !allowed[y]) continue;
      if (y == v) return true;
      seen[y] = 1;
      queue.push(y);
    }
  }
  return false;
}

int effective_universe(int universe) { return std::max(universe, 1); }

}  // namespace

bool pair_edge_color_avoiding(const EdgeColoredGraph& g, int u, int v,
                              Color c) {
  if (u == v) return true;
  DisjointSetUnion dsu(g.vertex_count());
  for (const Edge& e : g.edges()) {
    if (e.color != c) dsu.unite(e.u, e.v);
  }
  return dsu.same(u, v);
}

bool pair_vertex_color_avoiding(const VertexColoredGraph& g, int u, int v,
                                Color c) {
  if (u == v) return true;
  auto adj = adjacency(g);
  std::vector<char> all(g.vertex_count(), 1);
  if (!reaches(adj, u, v, all)) return false;
  if (g.color(u) == c || g.color(v) == c) return true;
  std::vector<char> allowed(g.vertex_count(), 0);
  for (int x = 0; x < g.vertex_count(); ++x) allowed[x] = g.color(x) != c;
  return reaches(adj, u, v, allowed);
}

bool pair_internally_color_avoiding(const VertexColoredGraph& g, int u, int v,
                                    Color c) {
  if (u == v) return true;
  auto adj = adjacency(g);
  std::vector<char> allowed(g.vertex_count(), 0);
  for (int x = 0; x < g.vertex_count(); ++x) allowed[x] = g.color(x) != c;
  allowed[u] = 1;
  allowed[v] = 1;
  return reaches(adj, u, v, allowed);
}

CaVerdict is_eca_connected(const EdgeColoredGraph& g) {
  const int n = g.vertex_count();
  const int universe = effective_universe(color_universe(g));
  for (Color c = 0; c < universe; ++c) {
    DisjointSetUnion dsu(n);
    for (const Edge& e : g.edges()) {
      if (e.color != c) dsu.unite(e.u, e.v);
    }
    if (n > 1 && dsu.set_count() > 1) {
      int v = -1;
      for (int x = 1; x < n && v < 0; ++x) {
        if (!dsu.same(0, x)) v = x;
      }
      return CaVerdict{false, CaWitness{c, 0, v}};
    }
  }
  return CaVerdict{true, std::nullopt};
}

namespace {

// Smallest (u, v) pair that fails the per-pair predicate for color c.
template <typename PairCheck>
CaWitness smallest_failing_pair(int n, Color c, PairCheck&& fails) {
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (fails(u, v)) return CaWitness{c, u, v};
    }
  }
  return CaWitness{c, -1, -1};  // unreachable when a failure exists
}

// Number of connected components among the vertices of color != c, counting
// only edges between two such vertices. Zero survivors count as connected.
int surviving_component_count(const VertexColoredGraph& g, Color c,
                              DisjointSetUnion& dsu) {
  for (const auto& [u, v] : g.edges()) {
    if (g.color(u) != c && g.color(v) != c) dsu.unite(u, v);
  }
  std::vector<char> root_seen(g.vertex_count(), 0);
  int components = 0;
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.color(v) == c) continue;
    int r = dsu.find(v);
    if (!root_seen[r]) {
      root_seen[r] = 1;
      ++components;
    }
  }
  return components;
}

}  // namespace

CaVerdict is_vca_connected(const VertexColoredGraph& g) {
  const int n = g.vertex_count();
  const int universe = effective_universe(color_universe(g));
  std::optional<Color> failing;
  if (!is_connected(g)) {
    failing = 0;  // a disconnected pair fails every color
  } else {
    for (Color c = 0; c < universe && !failing; ++c) {
      DisjointSetUnion dsu(n);
      if (surviving_component_count(g, c, dsu) > 1) failing = c;
    }
  }
  if (!failing) return CaVerdict{true, std::nullopt};
  auto witness = smallest_failing_pair(n, *failing, [&](int u, int v) {
    return !pair_vertex_color_avoiding(g, u, v, *failing);
  });
  return CaVerdict{false, witness};
}

CaVerdict is_ivca_connected(const VertexColoredGraph& g) {
  const int n = g.vertex_count();
  const int universe = effective_universe(color_universe(g));
  auto adj = adjacency(g);
  std::optional<Color> failing;
  for (Color c = 0; c < universe && !failing; ++c) {
    int survivors = 0;
    for (int v = 0; v < n; ++v) {
      if (g.color(v) != c) ++survivors;
    }
    if (survivors == 0) {
      // The color covers every vertex, so pairs need direct edges.
      long long need = static_cast<long long>(n) * (n - 1) / 2;
      if (static_cast<long long>(g.edge_count()) < need) failing = c;
      continue;
    }
    DisjointSetUnion dsu(n);
    if (surviving_component_count(g, c, dsu) > 1) {
      failing = c;
      continue;
    }
    for (int v = 0; v < n && !failing; ++v) {
      if (g.color(v) != c) continue;
      bool has_other = std::any_of(adj[v].begin(), adj[v].end(), [&](int w) {
        return g.color(w) != c;
      });
      if (!has_other) failing = c;
    }
  }
  if (!failing) return CaVerdict{true, std::nullopt};
  auto witness = smallest_failing_pair(n, *failing, [&](int u, int v) {
    return !pair_internally_color_avoiding(g, u, v, *failing);
  });
  return CaVerdict{false, witness};
}

namespace {

void check_definitional_cap(const VertexColoredGraph& g, int cap) {
  if (g.vertex_count() > cap) {
    throw std::invalid_argument(
        "definitional check refused: " + std::to_string(g.vertex_count()) +
        " vertices exceed the cap of " + std::to_string(cap) +
        "; raise vertex_cap to force");
  }
}

template <typename PairCheck>
CaVerdict definitional_scan(const VertexColoredGraph& g, PairCheck&& holds) {
  const int n = g.vertex_count();
  const int universe = effective_universe(color_universe(g));
  for (Color c = 0; c < universe; ++c) {
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!holds(u, v, c)) return CaVerdict{false, CaWitness{c, u, v}};
      }
    }
  }
  return CaVerdict{true, std::nullopt};
}

}  // namespace

CaVerdict is_vca_connected_definitional(const VertexColoredGraph& g,
                                        int vertex_cap) {
  check_definitional_cap(g, vertex_cap);
  return definitional_scan(g, [&](int u, int v, Color c) {
    return pair_vertex_color_avoiding(g, u, v, c);
  });
}

CaVerdict is_ivca_connected_definitional(const VertexColoredGraph& g,
                                         int vertex_cap) {
  check_definitional_cap(g, vertex_cap);
  return definitional_scan(g, [&](int u, int v, Color c) {
    return pair_internally_color_avoiding(g, u, v, c);
  });
}

std::vector<CutComponent> cut_vertex_color_components(
    const VertexColoredGraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) {
    throw std::invalid_argument("cut vertex index out of range");
  }
  DisjointSetUnion dsu(g.vertex_count());
  for (const auto& [a, b] : g.edges()) {
    if (a != v && b != v) dsu.unite(a, b);
  }
  std::vector<int> roots;
  std::vector<std::vector<int>> members(g.vertex_count());
  for (int x = 0; x < g.vertex_count(); ++x) {
    if (x == v) continue;
    int r = dsu.find(x);
    if (members[r].empty()) roots.push_back(r);
    members[r].push_back(x);
  }
  std::sort(roots.begin(), roots.end(), [&](int a, int b) {
    return members[a].front() < members[b].front();
  });
  std::vector<CutComponent> result;
  for (int r : roots) {
    CutComponent part;
    part.vertices = members[r];
    part.monochromatic_in_cut_color =
        std::all_of(part.vertices.begin(), part.vertices.end(),
                    [&](int x) { return g.color(x) == g.color(v); });
    result.push_back(std::move(part));
  }
  return result;
}

namespace {

struct DfsFrame {
  int vertex;
  int incoming_edge;
  size_t next_neighbor;
};

// Iterative low-link DFS shared by the bridge and articulation checks.
// half_edges[v] lists (neighbor, edge id); the traversal never re-uses the
// incoming edge id, so parallel edges act as back edges.
struct LowLink {
  std::vector<int> disc;
  std::vector<int> low;
  bool has_bridge = false;
  bool has_articulation = false;

  void run(int n, const std::vector<std::vector<std::pair<int, int>>>& adj) {
    disc.assign(n, -1);
    low.assign(n, 0);
    int timer = 0;
    for (int start = 0; start < n; ++start) {
      if (disc[start] >= 0) continue;
      int root_children = 0;
      std::vector<DfsFrame> stack;
      disc[start] = low[start] = timer++;
      stack.push_back({start, -1, 0});
      while (!stack.empty()) {
        DfsFrame& frame = stack.back();
        int v = frame.vertex;
        if (frame.next_neighbor < adj[v].size()) {
          auto [w, edge_id] = adj[v][frame.next_neighbor++];
          if (edge_id == frame.incoming_edge) continue;
          if (disc[w] >= 0) {
            low[v] = std::min(low[v], disc[w]);
          } else {
            if (v == start) ++root_children;
            disc[w] = low[w] = timer++;
            stack.push_back({w, edge_id, 0});
          }
        } else {
          stack.pop_back();
          if (!stack.empty()) {
            int parent = stack.back().vertex;
            low[parent] = std::min(low[parent], low[v]);
            if (low[v] > disc[parent]) has_bridge = true;
            if (parent != start && low[v] >= disc[parent]) {
              has_articulation = true;
            }
          }
        }
      }
      if (root_children > 1) has_articulation = true;
    }
  }
};

}  // namespace

bool is_two_edge_connected(const EdgeColoredGraph& g) {
  if (!is_connected(g)) return false;
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const Edge& e = g.edge(i);
    adj[e.u].emplace_back(e.v, i);
    adj[e.v].emplace_back(e.u, i);
  }
  LowLink dfs;
  dfs.run(g.vertex_count(), adj);
  return !dfs.has_bridge;
}

bool is_two_vertex_connected(const VertexColoredGraph& g) {
  if (g.vertex_count() <= 2) return false;
  if (!is_connected(g)) return false;
  std::vector<std::vector<std::pair<int, int>>> adj(g.vertex_count());
  for (int i = 0; i < g.edge_count(); ++i) {
    const auto& [u, v] = g.edge(i);
    adj[u].emplace_back(v, i);
    adj[v].emplace_back(u, i);
  }
  LowLink dfs;
  dfs.run(g.vertex_count(), adj);
  return !dfs.has_articulation;
}

}  // namespace caconn
