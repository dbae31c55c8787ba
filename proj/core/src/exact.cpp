#include "caconn/exact.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include "caconn/errors.hpp"
#include "caconn/generators.hpp"
#include "caconn/sampling.hpp"
#include "caconn/sparsify.hpp"

namespace caconn {

namespace {

// Union-find without path compression so unions can be undone in reverse.
struct RollbackDsu {
  std::vector<int> parent;
  std::vector<int> size;
  std::vector<std::pair<int, int>> trail;  // (absorbed root, absorbing root)
  int components = 0;

  explicit RollbackDsu(int n) : parent(n), size(n, 1), components(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) const {
    while (parent[x] != x) x = parent[x];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
    --components;
    trail.emplace_back(b, a);
  }
  size_t mark() const { return trail.size(); }
  void rollback(size_t mark) {
    while (trail.size() > mark) {
      auto [b, a] = trail.back();
      trail.pop_back();
      size[a] -= size[b];
      parent[b] = b;
      ++components;
    }
  }
};

// Enumerates edge subsets by cardinality, then lexicographically; the first
// accepted subset is therefore the lexicographically smallest optimum.
struct SubsetSearch {
  int m = 0;
  int n = 0;
  bool prune = true;
  std::vector<std::pair<int, int>> endpoints;
  // survives[c][e]: edge e still counts after deleting color c; a property-
  // satisfying subset needs at least needed[c] surviving edges.
  std::vector<std::vector<char>> survives;
  std::vector<int> needed;
  std::function<bool(const std::vector<int>&)> accept;

  long long candidates = 0;
  std::vector<int> chosen;
  std::vector<int> chosen_survivors;
  std::vector<std::vector<int>> suffix;
  RollbackDsu dsu{0};

  void prepare() {
    const int colors = static_cast<int>(survives.size());
    suffix.assign(colors, std::vector<int>(m + 1, 0));
    for (int c = 0; c < colors; ++c) {
      for (int i = m - 1; i >= 0; --i) {
        suffix[c][i] = suffix[c][i + 1] + (survives[c][i] ? 1 : 0);
      }
    }
  }

  bool find_of_size(int target, std::vector<int>& witness) {
    chosen.clear();
    chosen_survivors.assign(survives.size(), 0);
    dsu = RollbackDsu(n);
    if (step(0, target)) {
      witness = chosen;
      return true;
    }
    return false;
  }

  bool step(int idx, int remaining) {
    if (remaining == 0) {
      ++candidates;
      return accept(chosen);
    }
    if (m - idx < remaining) return false;
    if (prune) {
      if (dsu.components - 1 > remaining) return false;
      for (size_t c = 0; c < needed.size(); ++c) {
        int reachable =
            chosen_survivors[c] + std::min(suffix[c][idx], remaining);
        if (reachable < needed[c]) return false;
      }
    }
    size_t mark = dsu.mark();
    dsu.unite(endpoints[idx].first, endpoints[idx].second);
    chosen.push_back(idx);
    for (size_t c = 0; c < survives.size(); ++c) {
      chosen_survivors[c] += survives[c][idx] ? 1 : 0;
    }
    if (step(idx + 1, remaining - 1)) return true;
    for (size_t c = 0; c < survives.size(); ++c) {
      chosen_survivors[c] -= survives[c][idx] ? 1 : 0;
    }
    chosen.pop_back();
    dsu.rollback(mark);
    return step(idx + 1, remaining);
  }
};

ExactResult run_search(SubsetSearch& search, int size_floor) {
  search.prepare();
  ExactResult result;
  for (int s = size_floor; s <= search.m; ++s) {
    if (search.find_of_size(s, result.witness)) {
      result.optimum_size = s;
      result.candidates_tested = search.candidates;
      return result;
    }
  }
  // The input satisfies the property, so the full edge set is accepted.
  throw std::logic_error("exhaustive search found no solution");
}

void check_budget(int actual, int budget, const char* what) {
  if (actual > budget) {
    throw budget_error(std::string(what) + " has " + std::to_string(actual) +
                           " elements, over the exact-search budget of " +
                           std::to_string(budget),
                       budget, actual);
  }
}

}  // namespace

ExactResult min_subgraph_exact(const EdgeColoredGraph& g, int budget,
                               bool use_pruning) {
  check_budget(g.edge_count(), budget, "edge set");
  CaVerdict verdict = is_eca_connected(g);
  if (!verdict.holds) {
    const CaWitness& w = *verdict.witness;
    throw precondition_error("input is not edge-color-avoiding connected",
                             w.color, w.u, w.v);
  }
  const int n = g.vertex_count();
  const int universe = std::max(1, color_universe(g));

  SubsetSearch search;
  search.m = g.edge_count();
  search.n = n;
  search.prune = use_pruning;
  for (const Edge& e : g.edges()) search.endpoints.emplace_back(e.u, e.v);
  search.survives.assign(universe, std::vector<char>(search.m, 0));
  search.needed.assign(universe, std::max(0, n - 1));
  for (int c = 0; c < universe; ++c) {
    for (int e = 0; e < search.m; ++e) {
      search.survives[c][e] = g.edge(e).color != c ? 1 : 0;
    }
  }
  search.accept = [&g, n, universe](const std::vector<int>& chosen) {
    for (int c = 0; c < universe; ++c) {
      DisjointSetUnion dsu(n);
      for (int e : chosen) {
        if (g.edge(e).color != c) dsu.unite(g.edge(e).u, g.edge(e).v);
      }
      if (dsu.set_count() > 1) return false;
    }
    return true;
  };
  if (!use_pruning) search.needed.assign(universe, 0);
  return run_search(search, std::max(0, n - 1));
}

ExactResult min_subgraph_exact(const VertexColoredGraph& g, CaNotion notion,
                               int budget, bool use_pruning) {
  check_budget(g.edge_count(), budget, "edge set");
  if (notion == CaNotion::eca) {
    throw std::invalid_argument("eca needs an edge-colored graph");
  }
  CaVerdict verdict = notion == CaNotion::vca ? is_vca_connected(g)
                                              : is_ivca_connected(g);
  if (!verdict.holds) {
    const CaWitness& w = *verdict.witness;
    throw precondition_error(std::string("input is not ") + to_string(notion) +
                                 "-connected",
                             w.color, w.u, w.v);
  }
  const int n = g.vertex_count();
  const int universe = std::max(1, color_universe(g));

  std::vector<int> survivor_count(universe, 0);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < universe; ++c) {
      if (g.color(v) != c) ++survivor_count[c];
    }
  }

  SubsetSearch search;
  search.m = g.edge_count();
  search.n = n;
  search.prune = use_pruning;
  for (const auto& [u, v] : g.edges()) search.endpoints.emplace_back(u, v);
  search.survives.assign(universe, std::vector<char>(search.m, 0));
  search.needed.assign(universe, 0);
  int size_floor = std::max(0, n - 1);
  for (int c = 0; c < universe; ++c) {
    for (int e = 0; e < search.m; ++e) {
      const auto& [u, v] = g.edge(e);
      search.survives[c][e] = (g.color(u) != c && g.color(v) != c) ? 1 : 0;
    }
    if (survivor_count[c] > 0) {
      search.needed[c] = survivor_count[c] - 1;
    } else if (notion == CaNotion::ivca) {
      // Color covers every vertex: pairs need direct edges.
      size_floor = std::max(size_floor, n * (n - 1) / 2);
    }
  }
  if (!use_pruning) search.needed.assign(universe, 0);

  const bool internal = notion == CaNotion::ivca;
  search.accept = [&g, n, universe, internal,
                   &survivor_count](const std::vector<int>& chosen) {
    DisjointSetUnion whole(n);
    for (int e : chosen) whole.unite(g.edge(e).first, g.edge(e).second);
    if (whole.set_count() > 1) return false;
    for (int c = 0; c < universe; ++c) {
      if (survivor_count[c] == 0) {
        if (static_cast<int>(chosen.size()) < n * (n - 1) / 2) return false;
        continue;
      }
      DisjointSetUnion dsu(n);
      std::vector<char> attached(n, 0);
      for (int e : chosen) {
        const auto& [u, v] = g.edge(e);
        bool u_in = g.color(u) != c;
        bool v_in = g.color(v) != c;
        if (u_in && v_in) dsu.unite(u, v);
        if (u_in && !v_in) attached[v] = 1;
        if (v_in && !u_in) attached[u] = 1;
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
      if (components > 1) return false;
      if (internal) {
        for (int v = 0; v < n; ++v) {
          if (g.color(v) == c && !attached[v]) return false;
        }
      }
    }
    return true;
  };
  return run_search(search, size_floor);
}

namespace {

bool matroid_restriction_good(const ColoredMatroid& m,
                              const std::vector<int>& t, int rank_total) {
  if (subset_rank(m, t) != rank_total) return false;
  std::set<Color> used;
  for (int e : t) used.insert(m.color_of(e));
  for (Color c : used) {
    std::vector<int> rest;
    for (int e : t) {
      if (m.color_of(e) != c) rest.push_back(e);
    }
    if (subset_rank(m, rest) != rank_total) return false;
  }
  return true;
}

struct MatroidSearch {
  const ColoredMatroid* matroid = nullptr;
  int m = 0;
  int rank_total = 0;
  int universe = 0;
  std::vector<std::vector<int>> suffix_other;  // per color: later non-c elems
  long long candidates = 0;

  std::vector<int> chosen;
  std::vector<int> chosen_of_color;
  std::vector<int> chosen_other;
  std::vector<int> independent;

  bool find_of_size(int target, std::vector<int>& witness) {
    chosen.clear();
    chosen_of_color.assign(universe, 0);
    chosen_other.assign(universe, 0);
    independent.clear();
    if (step(0, target)) {
      witness = chosen;
      return true;
    }
    return false;
  }

  bool step(int idx, int remaining) {
    if (remaining == 0) {
      ++candidates;
      return static_cast<int>(independent.size()) == rank_total &&
             matroid_restriction_good(*matroid, chosen, rank_total);
    }
    if (m - idx < remaining) return false;
    if (static_cast<int>(independent.size()) + remaining < rank_total) {
      return false;
    }
    for (int c = 0; c < universe; ++c) {
      // Only colors already present in the selection constrain it.
      if (chosen_of_color[c] == 0) continue;
      int reachable =
          chosen_other[c] + std::min(suffix_other[c][idx], remaining);
      if (reachable < rank_total) return false;
    }
    Color color = matroid->color_of(idx);
    chosen.push_back(idx);
    ++chosen_of_color[color];
    for (int c = 0; c < universe; ++c) {
      if (c != color) ++chosen_other[c];
    }
    independent.push_back(idx);
    bool extended = matroid->independent(independent);
    if (!extended) independent.pop_back();
    if (step(idx + 1, remaining - 1)) return true;
    if (extended) independent.pop_back();
    for (int c = 0; c < universe; ++c) {
      if (c != color) --chosen_other[c];
    }
    --chosen_of_color[color];
    chosen.pop_back();
    return step(idx + 1, remaining);
  }
};

}  // namespace

ExactResult min_restriction_exact(const ColoredMatroid& m, int budget) {
  check_budget(m.ground_size(), budget, "ground set");
  if (auto bad = courteous_violation(m)) {
    throw precondition_error("matroid is not courteously colored", *bad);
  }
  MatroidSearch search;
  search.matroid = &m;
  search.m = m.ground_size();
  search.rank_total = total_rank(m);
  search.universe = 0;
  for (Color c : m.colors()) search.universe = std::max(search.universe, c + 1);
  search.universe = std::max(search.universe, 1);
  search.suffix_other.assign(search.universe,
                             std::vector<int>(search.m + 1, 0));
  for (int c = 0; c < search.universe; ++c) {
    for (int i = search.m - 1; i >= 0; --i) {
      search.suffix_other[c][i] =
          search.suffix_other[c][i + 1] + (m.color_of(i) != c ? 1 : 0);
    }
  }
  ExactResult result;
  for (int s = search.rank_total; s <= search.m; ++s) {
    if (search.find_of_size(s, result.witness)) {
      result.optimum_size = s;
      result.candidates_tested = search.candidates;
      return result;
    }
  }
  throw std::logic_error("exhaustive search found no solution");
}

bool LowerBoundReport::ok() const {
  if (bound_violations > 0) return false;
  return std::all_of(generator_checks.begin(), generator_checks.end(),
                     [](const auto& check) { return check.second; });
}

LowerBoundReport verify_lower_bound(CaNotion notion, int k, int n, int samples,
                                    unsigned long long seed) {
  LowerBoundReport report;
  report.bound = min_edges_bound(notion, k, n);
  std::mt19937_64 rng(seed);
  const int max_edges =
      notion == CaNotion::eca ? 16 : std::min(16, n * (n - 1) / 2);

  for (int i = 0; i < samples; ++i) {
    int optimum = 0;
    if (notion == CaNotion::eca) {
      EdgeColoredGraph g = sample_eca_instance(n, k, max_edges, rng);
      optimum = min_subgraph_exact(g, g.edge_count()).optimum_size;
    } else {
      VertexColoredGraph g = notion == CaNotion::vca
                                 ? sample_vca_instance(n, k, max_edges, rng)
                                 : sample_ivca_instance(n, k, max_edges, rng);
      optimum = min_subgraph_exact(g, notion, g.edge_count()).optimum_size;
    }
    ++report.samples_checked;
    if (optimum < report.bound) ++report.bound_violations;
  }

  auto check_generator = [&](const std::string& name, auto&& solve) {
    report.generator_checks.emplace_back(name, solve() == report.bound);
  };
  switch (notion) {
    case CaNotion::eca: {
      if (n - 1 >= k - 1) {
        EdgeColoredGraph g = gen_eca_min(k, n - 1);
        check_generator("eca_min", [&] {
          return min_subgraph_exact(g, g.edge_count()).optimum_size;
        });
      }
      if ((n - 1) % (k - 1) == 0) {
        EcaTightRatioInstance inst = gen_eca_tight_ratio(k, n);
        if (inst.graph.edge_count() <= 20) {
          check_generator("eca_tight_ratio", [&] {
            return min_subgraph_exact(inst.graph, inst.graph.edge_count())
                .optimum_size;
          });
        }
      }
      break;
    }
    case CaNotion::vca: {
      VertexColoredGraph g = gen_vca_min(k, n);
      check_generator("vca_min", [&] {
        return min_subgraph_exact(g, CaNotion::vca, g.edge_count())
            .optimum_size;
      });
      break;
    }
    case CaNotion::ivca: {
      if (k == 1 || n >= 2 * k + 1) {
        VertexColoredGraph g = gen_ivca_min(k, n);
        check_generator("ivca_min", [&] {
          return min_subgraph_exact(g, CaNotion::ivca, g.edge_count())
              .optimum_size;
        });
      }
      break;
    }
  }
  return report;
}

}  // namespace caconn
