#include "caconn/sampling.hpp"

#include <algorithm>
#include <stdexcept>

#include "caconn/sparsify.hpp"

namespace caconn {

namespace {

constexpr int kMaxAttempts = 20000;

std::vector<Color> canonical_colors(int count, int k, std::mt19937_64& rng) {
  std::vector<Color> colors(count);
  for (int i = 0; i < count; ++i) {
    colors[i] = i < k ? i : static_cast<Color>(rng() % k);
  }
  std::shuffle(colors.begin(), colors.end(), rng);
  return colors;
}

}  // namespace

EdgeColoredGraph random_edge_colored_graph(int n, int m, int k,
                                           std::mt19937_64& rng) {
  if (n < 2 || k < 1 || m < k) {
    throw std::invalid_argument("need n >= 2 and m >= k >= 1");
  }
  std::vector<Color> colors = canonical_colors(m, k, rng);
  std::vector<Edge> edges(m);
  for (int i = 0; i < m; ++i) {
    int u = static_cast<int>(rng() % n);
    int v = static_cast<int>(rng() % (n - 1));
    if (v >= u) ++v;
    edges[i] = {u, v, colors[i]};
  }
  return EdgeColoredGraph(n, std::move(edges), k);
}

VertexColoredGraph random_vertex_colored_graph(int n, int m, int k,
                                               std::mt19937_64& rng) {
  if (n < 1 || k < 1 || n < k) {
    throw std::invalid_argument("need n >= k >= 1");
  }
  std::vector<std::pair<int, int>> all_pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
  }
  if (m > static_cast<int>(all_pairs.size())) {
    throw std::invalid_argument("more edges than vertex pairs");
  }
  std::shuffle(all_pairs.begin(), all_pairs.end(), rng);
  all_pairs.resize(m);
  std::sort(all_pairs.begin(), all_pairs.end());
  return VertexColoredGraph(canonical_colors(n, k, rng), std::move(all_pairs),
                            k);
}

namespace {

int draw_edge_count(int lo, int hi, std::mt19937_64& rng) {
  if (lo >= hi) return hi;
  return lo + static_cast<int>(rng() % (hi - lo + 1));
}

}  // namespace

EdgeColoredGraph sample_eca_instance(int n, int k, int max_edges,
                                     std::mt19937_64& rng) {
  // No valid instance exists below the closed-form bound, so never draw
  // fewer edges than that.
  int lo = std::max(std::max(n, k),
                    static_cast<int>(min_edges_bound(CaNotion::eca, k, n)));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    int m = draw_edge_count(lo, std::max(lo, max_edges), rng);
    EdgeColoredGraph g = random_edge_colored_graph(n, m, k, rng);
    if (is_eca_connected(g).holds) return g;
  }
  throw std::runtime_error("no edge-color-avoiding instance found");
}

VertexColoredGraph sample_vca_instance(int n, int k, int max_edges,
                                       std::mt19937_64& rng) {
  int pairs = n * (n - 1) / 2;
  int hi = std::min(max_edges, pairs);
  int lo = std::min(
      hi, static_cast<int>(min_edges_bound(CaNotion::vca, k, n)));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    int m = draw_edge_count(lo, hi, rng);
    VertexColoredGraph g = random_vertex_colored_graph(n, m, k, rng);
    if (is_vca_connected(g).holds) return g;
  }
  throw std::runtime_error("no vertex-color-avoiding instance found");
}

VertexColoredGraph sample_ivca_instance(int n, int k, int max_edges,
                                        std::mt19937_64& rng) {
  int pairs = n * (n - 1) / 2;
  int hi = std::min(max_edges, pairs);
  int lo = std::min(
      hi, static_cast<int>(min_edges_bound(CaNotion::ivca, k, n)));
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    int m = draw_edge_count(lo, hi, rng);
    VertexColoredGraph g = random_vertex_colored_graph(n, m, k, rng);
    if (is_ivca_connected(g).holds) return g;
  }
  throw std::runtime_error("no internally color-avoiding instance found");
}

}  // namespace caconn
