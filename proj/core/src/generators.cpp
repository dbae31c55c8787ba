#include "caconn/generators.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

namespace caconn {

namespace {

void require(bool ok, const std::string& message) {
  if (!ok) throw std::invalid_argument(message);
}

// Index of the edge with the given endpoints, appending it when new.
int intern_edge(std::vector<std::pair<int, int>>& edges,
                std::map<std::pair<int, int>, int>& index, int u, int v) {
  auto key = std::minmax(u, v);
  auto it = index.find(key);
  if (it != index.end()) return it->second;
  int id = static_cast<int>(edges.size());
  edges.emplace_back(u, v);
  index.emplace(key, id);
  return id;
}

}  // namespace

EdgeColoredGraph gen_eca_min(int k, int r) {
  require(k >= 2, "need at least 2 colors");
  require(r >= k - 1, "need rank at least k-1");
  std::vector<Edge> edges;
  for (int j = 0; j < r; ++j) {
    edges.push_back({j, j + 1, j % (k - 1)});
  }
  for (int j = 0; j < r; j += k - 1) {
    edges.push_back({j, std::min(j + k - 1, r), k - 1});
  }
  return EdgeColoredGraph(r + 1, std::move(edges), k);
}

EcaTightRatioInstance gen_eca_tight_ratio(int k, int n) {
  require(k >= 2, "need at least 2 colors");
  require(n >= k, "need at least k vertices");
  require((n - 1) % (k - 1) == 0, "(k-1) must divide (n-1)");

  EcaTightRatioInstance result;
  std::vector<Edge> edges;
  std::vector<int> path_ids, chord_ids, parallel_ids;
  for (int j = 0; j < n - 1; ++j) {
    path_ids.push_back(static_cast<int>(edges.size()));
    edges.push_back({j, j + 1, j % (k - 1)});
  }
  for (int j = 0; j + k - 1 <= n - 1; j += k - 1) {
    chord_ids.push_back(static_cast<int>(edges.size()));
    edges.push_back({j, j + k - 1, k - 1});
  }
  for (int j = 0; j < n - 1; ++j) {
    parallel_ids.push_back(static_cast<int>(edges.size()));
    edges.push_back({j, j + 1, (j + 1) % (k - 1)});
  }

  result.optimum_certificate = path_ids;
  result.optimum_certificate.insert(result.optimum_certificate.end(),
                                    chord_ids.begin(), chord_ids.end());
  std::sort(result.optimum_certificate.begin(),
            result.optimum_certificate.end());

  if (k == 2) {
    // The parallel family repeats color 0, so the classic adversarial set is
    // not color-avoiding; with ratio bound 1 the optimum doubles as the
    // worst case.
    result.adversarial_certificate = result.optimum_certificate;
  } else {
    result.adversarial_certificate = path_ids;
    result.adversarial_certificate.insert(result.adversarial_certificate.end(),
                                          parallel_ids.begin(),
                                          parallel_ids.end());
    std::sort(result.adversarial_certificate.begin(),
              result.adversarial_certificate.end());
  }

  result.adversarial_order.edge_order = path_ids;
  result.adversarial_order.edge_order.insert(
      result.adversarial_order.edge_order.end(), parallel_ids.begin(),
      parallel_ids.end());
  result.adversarial_order.edge_order.insert(
      result.adversarial_order.edge_order.end(), chord_ids.begin(),
      chord_ids.end());

  result.graph = EdgeColoredGraph(n, std::move(edges), k);
  return result;
}

EdgeColoredGraph gen_eca_maximal(int k, int n) {
  require(k >= 2, "need at least 2 colors");
  require(n >= k, "need at least k vertices");
  std::vector<Edge> edges;
  for (int j = 0; j < n - 1; ++j) {
    edges.push_back({j, j + 1, j % k});
    edges.push_back({j, j + 1, (j + 1) % k});
  }
  return EdgeColoredGraph(n, std::move(edges), k);
}

VertexColoredGraph gen_vca_min(int k, int n) {
  require(k >= 1, "need at least 1 color");
  require(n >= k, "need at least k vertices");
  if (k <= 2) {
    std::vector<Color> colors(n, 0);
    if (k == 2) colors[n - 1] = 1;
    std::vector<std::pair<int, int>> edges;
    for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
    return VertexColoredGraph(std::move(colors), std::move(edges), k);
  }
  require(n >= 3, "the cycle construction needs at least 3 vertices");
  std::vector<Color> colors(n);
  for (int j = 0; j < n; ++j) colors[j] = std::min(j, k - 1);
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
  edges.emplace_back(n - 1, 0);
  return VertexColoredGraph(std::move(colors), std::move(edges), k);
}

VcaTightRatioInstance gen_vca_tight_ratio(int k, int n) {
  require(k >= 2, "need at least 2 colors");
  require(n >= std::max(k, 4), "too few vertices");

  VcaTightRatioInstance result;
  std::vector<Color> colors(n);
  for (int j = 0; j < n; ++j) colors[j] = j % k;

  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> index;

  if (k == 2) {
    result.optimum_certificate.push_back(intern_edge(edges, index, 0, 1));
    for (int j = 0; j + 2 < n; ++j) {
      result.optimum_certificate.push_back(intern_edge(edges, index, j, j + 2));
    }
  } else {
    // Hamiltonian cycle visiting the color classes 0..k-1 in blocks.
    std::vector<int> cycle;
    for (int c = 0; c < k; ++c) {
      for (int j = c; j < n; j += k) cycle.push_back(j);
    }
    for (int t = 0; t < n; ++t) {
      result.optimum_certificate.push_back(
          intern_edge(edges, index, cycle[t], cycle[(t + 1) % n]));
    }
  }
  std::sort(result.optimum_certificate.begin(),
            result.optimum_certificate.end());

  std::vector<int> path_ids, chord_ids;
  for (int j = 0; j + 1 < n; ++j) {
    path_ids.push_back(intern_edge(edges, index, j, j + 1));
  }
  for (int j = 0; j + 2 < n; ++j) {
    chord_ids.push_back(intern_edge(edges, index, j, j + 2));
  }

  result.adversarial_certificate = path_ids;
  result.adversarial_certificate.insert(result.adversarial_certificate.end(),
                                        chord_ids.begin(), chord_ids.end());
  std::sort(result.adversarial_certificate.begin(),
            result.adversarial_certificate.end());

  auto& order = result.adversarial_order.edge_order;
  order = path_ids;
  order.insert(order.end(), chord_ids.begin(), chord_ids.end());
  std::vector<char> placed(edges.size(), 0);
  for (int i : order) placed[i] = 1;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!placed[i]) order.push_back(i);
  }

  result.graph = VertexColoredGraph(std::move(colors), std::move(edges), k);
  return result;
}

VertexColoredGraph gen_vca_maximal_k3(int n) {
  require(n >= 4, "need at least 4 vertices");
  std::vector<Color> colors(n);
  for (int j = 0; j < n; ++j) colors[j] = j % 3;
  std::vector<std::pair<int, int>> edges;
  for (int j = 0; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
  for (int j = 0; j + 2 < n; ++j) edges.emplace_back(j, j + 2);
  return VertexColoredGraph(std::move(colors), std::move(edges), 3);
}

namespace {

// The ladder family behind the internally color-avoiding minimum: 2k-2 rows
// whose row 1 holds color 0, rows 2i and 2i+1 hold color i, and row 2k-2
// holds color k-1, with n = (2k-2)m + ell + 3.
struct Ladder {
  int k = 0;
  int m = 0;
  int ell = 0;
  int rows = 0;
  std::vector<int> row_offset;  // rows are 1-based
  std::vector<int> width;
  std::vector<Color> colors;
  std::vector<std::pair<int, int>> edges;

  int id(int i, int j) const { return row_offset[i] + (j - 1); }
};

Ladder build_ladder(int k, int n) {
  Ladder ladder;
  ladder.k = k;
  ladder.rows = 2 * k - 2;
  ladder.ell = (n - 3) % ladder.rows;
  ladder.m = (n - 3 - ladder.ell) / ladder.rows;

  ladder.width.assign(ladder.rows + 1, 0);
  for (int i = 1; i <= ladder.rows; ++i) {
    if (i == 1) {
      ladder.width[i] = ladder.m + 2;
    } else if (i == ladder.rows) {
      ladder.width[i] = ladder.ell == 0 ? ladder.m + 1 : ladder.m + 2;
    } else if (i <= ladder.ell) {
      ladder.width[i] = ladder.m + 1;
    } else {
      ladder.width[i] = ladder.m;
    }
  }
  ladder.row_offset.assign(ladder.rows + 1, 0);
  for (int i = 1; i <= ladder.rows; ++i) {
    ladder.row_offset[i] = i == 1 ? 0 : ladder.row_offset[i - 1] + ladder.width[i - 1];
  }

  ladder.colors.assign(n, 0);
  for (int i = 1; i <= ladder.rows; ++i) {
    Color c = i == 1 ? 0 : (i == ladder.rows ? k - 1 : i / 2);
    for (int j = 1; j <= ladder.width[i]; ++j) ladder.colors[ladder.id(i, j)] = c;
  }

  const int m = ladder.m;
  const int rows = ladder.rows;
  auto add = [&](int a, int b) { ladder.edges.emplace_back(a, b); };
  for (int j = 1; j <= m + 1; ++j) add(ladder.id(1, j), ladder.id(1, j + 1));
  const int bottom_path = ladder.ell == 0 ? m : m + 1;
  for (int j = 1; j <= bottom_path; ++j) {
    add(ladder.id(rows, j), ladder.id(rows, j + 1));
  }
  for (int i = 1; i < rows; ++i) {
    for (int j = 1; j <= m; ++j) add(ladder.id(i, j), ladder.id(i + 1, j));
  }
  if (ladder.ell == 0) {
    add(ladder.id(1, m + 1), ladder.id(rows, m + 1));
    add(ladder.id(1, m + 2), ladder.id(rows, m + 1));
  } else {
    for (int i = 1; i < ladder.ell; ++i) {
      add(ladder.id(i, m + 1), ladder.id(i + 1, m + 1));
    }
    add(ladder.id(ladder.ell, m + 1), ladder.id(rows, m + 1));
    add(ladder.id(1, m + 2), ladder.id(rows, m + 2));
  }
  return ladder;
}

}  // namespace

VertexColoredGraph gen_ivca_min(int k, int n) {
  require(k >= 1, "need at least 1 color");
  if (k == 1) {
    require(n >= 1, "need at least 1 vertex");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    }
    return VertexColoredGraph(std::vector<Color>(n, 0), std::move(edges), 1);
  }
  require(n >= 2 * k + 1, "the ladder construction needs n >= 2k+1");
  Ladder ladder = build_ladder(k, n);
  return VertexColoredGraph(std::move(ladder.colors), std::move(ladder.edges),
                            k);
}

IvcaTightRatioInstance gen_ivca_tight_ratio(int k, int n) {
  require(k >= 3,
          "the chord overlay needs k >= 3; for k = 2 no vertex ordering with "
          "differently colored neighbors exists");
  require(n >= 4 * k - 1, "need n >= 4k-1");
  require((n - 3) % (2 * k - 2) == 0, "(2k-2) must divide (n-3)");

  Ladder ladder = build_ladder(k, n);
  const int m = ladder.m;
  const int rows = ladder.rows;

  // Hamiltonian ordering with differently colored neighbors.
  std::vector<int> w(n, -1);
  for (int j = 0; j < m; ++j) {
    w[2 * j * (k - 1)] = ladder.id(1, j + 1);
    for (int i = 1; i <= k - 2; ++i) {
      w[i + 2 * j * (k - 1)] = ladder.id(2 * i, j + 1);
    }
    w[(2 * j + 1) * (k - 1)] = ladder.id(rows, j + 1);
  }
  for (int j = 0; j + 1 < m; ++j) {
    for (int i = 1; i <= k - 2; ++i) {
      w[i + (2 * j + 1) * (k - 1)] = ladder.id(2 * i + 1, j + 1);
    }
  }
  w[(2 * m - 1) * (k - 1) + 1] = ladder.id(1, m + 2);
  for (int i = 1; i <= k - 2; ++i) {
    w[i + (2 * m - 1) * (k - 1) + 1] = ladder.id(2 * i + 1, m);
  }
  w[2 * m * (k - 1) + 1] = ladder.id(1, m + 1);
  w[2 * m * (k - 1) + 2] = ladder.id(rows, m + 1);

  {
    std::vector<char> seen(n, 0);
    for (int v : w) {
      if (v < 0 || v >= n || seen[v]) {
        throw std::logic_error("vertex ordering is not a permutation");
      }
      seen[v] = 1;
    }
    for (int t = 0; t + 1 < n; ++t) {
      if (ladder.colors[w[t]] == ladder.colors[w[t + 1]]) {
        throw std::logic_error("adjacent ordering vertices share a color");
      }
    }
  }

  IvcaTightRatioInstance result;
  std::vector<std::pair<int, int>> edges;
  std::map<std::pair<int, int>, int> index;
  for (const auto& [a, b] : ladder.edges) intern_edge(edges, index, a, b);
  result.optimum_certificate.resize(edges.size());
  std::iota(result.optimum_certificate.begin(),
            result.optimum_certificate.end(), 0);

  std::vector<int> path_ids, chord_ids;
  for (int t = 0; t + 1 < n; ++t) {
    path_ids.push_back(intern_edge(edges, index, w[t], w[t + 1]));
  }
  for (int t = 0; t + 2 < n; ++t) {
    chord_ids.push_back(intern_edge(edges, index, w[t], w[t + 2]));
  }

  result.adversarial_certificate = path_ids;
  result.adversarial_certificate.insert(result.adversarial_certificate.end(),
                                        chord_ids.begin(), chord_ids.end());
  std::sort(result.adversarial_certificate.begin(),
            result.adversarial_certificate.end());

  auto& order = result.adversarial_order.edge_order;
  order = path_ids;
  order.insert(order.end(), chord_ids.begin(), chord_ids.end());
  std::vector<char> placed(edges.size(), 0);
  for (int i : order) placed[i] = 1;
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    if (!placed[i]) order.push_back(i);
  }
  result.adversarial_order.vertex_order = w;

  result.graph =
      VertexColoredGraph(std::move(ladder.colors), std::move(edges), k);
  return result;
}

VertexColoredGraph gen_ivca_maximal_k2(int n) {
  require(n >= 3, "need at least 3 vertices");
  std::vector<Color> colors(n, 1);
  colors[0] = 0;
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j) edges.emplace_back(0, j);
  for (int j = 1; j + 1 < n; ++j) edges.emplace_back(j, j + 1);
  return VertexColoredGraph(std::move(colors), std::move(edges), 2);
}

}  // namespace caconn
