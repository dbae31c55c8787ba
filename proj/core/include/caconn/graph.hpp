#pragma once

#include <utility>
#include <vector>

namespace caconn {

// Colors are dense non-negative integers. A graph declares a color count k;
// ids >= k are representable but flagged by is_canonically_colored.
using Color = int;

struct Edge {
  int u = 0;
  int v = 0;
  Color color = 0;
};

bool operator==(const Edge& a, const Edge& b);

// Undirected multigraph with one color per edge. Parallel edges are allowed,
// self-loops are not. Immutable after construction.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  EdgeColoredGraph(int vertex_count, std::vector<Edge> edges, int color_count);

  int vertex_count() const { return n_; }
  int color_count() const { return k_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int i) const { return edges_[i]; }

 private:
  int n_ = 0;
  int k_ = 0;
  std::vector<Edge> edges_;
};

bool operator==(const EdgeColoredGraph& a, const EdgeColoredGraph& b);

// Simple undirected graph with one color per vertex.
class VertexColoredGraph {
 public:
  VertexColoredGraph() = default;
  VertexColoredGraph(std::vector<Color> colors,
                     std::vector<std::pair<int, int>> edges, int color_count);

  int vertex_count() const { return static_cast<int>(colors_.size()); }
  int color_count() const { return k_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  const std::pair<int, int>& edge(int i) const { return edges_[i]; }
  Color color(int v) const { return colors_[v]; }
  const std::vector<Color>& colors() const { return colors_; }

 private:
  int k_ = 0;
  std::vector<Color> colors_;
  std::vector<std::pair<int, int>> edges_;
};

bool operator==(const VertexColoredGraph& a, const VertexColoredGraph& b);

// Union-find with path compression and union by size. Single-writer: find()
// mutates internal state, so do not share one instance across threads.
class DisjointSetUnion {
 public:
  explicit DisjointSetUnion(int n);

  int find(int x);
  // Merges the sets of a and b; returns false if they were already one set.
  bool unite(int a, int b);
  bool same(int a, int b) { return find(a) == find(b); }
  int set_count() const { return sets_; }
  int size() const { return static_cast<int>(parent_.size()); }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int sets_ = 0;
};

// Disjoint vertex sets covering a universe.
struct Partition {
  std::vector<std::vector<int>> parts;
};

bool is_partition_of(const Partition& p, int n);

// The empty graph counts as connected; so does a single vertex.
bool is_connected(int n, const std::vector<std::pair<int, int>>& edges);
bool is_connected(const EdgeColoredGraph& g);
bool is_connected(const VertexColoredGraph& g);

// Components ordered by smallest member, members ascending.
Partition connected_components(int n,
                               const std::vector<std::pair<int, int>>& edges);

// G with all edges of color c removed. Removing an unused color is a no-op.
EdgeColoredGraph delete_color_edges(const EdgeColoredGraph& g, Color c);

struct VertexDeletionResult {
  VertexColoredGraph graph;
  std::vector<int> old_to_new;  // -1 for deleted vertices
  std::vector<int> new_to_old;
};

// Induced subgraph on the vertices whose color differs from c.
VertexDeletionResult delete_color_vertices(const VertexColoredGraph& g,
                                           Color c);

struct ContractionResult {
  EdgeColoredGraph graph;
  // For every contracted edge, the index of one originating edge of g (the
  // first one in edge order with that endpoint pair and color).
  std::vector<int> edge_origin;
};

// Contracts each part to a single vertex. Between two distinct parts there is
// one edge per (pair, color) that occurs in g; intra-part edges vanish.
// Throws std::invalid_argument if w does not partition g's vertex set.
ContractionResult contract_partition(const EdgeColoredGraph& g,
                                     const Partition& w);

// True iff every color in [0, k) occurs and no color id >= k occurs.
bool is_canonically_colored(const EdgeColoredGraph& g);
bool is_canonically_colored(const VertexColoredGraph& g);

// Smallest id not below the declared count that still covers every used
// color; checkers quantify colors over [0, color_universe()).
int color_universe(const EdgeColoredGraph& g);
int color_universe(const VertexColoredGraph& g);

// Spanning subgraph on the same vertex set restricted to the given edges.
EdgeColoredGraph edge_subgraph(const EdgeColoredGraph& g,
                               const std::vector<int>& edge_ids);
VertexColoredGraph edge_subgraph(const VertexColoredGraph& g,
                                 const std::vector<int>& edge_ids);

}  // namespace caconn
