#pragma once

#include <string>
#include <vector>

#include "caconn/connectivity.hpp"
#include "caconn/graph.hpp"

namespace caconn {

// Tie-break permutations for the sparsifiers. Empty vectors mean ascending
// order. edge_order drives spanning-tree scans and repair-edge picks,
// vertex_order the neighbor phase of the internal variant, color_order the
// repair loop.
struct SparsifyOrder {
  std::vector<int> edge_order;
  std::vector<int> vertex_order;
  std::vector<int> color_order;

  static SparsifyOrder descending(int edge_count, int vertex_count);
  static SparsifyOrder shuffled(int edge_count, int vertex_count,
                                unsigned long long seed);
};

enum class EdgePhase {
  phase1_tree,      // spanning-tree scan
  phase1_neighbor,  // edge to a differently colored neighbor
  phase2_tree,      // completion of the neighbor forest to a spanning tree
  phase2_repair,    // per-color reconnection
  phase3_repair,    // per-color reconnection after a neighbor phase
  whole_graph,      // single-color input returned entire
};

std::string to_string(EdgePhase phase);

struct SelectedEdge {
  int edge = -1;
  EdgePhase phase = EdgePhase::phase1_tree;
  Color repair_color = -1;  // set for repair phases
};

struct SparsifyResult {
  std::vector<int> selected;             // ascending edge indices
  std::vector<SelectedEdge> provenance;  // in selection order

  int phase_count(EdgePhase phase) const;
};

// Spanning tree, then per color a spanning tree of the contraction of the
// selection's color-avoiding components inside the color-avoiding input.
// Output is edge-color-avoiding connected with at most 2(n-1) edges. Rejects
// inputs that are not edge-color-avoiding connected, citing a witness.
SparsifyResult eca_sparsify(const EdgeColoredGraph& g,
                            const SparsifyOrder& order = {});

// Same scheme over vertex deletions; at most 2n-3 edges for two or more
// colors. Rejects non-vertex-color-avoiding inputs.
SparsifyResult vca_sparsify(const VertexColoredGraph& g,
                            const SparsifyOrder& order = {});

// For a single used color returns the graph entire (it must be complete).
// Otherwise: every vertex gets an edge to a differently colored neighbor,
// the forest is completed to a spanning tree, then per-color repairs as in
// vca_sparsify. At most 2n-3 edges. Rejects non-internally-vertex-color-
// avoiding inputs.
SparsifyResult ivca_sparsify(const VertexColoredGraph& g,
                             const SparsifyOrder& order = {});

// Greedily drops edges whose removal keeps the property; the result is
// deletion-minimal. Empty order means descending edge index.
std::vector<int> prune_subgraph(const EdgeColoredGraph& g,
                                const std::vector<int>& selected,
                                const std::vector<int>& edge_order = {});
std::vector<int> prune_subgraph(const VertexColoredGraph& g,
                                const std::vector<int>& selected,
                                CaNotion notion,
                                const std::vector<int>& edge_order = {});

// Exact minimum for two colors: a spanning tree inside each color class plus
// one cross-color edge, n-1 edges in total. Requires a vertex-color-avoiding
// input colored with exactly two colors, both used.
std::vector<int> vca_optimal_k2(const VertexColoredGraph& g);

// Minimum edge count of a color-avoiding connected graph on vertex_count
// vertices colored with exactly color_count colors. Rejects infeasible
// parameter pairs.
long long min_edges_bound(CaNotion notion, int color_count, int vertex_count);

}  // namespace caconn
