#pragma once

#include <optional>
#include <vector>

#include "caconn/graph.hpp"

namespace caconn {

enum class CaNotion { eca, vca, ivca };

const char* to_string(CaNotion notion);

// A (color, vertex pair) certifying that a connectivity check failed: the
// named pair is not (internally) color-avoiding connected for that color.
// Always the lexicographically smallest such (color, u, v).
struct CaWitness {
  Color color = -1;
  int u = -1;
  int v = -1;
};

struct CaVerdict {
  bool holds = false;
  std::optional<CaWitness> witness;
};

// Edge-color-avoiding connectivity: deleting the edges of any single color
// leaves the graph connected.
CaVerdict is_eca_connected(const EdgeColoredGraph& g);

// Vertex-color-avoiding connectivity: every pair u, v has a path, and for
// every color c either an endpoint has color c or some u-v path avoids color
// c entirely. Checked as: g connected and, per color c, the subgraph induced
// on the non-c vertices connected.
CaVerdict is_vca_connected(const VertexColoredGraph& g);

// Internally vertex-color-avoiding connectivity: every pair has, per color c,
// a path whose internal vertices all avoid c. Checked per color c as:
//  (a) the subgraph induced on the non-c vertices is connected,
//  (b) if non-c vertices exist, every c-colored vertex has a non-c neighbor,
//  (c) if color c covers every vertex, the graph must be complete.
CaVerdict is_ivca_connected(const VertexColoredGraph& g);

// Per-pair, per-color checks evaluating the definitions literally by BFS in
// the restricted graph. Used for witnesses and by the definitional oracles.
bool pair_edge_color_avoiding(const EdgeColoredGraph& g, int u, int v, Color c);
bool pair_vertex_color_avoiding(const VertexColoredGraph& g, int u, int v,
                                Color c);
bool pair_internally_color_avoiding(const VertexColoredGraph& g, int u, int v,
                                    Color c);

// Literal-definition oracles: quadratic in vertex pairs, intended for small
// graphs. Inputs with more than vertex_cap vertices are rejected.
inline constexpr int kDefinitionalVertexCap = 12;

CaVerdict is_vca_connected_definitional(
    const VertexColoredGraph& g, int vertex_cap = kDefinitionalVertexCap);
CaVerdict is_ivca_connected_definitional(
    const VertexColoredGraph& g, int vertex_cap = kDefinitionalVertexCap);

struct CutComponent {
  std::vector<int> vertices;
  // Every vertex of the component has the removed vertex's color.
  bool monochromatic_in_cut_color = false;
};

// Components of G - v, ordered by smallest member. In a vertex-color-avoiding
// connected graph, at most one component may be non-monochromatic in v's
// color when v is a cut-vertex.
std::vector<CutComponent> cut_vertex_color_components(
    const VertexColoredGraph& g, int v);

// Connected and bridge-free (parallel edges never form a bridge). A single
// vertex qualifies.
bool is_two_edge_connected(const EdgeColoredGraph& g);

// More than two vertices, connected, and free of cut vertices.
bool is_two_vertex_connected(const VertexColoredGraph& g);

}  // namespace caconn
