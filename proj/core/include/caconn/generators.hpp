#pragma once

#include <vector>

#include "caconn/graph.hpp"
#include "caconn/sparsify.hpp"

namespace caconn {

// Deterministic generators for the extremal families: minimum-size instances,
// instances on which the sparsifiers hit their worst-case ratio under a
// shipped tie-break order, and deletion-minimal instances of maximum size.
// Every output uses exactly the declared number of colors.

// Edge-color-avoiding graph on r+1 vertices with r + ceil(r/(k-1)) edges, the
// minimum for rank r and exactly k colors. Path edges cycle through colors
// 0..k-2; color k-1 spans chords v_j v_min(j+k-1, r) for j = 0 mod k-1.
// Requires k >= 2 and r >= k-1. May contain one parallel pair at the end.
EdgeColoredGraph gen_eca_min(int k, int r);

struct EcaTightRatioInstance {
  EdgeColoredGraph graph;
  std::vector<int> optimum_certificate;      // k(n-1)/(k-1) edges
  std::vector<int> adversarial_certificate;  // 2(n-1) edges
  SparsifyOrder adversarial_order;  // drives eca_sparsify to the adversarial set
};

// Requires k >= 2, n >= k and (k-1) | (n-1). For k = 2 the two certificates
// coincide (the ratio bound 2(k-1)/k is 1 there).
EcaTightRatioInstance gen_eca_tight_ratio(int k, int n);

// Edge-color-avoiding, 2(n-1) edges, deletion-minimal: every adjacent pair
// carries two parallel edges colored j mod k and (j+1) mod k. Requires
// k >= 2, n >= k.
EdgeColoredGraph gen_eca_maximal(int k, int n);

// Vertex-color-avoiding with the minimum edge count: a path for k <= 2 (all
// one color, except the last vertex for k = 2), a cycle with colors
// min(j, k-1) for k >= 3. Requires n >= k, n >= 3 for the cycle case.
VertexColoredGraph gen_vca_min(int k, int n);

struct VcaTightRatioInstance {
  VertexColoredGraph graph;
  std::vector<int> optimum_certificate;      // n-1 edges (k=2) or n (k>=3)
  std::vector<int> adversarial_certificate;  // 2n-3 edges
  SparsifyOrder adversarial_order;
};

// Vertices colored j mod k. The optimum certificate is a Hamiltonian path
// derivative for k = 2 and a Hamiltonian cycle along which same-colored
// vertices are consecutive for k >= 3; the adversarial certificate is the
// w-path plus all distance-2 chords. Requires n >= 4 for k = 2 and
// n >= max(k, 4) for k >= 3.
VcaTightRatioInstance gen_vca_tight_ratio(int k, int n);

// Vertex-color-avoiding on three colors (j mod 3) with 2n-3 edges, a path
// plus all distance-2 chords; deletion-minimal. Requires n >= 4.
VertexColoredGraph gen_vca_maximal_k3(int n);

// Internally vertex-color-avoiding with the minimum edge count. k = 1 gives
// the complete graph (n >= 1); k >= 2 builds the ladder family for
// n = (2k-2)m + l + 3 and requires n >= 2k+1 (so m >= 1).
VertexColoredGraph gen_ivca_min(int k, int n);

struct IvcaTightRatioInstance {
  VertexColoredGraph graph;
  std::vector<int> optimum_certificate;      // the ladder edges
  std::vector<int> adversarial_certificate;  // 2n-3 edges
  SparsifyOrder adversarial_order;
};

// Ladder instance overlaid with a Hamiltonian ordering w whose adjacent
// vertices always differ in color, plus all distance-2 chords over w.
// Requires k >= 3, (2k-2) | (n-3) and n >= 4k-1. (For k = 2 no ordering with
// differently colored neighbors exists and the chord subgraph stops being
// internally color-avoiding, so k = 2 is rejected.)
IvcaTightRatioInstance gen_ivca_tight_ratio(int k, int n);

// Internally vertex-color-avoiding on two colors with 2n-3 edges: a star at
// v_0 (color 0) plus a path over the other vertices (color 1);
// deletion-minimal. Requires n >= 3.
VertexColoredGraph gen_ivca_maximal_k2(int n);

}  // namespace caconn
