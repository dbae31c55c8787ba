#pragma once

#include <random>

#include "caconn/connectivity.hpp"
#include "caconn/graph.hpp"

namespace caconn {

// Seeded random instances for property tests and bound verification. All
// outputs are canonically colored (every color in [0, k) used), which needs
// m >= k for edge-colored and n >= k for vertex-colored graphs.

EdgeColoredGraph random_edge_colored_graph(int n, int m, int k,
                                           std::mt19937_64& rng);

VertexColoredGraph random_vertex_colored_graph(int n, int m, int k,
                                               std::mt19937_64& rng);

// Rejection-sample a graph satisfying the notion, with at most max_edges
// edges. Throws std::runtime_error when no instance shows up within the
// attempt budget (pick denser parameters in that case).
EdgeColoredGraph sample_eca_instance(int n, int k, int max_edges,
                                     std::mt19937_64& rng);
VertexColoredGraph sample_vca_instance(int n, int k, int max_edges,
                                       std::mt19937_64& rng);
VertexColoredGraph sample_ivca_instance(int n, int k, int max_edges,
                                        std::mt19937_64& rng);

}  // namespace caconn
