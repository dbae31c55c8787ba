#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "caconn/graph.hpp"
#include "caconn/matroid.hpp"
#include "caconn/sparsify.hpp"

namespace caconn {

// Text formats, whitespace separated, '#' starts a comment to end of line:
//
//   ECG <n> <m> <k>      edge-colored graph, then m lines "u v c"
//   VCG <n> <m> <k>      vertex-colored graph, then n color ids, then m
//                        lines "u v"
//   GRAPHIC              graphic matroid: an ECG body follows
//   UNIFORM <n> <ku> <k> uniform matroid, then n element color ids
//   ORDER                tie-break orders: sections "edges <m>", "vertices
//                        <n>", "colors <k>", each followed by a permutation
//
// Parse failures throw parse_error.

EdgeColoredGraph read_edge_colored(std::istream& in);
VertexColoredGraph read_vertex_colored(std::istream& in);

void write_edge_colored(std::ostream& out, const EdgeColoredGraph& g);
void write_vertex_colored(std::ostream& out, const VertexColoredGraph& g);

// Either graph format, keyed on the header token.
std::variant<EdgeColoredGraph, VertexColoredGraph> read_any_graph(
    std::istream& in);

struct MatroidInput {
  enum class Kind { graphic, uniform };
  Kind kind = Kind::graphic;
  std::optional<EdgeColoredGraph> graph;  // graphic
  int uniform_threshold = 0;              // uniform
  int declared_colors = 0;
  std::vector<Color> element_colors;      // uniform

  ColoredMatroid to_matroid() const;
};

MatroidInput read_matroid(std::istream& in);
void write_matroid(std::ostream& out, const MatroidInput& input);

SparsifyOrder read_order(std::istream& in);
void write_order(std::ostream& out, const SparsifyOrder& order);

// Graphviz rendering with colors drawn from a fixed 12-entry palette,
// cycling on the color id.
std::string to_dot(const EdgeColoredGraph& g);
std::string to_dot(const VertexColoredGraph& g);

// File helpers.
EdgeColoredGraph load_edge_colored(const std::string& path);
VertexColoredGraph load_vertex_colored(const std::string& path);
MatroidInput load_matroid(const std::string& path);
SparsifyOrder load_order(const std::string& path);
void save_text(const std::string& path, const std::string& contents);

}  // namespace caconn
