#include "caconn/io.hpp"

#include <fstream>
#include <sstream>

#include "caconn/errors.hpp"

namespace caconn {

namespace {

// Whitespace tokenizer with '#' line comments.
class Tokens {
 public:
  explicit Tokens(std::istream& in) : in_(in) {}

  std::string next(const char* expected) {
    std::string token;
    while (in_ >> token) {
      if (token[0] == '#') {
        std::string rest;
        std::getline(in_, rest);
        continue;
      }
      return token;
    }
    throw parse_error(std::string("unexpected end of input, expected ") +
                      expected);
  }

  int next_int(const char* what) {
    std::string token = next(what);
    size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw parse_error(std::string("expected an integer for ") + what +
                        ", got '" + token + "'");
    }
    if (used != token.size()) {
      throw parse_error(std::string("trailing characters in ") + what +
                        " '" + token + "'");
    }
    return value;
  }

  std::optional<std::string> try_next() {
    std::string token;
    while (in_ >> token) {
      if (token[0] == '#') {
        std::string rest;
        std::getline(in_, rest);
        continue;
      }
      return token;
    }
    return std::nullopt;
  }

 private:
  std::istream& in_;
};

EdgeColoredGraph read_edge_colored_body(Tokens& tokens) {
  int n = tokens.next_int("vertex count");
  int m = tokens.next_int("edge count");
  int k = tokens.next_int("color count");
  if (n < 0 || m < 0 || k < 0) throw parse_error("negative header field");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = tokens.next_int("edge endpoint");
    int v = tokens.next_int("edge endpoint");
    int c = tokens.next_int("edge color");
    edges.push_back({u, v, c});
  }
  try {
    return EdgeColoredGraph(n, std::move(edges), k);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

VertexColoredGraph read_vertex_colored_body(Tokens& tokens) {
  int n = tokens.next_int("vertex count");
  int m = tokens.next_int("edge count");
  int k = tokens.next_int("color count");
  if (n < 0 || m < 0 || k < 0) throw parse_error("negative header field");
  std::vector<Color> colors(n);
  for (int i = 0; i < n; ++i) colors[i] = tokens.next_int("vertex color");
  std::vector<std::pair<int, int>> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u = tokens.next_int("edge endpoint");
    int v = tokens.next_int("edge endpoint");
    edges.emplace_back(u, v);
  }
  try {
    return VertexColoredGraph(std::move(colors), std::move(edges), k);
  } catch (const std::invalid_argument& e) {
    throw parse_error(e.what());
  }
}

void expect_header(Tokens& tokens, const std::string& want) {
  std::string got = tokens.next(want.c_str());
  if (got != want) {
    throw parse_error("expected header '" + want + "', got '" + got + "'");
  }
}

}  // namespace

EdgeColoredGraph read_edge_colored(std::istream& in) {
  Tokens tokens(in);
  expect_header(tokens, "ECG");
  return read_edge_colored_body(tokens);
}

VertexColoredGraph read_vertex_colored(std::istream& in) {
  Tokens tokens(in);
  expect_header(tokens, "VCG");
  return read_vertex_colored_body(tokens);
}

std::variant<EdgeColoredGraph, VertexColoredGraph> read_any_graph(
    std::istream& in) {
  Tokens tokens(in);
  std::string header = tokens.next("ECG or VCG header");
  if (header == "ECG") return read_edge_colored_body(tokens);
  if (header == "VCG") return read_vertex_colored_body(tokens);
  throw parse_error("expected header 'ECG' or 'VCG', got '" + header + "'");
}

void write_edge_colored(std::ostream& out, const EdgeColoredGraph& g) {
  out << "ECG " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << g.color_count() << '\n';
  for (const Edge& e : g.edges()) {
    out << e.u << ' ' << e.v << ' ' << e.color << '\n';
  }
}

void write_vertex_colored(std::ostream& out, const VertexColoredGraph& g) {
  out << "VCG " << g.vertex_count() << ' ' << g.edge_count() << ' '
      << g.color_count() << '\n';
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << g.color(v) << (v + 1 == g.vertex_count() ? '\n' : ' ');
  }
  if (g.vertex_count() == 0) out << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

ColoredMatroid MatroidInput::to_matroid() const {
  if (kind == Kind::graphic) return graphic_matroid(*graph);
  return uniform_matroid(uniform_threshold, element_colors);
}

MatroidInput read_matroid(std::istream& in) {
  Tokens tokens(in);
  std::string header = tokens.next("GRAPHIC or UNIFORM header");
  MatroidInput input;
  if (header == "GRAPHIC") {
    input.kind = MatroidInput::Kind::graphic;
    expect_header(tokens, "ECG");
    input.graph = read_edge_colored_body(tokens);
    input.declared_colors = input.graph->color_count();
    return input;
  }
  if (header == "UNIFORM") {
    input.kind = MatroidInput::Kind::uniform;
    int n = tokens.next_int("ground size");
    input.uniform_threshold = tokens.next_int("rank threshold");
    input.declared_colors = tokens.next_int("color count");
    if (n < 0 || input.uniform_threshold < 0 || input.declared_colors < 0) {
      throw parse_error("negative header field");
    }
    if (input.uniform_threshold > n) {
      throw parse_error("rank threshold exceeds the ground size");
    }
    input.element_colors.resize(n);
    for (int i = 0; i < n; ++i) {
      input.element_colors[i] = tokens.next_int("element color");
      if (input.element_colors[i] < 0) throw parse_error("negative color");
    }
    return input;
  }
  throw parse_error("expected 'GRAPHIC' or 'UNIFORM', got '" + header + "'");
}

void write_matroid(std::ostream& out, const MatroidInput& input) {
  if (input.kind == MatroidInput::Kind::graphic) {
    out << "GRAPHIC\n";
    write_edge_colored(out, *input.graph);
    return;
  }
  out << "UNIFORM " << input.element_colors.size() << ' '
      << input.uniform_threshold << ' ' << input.declared_colors << '\n';
  for (size_t i = 0; i < input.element_colors.size(); ++i) {
    out << input.element_colors[i]
        << (i + 1 == input.element_colors.size() ? '\n' : ' ');
  }
}

SparsifyOrder read_order(std::istream& in) {
  Tokens tokens(in);
  expect_header(tokens, "ORDER");
  SparsifyOrder order;
  while (auto section = tokens.try_next()) {
    std::vector<int>* target = nullptr;
    if (*section == "edges") {
      target = &order.edge_order;
    } else if (*section == "vertices") {
      target = &order.vertex_order;
    } else if (*section == "colors") {
      target = &order.color_order;
    } else {
      throw parse_error("unknown order section '" + *section + "'");
    }
    if (!target->empty()) {
      throw parse_error("duplicate order section '" + *section + "'");
    }
    int count = tokens.next_int("permutation length");
    if (count < 0) throw parse_error("negative permutation length");
    target->resize(count);
    for (int i = 0; i < count; ++i) {
      (*target)[i] = tokens.next_int("permutation entry");
    }
  }
  return order;
}

void write_order(std::ostream& out, const SparsifyOrder& order) {
  out << "ORDER\n";
  auto section = [&out](const char* name, const std::vector<int>& perm) {
    if (perm.empty()) return;
    out << name << ' ' << perm.size() << '\n';
    for (size_t i = 0; i < perm.size(); ++i) {
      out << perm[i] << (i + 1 == perm.size() ? '\n' : ' ');
    }
  };
  section("edges", order.edge_order);
  section("vertices", order.vertex_order);
  section("colors", order.color_order);
}

namespace {

const char* kPalette[12] = {"red",     "blue",   "green",  "gold",
                            "purple",  "orange", "cyan",   "magenta",
                            "brown",   "gray",   "black",  "pink"};

const char* palette(Color c) { return kPalette[c % 12]; }

}  // namespace

std::string to_dot(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << ";\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v << " [color=" << palette(e.color)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

std::string to_dot(const VertexColoredGraph& g) {
  std::ostringstream out;
  out << "graph {\n";
  out << "  node [style=filled];\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << v << " [color=" << palette(g.color(v)) << "];\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out << "  " << u << " -- " << v << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return in;
}

}  // namespace

EdgeColoredGraph load_edge_colored(const std::string& path) {
  auto in = open_file(path);
  return read_edge_colored(in);
}

VertexColoredGraph load_vertex_colored(const std::string& path) {
  auto in = open_file(path);
  return read_vertex_colored(in);
}

MatroidInput load_matroid(const std::string& path) {
  auto in = open_file(path);
  return read_matroid(in);
}

SparsifyOrder load_order(const std::string& path) {
  auto in = open_file(path);
  return read_order(in);
}

void save_text(const std::string& path, const std::string& contents) {
  std::ofstream out(path);
  if (!out) throw parse_error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace caconn
