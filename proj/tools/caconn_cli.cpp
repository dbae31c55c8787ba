// Command-line front end: recognition, sparsification, exact optima,
// extremal generators, closed-form bounds, and Graphviz export for
// color-avoiding connectivity instances.
//
// Exit codes: 0 property holds / success, 1 property fails or a precondition
// is violated (a witness is reported), 2 malformed input or parameters,
// 3 exact-search budget refusal.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "caconn/connectivity.hpp"
#include "caconn/errors.hpp"
#include "caconn/exact.hpp"
#include "caconn/generators.hpp"
#include "caconn/io.hpp"
#include "caconn/matroid.hpp"
#include "caconn/sparsify.hpp"

using json = nlohmann::json;
using namespace caconn;

namespace {

enum class Notion { eca, vca, ivca, courteous };

Notion parse_notion(const std::string& name) {
  if (name == "eca") return Notion::eca;
  if (name == "vca") return Notion::vca;
  if (name == "ivca") return Notion::ivca;
  if (name == "courteous") return Notion::courteous;
  throw std::invalid_argument("unknown notion '" + name +
                              "' (expected eca, vca, ivca, courteous)");
}

CaNotion graph_notion(Notion notion) {
  switch (notion) {
    case Notion::vca: return CaNotion::vca;
    case Notion::ivca: return CaNotion::ivca;
    default: return CaNotion::eca;
  }
}

template <typename Reader>
auto load(const std::string& path, Reader&& reader) {
  if (path == "-") return reader(std::cin);
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  return reader(in);
}

void emit(const std::string& path, const std::string& contents) {
  if (path.empty() || path == "-") {
    std::cout << contents;
    return;
  }
  save_text(path, contents);
}

int count_used_colors(const std::vector<Color>& colors) {
  return static_cast<int>(std::set<Color>(colors.begin(), colors.end()).size());
}

std::vector<Color> edge_colors(const EdgeColoredGraph& g) {
  std::vector<Color> colors;
  for (const Edge& e : g.edges()) colors.push_back(e.color);
  return colors;
}

struct OrderSpec {
  std::string text = "asc";
  unsigned long long seed = 0;

  SparsifyOrder resolve(int edges, int vertices) const {
    if (text == "asc") return SparsifyOrder{};
    if (text == "desc") return SparsifyOrder::descending(edges, vertices);
    if (text == "random") return SparsifyOrder::shuffled(edges, vertices, seed);
    if (text.rfind("random:", 0) == 0) {
      return SparsifyOrder::shuffled(edges, vertices,
                                     std::stoull(text.substr(7)));
    }
    return load_order(text);
  }
};

void print_witness(const CaWitness& w) {
  std::cout << "witness: color " << w.color << " separates " << w.u << " and "
            << w.v << "\n";
}

// ---------------------------------------------------------------------------
// check

int run_check(const std::string& file, const std::string& notion_name) {
  Notion notion = parse_notion(notion_name);
  if (notion == Notion::courteous) {
    MatroidInput input =
        load(file, [](std::istream& s) { return read_matroid(s); });
    ColoredMatroid m = input.to_matroid();
    if (auto bad = courteous_violation(m)) {
      std::cout << "not courteous\nwitness: deleting color " << *bad
                << " drops the rank\n";
      return 1;
    }
    std::cout << "courteous\n";
    return 0;
  }

  CaVerdict verdict;
  if (notion == Notion::eca) {
    verdict = is_eca_connected(
        load(file, [](std::istream& s) { return read_edge_colored(s); }));
  } else {
    VertexColoredGraph g =
        load(file, [](std::istream& s) { return read_vertex_colored(s); });
    verdict =
        notion == Notion::vca ? is_vca_connected(g) : is_ivca_connected(g);
  }
  if (verdict.holds) {
    std::cout << notion_name << "-connected\n";
    return 0;
  }
  std::cout << "not " << notion_name << "-connected\n";
  print_witness(*verdict.witness);
  return 1;
}

// ---------------------------------------------------------------------------
// approx

json phase_counts_json(const SparsifyResult& result) {
  json counts = json::object();
  for (EdgePhase phase :
       {EdgePhase::phase1_tree, EdgePhase::phase1_neighbor,
        EdgePhase::phase2_tree, EdgePhase::phase2_repair,
        EdgePhase::phase3_repair, EdgePhase::whole_graph}) {
    int count = result.phase_count(phase);
    if (count > 0) counts[to_string(phase)] = count;
  }
  return counts;
}

void attach_bounds(json& stats, long long lower, long long upper,
                   long long selected) {
  stats["lower_bound"] = lower;
  stats["upper_bound"] = upper;
  if (lower > 0) {
    stats["ratio_vs_bound"] =
        static_cast<double>(selected) / static_cast<double>(lower);
  } else {
    stats["ratio_vs_bound"] = nullptr;
  }
}

std::string provenance_comment(const SelectedEdge& s) {
  std::string tag = to_string(s.phase);
  if (s.repair_color >= 0) tag += "-color-" + std::to_string(s.repair_color);
  return tag;
}

void append_provenance(std::ostringstream& body, const SparsifyResult& result,
                       const std::vector<int>& kept, bool pruned) {
  for (const SelectedEdge& s : result.provenance) {
    if (std::find(kept.begin(), kept.end(), s.edge) != kept.end()) {
      body << "# edge " << s.edge << ": " << provenance_comment(s)
           << (pruned ? " kept-after-prune" : "") << "\n";
    }
  }
}

int run_approx(const std::string& file, const std::string& notion_name,
               const OrderSpec& order_spec, bool prune,
               const std::string& output, const std::string& json_path) {
  Notion notion = parse_notion(notion_name);
  json stats{{"schema", 1}, {"notion", notion_name}};

  std::ostringstream body;
  if (notion == Notion::courteous) {
    MatroidInput input =
        load(file, [](std::istream& s) { return read_matroid(s); });
    ColoredMatroid m = input.to_matroid();
    SparsifyOrder order = order_spec.resolve(m.ground_size(), 0);
    RestrictionResult result =
        courteous_restriction(m, order.edge_order, order.color_order);
    std::vector<int> selected = result.selected;
    int removed = 0;
    if (prune) {
      std::vector<int> pruned = prune_restriction(m, selected);
      removed = static_cast<int>(selected.size() - pruned.size());
      selected = pruned;
    }
    int rank = total_rank(m);
    int used = count_used_colors(m.colors());
    stats["ground_size"] = m.ground_size();
    stats["rank"] = rank;
    stats["elements_selected"] = selected.size();
    stats["oracle_calls"] = result.oracle_calls;
    if (prune) stats["pruned_away"] = removed;
    int basis = 0;
    int repair = 0;
    for (const SelectedElement& s : result.provenance) {
      (s.phase == SelectionPhase::basis ? basis : repair) += 1;
    }
    stats["phase_counts"] = json{{"basis", basis}, {"repair", repair}};
    attach_bounds(stats, min_elements_bound(std::max(used, 2), rank), 2 * rank,
                  static_cast<long long>(selected.size()));

    if (input.kind == MatroidInput::Kind::graphic) {
      write_edge_colored(body, edge_subgraph(*input.graph, selected));
    } else {
      body << "SUBSET " << selected.size() << "\n";
      for (int e : selected) body << e << "\n";
    }
  } else if (notion == Notion::eca) {
    EdgeColoredGraph g =
        load(file, [](std::istream& s) { return read_edge_colored(s); });
    SparsifyOrder order = order_spec.resolve(g.edge_count(), g.vertex_count());
    SparsifyResult result = eca_sparsify(g, order);
    std::vector<int> selected = result.selected;
    int removed = 0;
    if (prune) {
      std::vector<int> pruned = prune_subgraph(g, selected);
      removed = static_cast<int>(selected.size() - pruned.size());
      selected = pruned;
    }
    int n = g.vertex_count();
    int used = count_used_colors(edge_colors(g));
    stats["n"] = n;
    stats["input_edges"] = g.edge_count();
    stats["edges_selected"] = selected.size();
    stats["phase_counts"] = phase_counts_json(result);
    if (prune) stats["pruned_away"] = removed;
    attach_bounds(stats, n <= 1 ? 0 : min_edges_bound(CaNotion::eca, used, n),
                  n >= 1 ? 2LL * (n - 1) : 0,
                  static_cast<long long>(selected.size()));
    body << "# sparsified from " << file << "\n";
    append_provenance(body, result, selected, prune);
    write_edge_colored(body, edge_subgraph(g, selected));
  } else {
    VertexColoredGraph g =
        load(file, [](std::istream& s) { return read_vertex_colored(s); });
    CaNotion which = graph_notion(notion);
    SparsifyOrder order = order_spec.resolve(g.edge_count(), g.vertex_count());
    SparsifyResult result =
        which == CaNotion::vca ? vca_sparsify(g, order) : ivca_sparsify(g, order);
    std::vector<int> selected = result.selected;
    int removed = 0;
    if (prune) {
      std::vector<int> pruned = prune_subgraph(g, selected, which);
      removed = static_cast<int>(selected.size() - pruned.size());
      selected = pruned;
    }
    int n = g.vertex_count();
    int used = count_used_colors(g.colors());
    stats["n"] = n;
    stats["input_edges"] = g.edge_count();
    stats["edges_selected"] = selected.size();
    stats["phase_counts"] = phase_counts_json(result);
    if (prune) stats["pruned_away"] = removed;
    long long upper = which == CaNotion::ivca && used == 1
                          ? static_cast<long long>(n) * (n - 1) / 2
                          : std::max(2LL * n - 3, 0LL);
    attach_bounds(stats, min_edges_bound(which, used, n), upper,
                  static_cast<long long>(selected.size()));
    body << "# sparsified from " << file << "\n";
    append_provenance(body, result, selected, prune);
    write_vertex_colored(body, edge_subgraph(g, selected));
  }

  emit(output, body.str());
  std::string stats_text = stats.dump(2) + "\n";
  if (json_path.empty()) {
    std::cout << stats_text;
  } else {
    save_text(json_path, stats_text);
  }
  return 0;
}

// ---------------------------------------------------------------------------
// exact

int run_exact(const std::string& file, const std::string& notion_name,
              int budget, const std::string& json_path) {
  Notion notion = parse_notion(notion_name);
  ExactResult result;
  if (notion == Notion::courteous) {
    MatroidInput input =
        load(file, [](std::istream& s) { return read_matroid(s); });
    result = min_restriction_exact(input.to_matroid(), budget);
  } else if (notion == Notion::eca) {
    result = min_subgraph_exact(
        load(file, [](std::istream& s) { return read_edge_colored(s); }),
        budget);
  } else {
    result = min_subgraph_exact(
        load(file, [](std::istream& s) { return read_vertex_colored(s); }),
        graph_notion(notion), budget);
  }
  std::cout << "optimum " << result.optimum_size << "\n";
  std::cout << "witness:";
  for (int e : result.witness) std::cout << ' ' << e;
  std::cout << "\ncandidates " << result.candidates_tested << "\n";
  if (!json_path.empty()) {
    json out{{"schema", 1},
             {"optimum_size", result.optimum_size},
             {"witness", result.witness},
             {"candidates_tested", result.candidates_tested}};
    save_text(json_path, out.dump(2) + "\n");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// generate

int run_generate(const std::string& family, const std::vector<int>& params,
                 bool certificates, const std::string& output) {
  auto need = [&](size_t count) {
    if (params.size() != count) {
      throw std::invalid_argument("family '" + family + "' expects " +
                                  std::to_string(count) + " parameter(s)");
    }
  };
  auto write_graph = [&](const auto& g, const std::string& path) {
    std::ostringstream body;
    using G = std::decay_t<decltype(g)>;
    if constexpr (std::is_same_v<G, EdgeColoredGraph>) {
      write_edge_colored(body, g);
    } else {
      write_vertex_colored(body, g);
    }
    emit(path, body.str());
  };
  auto write_certificates = [&](const auto& inst, const std::string& ext) {
    if (!certificates) return;
    if (output.empty() || output == "-") {
      throw std::invalid_argument("--certificates needs --output");
    }
    write_graph(edge_subgraph(inst.graph, inst.optimum_certificate),
                output + ".optimum." + ext);
    write_graph(edge_subgraph(inst.graph, inst.adversarial_certificate),
                output + ".adversarial." + ext);
    std::ostringstream order;
    write_order(order, inst.adversarial_order);
    emit(output + ".adversarial.order", order.str());
  };

  if (family == "eca_min") {
    need(2);
    write_graph(gen_eca_min(params[0], params[1]), output);
  } else if (family == "eca_tight_ratio") {
    need(2);
    EcaTightRatioInstance inst = gen_eca_tight_ratio(params[0], params[1]);
    write_graph(inst.graph, output);
    write_certificates(inst, "ecg");
  } else if (family == "eca_maximal") {
    need(2);
    write_graph(gen_eca_maximal(params[0], params[1]), output);
  } else if (family == "vca_min") {
    need(2);
    write_graph(gen_vca_min(params[0], params[1]), output);
  } else if (family == "vca_tight_ratio") {
    need(2);
    VcaTightRatioInstance inst = gen_vca_tight_ratio(params[0], params[1]);
    write_graph(inst.graph, output);
    write_certificates(inst, "vcg");
  } else if (family == "vca_maximal_k3") {
    need(1);
    write_graph(gen_vca_maximal_k3(params[0]), output);
  } else if (family == "ivca_min") {
    need(2);
    write_graph(gen_ivca_min(params[0], params[1]), output);
  } else if (family == "ivca_tight_ratio") {
    need(2);
    IvcaTightRatioInstance inst = gen_ivca_tight_ratio(params[0], params[1]);
    write_graph(inst.graph, output);
    write_certificates(inst, "vcg");
  } else if (family == "ivca_maximal_k2") {
    need(1);
    write_graph(gen_ivca_maximal_k2(params[0]), output);
  } else {
    throw std::invalid_argument("unknown family '" + family + "'");
  }
  return 0;
}

// ---------------------------------------------------------------------------
// bounds

int run_bounds(const std::string& variant, int k, int n) {
  long long bound = 0;
  if (variant == "elements") {
    bound = min_elements_bound(k, n);
  } else {
    Notion notion = parse_notion(variant);
    if (notion == Notion::courteous) {
      throw std::invalid_argument("use 'elements' for matroid bounds");
    }
    bound = min_edges_bound(graph_notion(notion), k, n);
  }
  std::cout << bound << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// export-dot

int run_export_dot(const std::string& file, const std::string& output) {
  auto graph = load(file, [](std::istream& s) { return read_any_graph(s); });
  std::string dot = std::holds_alternative<EdgeColoredGraph>(graph)
                        ? to_dot(std::get<EdgeColoredGraph>(graph))
                        : to_dot(std::get<VertexColoredGraph>(graph));
  emit(output, dot);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"color-avoiding connectivity toolkit"};
  app.require_subcommand(1);

  std::string file;
  std::string notion = "eca";
  std::string output;
  std::string json_path;
  OrderSpec order;
  bool prune = false;
  int budget = kDefaultExactBudget;
  std::string family;
  std::string variant;
  std::vector<int> params;
  int bound_k = 0;
  int bound_n = 0;
  bool certificates = false;

  CLI::App* check = app.add_subcommand("check", "recognize a notion");
  check->add_option("file", file)->required();
  check->add_option("--notion", notion, "eca|vca|ivca|courteous");

  CLI::App* approx = app.add_subcommand("approx", "sparsify a valid instance");
  approx->add_option("file", file)->required();
  approx->add_option("--notion", notion, "eca|vca|ivca|courteous");
  approx->add_option("--order", order.text,
                     "asc, desc, random[:seed], or an ORDER file");
  approx->add_option("--seed", order.seed, "seed for --order random");
  approx->add_flag("--prune", prune, "greedy deletion pass on the output");
  approx->add_option("--output,-o", output, "subgraph file ('-' = stdout)");
  approx->add_option("--json", json_path, "write the stats block here");

  CLI::App* exact = app.add_subcommand("exact", "brute-force optimum");
  exact->add_option("file", file)->required();
  exact->add_option("--notion", notion, "eca|vca|ivca|courteous");
  exact->add_option("--budget", budget, "instance size refusal threshold");
  exact->add_option("--json", json_path, "write the result here");

  CLI::App* generate = app.add_subcommand("generate", "extremal instances");
  generate
      ->add_option("family", family,
                   "eca_min|eca_tight_ratio|eca_maximal|vca_min|"
                   "vca_tight_ratio|vca_maximal_k3|ivca_min|"
                   "ivca_tight_ratio|ivca_maximal_k2")
      ->required();
  generate->add_option("params", params, "family parameters");
  generate->add_flag("--certificates", certificates,
                     "also write certificate subgraphs and the adversarial "
                     "order");
  generate->add_option("--output,-o", output, "output file ('-' = stdout)");

  CLI::App* bounds = app.add_subcommand("bounds", "closed-form lower bounds");
  bounds->add_option("variant", variant, "eca|vca|ivca|elements")->required();
  bounds->add_option("k", bound_k)->required();
  bounds->add_option("n", bound_n, "vertex count (rank for 'elements')")
      ->required();

  CLI::App* dot = app.add_subcommand("export-dot", "Graphviz rendering");
  dot->add_option("file", file)->required();
  dot->add_option("--output,-o", output, "dot file ('-' = stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (check->parsed()) return run_check(file, notion);
    if (approx->parsed())
      return run_approx(file, notion, order, prune, output, json_path);
    if (exact->parsed()) return run_exact(file, notion, budget, json_path);
    if (generate->parsed())
      return run_generate(family, params, certificates, output);
    if (bounds->parsed()) return run_bounds(variant, bound_k, bound_n);
    if (dot->parsed()) return run_export_dot(file, output);
  } catch (const budget_error& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return 3;
  } catch (const precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (e.witness_color() >= 0) {
      std::cerr << "witness color " << e.witness_color();
      if (e.witness_u() >= 0) {
        std::cerr << " separating " << e.witness_u() << " and "
                  << e.witness_v();
      }
      std::cerr << "\n";
    }
    return 1;
  } catch (const parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
