// Drives the installed command-line binary end to end: exit codes, report
// text, stats blocks, and the documented file formats.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

using json = nlohmann::json;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

struct RunResult {
  int status = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string command = std::string(CACONN_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  std::array<char, 4096> buffer;
  size_t got = 0;
  while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    result.out.append(buffer.data(), got);
  }
  int raw = pclose(pipe);
  result.status = WEXITSTATUS(raw);
  return result;
}

std::string data(const std::string& name) {
  return std::string(CACONN_DATA_DIR) + "/" + name;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/caconn_cli_test_") + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

int main() {
  // Recognition and exit codes.
  expect(run("check " + data("figures/fig02_left.ecg") + " --notion eca")
             .status == 0,
         "left four-cycle is eca");
  RunResult bad = run("check " + data("figures/fig02_right.ecg") +
                      " --notion eca");
  expect(bad.status == 1, "right four-cycle fails eca");
  expect(contains(bad.out, "witness: color 1"), "witness color printed");
  expect(run("check " + data("figures/fig03_middle.vcg") + " --notion vca")
             .status == 0,
         "middle cycle is vca");
  expect(run("check " + data("figures/fig03_middle.vcg") + " --notion ivca")
             .status == 1,
         "middle cycle is not ivca");

  {
    std::ofstream bad_file(temp_path("bad.ecg"));
    bad_file << "EGG 1 0 1\n";
  }
  expect(run("check " + temp_path("bad.ecg") + " --notion eca").status == 2,
         "malformed header exits 2");
  expect(run("check " + temp_path("missing.ecg") + " --notion eca").status ==
             2,
         "missing file exits 2");
  expect(run("check " + data("figures/fig02_left.ecg") + " --notion nope")
             .status == 2,
         "unknown notion exits 2");

  // Bounds.
  expect(run("bounds eca 4 8").out == "10\n", "edge bound k=4 n=8");
  expect(run("bounds ivca 4 15").out == "17\n", "internal bound k=4 n=15");
  expect(run("bounds vca 4 6").out == "6\n", "vertex bound k=4 n=6");
  expect(run("bounds elements 4 7").out == "10\n", "element bound k=4 r=7");
  expect(run("bounds eca 1 5").status == 2, "infeasible bound exits 2");

  // Every generated family passes its own check.
  struct Family {
    const char* args;
    const char* notion;
    const char* ext;
  };
  for (const Family& family : std::vector<Family>{
           {"eca_min 4 7", "eca", "ecg"},
           {"eca_tight_ratio 3 7", "eca", "ecg"},
           {"eca_maximal 4 8", "eca", "ecg"},
           {"vca_min 4 6", "vca", "vcg"},
           {"vca_tight_ratio 4 9", "vca", "vcg"},
           {"vca_maximal_k3 8", "vca", "vcg"},
           {"ivca_min 4 11", "ivca", "vcg"},
           {"ivca_tight_ratio 4 15", "ivca", "vcg"},
           {"ivca_maximal_k2 6", "ivca", "vcg"}}) {
    std::string path = temp_path(std::string("gen.") + family.ext);
    expect(run(std::string("generate ") + family.args + " -o " + path)
               .status == 0,
           std::string("generate ") + family.args);
    expect(run("check " + path + " --notion " + family.notion).status == 0,
           std::string("generated ") + family.args + " passes " +
               family.notion);
  }
  expect(run("generate eca_min 1 5").status == 2,
         "infeasible generator exits 2");
  expect(run("generate nonsense 1").status == 2, "unknown family exits 2");

  // Sparsification with the shipped adversarial order.
  {
    std::string out_graph = temp_path("fig5_run.ecg");
    std::string out_json = temp_path("fig5_run.json");
    RunResult result =
        run("approx " + data("figures/fig05.ecg") + " --notion eca --order " +
            data("orders/fig05_adversarial.order") + " -o " + out_graph +
            " --json " + out_json);
    expect(result.status == 0, "adversarial approx runs");
    std::ifstream in(out_json);
    json stats = json::parse(in);
    expect(stats["schema"] == 1, "stats schema");
    expect(stats["edges_selected"] == 12, "adversarial run selects 12");
    expect(stats["lower_bound"] == 9, "stats lower bound");
    expect(stats["upper_bound"] == 12, "stats upper bound");
    expect(run("check " + out_graph + " --notion eca").status == 0,
           "sparsified output is still eca");
  }

  // Default and random orders, pruning, and the ratio invariant across the
  // shipped corpus.
  struct Corpus {
    const char* file;
    const char* notion;
    double ratio_cap;
  };
  for (const Corpus& entry : std::vector<Corpus>{
           {"figures/fig02_left.ecg", "eca", 2.0},
           {"figures/fig04.ecg", "eca", 1.5},
           {"figures/fig05.ecg", "eca", 4.0 / 3.0},
           {"figures/fig06.ecg", "eca", 1.5},
           {"figures/fig07.vcg", "vca", 2.0},
           {"figures/fig08_left.vcg", "vca", 2.0},
           {"figures/fig08_right.vcg", "vca", 2.0},
           {"figures/fig09.vcg", "vca", 2.0},
           {"figures/fig10_n12.vcg", "ivca", 2.0 * 6 / 7},
           {"figures/fig11.vcg", "ivca", 2.0 * 6 / 7},
           {"figures/fig12.vcg", "ivca", 2.0 * 2 / 3}}) {
    for (const char* order : {"asc", "desc", "random:11"}) {
      std::string out_json = temp_path("corpus.json");
      RunResult result = run("approx " + data(entry.file) + " --notion " +
                             entry.notion + " --order " + order +
                             " -o /dev/null --json " + out_json);
      expect(result.status == 0,
             std::string("approx runs on ") + entry.file + " " + order);
      std::ifstream in(out_json);
      json stats = json::parse(in);
      double ratio = stats["ratio_vs_bound"].get<double>();
      expect(ratio <= entry.ratio_cap + 1e-9,
             std::string("ratio within the guarantee on ") + entry.file);
      expect(stats["edges_selected"].get<long long>() <=
                 stats["upper_bound"].get<long long>(),
             std::string("upper bound respected on ") + entry.file);
    }
  }
  {
    std::string out_json = temp_path("prune.json");
    RunResult result = run("approx " + data("figures/fig06.ecg") +
                           " --notion eca --prune -o /dev/null --json " +
                           out_json);
    expect(result.status == 0, "pruned approx runs");
    std::ifstream in(out_json);
    json stats = json::parse(in);
    expect(stats["edges_selected"] == 14, "nothing pruned from the maximal");
    expect(stats["pruned_away"] == 0, "prune count reported");
  }
  expect(run("approx " + data("figures/fig02_right.ecg") +
             " --notion eca -o /dev/null")
             .status == 1,
         "approx rejects invalid input with exit 1");
  expect(run("approx " + data("figures/fig05.ecg") +
             " --notion eca --order random --seed 7 -o /dev/null")
             .status == 0,
         "random order takes its seed from --seed");

  // One-color tree: no repairs.
  {
    std::string tree = temp_path("tree.vcg");
    run("generate vca_min 1 6 -o " + tree);
    std::string out_json = temp_path("tree.json");
    run("approx " + tree + " --notion vca -o /dev/null --json " + out_json);
    std::ifstream in(out_json);
    json stats = json::parse(in);
    expect(stats["edges_selected"] == 5, "one-color tree keeps n-1 edges");
  }

  // Exact search and budgets.
  RunResult exact = run("exact " + data("figures/fig05.ecg") + " --notion eca");
  expect(exact.status == 0, "exact runs on the tight family");
  expect(contains(exact.out, "optimum 9"), "exact optimum is 9");
  expect(run("exact " + data("figures/fig05.ecg") +
             " --notion eca --budget 3")
             .status == 3,
         "budget refusal exits 3");
  RunResult exact_vca =
      run("exact " + data("figures/fig08_left.vcg") + " --notion vca");
  expect(contains(exact_vca.out, "optimum 6"), "vertex exact optimum is 6");

  // Matroid formats.
  {
    std::string graphic = temp_path("graphic.matroid");
    std::ofstream out(graphic);
    out << "GRAPHIC\n";
    std::ifstream fig(data("figures/fig04.ecg"));
    out << fig.rdbuf();
    out.close();
    expect(run("check " + graphic + " --notion courteous").status == 0,
           "graphic wrap of the minimum family is courteous");
    std::string out_json = temp_path("matroid.json");
    RunResult result = run("approx " + graphic +
                           " --notion courteous -o /dev/null --json " +
                           out_json);
    expect(result.status == 0, "matroid approx runs");
    std::ifstream in(out_json);
    json stats = json::parse(in);
    expect(stats["elements_selected"] == 10, "minimum instance kept whole");
    expect(stats["lower_bound"] == 10, "matroid bound");

    std::string uniform = temp_path("uniform.matroid");
    std::ofstream uout(uniform);
    uout << "UNIFORM 5 3 2\n0 0 0 1 1\n";
    uout.close();
    expect(run("check " + uniform + " --notion courteous").status == 1,
           "lopsided uniform matroid is not courteous");
  }

  // Graphviz export.
  RunResult dot = run("export-dot " + data("figures/fig02_left.ecg"));
  expect(dot.status == 0, "dot export runs");
  expect(contains(dot.out, "color=red"), "dot export colors edges");
  RunResult dot_vcg = run("export-dot " + data("figures/fig07.vcg"));
  expect(contains(dot_vcg.out, "style=filled"), "dot export fills vertices");

  if (failures == 0) {
    std::cout << "cli driver: all checks passed\n";
    return 0;
  }
  std::cout << "cli driver: " << failures << " check(s) failed\n";
  return 1;
}
