// cdtsep: command-line front end over the C API.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "cdt/cdt.h"

namespace {

constexpr int kExitInput = 2;

struct GraphDeleter {
  void operator()(cdt_graph* g) const { cdt_graph_free(g); }
};
using GraphPtr = std::unique_ptr<cdt_graph, GraphDeleter>;

struct Failure {
  int code;
  std::string message;
};

std::string take(char* s) {
  std::string out(s);
  cdt_string_free(s);
  return out;
}

void check(cdt_status s) {
  if (s != CDT_OK) throw Failure{kExitInput, cdt_last_error()};
}

// Catalog name, "@path" for a file holding one graph6 line, or graph6 text.
GraphPtr load(const std::string& arg) {
  cdt_graph* g = nullptr;
  if (cdt_graph_from_catalog(arg.c_str(), &g) == CDT_OK) return GraphPtr(g);
  std::string text = arg;
  if (!arg.empty() && arg[0] == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw Failure{kExitInput, "cannot read " + arg.substr(1)};
    std::getline(in, text);
  }
  const cdt_status s = cdt_graph_from_graph6(text.c_str(), &g);
  if (s == CDT_ERR_GRAPH6) throw Failure{kExitInput, "'" + arg + "' is neither a catalog graph nor graph6: " + cdt_last_error()};
  check(s);
  return GraphPtr(g);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out || !(out << text)) throw Failure{kExitInput, "cannot write " + path};
}

void print_catalog(bool as_json) {
  char* out = nullptr;
  check(cdt_catalog_json(&out));
  const std::string text = take(out);
  if (as_json) {
    std::cout << text << "\n";
    return;
  }
  const auto rows = nlohmann::json::parse(text);
  std::printf("%-14s %5s %2s %3s %2s %5s %6s %2s %2s %2s\n", "graph", "n", "d", "g", "k", "eta", "a", "b", "h", "kappa");
  for (const auto& r : rows)
    std::printf("%-14s %5d %2d %3d %2d %5d %6ld %2d %2d %2d\n", r["token"].get<std::string>().c_str(),
                r["n"].get<int>(), r["d"].get<int>(), r["g"].get<int>(), r["k"].get<int>(), r["eta"].get<int>(),
                r["a"].get<long>(), r["b"].get<bool>() ? 1 : 0, r["h"].get<bool>() ? 1 : 0, r["kappa"].get<int>());
}

void print_report(const std::string& text) {
  const auto report = nlohmann::json::parse(text);
  for (const auto& g : report["graphs"]) {
    int counts[4] = {0, 0, 0, 0};
    for (const auto& c : g["checks"]) {
      const std::string status = c["status"];
      if (status == "match") ++counts[0];
      else if (status == "flagged-discrepancy") ++counts[1];
      else if (status == "skipped") ++counts[2];
      else ++counts[3];
      if (status != "match") {
        std::cout << "  " << g["graph"].get<std::string>() << " " << c["id"].get<std::string>() << ": " << status
                  << " (expected " << c["expected"].dump() << ", computed " << c["computed"].dump() << ")";
        if (!c["note"].get<std::string>().empty()) std::cout << " " << c["note"].get<std::string>();
        std::cout << "\n";
      }
    }
    std::cout << g["graph"].get<std::string>() << ": " << counts[0] << " match, " << counts[1] << " flagged, "
              << counts[2] << " skipped, " << counts[3] << " mismatch\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cubic distance-transitive graphs, oriented girth cycles and separator digraphs"};
  app.require_subcommand(1);

  double budget = cdt_default_options().budget_seconds;
  bool as_json = false;
  bool no_hamiltonicity = false;
  std::string graph;
  std::string dot_path, json_path;
  bool all = false;
  bool export_graph = false;

  auto* catalog = app.add_subcommand("catalog", "List the twelve graphs with their parameters");
  catalog->add_flag("--json", as_json, "Emit JSON");

  auto* analyze = app.add_subcommand("analyze", "Metrics, automorphisms, girth cycles and fastening (JSON)");
  analyze->add_option("graph", graph, "Catalog name, graph6 text or @file")->required();

  auto* orient = app.add_subcommand("orient", "Solve for an orientation of the girth cycles (JSON)");
  orient->add_option("graph", graph, "Catalog name, graph6 text or @file")->required();

  auto* separator = app.add_subcommand("separator", "Build S(G) and report its structure (JSON)");
  separator->add_option("graph", graph, "Catalog name, graph6 text or @file")->required();

  auto* verify = app.add_subcommand("verify", "Check the computed structure against the table and claims");
  auto* verify_graph = verify->add_option("graph", graph, "Catalog name, graph6 text or @file");
  verify->add_flag("--all", all, "Every catalog graph")->excludes(verify_graph);
  verify->add_flag("--json", as_json, "Emit the JSON report");

  auto* exp = app.add_subcommand("export", "Write S(G) as DOT or the verification report as JSON");
  exp->add_option("graph", graph, "Catalog name, graph6 text or @file")->required();
  auto* dot_opt = exp->add_option("--dot", dot_path, "DOT output path");
  exp->add_option("--json", json_path, "JSON report output path")->excludes(dot_opt);
  exp->add_flag("--input", export_graph, "With --dot, draw the input graph instead of S(G)");

  for (auto* sub : {verify, exp}) {
    sub->add_option("--budget", budget, "Seconds per graph for the hamiltonicity and separator group searches")
        ->check(CLI::PositiveNumber);
    sub->add_flag("--no-hamiltonicity", no_hamiltonicity, "Skip the hamiltonicity search");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitInput;
  }

  const cdt_options opts{budget, no_hamiltonicity ? 0 : 1};
  try {
    char* out = nullptr;
    if (*catalog) {
      print_catalog(as_json);
    } else if (*analyze) {
      check(cdt_analyze_json(load(graph).get(), &out));
      std::cout << take(out) << "\n";
    } else if (*orient) {
      check(cdt_orient_json(load(graph).get(), &out));
      std::cout << take(out) << "\n";
    } else if (*separator) {
      check(cdt_separator_json(load(graph).get(), &out));
      std::cout << take(out) << "\n";
    } else if (*verify) {
      if (!all && graph.empty()) throw Failure{kExitInput, "verify needs a graph or --all"};
      int code = 0;
      if (all)
        check(cdt_verify_all_json(&opts, &out, &code));
      else
        check(cdt_verify_json(load(graph).get(), &opts, &out, &code));
      const std::string text = take(out);
      if (as_json)
        std::cout << text << "\n";
      else
        print_report(text);
      return code;
    } else if (*exp) {
      if (dot_path.empty() == json_path.empty()) throw Failure{kExitInput, "export needs exactly one of --dot or --json"};
      const GraphPtr g = load(graph);
      if (!dot_path.empty()) {
        check(export_graph ? cdt_graph_dot(g.get(), &out) : cdt_separator_dot(g.get(), &out));
        write_file(dot_path, take(out));
        return 0;
      }
      int code = 0;
      check(cdt_verify_json(g.get(), &opts, &out, &code));
      write_file(json_path, take(out));
      return code;
    }
  } catch (const Failure& f) {
    std::cerr << "cdtsep: " << f.message << "\n";
    return f.code;
  }
  return 0;
}
