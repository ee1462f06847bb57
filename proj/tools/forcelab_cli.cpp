// Copyright 2026 The forcelab Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "forcelab/forcelab.h"

namespace {

using Json = nlohmann::ordered_json;

struct CliError {
  fl_status status;
  std::string message;
};

[[noreturn]] void raise(fl_status status, const std::string& message) { throw CliError{status, message}; }

void check(fl_status status) {
  if (status != FL_OK) raise(status, fl_last_error());
}

Json take_json(char* text) {
  std::unique_ptr<char, decltype(&fl_string_free)> owned(text, &fl_string_free);
  return Json::parse(owned.get());
}

template <typename Call>
Json call_json(Call&& call) {
  char* out = nullptr;
  check(call(&out));
  return take_json(out);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(FL_E_IO, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(FL_E_IO, "cannot write " + path);
  out << text;
  if (!out) raise(FL_E_IO, "write failed: " + path);
}

struct GraphDeleter {
  void operator()(fl_graph* g) const { fl_graph_free(g); }
};
struct AssignmentDeleter {
  void operator()(fl_assignment* a) const { fl_assignment_free(a); }
};
using GraphPtr = std::unique_ptr<fl_graph, GraphDeleter>;
using AssignmentPtr = std::unique_ptr<fl_assignment, AssignmentDeleter>;

GraphPtr load_graph(const std::string& path) {
  fl_graph* g = nullptr;
  check(fl_graph_from_text(read_file(path).c_str(), &g));
  return GraphPtr(g);
}

AssignmentPtr load_assignment(const std::string& path) {
  fl_assignment* a = nullptr;
  check(fl_assignment_from_json(read_file(path).c_str(), &a));
  return AssignmentPtr(a);
}

std::vector<int> parse_ids(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      raise(FL_E_PARSE, "not an integer list: " + text);
    }
  }
  return out;
}

std::string summary_line(const std::string& command, const Json& report) {
  std::string line = command + ":";
  for (auto it = report.begin(); it != report.end(); ++it) {
    if (it.key() == "command" || it.key() == "engine" || it.key() == "inputs") continue;
    if (it->is_structured()) continue;
    line += " " + it.key() + "=" + (it->is_string() ? it->get<std::string>() : it->dump());
  }
  return line;
}

struct Options {
  std::string output = "json";
  bool timing = false;
  int max_edges = 64;
  long long max_matchings = 1'000'000;
  int max_n = 20;
  fl_limits limits{};
};

void finalize_limits(Options& o) {
  fl_limits_default(&o.limits);
  o.limits.max_cycle_edges = o.max_edges;
  o.limits.max_support_edges = o.max_edges;
  o.limits.max_matchings = static_cast<uint64_t>(o.max_matchings);
  o.limits.max_hypercube_n = o.max_n;
  if (o.limits.max_blue_n > o.max_n) o.limits.max_blue_n = o.max_n;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Forcing numbers and fractional forcing numbers of graphs", "forcelab"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--output", opt.output, "json or summary")->check(CLI::IsMember({"json", "summary"}));
  app.add_flag("--timing", opt.timing, "Add wall-clock timing to the report");
  app.add_option("--max-edges", opt.max_edges, "Cap on edges for cycle enumeration and supports")
      ->check(CLI::Range(1, 64));
  app.add_option("--max-matchings", opt.max_matchings, "Cap on enumerated perfect matchings")
      ->check(CLI::PositiveNumber);
  app.add_option("--max-n", opt.max_n, "Cap on hypercube dimension")->check(CLI::Range(1, 30));
  app.set_version_flag("--version", std::string("forcelab ") + fl_version());

  std::string graph_path, assignment_path, alpha_path, gamma_path, matching_text, set_text, csv_path, out_path;
  std::string family, mode = "min", method = "auto", fixture_name, lower_a;
  std::vector<std::string> part_paths, lambdas, perm_texts;
  int n = 0, m = 0;
  bool table = false, no_verify = false;

  auto* gen = app.add_subcommand("gen", "Generate a graph");
  gen->add_option("--family", family, "hypercube, cycle, path, complete, grid, example14, example18, example19")
      ->required();
  gen->add_option("--n", n, "Size parameter");
  gen->add_option("--m", m, "Second size parameter (grid)");
  gen->add_option("--out", out_path, "Write the graph text file here");
  std::string uniform_path;
  gen->add_option("--uniform-out", uniform_path, "Write the uniform 1/deg assignment here (regular graphs)");

  auto* pm = app.add_subcommand("pm", "Enumerate perfect matchings");
  pm->add_option("--graph", graph_path, "Graph text file")->required();
  pm->add_option("--emit-csv", csv_path, "Write index,edges rows");

  auto* forcing = app.add_subcommand("forcing", "Forcing numbers: f, F and spectrum, or one matching");
  forcing->add_option("--graph", graph_path, "Graph text file")->required();
  forcing->add_option("--matching", matching_text, "Comma-separated edge indices of one perfect matching");
  forcing->add_flag("--table", table, "Include the per-matching table");
  forcing->add_option("--emit-csv", csv_path, "Write matching,forcing_number rows");

  auto* ff = app.add_subcommand("ff", "Fractional forcing number of an assignment or a graph");
  ff->add_option("--assignment", assignment_path, "Assignment JSON file");
  ff->add_option("--graph", graph_path, "Graph text file");
  ff->add_option("--mode", mode, "min, max-exact, max-bound or spectrum (with --graph)")
      ->check(CLI::IsMember({"min", "max-exact", "max-bound", "spectrum"}));
  ff->add_option("--method", method, "auto, cycles or lp (with --assignment)")
      ->check(CLI::IsMember({"auto", "cycles", "lp"}));

  auto* check_forcing = app.add_subcommand("check-forcing", "Check a forcing set or a forcing function");
  check_forcing->add_option("--graph", graph_path, "Graph text file (set mode)");
  check_forcing->add_option("--matching", matching_text, "Perfect matching edge indices (set mode)");
  check_forcing->add_option("--set", set_text, "Subset edge indices (set mode)");
  check_forcing->add_option("--alpha", alpha_path, "Partial assignment JSON (function mode)");
  check_forcing->add_option("--gamma", gamma_path, "Fractional perfect matching JSON (function mode)");

  auto* criterion = app.add_subcommand("criterion", "Alternating-cycle criterion on a bipartite graph");
  criterion->add_option("--gamma", gamma_path, "Fractional perfect matching JSON")->required();
  criterion->add_option("--set", set_text, "Edge indices of S")->required();

  auto* decompose = app.add_subcommand("decompose", "Split a minimal forcing function along a convex combination");
  decompose->add_option("--alpha", alpha_path, "Minimal forcing function JSON")->required();
  decompose->add_option("--gamma", gamma_path, "Fractional perfect matching JSON")->required();
  decompose->add_option("--part", part_paths, "Part assignment JSON (repeat)")->required();
  decompose->add_option("--lambda", lambdas, "Coefficient p/q for each part (repeat)")->required();

  auto* symmetrize = app.add_subcommand("symmetrize", "Average an assignment over automorphisms");
  symmetrize->add_option("--gamma", gamma_path, "Fractional perfect matching JSON")->required();
  symmetrize->add_option("--perm", perm_texts, "Vertex permutation as comma-separated images (repeat)");
  symmetrize->add_option("--out", out_path, "Write the averaged assignment JSON here");

  auto* bound = app.add_subcommand("hypercube-bound", "Hypercube upper bounds from the blue edge set");
  bound->add_option("--n", n, "Dimension")->required();
  bound->add_flag("--no-verify", no_verify, "Skip the LP verification of the blue set");
  bound->add_option("--lower-a", lower_a, "Constant a for the reported a*2^(n-1) lower bound");

  auto* verify = app.add_subcommand("verify-blue", "Verify that the blue edges force the uniform assignment");
  verify->add_option("--n", n, "Dimension")->required();
  verify->add_option("--method", method, "lp or cycles")->check(CLI::IsMember({"lp", "cycles"}))->required();

  auto* fixtures = app.add_subcommand("fixtures", "Reproduce the worked examples");
  fixtures->add_option("--name", fixture_name, "example14, example18, example19, q3 or q4 (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << Json{{"error", {{"code", FL_E_INVALID_ARGUMENT}, {"name", "invalid_argument"}, {"message", e.what()}}}}
                     .dump()
              << "\n";
    return FL_E_INVALID_ARGUMENT;
  }
  finalize_limits(opt);
  const fl_limits* limits = &opt.limits;

  const auto started = std::chrono::steady_clock::now();
  std::string command;
  Json report;
  Json inputs = Json::object();
  int exit_code = 0;
  try {
    if (*gen) {
      command = "gen";
      inputs = {{"family", family}, {"n", n}, {"m", m}};
      fl_graph* raw = nullptr;
      check(fl_graph_generate(family.c_str(), n, m, limits, &raw));
      GraphPtr g(raw);
      char* text = nullptr;
      check(fl_graph_to_text(g.get(), &text));
      const std::string graph_text(text);
      fl_string_free(text);
      if (!out_path.empty()) write_file(out_path, graph_text);
      if (!uniform_path.empty()) {
        fl_assignment* a = nullptr;
        check(fl_assignment_uniform(g.get(), &a));
        AssignmentPtr owned(a);
        write_file(uniform_path, call_json([&](char** o) { return fl_assignment_to_json(a, o); }).dump() + "\n");
      }
      report["vertex_count"] = fl_graph_vertex_count(g.get());
      report["edge_count"] = fl_graph_edge_count(g.get());
      report["graph"] = call_json([&](char** o) { return fl_graph_to_json(g.get(), o); });
    } else if (*pm) {
      command = "pm";
      inputs = {{"graph", graph_path}};
      const auto g = load_graph(graph_path);
      report = call_json([&](char** o) { return fl_perfect_matchings(g.get(), limits, o); });
      if (!csv_path.empty()) {
        std::string csv = "index,edges\n";
        std::size_t i = 0;
        for (const auto& mm : report["matchings"]) {
          std::string edges;
          for (const auto& e : mm) edges += (edges.empty() ? "" : " ") + e.dump();
          csv += std::to_string(i++) + "," + edges + "\n";
        }
        write_file(csv_path, csv);
      }
    } else if (*forcing) {
      command = "forcing";
      inputs = {{"graph", graph_path}};
      const auto g = load_graph(graph_path);
      if (!matching_text.empty()) {
        inputs["matching"] = matching_text;
        const auto ids = parse_ids(matching_text);
        report = call_json([&](char** o) { return fl_forcing_number(g.get(), ids.data(), ids.size(), limits, o); });
      } else {
        const bool need_table = table || !csv_path.empty();
        report = call_json([&](char** o) { return fl_forcing_stats(g.get(), need_table ? 1 : 0, limits, o); });
        if (!csv_path.empty()) {
          std::string csv = "matching,forcing_number\n";
          for (const auto& row : report["table"]) {
            std::string edges;
            for (const auto& e : row["matching"]) edges += (edges.empty() ? "" : " ") + e.dump();
            csv += edges + "," + row["forcing_number"].dump() + "\n";
          }
          write_file(csv_path, csv);
          if (!table) report.erase("table");
        }
      }
    } else if (*ff) {
      command = "ff";
      if (assignment_path.empty() == graph_path.empty()) {
        raise(FL_E_INVALID_ARGUMENT, "give exactly one of --assignment or --graph");
      }
      if (!assignment_path.empty()) {
        inputs = {{"assignment", assignment_path}, {"method", method}};
        const auto a = load_assignment(assignment_path);
        report = call_json([&](char** o) { return fl_fractional_forcing(a.get(), method.c_str(), limits, o); });
      } else {
        inputs = {{"graph", graph_path}, {"mode", mode}};
        const auto g = load_graph(graph_path);
        report = call_json([&](char** o) { return fl_graph_ff(g.get(), mode.c_str(), limits, o); });
      }
    } else if (*check_forcing) {
      command = "check-forcing";
      if (!alpha_path.empty() || !gamma_path.empty()) {
        if (alpha_path.empty() || gamma_path.empty()) raise(FL_E_INVALID_ARGUMENT, "function mode needs --alpha and --gamma");
        inputs = {{"alpha", alpha_path}, {"gamma", gamma_path}};
        const auto alpha = load_assignment(alpha_path);
        const auto gamma = load_assignment(gamma_path);
        report = call_json([&](char** o) { return fl_check_forcing_function(alpha.get(), gamma.get(), o); });
      } else {
        if (graph_path.empty() || matching_text.empty()) {
          raise(FL_E_INVALID_ARGUMENT, "set mode needs --graph, --matching and --set");
        }
        inputs = {{"graph", graph_path}, {"matching", matching_text}, {"set", set_text}};
        const auto g = load_graph(graph_path);
        const auto mids = parse_ids(matching_text);
        const auto sids = parse_ids(set_text);
        report = call_json([&](char** o) {
          return fl_check_forcing_set(g.get(), mids.data(), mids.size(), sids.data(), sids.size(), o);
        });
      }
    } else if (*criterion) {
      command = "criterion";
      inputs = {{"gamma", gamma_path}, {"set", set_text}};
      const auto gamma = load_assignment(gamma_path);
      const auto ids = parse_ids(set_text);
      report = call_json([&](char** o) { return fl_criterion(gamma.get(), ids.data(), ids.size(), limits, o); });
    } else if (*decompose) {
      command = "decompose";
      if (part_paths.size() != lambdas.size()) raise(FL_E_INVALID_ARGUMENT, "give one --lambda per --part");
      inputs = {{"alpha", alpha_path}, {"gamma", gamma_path}, {"parts", part_paths}, {"lambdas", lambdas}};
      const auto alpha = load_assignment(alpha_path);
      const auto gamma = load_assignment(gamma_path);
      std::vector<AssignmentPtr> parts;
      std::vector<const fl_assignment*> raw_parts;
      std::vector<const char*> raw_lambdas;
      for (std::size_t i = 0; i < part_paths.size(); ++i) {
        parts.push_back(load_assignment(part_paths[i]));
        raw_parts.push_back(parts.back().get());
        raw_lambdas.push_back(lambdas[i].c_str());
      }
      report = call_json([&](char** o) {
        return fl_decompose(alpha.get(), gamma.get(), raw_parts.data(), raw_lambdas.data(), raw_parts.size(), o);
      });
    } else if (*symmetrize) {
      command = "symmetrize";
      inputs = {{"gamma", gamma_path}, {"perms", perm_texts}};
      const auto gamma = load_assignment(gamma_path);
      std::vector<int> flat;
      for (const auto& p : perm_texts) {
        const auto ids = parse_ids(p);
        flat.insert(flat.end(), ids.begin(), ids.end());
      }
      fl_graph* raw = nullptr;
      check(fl_assignment_graph(gamma.get(), &raw));
      GraphPtr g(raw);
      const auto nv = static_cast<std::size_t>(fl_graph_vertex_count(g.get()));
      for (const auto& p : perm_texts) {
        if (parse_ids(p).size() != nv) raise(FL_E_INVALID_ARGUMENT, "permutation length differs from |V|: " + p);
      }
      report = call_json([&](char** o) {
        return fl_symmetrize(gamma.get(), perm_texts.empty() ? nullptr : flat.data(), perm_texts.size(), limits, o);
      });
      if (!out_path.empty()) {
        const Json doc{{"graph", call_json([&](char** o) { return fl_graph_to_json(g.get(), o); })},
                       {"values", report["values"]}};
        write_file(out_path, doc.dump() + "\n");
      }
    } else if (*bound) {
      command = "hypercube-bound";
      inputs = {{"n", n}, {"verify", !no_verify}};
      report = call_json([&](char** o) {
        return fl_hypercube_bound(n, no_verify ? 0 : 1, lower_a.empty() ? nullptr : lower_a.c_str(), limits, o);
      });
    } else if (*verify) {
      command = "verify-blue";
      inputs = {{"n", n}, {"method", method}};
      report = call_json([&](char** o) { return fl_verify_blue(n, method.c_str(), limits, o); });
    } else if (*fixtures) {
      command = "fixtures";
      inputs = {{"name", fixture_name.empty() ? Json("all") : Json(fixture_name)}};
      if (!fixture_name.empty()) {
        report = call_json([&](char** o) { return fl_fixture(fixture_name.c_str(), limits, o); });
      } else {
        const Json names = call_json([&](char** o) { return fl_fixture_names(o); });
        Json all = Json::array();
        bool pass = true;
        for (const auto& name : names) {
          const std::string s = name.get<std::string>();
          Json r = call_json([&](char** o) { return fl_fixture(s.c_str(), limits, o); });
          pass = pass && r["pass"].get<bool>();
          all.push_back(std::move(r));
        }
        report = Json{{"pass", pass}, {"fixtures", all}};
      }
      if (!report["pass"].get<bool>()) exit_code = 1;
    }
  } catch (const CliError& e) {
    std::cerr << Json{{"error", {{"code", e.status}, {"name", fl_status_name(e.status)}, {"message", e.message}}}}.dump()
              << "\n";
    return static_cast<int>(e.status);
  } catch (const std::exception& e) {
    std::cerr << Json{{"error", {{"code", FL_E_INTERNAL}, {"name", "internal"}, {"message", e.what()}}}}.dump() << "\n";
    return FL_E_INTERNAL;
  }

  Json full{{"command", command}, {"engine", std::string("forcelab ") + fl_version()}, {"inputs", inputs}};
  for (auto it = report.begin(); it != report.end(); ++it) full[it.key()] = it.value();
  if (opt.timing) {
    full["timing_seconds"] =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  }
  if (opt.output == "summary") {
    std::cout << summary_line(command, full) << "\n";
  } else {
    std::cout << full.dump(2) << "\n";
  }
  return exit_code;
}
