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
#include "forcelab/forcelab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "forcelab/error.hpp"
#include "forcelab/fixtures.hpp"

struct fl_graph {
  forcelab::Graph graph;
};

struct fl_assignment {
  forcelab::Graph graph;
  forcelab::EdgeAssignment values;
};

namespace {

using namespace forcelab;

thread_local std::string last_error;

template <typename Body>
fl_status guarded(Body&& body) {
  try {
    body();
    last_error.clear();
    return FL_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return static_cast<fl_status>(static_cast<int>(e.code()));
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return FL_E_INTERNAL;
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::kInvalidArgument, std::string(what) + " is null");
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  require(out, "out");
  *out = duplicate(j.dump());
}

Limits to_limits(const fl_limits* limits) {
  Limits l;
  if (limits == nullptr) return l;
  l.max_hypercube_n = limits->max_hypercube_n;
  l.max_cycle_edges = limits->max_cycle_edges;
  l.max_cycles = limits->max_cycles;
  l.max_matchings = limits->max_matchings;
  l.max_automorphism_vertices = limits->max_automorphism_vertices;
  l.max_vertex_structures = limits->max_vertex_structures;
  l.max_support_edges = limits->max_support_edges;
  l.max_blue_n = limits->max_blue_n;
  l.max_lp_blue_n = limits->max_lp_blue_n;
  return l;
}

EdgeSet edge_list(const Graph& g, const int* ids, std::size_t count, const char* what) {
  if (count > 0) require(ids, what);
  EdgeSet out;
  for (std::size_t i = 0; i < count; ++i) {
    if (ids[i] < 0 || ids[i] >= g.edge_count()) {
      fail(ErrorCode::kInvalidArgument, std::string(what) + " has edge index out of range: " + std::to_string(ids[i]));
    }
    out.push_back(ids[i]);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void same_graph(const fl_assignment* a, const fl_assignment* b) {
  if (!(a->graph == b->graph)) fail(ErrorCode::kInvalidArgument, "assignments are on different graphs");
}

Graph regular_checked(const Graph& g) {
  if (g.vertex_count() == 0 || g.degree(0) == 0) fail(ErrorCode::kPrecondition, "graph has no edges");
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) fail(ErrorCode::kPrecondition, "graph is not regular");
  }
  return g;
}

}  // namespace

extern "C" {

FL_API const char* fl_version(void) { return "1.0.0"; }

FL_API const char* fl_status_name(fl_status status) {
  if (status == FL_OK) return "ok";
  return error_code_name(static_cast<ErrorCode>(status));
}

FL_API const char* fl_last_error(void) { return last_error.c_str(); }

FL_API void fl_string_free(char* s) { std::free(s); }

FL_API void fl_limits_default(fl_limits* limits) {
  if (limits == nullptr) return;
  const Limits l;
  limits->max_hypercube_n = l.max_hypercube_n;
  limits->max_cycle_edges = l.max_cycle_edges;
  limits->max_cycles = l.max_cycles;
  limits->max_matchings = l.max_matchings;
  limits->max_automorphism_vertices = l.max_automorphism_vertices;
  limits->max_vertex_structures = l.max_vertex_structures;
  limits->max_support_edges = l.max_support_edges;
  limits->max_blue_n = l.max_blue_n;
  limits->max_lp_blue_n = l.max_lp_blue_n;
}

FL_API fl_status fl_graph_generate(const char* family, int n, int m, const fl_limits* limits, fl_graph** out) {
  return guarded([&] {
    require(family, "family");
    require(out, "out");
    const std::string f = family;
    Graph g;
    if (f == "hypercube") {
      g = hypercube(n, to_limits(limits));
    } else if (f == "cycle") {
      g = cycle_graph(n);
    } else if (f == "path") {
      g = path_graph(n);
    } else if (f == "complete") {
      g = complete_graph(n);
    } else if (f == "grid") {
      g = cartesian_product(path_graph(n), path_graph(m));
    } else if (f == "example14") {
      g = FixtureGraphs::example14();
    } else if (f == "example18") {
      g = FixtureGraphs::example18();
    } else if (f == "example19") {
      g = FixtureGraphs::example19();
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown family: " + f);
    }
    *out = new fl_graph{std::move(g)};
  });
}

FL_API fl_status fl_graph_from_text(const char* text, fl_graph** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new fl_graph{parse_graph_text(text)};
  });
}

FL_API fl_status fl_graph_to_text(const fl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    *out = duplicate(to_graph_text(g->graph));
  });
}

FL_API fl_status fl_graph_to_json(const fl_graph* g, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(graph_to_json(g->graph), out);
  });
}

FL_API int fl_graph_vertex_count(const fl_graph* g) { return g == nullptr ? -1 : g->graph.vertex_count(); }

FL_API int fl_graph_edge_count(const fl_graph* g) { return g == nullptr ? -1 : g->graph.edge_count(); }

FL_API void fl_graph_free(fl_graph* g) { delete g; }

FL_API fl_status fl_assignment_from_json(const char* json, fl_assignment** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto parsed = assignment_from_json(parse_json_text(json));
    *out = new fl_assignment{std::move(parsed.graph), std::move(parsed.values)};
  });
}

FL_API fl_status fl_assignment_uniform(const fl_graph* g, fl_assignment** out) {
  return guarded([&] {
    require(g, "graph");
    require(out, "out");
    const Graph r = regular_checked(g->graph);
    *out = new fl_assignment{r, EdgeAssignment::constant(r, Rational(1, r.degree(0)))};
  });
}

FL_API fl_status fl_assignment_to_json(const fl_assignment* a, char** out) {
  return guarded([&] {
    require(a, "assignment");
    emit(assignment_to_json(a->graph, a->values), out);
  });
}

FL_API fl_status fl_assignment_graph(const fl_assignment* a, fl_graph** out) {
  return guarded([&] {
    require(a, "assignment");
    require(out, "out");
    *out = new fl_graph{a->graph};
  });
}

FL_API void fl_assignment_free(fl_assignment* a) { delete a; }

FL_API fl_status fl_perfect_matchings(const fl_graph* g, const fl_limits* limits, char** out) {
  return guarded([&] {
    require(g, "graph");
    const auto matchings = enumerate_perfect_matchings(g->graph, to_limits(limits));
    Json list = Json::array();
    for (const auto& m : matchings) list.push_back(edge_set_json(m));
    emit(Json{{"count", matchings.size()}, {"matchings", list}}, out);
  });
}

FL_API fl_status fl_forcing_stats(const fl_graph* g, int include_table, const fl_limits* limits, char** out) {
  return guarded([&] {
    require(g, "graph");
    emit(forcing_stats_to_json(graph_forcing_stats(g->graph, to_limits(limits)), include_table != 0), out);
  });
}

FL_API fl_status fl_forcing_number(const fl_graph* g, const int* matching, size_t matching_size,
                                   const fl_limits* limits, char** out) {
  return guarded([&] {
    require(g, "graph");
    const EdgeSet m = edge_list(g->graph, matching, matching_size, "matching");
    const auto number = forcing_number(g->graph, m, to_limits(limits));
    emit(Json{{"matching", edge_set_json(m)},
              {"forcing_number", number.value},
              {"forcing_set", edge_set_json(number.forcing_set)}},
         out);
  });
}

FL_API fl_status fl_check_forcing_set(const fl_graph* g, const int* matching, size_t matching_size, const int* set,
                                      size_t set_size, char** out) {
  return guarded([&] {
    require(g, "graph");
    const EdgeSet m = edge_list(g->graph, matching, matching_size, "matching");
    const EdgeSet s = edge_list(g->graph, set, set_size, "set");
    const auto check = is_forcing_set(g->graph, m, s);
    Json j{{"matching", edge_set_json(m)}, {"set", edge_set_json(s)}, {"forcing", check.forcing}};
    if (check.witness) j["witness"] = edge_set_json(*check.witness);
    emit(j, out);
  });
}

FL_API fl_status fl_fractional_forcing(const fl_assignment* gamma, const char* method, const fl_limits* limits,
                                       char** out) {
  return guarded([&] {
    require(gamma, "gamma");
    const std::string m = method == nullptr ? "auto" : method;
    SupportSearch search = SupportSearch::kAuto;
    if (m == "cycles") {
      search = SupportSearch::kCycleCriterion;
    } else if (m == "lp") {
      search = SupportSearch::kConeLp;
    } else if (m != "auto") {
      fail(ErrorCode::kInvalidArgument, "unknown method: " + m);
    }
    if (!is_fractional_perfect_matching(gamma->graph, gamma->values)) {
      fail(ErrorCode::kPrecondition, "gamma is not a fractional perfect matching");
    }
    emit(ff_result_to_json(fractional_forcing_number(gamma->graph, gamma->values, to_limits(limits), search)), out);
  });
}

FL_API fl_status fl_graph_ff(const fl_graph* g, const char* mode, const fl_limits* limits, char** out) {
  return guarded([&] {
    require(g, "graph");
    require(mode, "mode");
    const std::string m = mode;
    const Limits l = to_limits(limits);
    if (m == "min") {
      const auto r = graph_ff_min(g->graph, l);
      emit(Json{{"value", rational_json(r.value)},
                {"minimizer", vertex_structure_to_json(r.minimizer)},
                {"detail", ff_result_to_json(r.detail)},
                {"vertices_examined", r.vertices_examined}},
           out);
    } else if (m == "max-exact" || m == "max-bound") {
      const auto r = graph_ff_max(g->graph, m == "max-exact" ? MaxMode::kExactTransitive : MaxMode::kVertexLowerBound, l);
      emit(Json{{"value", rational_json(r.value)},
                {"exact", r.exact},
                {"point", values_json(r.point)},
                {"detail", ff_result_to_json(r.detail)},
                {"probes", r.probes}},
           out);
    } else if (m == "spectrum") {
      const auto r = fractional_spectrum(g->graph, l);
      emit(Json{{"low", rational_json(r.low)}, {"high", rational_json(r.high)}, {"high_exact", r.high_exact}}, out);
    } else {
      fail(ErrorCode::kInvalidArgument, "unknown mode: " + m);
    }
  });
}

FL_API fl_status fl_check_forcing_function(const fl_assignment* alpha, const fl_assignment* gamma, char** out) {
  return guarded([&] {
    require(alpha, "alpha");
    require(gamma, "gamma");
    same_graph(alpha, gamma);
    const Graph& g = gamma->graph;
    const VertexWeights ones = VertexWeights::ones(g);
    const auto cert = extension_unique(g, ones, alpha->values, gamma->values);
    const bool minimal = cert.unique() && is_minimal_forcing(g, ones, alpha->values, gamma->values);
    emit(Json{{"forcing", cert.unique()},
              {"minimal", minimal},
              {"total", rational_json(total_weight(alpha->values))},
              {"certificate", certificate_to_json(cert)}},
         out);
  });
}

FL_API fl_status fl_criterion(const fl_assignment* gamma, const int* set, size_t set_size, const fl_limits* limits,
                              char** out) {
  return guarded([&] {
    require(gamma, "gamma");
    const Graph& g = gamma->graph;
    const EdgeSet s = edge_list(g, set, set_size, "set");
    if (!is_fractional_perfect_matching(g, gamma->values)) {
      fail(ErrorCode::kPrecondition, "gamma is not a fractional perfect matching");
    }
    const bool holds = bipartite_support_criterion(g, gamma->values, s, to_limits(limits));
    emit(Json{{"set", edge_set_json(s)}, {"criterion", holds}}, out);
  });
}

FL_API fl_status fl_decompose(const fl_assignment* alpha, const fl_assignment* gamma,
                              const fl_assignment* const* parts, const char* const* lambdas, size_t part_count,
                              char** out) {
  return guarded([&] {
    require(alpha, "alpha");
    require(gamma, "gamma");
    same_graph(alpha, gamma);
    if (part_count > 0) {
      require(parts, "parts");
      require(lambdas, "lambdas");
    }
    std::vector<WeightedPart> weighted;
    for (std::size_t i = 0; i < part_count; ++i) {
      require(parts[i], "part");
      require(lambdas[i], "lambda");
      same_graph(parts[i], gamma);
      weighted.push_back({parts[i]->values, parse_rational(lambdas[i])});
    }
    const auto pieces = decompose_forcing_function(gamma->graph, alpha->values, gamma->values, weighted);
    Json list = Json::array();
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      list.push_back(Json{{"lambda", rational_json(weighted[i].lambda)},
                          {"alpha", values_json(pieces[i].alpha)},
                          {"forcing", pieces[i].certificate.unique()},
                          {"minimal", pieces[i].minimal},
                          {"certificate", certificate_to_json(pieces[i].certificate)}});
    }
    emit(Json{{"parts", list}, {"recombines", true}}, out);
  });
}

FL_API fl_status fl_symmetrize(const fl_assignment* gamma, const int* perms, size_t perm_count,
                               const fl_limits* limits, char** out) {
  return guarded([&] {
    require(gamma, "gamma");
    const Graph& g = gamma->graph;
    std::vector<Automorphism> autos;
    bool full_group = perms == nullptr;
    if (full_group) {
      const auto group = automorphism_group(g, to_limits(limits));
      if (group.attested) {
        fail(ErrorCode::kCapExceeded, "automorphism group too large to list; pass explicit permutations");
      }
      autos = group.elements;
    } else {
      const auto n = static_cast<std::size_t>(g.vertex_count());
      for (std::size_t k = 0; k < perm_count; ++k) {
        Automorphism a;
        a.vertex_perm.assign(perms + k * n, perms + (k + 1) * n);
        autos.push_back(std::move(a));
      }
    }
    const EdgeAssignment sym = symmetrized_fpm(g, gamma->values, autos);
    emit(Json{{"values", values_json(sym)},
              {"group_size", autos.size()},
              {"full_group", full_group},
              {"fractional_perfect_matching", is_fractional_perfect_matching(g, sym)}},
         out);
  });
}

FL_API fl_status fl_hypercube_bound(int n, int verify, const char* lower_a, const fl_limits* limits, char** out) {
  return guarded([&] {
    const Limits l = to_limits(limits);
    Json j{{"n", n},
           {"ff_upper", rational_json(ff_upper_bound(n))},
           {"forcing_upper", Json::parse(forcing_upper_bound(n).get_str())}};
    if (n <= l.max_blue_n) {
      const BlueSet blue = build_blue_set(n, l);
      j["blue_size"] = blue.blue.size();
      j["red_size"] = blue.red.size();
    } else {
      j["blue_size"] = nullptr;
      j["red_size"] = nullptr;
    }
    if (verify != 0 && n <= l.max_lp_blue_n) {
      j["verified"] = verify_blue_set(n, BlueMethod::kLp, l).verified;
      j["method"] = "lp";
    } else {
      j["verified"] = false;
      j["method"] = "none";
    }
    if (lower_a != nullptr) {
      j["reported_lower"] = rational_json(reported_lower_bound(n, parse_rational(lower_a)));
      j["reported_lower_note"] = "literature value, not constructive here";
    }
    emit(j, out);
  });
}

FL_API fl_status fl_verify_blue(int n, const char* method, const fl_limits* limits, char** out) {
  return guarded([&] {
    require(method, "method");
    emit(blue_verification_to_json(verify_blue_set(n, parse_blue_method(method), to_limits(limits))), out);
  });
}

FL_API fl_status fl_fixture(const char* name, const fl_limits* limits, char** out) {
  return guarded([&] {
    require(name, "name");
    emit(run_fixture(name, to_limits(limits)), out);
  });
}

FL_API fl_status fl_fixture_names(char** out) {
  return guarded([&] { emit(Json(fixture_names()), out); });
}

}  // extern "C"
