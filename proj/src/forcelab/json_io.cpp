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
#include "forcelab/json_io.hpp"

#include <algorithm>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) fail(ErrorCode::kParse, std::string("missing key \"") + key + "\"");
  return j.at(key);
}

int int_value(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(ErrorCode::kParse, std::string(what) + " must be an integer");
  return j.get<int>();
}

}  // namespace

Json rational_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  fail(ErrorCode::kParse, "rational must be a \"p/q\" string or an integer");
}

Json graph_to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.u, e.v});
  return Json{{"n", g.vertex_count()}, {"edges", edges}};
}

Graph graph_from_json(const Json& j) {
  const int n = int_value(member(j, "n"), "n");
  const Json& edges = member(j, "edges");
  if (!edges.is_array()) fail(ErrorCode::kParse, "edges must be an array");
  std::vector<std::pair<int, int>> pairs;
  for (const Json& e : edges) {
    if (!e.is_array() || e.size() != 2) fail(ErrorCode::kParse, "each edge must be a pair");
    pairs.emplace_back(int_value(e[0], "endpoint"), int_value(e[1], "endpoint"));
  }
  try {
    return Graph::make(n, pairs);
  } catch (const Error& err) {
    fail(ErrorCode::kParse, err.what());
  }
}

Json values_json(const EdgeAssignment& w) {
  Json out = Json::array();
  for (const auto& v : w.values()) out.push_back(rational_json(v));
  return out;
}

Json assignment_to_json(const Graph& g, const EdgeAssignment& w) {
  require_on_graph(g, w, "assignment");
  return Json{{"graph", graph_to_json(g)}, {"values", values_json(w)}};
}

EdgeAssignment values_from_json(const Graph& g, const Json& values) {
  if (!values.is_array() || static_cast<int>(values.size()) != g.edge_count()) {
    fail(ErrorCode::kParse, "values must list one rational per edge");
  }
  std::vector<Rational> out(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = rational_from_json(values[i]);
    if (sgn(out[i]) < 0) fail(ErrorCode::kParse, "negative value at position " + std::to_string(i));
  }
  return EdgeAssignment(std::move(out));
}

GraphAssignment assignment_from_json(const Json& j) {
  const Json& gj = member(j, "graph");
  Graph g = graph_from_json(gj);
  const Json& values = member(j, "values");
  if (!values.is_array() || values.size() != gj.at("edges").size()) {
    fail(ErrorCode::kParse, "values must list one rational per edge");
  }
  std::vector<Rational> out(values.size());
  const Json& edges = gj.at("edges");
  for (std::size_t i = 0; i < values.size(); ++i) {
    const EdgeId e = *g.edge_index(edges[i][0].get<int>(), edges[i][1].get<int>());
    out[static_cast<std::size_t>(e)] = rational_from_json(values[i]);
    if (sgn(out[static_cast<std::size_t>(e)]) < 0) {
      fail(ErrorCode::kParse, "negative value at position " + std::to_string(i));
    }
  }
  return GraphAssignment{std::move(g), EdgeAssignment(std::move(out))};
}

Json edge_set_json(const EdgeSet& s) {
  EdgeSet sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return Json(sorted);
}

EdgeSet edge_set_from_json(const Graph& g, const Json& j) {
  if (!j.is_array()) fail(ErrorCode::kParse, "edge set must be an array");
  EdgeSet out;
  for (const Json& e : j) {
    const int id = int_value(e, "edge index");
    if (id < 0 || id >= g.edge_count()) fail(ErrorCode::kParse, "edge index out of range: " + std::to_string(id));
    out.push_back(id);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json certificate_to_json(const ForcingCertificate& cert) {
  Json out{{"verdict", cert.unique() ? "Unique" : "NotUnique"}};
  if (cert.unique()) {
    Json maxima = Json::array();
    for (const auto& m : cert.maxima) maxima.push_back(rational_json(m));
    out["maxima"] = maxima;
  } else if (cert.witness) {
    out["witness"] = values_json(*cert.witness);
  }
  return out;
}

Json ff_result_to_json(const FFResult& r) {
  return Json{{"value", rational_json(r.value)},
              {"support", edge_set_json(r.support)},
              {"alpha", values_json(r.alpha)},
              {"method", r.method},
              {"certificate", certificate_to_json(r.certificate)}};
}

Json vertex_structure_to_json(const PolytopeVertexStructure& s) {
  Json cycles = Json::array();
  for (const auto& c : s.odd_cycles) cycles.push_back(Json{{"vertices", c.vertices}, {"edges", edge_set_json(c.edges)}});
  const char* status = s.status == ExtremeStatus::kConfirmed   ? "confirmed"
                       : s.status == ExtremeStatus::kRejected ? "rejected"
                                                              : "candidate";
  return Json{{"matching_edges", edge_set_json(s.matching_edges)},
              {"odd_cycles", cycles},
              {"values", values_json(s.assignment)},
              {"status", status}};
}

Json forcing_stats_to_json(const ForcingStats& s, bool include_table) {
  Json out{{"f", s.f}, {"F", s.F}, {"spectrum", s.spectrum}, {"matching_count", s.table.size()}};
  if (include_table) {
    Json table = Json::array();
    for (const auto& [m, number] : s.table) {
      table.push_back(Json{{"matching", edge_set_json(m)},
                           {"forcing_number", number.value},
                           {"forcing_set", edge_set_json(number.forcing_set)}});
    }
    out["table"] = table;
  }
  return out;
}

Json blue_verification_to_json(const BlueVerification& v) {
  Json out{{"n", v.n}, {"method", method_name(v.method)}, {"verified", v.verified}};
  if (v.certificate) out["certificate"] = certificate_to_json(*v.certificate);
  if (v.method == BlueMethod::kCycles) out["cycles_checked"] = v.cycles_checked;
  if (v.unhit_cycle) {
    out["unhit_cycle"] = Json{{"vertices", v.unhit_cycle->vertices}, {"edges", v.unhit_cycle->edges}};
  }
  return out;
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    fail(ErrorCode::kParse, std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace forcelab
