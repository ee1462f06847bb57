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
#ifndef FORCELAB_JSON_IO_HPP_
#define FORCELAB_JSON_IO_HPP_

#include <string>
#include <utility>

#include <json.hpp>

#include "forcelab/forcing_fractional.hpp"
#include "forcelab/forcing_integral.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/hypercube.hpp"
#include "forcelab/matching.hpp"

namespace forcelab {

using Json = nlohmann::json;

Json rational_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

struct GraphAssignment {
  Graph graph;
  EdgeAssignment values;
};

// {"graph": {"n", "edges"}, "values": [...]}; values follow the listed edge
// order and are re-indexed onto the sorted edge ids.
Json assignment_to_json(const Graph& g, const EdgeAssignment& w);
GraphAssignment assignment_from_json(const Json& j);
EdgeAssignment values_from_json(const Graph& g, const Json& values);
Json values_json(const EdgeAssignment& w);

Json edge_set_json(const EdgeSet& s);
EdgeSet edge_set_from_json(const Graph& g, const Json& j);

Json certificate_to_json(const ForcingCertificate& cert);
Json ff_result_to_json(const FFResult& r);
Json vertex_structure_to_json(const PolytopeVertexStructure& s);
Json forcing_stats_to_json(const ForcingStats& s, bool include_table);
Json blue_verification_to_json(const BlueVerification& v);

// Parses text and converts library exceptions to Error(kParse).
Json parse_json_text(const std::string& text);

}  // namespace forcelab

#endif  // FORCELAB_JSON_IO_HPP_
