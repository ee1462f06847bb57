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
#include <doctest.h>

#include "forcelab/error.hpp"
#include "forcelab/fixtures.hpp"
#include "forcelab/json_io.hpp"

using namespace forcelab;

TEST_CASE("assignment JSON round trip") {
  const Graph g = FixtureGraphs::example14();
  const auto gamma = example14_gamma();
  const Json j = assignment_to_json(g, gamma);
  CHECK(j["values"][0] == "5/6");
  const auto back = assignment_from_json(Json::parse(j.dump()));
  CHECK(back.graph == g);
  CHECK(back.values == gamma);
}

TEST_CASE("values follow the listed edge order") {
  const Json j = Json::parse(R"({"graph": {"n": 3, "edges": [[1, 2], [0, 1]]}, "values": ["1/3", 2]})");
  const auto a = assignment_from_json(j);
  CHECK(a.values[0] == 2);
  CHECK(a.values[1] == Rational(1, 3));
}

TEST_CASE("malformed documents are parse errors") {
  auto code = [](const std::string& text) {
    try {
      assignment_from_json(parse_json_text(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kInternal;
  };
  CHECK(code("{") == ErrorCode::kParse);
  CHECK(code(R"({"graph": {"n": 2, "edges": [[0, 1]]}})") == ErrorCode::kParse);
  CHECK(code(R"({"graph": {"n": 2, "edges": [[0, 1]]}, "values": ["1/0"]})") == ErrorCode::kParse);
  CHECK(code(R"({"graph": {"n": 2, "edges": [[0, 1]]}, "values": ["-1"]})") == ErrorCode::kParse);
  CHECK(code(R"({"graph": {"n": 2, "edges": [[0, 1]]}, "values": [0.5]})") == ErrorCode::kParse);
  CHECK(code(R"({"graph": {"n": 2, "edges": [[0, 2]]}, "values": ["1"]})") == ErrorCode::kParse);
  CHECK(code(R"({"graph": {"n": 2, "edges": [[0, 1]]}, "values": ["1", "1"]})") == ErrorCode::kParse);
}

TEST_CASE("certificates serialize exactly") {
  const Graph g = cycle_graph(4);
  const auto u = EdgeAssignment::constant(g, Rational(1, 2));
  const Json unique = certificate_to_json(extension_unique(g, VertexWeights::ones(g), u, u));
  CHECK(unique["verdict"] == "Unique");
  CHECK(unique["maxima"] == Json::array({"1/2", "1/2", "1/2", "1/2"}));
  const Json open = certificate_to_json(extension_unique(g, VertexWeights::ones(g), EdgeAssignment::zeros(g), u));
  CHECK(open["verdict"] == "NotUnique");
  CHECK(open["witness"].size() == 4);
  const Json r = ff_result_to_json(fractional_forcing_number(g, u));
  CHECK(r["value"] == "1");
  CHECK(r["support"].size() == 2);
}

TEST_CASE("fixture reports are byte-stable") {
  for (const auto& name : fixture_names()) {
    const Json a = run_fixture(name);
    CHECK(a["pass"] == true);
    CHECK(a.dump() == run_fixture(name).dump());
  }
}
