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
#include "forcelab/fixtures.hpp"

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

EdgeAssignment by_pairs(const Graph& g, std::initializer_list<std::tuple<int, int, Rational>> entries) {
  EdgeAssignment w = EdgeAssignment::zeros(g);
  for (const auto& [u, v, value] : entries) w = w.with_value(*g.edge_index(u, v), value);
  return w;
}

// Ladder labels: top row T0..T3 is 0..3, bottom row B0..B3 is 4..7.
constexpr int T0 = 0, T1 = 1, T2 = 2, T3 = 3, B0 = 4, B1 = 5, B2 = 6, B3 = 7;

class Checks {
 public:
  void add(const std::string& name, const Json& expected, const Json& actual) {
    const bool pass = expected == actual;
    all_ = all_ && pass;
    list_.push_back(Json{{"name", name}, {"expected", expected}, {"actual", actual}, {"pass", pass}});
  }
  void finish(Json& out) const {
    out["checks"] = list_;
    out["pass"] = all_;
  }

 private:
  Json list_ = Json::array();
  bool all_ = true;
};

Json example14(const Limits&) {
  const Graph g = FixtureGraphs::example14();
  const auto parts = example14_parts();
  const EdgeAssignment gamma = example14_gamma();
  const EdgeAssignment alpha = example14_alpha();
  Checks checks;
  checks.add("parts_combine_to_gamma", true, convex_combination(parts) == gamma);
  const bool minimal = is_minimal_forcing(g, VertexWeights::ones(g), alpha, gamma);
  checks.add("alpha_minimal_forcing", true, minimal);
  Json out{{"fixture", "example14"}, {"alpha_total", rational_json(total_weight(alpha))}};
  if (minimal) {
    const auto pieces = decompose_forcing_function(g, alpha, gamma, parts);
    Json alphas = Json::array();
    Json forcing = Json::array();
    Json minimal_flags = Json::array();
    std::vector<WeightedPart> weighted;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      alphas.push_back(values_json(pieces[i].alpha));
      forcing.push_back(pieces[i].certificate.unique());
      minimal_flags.push_back(pieces[i].minimal);
      weighted.push_back({pieces[i].alpha, parts[i].lambda});
    }
    out["alphas"] = alphas;
    out["alpha_forcing"] = forcing;
    out["alpha_minimal"] = minimal_flags;
    checks.add("pieces_recombine_to_alpha", true, convex_combination(weighted) == alpha);
    checks.add("each_piece_forces", Json::array({true, true, true}), forcing);
    checks.add("alpha1_minimal", false, minimal_flags[0]);
    const EdgeAssignment expected1 = by_pairs(g, {{T1, T2, Rational(1)}, {T3, B3, Rational(1)}});
    checks.add("alpha1_values", values_json(expected1), alphas[0]);
  }
  checks.finish(out);
  return out;
}

Json example18(const Limits& limits) {
  const Graph g = FixtureGraphs::example18();
  const auto stats = graph_forcing_stats(g, limits);
  const auto pictured = fractional_forcing_number(g, example18_gamma(), limits);
  const auto ff_min = graph_ff_min(g, limits);
  Json out{{"fixture", "example18"},
           {"f", stats.f},
           {"matching_count", stats.table.size()},
           {"ff", rational_json(pictured.value)},
           {"ff_min", rational_json(ff_min.value)}};
  Checks checks;
  checks.add("f", 1, stats.f);
  checks.add("ff_pictured", "1/2", out["ff"]);
  checks.add("ff_min", "1/2", out["ff_min"]);
  checks.finish(out);
  return out;
}

Json example19(const Limits& limits) {
  const Graph g = FixtureGraphs::example19();
  const auto stats = graph_forcing_stats(g, limits);
  const auto ff_min = graph_ff_min(g, limits);
  const auto cert = extension_unique(g, VertexWeights::ones(g), example19_alpha(), example19_triangles());
  Json out{{"fixture", "example19"},
           {"f", stats.f},
           {"matching_count", stats.table.size()},
           {"ff_min", rational_json(ff_min.value)},
           {"alpha_certificate", certificate_to_json(cert)}};
  Checks checks;
  checks.add("f", 0, stats.f);
  checks.add("unique_perfect_matching", 1, stats.table.size());
  checks.add("ff_min", "1/2", out["ff_min"]);
  checks.add("alpha_forces_triangles", true, cert.unique());
  checks.finish(out);
  return out;
}

Json hypercube_fixture(int n, const Limits& limits) {
  const Graph g = hypercube(n, limits);
  const auto stats = graph_forcing_stats(g, limits);
  Json out{{"fixture", "q" + std::to_string(n)}, {"f", stats.f}, {"F", stats.F}, {"matching_count", stats.table.size()}};
  Checks checks;
  checks.add("f", 1 << (n - 2), stats.f);
  if (n == 3) checks.add("matching_count", 9, stats.table.size());
  if (n == 4) {
    checks.add("matching_count", 272, stats.table.size());
    const BlueSet blue = base_blue_set();
    const auto lp = verify_blue_set(4, BlueMethod::kLp, limits);
    const auto cycles = verify_blue_set(4, BlueMethod::kCycles, limits);
    const Rational certified = Rational(static_cast<long>(blue.blue.size()), 4);
    out["blue_size"] = blue.blue.size();
    out["red_size"] = blue.red.size();
    out["ff_upper"] = rational_json(ff_upper_bound(4));
    out["forcing_upper"] = forcing_upper_bound(4).get_si();
    out["ff_uniform_certified"] = rational_json(certified);
    checks.add("blue_size", 22, blue.blue.size());
    checks.add("red_size", 10, blue.red.size());
    checks.add("verified_lp", true, lp.verified);
    checks.add("verified_cycles", true, cycles.verified);
    checks.add("ff_upper", "11/2", out["ff_upper"]);
    checks.add("certified_within_bound", true, certified <= ff_upper_bound(4));
    checks.add("F_within_bound", true, stats.F <= forcing_upper_bound(4));
  }
  checks.finish(out);
  return out;
}

}  // namespace

Graph FixtureGraphs::example14() { return cartesian_product(path_graph(2), path_graph(4)); }

Graph FixtureGraphs::example18() {
  return Graph::make(10, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {4, 7}, {5, 6}, {6, 7}, {7, 8}, {7, 9}, {8, 9}});
}

Graph FixtureGraphs::example19() { return Graph::make(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}}); }

EdgeAssignment example14_gamma() {
  const Graph g = FixtureGraphs::example14();
  const Rational big(5, 6), small(1, 12), end(1, 6);
  return by_pairs(g, {{T0, T1, big}, {B0, B1, big}, {T2, T3, big}, {B2, B3, big},
                      {T1, T2, small}, {B1, B2, small}, {T1, B1, small}, {T2, B2, small},
                      {T0, B0, end}, {T3, B3, end}});
}

std::vector<WeightedPart> example14_parts() {
  const Graph g = FixtureGraphs::example14();
  const Rational one(1);
  return {
      {by_pairs(g, {{T0, B0, one}, {T1, T2, one}, {B1, B2, one}, {T3, B3, one}}), Rational(1, 12)},
      {by_pairs(g, {{T0, T1, one}, {B0, B1, one}, {T2, T3, one}, {B2, B3, one}}), Rational(5, 6)},
      {by_pairs(g, {{T0, B0, one}, {T1, B1, one}, {T2, B2, one}, {T3, B3, one}}), Rational(1, 12)},
  };
}

EdgeAssignment example14_alpha() {
  const Graph g = FixtureGraphs::example14();
  return by_pairs(g, {{T0, T1, Rational(5, 6)}, {T1, T2, Rational(1, 12)}, {T1, B1, Rational(1, 12)},
                      {B2, B3, Rational(5, 6)}, {T3, B3, Rational(1, 6)}});
}

EdgeAssignment example18_gamma() {
  const Graph g = FixtureGraphs::example18();
  const Rational half(1, 2), one(1);
  return by_pairs(g, {{0, 1, half}, {0, 2, half}, {1, 2, half}, {7, 8, half}, {7, 9, half}, {8, 9, half},
                      {3, 4, one}, {5, 6, one}});
}

EdgeAssignment example19_triangles() {
  const Graph g = FixtureGraphs::example19();
  const Rational half(1, 2);
  return by_pairs(g, {{0, 1, half}, {0, 2, half}, {1, 2, half}, {3, 4, half}, {3, 5, half}, {4, 5, half}});
}

EdgeAssignment example19_alpha() {
  const Graph g = FixtureGraphs::example19();
  return by_pairs(g, {{1, 2, Rational(1, 2)}});
}

std::vector<std::string> fixture_names() { return {"example14", "example18", "example19", "q3", "q4"}; }

Json run_fixture(const std::string& name, const Limits& limits) {
  if (name == "example14") return example14(limits);
  if (name == "example18") return example18(limits);
  if (name == "example19") return example19(limits);
  if (name == "q3") return hypercube_fixture(3, limits);
  if (name == "q4") return hypercube_fixture(4, limits);
  fail(ErrorCode::kInvalidArgument, "unknown fixture: " + name);
}

}  // namespace forcelab
