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

#include <random>

#include "forcelab/error.hpp"
#include "forcelab/matching.hpp"
#include "oracles.hpp"

using namespace forcelab;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational("0/5")) == "0");
  for (const char* bad : {"", "1/0", "a", "1/2/3", " 1", "1.5", "+"}) {
    CHECK_THROWS_AS(parse_rational(bad), Error);
  }
  CHECK(is_half_integer(Rational(3, 2)));
  CHECK_FALSE(is_half_integer(Rational(1, 3)));
}

TEST_CASE("assignments reject negative values") {
  CHECK_THROWS_AS(EdgeAssignment(std::vector<Rational>{1, -1}), Error);
  const Graph g = cycle_graph(4);
  const auto half = EdgeAssignment::constant(g, Rational(1, 2));
  CHECK(total_weight(half) == 2);
  CHECK(support(half.with_value(1, 0)) == EdgeSet{0, 2, 3});
  CHECK(leq(half.with_value(0, 0), half));
  CHECK_FALSE(leq(half, half.with_value(0, 0)));
  CHECK(assignment_distance(half, EdgeAssignment::zeros(g)) == 2);
  CHECK_THROWS_AS(leq(half, EdgeAssignment::zeros(path_graph(3))), Error);
}

TEST_CASE("g-factor classification") {
  const Graph g = cycle_graph(4);
  const VertexWeights ones = VertexWeights::ones(g);
  CHECK(classify_g_factor(g, ones, EdgeAssignment::constant(g, Rational(1, 2))).kind == GFactorVerdict::Kind::kFull);
  CHECK(classify_g_factor(g, ones, EdgeAssignment::constant(g, Rational(1, 4))).kind == GFactorVerdict::Kind::kPartial);
  const auto bad = classify_g_factor(g, ones, EdgeAssignment::constant(g, 1));
  CHECK(bad.kind == GFactorVerdict::Kind::kInvalid);
  CHECK(bad.sum == 2);
  const VertexWeights twos(std::vector<Rational>(4, Rational(2)));
  CHECK(classify_g_factor(g, twos, EdgeAssignment::constant(g, 1)).kind == GFactorVerdict::Kind::kFull);
  CHECK(is_fractional_perfect_matching(g, EdgeAssignment::indicator(g, EdgeSet{0, 3})));
}

TEST_CASE("convex combinations are exact") {
  const Graph g = cycle_graph(4);
  const auto m1 = EdgeAssignment::indicator(g, EdgeSet{0, 3});
  const auto m2 = EdgeAssignment::indicator(g, EdgeSet{1, 2});
  const std::vector<WeightedPart> parts = {{m1, Rational(1, 3)}, {m2, Rational(2, 3)}};
  const auto c = convex_combination(parts);
  CHECK(c[0] == Rational(1, 3));
  CHECK(c[1] == Rational(2, 3));
  const std::vector<WeightedPart> short_sum = {{m1, Rational(1, 3)}};
  CHECK_THROWS_AS(convex_combination(short_sum), Error);
}

TEST_CASE("perfect matching enumeration agrees with the edge-branching oracle") {
  std::vector<Graph> graphs = {hypercube(3), hypercube(4), complete_graph(6), cycle_graph(8), cycle_graph(7),
                               cartesian_product(path_graph(2), path_graph(4))};
  std::mt19937_64 rng(11);
  for (int t = 0; t < 40; ++t) graphs.push_back(oracle::random_graph(8, 0.45, rng));
  for (const Graph& g : graphs) {
    const auto ours = enumerate_perfect_matchings(g);
    CHECK(ours == oracle::perfect_matchings(g));
    CHECK(ours.size() == oracle::count_perfect_matchings(g));
    for (const auto& m : ours) CHECK(is_perfect_matching(g, m));
  }
  CHECK(enumerate_perfect_matchings(hypercube(3)).size() == 9);
  CHECK(enumerate_perfect_matchings(hypercube(4)).size() == 272);
  CHECK(enumerate_perfect_matchings(complete_graph(6)).size() == 15);
}

TEST_CASE("matching enumeration honours its cap") {
  Limits tight;
  tight.max_matchings = 100;
  CHECK_THROWS_AS(enumerate_perfect_matchings(hypercube(4), tight), Error);
  CHECK(perfect_matchings_containing(hypercube(4), EdgeSet{}, 2).size() == 2);
  const Graph g = hypercube(3);
  const auto all = enumerate_perfect_matchings(g);
  const auto with0 = perfect_matchings_containing(g, EdgeSet{0}, 100);
  std::size_t expected = 0;
  for (const auto& m : all) expected += std::binary_search(m.begin(), m.end(), 0) ? 1 : 0;
  CHECK(with0.size() == expected);
  CHECK(perfect_matchings_containing(g, EdgeSet{0, 1}, 100).empty());
}

TEST_CASE("polytope vertices: matchings plus half odd cycles") {
  const Graph k4 = complete_graph(4);
  CHECK(is_polytope_vertex(k4, EdgeAssignment::indicator(k4, enumerate_perfect_matchings(k4).front())));
  CHECK_FALSE(is_polytope_vertex(k4, EdgeAssignment::constant(k4, Rational(1, 3))));
  const Graph two_triangles = Graph::make(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
  CHECK(is_polytope_vertex(two_triangles, EdgeAssignment::constant(two_triangles, Rational(1, 2))));
  CHECK_FALSE(is_polytope_vertex(cycle_graph(4), EdgeAssignment::constant(cycle_graph(4), Rational(1, 2))));

  const auto k4v = enumerate_fpm_vertex_candidates(k4);
  CHECK(k4v.size() == 3);
  const auto c5 = enumerate_fpm_vertex_candidates(cycle_graph(5));
  REQUIRE(c5.size() == 1);
  CHECK(c5[0].odd_cycles.size() == 1);
  CHECK(c5[0].status == ExtremeStatus::kConfirmed);
}

TEST_CASE("vertex structures match the basic-solution oracle") {
  std::mt19937_64 rng(5);
  std::vector<Graph> graphs = {complete_graph(4), complete_graph(6), cycle_graph(6),
                               Graph::make(6, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {4, 5}})};
  for (int t = 0; t < 25; ++t) graphs.push_back(oracle::random_graph(6, 0.5, rng));
  for (const Graph& g : graphs) {
    if (g.edge_count() == 0) continue;
    std::vector<std::vector<Rational>> ours;
    for (const auto& s : enumerate_fpm_vertex_candidates(g)) {
      CHECK(s.status == ExtremeStatus::kConfirmed);
      ours.emplace_back(s.assignment.values().begin(), s.assignment.values().end());
    }
    auto theirs = oracle::basic_solutions(oracle::incidence(g), std::vector<Rational>(static_cast<std::size_t>(g.vertex_count()), Rational(1)));
    std::sort(ours.begin(), ours.end());
    std::sort(theirs.begin(), theirs.end());
    CHECK(ours == theirs);
  }
}
