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
// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are
// exact; only the wall-clock budgets are numeric.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "corpus.hpp"
#include "forcelab/fixtures.hpp"
#include "forcelab/forcing_fractional.hpp"
#include "forcelab/forcing_integral.hpp"
#include "forcelab/hypercube.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

constexpr double kBudgetHypercubeForcing = 60;
constexpr double kBudgetBlueSet = 120;
constexpr double kBudgetBounds = 1;
constexpr double kBudgetExamples = 10;
constexpr double kBudgetOracleEquivalence = 600;
constexpr double kBudgetProperties = 900;
constexpr double kBudgetTransitive = 300;

constexpr std::size_t kBipartiteCorpusSize = 110;
constexpr std::size_t kGeneralCorpusSize = 60;
constexpr int kConcavityTriples = 1000;
constexpr std::size_t kSupportSampleCap = 12;  // all subsets up to 2^12, sampled beyond

struct Outcome {
  bool pass = true;
  std::string detail;
  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail = what;
    pass = pass && ok;
  }
};

int failures = 0;

void run(int id, const std::string& title, double budget, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out.pass = false;
    out.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (secs > budget) out.require(false, "over time budget");
  failures += out.pass ? 0 : 1;
  std::printf("[%s] criterion %d: %s (%.2fs of %.0fs)%s%s\n", out.pass ? "PASS" : "FAIL", id, title.c_str(), secs,
              budget, out.detail.empty() ? "" : " - ", out.detail.c_str());
  std::fflush(stdout);
}

std::string str(const Rational& r) { return to_string(r); }

Outcome hypercube_forcing() {
  Outcome o;
  for (int n : {3, 4}) {
    const Graph q = hypercube(n);
    const auto stats = graph_forcing_stats(q);
    o.require(stats.f == (1 << (n - 2)), "f(Q_" + std::to_string(n) + ") = " + std::to_string(stats.f));
    const auto listed = oracle::perfect_matchings(q);
    o.require(stats.table.size() == listed.size() && stats.table.size() == oracle::count_perfect_matchings(q),
              "matching count differs from oracle");
    int oracle_f = 1 << 30;
    for (const auto& m : listed) oracle_f = std::min(oracle_f, oracle::forcing_number(q, m));
    o.require(oracle_f == stats.f, "oracle forcing minimum differs");
  }
  o.require(enumerate_perfect_matchings(hypercube(4)).size() == 272, "|PM(Q_4)| != 272");
  return o;
}

Outcome blue_set() {
  Outcome o;
  const BlueSet b4 = base_blue_set();
  o.require(b4.blue.size() == 22, "|B_4| = " + std::to_string(b4.blue.size()));
  o.require(b4.red.size() == 10, "red(B_4) = " + std::to_string(b4.red.size()));
  o.require(verify_blue_set(4, BlueMethod::kLp).verified, "lp verification of B_4 failed");
  o.require(verify_blue_set(4, BlueMethod::kCycles).verified, "cycle verification of B_4 failed");
  o.require(build_blue_set(5).blue.size() == 60, "|B_5| != 60");
  o.require(verify_blue_set(5, BlueMethod::kLp).verified, "lp verification of B_5 failed");
  return o;
}

Outcome bounds() {
  Outcome o;
  o.require(ff_upper_bound(4) == Rational(11, 2), "ff_upper_bound(4) = " + str(ff_upper_bound(4)));
  o.require(forcing_upper_bound(4) == 5, "forcing_upper_bound(4) != 5");
  o.require(ff_upper_bound(10) == 448, "ff_upper_bound(10) = " + str(ff_upper_bound(10)));
  const Graph q4 = hypercube(4);
  const auto cert = verify_blue_set(4, BlueMethod::kLp);
  const auto alpha = EdgeAssignment::constant(q4, Rational(1, 4)).restricted_to(base_blue_set().blue);
  o.require(cert.certificate && cert.certificate->unique(), "B_4 certificate missing");
  o.require(total_weight(alpha) <= ff_upper_bound(4), "certified weight exceeds bound");
  return o;
}

Outcome examples() {
  Outcome o;
  for (const char* name : {"example14", "example18", "example19"}) {
    const Json r = run_fixture(name);
    o.require(r["pass"].get<bool>(), std::string(name) + " fixture mismatch: " + r["checks"].dump());
  }
  const Json e18 = run_fixture("example18");
  o.require(e18["f"] == 1 && e18["ff_min"] == "1/2", "example18 values");
  const Json e19 = run_fixture("example19");
  o.require(e19["f"] == 0 && e19["ff_min"] == "1/2" && e19["matching_count"] == 1, "example19 values");

  const Graph g = FixtureGraphs::example14();
  const auto parts = example14_parts();
  const auto pieces = decompose_forcing_function(g, example14_alpha(), example14_gamma(), parts);
  std::vector<WeightedPart> recombined;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    recombined.push_back({pieces[i].alpha, parts[i].lambda});
    o.require(pieces[i].certificate.unique(), "alpha_" + std::to_string(i + 1) + " does not force");
  }
  o.require(convex_combination(recombined) == example14_alpha(), "sum lambda_i alpha_i != alpha");
  o.require(!pieces[0].minimal, "alpha_1 reported minimal");
  return o;
}

std::vector<EdgeSet> supports_to_test(const EdgeSet& supp, std::mt19937_64& rng) {
  std::vector<EdgeSet> out;
  auto from_mask = [&](std::uint64_t mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (mask >> i & 1U) s.push_back(supp[i]);
    }
    return s;
  };
  if (supp.size() <= kSupportSampleCap) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << supp.size()); ++mask) out.push_back(from_mask(mask));
  } else {
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << supp.size()) - 1);
    for (std::size_t i = 0; i < (std::size_t{1} << kSupportSampleCap); ++i) out.push_back(from_mask(pick(rng)));
  }
  return out;
}

Outcome oracle_equivalence() {
  Outcome o;
  std::vector<Graph> graphs = {cycle_graph(4), cycle_graph(6), cycle_graph(8), hypercube(3),
                               cartesian_product(path_graph(2), path_graph(4))};
  for (auto& g : corpus::fpm_graphs(kBipartiteCorpusSize, 8, true, 2024)) {
    if (!enumerate_perfect_matchings(g).empty()) graphs.push_back(std::move(g));
  }
  o.require(graphs.size() >= 100, "bipartite corpus has only " + std::to_string(graphs.size()) + " graphs");
  std::mt19937_64 rng(5);
  std::size_t comparisons = 0;
  for (const Graph& g : graphs) {
    if (g.vertex_count() > 8 || !check_bipartite(g).bipartite) continue;
    std::vector<EdgeAssignment> matchings;
    for (const auto& m : enumerate_perfect_matchings(g)) matchings.push_back(EdgeAssignment::indicator(g, m));
    if (matchings.empty()) continue;
    const EdgeAssignment gamma = corpus::barycenter(matchings);
    const auto ones = VertexWeights::ones(g);
    for (const EdgeSet& s : supports_to_test(support(gamma), rng)) {
      const bool combinatorial = bipartite_support_criterion(g, gamma, s);
      const bool lp = extension_unique(g, ones, gamma.restricted_to(s), gamma).unique();
      ++comparisons;
      o.require(combinatorial == lp, "disagreement on a graph with " + std::to_string(g.edge_count()) + " edges");
    }
  }
  o.detail = o.pass ? std::to_string(graphs.size()) + " graphs, " + std::to_string(comparisons) + " supports" : o.detail;
  return o;
}

Outcome properties() {
  Outcome o;
  auto graphs = corpus::fpm_graphs(kGeneralCorpusSize, 8, false, 31337);
  for (auto& g : corpus::fpm_graphs(20, 8, true, 4242)) graphs.push_back(std::move(g));
  std::mt19937_64 rng(99);
  const Rational lambdas[] = {Rational(1, 4), Rational(1, 2), Rational(3, 4)};
  std::vector<std::vector<EdgeAssignment>> vertices;
  for (const Graph& g : graphs) vertices.push_back(corpus::polytope_vertices(g));

  std::vector<FFResult> produced;
  std::vector<std::pair<std::size_t, EdgeAssignment>> produced_gamma;
  auto ff = [&](std::size_t gi, const EdgeAssignment& gamma) {
    auto r = fractional_forcing_number(graphs[gi], gamma);
    if (produced.size() < 400) {
      produced.push_back(r);
      produced_gamma.emplace_back(gi, gamma);
    }
    return r.value;
  };

  int triples = 0;
  for (int t = 0; t < kConcavityTriples; ++t) {
    const std::size_t gi = static_cast<std::size_t>(t) % graphs.size();
    const auto g1 = corpus::random_point(vertices[gi], rng);
    const auto g2 = corpus::random_point(vertices[gi], rng);
    const Rational& lambda = lambdas[rng() % 3];
    const std::vector<WeightedPart> mix = {{g1, lambda}, {g2, 1 - lambda}};
    const auto mid = convex_combination(mix);
    const Rational f1 = ff(gi, g1), f2 = ff(gi, g2), fm = ff(gi, mid);
    o.require(fm >= lambda * f1 + (1 - lambda) * f2, "concavity violated");
    o.require(abs(f1 - f2) <= assignment_distance(g1, g2), "distance bound violated");
    ++triples;
  }

  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const Graph& g = graphs[gi];
    const Rational low = graph_ff_min(g).value;
    o.require(is_half_integer(low), "graph_ff_min not half-integral: " + str(low));
    const bool bip = check_bipartite(g).bipartite;
    const auto matchings = enumerate_perfect_matchings(g);
    int f_min = 1 << 30;
    for (const auto& m : matchings) {
      const int f = forcing_number(g, m).value;
      const Rational frac = fractional_forcing_number(g, EdgeAssignment::indicator(g, m)).value;
      f_min = std::min(f_min, f);
      o.require(frac >= f, "f_f(M) < f(M)");
      if (bip) o.require(frac == f, "bipartite f_f(M) != f(M)");
    }
    if (bip && !matchings.empty()) o.require(low == f_min, "bipartite f_f(G) != f(G)");
  }

  for (std::size_t i = 0; i < produced.size(); ++i) {
    const auto& [gi, gamma] = produced_gamma[i];
    const Graph& g = graphs[gi];
    const auto ones = VertexWeights::ones(g);
    const EdgeAssignment& alpha = produced[i].alpha;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      o.require(sgn(alpha[e]) == 0 || alpha[e] == gamma[e], "returned alpha not saturated-or-zero");
    }
    o.require(is_minimal_forcing(g, ones, alpha, gamma), "returned alpha not minimal");
    std::vector<Rational> beta(gamma.size());
    for (std::size_t e = 0; e < beta.size(); ++e) {
      const auto id = static_cast<EdgeId>(e);
      const Rational t(static_cast<long>(rng() % 5), 4);
      beta[e] = alpha[id] + t * (gamma[id] - alpha[id]);
    }
    o.require(extension_unique(g, ones, EdgeAssignment(beta), gamma).unique(), "monotonicity violated");
  }
  if (o.pass) {
    o.detail = std::to_string(graphs.size()) + " graphs, " + std::to_string(triples) + " triples, " +
               std::to_string(produced.size()) + " minimal functions";
  }
  return o;
}

Outcome transitive() {
  Outcome o;
  const std::vector<std::pair<std::string, Graph>> graphs = {
      {"C4", cycle_graph(4)}, {"C6", cycle_graph(6)}, {"K4", complete_graph(4)}, {"Q3", hypercube(3)}};
  for (const auto& [name, g] : graphs) {
    const auto top = graph_ff_max(g, MaxMode::kExactTransitive);
    o.require(top.exact, name + " not treated as transitive");
    for (const auto& v : corpus::polytope_vertices(g)) {
      const Rational at_vertex = fractional_forcing_number(g, v).value;
      o.require(top.value >= at_vertex, name + ": vertex value " + str(at_vertex) + " above uniform " + str(top.value));
    }
  }
  return o;
}

}  // namespace

int main() {
  run(1, "forcing number of Q_3 and Q_4 equals 2^(n-2)", kBudgetHypercubeForcing, hypercube_forcing);
  run(2, "blue set B_4 and B_5 verified", kBudgetBlueSet, blue_set);
  run(3, "bound arithmetic and B_4 certificate", kBudgetBounds, bounds);
  run(4, "worked examples 14, 18, 19", kBudgetExamples, examples);
  run(5, "bipartite criterion agrees with LP uniqueness", kBudgetOracleEquivalence, oracle_equivalence);
  run(6, "property suites", kBudgetProperties, properties);
  run(7, "uniform point dominates polytope vertices on transitive graphs", kBudgetTransitive, transitive);
  std::printf("%s: %d of 7 criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
  return failures == 0 ? 0 : 1;
}
