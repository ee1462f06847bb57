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
#include "forcelab/matching.hpp"

#include <algorithm>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

void require_non_negative(std::span<const Rational> values, const char* what) {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (sgn(values[i]) < 0) {
      fail(ErrorCode::kInvalidArgument, std::string(what) + ": negative value at index " + std::to_string(i));
    }
  }
}

}  // namespace

EdgeAssignment::EdgeAssignment(std::vector<Rational> values) : values_(std::move(values)) {
  require_non_negative(values_, "edge assignment");
}

EdgeAssignment EdgeAssignment::zeros(const Graph& g) {
  return EdgeAssignment(std::vector<Rational>(static_cast<std::size_t>(g.edge_count()), Rational(0)));
}

EdgeAssignment EdgeAssignment::constant(const Graph& g, const Rational& value) {
  return EdgeAssignment(std::vector<Rational>(static_cast<std::size_t>(g.edge_count()), value));
}

EdgeAssignment EdgeAssignment::indicator(const Graph& g, std::span<const EdgeId> edges, const Rational& value) {
  std::vector<Rational> v(static_cast<std::size_t>(g.edge_count()), Rational(0));
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) fail(ErrorCode::kInvalidArgument, "edge index out of range");
    v[static_cast<std::size_t>(e)] = value;
  }
  return EdgeAssignment(std::move(v));
}

EdgeAssignment EdgeAssignment::restricted_to(std::span<const EdgeId> edges) const {
  std::vector<Rational> v(values_.size(), Rational(0));
  for (EdgeId e : edges) v[static_cast<std::size_t>(e)] = values_[static_cast<std::size_t>(e)];
  return EdgeAssignment(std::move(v));
}

EdgeAssignment EdgeAssignment::with_value(EdgeId e, const Rational& value) const {
  auto v = values_;
  v[static_cast<std::size_t>(e)] = value;
  return EdgeAssignment(std::move(v));
}

VertexWeights::VertexWeights(std::vector<Rational> values) : values_(std::move(values)) {
  require_non_negative(values_, "vertex weights");
}

VertexWeights VertexWeights::ones(const Graph& g) {
  return VertexWeights(std::vector<Rational>(static_cast<std::size_t>(g.vertex_count()), Rational(1)));
}

void require_on_graph(const Graph& g, const EdgeAssignment& w, const char* what) {
  if (w.size() != static_cast<std::size_t>(g.edge_count())) {
    fail(ErrorCode::kInvalidArgument, std::string(what) + ": assignment has " + std::to_string(w.size()) +
                                          " values but the graph has " + std::to_string(g.edge_count()) +
                                          " edges");
  }
}

GFactorVerdict classify_g_factor(const Graph& g, const VertexWeights& target, const EdgeAssignment& w) {
  require_on_graph(g, w, "classify_g_factor");
  if (target.size() != static_cast<std::size_t>(g.vertex_count())) {
    fail(ErrorCode::kInvalidArgument, "classify_g_factor: vertex weight count mismatch");
  }
  GFactorVerdict verdict;
  bool strict = false;
  for (int v = 0; v < g.vertex_count(); ++v) {
    Rational sum = 0;
    for (const Incidence& inc : g.incident(v)) sum += w[inc.edge];
    if (sum > target[v]) {
      verdict.kind = GFactorVerdict::Kind::kInvalid;
      verdict.vertex = v;
      verdict.sum = sum;
      return verdict;
    }
    if (sum < target[v]) strict = true;
  }
  verdict.kind = strict ? GFactorVerdict::Kind::kPartial : GFactorVerdict::Kind::kFull;
  return verdict;
}

bool is_fractional_perfect_matching(const Graph& g, const EdgeAssignment& w) {
  return w.size() == static_cast<std::size_t>(g.edge_count()) &&
         classify_g_factor(g, VertexWeights::ones(g), w).kind == GFactorVerdict::Kind::kFull;
}

EdgeSet support(const EdgeAssignment& w) {
  EdgeSet s;
  for (std::size_t e = 0; e < w.size(); ++e) {
    if (sgn(w[static_cast<EdgeId>(e)]) > 0) s.push_back(static_cast<EdgeId>(e));
  }
  return s;
}

Rational total_weight(const EdgeAssignment& w) {
  Rational sum = 0;
  for (const Rational& x : w.values()) sum += x;
  return sum;
}

namespace {

void require_same_size(const EdgeAssignment& a, const EdgeAssignment& b, const char* what) {
  if (a.size() != b.size()) {
    fail(ErrorCode::kInvalidArgument, std::string(what) + ": assignments live on different graphs");
  }
}

}  // namespace

bool leq(const EdgeAssignment& a, const EdgeAssignment& b) {
  require_same_size(a, b, "leq");
  for (std::size_t e = 0; e < a.size(); ++e) {
    if (a[static_cast<EdgeId>(e)] > b[static_cast<EdgeId>(e)]) return false;
  }
  return true;
}

Rational assignment_distance(const EdgeAssignment& a, const EdgeAssignment& b) {
  require_same_size(a, b, "assignment_distance");
  Rational d = 0;
  for (std::size_t e = 0; e < a.size(); ++e) d += abs(a[static_cast<EdgeId>(e)] - b[static_cast<EdgeId>(e)]);
  return d;
}

EdgeAssignment convex_combination(std::span<const WeightedPart> parts) {
  if (parts.empty()) fail(ErrorCode::kInvalidArgument, "convex_combination: no parts");
  const std::size_t m = parts.front().assignment.size();
  Rational lambda_sum = 0;
  std::vector<Rational> out(m, Rational(0));
  for (const WeightedPart& p : parts) {
    require_same_size(parts.front().assignment, p.assignment, "convex_combination");
    if (sgn(p.lambda) < 0) fail(ErrorCode::kInvalidArgument, "convex_combination: negative coefficient");
    lambda_sum += p.lambda;
    for (std::size_t e = 0; e < m; ++e) out[e] += p.lambda * p.assignment[static_cast<EdgeId>(e)];
  }
  if (lambda_sum != 1) {
    fail(ErrorCode::kInvalidArgument, "convex_combination: coefficients sum to " + to_string(lambda_sum));
  }
  return EdgeAssignment(std::move(out));
}

bool is_perfect_matching(const Graph& g, std::span<const EdgeId> edges) {
  std::vector<int> cover(static_cast<std::size_t>(g.vertex_count()), 0);
  for (EdgeId e : edges) {
    if (e < 0 || e >= g.edge_count()) return false;
    ++cover[static_cast<std::size_t>(g.edge(e).u)];
    ++cover[static_cast<std::size_t>(g.edge(e).v)];
  }
  return std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; });
}

namespace {

class MatchingSearch {
 public:
  MatchingSearch(const Graph& g, std::size_t max_count, bool throw_on_cap)
      : g_(g), max_count_(max_count), throw_on_cap_(throw_on_cap),
        matched_(static_cast<std::size_t>(g.vertex_count()), false) {}

  bool force(std::span<const EdgeId> edges) {
    for (EdgeId e : edges) {
      if (e < 0 || e >= g_.edge_count()) return false;
      const Edge& ed = g_.edge(e);
      if (matched_[static_cast<std::size_t>(ed.u)] || matched_[static_cast<std::size_t>(ed.v)]) return false;
      matched_[static_cast<std::size_t>(ed.u)] = matched_[static_cast<std::size_t>(ed.v)] = true;
      forced_.push_back(e);
    }
    return true;
  }

  std::vector<Matching> run() {
    if (g_.vertex_count() % 2 == 1) return {};
    extend(0);
    return std::move(out_);
  }

 private:
  // Returns false once the result budget is exhausted.
  bool extend(int from) {
    int v = from;
    while (v < g_.vertex_count() && matched_[static_cast<std::size_t>(v)]) ++v;
    if (v == g_.vertex_count()) {
      if (out_.size() >= max_count_) {
        if (throw_on_cap_) {
          fail(ErrorCode::kCapExceeded, "perfect matching count exceeds cap " + std::to_string(max_count_));
        }
        return false;
      }
      Matching m = forced_;
      m.insert(m.end(), chosen_.begin(), chosen_.end());
      std::sort(m.begin(), m.end());
      out_.push_back(std::move(m));
      return true;
    }
    matched_[static_cast<std::size_t>(v)] = true;
    for (const Incidence& inc : g_.incident(v)) {
      if (matched_[static_cast<std::size_t>(inc.neighbor)]) continue;
      matched_[static_cast<std::size_t>(inc.neighbor)] = true;
      chosen_.push_back(inc.edge);
      const bool more = extend(v + 1);
      chosen_.pop_back();
      matched_[static_cast<std::size_t>(inc.neighbor)] = false;
      if (!more) {
        matched_[static_cast<std::size_t>(v)] = false;
        return false;
      }
    }
    matched_[static_cast<std::size_t>(v)] = false;
    return true;
  }

  const Graph& g_;
  std::size_t max_count_;
  bool throw_on_cap_;
  std::vector<bool> matched_;
  std::vector<EdgeId> forced_;
  std::vector<EdgeId> chosen_;
  std::vector<Matching> out_;
};

}  // namespace

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, const Limits& limits) {
  return MatchingSearch(g, limits.max_matchings, true).run();
}

std::vector<Matching> perfect_matchings_containing(const Graph& g, std::span<const EdgeId> forced,
                                                   std::size_t max_count) {
  MatchingSearch search(g, max_count, false);
  if (!search.force(forced)) return {};
  auto out = search.run();
  std::sort(out.begin(), out.end());
  return out;
}

RationalMatrix incidence_matrix(const Graph& g) {
  RationalMatrix a(static_cast<std::size_t>(g.vertex_count()), static_cast<std::size_t>(g.edge_count()));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    a.at(static_cast<std::size_t>(g.edge(e).u), static_cast<std::size_t>(e)) = 1;
    a.at(static_cast<std::size_t>(g.edge(e).v), static_cast<std::size_t>(e)) = 1;
  }
  return a;
}

bool is_polytope_vertex(const Graph& g, const EdgeAssignment& w) {
  if (!is_fractional_perfect_matching(g, w)) return false;
  const EdgeSet s = support(w);
  RationalMatrix cols(static_cast<std::size_t>(g.vertex_count()), s.size());
  for (std::size_t j = 0; j < s.size(); ++j) {
    const Edge& e = g.edge(s[j]);
    cols.at(static_cast<std::size_t>(e.u), j) = 1;
    cols.at(static_cast<std::size_t>(e.v), j) = 1;
  }
  return matrix_rank(std::move(cols)) == s.size();
}

namespace {

class StructureSearch {
 public:
  StructureSearch(const Graph& g, const Limits& limits)
      : g_(g), limits_(limits), covered_(static_cast<std::size_t>(g.vertex_count()), false),
        cycles_at_(static_cast<std::size_t>(g.vertex_count())) {
    for (auto& c : enumerate_cycles(g, limits)) {
      if (!c.odd) continue;
      OddCycle oc;
      oc.vertices = c.vertices;
      oc.edges = c.edges;
      std::sort(oc.edges.begin(), oc.edges.end());
      cycles_at_[static_cast<std::size_t>(c.vertices.front())].push_back(std::move(oc));
    }
  }

  std::vector<PolytopeVertexStructure> run() {
    extend(0);
    return std::move(out_);
  }

 private:
  void extend(int from) {
    int v = from;
    while (v < g_.vertex_count() && covered_[static_cast<std::size_t>(v)]) ++v;
    if (v == g_.vertex_count()) {
      emit();
      return;
    }
    covered_[static_cast<std::size_t>(v)] = true;
    for (const Incidence& inc : g_.incident(v)) {
      if (covered_[static_cast<std::size_t>(inc.neighbor)]) continue;
      covered_[static_cast<std::size_t>(inc.neighbor)] = true;
      k2_.push_back(inc.edge);
      extend(v + 1);
      k2_.pop_back();
      covered_[static_cast<std::size_t>(inc.neighbor)] = false;
    }
    for (const OddCycle& c : cycles_at_[static_cast<std::size_t>(v)]) {
      bool free = true;
      for (std::size_t i = 1; i < c.vertices.size(); ++i) free = free && !covered_[static_cast<std::size_t>(c.vertices[i])];
      if (!free) continue;
      for (std::size_t i = 1; i < c.vertices.size(); ++i) covered_[static_cast<std::size_t>(c.vertices[i])] = true;
      cycles_.push_back(&c);
      extend(v + 1);
      cycles_.pop_back();
      for (std::size_t i = 1; i < c.vertices.size(); ++i) covered_[static_cast<std::size_t>(c.vertices[i])] = false;
    }
    covered_[static_cast<std::size_t>(v)] = false;
  }

  void emit() {
    if (out_.size() >= limits_.max_vertex_structures) {
      fail(ErrorCode::kCapExceeded, "polytope vertex structures exceed cap " +
                                        std::to_string(limits_.max_vertex_structures));
    }
    PolytopeVertexStructure s;
    s.matching_edges = k2_;
    std::sort(s.matching_edges.begin(), s.matching_edges.end());
    std::vector<Rational> values(static_cast<std::size_t>(g_.edge_count()), Rational(0));
    for (EdgeId e : k2_) values[static_cast<std::size_t>(e)] = 1;
    for (const OddCycle* c : cycles_) {
      s.odd_cycles.push_back(*c);
      for (EdgeId e : c->edges) values[static_cast<std::size_t>(e)] = make_rational(1, 2);
    }
    s.assignment = EdgeAssignment(std::move(values));
    out_.push_back(std::move(s));
  }

  const Graph& g_;
  const Limits& limits_;
  std::vector<bool> covered_;
  std::vector<std::vector<OddCycle>> cycles_at_;
  std::vector<EdgeId> k2_;
  std::vector<const OddCycle*> cycles_;
  std::vector<PolytopeVertexStructure> out_;
};

}  // namespace

std::vector<PolytopeVertexStructure> enumerate_fpm_vertex_candidates(const Graph& g, bool confirm,
                                                                     const Limits& limits) {
  auto out = StructureSearch(g, limits).run();
  if (confirm) {
    for (auto& s : out) {
      s.status = is_polytope_vertex(g, s.assignment) ? ExtremeStatus::kConfirmed : ExtremeStatus::kRejected;
    }
  }
  return out;
}

}  // namespace forcelab
