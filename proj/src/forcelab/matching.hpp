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
#ifndef FORCELAB_MATCHING_HPP_
#define FORCELAB_MATCHING_HPP_

#include <span>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/lp.hpp"
#include "forcelab/rational.hpp"

namespace forcelab {

// Non-negative exact weight per edge, indexed by EdgeId. Used for both
// partial g-factors and g-factors.
class EdgeAssignment {
 public:
  EdgeAssignment() = default;
  explicit EdgeAssignment(std::vector<Rational> values);  // throws on negatives
  static EdgeAssignment zeros(const Graph& g);
  static EdgeAssignment constant(const Graph& g, const Rational& value);
  // Characteristic vector of an edge set.
  static EdgeAssignment indicator(const Graph& g, std::span<const EdgeId> edges,
                                  const Rational& value = 1);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](EdgeId e) const { return values_[static_cast<std::size_t>(e)]; }
  std::span<const Rational> values() const { return values_; }

  // Copy of this assignment restricted to the given edges (zero elsewhere).
  EdgeAssignment restricted_to(std::span<const EdgeId> edges) const;
  EdgeAssignment with_value(EdgeId e, const Rational& value) const;

  friend bool operator==(const EdgeAssignment&, const EdgeAssignment&) = default;

 private:
  std::vector<Rational> values_;
};

class VertexWeights {
 public:
  VertexWeights() = default;
  explicit VertexWeights(std::vector<Rational> values);  // throws on negatives
  static VertexWeights ones(const Graph& g);

  std::size_t size() const { return values_.size(); }
  const Rational& operator[](int v) const { return values_[static_cast<std::size_t>(v)]; }
  std::span<const Rational> values() const { return values_; }

 private:
  std::vector<Rational> values_;
};

void require_on_graph(const Graph& g, const EdgeAssignment& w, const char* what);

struct GFactorVerdict {
  enum class Kind { kFull, kPartial, kInvalid };
  Kind kind = Kind::kInvalid;
  int vertex = -1;  // first violating vertex when kInvalid
  Rational sum;     // its incident sum
};

GFactorVerdict classify_g_factor(const Graph& g, const VertexWeights& target, const EdgeAssignment& w);
bool is_fractional_perfect_matching(const Graph& g, const EdgeAssignment& w);

EdgeSet support(const EdgeAssignment& w);
Rational total_weight(const EdgeAssignment& w);
bool leq(const EdgeAssignment& a, const EdgeAssignment& b);  // pointwise; throws on size mismatch
Rational assignment_distance(const EdgeAssignment& a, const EdgeAssignment& b);

struct WeightedPart {
  EdgeAssignment assignment;
  Rational lambda;
};

// Sum of lambda_i * w_i. Coefficients must be non-negative and sum to 1.
EdgeAssignment convex_combination(std::span<const WeightedPart> parts);

using Matching = EdgeSet;

// True if the edge set covers every vertex exactly once.
bool is_perfect_matching(const Graph& g, std::span<const EdgeId> edges);

// All perfect matchings as sorted edge sets, in lexicographic order.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, const Limits& limits = {});

// Perfect matchings containing every edge of 'forced'; stops after
// 'max_count' results. Order as in enumerate_perfect_matchings.
std::vector<Matching> perfect_matchings_containing(const Graph& g, std::span<const EdgeId> forced,
                                                   std::size_t max_count);

// |V| x |E| vertex-edge incidence matrix.
RationalMatrix incidence_matrix(const Graph& g);

struct OddCycle {
  std::vector<int> vertices;
  EdgeSet edges;
};

enum class ExtremeStatus { kCandidate, kConfirmed, kRejected };

// Spanning union of vertex-disjoint K2s (value 1) and odd cycles (value 1/2).
struct PolytopeVertexStructure {
  EdgeSet matching_edges;
  std::vector<OddCycle> odd_cycles;
  EdgeAssignment assignment;
  ExtremeStatus status = ExtremeStatus::kCandidate;
};

// True if w is a vertex of the fractional perfect matching polytope, decided
// by linear independence of the incidence columns on supp(w).
bool is_polytope_vertex(const Graph& g, const EdgeAssignment& w);

std::vector<PolytopeVertexStructure> enumerate_fpm_vertex_candidates(const Graph& g, bool confirm = true,
                                                                     const Limits& limits = {});

}  // namespace forcelab

#endif  // FORCELAB_MATCHING_HPP_
