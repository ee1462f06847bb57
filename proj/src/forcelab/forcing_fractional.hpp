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
#ifndef FORCELAB_FORCING_FRACTIONAL_HPP_
#define FORCELAB_FORCING_FRACTIONAL_HPP_

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/matching.hpp"

namespace forcelab {

// Outcome of asking whether gamma is the only g-factor dominating alpha.
struct ForcingCertificate {
  enum class Verdict { kUnique, kNotUnique };
  Verdict verdict = Verdict::kNotUnique;
  // Unique: max of gamma'(e) over all dominating g-factors, per edge. Each
  // equals gamma(e); with equal vertex sums that pins gamma' = gamma.
  std::vector<Rational> maxima;
  // NotUnique: a g-factor != gamma that dominates alpha.
  std::optional<EdgeAssignment> witness;

  bool unique() const { return verdict == Verdict::kUnique; }
};

// Per-edge exact LP maximization over {gamma' >= alpha, vertex sums = g}.
// Throws kPrecondition unless gamma is a g-factor and alpha <= gamma.
ForcingCertificate extension_unique(const Graph& g, const VertexWeights& target, const EdgeAssignment& alpha,
                                    const EdgeAssignment& gamma);

// Tangent-cone test for the same question: gamma is unique iff no nonzero d
// has zero vertex sums and d(e) >= 0 wherever alpha(e) = gamma(e). On
// failure returns such a direction. Preconditions are not re-checked.
std::optional<std::vector<Rational>> escape_direction(const Graph& g, const EdgeAssignment& alpha,
                                                      const EdgeAssignment& gamma);

// A dominating g-factor != gamma obtained by moving along an escape direction.
EdgeAssignment witness_from_direction(const EdgeAssignment& alpha, const EdgeAssignment& gamma,
                                      std::span<const Rational> direction);

bool is_minimal_forcing(const Graph& g, const VertexWeights& target, const EdgeAssignment& alpha,
                        const EdgeAssignment& gamma);

enum class SupportSearch { kAuto, kCycleCriterion, kConeLp };

struct FFResult {
  Rational value;
  EdgeSet support;
  EdgeAssignment alpha;  // gamma restricted to support
  ForcingCertificate certificate;
  std::string method;    // "cycle_criterion" or "cone_lp"
};

// Minimum of sum_{e in S} gamma(e) over S within supp(gamma) such that
// gamma restricted to S forces gamma.
FFResult fractional_forcing_number(const Graph& g, const VertexWeights& target, const EdgeAssignment& gamma,
                                   const Limits& limits = {}, SupportSearch search = SupportSearch::kAuto);
FFResult fractional_forcing_number(const Graph& g, const EdgeAssignment& gamma, const Limits& limits = {},
                                   SupportSearch search = SupportSearch::kAuto);

// Bipartite criterion: S within supp(gamma), and every alternating class of
// every cycle meets S or an edge outside supp(gamma).
bool bipartite_support_criterion(const Graph& g, const EdgeAssignment& gamma, const EdgeSet& s,
                                 const Limits& limits = {});

struct DecomposedPart {
  EdgeAssignment alpha;
  ForcingCertificate certificate;
  bool minimal = false;
};

// Splits a minimal forcing function of a convex combination into forcing
// functions of the parts: alpha_i = gamma_i on supp(alpha), zero elsewhere.
std::vector<DecomposedPart> decompose_forcing_function(const Graph& g, const EdgeAssignment& alpha,
                                                       const EdgeAssignment& gamma,
                                                       std::span<const WeightedPart> parts);

// gamma_sigma(e) = gamma(sigma(e)).
EdgeAssignment permuted(const EdgeAssignment& gamma, const Automorphism& sigma);

EdgeAssignment symmetrized_fpm(const Graph& g, const EdgeAssignment& gamma, std::span<const Automorphism> autos);

// alpha' = gamma' on edges where alpha is saturated, zero elsewhere.
EdgeAssignment transfer_forcing_function(const EdgeAssignment& alpha, const EdgeAssignment& gamma,
                                         const EdgeAssignment& gamma_prime);

struct GraphFFMin {
  Rational value;
  PolytopeVertexStructure minimizer;
  FFResult detail;
  std::size_t vertices_examined = 0;
};

// Minimum over confirmed polytope vertices; throws kInfeasible when G has
// no fractional perfect matching.
GraphFFMin graph_ff_min(const Graph& g, const Limits& limits = {});

enum class MaxMode { kExactTransitive, kVertexLowerBound };

struct GraphFFMax {
  Rational value;
  bool exact = false;  // false: lower bound only
  EdgeAssignment point;
  FFResult detail;
  std::size_t probes = 0;
};

GraphFFMax graph_ff_max(const Graph& g, MaxMode mode, const Limits& limits = {});

struct FractionalSpectrum {
  Rational low;
  Rational high;
  bool high_exact = false;
};

// [f_f(G), F_f(G)], with F_f exact only on vertex- and edge-transitive graphs.
FractionalSpectrum fractional_spectrum(const Graph& g, const Limits& limits = {});

}  // namespace forcelab

#endif  // FORCELAB_FORCING_FRACTIONAL_HPP_
