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
#include "forcelab/forcing_fractional.hpp"

#include <algorithm>
#include <atomic>

#include "forcelab/error.hpp"
#include "forcelab/hitting_set.hpp"
#include "forcelab/lp.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {

namespace {

void require_factor_and_below(const Graph& g, const VertexWeights& target, const EdgeAssignment& alpha,
                              const EdgeAssignment& gamma) {
  require_on_graph(g, alpha, "alpha");
  require_on_graph(g, gamma, "gamma");
  if (classify_g_factor(g, target, gamma).kind != GFactorVerdict::Kind::kFull) {
    fail(ErrorCode::kPrecondition, "gamma is not a full g-factor");
  }
  if (!leq(alpha, gamma)) fail(ErrorCode::kPrecondition, "alpha is not dominated by gamma");
}

RationalMatrix incidence_columns(const Graph& g, std::span<const EdgeId> columns) {
  RationalMatrix a(static_cast<std::size_t>(g.vertex_count()), columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const Edge& e = g.edge(columns[c]);
    a.at(static_cast<std::size_t>(e.u), c) = 1;
    a.at(static_cast<std::size_t>(e.v), c) = 1;
  }
  return a;
}

}  // namespace

ForcingCertificate extension_unique(const Graph& g, const VertexWeights& target, const EdgeAssignment& alpha,
                                    const EdgeAssignment& gamma) {
  require_factor_and_below(g, target, alpha, gamma);
  const auto m = static_cast<std::size_t>(g.edge_count());
  const RationalMatrix a = incidence_matrix(g);
  std::vector<Rational> b(static_cast<std::size_t>(g.vertex_count()));
  for (std::size_t v = 0; v < b.size(); ++v) b[v] = target[static_cast<int>(v)];
  for (std::size_t e = 0; e < m; ++e) {
    const Edge& ed = g.edge(static_cast<EdgeId>(e));
    b[static_cast<std::size_t>(ed.u)] -= alpha[static_cast<EdgeId>(e)];
    b[static_cast<std::size_t>(ed.v)] -= alpha[static_cast<EdgeId>(e)];
  }
  const StandardFormLp lp(a, b);
  if (!lp.feasible()) fail(ErrorCode::kInternal, "extension LP infeasible although gamma is feasible");

  std::vector<LpSolution> solutions(m);
  std::atomic<std::size_t> first_exceed{m};
  auto solve = [&](std::size_t e) {
    if (e > first_exceed.load()) return;
    std::vector<Rational> objective(m);
    objective[e] = 1;
    solutions[e] = lp.maximize(objective);
    if (solutions[e].status != LpStatus::kOptimal) fail(ErrorCode::kInternal, "extension LP not bounded");
    if (alpha[static_cast<EdgeId>(e)] + solutions[e].objective > gamma[static_cast<EdgeId>(e)]) {
      std::size_t seen = first_exceed.load();
      while (e < seen && !first_exceed.compare_exchange_weak(seen, e)) {
      }
    }
  };
  if (worker_count() > 1) {
    parallel_for(m, solve);
  } else {
    for (std::size_t e = 0; e < m && first_exceed.load() == m; ++e) solve(e);
  }

  ForcingCertificate cert;
  const std::size_t bad = first_exceed.load();
  if (bad < m) {
    cert.verdict = ForcingCertificate::Verdict::kNotUnique;
    std::vector<Rational> values(m);
    for (std::size_t e = 0; e < m; ++e) values[e] = alpha[static_cast<EdgeId>(e)] + solutions[bad].x[e];
    cert.witness = EdgeAssignment(std::move(values));
    return cert;
  }
  cert.verdict = ForcingCertificate::Verdict::kUnique;
  cert.maxima.resize(m);
  for (std::size_t e = 0; e < m; ++e) cert.maxima[e] = alpha[static_cast<EdgeId>(e)] + solutions[e].objective;
  return cert;
}

std::optional<std::vector<Rational>> escape_direction(const Graph& g, const EdgeAssignment& alpha,
                                                      const EdgeAssignment& gamma) {
  EdgeSet tight;
  EdgeSet loose;
  for (EdgeId e = 0; e < g.edge_count(); ++e) (alpha[e] == gamma[e] ? tight : loose).push_back(e);
  const auto m = static_cast<std::size_t>(g.edge_count());
  if (loose.empty()) return std::nullopt;

  const RationalMatrix a_loose = incidence_columns(g, loose);
  auto kernel = null_space(a_loose);
  if (!kernel.empty()) {
    std::vector<Rational> d(m);
    for (std::size_t i = 0; i < loose.size(); ++i) d[static_cast<std::size_t>(loose[i])] = kernel.front()[i];
    return d;
  }
  if (tight.empty()) return std::nullopt;

  const std::size_t nt = tight.size();
  const std::size_t nf = loose.size();
  const auto nv = static_cast<std::size_t>(g.vertex_count());
  RationalMatrix a(nv + 1, nt + 2 * nf);
  for (std::size_t c = 0; c < nt; ++c) {
    const Edge& e = g.edge(tight[c]);
    a.at(static_cast<std::size_t>(e.u), c) = 1;
    a.at(static_cast<std::size_t>(e.v), c) = 1;
    a.at(nv, c) = 1;
  }
  for (std::size_t c = 0; c < nf; ++c) {
    const Edge& e = g.edge(loose[c]);
    for (int v : {e.u, e.v}) {
      a.at(static_cast<std::size_t>(v), nt + c) = 1;
      a.at(static_cast<std::size_t>(v), nt + nf + c) = -1;
    }
  }
  std::vector<Rational> b(nv + 1);
  b[nv] = 1;
  const StandardFormLp lp(a, b);
  if (!lp.feasible()) return std::nullopt;
  const auto x = lp.feasible_point();
  std::vector<Rational> d(m);
  for (std::size_t c = 0; c < nt; ++c) d[static_cast<std::size_t>(tight[c])] = x[c];
  for (std::size_t c = 0; c < nf; ++c) d[static_cast<std::size_t>(loose[c])] = x[nt + c] - x[nt + nf + c];
  return d;
}

EdgeAssignment witness_from_direction(const EdgeAssignment& alpha, const EdgeAssignment& gamma,
                                      std::span<const Rational> direction) {
  std::optional<Rational> step;
  for (std::size_t e = 0; e < direction.size(); ++e) {
    if (sgn(direction[e]) >= 0) continue;
    const auto id = static_cast<EdgeId>(e);
    Rational t = (gamma[id] - alpha[id]) / -direction[e];
    if (!step || t < *step) step = t;
  }
  if (!step || sgn(*step) <= 0) fail(ErrorCode::kInternal, "direction does not leave gamma");
  std::vector<Rational> values(direction.size());
  for (std::size_t e = 0; e < direction.size(); ++e) values[e] = gamma[static_cast<EdgeId>(e)] + *step * direction[e];
  return EdgeAssignment(std::move(values));
}

bool is_minimal_forcing(const Graph& g, const VertexWeights& target, const EdgeAssignment& alpha,
                        const EdgeAssignment& gamma) {
  if (!extension_unique(g, target, alpha, gamma).unique()) return false;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (sgn(alpha[e]) != 0 && alpha[e] != gamma[e]) return false;
  }
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (sgn(alpha[e]) == 0) continue;
    if (extension_unique(g, target, alpha.with_value(e, 0), gamma).unique()) return false;
  }
  return true;
}

bool bipartite_support_criterion(const Graph& g, const EdgeAssignment& gamma, const EdgeSet& s,
                                 const Limits& limits) {
  require_on_graph(g, gamma, "gamma");
  if (!check_bipartite(g).bipartite) fail(ErrorCode::kNotBipartite, "graph is not bipartite");
  for (EdgeId e : s) {
    if (e < 0 || e >= g.edge_count() || sgn(gamma[e]) == 0) return false;
  }
  auto hits = [&](const EdgeSet& cls) {
    return std::any_of(cls.begin(), cls.end(), [&](EdgeId e) {
      return sgn(gamma[e]) == 0 || std::find(s.begin(), s.end(), e) != s.end();
    });
  };
  for (const auto& cycle : enumerate_cycles(g, limits)) {
    if (!hits(cycle.class_a) || !hits(cycle.class_b)) return false;
  }
  return true;
}

FFResult fractional_forcing_number(const Graph& g, const VertexWeights& target, const EdgeAssignment& gamma,
                                   const Limits& limits, SupportSearch search) {
  require_factor_and_below(g, target, EdgeAssignment::zeros(g), gamma);
  const EdgeSet supp = support(gamma);
  const int cap = std::min(limits.max_support_edges, 64);
  if (static_cast<int>(supp.size()) > cap) {
    fail(ErrorCode::kCapExceeded, "support has more than " + std::to_string(cap) + " edges");
  }
  std::vector<int> position(static_cast<std::size_t>(g.edge_count()), -1);
  std::vector<Rational> weights;
  for (std::size_t i = 0; i < supp.size(); ++i) {
    position[static_cast<std::size_t>(supp[i])] = static_cast<int>(i);
    weights.push_back(gamma[supp[i]]);
  }
  auto to_edges = [&](ElementMask mask) {
    EdgeSet s;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (mask >> i & 1U) s.push_back(supp[i]);
    }
    return s;
  };

  if (search == SupportSearch::kAuto) {
    search = check_bipartite(g).bipartite ? SupportSearch::kCycleCriterion : SupportSearch::kConeLp;
  }
  FFResult result;
  std::optional<ElementMask> chosen;
  if (search == SupportSearch::kCycleCriterion) {
    if (!check_bipartite(g).bipartite) fail(ErrorCode::kNotBipartite, "cycle criterion needs a bipartite graph");
    std::vector<ElementMask> constraints;
    auto add_class = [&](const EdgeSet& cls) {
      ElementMask mask = 0;
      for (EdgeId e : cls) {
        const int p = position[static_cast<std::size_t>(e)];
        if (p < 0) return;
        mask |= ElementMask{1} << p;
      }
      constraints.push_back(mask);
    };
    for (const auto& cycle : enumerate_cycles(g, limits)) {
      add_class(cycle.class_a);
      add_class(cycle.class_b);
    }
    chosen = min_weight_hitting_set(weights, minimal_sets(constraints));
    result.method = "cycle_criterion";
  } else {
    std::vector<ElementMask> constraints;
    for (;;) {
      chosen = min_weight_hitting_set(weights, constraints);
      if (!chosen) break;
      const EdgeAssignment alpha = gamma.restricted_to(to_edges(*chosen));
      const auto d = escape_direction(g, alpha, gamma);
      if (!d) break;
      ElementMask negative = 0;
      ElementMask positive = 0;
      for (std::size_t e = 0; e < d->size(); ++e) {
        const int p = position[e];
        if (p < 0 || (*chosen >> p & 1U)) continue;
        if (sgn((*d)[e]) < 0) negative |= ElementMask{1} << p;
        if (sgn((*d)[e]) > 0) positive |= ElementMask{1} << p;
      }
      constraints.push_back(negative);
      // Directions supported on free edges can be reversed.
      bool reversible = true;
      for (std::size_t e = 0; e < d->size(); ++e) {
        const int p = position[e];
        if (sgn((*d)[e]) != 0 && (p < 0 || (*chosen >> p & 1U))) reversible = false;
      }
      if (reversible) constraints.push_back(positive);
    }
    result.method = "cone_lp";
  }
  if (!chosen) fail(ErrorCode::kInternal, "support search produced an empty constraint");
  result.support = to_edges(*chosen);
  result.alpha = gamma.restricted_to(result.support);
  result.value = 0;
  for (EdgeId e : result.support) result.value += gamma[e];
  result.certificate = extension_unique(g, target, result.alpha, gamma);
  if (!result.certificate.unique()) fail(ErrorCode::kInternal, "selected support does not force gamma");
  return result;
}

FFResult fractional_forcing_number(const Graph& g, const EdgeAssignment& gamma, const Limits& limits,
                                   SupportSearch search) {
  return fractional_forcing_number(g, VertexWeights::ones(g), gamma, limits, search);
}

std::vector<DecomposedPart> decompose_forcing_function(const Graph& g, const EdgeAssignment& alpha,
                                                       const EdgeAssignment& gamma,
                                                       std::span<const WeightedPart> parts) {
  const VertexWeights ones = VertexWeights::ones(g);
  require_factor_and_below(g, ones, alpha, gamma);
  if (parts.empty()) fail(ErrorCode::kPrecondition, "no parts given");
  for (std::size_t i = 0; i < parts.size(); ++i) {
    require_on_graph(g, parts[i].assignment, "part");
    if (sgn(parts[i].lambda) <= 0) {
      fail(ErrorCode::kPrecondition, "coefficient " + std::to_string(i) + " is not positive");
    }
    if (!is_fractional_perfect_matching(g, parts[i].assignment)) {
      fail(ErrorCode::kPrecondition, "part " + std::to_string(i) + " is not a fractional perfect matching");
    }
  }
  if (convex_combination(parts) != gamma) fail(ErrorCode::kPrecondition, "parts do not combine to gamma");
  if (!is_minimal_forcing(g, ones, alpha, gamma)) {
    fail(ErrorCode::kPrecondition, "alpha is not a minimal forcing function of gamma");
  }
  const EdgeSet supp = support(alpha);
  std::vector<DecomposedPart> out;
  std::vector<WeightedPart> pieces;
  for (const auto& part : parts) {
    DecomposedPart d;
    d.alpha = part.assignment.restricted_to(supp);
    d.certificate = extension_unique(g, ones, d.alpha, part.assignment);
    d.minimal = d.certificate.unique() && is_minimal_forcing(g, ones, d.alpha, part.assignment);
    pieces.push_back({d.alpha, part.lambda});
    out.push_back(std::move(d));
  }
  if (convex_combination(pieces) != alpha) fail(ErrorCode::kInternal, "pieces do not recombine to alpha");
  return out;
}

EdgeAssignment permuted(const EdgeAssignment& gamma, const Automorphism& sigma) {
  std::vector<Rational> values(gamma.size());
  for (std::size_t e = 0; e < values.size(); ++e) values[e] = gamma[sigma.edge_perm[e]];
  return EdgeAssignment(std::move(values));
}

EdgeAssignment symmetrized_fpm(const Graph& g, const EdgeAssignment& gamma, std::span<const Automorphism> autos) {
  require_on_graph(g, gamma, "gamma");
  if (!is_fractional_perfect_matching(g, gamma)) {
    fail(ErrorCode::kPrecondition, "gamma is not a fractional perfect matching");
  }
  if (autos.empty()) fail(ErrorCode::kInvalidArgument, "no automorphisms given");
  std::vector<Rational> sum(gamma.size());
  for (const auto& sigma : autos) {
    const auto checked = as_automorphism(g, sigma.vertex_perm);
    if (!checked || (!sigma.edge_perm.empty() && checked->edge_perm != sigma.edge_perm)) {
      fail(ErrorCode::kInvalidArgument, "map is not an automorphism");
    }
    const EdgeAssignment image = permuted(gamma, *checked);
    for (std::size_t e = 0; e < sum.size(); ++e) sum[e] += image[static_cast<EdgeId>(e)];
  }
  for (auto& v : sum) v /= static_cast<long>(autos.size());
  return EdgeAssignment(std::move(sum));
}

EdgeAssignment transfer_forcing_function(const EdgeAssignment& alpha, const EdgeAssignment& gamma,
                                         const EdgeAssignment& gamma_prime) {
  if (alpha.size() != gamma.size() || gamma.size() != gamma_prime.size()) {
    fail(ErrorCode::kInvalidArgument, "assignment sizes differ");
  }
  std::vector<Rational> values(alpha.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    const auto e = static_cast<EdgeId>(i);
    if (sgn(alpha[e]) != 0 && alpha[e] == gamma[e]) values[i] = gamma_prime[e];
  }
  return EdgeAssignment(std::move(values));
}

GraphFFMin graph_ff_min(const Graph& g, const Limits& limits) {
  auto vertices = enumerate_fpm_vertex_candidates(g, true, limits);
  std::erase_if(vertices, [](const auto& s) { return s.status != ExtremeStatus::kConfirmed; });
  if (vertices.empty()) fail(ErrorCode::kInfeasible, "graph has no fractional perfect matching");
  std::vector<FFResult> results(vertices.size());
  parallel_for(vertices.size(),
               [&](std::size_t i) { results[i] = fractional_forcing_number(g, vertices[i].assignment, limits); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value < results[best].value) best = i;
  }
  return GraphFFMin{results[best].value, vertices[best], results[best], vertices.size()};
}

GraphFFMax graph_ff_max(const Graph& g, MaxMode mode, const Limits& limits) {
  GraphFFMax out;
  if (mode == MaxMode::kExactTransitive) {
    if (g.vertex_count() == 0 || g.edge_count() == 0) fail(ErrorCode::kNotTransitive, "graph has no edges");
    const auto group = automorphism_group(g, limits);
    if (!group.vertex_transitive || !group.edge_transitive) {
      fail(ErrorCode::kNotTransitive, "graph is not vertex- and edge-transitive");
    }
    out.point = EdgeAssignment::constant(g, Rational(1, g.degree(0)));
    out.detail = fractional_forcing_number(g, out.point, limits);
    out.value = out.detail.value;
    out.exact = true;
    out.probes = 1;
    return out;
  }
  auto vertices = enumerate_fpm_vertex_candidates(g, true, limits);
  std::erase_if(vertices, [](const auto& s) { return s.status != ExtremeStatus::kConfirmed; });
  if (vertices.empty()) fail(ErrorCode::kInfeasible, "graph has no fractional perfect matching");
  std::vector<EdgeAssignment> probes;
  std::vector<Rational> center(static_cast<std::size_t>(g.edge_count()));
  for (const auto& s : vertices) {
    probes.push_back(s.assignment);
    for (std::size_t e = 0; e < center.size(); ++e) center[e] += s.assignment[static_cast<EdgeId>(e)];
  }
  for (auto& v : center) v /= static_cast<long>(vertices.size());
  probes.emplace_back(std::move(center));
  bool regular = g.vertex_count() > 0 && g.degree(0) > 0;
  for (int v = 1; v < g.vertex_count() && regular; ++v) regular = g.degree(v) == g.degree(0);
  if (regular) probes.push_back(EdgeAssignment::constant(g, Rational(1, g.degree(0))));
  std::vector<FFResult> results(probes.size());
  parallel_for(probes.size(), [&](std::size_t i) { results[i] = fractional_forcing_number(g, probes[i], limits); });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].value > results[best].value) best = i;
  }
  out.value = results[best].value;
  out.point = probes[best];
  out.detail = results[best];
  out.exact = false;
  out.probes = probes.size();
  return out;
}

FractionalSpectrum fractional_spectrum(const Graph& g, const Limits& limits) {
  FractionalSpectrum out;
  out.low = graph_ff_min(g, limits).value;
  bool transitive = false;
  try {
    const auto group = automorphism_group(g, limits);
    transitive = group.vertex_transitive && group.edge_transitive && g.edge_count() > 0;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kCapExceeded) throw;
  }
  const auto high = graph_ff_max(g, transitive ? MaxMode::kExactTransitive : MaxMode::kVertexLowerBound, limits);
  out.high = high.value;
  out.high_exact = high.exact;
  return out;
}

}  // namespace forcelab
