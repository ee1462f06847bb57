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
#include "forcelab/forcing_integral.hpp"

#include <algorithm>

#include "forcelab/error.hpp"
#include "forcelab/hitting_set.hpp"
#include "forcelab/parallel.hpp"

namespace forcelab {

namespace {

void require_matching_and_subset(const Graph& g, const Matching& m, const EdgeSet& s) {
  if (!is_perfect_matching(g, m)) fail(ErrorCode::kPrecondition, "M is not a perfect matching");
  for (EdgeId e : s) {
    if (!std::binary_search(m.begin(), m.end(), e)) {
      fail(ErrorCode::kPrecondition, "S is not a subset of M (edge " + std::to_string(e) + ")");
    }
  }
}

EdgeSet sorted_unique(EdgeSet s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ForcingCheck check_forcing(const Graph& g, const Matching& m, const EdgeSet& s) {
  ForcingCheck result;
  for (auto& other : perfect_matchings_containing(g, s, 2)) {
    if (other != m) {
      result.witness = std::move(other);
      return result;
    }
  }
  result.forcing = true;
  return result;
}

}  // namespace

ForcingCheck is_forcing_set(const Graph& g, const Matching& m, const EdgeSet& s) {
  const Matching mm = sorted_unique(m);
  const EdgeSet ss = sorted_unique(s);
  require_matching_and_subset(g, mm, ss);
  return check_forcing(g, mm, ss);
}

ForcingNumber forcing_number(const Graph& g, const Matching& m, const Limits& limits) {
  const Matching mm = sorted_unique(m);
  require_matching_and_subset(g, mm, {});
  if (static_cast<int>(mm.size()) > std::min(limits.max_support_edges, 64)) {
    fail(ErrorCode::kCapExceeded, "forcing_number: matching has more than " +
                                      std::to_string(std::min(limits.max_support_edges, 64)) + " edges");
  }
  const std::vector<Rational> unit(mm.size(), Rational(1));
  std::vector<ElementMask> constraints;
  for (;;) {
    const auto hit = min_weight_hitting_set(unit, constraints);
    if (!hit) fail(ErrorCode::kInternal, "forcing_number: empty constraint");
    EdgeSet candidate;
    for (std::size_t i = 0; i < mm.size(); ++i) {
      if (*hit >> i & 1U) candidate.push_back(mm[i]);
    }
    ForcingCheck check = check_forcing(g, mm, candidate);
    if (check.forcing) return ForcingNumber{static_cast<int>(candidate.size()), std::move(candidate)};
    ElementMask differs = 0;
    for (std::size_t i = 0; i < mm.size(); ++i) {
      if (!std::binary_search(check.witness->begin(), check.witness->end(), mm[i])) differs |= ElementMask{1} << i;
    }
    constraints.push_back(differs);
  }
}

ForcingStats graph_forcing_stats(const Graph& g, const Limits& limits) {
  auto matchings = enumerate_perfect_matchings(g, limits);
  if (matchings.empty()) fail(ErrorCode::kNoPerfectMatching, "graph has no perfect matching");
  std::vector<ForcingNumber> numbers(matchings.size());
  parallel_for(matchings.size(), [&](std::size_t i) { numbers[i] = forcing_number(g, matchings[i], limits); });
  ForcingStats stats;
  for (std::size_t i = 0; i < matchings.size(); ++i) {
    stats.spectrum.push_back(numbers[i].value);
    stats.table.emplace_back(std::move(matchings[i]), std::move(numbers[i]));
  }
  std::sort(stats.spectrum.begin(), stats.spectrum.end());
  stats.spectrum.erase(std::unique(stats.spectrum.begin(), stats.spectrum.end()), stats.spectrum.end());
  stats.f = stats.spectrum.front();
  stats.F = stats.spectrum.back();
  return stats;
}

}  // namespace forcelab
