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
#ifndef FORCELAB_FORCING_INTEGRAL_HPP_
#define FORCELAB_FORCING_INTEGRAL_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/matching.hpp"

namespace forcelab {

struct ForcingCheck {
  bool forcing = false;
  std::optional<Matching> witness;  // another perfect matching containing S
};

// Whether M is the only perfect matching containing S. Throws
// kPrecondition if M is not a perfect matching or S is not a subset of M.
ForcingCheck is_forcing_set(const Graph& g, const Matching& m, const EdgeSet& s);

struct ForcingNumber {
  int value = 0;
  EdgeSet forcing_set;  // an optimal forcing set
};

// Minimum forcing set of M. Every failed candidate S yields a second
// matching M'; all forcing sets must then meet M \ M', so the search solves
// minimum hitting sets over the accumulated M \ M' constraints until the
// optimum candidate is itself forcing.
ForcingNumber forcing_number(const Graph& g, const Matching& m, const Limits& limits = {});

struct ForcingStats {
  int f = 0;
  int F = 0;
  std::vector<int> spectrum;  // sorted, unique
  std::vector<std::pair<Matching, ForcingNumber>> table;
};

// Throws kNoPerfectMatching when G has none.
ForcingStats graph_forcing_stats(const Graph& g, const Limits& limits = {});

}  // namespace forcelab

#endif  // FORCELAB_FORCING_INTEGRAL_HPP_
