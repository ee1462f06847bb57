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
#ifndef FORCELAB_HITTING_SET_HPP_
#define FORCELAB_HITTING_SET_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "forcelab/rational.hpp"

namespace forcelab {

// Subsets of a universe of at most 64 elements.
using ElementMask = std::uint64_t;

// Exact minimum-weight hitting set by branch and bound. Returns nullopt when
// some set is empty. Ties resolve deterministically toward the first
// solution found in the (weight, index) element order.
std::optional<ElementMask> min_weight_hitting_set(std::span<const Rational> weights,
                                                  std::span<const ElementMask> sets);

// Drops duplicates and supersets; result sorted by size, then value.
std::vector<ElementMask> minimal_sets(std::span<const ElementMask> sets);

inline int popcount(ElementMask m) { return __builtin_popcountll(m); }

}  // namespace forcelab

#endif  // FORCELAB_HITTING_SET_HPP_
