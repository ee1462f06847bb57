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
#ifndef FORCELAB_HYPERCUBE_HPP_
#define FORCELAB_HYPERCUBE_HPP_

#include <optional>
#include <string>

#include "forcelab/forcing_fractional.hpp"
#include "forcelab/graph.hpp"
#include "forcelab/rational.hpp"

namespace forcelab {

// Vertex labels: bit a_1 is the most significant bit of the vertex index.
struct BlueSet {
  int n = 0;
  EdgeSet blue;  // edge indices of hypercube(n)
  EdgeSet red;
};

BlueSet base_blue_set();

// (a_2, ..., a_n) if a_1 = 0, else (1 - a_2, a_3, ..., a_n).
BitVector fold_map(int n, std::span<const std::uint8_t> bits);

// n = 4 gives the base set; larger n takes preimages under fold_map.
BlueSet build_blue_set(int n, const Limits& limits = {});

enum class BlueMethod { kLp, kCycles };

struct BlueVerification {
  int n = 0;
  BlueMethod method = BlueMethod::kLp;
  bool verified = false;
  std::optional<ForcingCertificate> certificate;      // kLp
  std::size_t cycles_checked = 0;                     // kCycles
  std::optional<CycleWithClasses> unhit_cycle;        // kCycles, on failure
};

BlueVerification verify_blue_set(int n, BlueMethod method, const Limits& limits = {});

// Checks whether the uniform 1/deg assignment restricted to edges forces
// the uniform assignment on a regular graph.
BlueVerification verify_support_lp(const Graph& g, const EdgeSet& edges);
BlueVerification verify_support_cycles(const Graph& g, const EdgeSet& edges, const Limits& limits = {});

Rational ff_upper_bound(int n);
Integer forcing_upper_bound(int n);
Rational reported_lower_bound(int n, const Rational& a);

std::string method_name(BlueMethod method);
BlueMethod parse_blue_method(const std::string& text);

}  // namespace forcelab

#endif  // FORCELAB_HYPERCUBE_HPP_
