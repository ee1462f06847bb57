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
#ifndef FORCELAB_LIMITS_HPP_
#define FORCELAB_LIMITS_HPP_

#include <cstddef>

namespace forcelab {

// Desk-scale caps. Exceeding one raises Error(kCapExceeded) instead of
// running an exponential search to completion.
struct Limits {
  int max_hypercube_n = 20;
  int max_cycle_edges = 64;
  std::size_t max_cycles = 2'000'000;
  std::size_t max_matchings = 1'000'000;
  int max_automorphism_vertices = 12;
  std::size_t max_vertex_structures = 200'000;
  int max_support_edges = 64;
  int max_blue_n = 12;
  int max_lp_blue_n = 6;
};

// Worker count from FORCELAB_THREADS (>= 1); defaults to the hardware count.
unsigned worker_count();

}  // namespace forcelab

#endif  // FORCELAB_LIMITS_HPP_
