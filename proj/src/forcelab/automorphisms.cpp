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
#include <algorithm>
#include <numeric>

#include "forcelab/error.hpp"
#include "forcelab/graph.hpp"

namespace forcelab {

std::optional<Automorphism> as_automorphism(const Graph& g, std::span<const int> vertex_perm) {
  const int n = g.vertex_count();
  if (static_cast<int>(vertex_perm.size()) != n) return std::nullopt;
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int x : vertex_perm) {
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)]) return std::nullopt;
    seen[static_cast<std::size_t>(x)] = true;
  }
  Automorphism a;
  a.vertex_perm.assign(vertex_perm.begin(), vertex_perm.end());
  a.edge_perm.reserve(static_cast<std::size_t>(g.edge_count()));
  for (const Edge& e : g.edges()) {
    auto image = g.edge_index(vertex_perm[static_cast<std::size_t>(e.u)],
                              vertex_perm[static_cast<std::size_t>(e.v)]);
    if (!image) return std::nullopt;
    a.edge_perm.push_back(*image);
  }
  // Injective on vertices and edge-preserving on a finite graph, hence a
  // bijection on edges.
  return a;
}

namespace {

class AutomorphismSearch {
 public:
  explicit AutomorphismSearch(const Graph& g)
      : g_(g),
        n_(g.vertex_count()),
        image_(static_cast<std::size_t>(n_), -1),
        used_(static_cast<std::size_t>(n_), false) {}

  std::vector<Automorphism> run() {
    assign(0);
    return std::move(found_);
  }

 private:
  void assign(int v) {
    if (v == n_) {
      auto a = as_automorphism(g_, image_);
      if (a) found_.push_back(std::move(*a));
      return;
    }
    for (int candidate = 0; candidate < n_; ++candidate) {
      if (used_[static_cast<std::size_t>(candidate)] || g_.degree(candidate) != g_.degree(v)) continue;
      if (!consistent(v, candidate)) continue;
      image_[static_cast<std::size_t>(v)] = candidate;
      used_[static_cast<std::size_t>(candidate)] = true;
      assign(v + 1);
      used_[static_cast<std::size_t>(candidate)] = false;
      image_[static_cast<std::size_t>(v)] = -1;
    }
  }

  // Adjacency to every already-mapped vertex must be preserved both ways.
  bool consistent(int v, int candidate) const {
    for (int u = 0; u < v; ++u) {
      if (g_.adjacent(u, v) != g_.adjacent(image_[static_cast<std::size_t>(u)], candidate)) return false;
    }
    return true;
  }

  const Graph& g_;
  int n_;
  std::vector<int> image_;
  std::vector<bool> used_;
  std::vector<Automorphism> found_;
};

}  // namespace

AutomorphismGroup automorphism_group(const Graph& g, const Limits& limits) {
  AutomorphismGroup group;
  if (g.vertex_count() > limits.max_automorphism_vertices) {
    if (g.family() == Family::kNone) {
      fail(ErrorCode::kCapExceeded,
           "automorphism search limited to " + std::to_string(limits.max_automorphism_vertices) +
               " vertices and the graph carries no known-family attestation");
    }
    // Hypercubes, cycles and complete graphs are vertex- and edge-transitive.
    group.attested = true;
    group.vertex_transitive = true;
    group.edge_transitive = true;
    return group;
  }
  group.elements = AutomorphismSearch(g).run();

  std::vector<bool> vertex_orbit(static_cast<std::size_t>(g.vertex_count()), false);
  std::vector<bool> edge_orbit(static_cast<std::size_t>(g.edge_count()), false);
  for (const Automorphism& a : group.elements) {
    if (g.vertex_count() > 0) vertex_orbit[static_cast<std::size_t>(a.vertex_perm[0])] = true;
    if (g.edge_count() > 0) edge_orbit[static_cast<std::size_t>(a.edge_perm[0])] = true;
  }
  auto all = [](const std::vector<bool>& v) { return std::all_of(v.begin(), v.end(), [](bool b) { return b; }); };
  group.vertex_transitive = all(vertex_orbit);
  group.edge_transitive = all(edge_orbit);
  return group;
}

}  // namespace forcelab
