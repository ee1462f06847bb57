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
#ifndef FORCELAB_GRAPH_HPP_
#define FORCELAB_GRAPH_HPP_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "forcelab/limits.hpp"

namespace forcelab {

using EdgeId = int;
using EdgeSet = std::vector<EdgeId>;  // sorted, unique

struct Edge {
  int u;
  int v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  int neighbor;
  EdgeId edge;
};

// Graphs whose automorphism group is known in closed form. Generators tag
// their output so transitivity queries can skip the brute-force search.
enum class Family { kNone, kHypercube, kCycle, kComplete };

// Immutable simple undirected graph. Edges are stored as (u, v) with u < v,
// sorted lexicographically; an edge's index is its position in that order.
class Graph {
 public:
  Graph() = default;

  // Throws Error(kInvalidArgument) on self-loops, duplicates, or endpoints
  // outside [0, vertex_count). Pairs may be given in either orientation.
  static Graph make(int vertex_count, std::span<const std::pair<int, int>> pairs);
  static Graph make(int vertex_count, std::initializer_list<std::pair<int, int>> pairs) {
    return make(vertex_count, std::span<const std::pair<int, int>>(pairs.begin(), pairs.size()));
  }

  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_[static_cast<std::size_t>(e)]; }
  std::optional<EdgeId> edge_index(int u, int v) const;
  bool adjacent(int u, int v) const { return edge_index(u, v).has_value(); }

  std::span<const Incidence> incident(int v) const;
  int degree(int v) const { return static_cast<int>(incident(v).size()); }

  Family family() const { return family_; }
  int family_parameter() const { return family_parameter_; }
  Graph with_family(Family family, int parameter) const;

  // Structural equality; the family tag is metadata and not compared.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  int vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_;  // CSR over incidences_
  std::vector<Incidence> incidences_;
  Family family_ = Family::kNone;
  int family_parameter_ = 0;
};

// Bit vectors index coordinate 0 as the most significant bit a_1.
using BitVector = std::vector<std::uint8_t>;

int hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b);
int weight(std::span<const std::uint8_t> a);
BitVector to_bits(std::uint64_t vertex, int n);
std::uint64_t from_bits(std::span<const std::uint8_t> bits);

// Generators.
Graph hypercube(int n, const Limits& limits = {});
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph complete_graph(int n);
// Vertex (g, h) has index g * |V(H)| + h.
Graph cartesian_product(const Graph& g, const Graph& h);

std::vector<int> bfs_distances(const Graph& g, int source);

struct BipartiteCheck {
  bool bipartite = false;
  std::vector<int> side;        // 0/1 per vertex when bipartite
  std::vector<int> odd_cycle;   // closed vertex sequence (first vertex not repeated)
};

BipartiteCheck check_bipartite(const Graph& g);

// A simple cycle with its two alternating edge classes. For odd cycles the
// classes are left empty.
struct CycleWithClasses {
  std::vector<int> vertices;   // starts at the smallest vertex
  std::vector<EdgeId> edges;   // edges[i] joins vertices[i] and vertices[i+1 mod k]
  bool odd = false;
  EdgeSet class_a;
  EdgeSet class_b;
};

// Every simple cycle exactly once (up to rotation and reflection), in a
// deterministic order. Raises kCapExceeded above limits.max_cycle_edges
// edges or limits.max_cycles cycles.
std::vector<CycleWithClasses> enumerate_cycles(const Graph& g, const Limits& limits = {});

struct Automorphism {
  std::vector<int> vertex_perm;
  std::vector<EdgeId> edge_perm;  // edge_perm[e] is the index of sigma(e)
};

struct AutomorphismGroup {
  std::vector<Automorphism> elements;  // empty when attested
  bool vertex_transitive = false;
  bool edge_transitive = false;
  bool attested = false;  // flags come from a known family, not a search
};

// Induced edge permutation for a vertex map; nullopt if it is not an
// automorphism.
std::optional<Automorphism> as_automorphism(const Graph& g, std::span<const int> vertex_perm);

AutomorphismGroup automorphism_group(const Graph& g, const Limits& limits = {});

// Text format: "n m" then m lines "u v" with u < v.
Graph parse_graph_text(const std::string& text);
std::string to_graph_text(const Graph& g);

}  // namespace forcelab

#endif  // FORCELAB_GRAPH_HPP_
