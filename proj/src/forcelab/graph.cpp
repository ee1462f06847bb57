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
#include "forcelab/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "forcelab/error.hpp"

namespace forcelab {

Graph Graph::make(int vertex_count, std::span<const std::pair<int, int>> pairs) {
  if (vertex_count < 0) fail(ErrorCode::kInvalidArgument, "negative vertex count");
  Graph g;
  g.vertex_count_ = vertex_count;
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a < 0 || b < 0 || a >= vertex_count || b >= vertex_count) {
      fail(ErrorCode::kInvalidArgument, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                            ") has an endpoint out of range");
    }
    if (a == b) fail(ErrorCode::kInvalidArgument, "self-loop at vertex " + std::to_string(a));
    g.edges_.push_back(Edge{std::min(a, b), std::max(a, b)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  auto dup = std::adjacent_find(g.edges_.begin(), g.edges_.end());
  if (dup != g.edges_.end()) {
    fail(ErrorCode::kInvalidArgument, "duplicate edge (" + std::to_string(dup->u) + "," +
                                          std::to_string(dup->v) + ")");
  }

  std::vector<std::size_t> deg(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const Edge& e : g.edges_) {
    ++deg[static_cast<std::size_t>(e.u) + 1];
    ++deg[static_cast<std::size_t>(e.v) + 1];
  }
  for (std::size_t i = 1; i < deg.size(); ++i) deg[i] += deg[i - 1];
  g.offsets_ = deg;
  g.incidences_.resize(g.edges_.size() * 2);
  std::vector<std::size_t> fill(deg.begin(), deg.end() - 1);
  for (EdgeId id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edges_[static_cast<std::size_t>(id)];
    g.incidences_[fill[static_cast<std::size_t>(e.u)]++] = Incidence{e.v, id};
    g.incidences_[fill[static_cast<std::size_t>(e.v)]++] = Incidence{e.u, id};
  }
  // Edge order makes each incidence list sorted by neighbor already for the
  // smaller endpoint; sort explicitly so both directions agree.
  for (int v = 0; v < vertex_count; ++v) {
    auto first = g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(v)]);
    auto last = g.incidences_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[static_cast<std::size_t>(v) + 1]);
    std::sort(first, last, [](const Incidence& x, const Incidence& y) { return x.neighbor < y.neighbor; });
  }
  return g;
}

std::optional<EdgeId> Graph::edge_index(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
  const Edge key{std::min(u, v), std::max(u, v)};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return std::nullopt;
  return static_cast<EdgeId>(it - edges_.begin());
}

std::span<const Incidence> Graph::incident(int v) const {
  const auto b = offsets_[static_cast<std::size_t>(v)];
  const auto e = offsets_[static_cast<std::size_t>(v) + 1];
  return std::span<const Incidence>(incidences_.data() + b, e - b);
}

Graph Graph::with_family(Family family, int parameter) const {
  Graph copy = *this;
  copy.family_ = family;
  copy.family_parameter_ = parameter;
  return copy;
}

int hamming(std::span<const std::uint8_t> a, std::span<const std::uint8_t> b) {
  if (a.size() != b.size()) {
    fail(ErrorCode::kInvalidArgument, "hamming: length mismatch (" + std::to_string(a.size()) +
                                          " vs " + std::to_string(b.size()) + ")");
  }
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != 0) != (b[i] != 0) ? 1 : 0;
  return d;
}

int weight(std::span<const std::uint8_t> a) {
  const BitVector zero(a.size(), 0);
  return hamming(a, zero);
}

BitVector to_bits(std::uint64_t vertex, int n) {
  BitVector bits(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (vertex >> (n - 1 - i)) & 1U;
  return bits;
}

std::uint64_t from_bits(std::span<const std::uint8_t> bits) {
  std::uint64_t v = 0;
  for (auto b : bits) v = (v << 1) | (b ? 1U : 0U);
  return v;
}

Graph hypercube(int n, const Limits& limits) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "hypercube dimension must be >= 1");
  if (n > limits.max_hypercube_n) {
    fail(ErrorCode::kCapExceeded, "hypercube dimension " + std::to_string(n) +
                                      " exceeds cap " + std::to_string(limits.max_hypercube_n));
  }
  const int count = 1 << n;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(count) / 2);
  for (int v = 0; v < count; ++v) {
    for (int bit = 0; bit < n; ++bit) {
      const int w = v ^ (1 << bit);
      if (v < w) pairs.emplace_back(v, w);
    }
  }
  return Graph::make(count, pairs).with_family(Family::kHypercube, n);
}

Graph cycle_graph(int n) {
  if (n < 3) fail(ErrorCode::kInvalidArgument, "cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i) pairs.emplace_back(i, (i + 1) % n);
  return Graph::make(n, pairs).with_family(Family::kCycle, n);
}

Graph path_graph(int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "path needs at least 1 vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph::make(n, pairs);
}

Graph complete_graph(int n) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "complete graph needs at least 1 vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  return Graph::make(n, pairs).with_family(Family::kComplete, n);
}

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.vertex_count() == 0 || h.vertex_count() == 0) {
    fail(ErrorCode::kInvalidArgument, "cartesian product of an empty graph");
  }
  const int nh = h.vertex_count();
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges())
    for (int y = 0; y < nh; ++y) pairs.emplace_back(e.u * nh + y, e.v * nh + y);
  for (int x = 0; x < g.vertex_count(); ++x)
    for (const Edge& e : h.edges()) pairs.emplace_back(x * nh + e.u, x * nh + e.v);
  return Graph::make(g.vertex_count() * nh, pairs);
}

std::vector<int> bfs_distances(const Graph& g, int source) {
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> queue;
  dist[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (const Incidence& inc : g.incident(u)) {
      auto& d = dist[static_cast<std::size_t>(inc.neighbor)];
      if (d < 0) {
        d = dist[static_cast<std::size_t>(u)] + 1;
        queue.push(inc.neighbor);
      }
    }
  }
  return dist;
}

BipartiteCheck check_bipartite(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.vertex_count());
  BipartiteCheck result;
  std::vector<int> side(n, -1), parent(n, -1), depth(n, 0);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (side[static_cast<std::size_t>(root)] >= 0) continue;
    side[static_cast<std::size_t>(root)] = 0;
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (const Incidence& inc : g.incident(u)) {
        const int w = inc.neighbor;
        const auto uw = static_cast<std::size_t>(w), uu = static_cast<std::size_t>(u);
        if (side[uw] < 0) {
          side[uw] = 1 - side[uu];
          parent[uw] = u;
          depth[uw] = depth[uu] + 1;
          queue.push(w);
        } else if (side[uw] == side[uu]) {
          // Walk both endpoints up to their common ancestor.
          std::vector<int> left{u}, right{w};
          int a = u, b = w;
          while (depth[static_cast<std::size_t>(a)] > depth[static_cast<std::size_t>(b)]) {
            a = parent[static_cast<std::size_t>(a)];
            left.push_back(a);
          }
          while (depth[static_cast<std::size_t>(b)] > depth[static_cast<std::size_t>(a)]) {
            b = parent[static_cast<std::size_t>(b)];
            right.push_back(b);
          }
          while (a != b) {
            a = parent[static_cast<std::size_t>(a)];
            b = parent[static_cast<std::size_t>(b)];
            left.push_back(a);
            right.push_back(b);
          }
          right.pop_back();  // common ancestor already in left
          result.odd_cycle = left;
          result.odd_cycle.insert(result.odd_cycle.end(), right.rbegin(), right.rend());
          return result;
        }
      }
    }
  }
  result.bipartite = true;
  result.side = std::move(side);
  return result;
}

Graph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  long long n = -1, m = -1;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    fail(ErrorCode::kParse, "graph text: expected header 'n m'");
  }
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = -1, v = -1;
    if (!(in >> u >> v)) {
      fail(ErrorCode::kParse, "graph text: expected " + std::to_string(m) + " edge lines, got " +
                                  std::to_string(i));
    }
    if (u < 0 || v >= n || u >= v) {
      fail(ErrorCode::kParse, "graph text: edge line " + std::to_string(i + 2) +
                                  " must satisfy 0 <= u < v < n");
    }
    pairs.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  std::string trailing;
  if (in >> trailing) fail(ErrorCode::kParse, "graph text: trailing content '" + trailing + "'");
  try {
    return Graph::make(static_cast<int>(n), pairs);
  } catch (const Error& e) {
    fail(ErrorCode::kParse, std::string("graph text: ") + e.what());
  }
}

std::string to_graph_text(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (const Edge& e : g.edges()) out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  return out;
}

}  // namespace forcelab
