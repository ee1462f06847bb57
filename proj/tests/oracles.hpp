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
// Slow reference implementations used only by tests. None of them share code
// paths with the library beyond Graph, EdgeAssignment and Rational.
#ifndef FORCELAB_TESTS_ORACLES_HPP_
#define FORCELAB_TESTS_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "forcelab/graph.hpp"
#include "forcelab/matching.hpp"
#include "forcelab/rational.hpp"

namespace oracle {

using forcelab::Edge;
using forcelab::EdgeAssignment;
using forcelab::EdgeId;
using forcelab::EdgeSet;
using forcelab::Graph;
using forcelab::Rational;
using Mask = std::uint64_t;

// Number of perfect matchings of the subgraph induced on the free vertices.
inline std::uint64_t count_pm_memo(const std::vector<Mask>& adj, Mask free, std::map<Mask, std::uint64_t>& memo) {
  if (free == 0) return 1;
  auto it = memo.find(free);
  if (it != memo.end()) return it->second;
  const int i = __builtin_ctzll(free);
  std::uint64_t total = 0;
  Mask options = adj[static_cast<std::size_t>(i)] & free;
  while (options != 0) {
    const int j = __builtin_ctzll(options);
    options &= options - 1;
    total += count_pm_memo(adj, free & ~(Mask{1} << i) & ~(Mask{1} << j), memo);
  }
  memo[free] = total;
  return total;
}

inline std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(static_cast<std::size_t>(g.vertex_count()), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

inline Mask all_vertices(const Graph& g) {
  return g.vertex_count() == 64 ? ~Mask{0} : (Mask{1} << g.vertex_count()) - 1;
}

inline std::uint64_t count_perfect_matchings(const Graph& g) {
  std::map<Mask, std::uint64_t> memo;
  return count_pm_memo(adjacency_masks(g), all_vertices(g), memo);
}

// Include/exclude branching on edges in index order.
inline void branch_edges(const Graph& g, std::size_t next, Mask covered, EdgeSet& chosen, std::vector<EdgeSet>& out) {
  if (covered == all_vertices(g)) {
    out.push_back(chosen);
    return;
  }
  if (next == static_cast<std::size_t>(g.edge_count())) return;
  const Edge& e = g.edge(static_cast<EdgeId>(next));
  const Mask bits = (Mask{1} << e.u) | (Mask{1} << e.v);
  if ((covered & bits) == 0) {
    chosen.push_back(static_cast<EdgeId>(next));
    branch_edges(g, next + 1, covered | bits, chosen, out);
    chosen.pop_back();
  }
  branch_edges(g, next + 1, covered, chosen, out);
}

inline std::vector<EdgeSet> perfect_matchings(const Graph& g) {
  std::vector<EdgeSet> out;
  EdgeSet chosen;
  branch_edges(g, 0, 0, chosen, out);
  std::sort(out.begin(), out.end());
  return out;
}

// Smallest |S| such that G - V(S) has exactly one perfect matching.
inline int forcing_number(const Graph& g, const EdgeSet& m) {
  const auto adj = adjacency_masks(g);
  std::map<Mask, std::uint64_t> memo;
  const std::size_t k = m.size();
  int best = static_cast<int>(k);
  for (Mask s = 0; s < (Mask{1} << k); ++s) {
    const int size = __builtin_popcountll(s);
    if (size >= best) continue;
    Mask free = all_vertices(g);
    for (std::size_t i = 0; i < k; ++i) {
      if (s >> i & 1U) {
        const Edge& e = g.edge(m[i]);
        free &= ~((Mask{1} << e.u) | (Mask{1} << e.v));
      }
    }
    if (count_pm_memo(adj, free, memo) == 1) best = size;
  }
  return best;
}

// Counts simple cycles as sums of Hamiltonian cycles over vertex subsets,
// rooted at the smallest vertex of each subset.
inline std::uint64_t count_cycles(const Graph& g) {
  const int n = g.vertex_count();
  const auto adj = adjacency_masks(g);
  std::uint64_t twice = 0;
  for (int s = 0; s < n; ++s) {
    // paths[mask][v]: paths from s visiting mask (all >= s), ending at v.
    const int width = n - s;
    std::vector<std::vector<std::uint64_t>> paths(std::size_t{1} << width, std::vector<std::uint64_t>(static_cast<std::size_t>(width), 0));
    paths[1][0] = 1;
    for (Mask mask = 1; mask < (Mask{1} << width); mask += 2) {
      for (int v = 0; v < width; ++v) {
        const std::uint64_t count = paths[mask][static_cast<std::size_t>(v)];
        if (count == 0) continue;
        const int real = v + s;
        if (__builtin_popcountll(mask) >= 3 && (adj[static_cast<std::size_t>(real)] >> s & 1U)) twice += count;
        Mask options = (adj[static_cast<std::size_t>(real)] >> s) & ~mask;
        while (options != 0) {
          const int w = __builtin_ctzll(options);
          options &= options - 1;
          paths[mask | (Mask{1} << w)][static_cast<std::size_t>(w)] += count;
        }
      }
    }
  }
  return twice / 2;
}

inline std::size_t automorphism_count(const Graph& g) {
  std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  std::size_t count = 0;
  do {
    bool ok = true;
    for (const Edge& e : g.edges()) {
      if (!g.adjacent(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)])) {
        ok = false;
        break;
      }
    }
    count += ok ? 1 : 0;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

using Matrix = std::vector<std::vector<Rational>>;

inline std::size_t rank(Matrix m) {
  std::size_t r = 0;
  const std::size_t cols = m.empty() ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t p = r;
    while (p < m.size() && sgn(m[p][c]) == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  return r;
}

// Solves columns * y = b; nullopt when the columns are dependent or the
// system is inconsistent.
inline std::optional<std::vector<Rational>> solve_columns(const Matrix& a, const std::vector<std::size_t>& cols,
                                                          const std::vector<Rational>& b) {
  const std::size_t rows = a.size();
  const std::size_t k = cols.size();
  Matrix m(rows, std::vector<Rational>(k + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < k; ++j) m[i][j] = a[i][cols[j]];
    m[i][k] = b[i];
  }
  std::size_t r = 0;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m[p][c]) == 0) ++p;
    if (p == rows) return std::nullopt;
    std::swap(m[p], m[r]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      const Rational f = m[i][c] / m[r][c];
      for (std::size_t j = c; j <= k; ++j) m[i][j] -= f * m[r][j];
    }
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (sgn(m[i][k]) != 0) return std::nullopt;
  }
  std::vector<Rational> y(k);
  for (std::size_t j = 0; j < k; ++j) y[j] = m[j][k] / m[j][j];
  return y;
}

// All basic feasible solutions of {y >= 0, A y = b}.
inline std::vector<std::vector<Rational>> basic_solutions(const Matrix& a, const std::vector<Rational>& b) {
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  const std::size_t r = rank(a);
  std::vector<std::vector<Rational>> out;
  std::vector<bool> pick(cols, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::size_t> chosen;
    for (std::size_t j = 0; j < cols; ++j) {
      if (pick[j]) chosen.push_back(j);
    }
    const auto y = solve_columns(a, chosen, b);
    if (!y) continue;
    if (std::any_of(y->begin(), y->end(), [](const Rational& v) { return sgn(v) < 0; })) continue;
    std::vector<Rational> full(cols);
    for (std::size_t j = 0; j < chosen.size(); ++j) full[chosen[j]] = (*y)[j];
    if (std::find(out.begin(), out.end(), full) == out.end()) out.push_back(std::move(full));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

inline Matrix incidence(const Graph& g) {
  Matrix a(static_cast<std::size_t>(g.vertex_count()), std::vector<Rational>(static_cast<std::size_t>(g.edge_count())));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    a[static_cast<std::size_t>(g.edge(e).u)][static_cast<std::size_t>(e)] = 1;
    a[static_cast<std::size_t>(g.edge(e).v)][static_cast<std::size_t>(e)] = 1;
  }
  return a;
}

// gamma is the only fractional perfect matching above alpha iff every vertex
// of the (bounded) feasible region equals gamma.
inline bool unique_extension(const Graph& g, const EdgeAssignment& alpha, const EdgeAssignment& gamma) {
  const Matrix a = incidence(g);
  std::vector<Rational> b(static_cast<std::size_t>(g.vertex_count()), Rational(1));
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    b[static_cast<std::size_t>(g.edge(e).u)] -= alpha[e];
    b[static_cast<std::size_t>(g.edge(e).v)] -= alpha[e];
  }
  for (const auto& y : basic_solutions(a, b)) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      if (alpha[e] + y[static_cast<std::size_t>(e)] != gamma[e]) return false;
    }
  }
  return true;
}

// Minimum of sum gamma(S) over subsets S of the support forcing gamma.
inline Rational fractional_forcing_number(const Graph& g, const EdgeAssignment& gamma) {
  const EdgeSet supp = forcelab::support(gamma);
  std::vector<std::pair<Rational, Mask>> subsets;
  for (Mask s = 0; s < (Mask{1} << supp.size()); ++s) {
    Rational total = 0;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (s >> i & 1U) total += gamma[supp[i]];
    }
    subsets.emplace_back(total, s);
  }
  std::sort(subsets.begin(), subsets.end());
  for (const auto& [total, s] : subsets) {
    EdgeSet chosen;
    for (std::size_t i = 0; i < supp.size(); ++i) {
      if (s >> i & 1U) chosen.push_back(supp[i]);
    }
    if (unique_extension(g, gamma.restricted_to(chosen), gamma)) return total;
  }
  throw std::logic_error("the full support always forces");
}

inline std::optional<Rational> min_hitting_weight(const std::vector<Rational>& weights, const std::vector<Mask>& sets) {
  std::optional<Rational> best;
  for (Mask s = 0; s < (Mask{1} << weights.size()); ++s) {
    if (!std::all_of(sets.begin(), sets.end(), [&](Mask t) { return (t & s) != 0; })) continue;
    Rational total = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      if (s >> i & 1U) total += weights[i];
    }
    if (!best || total < *best) best = total;
  }
  return best;
}

// Connected-or-not simple graph with each pair present with probability p.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) pairs.emplace_back(u, v);
    }
  }
  return Graph::make(n, pairs);
}

inline Graph random_bipartite_graph(int left, int right, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < left; ++u) {
    for (int v = 0; v < right; ++v) {
      if (coin(rng)) pairs.emplace_back(u, left + v);
    }
  }
  return Graph::make(left + right, pairs);
}

}  // namespace oracle

#endif  // FORCELAB_TESTS_ORACLES_HPP_
