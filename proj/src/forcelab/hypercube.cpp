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
#include "forcelab/hypercube.hpp"

#include <algorithm>
#include <array>
#include <map>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

constexpr std::array<std::array<const char*, 2>, 14> kBaseEdges = {{
    {"0101", "0100"},
    {"0100", "0110"},
    {"0110", "0010"},
    {"0010", "0011"},
    {"0011", "0001"},
    {"0001", "0101"},
    {"0011", "0111"},
    {"1101", "1111"},
    {"1111", "1110"},
    {"1110", "1010"},
    {"1010", "1000"},
    {"1000", "1001"},
    {"1001", "1101"},
    {"1000", "1100"},
}};

int label_to_vertex(const char* label) {
  int v = 0;
  for (const char* p = label; *p != '\0'; ++p) v = 2 * v + (*p - '0');
  return v;
}

EdgeSet complement(const Graph& g, const EdgeSet& blue) {
  EdgeSet red;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (!std::binary_search(blue.begin(), blue.end(), e)) red.push_back(e);
  }
  return red;
}

void require_bound_dimension(int n) {
  if (n < 4) fail(ErrorCode::kInvalidArgument, "bound needs n >= 4");
  if (n > 100000) fail(ErrorCode::kCapExceeded, "bound dimension too large");
}

}  // namespace

BlueSet base_blue_set() {
  const Graph q4 = hypercube(4);
  BlueSet out;
  out.n = 4;
  for (const auto& [a, b] : kBaseEdges) out.blue.push_back(*q4.edge_index(label_to_vertex(a), label_to_vertex(b)));
  for (int v = 0; v < 8; ++v) out.blue.push_back(*q4.edge_index(v, v | 8));
  std::sort(out.blue.begin(), out.blue.end());
  out.blue.erase(std::unique(out.blue.begin(), out.blue.end()), out.blue.end());
  out.red = complement(q4, out.blue);
  return out;
}

BitVector fold_map(int n, std::span<const std::uint8_t> bits) {
  if (n < 2) fail(ErrorCode::kInvalidArgument, "fold_map needs n >= 2");
  if (static_cast<int>(bits.size()) != n) fail(ErrorCode::kInvalidArgument, "bit vector length differs from n");
  BitVector out(bits.begin() + 1, bits.end());
  if (bits[0] == 1) out[0] = static_cast<std::uint8_t>(1 - out[0]);
  return out;
}

BlueSet build_blue_set(int n, const Limits& limits) {
  if (n < 4) fail(ErrorCode::kInvalidArgument, "blue sets start at n = 4");
  if (n > limits.max_blue_n) {
    fail(ErrorCode::kCapExceeded, "blue set dimension " + std::to_string(n) + " exceeds cap " +
                                      std::to_string(limits.max_blue_n));
  }
  if (n == 4) return base_blue_set();
  const BlueSet lower = build_blue_set(n - 1, limits);
  const Graph below = hypercube(n - 1, limits);
  const Graph g = hypercube(n, limits);
  BlueSet out;
  out.n = n;
  std::map<EdgeId, int> red_lifts;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edge(e);
    const auto a = from_bits(fold_map(n, to_bits(static_cast<std::uint64_t>(ed.u), n)));
    const auto b = from_bits(fold_map(n, to_bits(static_cast<std::uint64_t>(ed.v), n)));
    const auto image = below.edge_index(static_cast<int>(a), static_cast<int>(b));
    if (!image) fail(ErrorCode::kInternal, "fold_map does not preserve adjacency");
    if (std::binary_search(lower.blue.begin(), lower.blue.end(), *image)) {
      out.blue.push_back(e);
    } else {
      out.red.push_back(e);
      ++red_lifts[*image];
    }
  }
  if (red_lifts.size() != lower.red.size()) fail(ErrorCode::kInternal, "a red edge has no preimage");
  for (const auto& [edge, count] : red_lifts) {
    if (count != 2) fail(ErrorCode::kInternal, "red edge " + std::to_string(edge) + " does not lift to 2 edges");
  }
  return out;
}

BlueVerification verify_support_lp(const Graph& g, const EdgeSet& edges) {
  if (g.vertex_count() == 0 || g.degree(0) == 0) fail(ErrorCode::kInvalidArgument, "graph has no edges");
  for (int v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != g.degree(0)) fail(ErrorCode::kPrecondition, "graph is not regular");
  }
  const EdgeAssignment gamma = EdgeAssignment::constant(g, Rational(1, g.degree(0)));
  BlueVerification out;
  out.method = BlueMethod::kLp;
  out.certificate = extension_unique(g, VertexWeights::ones(g), gamma.restricted_to(edges), gamma);
  out.verified = out.certificate->unique();
  return out;
}

BlueVerification verify_support_cycles(const Graph& g, const EdgeSet& edges, const Limits& limits) {
  BlueVerification out;
  out.method = BlueMethod::kCycles;
  auto hits = [&](const EdgeSet& cls) {
    return std::any_of(cls.begin(), cls.end(),
                       [&](EdgeId e) { return std::find(edges.begin(), edges.end(), e) != edges.end(); });
  };
  for (auto& cycle : enumerate_cycles(g, limits)) {
    if (cycle.odd) continue;
    ++out.cycles_checked;
    if (!hits(cycle.class_a) || !hits(cycle.class_b)) {
      out.unhit_cycle = std::move(cycle);
      return out;
    }
  }
  out.verified = true;
  return out;
}

BlueVerification verify_blue_set(int n, BlueMethod method, const Limits& limits) {
  if (method == BlueMethod::kCycles && n != 4) {
    fail(ErrorCode::kInvalidArgument, "cycles method is only available for n = 4");
  }
  if (method == BlueMethod::kLp && n > limits.max_lp_blue_n) {
    fail(ErrorCode::kCapExceeded, "lp verification dimension " + std::to_string(n) + " exceeds cap " +
                                      std::to_string(limits.max_lp_blue_n));
  }
  const BlueSet blue = build_blue_set(n, limits);
  const Graph g = hypercube(n, limits);
  BlueVerification out = method == BlueMethod::kLp ? verify_support_lp(g, blue.blue)
                                                   : verify_support_cycles(g, blue.blue, limits);
  out.n = n;
  return out;
}

Rational ff_upper_bound(int n) {
  require_bound_dimension(n);
  Integer half;
  mpz_ui_pow_ui(half.get_mpz_t(), 2, static_cast<unsigned long>(n - 3));
  Rational out(Integer(n) * 4 * half - 5 * half, Integer(n));
  out.canonicalize();
  return out;
}

Integer forcing_upper_bound(int n) {
  const Rational bound = ff_upper_bound(n);
  Integer out;
  mpz_fdiv_q(out.get_mpz_t(), bound.get_num_mpz_t(), bound.get_den_mpz_t());
  return out;
}

Rational reported_lower_bound(int n, const Rational& a) {
  if (n < 1) fail(ErrorCode::kInvalidArgument, "n must be positive");
  if (n > 100000) fail(ErrorCode::kCapExceeded, "bound dimension too large");
  if (sgn(a) <= 0 || a >= 1) fail(ErrorCode::kInvalidArgument, "a must lie strictly between 0 and 1");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 2, static_cast<unsigned long>(n - 1));
  return a * Rational(scale);
}

std::string method_name(BlueMethod method) { return method == BlueMethod::kLp ? "lp" : "cycles"; }

BlueMethod parse_blue_method(const std::string& text) {
  if (text == "lp") return BlueMethod::kLp;
  if (text == "cycles") return BlueMethod::kCycles;
  fail(ErrorCode::kInvalidArgument, "unknown method: " + text);
}

}  // namespace forcelab
