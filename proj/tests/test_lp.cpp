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
#include <doctest.h>

#include <random>

#include "forcelab/error.hpp"
#include "forcelab/lp.hpp"
#include "oracles.hpp"

using namespace forcelab;

namespace {

RationalMatrix to_matrix(const oracle::Matrix& m) {
  RationalMatrix out(m.size(), m.empty() ? 0 : m[0].size());
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out.at(i, j) = m[i][j];
  }
  return out;
}

oracle::Matrix random_matrix(std::size_t rows, std::size_t cols, int lo, int hi, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(lo, hi);
  oracle::Matrix m(rows, std::vector<Rational>(cols));
  for (auto& row : m) {
    for (auto& v : row) v = dist(rng);
  }
  return m;
}

}  // namespace

TEST_CASE("rank and null space") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 60; ++t) {
    auto m = random_matrix(4, 6, -2, 2, rng);
    if (t % 3 == 0) m[3] = m[1];
    const RationalMatrix a = to_matrix(m);
    const std::size_t r = matrix_rank(a);
    CHECK(r == oracle::rank(m));
    const auto kernel = null_space(a);
    CHECK(kernel.size() == a.cols() - r);
    for (const auto& v : kernel) {
      for (std::size_t i = 0; i < a.rows(); ++i) {
        Rational s = 0;
        for (std::size_t j = 0; j < a.cols(); ++j) s += a.at(i, j) * v[j];
        CHECK(s == 0);
      }
    }
  }
}

TEST_CASE("simplex optimum equals the best basic solution") {
  std::mt19937_64 rng(17);
  int feasible = 0;
  for (int t = 0; t < 150; ++t) {
    const std::size_t rows = 2 + static_cast<std::size_t>(t % 3);
    const std::size_t cols = rows + 2 + static_cast<std::size_t>(t % 4);
    auto m = random_matrix(rows, cols, 0, 3, rng);
    for (auto& row : m) row[0] = row[0] + 1;  // positive column keeps the region bounded
    std::vector<Rational> b(rows);
    std::uniform_int_distribution<int> rhs(0, 6);
    for (auto& v : b) v = rhs(rng);
    if (t % 5 == 0) m[rows - 1] = m[0], b[rows - 1] = b[0];
    std::vector<Rational> c(cols);
    std::uniform_int_distribution<int> obj(-3, 3);
    for (auto& v : c) v = obj(rng);

    const auto vertices = oracle::basic_solutions(m, b);
    const StandardFormLp lp(to_matrix(m), b);
    CHECK(lp.feasible() == !vertices.empty());
    if (vertices.empty()) continue;
    ++feasible;
    const auto point = lp.feasible_point();
    for (std::size_t i = 0; i < rows; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += m[i][j] * point[j];
      CHECK(s == b[i]);
    }
    std::optional<Rational> best;
    for (const auto& v : vertices) {
      Rational s = 0;
      for (std::size_t j = 0; j < cols; ++j) s += c[j] * v[j];
      if (!best || s > *best) best = s;
    }
    // Positive rows bound every variable that appears in them; columns of
    // zeros with positive cost make the problem unbounded.
    bool unbounded = false;
    for (std::size_t j = 0; j < cols; ++j) {
      bool zero_col = true;
      for (std::size_t i = 0; i < rows; ++i) zero_col = zero_col && sgn(m[i][j]) == 0;
      unbounded = unbounded || (zero_col && sgn(c[j]) > 0);
    }
    const auto sol = lp.maximize(c);
    if (unbounded) {
      CHECK(sol.status == LpStatus::kUnbounded);
      continue;
    }
    REQUIRE(sol.status == LpStatus::kOptimal);
    CHECK(sol.objective == *best);
    Rational s = 0;
    for (std::size_t j = 0; j < cols; ++j) {
      CHECK(sgn(sol.x[j]) >= 0);
      s += c[j] * sol.x[j];
    }
    CHECK(s == sol.objective);
  }
  CHECK(feasible > 50);
}

TEST_CASE("infeasible and negative right-hand sides") {
  RationalMatrix a(1, 2);
  a.at(0, 0) = 1;
  a.at(0, 1) = 1;
  const std::vector<Rational> neg{-1};
  CHECK_FALSE(StandardFormLp(a, neg).feasible());
  RationalMatrix b(1, 2);
  b.at(0, 0) = -1;
  b.at(0, 1) = 1;
  const std::vector<Rational> rhs{-2};
  const StandardFormLp lp(b, rhs);
  REQUIRE(lp.feasible());
  const std::vector<Rational> c{-1, 0};
  const auto sol = lp.maximize(c);
  REQUIRE(sol.status == LpStatus::kOptimal);
  CHECK(sol.objective == -2);
  const std::vector<Rational> up{1, 0};
  CHECK(lp.maximize(up).status == LpStatus::kUnbounded);
}
