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
#include "forcelab/lp.hpp"

#include <utility>

#include "forcelab/error.hpp"

namespace forcelab {

namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && sgn(m.at(p, col)) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(p, c), m.at(row, c));
    }
    const Rational inv = 1 / m.at(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m.at(r, col)) == 0) continue;
      const Rational factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (sgn(m.at(row, c)) != 0) m.at(r, c) -= factor * m.at(row, c);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t matrix_rank(RationalMatrix m) { return row_reduce(m).size(); }

std::vector<std::vector<Rational>> null_space(RationalMatrix m) {
  const auto pivots = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

void StandardFormLp::Tableau::pivot(std::size_t row, std::size_t col) {
  const Rational inv = 1 / at(row, col);
  std::vector<std::size_t> nz;
  for (std::size_t c = 0; c < cols; ++c) {
    if (sgn(at(row, c)) != 0) {
      at(row, c) *= inv;
      nz.push_back(c);
    }
  }
  rhs[row] *= inv;
  auto eliminate = [&](Rational* cells_row, Rational& rhs_value) {
    const Rational factor = cells_row[col];
    if (sgn(factor) == 0) return;
    for (std::size_t c : nz) cells_row[c] -= factor * at(row, c);
    rhs_value -= factor * rhs[row];
  };
  for (std::size_t r = 0; r < rows; ++r) {
    if (r != row) eliminate(&cells[r * cols], rhs[r]);
  }
  // The objective row tracks -value in its right-hand side slot.
  Rational neg_value = -value;
  eliminate(reduced.data(), neg_value);
  value = -neg_value;
  basis[row] = col;
}

bool StandardFormLp::Tableau::optimize(std::size_t enter_limit) {
  for (;;) {
    std::size_t enter = enter_limit;
    for (std::size_t c = 0; c < enter_limit; ++c) {
      if (sgn(reduced[c]) > 0) {
        enter = c;
        break;
      }
    }
    if (enter == enter_limit) return true;
    std::size_t leave = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (sgn(at(r, enter)) <= 0) continue;
      Rational ratio = rhs[r] / at(r, enter);
      if (leave == rows || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[leave])) {
        leave = r;
        best_ratio = std::move(ratio);
      }
    }
    if (leave == rows) return false;
    pivot(leave, enter);
  }
}

void StandardFormLp::Tableau::price(std::span<const Rational> objective) {
  reduced.assign(cols, Rational(0));
  for (std::size_t c = 0; c < objective.size() && c < cols; ++c) reduced[c] = objective[c];
  value = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    const std::size_t b = basis[r];
    if (b >= objective.size() || sgn(objective[b]) == 0) continue;
    const Rational cb = objective[b];
    for (std::size_t c = 0; c < cols; ++c) {
      if (sgn(at(r, c)) != 0) reduced[c] -= cb * at(r, c);
    }
    value += cb * rhs[r];
  }
}

StandardFormLp::StandardFormLp(const RationalMatrix& a, std::span<const Rational> b) : cols_(a.cols()) {
  if (b.size() != a.rows()) fail(ErrorCode::kInternal, "LP: right-hand side size mismatch");
  Tableau& t = phase_one_;
  t.rows = a.rows();
  t.cols = a.cols() + a.rows();
  t.cells.assign(t.rows * t.cols, Rational(0));
  t.rhs.assign(t.rows, Rational(0));
  t.basis.resize(t.rows);
  for (std::size_t r = 0; r < t.rows; ++r) {
    const bool flip = sgn(b[r]) < 0;
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (sgn(a.at(r, c)) != 0) t.at(r, c) = flip ? Rational(-a.at(r, c)) : a.at(r, c);
    }
    t.rhs[r] = flip ? Rational(-b[r]) : b[r];
    t.at(r, a.cols() + r) = 1;
    t.basis[r] = a.cols() + r;
  }
  // Maximize minus the sum of artificials.
  std::vector<Rational> objective(t.cols, Rational(0));
  for (std::size_t r = 0; r < t.rows; ++r) objective[a.cols() + r] = -1;
  t.price(objective);
  t.optimize(t.cols);
  feasible_ = sgn(t.value) == 0;
  if (!feasible_) return;

  // Drive zero-level artificials out of the basis; rows where that is
  // impossible are linear combinations of the others.
  std::vector<bool> keep(t.rows, true);
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (t.basis[r] < a.cols()) continue;
    std::size_t col = a.cols();
    for (std::size_t c = 0; c < a.cols(); ++c) {
      if (sgn(t.at(r, c)) != 0) {
        col = c;
        break;
      }
    }
    if (col == a.cols()) {
      keep[r] = false;
    } else {
      t.pivot(r, col);
    }
  }
  Tableau reduced;
  reduced.cols = a.cols();
  for (std::size_t r = 0; r < t.rows; ++r) {
    if (!keep[r]) continue;
    for (std::size_t c = 0; c < a.cols(); ++c) reduced.cells.push_back(t.at(r, c));
    reduced.rhs.push_back(t.rhs[r]);
    reduced.basis.push_back(t.basis[r]);
  }
  reduced.rows = reduced.rhs.size();
  phase_one_ = std::move(reduced);
}

std::vector<Rational> StandardFormLp::primal(const Tableau& t) const {
  std::vector<Rational> x(cols_, Rational(0));
  for (std::size_t r = 0; r < t.rows; ++r) x[t.basis[r]] = t.rhs[r];
  return x;
}

std::vector<Rational> StandardFormLp::feasible_point() const {
  if (!feasible_) return {};
  return primal(phase_one_);
}

LpSolution StandardFormLp::maximize(std::span<const Rational> objective) const {
  LpSolution sol;
  if (!feasible_) return sol;
  if (objective.size() != cols_) fail(ErrorCode::kInternal, "LP: objective size mismatch");
  Tableau t = phase_one_;
  t.price(objective);
  if (!t.optimize(t.cols)) {
    sol.status = LpStatus::kUnbounded;
    return sol;
  }
  sol.status = LpStatus::kOptimal;
  sol.objective = t.value;
  sol.x = primal(t);
  return sol;
}

}  // namespace forcelab
