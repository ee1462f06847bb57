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
#ifndef FORCELAB_LP_HPP_
#define FORCELAB_LP_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "forcelab/rational.hpp"

namespace forcelab {

class RationalMatrix {
 public:
  RationalMatrix() = default;
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

std::size_t matrix_rank(RationalMatrix m);

// Basis of {x : m x = 0}, one vector per free column of the reduced row
// echelon form.
std::vector<std::vector<Rational>> null_space(RationalMatrix m);

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> x;
};

// Exact two-phase primal simplex over {x >= 0 : A x = b} with Bland's
// least-index rule, so it terminates on degenerate problems. Phase one runs
// once in the constructor; every maximize() call starts from that basis.
class StandardFormLp {
 public:
  StandardFormLp(const RationalMatrix& a, std::span<const Rational> b);

  bool feasible() const { return feasible_; }
  std::size_t variable_count() const { return cols_; }
  // Basic feasible solution found by phase one; empty when infeasible.
  std::vector<Rational> feasible_point() const;

  LpSolution maximize(std::span<const Rational> objective) const;

 private:
  struct Tableau {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<Rational> cells;  // rows x cols
    std::vector<Rational> rhs;
    std::vector<std::size_t> basis;
    std::vector<Rational> reduced;  // objective row
    Rational value;

    Rational& at(std::size_t r, std::size_t c) { return cells[r * cols + c]; }
    const Rational& at(std::size_t r, std::size_t c) const { return cells[r * cols + c]; }
    void pivot(std::size_t row, std::size_t col);
    // Returns false when the objective is unbounded.
    bool optimize(std::size_t enter_limit);
    void price(std::span<const Rational> objective);
  };

  std::vector<Rational> primal(const Tableau& t) const;

  std::size_t cols_ = 0;
  bool feasible_ = false;
  Tableau phase_one_;
};

}  // namespace forcelab

#endif  // FORCELAB_LP_HPP_
