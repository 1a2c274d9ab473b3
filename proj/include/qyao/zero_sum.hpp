// Copyright 2026 The qyao Authors.
//
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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qyao/rational.hpp"

namespace qyao {

/// Payoff to the row player, who maximizes; the column player minimizes.
class PayoffMatrix {
 public:
  PayoffMatrix() = default;
  PayoffMatrix(int rows, int cols);
  static PayoffMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  const Rational& at(int i, int j) const { return data_[index(i, j)]; }
  void set(int i, int j, Rational v) { data_[index(i, j)] = std::move(v); }
  double value(int i, int j) const { return at(i, j).get_d(); }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  std::string to_csv() const;

 private:
  std::size_t index(int i, int j) const;

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct SolveOptions {
  // Re-solve the reduced game in exact rational arithmetic.
  bool exact = false;
  int max_pivots = 200000;
  // Drop weakly dominated rows and columns before solving.
  bool reduce = true;
};

struct GameSolution {
  double value = 0.0;
  std::vector<double> row_strategy;
  std::vector<double> column_strategy;
  // max_i (P mu)_i - min_j (rho P)_j; zero at an exact equilibrium.
  double gap = 0.0;
  // Distance of each strategy's sum from 1 and most negative entry.
  double sum_residual = 0.0;
  double min_entry = 0.0;
  int pivots = 0;
  int reduced_rows = 0;
  int reduced_cols = 0;

  std::optional<Rational> exact_value;
  std::vector<Rational> exact_row_strategy;
  std::vector<Rational> exact_column_strategy;

  // min over columns of the row strategy's payoff, and max over rows of the column strategy's.
  double max_min = 0.0;
  double min_max = 0.0;
};

// Solves max_rho min_mu rho^T P mu through the packing LP max 1^T w s.t.
// (P + s) w <= 1, w >= 0, with a dense simplex using Bland's rule.
// Throws NumericalFailure when the pivot limit is hit or the duality gap
// exceeds 1e-6.
GameSolution solve_zero_sum(const PayoffMatrix& P, const SolveOptions& options = {});

}  // namespace qyao
