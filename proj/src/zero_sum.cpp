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

#include "qyao/zero_sum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "qyao/errors.hpp"

namespace qyao {

PayoffMatrix::PayoffMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 1 || cols < 1) throw InvalidSpec("payoff matrix needs at least one row and one column");
  data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), Rational(0));
}

PayoffMatrix PayoffMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  if (rows.empty() || rows.front().empty()) throw InvalidSpec("payoff matrix needs at least one entry");
  PayoffMatrix p(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
  for (int i = 0; i < p.rows(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != p.cols()) throw InvalidSpec("ragged payoff matrix");
    for (int j = 0; j < p.cols(); ++j) p.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return p;
}

std::size_t PayoffMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw InvalidSpec("payoff index out of range");
  return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
}

std::string PayoffMatrix::to_csv() const {
  std::ostringstream out;
  out << "row";
  for (int j = 0; j < cols_; ++j) {
    out << ',' << (static_cast<std::size_t>(j) < col_labels.size() ? col_labels[static_cast<std::size_t>(j)] : std::to_string(j));
  }
  out << '\n';
  for (int i = 0; i < rows_; ++i) {
    out << (static_cast<std::size_t>(i) < row_labels.size() ? row_labels[static_cast<std::size_t>(i)] : std::to_string(i));
    for (int j = 0; j < cols_; ++j) out << ',' << to_string(at(i, j));
    out << '\n';
  }
  return out.str();
}

namespace {

template <typename Num>
struct LpResult {
  std::vector<Num> primal;
  std::vector<Num> dual;
  Num objective;
  int pivots = 0;
};

// max 1^T w s.t. A w <= 1, w >= 0, for A with positive entries (bounded).
template <typename Num>
LpResult<Num> packing_lp(const std::vector<std::vector<Num>>& a, const Num& eps, int max_pivots) {
  const std::size_t m = a.size();
  const std::size_t n = a.front().size();
  const std::size_t width = n + m + 1;
  std::vector<Num> tab((m + 1) * width, Num(0));
  auto cell = [&](std::size_t r, std::size_t c) -> Num& { return tab[r * width + c]; };
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cell(i, j) = a[i][j];
    cell(i, n + i) = 1;
    cell(i, width - 1) = 1;
  }
  for (std::size_t j = 0; j < n; ++j) cell(m, j) = -1;
  std::vector<std::size_t> basis(m);
  std::iota(basis.begin(), basis.end(), n);

  LpResult<Num> out;
  while (true) {
    // Bland: the lowest-index improving column enters.
    std::size_t enter = width;
    for (std::size_t j = 0; j + 1 < width; ++j) {
      if (cell(m, j) < -eps) {
        enter = j;
        break;
      }
    }
    if (enter == width) break;
    std::size_t leave = m;
    Num best_ratio(0);
    for (std::size_t i = 0; i < m; ++i) {
      if (!(cell(i, enter) > eps)) continue;
      Num ratio = cell(i, width - 1) / cell(i, enter);
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) throw NumericalFailure("packing LP is unbounded; payoff shift failed");
    if (++out.pivots > max_pivots) {
      throw NumericalFailure("simplex exceeded " + std::to_string(max_pivots) + " pivots");
    }
    const Num pivot = cell(leave, enter);
    for (std::size_t c = 0; c < width; ++c) cell(leave, c) /= pivot;
    for (std::size_t r = 0; r <= m; ++r) {
      if (r == leave) continue;
      const Num factor = cell(r, enter);
      if (factor == Num(0)) continue;
      for (std::size_t c = 0; c < width; ++c) cell(r, c) -= factor * cell(leave, c);
    }
    basis[leave] = enter;
  }
  out.primal.assign(n, Num(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) out.primal[basis[i]] = cell(i, width - 1);
  }
  out.dual.assign(m, Num(0));
  for (std::size_t i = 0; i < m; ++i) out.dual[i] = cell(m, n + i);
  out.objective = cell(m, width - 1);
  return out;
}

struct Reduced {
  std::vector<int> rows;
  std::vector<int> cols;
};

bool row_dominates(const PayoffMatrix& p, int k, int i, const std::vector<int>& cols) {
  return std::all_of(cols.begin(), cols.end(), [&](int j) { return p.at(k, j) >= p.at(i, j); });
}

bool col_dominates(const PayoffMatrix& p, int l, int j, const std::vector<int>& rows) {
  return std::all_of(rows.begin(), rows.end(), [&](int i) { return p.at(i, l) <= p.at(i, j); });
}

// Iteratively removes weakly dominated rows (for the maximizer) and columns
// (for the minimizer); an optimal pair of the reduced game stays optimal.
Reduced reduce(const PayoffMatrix& p) {
  Reduced r;
  r.rows.resize(static_cast<std::size_t>(p.rows()));
  r.cols.resize(static_cast<std::size_t>(p.cols()));
  std::iota(r.rows.begin(), r.rows.end(), 0);
  std::iota(r.cols.begin(), r.cols.end(), 0);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Rational> sums(static_cast<std::size_t>(p.rows()), Rational(0));
    for (int i : r.rows) {
      for (int j : r.cols) sums[static_cast<std::size_t>(i)] += p.at(i, j);
    }
    auto order = r.rows;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return sums[static_cast<std::size_t>(a)] > sums[static_cast<std::size_t>(b)]; });
    std::vector<int> kept;
    for (int i : order) {
      const bool dominated = std::any_of(kept.begin(), kept.end(), [&](int k) { return row_dominates(p, k, i, r.cols); });
      if (!dominated) kept.push_back(i);
    }
    if (kept.size() != r.rows.size()) changed = true;
    std::sort(kept.begin(), kept.end());
    r.rows = kept;

    std::vector<Rational> col_sums(static_cast<std::size_t>(p.cols()), Rational(0));
    for (int j : r.cols) {
      for (int i : r.rows) col_sums[static_cast<std::size_t>(j)] += p.at(i, j);
    }
    auto col_order = r.cols;
    std::stable_sort(col_order.begin(), col_order.end(), [&](int a, int b) {
      return col_sums[static_cast<std::size_t>(a)] < col_sums[static_cast<std::size_t>(b)];
    });
    std::vector<int> kept_cols;
    for (int j : col_order) {
      const bool dominated =
          std::any_of(kept_cols.begin(), kept_cols.end(), [&](int l) { return col_dominates(p, l, j, r.rows); });
      if (!dominated) kept_cols.push_back(j);
    }
    if (kept_cols.size() != r.cols.size()) changed = true;
    std::sort(kept_cols.begin(), kept_cols.end());
    r.cols = kept_cols;
  }
  return r;
}

void fill_diagnostics(const PayoffMatrix& p, GameSolution& s) {
  double min_max = -1e300;
  for (int i = 0; i < p.rows(); ++i) {
    double v = 0.0;
    for (int j = 0; j < p.cols(); ++j) v += p.value(i, j) * s.column_strategy[static_cast<std::size_t>(j)];
    min_max = std::max(min_max, v);
  }
  double max_min = 1e300;
  for (int j = 0; j < p.cols(); ++j) {
    double v = 0.0;
    for (int i = 0; i < p.rows(); ++i) v += s.row_strategy[static_cast<std::size_t>(i)] * p.value(i, j);
    max_min = std::min(max_min, v);
  }
  s.min_max = min_max;
  s.max_min = max_min;
  s.gap = min_max - max_min;
  const double row_sum = std::accumulate(s.row_strategy.begin(), s.row_strategy.end(), 0.0);
  const double col_sum = std::accumulate(s.column_strategy.begin(), s.column_strategy.end(), 0.0);
  s.sum_residual = std::max(std::abs(row_sum - 1.0), std::abs(col_sum - 1.0));
  s.min_entry = std::min(*std::min_element(s.row_strategy.begin(), s.row_strategy.end()),
                         *std::min_element(s.column_strategy.begin(), s.column_strategy.end()));
}

}  // namespace

GameSolution solve_zero_sum(const PayoffMatrix& P, const SolveOptions& options) {
  if (P.rows() < 1 || P.cols() < 1) throw InvalidSpec("empty payoff matrix");
  Reduced r;
  if (options.reduce) {
    r = reduce(P);
  } else {
    r.rows.resize(static_cast<std::size_t>(P.rows()));
    r.cols.resize(static_cast<std::size_t>(P.cols()));
    std::iota(r.rows.begin(), r.rows.end(), 0);
    std::iota(r.cols.begin(), r.cols.end(), 0);
  }
  // Shift so every entry is at least 1.
  Rational lowest = P.at(r.rows.front(), r.cols.front());
  for (int i : r.rows) {
    for (int j : r.cols) lowest = std::min(lowest, P.at(i, j));
  }
  const Rational shift = 1 - lowest;

  GameSolution s;
  s.reduced_rows = static_cast<int>(r.rows.size());
  s.reduced_cols = static_cast<int>(r.cols.size());
  s.row_strategy.assign(static_cast<std::size_t>(P.rows()), 0.0);
  s.column_strategy.assign(static_cast<std::size_t>(P.cols()), 0.0);

  if (options.exact) {
    std::vector<std::vector<Rational>> a;
    for (int i : r.rows) {
      std::vector<Rational> row;
      for (int j : r.cols) row.push_back(P.at(i, j) + shift);
      a.push_back(std::move(row));
    }
    const auto lp = packing_lp<Rational>(a, Rational(0), options.max_pivots);
    const Rational total = lp.objective;
    s.exact_value = 1 / total - shift;
    s.exact_row_strategy.assign(static_cast<std::size_t>(P.rows()), Rational(0));
    s.exact_column_strategy.assign(static_cast<std::size_t>(P.cols()), Rational(0));
    for (std::size_t k = 0; k < r.cols.size(); ++k) {
      s.exact_column_strategy[static_cast<std::size_t>(r.cols[k])] = lp.primal[k] / total;
    }
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      s.exact_row_strategy[static_cast<std::size_t>(r.rows[k])] = lp.dual[k] / total;
    }
    s.pivots = lp.pivots;
    s.value = s.exact_value->get_d();
    for (std::size_t k = 0; k < s.row_strategy.size(); ++k) s.row_strategy[k] = s.exact_row_strategy[k].get_d();
    for (std::size_t k = 0; k < s.column_strategy.size(); ++k) {
      s.column_strategy[k] = s.exact_column_strategy[k].get_d();
    }
  } else {
    std::vector<std::vector<double>> a;
    const double shift_d = shift.get_d();
    for (int i : r.rows) {
      std::vector<double> row;
      for (int j : r.cols) row.push_back(P.value(i, j) + shift_d);
      a.push_back(std::move(row));
    }
    const auto lp = packing_lp<double>(a, 1e-12, options.max_pivots);
    const double total = lp.objective;
    s.value = 1.0 / total - shift_d;
    for (std::size_t k = 0; k < r.cols.size(); ++k) {
      s.column_strategy[static_cast<std::size_t>(r.cols[k])] = std::max(0.0, lp.primal[k] / total);
    }
    for (std::size_t k = 0; k < r.rows.size(); ++k) {
      s.row_strategy[static_cast<std::size_t>(r.rows[k])] = std::max(0.0, lp.dual[k] / total);
    }
    s.pivots = lp.pivots;
  }
  fill_diagnostics(P, s);
  if (!(s.gap <= 1e-6) || !(s.sum_residual <= 1e-9)) {
    throw NumericalFailure("zero-sum solution failed its checks: gap " + std::to_string(s.gap) + ", sum residual " +
                           std::to_string(s.sum_residual));
  }
  return s;
}

}  // namespace qyao
