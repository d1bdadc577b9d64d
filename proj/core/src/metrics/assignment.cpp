/* Copyright 2026 The Centerline Toolkit Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "centerline/metrics/assignment.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "centerline/error.h"

namespace centerline::metrics {
namespace {

// Rows <= cols. Returns col index per row.
std::vector<int> SolveWide(const CostMatrix& a, int n, int m) {
  constexpr double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0);
  std::vector<double> v(m + 1, 0.0);
  std::vector<int> p(m + 1, 0);
  std::vector<int> way(m + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(m + 1, kInf);
    std::vector<char> used(m + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      double delta = kInf;
      int j1 = 0;
      for (int j = 1; j <= m; ++j) {
        if (used[j]) continue;
        const double cur = a[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= m; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<int> col_of_row(n, -1);
  for (int j = 1; j <= m; ++j) {
    if (p[j] != 0) col_of_row[p[j] - 1] = j - 1;
  }
  return col_of_row;
}

}  // namespace

Assignment Hungarian(const CostMatrix& cost) {
  Assignment out;
  const int rows = static_cast<int>(cost.size());
  if (rows == 0) return out;
  const int cols = static_cast<int>(cost.front().size());
  for (const auto& row : cost) {
    if (static_cast<int>(row.size()) != cols) {
      throw Error(ErrorCode::kInvalidInput, "cost matrix is ragged");
    }
    for (double c : row) {
      if (!std::isfinite(c)) {
        throw Error(ErrorCode::kInvalidInput, "cost matrix must be finite");
      }
    }
  }
  if (cols == 0) return out;

  if (rows <= cols) {
    const std::vector<int> col_of_row = SolveWide(cost, rows, cols);
    for (int r = 0; r < rows; ++r) out.pairs.emplace_back(r, col_of_row[r]);
  } else {
    CostMatrix t(cols, std::vector<double>(rows));
    for (int r = 0; r < rows; ++r) {
      for (int c = 0; c < cols; ++c) t[c][r] = cost[r][c];
    }
    const std::vector<int> row_of_col = SolveWide(t, cols, rows);
    for (int c = 0; c < cols; ++c) out.pairs.emplace_back(row_of_col[c], c);
    std::sort(out.pairs.begin(), out.pairs.end());
  }
  for (const auto& [r, c] : out.pairs) out.total_cost += cost[r][c];
  return out;
}

}  // namespace centerline::metrics
