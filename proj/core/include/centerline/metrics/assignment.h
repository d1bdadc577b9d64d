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

#ifndef CENTERLINE_METRICS_ASSIGNMENT_H_
#define CENTERLINE_METRICS_ASSIGNMENT_H_

#include <utility>
#include <vector>

namespace centerline::metrics {

using CostMatrix = std::vector<std::vector<double>>;

struct Assignment {
  // (row, col) pairs sorted by row; min(rows, cols) of them.
  std::vector<std::pair<int, int>> pairs;
  double total_cost = 0.0;
};

// Minimum-cost one-to-one assignment on a rectangular matrix (Hungarian
// method with potentials, O(n^2 m)). Throws InvalidInput on ragged or
// non-finite input.
Assignment Hungarian(const CostMatrix& cost);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_ASSIGNMENT_H_
