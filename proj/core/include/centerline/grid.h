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

#ifndef CENTERLINE_GRID_H_
#define CENTERLINE_GRID_H_

#include <cmath>
#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "centerline/error.h"
#include "centerline/geometry.h"

namespace centerline {

// Dense row-major H x W x Channels field over a GridSpec, channel-fastest.
template <int Channels>
class GridField {
  static_assert(Channels >= 1);

 public:
  static constexpr int kChannels = Channels;

  explicit GridField(GridSpec spec, double fill = 0.0)
      : spec_(std::move(spec)),
        data_(static_cast<std::size_t>(spec_.height_cells()) *
                  spec_.width_cells() * Channels,
              fill) {
    if (!std::isfinite(fill)) {
      throw Error(ErrorCode::kInvalidInput, "grid fill value must be finite");
    }
  }

  GridField(GridSpec spec, std::vector<double> data)
      : spec_(std::move(spec)), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(spec_.height_cells()) *
                            spec_.width_cells() * Channels) {
      throw Error(ErrorCode::kInvalidInput,
                  "grid data length does not match H x W x C");
    }
    for (double v : data_) {
      if (!std::isfinite(v)) {
        throw Error(ErrorCode::kInvalidInput, "grid values must be finite");
      }
    }
  }

  const GridSpec& spec() const { return spec_; }
  int rows() const { return spec_.height_cells(); }
  int cols() const { return spec_.width_cells(); }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(rows()) * cols();
  }

  bool Contains(int i, int j) const {
    return i >= 0 && j >= 0 && i < rows() && j < cols();
  }

  double& at(int i, int j, int c = 0) { return data_[Index(i, j, c)]; }
  double at(int i, int j, int c = 0) const { return data_[Index(i, j, c)]; }

  std::span<const double> data() const { return data_; }
  std::span<double> mutable_data() { return data_; }

  friend bool operator==(const GridField&, const GridField&) = default;

 private:
  std::size_t Index(int i, int j, int c) const {
    return (static_cast<std::size_t>(i) * cols() + j) * Channels + c;
  }

  GridSpec spec_;
  std::vector<double> data_;
};

using ScalarGrid = GridField<1>;
using VectorGrid = GridField<2>;

// Throws InvalidInput unless every value lies in [0, 1].
void RequireProbabilities(const ScalarGrid& grid, const char* what);

template <int A, int B>
void RequireSameShape(const GridField<A>& a, const GridField<B>& b,
                      const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorCode::kInvalidInput,
                std::string(what) + ": grid shapes differ");
  }
}

}  // namespace centerline

#endif  // CENTERLINE_GRID_H_
