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

#ifndef CENTERLINE_IO_GRID_FILE_H_
#define CENTERLINE_IO_GRID_FILE_H_

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "centerline/grid.h"

namespace centerline::io {

// One-line JSON header followed by h * w * c little-endian float32 values,
// row-major and channel-fastest.
struct GridFileHeader {
  int h = 0;
  int w = 0;
  int c = 1;
  double cell_m = 0.5;
  Vec2 origin;
  double z_min = -10.0;
  double z_max = 10.0;

  GridSpec Spec() const;
  std::size_t PayloadBytes() const;
};

struct RawGrid {
  GridFileHeader header;
  std::vector<float> values;
};

std::string EncodeGrid(const GridSpec& spec, int channels,
                       std::span<const double> values);
// Throws FormatError on a bad header or a payload of the wrong length; the
// length check happens before any value is decoded.
RawGrid DecodeGrid(std::istream& in);

void WriteGridFile(const std::string& path, const ScalarGrid& grid);
void WriteGridFile(const std::string& path, const VectorGrid& grid);
RawGrid ReadRawGridFile(const std::string& path);
ScalarGrid ReadScalarGridFile(const std::string& path);
VectorGrid ReadVectorGridFile(const std::string& path);

}  // namespace centerline::io

#endif  // CENTERLINE_IO_GRID_FILE_H_
