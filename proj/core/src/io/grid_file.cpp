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

#include "centerline/io/grid_file.h"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <iterator>
#include <sstream>

#include <nlohmann/json.hpp>

#include "centerline/error.h"

namespace centerline::io {
namespace {

using nlohmann::json;

// Sanity cap on declared dimensions so a corrupt header cannot request an
// absurd allocation.
constexpr std::int64_t kMaxCells = std::int64_t{1} << 28;

void AppendFloatLe(std::string& out, float v) {
  const auto bits = std::bit_cast<std::uint32_t>(v);
  for (int b = 0; b < 4; ++b) {
    out.push_back(static_cast<char>((bits >> (8 * b)) & 0xFFu));
  }
}

float ReadFloatLe(const unsigned char* p) {
  std::uint32_t bits = 0;
  for (int b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(p[b]) << (8 * b);
  return std::bit_cast<float>(bits);
}

std::ofstream OpenOut(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorCode::kFormatError, "cannot write " + path);
  return out;
}

template <int C>
GridField<C> ToField(const RawGrid& raw, const std::string& path) {
  if (raw.header.c != C) {
    throw Error(ErrorCode::kFormatError,
                path + ": expected " + std::to_string(C) + " channel(s)");
  }
  std::vector<double> data(raw.values.begin(), raw.values.end());
  try {
    return GridField<C>(raw.header.Spec(), std::move(data));
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormatError, path + ": " + e.what());
  }
}

}  // namespace

GridSpec GridFileHeader::Spec() const {
  return GridSpec(h, w, cell_m, origin, z_min, z_max);
}

std::size_t GridFileHeader::PayloadBytes() const {
  return 4u * static_cast<std::size_t>(h) * static_cast<std::size_t>(w) *
         static_cast<std::size_t>(c);
}

std::string EncodeGrid(const GridSpec& spec, int channels,
                       std::span<const double> values) {
  json header = {{"h", spec.height_cells()},
                 {"w", spec.width_cells()},
                 {"c", channels},
                 {"dtype", "f32"},
                 {"cell_m", spec.cell_size_m()},
                 {"origin", {spec.origin().x, spec.origin().y}},
                 {"z_range", {spec.z_min_m(), spec.z_max_m()}}};
  std::string out = header.dump();
  out.push_back('\n');
  out.reserve(out.size() + 4 * values.size());
  for (double v : values) AppendFloatLe(out, static_cast<float>(v));
  return out;
}

RawGrid DecodeGrid(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) {
    throw Error(ErrorCode::kFormatError, "missing grid header");
  }
  RawGrid raw;
  try {
    const json h = json::parse(line);
    if (h.at("dtype").get<std::string>() != "f32") {
      throw Error(ErrorCode::kFormatError, "unsupported dtype");
    }
    raw.header.h = h.at("h").get<int>();
    raw.header.w = h.at("w").get<int>();
    raw.header.c = h.at("c").get<int>();
    raw.header.cell_m = h.at("cell_m").get<double>();
    const auto& origin = h.at("origin");
    const auto& z = h.at("z_range");
    if (origin.size() != 2 || z.size() != 2) {
      throw Error(ErrorCode::kFormatError, "origin and z_range need 2 values");
    }
    raw.header.origin = Vec2{origin[0].get<double>(), origin[1].get<double>()};
    raw.header.z_min = z[0].get<double>();
    raw.header.z_max = z[1].get<double>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kFormatError, std::string("grid header: ") + e.what());
  }
  const GridFileHeader& hd = raw.header;
  if (hd.h <= 0 || hd.w <= 0 || hd.c <= 0 ||
      static_cast<std::int64_t>(hd.h) * hd.w * hd.c > kMaxCells) {
    throw Error(ErrorCode::kFormatError, "grid header dimensions out of range");
  }
  const std::size_t expected = hd.PayloadBytes();
  std::string payload(expected, '\0');
  in.read(payload.data(), static_cast<std::streamsize>(expected));
  if (static_cast<std::size_t>(in.gcount()) != expected) {
    throw Error(ErrorCode::kFormatError, "grid payload shorter than header declares");
  }
  if (in.peek() != std::char_traits<char>::eof()) {
    throw Error(ErrorCode::kFormatError, "grid payload longer than header declares");
  }
  raw.values.resize(expected / 4);
  const auto* bytes = reinterpret_cast<const unsigned char*>(payload.data());
  for (std::size_t k = 0; k < raw.values.size(); ++k) {
    raw.values[k] = ReadFloatLe(bytes + 4 * k);
  }
  return raw;
}

void WriteGridFile(const std::string& path, const ScalarGrid& grid) {
  OpenOut(path) << EncodeGrid(grid.spec(), 1, grid.data());
}

void WriteGridFile(const std::string& path, const VectorGrid& grid) {
  OpenOut(path) << EncodeGrid(grid.spec(), 2, grid.data());
}

RawGrid ReadRawGridFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kFormatError, "cannot read " + path);
  try {
    return DecodeGrid(in);
  } catch (const Error& e) {
    throw Error(ErrorCode::kFormatError, path + ": " + e.what());
  }
}

ScalarGrid ReadScalarGridFile(const std::string& path) {
  return ToField<1>(ReadRawGridFile(path), path);
}

VectorGrid ReadVectorGridFile(const std::string& path) {
  return ToField<2>(ReadRawGridFile(path), path);
}

}  // namespace centerline::io
