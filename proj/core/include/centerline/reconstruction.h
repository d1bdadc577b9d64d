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

#ifndef CENTERLINE_RECONSTRUCTION_H_
#define CENTERLINE_RECONSTRUCTION_H_

#include <span>
#include <vector>

#include "centerline/extraction.h"
#include "centerline/geometry.h"
#include "centerline/polyline.h"

namespace centerline {

struct ReconstructionConfig {
  int path_poly_order = 4;
  int height_poly_order = 3;
  int n_output_points = 11;
  int presample_count = 100;

  void Validate() const;
};

// Univariate polynomial stored in a centered, scaled frame:
// f(v) = sum_k coeffs[k] * ((v - center) / scale)^k.
struct Polynomial {
  double center = 0.0;
  double scale = 1.0;
  std::vector<double> coeffs;

  double operator()(double v) const;
  int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

struct PathFit {
  Polynomial poly;
  bool x_independent = true;  // y = f(x); otherwise x = f(y)
  int requested_order = 0;
  bool order_reduced = false;
};

// Least-squares fit of the dependent coordinate against the independent one
// (x for Up/Down, y for Left/Right). The order drops to the number of
// distinct abscissae minus one when the data cannot support it.
PathFit FitPathPolynomial(std::span<const Vec2> points, QuadDirection dir,
                          int order);

// Same fit with the independent axis chosen explicitly.
PathFit FitPathPolynomialOnAxis(std::span<const Vec2> points,
                                bool x_independent, int order);

// z = C0 + sum_{k=1..n} (C_{2k-1} x^k + C_{2k} y^k), no cross terms.
class HeightSurface {
 public:
  HeightSurface() : coefficients_(7, 0.0) {}
  explicit HeightSurface(std::vector<double> coefficients);

  double operator()(double x, double y) const;
  // Raw world-frame coefficients in the C0, x, y, x^2, y^2, ... layout.
  std::span<const double> coefficients() const { return coefficients_; }
  int order() const { return static_cast<int>(coefficients_.size() - 1) / 2; }

 private:
  std::vector<double> coefficients_;
};

struct HeightFit {
  HeightSurface surface;
  int x_order = 0;
  int y_order = 0;
  bool order_reduced = false;
};

HeightFit FitHeightSurface(std::span<const Point3> points, int order = 3);

struct Reconstruction {
  Polyline3D curve;
  PathFit path;
  HeightFit height;
  // The declared axis had no extent; the other planar axis carried the fit.
  bool axis_swapped = false;
};

// Grid points -> world -> polynomial path and height surface -> presample
// over the observed abscissa span -> arc-length resample -> directional sort.
// Resampled points are snapped back onto the fitted path and surface.
// Throws ReconstructionFailed with fewer than two distinct planar points.
Reconstruction ReconstructCurve(const GridPointSet& points, QuadDirection dir,
                                const GridSpec& spec,
                                const ReconstructionConfig& config = {});

// Element-wise midpoint of two equally long, equally ordered point sets.
Polyline3D FuseOutputs(const Polyline3D& mask_points,
                       const Polyline3D& bezier_points);

}  // namespace centerline

#endif  // CENTERLINE_RECONSTRUCTION_H_
