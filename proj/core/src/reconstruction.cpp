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

#include "centerline/reconstruction.h"

#include <algorithm>
#include <cmath>
#include <Eigen/Dense>

#include "centerline/error.h"

namespace centerline {
namespace {

// Below this span (meters) an axis is treated as having no extent.
constexpr double kMinAxisSpan = 1e-6;

struct AxisFrame {
  double min = 0.0;
  double max = 0.0;
  double center = 0.0;
  double scale = 1.0;
  int distinct = 0;
};

AxisFrame MakeFrame(std::vector<double> values) {
  AxisFrame f;
  std::sort(values.begin(), values.end());
  f.min = values.front();
  f.max = values.back();
  f.center = 0.5 * (f.min + f.max);
  const double half = 0.5 * (f.max - f.min);
  f.scale = half > 0.0 ? half : 1.0;
  const double tol = 1e-9 * std::max(1.0, f.max - f.min);
  f.distinct = 1;
  for (std::size_t k = 1; k < values.size(); ++k) {
    if (values[k] - values[k - 1] > tol) ++f.distinct;
  }
  return f;
}

double Binomial(int n, int k) {
  double r = 1.0;
  for (int m = 1; m <= k; ++m) r = r * (n - k + m) / m;
  return r;
}

// Adds sum_{k>=1} a[k] ((v - c) / s)^k, expanded in powers of v, to raw[0]
// and the per-power slots given by `slot`.
template <typename Slot>
void ExpandInto(const std::vector<double>& a, double c, double s,
                std::vector<double>& raw, Slot slot) {
  for (int k = 1; k < static_cast<int>(a.size()); ++k) {
    const double ak = a[k] / std::pow(s, k);
    for (int m = 0; m <= k; ++m) {
      const double term = ak * Binomial(k, m) * std::pow(-c, k - m);
      if (m == 0) {
        raw[0] += term;
      } else {
        raw[slot(m)] += term;
      }
    }
  }
}

std::vector<double> SolveLeastSquares(const Eigen::MatrixXd& a,
                                      const Eigen::VectorXd& b, bool& deficient) {
  Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(a);
  deficient = cod.rank() < a.cols();
  const Eigen::VectorXd x = cod.solve(b);
  return std::vector<double>(x.data(), x.data() + x.size());
}

}  // namespace

void ReconstructionConfig::Validate() const {
  if (path_poly_order < 1 || height_poly_order < 0) {
    throw Error(ErrorCode::kInvalidInput, "polynomial order out of range");
  }
  if (n_output_points < 2) {
    throw Error(ErrorCode::kInvalidInput, "need at least 2 output points");
  }
  if (presample_count < n_output_points) {
    throw Error(ErrorCode::kInvalidInput,
                "presample count must be >= output point count");
  }
}

double Polynomial::operator()(double v) const {
  const double u = (v - center) / scale;
  double acc = 0.0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * u + *it;
  return acc;
}

PathFit FitPathPolynomial(std::span<const Vec2> points, QuadDirection dir,
                          int order) {
  return FitPathPolynomialOnAxis(points, IsLongitudinal(dir), order);
}

PathFit FitPathPolynomialOnAxis(std::span<const Vec2> points,
                                bool x_independent, int order) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidInput, "path fit needs at least one point");
  }
  if (order < 0) {
    throw Error(ErrorCode::kInvalidInput, "path order must be >= 0");
  }
  std::vector<double> indep;
  std::vector<double> dep;
  indep.reserve(points.size());
  dep.reserve(points.size());
  for (const Vec2& p : points) {
    indep.push_back(x_independent ? p.x : p.y);
    dep.push_back(x_independent ? p.y : p.x);
  }
  const AxisFrame frame = MakeFrame(indep);
  const int used = std::min(order, frame.distinct - 1);

  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd a(n, used + 1);
  Eigen::VectorXd b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const double u = (indep[r] - frame.center) / frame.scale;
    double pw = 1.0;
    for (int k = 0; k <= used; ++k) {
      a(r, k) = pw;
      pw *= u;
    }
    b(r) = dep[r];
  }
  bool deficient = false;
  PathFit fit;
  fit.poly.center = frame.center;
  fit.poly.scale = frame.scale;
  fit.poly.coeffs = SolveLeastSquares(a, b, deficient);
  fit.x_independent = x_independent;
  fit.requested_order = order;
  fit.order_reduced = used < order || deficient;
  return fit;
}

HeightSurface::HeightSurface(std::vector<double> coefficients)
    : coefficients_(std::move(coefficients)) {
  if (coefficients_.empty() || coefficients_.size() % 2 == 0) {
    throw Error(ErrorCode::kInvalidInput,
                "height surface needs 2n + 1 coefficients");
  }
}

double HeightSurface::operator()(double x, double y) const {
  double z = coefficients_[0];
  double px = 1.0;
  double py = 1.0;
  for (int k = 1; k <= order(); ++k) {
    px *= x;
    py *= y;
    z += coefficients_[2 * k - 1] * px + coefficients_[2 * k] * py;
  }
  return z;
}

HeightFit FitHeightSurface(std::span<const Point3> points, int order) {
  if (points.empty()) {
    throw Error(ErrorCode::kInvalidInput, "height fit needs at least one point");
  }
  if (order < 0) {
    throw Error(ErrorCode::kInvalidInput, "height order must be >= 0");
  }
  std::vector<double> xs;
  std::vector<double> ys;
  for (const Point3& p : points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  const AxisFrame fx = MakeFrame(xs);
  const AxisFrame fy = MakeFrame(ys);
  int ox = std::min(order, fx.distinct - 1);
  int oy = std::min(order, fy.distinct - 1);
  const int n_points = static_cast<int>(points.size());
  while (1 + ox + oy > n_points) {
    if (oy >= ox) {
      --oy;
    } else {
      --ox;
    }
  }

  const auto n = static_cast<Eigen::Index>(points.size());
  Eigen::MatrixXd a(n, 1 + ox + oy);
  Eigen::VectorXd b(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    const double u = (xs[r] - fx.center) / fx.scale;
    const double v = (ys[r] - fy.center) / fy.scale;
    a(r, 0) = 1.0;
    double pu = 1.0;
    double pv = 1.0;
    for (int k = 1; k <= ox; ++k) a(r, k) = (pu *= u);
    for (int k = 1; k <= oy; ++k) a(r, ox + k) = (pv *= v);
    b(r) = points[r].z;
  }
  bool deficient = false;
  const std::vector<double> sol = SolveLeastSquares(a, b, deficient);

  // Expand the normalized solution into world-frame coefficients.
  std::vector<double> raw(2 * static_cast<std::size_t>(order) + 1, 0.0);
  raw[0] = sol[0];
  std::vector<double> ax(1 + ox, 0.0);
  std::vector<double> ay(1 + oy, 0.0);
  for (int k = 1; k <= ox; ++k) ax[k] = sol[k];
  for (int k = 1; k <= oy; ++k) ay[k] = sol[ox + k];
  ExpandInto(ax, fx.center, fx.scale, raw, [](int m) { return 2 * m - 1; });
  ExpandInto(ay, fy.center, fy.scale, raw, [](int m) { return 2 * m; });

  HeightFit fit;
  fit.surface = HeightSurface(std::move(raw));
  fit.x_order = ox;
  fit.y_order = oy;
  fit.order_reduced = ox < order || oy < order || deficient;
  return fit;
}

Reconstruction ReconstructCurve(const GridPointSet& points, QuadDirection dir,
                                const GridSpec& spec,
                                const ReconstructionConfig& config) {
  config.Validate();
  std::vector<Point3> world;
  world.reserve(points.points.size());
  for (const GridPoint& p : points.points) world.push_back(GridToWorld(spec, p));
  if (world.size() < 2) {
    throw Error(ErrorCode::kReconstructionFailed, "fewer than 2 points");
  }

  std::vector<Vec2> planar;
  planar.reserve(world.size());
  double min_x = world.front().x, max_x = min_x;
  double min_y = world.front().y, max_y = min_y;
  for (const Point3& p : world) {
    planar.push_back(Vec2{p.x, p.y});
    min_x = std::min(min_x, p.x);
    max_x = std::max(max_x, p.x);
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  bool x_indep = IsLongitudinal(dir);
  const double span_indep = x_indep ? max_x - min_x : max_y - min_y;
  const double span_dep = x_indep ? max_y - min_y : max_x - min_x;
  bool swapped = false;
  if (span_indep < kMinAxisSpan) {
    if (span_dep < kMinAxisSpan) {
      throw Error(ErrorCode::kReconstructionFailed,
                  "points collapse to a single planar location");
    }
    x_indep = !x_indep;
    swapped = true;
  }

  PathFit path = FitPathPolynomialOnAxis(planar, x_indep, config.path_poly_order);
  HeightFit height = FitHeightSurface(world, config.height_poly_order);

  const double lo = x_indep ? min_x : min_y;
  const double hi = x_indep ? max_x : max_y;
  auto on_curve = [&](double u) {
    const double v = path.poly(u);
    const double x = x_indep ? u : v;
    const double y = x_indep ? v : u;
    return Point3{x, y, height.surface(x, y)};
  };

  std::vector<Point3> presampled;
  presampled.reserve(static_cast<std::size_t>(config.presample_count));
  for (int k = 0; k < config.presample_count; ++k) {
    const double u = k + 1 == config.presample_count
                         ? hi
                         : lo + (hi - lo) * k / (config.presample_count - 1);
    presampled.push_back(on_curve(u));
  }
  const Polyline3D resampled =
      ArcLengthResample(Polyline3D(std::move(presampled)), config.n_output_points);

  std::vector<Point3> out;
  out.reserve(resampled.size());
  for (const Point3& p : resampled.points()) {
    out.push_back(on_curve(x_indep ? p.x : p.y));
  }
  for (const Point3& p : out) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y) || !std::isfinite(p.z)) {
      throw Error(ErrorCode::kReconstructionFailed, "non-finite fitted point");
    }
  }

  auto key = [dir](const Point3& p) {
    switch (dir) {
      case QuadDirection::kUp:
        return p.x;
      case QuadDirection::kDown:
        return -p.x;
      case QuadDirection::kRight:
        return p.y;
      case QuadDirection::kLeft:
        return -p.y;
    }
    return p.x;
  };
  std::stable_sort(out.begin(), out.end(),
                   [&](const Point3& a, const Point3& b) { return key(a) < key(b); });

  return Reconstruction{Polyline3D(std::move(out)), std::move(path),
                        std::move(height), swapped};
}

Polyline3D FuseOutputs(const Polyline3D& mask_points,
                       const Polyline3D& bezier_points) {
  if (mask_points.size() != bezier_points.size()) {
    throw Error(ErrorCode::kInvalidInput, "fusion needs equal point counts");
  }
  std::vector<Point3> out;
  out.reserve(mask_points.size());
  for (std::size_t k = 0; k < mask_points.size(); ++k) {
    const Point3& m = mask_points[k];
    const Point3& b = bezier_points[k];
    out.push_back(Point3{(m.x + b.x) / 2.0, (m.y + b.y) / 2.0, (m.z + b.z) / 2.0});
  }
  return Polyline3D(std::move(out));
}

}  // namespace centerline
