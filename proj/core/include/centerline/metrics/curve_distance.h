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

#ifndef CENTERLINE_METRICS_CURVE_DISTANCE_H_
#define CENTERLINE_METRICS_CURVE_DISTANCE_H_

#include "centerline/polyline.h"

namespace centerline::metrics {

// Discrete Frechet distance over the vertex sequences (3D Euclidean).
double DiscreteFrechet(const Polyline3D& a, const Polyline3D& b);

// 0.5 * (mean_a min_b d + mean_b min_a d) over the vertices; orderless.
double Chamfer(const Polyline3D& a, const Polyline3D& b);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_CURVE_DISTANCE_H_
