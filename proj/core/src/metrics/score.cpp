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

#include "centerline/metrics/score.h"

#include <cmath>

#include "centerline/error.h"

namespace centerline::metrics {

double ScoreRemap(double conf, double floor, double bonus) {
  if (!(conf >= 0.0 && conf <= 1.0)) {
    throw Error(ErrorCode::kInvalidInput, "confidence outside [0, 1]");
  }
  return conf > floor ? conf + bonus : conf;
}

double OlsL(double det_l, double det_l_ch, double top_ll) {
  for (double v : {det_l, det_l_ch, top_ll}) {
    if (!(v >= 0.0 && v <= 100.0)) {
      throw Error(ErrorCode::kInvalidInput, "OLS_l inputs must lie in [0, 100]");
    }
  }
  return (det_l + det_l_ch + 100.0 * std::sqrt(top_ll / 100.0)) / 3.0;
}

}  // namespace centerline::metrics
