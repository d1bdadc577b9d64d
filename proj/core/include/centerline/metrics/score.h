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

#ifndef CENTERLINE_METRICS_SCORE_H_
#define CENTERLINE_METRICS_SCORE_H_

namespace centerline::metrics {

// conf + bonus when conf > floor (strict), else conf. conf in [0, 1].
double ScoreRemap(double conf, double floor = 0.05, double bonus = 1.0);

// (det_l + det_l_ch + 100 * sqrt(top_ll / 100)) / 3, all in percent.
// Throws InvalidInput outside [0, 100].
double OlsL(double det_l, double det_l_ch, double top_ll);

}  // namespace centerline::metrics

#endif  // CENTERLINE_METRICS_SCORE_H_
