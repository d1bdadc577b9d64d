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

#include "centerline/grid.h"

#include <string>

namespace centerline {

void RequireProbabilities(const ScalarGrid& grid, const char* what) {
  for (double v : grid.data()) {
    if (v < 0.0 || v > 1.0) {
      throw Error(ErrorCode::kInvalidInput,
                  std::string(what) + ": probabilities must lie in [0, 1]");
    }
  }
}

}  // namespace centerline
