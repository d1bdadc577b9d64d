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

#ifndef CENTERLINE_ERROR_H_
#define CENTERLINE_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace centerline {

enum class ErrorCode {
  kInvalidInput,
  kEmptyMask,
  kEmptyBand,
  kReconstructionFailed,
  kFormatError,
};

std::string_view ErrorCodeName(ErrorCode code);

// The single exception type thrown by the library. The code lets callers
// (mostly the CLI) branch without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace centerline

#endif  // CENTERLINE_ERROR_H_
