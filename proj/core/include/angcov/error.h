// Copyright 2026 The angcov Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ANGCOV_ERROR_H_
#define ANGCOV_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace angcov {

enum class ErrorCode {
  kCoincidentPoints,
  kZeroAngle,
  kDisjointWedges,
  kOutsidePolygon,
  kPreconditionViolated,
  kInfeasible,
  kInfeasibleExtension,
  kNoHittingSet,
  kTooLarge,
  kInfeasibleAtRadius,
  kInfeasibleBudget,
  kThreeClientViolation,
  kBadParams,
  kInternal,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. The code is stable and machine
// readable; the message is for humans.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// True for the codes that mean "no solution exists for these inputs" as
// opposed to malformed input or an internal fault.
bool IsInfeasibility(ErrorCode code);

}  // namespace angcov

#endif  // ANGCOV_ERROR_H_
