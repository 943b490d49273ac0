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

#include "angcov/error.h"

namespace angcov {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kCoincidentPoints: return "CoincidentPoints";
    case ErrorCode::kZeroAngle: return "ZeroAngle";
    case ErrorCode::kDisjointWedges: return "DisjointWedges";
    case ErrorCode::kOutsidePolygon: return "OutsidePolygon";
    case ErrorCode::kPreconditionViolated: return "PreconditionViolated";
    case ErrorCode::kInfeasible: return "Infeasible";
    case ErrorCode::kInfeasibleExtension: return "InfeasibleExtension";
    case ErrorCode::kNoHittingSet: return "NoHittingSet";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kInfeasibleAtRadius: return "InfeasibleAtRadius";
    case ErrorCode::kInfeasibleBudget: return "InfeasibleBudget";
    case ErrorCode::kThreeClientViolation: return "ThreeClientViolation";
    case ErrorCode::kBadParams: return "BadParams";
    case ErrorCode::kInternal: return "Internal";
  }
  return "Unknown";
}

bool IsInfeasibility(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInfeasible:
    case ErrorCode::kInfeasibleExtension:
    case ErrorCode::kNoHittingSet:
    case ErrorCode::kInfeasibleAtRadius:
    case ErrorCode::kInfeasibleBudget:
      return true;
    default:
      return false;
  }
}

}  // namespace angcov
