// Copyright 2026 The Gridwalk Authors
//
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

#include "gridwalk/error.h"

namespace gridwalk {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kOutOfRange: return "OutOfRange";
    case ErrorCode::kInvalidProbability: return "InvalidProbability";
    case ErrorCode::kInvalidM: return "InvalidM";
    case ErrorCode::kInvalidK: return "InvalidK";
    case ErrorCode::kInvalidNodeCount: return "InvalidNodeCount";
    case ErrorCode::kNoEdges: return "NoEdges";
    case ErrorCode::kNotConverged: return "NotConverged";
    case ErrorCode::kNoSources: return "NoSources";
    case ErrorCode::kMissingCentrality: return "MissingCentrality";
    case ErrorCode::kNotRunning: return "NotRunning";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kComponentTooSmall: return "ComponentTooSmall";
    case ErrorCode::kZeroTargets: return "ZeroTargets";
    case ErrorCode::kDivisionByZero: return "DivisionByZero";
    case ErrorCode::kEmptyGrid: return "EmptyGrid";
    case ErrorCode::kEmptySeries: return "EmptySeries";
    case ErrorCode::kUnknownKey: return "UnknownKey";
    case ErrorCode::kBadValue: return "BadValue";
    case ErrorCode::kMissingRequired: return "MissingRequired";
    case ErrorCode::kIo: return "Io";
  }
  return "Unknown";
}

}  // namespace gridwalk
