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

#ifndef GRIDWALK_ERROR_H_
#define GRIDWALK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace gridwalk {

enum class ErrorCode {
  // graph_core
  kSelfLoop,
  kDuplicateEdge,
  kOutOfRange,
  // generators
  kInvalidProbability,
  kInvalidM,
  kInvalidK,
  kInvalidNodeCount,
  // centrality
  kNoEdges,
  kNotConverged,
  // routing
  kNoSources,
  kMissingCentrality,
  kNotRunning,
  kInvalidArgument,
  // experiments
  kComponentTooSmall,
  kZeroTargets,
  kDivisionByZero,
  kEmptyGrid,
  kEmptySeries,
  // config
  kUnknownKey,
  kBadValue,
  kMissingRequired,
  // io
  kIo,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries one of the codes above so that
// callers (tests, the CLI exit-code mapping) can dispatch without parsing
// message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
        code_(code),
        message_(message) {}

  ErrorCode code() const noexcept { return code_; }
  // what() without the code prefix, for re-wrapping with more context.
  const std::string& message() const noexcept { return message_; }

 private:
  ErrorCode code_;
  std::string message_;
};

}  // namespace gridwalk

#endif  // GRIDWALK_ERROR_H_
