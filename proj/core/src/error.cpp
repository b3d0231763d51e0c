// Copyright 2026 The pausegraph Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pausegraph/error.hpp"

namespace pausegraph {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownSession:
      return "unknown_session";
    case ErrorCode::kUnknownDataset:
      return "unknown_dataset";
    case ErrorCode::kUnknownBookmark:
      return "unknown_bookmark";
    case ErrorCode::kInvalidSpec:
      return "invalid_spec";
    case ErrorCode::kInvalidPredicate:
      return "invalid_predicate";
    case ErrorCode::kDeadElement:
      return "dead_element";
    case ErrorCode::kSessionBusy:
      return "session_busy";
    case ErrorCode::kSessionTerminal:
      return "session_terminal";
    case ErrorCode::kDanglingEdge:
      return "dangling_edge";
    case ErrorCode::kIoError:
      return "io_error";
  }
  return "io_error";
}

}  // namespace pausegraph
