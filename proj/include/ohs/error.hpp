// Copyright 2026 The Authors.
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

#pragma once

#include <stdexcept>
#include <string>

namespace ohs {

enum class ErrorCode {
  kInvalidShape,
  kInvalidArgument,
  kInvalidInput,
  kDegeneratePair,
  kDegenerateConfiguration,
  kBrokenInvariant,
  kTooLarge,
  kInfeasible,
  kProtocolViolation,
  kParse,
};

const char* to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// that callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidShape: return "invalid-shape";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kInvalidInput: return "invalid-input";
    case ErrorCode::kDegeneratePair: return "degenerate-pair";
    case ErrorCode::kDegenerateConfiguration: return "degenerate-configuration";
    case ErrorCode::kBrokenInvariant: return "broken-invariant";
    case ErrorCode::kTooLarge: return "too-large";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kProtocolViolation: return "protocol-violation";
    case ErrorCode::kParse: return "parse";
  }
  return "unknown";
}

}  // namespace ohs
