// Copyright 2026 The xyznet Authors
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
#include <string_view>

namespace xyznet {

enum class ErrorCode {
  InvalidVertex,
  InvalidArgument,
  SelfLoop,
  NotVertexDisjoint,
  EigensolverDiverged,
  TooLarge,
  TrivialCase,
  UnsupportedOrder,
  BrokenChain,
  Parse,
  Io,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::NotVertexDisjoint: return "NotVertexDisjoint";
    case ErrorCode::EigensolverDiverged: return "EigensolverDiverged";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::TrivialCase: return "TrivialCase";
    case ErrorCode::UnsupportedOrder: return "UnsupportedOrder";
    case ErrorCode::BrokenChain: return "BrokenChain";
    case ErrorCode::Parse: return "Parse";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (and tests) can match on the kind rather than the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace xyznet
