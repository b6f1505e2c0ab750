// Copyright 2026 The decohere Authors
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

namespace decohere {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  Overflow,
  MaxSubdivisions,
  NonFinite,
  StepUnderflow,
  MaxSteps,
  DimensionMismatch,
  InvariantViolation,
  NotPositive,
  NegativeFrequency,
  ZeroMomentumTransfer,
  QuadratureSupport,
  InvalidArgument,
  ParseError,
  ValidationError,
};

std::string_view to_string(ErrorCode code);

/// Library error. Every failure mode surfaced by decohere carries a code so
/// callers (and tests) can branch on the kind without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::MaxSubdivisions: return "MaxSubdivisions";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::StepUnderflow: return "StepUnderflow";
    case ErrorCode::MaxSteps: return "MaxSteps";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::NegativeFrequency: return "NegativeFrequency";
    case ErrorCode::ZeroMomentumTransfer: return "ZeroMomentumTransfer";
    case ErrorCode::QuadratureSupport: return "QuadratureSupport";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ValidationError: return "ValidationError";
  }
  return "Unknown";
}

}  // namespace decohere
