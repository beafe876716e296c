// Copyright 2026 The bayescorr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>

namespace bayescorr {

// Every error raised by the library carries a stable kind tag so callers
// (and the CLI exit-code mapping) can dispatch without string matching.
enum class ErrorKind {
  kInvalidGame,
  kInvalidDistribution,
  kInvalidTransform,
  kNotValidOnX,
  kNoConvergence,
  kRewardOutOfRange,
  kDimensionMismatch,
  kAuditError,
  kEnumerationTooLarge,
  kCapExceeded,
  kNumericallyAmbiguous,
  kAssumptionViolated,
  kNotAnEquilibrium,
  kInternal,
};

inline const char* ErrorKindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::kInvalidGame: return "InvalidGame";
    case ErrorKind::kInvalidDistribution: return "InvalidDistribution";
    case ErrorKind::kInvalidTransform: return "InvalidTransform";
    case ErrorKind::kNotValidOnX: return "NotValidOnX";
    case ErrorKind::kNoConvergence: return "NoConvergence";
    case ErrorKind::kRewardOutOfRange: return "RewardOutOfRange";
    case ErrorKind::kDimensionMismatch: return "DimensionMismatch";
    case ErrorKind::kAuditError: return "AuditError";
    case ErrorKind::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorKind::kCapExceeded: return "CapExceeded";
    case ErrorKind::kNumericallyAmbiguous: return "NumericallyAmbiguous";
    case ErrorKind::kAssumptionViolated: return "AssumptionViolated";
    case ErrorKind::kNotAnEquilibrium: return "NotAnEquilibrium";
    case ErrorKind::kInternal: return "Internal";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + what),
        kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void Fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

// Numeric tolerances shared across modules.
inline constexpr double kIngestTol = 1e-12;
inline constexpr double kDerivedTol = 1e-9;
inline constexpr double kFixedPointTol = 1e-10;
inline constexpr double kFeasibilityTol = 1e-7;

}  // namespace bayescorr
