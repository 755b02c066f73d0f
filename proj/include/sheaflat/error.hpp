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

namespace sheaflat {

enum class ErrorCode {
  kAmbientMismatch,
  kDimensionMismatch,
  kNotWellDefined,
  kNotGraded,
  kNotAPoset,
  kNotALattice,
  kNotComparable,
  kNotAnAtom,
  kNotGeometric,
  kRankTooSmall,
  kMapNotMonotone,
  kNotFunctorial,
  kAugmentationIncompatible,
  kNotAChainComplex,
  kNotAChainMap,
  kSurjectivityHypothesisFails,
  kSheafDomainMismatch,
  kInvalidArrangement,
  kParseError,
  kInvalidArgument,
};

inline const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kAmbientMismatch: return "AmbientMismatch";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kNotWellDefined: return "NotWellDefined";
    case ErrorCode::kNotGraded: return "NotGraded";
    case ErrorCode::kNotAPoset: return "NotAPoset";
    case ErrorCode::kNotALattice: return "NotALattice";
    case ErrorCode::kNotComparable: return "NotComparable";
    case ErrorCode::kNotAnAtom: return "NotAnAtom";
    case ErrorCode::kNotGeometric: return "NotGeometric";
    case ErrorCode::kRankTooSmall: return "RankTooSmall";
    case ErrorCode::kMapNotMonotone: return "MapNotMonotone";
    case ErrorCode::kNotFunctorial: return "NotFunctorial";
    case ErrorCode::kAugmentationIncompatible: return "AugmentationIncompatible";
    case ErrorCode::kNotAChainComplex: return "NotAChainComplex";
    case ErrorCode::kNotAChainMap: return "NotAChainMap";
    case ErrorCode::kSurjectivityHypothesisFails: return "SurjectivityHypothesisFails";
    case ErrorCode::kSheafDomainMismatch: return "SheafDomainMismatch";
    case ErrorCode::kInvalidArrangement: return "InvalidArrangement";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sheaflat
