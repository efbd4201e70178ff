// Copyright 2026 The MDM Link Prediction Authors.
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

namespace mdm {

// Every failure the toolkit reports carries one of these codes so callers
// (CLI exit paths, HTTP status mapping, tests) can branch without parsing text.
enum class ErrorCode {
  kDuplicateNode,
  kDanglingEdge,
  kSelfLoop,
  kDuplicateEdge,
  kEmptyResult,
  kUnknownNode,
  kIoError,
  kSchemaMismatch,
  kConfigError,
  kInfeasibleRatio,
  kInvalidThresholds,
  kUnclassedSensitiveAttribute,
  kInvalidArgument,
  kTooFewEdges,
  kExhaustedCandidates,
  kShapeMismatch,
  kNonFiniteActivation,
  kDivergence,
  kSingleClass,
  kEmptyWatchlist,
  kUnknownPrediction,
  kIncompleteRecord,
  kArtifactMissing,
  kPortInUse,
  kUnknownNodeIds,
  kNotFound,
  kAlreadyDecided,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace mdm
