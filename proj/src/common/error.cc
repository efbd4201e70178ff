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

#include "mdm/common/error.h"

namespace mdm {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kDuplicateNode: return "DuplicateNode";
    case ErrorCode::kDanglingEdge: return "DanglingEdge";
    case ErrorCode::kSelfLoop: return "SelfLoop";
    case ErrorCode::kDuplicateEdge: return "DuplicateEdge";
    case ErrorCode::kEmptyResult: return "EmptyResult";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kIoError: return "IoError";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kInfeasibleRatio: return "InfeasibleRatio";
    case ErrorCode::kInvalidThresholds: return "InvalidThresholds";
    case ErrorCode::kUnclassedSensitiveAttribute: return "UnclassedSensitiveAttribute";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kTooFewEdges: return "TooFewEdges";
    case ErrorCode::kExhaustedCandidates: return "ExhaustedCandidates";
    case ErrorCode::kShapeMismatch: return "ShapeMismatch";
    case ErrorCode::kNonFiniteActivation: return "NonFiniteActivation";
    case ErrorCode::kDivergence: return "Divergence";
    case ErrorCode::kSingleClass: return "SingleClass";
    case ErrorCode::kEmptyWatchlist: return "EmptyWatchlist";
    case ErrorCode::kUnknownPrediction: return "UnknownPrediction";
    case ErrorCode::kIncompleteRecord: return "IncompleteRecord";
    case ErrorCode::kArtifactMissing: return "ArtifactMissing";
    case ErrorCode::kPortInUse: return "PortInUse";
    case ErrorCode::kUnknownNodeIds: return "UnknownNodeIds";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kAlreadyDecided: return "AlreadyDecided";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
      code_(code) {}

}  // namespace mdm
