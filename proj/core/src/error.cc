/*
 * Copyright 2026 The Glassbox Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "glassbox/error.h"

namespace glassbox {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingColumn: return "MissingColumn";
    case ErrorCode::kUnparsableValue: return "UnparsableValue";
    case ErrorCode::kEmptyFile: return "EmptyFile";
    case ErrorCode::kUnknownClassName: return "UnknownClassName";
    case ErrorCode::kInvalidLabel: return "InvalidLabel";
    case ErrorCode::kSingleClassDataset: return "SingleClassDataset";
    case ErrorCode::kSeriesTooShort: return "SeriesTooShort";
    case ErrorCode::kEmptyDataset: return "EmptyDataset";
    case ErrorCode::kLeakage: return "Leakage";
    case ErrorCode::kIo: return "Io";
    case ErrorCode::kDegenerateTargets: return "DegenerateTargets";
    case ErrorCode::kNonFinite: return "NonFinite";
    case ErrorCode::kNotImplemented: return "NotImplemented";
    case ErrorCode::kArityMismatch: return "ArityMismatch";
    case ErrorCode::kSchemaMismatch: return "SchemaMismatch";
    case ErrorCode::kInvalidDistribution: return "InvalidDistribution";
    case ErrorCode::kPartitionMismatch: return "PartitionMismatch";
    case ErrorCode::kEmptyNode: return "EmptyNode";
    case ErrorCode::kEmptyCounts: return "EmptyCounts";
    case ErrorCode::kSingleClassLabels: return "SingleClassLabels";
    case ErrorCode::kLengthMismatch: return "LengthMismatch";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kNoSuchSample: return "NoSuchSample";
    case ErrorCode::kIncompleteRun: return "IncompleteRun";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kInvalidConfig: return "InvalidConfig";
    case ErrorCode::kCorruptFile: return "CorruptFile";
  }
  return "Unknown";
}

ErrorCategory CategoryOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingColumn:
    case ErrorCode::kUnparsableValue:
    case ErrorCode::kEmptyFile:
    case ErrorCode::kUnknownClassName:
    case ErrorCode::kInvalidLabel:
    case ErrorCode::kSingleClassDataset:
    case ErrorCode::kSeriesTooShort:
    case ErrorCode::kEmptyDataset:
    case ErrorCode::kLeakage:
    case ErrorCode::kIo:
    case ErrorCode::kCorruptFile:
    case ErrorCode::kNoSuchSample:
    case ErrorCode::kIncompleteRun:
      return ErrorCategory::kData;
    case ErrorCode::kDegenerateTargets:
    case ErrorCode::kNonFinite:
    case ErrorCode::kNotImplemented:
      return ErrorCategory::kTraining;
    default:
      return ErrorCategory::kValidation;
  }
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(message) {}

}  // namespace glassbox
