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

#ifndef GLASSBOX_ERROR_H_
#define GLASSBOX_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace glassbox {

enum class ErrorCode {
  // Data loading and preparation.
  kMissingColumn,
  kUnparsableValue,
  kEmptyFile,
  kUnknownClassName,
  kInvalidLabel,
  kSingleClassDataset,
  kSeriesTooShort,
  kEmptyDataset,
  kLeakage,
  kIo,
  // Model fitting.
  kDegenerateTargets,
  kNonFinite,
  kNotImplemented,
  // Contract violations on inputs.
  kArityMismatch,
  kSchemaMismatch,
  kInvalidDistribution,
  kPartitionMismatch,
  kEmptyNode,
  kEmptyCounts,
  kSingleClassLabels,
  kLengthMismatch,
  kEmptyInput,
  kNoSuchSample,
  kIncompleteRun,
  kInvalidArgument,
  kInvalidConfig,
  kCorruptFile,
};

// Coarse grouping used for process exit codes.
enum class ErrorCategory { kValidation = 1, kData = 2, kTraining = 3 };

std::string_view ErrorCodeName(ErrorCode code);
ErrorCategory CategoryOf(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }
  ErrorCategory category() const { return CategoryOf(code_); }
  // Message without the code prefix.
  const std::string& detail() const { return detail_; }

 private:
  ErrorCode code_;
  std::string detail_;
};

}  // namespace glassbox

#endif  // GLASSBOX_ERROR_H_
