/*
 * Copyright 2026 The tracerank Authors.
 *
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

#ifndef TRACERANK_ERROR_H_
#define TRACERANK_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace tracerank {

enum class ErrorCode {
  kMissingFile,
  kEmptyArtifact,
  kInvalidId,
  kInvalidEncoding,
  kDanglingAnswerId,
  kDuplicateId,
  kDuplicateLink,
  kUnknownSourceId,
  kFormatError,
  kMissingVectorForId,
  kDimensionMismatch,
  kDomainError,
  kEmptyGoldSet,
  kNoEvaluableSources,
  kTooFewPairs,
  kInvalidArgument,
  kIoError,
};

std::string_view ErrorCodeName(ErrorCode code);

// All library failures are reported through this exception. `subject` names
// the offending id, flag, or file when there is one.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string message, std::string subject = {});

  ErrorCode code() const { return code_; }
  const std::string& subject() const { return subject_; }
  // Pipeline stage that raised the error; empty outside run_pipeline.
  const std::string& stage() const { return stage_; }

  // Message without the leading code name.
  const std::string& detail() const { return detail_; }

  Error WithStage(std::string stage) const;
  // Same error with `context: ` prepended to the message.
  Error WithContext(std::string_view context) const;

 private:
  ErrorCode code_;
  std::string detail_;
  std::string subject_;
  std::string stage_;
};

}  // namespace tracerank

#endif  // TRACERANK_ERROR_H_
