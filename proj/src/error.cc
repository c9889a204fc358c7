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

#include "tracerank/error.h"

#include <utility>

namespace tracerank {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kMissingFile: return "MissingFile";
    case ErrorCode::kEmptyArtifact: return "EmptyArtifact";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kInvalidEncoding: return "InvalidEncoding";
    case ErrorCode::kDanglingAnswerId: return "DanglingAnswerId";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kDuplicateLink: return "DuplicateLink";
    case ErrorCode::kUnknownSourceId: return "UnknownSourceId";
    case ErrorCode::kFormatError: return "FormatError";
    case ErrorCode::kMissingVectorForId: return "MissingVectorForId";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kDomainError: return "DomainError";
    case ErrorCode::kEmptyGoldSet: return "EmptyGoldSet";
    case ErrorCode::kNoEvaluableSources: return "NoEvaluableSources";
    case ErrorCode::kTooFewPairs: return "TooFewPairs";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string message, std::string subject)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code),
      detail_(std::move(message)),
      subject_(std::move(subject)) {}

Error Error::WithStage(std::string stage) const {
  if (!stage_.empty()) return *this;
  Error staged(code_, "[" + stage + "] " + detail_, subject_);
  staged.stage_ = std::move(stage);
  return staged;
}

Error Error::WithContext(std::string_view context) const {
  Error wrapped(code_, std::string(context) + ": " + detail_, subject_);
  wrapped.stage_ = stage_;
  return wrapped;
}

}  // namespace tracerank
