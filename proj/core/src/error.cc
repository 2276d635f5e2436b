// Copyright 2026 The batchgreedy Authors
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

#include "batchgreedy/error.h"

#include <string>

namespace batchgreedy {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::kIndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::kEmptySelection: return "EmptySelection";
    case ErrorCode::kEmptyComplement: return "EmptyComplement";
    case ErrorCode::kDimensionMismatch: return "DimensionMismatch";
    case ErrorCode::kTooLarge: return "TooLarge";
    case ErrorCode::kScheduleExceedsGround: return "ScheduleExceedsGround";
    case ErrorCode::kPartitionTooSmall: return "PartitionTooSmall";
    case ErrorCode::kBatchExceedsSample: return "BatchExceedsSample";
    case ErrorCode::kDegenerateEnsemble: return "DegenerateEnsemble";
    case ErrorCode::kInvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + what),
      code_(code) {}

}  // namespace batchgreedy
