// Copyright (c) 2026 The spvkit Authors
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

#ifndef SPVKIT_ERROR_H_
#define SPVKIT_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace spvkit {

enum class ErrorCode {
  kParse,
  kSchema,
  kNotFound,
  kArgument,
  kGeneration,
  kEncoding,
  kCodec,
  kNotSpirv,
  kCorruptStream,
  kTruncatedStream,
  kCorruptOperand,
  kUnknownOpcode,
  kScope,
  kSsaViolation,
  kSerialization,
  kStructural,
  kResource,
  kInternal,
  kSyntax,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library. Text positions are 1-based and zero
// when not applicable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0,
        std::size_t column = 0);

  ErrorCode code() const { return code_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  ErrorCode code_;
  std::size_t line_;
  std::size_t column_;
};

}  // namespace spvkit

#endif  // SPVKIT_ERROR_H_
