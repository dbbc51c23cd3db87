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

#include "spvkit/error.h"

namespace spvkit {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "ParseError";
    case ErrorCode::kSchema: return "SchemaError";
    case ErrorCode::kNotFound: return "NotFound";
    case ErrorCode::kArgument: return "ArgumentError";
    case ErrorCode::kGeneration: return "GenerationError";
    case ErrorCode::kEncoding: return "EncodingError";
    case ErrorCode::kCodec: return "CodecError";
    case ErrorCode::kNotSpirv: return "NotSpirv";
    case ErrorCode::kCorruptStream: return "CorruptStream";
    case ErrorCode::kTruncatedStream: return "TruncatedStream";
    case ErrorCode::kCorruptOperand: return "CorruptOperand";
    case ErrorCode::kUnknownOpcode: return "UnknownOpcode";
    case ErrorCode::kScope: return "ScopeError";
    case ErrorCode::kSsaViolation: return "SsaViolation";
    case ErrorCode::kSerialization: return "SerializationError";
    case ErrorCode::kStructural: return "StructuralError";
    case ErrorCode::kResource: return "ResourceError";
    case ErrorCode::kInternal: return "InternalError";
    case ErrorCode::kSyntax: return "SyntaxError";
  }
  return "Error";
}

Error::Error(ErrorCode code, const std::string& message, std::size_t line,
             std::size_t column)
    : std::runtime_error(message), code_(code), line_(line), column_(column) {}

}  // namespace spvkit
