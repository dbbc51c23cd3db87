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

#ifndef SPVKIT_VALIDATOR_H_
#define SPVKIT_VALIDATOR_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spvkit/binary.h"
#include "spvkit/builder.h"
#include "spvkit/bundle.h"

namespace spvkit {

enum class Severity { kError, kWarning };

std::string_view SeverityName(Severity severity);

// Stable diagnostic codes.
namespace diag {
inline constexpr std::string_view kMissingFunction = "MissingFunction";
inline constexpr std::string_view kMissingCapability = "MissingCapability";
inline constexpr std::string_view kMissingMemoryModel = "MissingMemoryModel";
inline constexpr std::string_view kDuplicateMemoryModel =
    "DuplicateMemoryModel";
inline constexpr std::string_view kMissingEntryPoint = "MissingEntryPoint";
inline constexpr std::string_view kBoundTooSmall = "BoundTooSmall";
inline constexpr std::string_view kDuplicateResultId = "DuplicateResultId";
inline constexpr std::string_view kInvalidId = "InvalidId";
inline constexpr std::string_view kOperandMismatch = "OperandCountMismatch";
inline constexpr std::string_view kUnknownOpcode = "UnknownOpcode";
// Decode failures use the ErrorCodeName of the decode error, e.g.
// "NotSpirv", "CorruptStream" or "TruncatedStream".
}  // namespace diag

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string code;
  std::string message;
  // Instruction index in stream order; empty for module-wide findings.
  std::optional<std::size_t> instruction;

  std::string Location() const;
  bool operator==(const Diagnostic&) const = default;
};

// "severity code location message", e.g.
// "error MissingCapability #7 OpTypeInt requires capability Int64".
std::string FormatDiagnostic(const Diagnostic& d);

bool HasErrors(const std::vector<Diagnostic>& diagnostics);

// Module-wide findings come first in rule order, then per-instruction
// findings by instruction index.
std::vector<Diagnostic> ValidateModule(
    const DecodedModule& module,
    const GrammarBundle& grammar = GrammarBundle::Default());
std::vector<Diagnostic> ValidateModule(
    std::span<const std::uint8_t> bytes,
    const GrammarBundle& grammar = GrammarBundle::Default());
std::vector<Diagnostic> ValidateModule(
    const Module& module,
    const GrammarBundle& grammar = GrammarBundle::Default());

// Capability requirements of instructions, enumerant operands and numeric
// type widths against the declared capabilities and everything they imply.
// A requirement listing several capabilities is met by any one of them.
std::vector<Diagnostic> CheckCapabilityClosure(
    const DecodedModule& module,
    const GrammarBundle& grammar = GrammarBundle::Default());

}  // namespace spvkit

#endif  // SPVKIT_VALIDATOR_H_
