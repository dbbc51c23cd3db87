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

#ifndef SPVKIT_SRC_OPERAND_WALK_H_
#define SPVKIT_SRC_OPERAND_WALK_H_

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "literal_text.h"
#include "spvkit/binary.h"
#include "spvkit/bundle.h"

namespace spvkit {

enum class OperandType {
  kResultId,
  kTypeId,
  kId,
  kLiteralInteger,
  kString,
  kNumber,
  kValueEnum,
  kBitEnum,
  kExtInstNumber,
  kSpecConstantOpcode,
  kRawWord,
};

struct ParsedOperand {
  OperandType type = OperandType::kRawWord;
  std::string_view kind;
  std::size_t offset = 0;  // into RawInstruction::operands
  std::size_t count = 1;
  NumericType number;      // kNumber only
};

// Facts about earlier instructions needed to parse later ones.
struct OperandContext {
  std::unordered_map<Word, NumericType> numeric_types;  // type id -> type
  std::unordered_map<Word, Word> value_types;           // value id -> type id
  std::unordered_map<Word, std::string> ext_sets;       // set id -> name

  // Records what inst defines. Call in stream order.
  void Observe(const RawInstruction& inst, const GrammarSpec& spec);
};

// Opcodes referenced by name throughout the toolkit.
namespace op {
inline constexpr std::uint16_t kExtInstImport = 11;
inline constexpr std::uint16_t kExtInst = 12;
inline constexpr std::uint16_t kTypeInt = 21;
inline constexpr std::uint16_t kTypeFloat = 22;
inline constexpr std::uint16_t kName = 5;
inline constexpr std::uint16_t kCapability = 17;
inline constexpr std::uint16_t kMemoryModel = 14;
inline constexpr std::uint16_t kEntryPoint = 15;
inline constexpr std::uint16_t kFunction = 54;
inline constexpr std::uint16_t kFunctionEnd = 56;
inline constexpr std::uint16_t kLabel = 248;
inline constexpr std::uint16_t kSwitch = 251;
inline constexpr std::uint16_t kSpecConstantOp = 52;
}  // namespace op

// Splits inst's operand words per the grammar. Throws
// Error(kCorruptOperand) for missing or left-over words and
// Error(kUnknownOpcode) for opcodes the grammar lacks.
std::vector<ParsedOperand> WalkOperands(const RawInstruction& inst,
                                        const GrammarBundle& grammar,
                                        const OperandContext& context);

}  // namespace spvkit

#endif  // SPVKIT_SRC_OPERAND_WALK_H_
