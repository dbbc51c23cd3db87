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

#ifndef SPVKIT_OPERANDS_H_
#define SPVKIT_OPERANDS_H_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "spvkit/binary.h"

namespace spvkit {

// An SSA identifier. Value 0 means "no id".
struct Id {
  Word value = 0;

  constexpr Id() = default;
  constexpr explicit Id(Word v) : value(v) {}

  constexpr explicit operator bool() const { return value != 0; }
  constexpr auto operator<=>(const Id&) const = default;
};

// An instruction ready for a builder scope: operand words plus the id
// bookkeeping the builder needs for its registry and structural checks.
struct Instruction {
  std::uint16_t opcode = 0;
  std::vector<Word> operands;
  Id result_id;
  Id result_type;
  std::vector<Id> referenced_ids;
  // Grammar class, consulted only when the instruction is inserted.
  std::string_view class_attr;

  RawInstruction ToRaw() const { return RawInstruction{opcode, operands}; }
};

struct EncodedOperands {
  std::vector<Word> words;
  std::vector<Id> ids;

  bool operator==(const EncodedOperands&) const = default;
};

struct IdResultType {
  Id id;
  IdResultType() = default;
  IdResultType(Id i) : id(i) {}
};

struct IdResult {
  Id id;
  IdResult() = default;
  IdResult(Id i) : id(i) {}
};

struct IdRef {
  Id id;
  IdRef() = default;
  IdRef(Id i) : id(i) {}
};

struct IdScope {
  Id id;
  IdScope() = default;
  IdScope(Id i) : id(i) {}
};

struct IdMemorySemantics {
  Id id;
  IdMemorySemantics() = default;
  IdMemorySemantics(Id i) : id(i) {}
};

struct LiteralInteger {
  Word value = 0;
  LiteralInteger() = default;
  LiteralInteger(Word v) : value(v) {}
};

struct LiteralString {
  std::string value;
  LiteralString() = default;
  LiteralString(const char* v) : value(v) {}
  LiteralString(std::string v) : value(std::move(v)) {}
};

// Words already sized for the governing type.
struct LiteralContextDependentNumber {
  std::vector<Word> words;

  static LiteralContextDependentNumber Integer(
      std::uint64_t value, unsigned bit_width,
      Signedness signedness = Signedness::kUnsigned) {
    return {EncodeContextDependentLiteral(value, bit_width, signedness)};
  }
  static LiteralContextDependentNumber Float32(float value);
  static LiteralContextDependentNumber Float64(double value);
};

struct LiteralSpecConstantOpInteger {
  Word value = 0;
  LiteralSpecConstantOpInteger() = default;
  LiteralSpecConstantOpInteger(Word v) : value(v) {}
};

template <class T>
using OptionalOperand = std::optional<T>;

template <class T>
using MultipleOperands = std::vector<T>;

// Enumerant parameters of a BitEnum, keyed by the bit that owns them.
using BitParameters = std::vector<std::pair<Word, EncodedOperands>>;

class OperandWriter {
 public:
  OperandWriter() = default;
  OperandWriter(std::uint16_t opcode, std::string_view class_attr) {
    inst_.opcode = opcode;
    inst_.class_attr = class_attr;
  }

  void WriteWord(Word w) { inst_.operands.push_back(w); }
  void WriteId(Id id) {
    inst_.operands.push_back(id.value);
    inst_.referenced_ids.push_back(id);
  }
  void Append(const EncodedOperands& operands) {
    inst_.operands.insert(inst_.operands.end(), operands.words.begin(),
                          operands.words.end());
    inst_.referenced_ids.insert(inst_.referenced_ids.end(),
                                operands.ids.begin(), operands.ids.end());
  }

  void Write(const IdResultType& v) {
    inst_.result_type = v.id;
    WriteId(v.id);
  }
  void Write(const IdResult& v) {
    inst_.result_id = v.id;
    inst_.operands.push_back(v.id.value);
  }
  void Write(const IdRef& v) { WriteId(v.id); }
  void Write(const IdScope& v) { WriteId(v.id); }
  void Write(const IdMemorySemantics& v) { WriteId(v.id); }
  void Write(const LiteralInteger& v) { WriteWord(v.value); }
  void Write(const LiteralString& v) {
    AppendStringLiteral(v.value, inst_.operands);
  }
  void Write(const LiteralContextDependentNumber& v) {
    inst_.operands.insert(inst_.operands.end(), v.words.begin(),
                          v.words.end());
  }
  void Write(const LiteralSpecConstantOpInteger& v) { WriteWord(v.value); }

  template <class T>
  void Write(const std::optional<T>& v) {
    if (v) Write(*v);
  }
  template <class T>
  void Write(const std::vector<T>& v) {
    for (const T& item : v) Write(item);
  }
  template <class T>
    requires requires(const T& t, OperandWriter& w) { t.WriteTo(w); }
  void Write(const T& v) {
    v.WriteTo(*this);
  }

  Instruction Finish() && { return std::move(inst_); }
  EncodedOperands TakeOperands() && {
    return EncodedOperands{std::move(inst_.operands),
                           std::move(inst_.referenced_ids)};
  }

 private:
  Instruction inst_;
};

template <class... Args>
EncodedOperands EncodeParameters(const Args&... args) {
  OperandWriter w;
  (w.Write(args), ...);
  return std::move(w).TakeOperands();
}

inline BitParameters MergeBitParameters(BitParameters a,
                                        const BitParameters& b) {
  for (const auto& entry : b) {
    auto same = [&](const auto& e) { return e.first == entry.first; };
    if (std::find_if(a.begin(), a.end(), same) == a.end()) a.push_back(entry);
  }
  return a;
}

// Parameters follow the mask in increasing bit order.
inline void WriteBitEnum(OperandWriter& w, Word mask,
                         const BitParameters& parameters) {
  w.WriteWord(mask);
  std::vector<const std::pair<Word, EncodedOperands>*> ordered;
  for (const auto& entry : parameters) ordered.push_back(&entry);
  std::sort(ordered.begin(), ordered.end(),
            [](const auto* x, const auto* y) { return x->first < y->first; });
  for (const auto* entry : ordered) w.Append(entry->second);
}

}  // namespace spvkit

#endif  // SPVKIT_OPERANDS_H_
