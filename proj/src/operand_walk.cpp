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

#include "operand_walk.h"

#include <deque>

#include "spvkit/error.h"

namespace spvkit {
namespace {

constexpr std::string_view kOpenCLStd = "OpenCL.std";

Error Corrupt(const InstructionDef& def, const std::string& message) {
  return Error(ErrorCode::kCorruptOperand, def.name + ": " + message);
}

}  // namespace

void OperandContext::Observe(const RawInstruction& inst,
                             const GrammarSpec& spec) {
  const auto& w = inst.operands;
  switch (inst.opcode) {
    case op::kTypeInt:
      if (w.size() >= 3) {
        numeric_types[w[0]] = {NumericType::Kind::kInt, w[1], w[2] != 0};
      }
      return;
    case op::kTypeFloat:
      if (w.size() >= 2) {
        numeric_types[w[0]] = {NumericType::Kind::kFloat, w[1], true};
      }
      return;
    case op::kExtInstImport:
      if (!w.empty()) {
        std::size_t used = 0;
        try {
          ext_sets[w[0]] = DecodeStringLiteral(
              std::span<const Word>(w).subspan(1), used);
        } catch (const Error&) {
        }
      }
      return;
    default:
      break;
  }
  const InstructionDef* def = spec.Find(inst.opcode);
  if (def && def->operands.size() >= 2 && w.size() >= 2 &&
      def->operands[0].kind == "IdResultType" &&
      def->operands[1].kind == "IdResult") {
    value_types[w[1]] = w[0];
  }
}

std::vector<ParsedOperand> WalkOperands(const RawInstruction& inst,
                                        const GrammarBundle& grammar,
                                        const OperandContext& context) {
  const GrammarSpec& spec = grammar.core();
  const InstructionDef* def = spec.Find(inst.opcode);
  if (!def) {
    throw Error(ErrorCode::kUnknownOpcode,
                "unknown opcode " + std::to_string(inst.opcode));
  }
  const auto& words = inst.operands;
  std::vector<ParsedOperand> out;
  std::deque<OperandSlot> queue(def->operands.begin(), def->operands.end());
  std::size_t pos = 0;

  auto numeric_of_value = [&](Word value_id) -> const NumericType* {
    auto t = context.value_types.find(value_id);
    if (t == context.value_types.end()) return nullptr;
    auto n = context.numeric_types.find(t->second);
    return n == context.numeric_types.end() ? nullptr : &n->second;
  };

  // Parses one instance of kind at pos, possibly queueing follow-on slots.
  auto parse_one = [&](const OperandSlot& slot) {
    const OperandKindDef* kind = spec.FindKind(slot.kind);
    ParsedOperand p;
    p.kind = kind ? std::string_view(kind->kind) : std::string_view();
    p.offset = pos;
    const std::string& k = slot.kind;
    if (k == "IdResult") {
      p.type = OperandType::kResultId;
    } else if (k == "IdResultType") {
      p.type = OperandType::kTypeId;
    } else if (kind && kind->category == OperandCategory::kId) {
      p.type = OperandType::kId;
    } else if (k == "LiteralString") {
      p.type = OperandType::kString;
      std::size_t used = 0;
      DecodeStringLiteral(std::span<const Word>(words).subspan(pos), used);
      p.count = used;
    } else if (k == "LiteralContextDependentNumber") {
      auto t = context.numeric_types.find(words.empty() ? 0 : words[0]);
      if (t != context.numeric_types.end()) {
        p.type = OperandType::kNumber;
        p.number = t->second;
        p.count = LiteralWordCount(t->second.width);
      } else {
        p.type = OperandType::kRawWord;
      }
    } else if (k == "LiteralExtInstInteger") {
      p.type = OperandType::kExtInstNumber;
      auto set = context.ext_sets.find(words.size() > 2 ? words[2] : 0);
      if (set != context.ext_sets.end() && set->second == kOpenCLStd) {
        if (const ExtInstDef* ext = grammar.opencl().Find(words[pos])) {
          queue.clear();
          for (auto it = ext->operands.rbegin(); it != ext->operands.rend();
               ++it) {
            queue.push_front(*it);
          }
        }
      }
    } else if (k == "LiteralSpecConstantOpInteger") {
      p.type = OperandType::kSpecConstantOpcode;
      if (const InstructionDef* inner =
              spec.Find(static_cast<std::uint16_t>(words[pos]))) {
        if (words[pos] <= 0xFFFF) {
          queue.clear();
          for (auto it = inner->operands.rbegin();
               it != inner->operands.rend(); ++it) {
            if (it->kind != "IdResult" && it->kind != "IdResultType") {
              queue.push_front(*it);
            }
          }
        }
      }
    } else if (kind && kind->category == OperandCategory::kValueEnum) {
      p.type = OperandType::kValueEnum;
      if (const EnumerantDef* e = spec.FindEnumerant(k, words[pos])) {
        for (auto it = e->parameters.rbegin(); it != e->parameters.rend();
             ++it) {
          queue.push_front(*it);
        }
      }
    } else if (kind && kind->category == OperandCategory::kBitEnum) {
      p.type = OperandType::kBitEnum;
      std::vector<OperandSlot> params;
      for (int bit = 0; bit < 32; ++bit) {
        const Word value = Word{1} << bit;
        if (!(words[pos] & value)) continue;
        if (const EnumerantDef* e = spec.FindEnumerant(k, value)) {
          params.insert(params.end(), e->parameters.begin(),
                        e->parameters.end());
        }
      }
      for (auto it = params.rbegin(); it != params.rend(); ++it) {
        queue.push_front(*it);
      }
    } else if (kind && kind->category == OperandCategory::kComposite) {
      const bool switch_pair = inst.opcode == op::kSwitch &&
                               k == "PairLiteralIntegerIdRef";
      for (auto it = kind->bases.rbegin(); it != kind->bases.rend(); ++it) {
        OperandSlot base{*it, "", Quantifier::kSingle};
        if (switch_pair && *it == "LiteralInteger") {
          base.kind = "LiteralContextDependentNumber";
        }
        queue.push_front(base);
      }
      return;  // the composite itself occupies no words
    } else if (k == "LiteralInteger") {
      p.type = OperandType::kLiteralInteger;
    } else {
      p.type = OperandType::kRawWord;
    }
    // OpSwitch case literals take the selector's width.
    if (k == "LiteralContextDependentNumber" && inst.opcode == op::kSwitch) {
      if (const NumericType* n = numeric_of_value(words[0])) {
        p.type = OperandType::kNumber;
        p.number = *n;
        p.count = LiteralWordCount(n->width);
      } else {
        p.type = OperandType::kLiteralInteger;
        p.count = 1;
      }
    }
    if (pos + p.count > words.size()) {
      throw Corrupt(*def, "operand " + std::string(k) + " runs past the end");
    }
    pos += p.count;
    out.push_back(p);
  };

  while (!queue.empty()) {
    OperandSlot slot = queue.front();
    queue.pop_front();
    switch (slot.quantifier) {
      case Quantifier::kSingle:
        if (pos >= words.size()) {
          // A composite expands without consuming words; its parts still
          // need them.
          throw Corrupt(*def, "missing operand " + slot.kind);
        }
        parse_one(slot);
        break;
      case Quantifier::kOptional:
        if (pos < words.size()) parse_one(slot);
        break;
      case Quantifier::kVariadic:
        if (pos < words.size()) {
          queue.push_front(slot);
          OperandSlot single = slot;
          single.quantifier = Quantifier::kSingle;
          queue.push_front(single);
        }
        break;
    }
  }
  if (pos != words.size()) {
    throw Corrupt(*def, std::to_string(words.size() - pos) +
                            " operand words left over");
  }
  return out;
}

}  // namespace spvkit
