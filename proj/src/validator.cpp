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

#include "spvkit/validator.h"

#include <algorithm>
#include <map>
#include <set>

#include "operand_walk.h"
#include "spvkit/error.h"

namespace spvkit {
namespace {

struct WidthRule {
  std::uint16_t opcode;
  Word width;
  std::vector<std::string_view> capabilities;  // any one suffices
};

const std::vector<WidthRule>& WidthRules() {
  static const std::vector<WidthRule> rules = {
      {op::kTypeInt, 8, {"Int8"}},
      {op::kTypeInt, 16, {"Int16"}},
      {op::kTypeInt, 64, {"Int64"}},
      {op::kTypeFloat, 16, {"Float16", "Float16Buffer"}},
      {op::kTypeFloat, 64, {"Float64"}},
  };
  return rules;
}

template <class Names>
std::string Requirement(const Names& names) {
  if (names.size() == 1) return "capability " + std::string(names[0]);
  std::string out = "one of capabilities";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out += (i ? ", " : " ") + std::string(names[i]);
  }
  return out;
}

template <class Names>
bool Satisfied(const Names& names, const std::set<std::string>& available) {
  if (names.empty()) return true;
  return std::any_of(names.begin(), names.end(), [&](const auto& name) {
    return available.count(std::string(name)) != 0;
  });
}

Diagnostic Make(Severity severity, std::string_view code, std::string message,
                std::optional<std::size_t> index = std::nullopt) {
  return Diagnostic{severity, std::string(code), std::move(message), index};
}

std::string OpName(const GrammarSpec& spec, std::uint16_t opcode) {
  const InstructionDef* def = spec.Find(opcode);
  return def ? def->name : "OpUnknown(" + std::to_string(opcode) + ")";
}

}  // namespace

std::string_view SeverityName(Severity severity) {
  return severity == Severity::kError ? "error" : "warning";
}

std::string Diagnostic::Location() const {
  return instruction ? "#" + std::to_string(*instruction) : "module";
}

std::string FormatDiagnostic(const Diagnostic& d) {
  return std::string(SeverityName(d.severity)) + " " + d.code + " " +
         d.Location() + " " + d.message;
}

bool HasErrors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) {
                       return d.severity == Severity::kError;
                     });
}

std::vector<Diagnostic> CheckCapabilityClosure(const DecodedModule& module,
                                               const GrammarBundle& grammar) {
  const GrammarSpec& spec = grammar.core();
  std::set<std::string> declared;
  for (const RawInstruction& inst : module.instructions) {
    if (inst.opcode != op::kCapability || inst.operands.empty()) continue;
    if (const EnumerantDef* e =
            spec.FindEnumerant("Capability", inst.operands[0])) {
      declared.insert(e->name);
    }
  }
  const std::set<std::string> available =
      CapabilityDependencyGraph(spec).Closure(declared);

  std::vector<Diagnostic> out;
  OperandContext context;
  for (std::size_t i = 0; i < module.instructions.size(); ++i) {
    const RawInstruction& inst = module.instructions[i];
    const InstructionDef* def = spec.Find(inst.opcode);
    if (!def || inst.opcode == op::kCapability) {
      context.Observe(inst, spec);
      continue;
    }
    std::set<std::string> reported;
    auto require = [&](const auto& names, const std::string& what) {
      if (Satisfied(names, available)) return;
      std::string req = Requirement(names);
      if (!reported.insert(req).second) return;
      out.push_back(Make(Severity::kError, diag::kMissingCapability,
                         what + " requires " + req, i));
    };
    require(def->capabilities, def->name);
    for (const WidthRule& rule : WidthRules()) {
      const std::size_t width_at = 1;
      if (inst.opcode == rule.opcode && inst.operands.size() > width_at &&
          inst.operands[width_at] == rule.width) {
        require(rule.capabilities,
                def->name + " width " + std::to_string(rule.width));
      }
    }
    std::vector<ParsedOperand> parsed;
    try {
      parsed = WalkOperands(inst, grammar, context);
    } catch (const Error&) {
      // Reported by ValidateModule.
    }
    for (const ParsedOperand& p : parsed) {
      const Word w = inst.operands[p.offset];
      if (p.type == OperandType::kValueEnum) {
        if (const EnumerantDef* e = spec.FindEnumerant(p.kind, w)) {
          require(e->capabilities,
                  def->name + " operand " + std::string(p.kind) + " " +
                      e->name);
        }
      } else if (p.type == OperandType::kBitEnum) {
        for (int bit = 0; bit < 32; ++bit) {
          const Word value = Word{1} << bit;
          if (!(w & value)) continue;
          if (const EnumerantDef* e = spec.FindEnumerant(p.kind, value)) {
            require(e->capabilities,
                    def->name + " operand " + std::string(p.kind) + " " +
                        e->name);
          }
        }
      }
    }
    context.Observe(inst, spec);
  }
  return out;
}

std::vector<Diagnostic> ValidateModule(const DecodedModule& module,
                                       const GrammarBundle& grammar) {
  const GrammarSpec& spec = grammar.core();
  const auto& insts = module.instructions;
  std::map<std::uint16_t, std::size_t> counts;
  for (const RawInstruction& inst : insts) ++counts[inst.opcode];

  std::vector<Diagnostic> global;
  if (!counts[op::kFunction]) {
    global.push_back(Make(Severity::kError, diag::kMissingFunction,
                          "module declares no function"));
  }
  if (!counts[op::kCapability]) {
    global.push_back(Make(Severity::kError, diag::kMissingCapability,
                          "module declares no capability"));
  }
  if (!counts[op::kMemoryModel]) {
    global.push_back(Make(Severity::kError, diag::kMissingMemoryModel,
                          "module has no OpMemoryModel"));
  } else if (counts[op::kMemoryModel] > 1) {
    global.push_back(Make(Severity::kError, diag::kDuplicateMemoryModel,
                          "module has " +
                              std::to_string(counts[op::kMemoryModel]) +
                              " OpMemoryModel instructions"));
  }
  if (!counts[op::kEntryPoint]) {
    bool linkage = false;
    const EnumerantDef* cap = spec.FindEnumerant("Capability", "Linkage");
    for (const RawInstruction& inst : insts) {
      if (cap && inst.opcode == op::kCapability && !inst.operands.empty() &&
          inst.operands[0] == cap->value) {
        linkage = true;
      }
    }
    global.push_back(Make(linkage ? Severity::kWarning : Severity::kError,
                          diag::kMissingEntryPoint,
                          linkage ? "library module has no OpEntryPoint"
                                  : "module has no OpEntryPoint"));
  }

  std::vector<Diagnostic> local;
  std::map<Word, std::size_t> defined;
  Word max_id = 0;
  std::size_t max_at = 0;
  OperandContext context;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const RawInstruction& inst = insts[i];
    const std::string name = OpName(spec, inst.opcode);
    std::vector<ParsedOperand> parsed;
    try {
      parsed = WalkOperands(inst, grammar, context);
    } catch (const Error& e) {
      local.push_back(Make(Severity::kError,
                           e.code() == ErrorCode::kUnknownOpcode
                               ? diag::kUnknownOpcode
                               : diag::kOperandMismatch,
                           e.what(), i));
    }
    for (const ParsedOperand& p : parsed) {
      if (p.type != OperandType::kResultId && p.type != OperandType::kId &&
          p.type != OperandType::kTypeId) {
        continue;
      }
      const Word id = inst.operands[p.offset];
      if (id == 0) {
        local.push_back(Make(Severity::kError, diag::kInvalidId,
                             name + " uses id 0", i));
        continue;
      }
      if (id > max_id) {
        max_id = id;
        max_at = i;
      }
      if (p.type == OperandType::kResultId) {
        auto [it, inserted] = defined.emplace(id, i);
        if (!inserted) {
          local.push_back(Make(Severity::kError, diag::kDuplicateResultId,
                               name + " redefines %" + std::to_string(id) +
                                   " first defined by instruction #" +
                                   std::to_string(it->second),
                               i));
        }
      }
    }
    context.Observe(inst, spec);
  }
  if (max_id != 0 && module.header.bound <= max_id) {
    global.push_back(Make(Severity::kError, diag::kBoundTooSmall,
                          "bound " + std::to_string(module.header.bound) +
                              " does not exceed id %" +
                              std::to_string(max_id) + " used by #" +
                              std::to_string(max_at)));
  }

  auto closure = CheckCapabilityClosure(module, grammar);
  local.insert(local.end(), closure.begin(), closure.end());
  std::stable_sort(local.begin(), local.end(),
                   [](const Diagnostic& a, const Diagnostic& b) {
                     return *a.instruction < *b.instruction;
                   });
  global.insert(global.end(), local.begin(), local.end());
  return global;
}

std::vector<Diagnostic> ValidateModule(std::span<const std::uint8_t> bytes,
                                       const GrammarBundle& grammar) {
  DecodedModule module;
  try {
    module = DecodeModule(bytes);
  } catch (const Error& e) {
    return {Make(Severity::kError, ErrorCodeName(e.code()), e.what())};
  }
  return ValidateModule(module, grammar);
}

std::vector<Diagnostic> ValidateModule(const Module& module,
                                       const GrammarBundle& grammar) {
  std::vector<Word> words;
  try {
    words = module.SerializeWords();
  } catch (const Error& e) {
    return {Make(Severity::kError, ErrorCodeName(e.code()), e.what())};
  }
  return ValidateModule(DecodeWords(words), grammar);
}

}  // namespace spvkit
