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

#ifndef SPVKIT_GRAMMAR_H_
#define SPVKIT_GRAMMAR_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace spvkit {

enum class Quantifier { kSingle, kOptional, kVariadic };

struct OperandSlot {
  std::string kind;
  std::string name;
  Quantifier quantifier = Quantifier::kSingle;

  bool operator==(const OperandSlot&) const = default;
};

struct InstructionDef {
  std::string name;
  std::uint16_t opcode = 0;
  std::string class_attr;
  std::vector<OperandSlot> operands;
  std::vector<std::string> capabilities;
  std::vector<std::string> extensions;

  bool HasResult() const;
  bool HasResultType() const;

  bool operator==(const InstructionDef&) const = default;
};

enum class OperandCategory { kId, kBitEnum, kValueEnum, kLiteral, kComposite };

std::string_view OperandCategoryName(OperandCategory category);

struct EnumerantDef {
  std::string name;
  std::uint32_t value = 0;
  std::vector<std::string> capabilities;
  std::vector<OperandSlot> parameters;

  bool operator==(const EnumerantDef&) const = default;
};

struct OperandKindDef {
  OperandCategory category = OperandCategory::kId;
  std::string kind;
  std::vector<EnumerantDef> enumerants;
  std::vector<std::string> bases;

  bool IsEnum() const {
    return category == OperandCategory::kBitEnum ||
           category == OperandCategory::kValueEnum;
  }

  bool operator==(const OperandKindDef&) const = default;
};

// Immutable, indexed model of a core grammar file.
class GrammarSpec {
 public:
  GrammarSpec() = default;
  GrammarSpec(std::string magic_number, std::uint32_t major,
              std::uint32_t minor, std::uint32_t revision,
              std::vector<InstructionDef> instructions,
              std::vector<OperandKindDef> operand_kinds);

  const std::string& magic_number() const { return magic_number_; }
  std::uint32_t magic() const { return magic_; }
  std::uint32_t major_version() const { return major_; }
  std::uint32_t minor_version() const { return minor_; }
  std::uint32_t revision() const { return revision_; }
  const std::vector<InstructionDef>& instructions() const {
    return instructions_;
  }
  const std::vector<OperandKindDef>& operand_kinds() const {
    return operand_kinds_;
  }

  // Lookups throw Error(kNotFound); the Find variants return nullptr.
  const InstructionDef& Lookup(std::string_view name) const;
  const InstructionDef& Lookup(std::uint16_t opcode) const;
  const InstructionDef* Find(std::string_view name) const;
  const InstructionDef* Find(std::uint16_t opcode) const;

  const OperandKindDef* FindKind(std::string_view kind) const;
  const OperandKindDef& LookupKind(std::string_view kind) const;

  // Value lookups prefer the first enumerant in file order.
  const EnumerantDef* FindEnumerant(std::string_view kind,
                                    std::string_view name) const;
  const EnumerantDef* FindEnumerant(std::string_view kind,
                                    std::uint32_t value) const;

  bool operator==(const GrammarSpec& other) const;

 private:
  void BuildIndex();

  std::string magic_number_;
  std::uint32_t magic_ = 0;
  std::uint32_t major_ = 0;
  std::uint32_t minor_ = 0;
  std::uint32_t revision_ = 0;
  std::vector<InstructionDef> instructions_;
  std::vector<OperandKindDef> operand_kinds_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::unordered_map<std::uint16_t, std::size_t> by_opcode_;
  std::map<std::string, std::size_t, std::less<>> kind_by_name_;
};

struct ExtInstDef {
  std::string name;
  std::uint32_t number = 0;
  std::vector<OperandSlot> operands;
  std::vector<std::string> capabilities;

  bool operator==(const ExtInstDef&) const = default;
};

class ExtInstGrammar {
 public:
  ExtInstGrammar() = default;
  ExtInstGrammar(std::uint32_t version, std::uint32_t revision,
                 std::vector<ExtInstDef> instructions);

  std::uint32_t version() const { return version_; }
  std::uint32_t revision() const { return revision_; }
  const std::vector<ExtInstDef>& instructions() const { return instructions_; }

  const ExtInstDef& Lookup(std::string_view name) const;
  const ExtInstDef& Lookup(std::uint32_t number) const;
  const ExtInstDef* Find(std::string_view name) const;
  const ExtInstDef* Find(std::uint32_t number) const;

 private:
  std::uint32_t version_ = 0;
  std::uint32_t revision_ = 0;
  std::vector<ExtInstDef> instructions_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
  std::map<std::uint32_t, std::size_t> by_number_;
};

GrammarSpec LoadCoreGrammar(std::string_view json_text);
ExtInstGrammar LoadExtendedGrammar(std::string_view json_text);

// Capability implication graph. Nodes are capability names in file order.
struct DependencyReport {
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  // Strongly connected components with more than one member. Members keep
  // node order; components are ordered by their first member.
  std::vector<std::vector<std::string>> cycles;

  // Declared capabilities plus everything they transitively imply.
  std::set<std::string> Closure(const std::set<std::string>& declared) const;
};

DependencyReport CapabilityDependencyGraph(const GrammarSpec& spec);

// Strongly connected components of a graph given as adjacency lists over
// node indices. Components come out in ascending order of smallest member,
// each sorted ascending.
std::vector<std::vector<std::size_t>> StronglyConnectedComponents(
    const std::vector<std::vector<std::size_t>>& adjacency);

}  // namespace spvkit

#endif  // SPVKIT_GRAMMAR_H_
