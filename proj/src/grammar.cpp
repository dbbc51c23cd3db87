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

#include "spvkit/grammar.h"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "json.hpp"
#include "spvkit/error.h"

namespace spvkit {
namespace {

using nlohmann::json;

Error SchemaError(const std::string& message) {
  return Error(ErrorCode::kSchema, message);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // e.byte is 1-based and points just past the offending character.
    std::size_t offset = e.byte == 0 ? 0 : e.byte - 1;
    offset = std::min(offset, text.size());
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw Error(ErrorCode::kParse,
                "malformed grammar JSON at line " + std::to_string(line) +
                    ", column " + std::to_string(column) + ": " + e.what(),
                line, column);
  }
}

const json& Require(const json& object, const char* key, const char* where) {
  auto it = object.find(key);
  if (it == object.end()) {
    throw SchemaError(std::string(where) + ": missing field '" + key + "'");
  }
  return *it;
}

std::string RequireString(const json& object, const char* key,
                          const char* where) {
  const json& v = Require(object, key, where);
  if (!v.is_string()) {
    throw SchemaError(std::string(where) + ": field '" + key +
                      "' must be a string");
  }
  return v.get<std::string>();
}

std::uint32_t ParseNumber(const json& v, const char* where) {
  if (v.is_number_unsigned() || v.is_number_integer()) {
    auto n = v.get<std::int64_t>();
    if (n < 0 || n > 0xFFFFFFFFll) {
      throw SchemaError(std::string(where) + ": value out of range");
    }
    return static_cast<std::uint32_t>(n);
  }
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    char* end = nullptr;
    unsigned long long n = std::strtoull(s.c_str(), &end, 0);
    if (s.empty() || *end != '\0' || n > 0xFFFFFFFFull) {
      throw SchemaError(std::string(where) + ": bad numeric value '" + s +
                        "'");
    }
    return static_cast<std::uint32_t>(n);
  }
  throw SchemaError(std::string(where) + ": expected a number");
}

std::uint32_t OptionalNumber(const json& object, const char* key) {
  auto it = object.find(key);
  if (it == object.end()) return 0;
  return ParseNumber(*it, key);
}

std::vector<std::string> StringList(const json& object, const char* key) {
  std::vector<std::string> out;
  auto it = object.find(key);
  if (it == object.end()) return out;
  if (!it->is_array()) {
    throw SchemaError(std::string("field '") + key + "' must be an array");
  }
  for (const json& v : *it) {
    if (!v.is_string()) {
      throw SchemaError(std::string("field '") + key +
                        "' must hold strings");
    }
    out.push_back(v.get<std::string>());
  }
  return out;
}

std::vector<OperandSlot> ParseOperands(const json& object, const char* key) {
  std::vector<OperandSlot> out;
  auto it = object.find(key);
  if (it == object.end()) return out;
  if (!it->is_array()) {
    throw SchemaError(std::string("field '") + key + "' must be an array");
  }
  for (const json& o : *it) {
    OperandSlot slot;
    slot.kind = RequireString(o, "kind", "operand");
    if (auto n = o.find("name"); n != o.end() && n->is_string()) {
      slot.name = n->get<std::string>();
    }
    if (auto q = o.find("quantifier"); q != o.end()) {
      const std::string quantifier = q->get<std::string>();
      if (quantifier == "?") {
        slot.quantifier = Quantifier::kOptional;
      } else if (quantifier == "*") {
        slot.quantifier = Quantifier::kVariadic;
      } else if (!quantifier.empty()) {
        throw SchemaError("unknown operand quantifier '" + quantifier + "'");
      }
    }
    out.push_back(std::move(slot));
  }
  return out;
}

const json& RequireArray(const json& object, const char* key,
                         const char* where) {
  const json& v = Require(object, key, where);
  if (!v.is_array()) {
    throw SchemaError(std::string(where) + ": field '" + key +
                      "' must be an array");
  }
  return v;
}

OperandCategory ParseCategory(const std::string& s) {
  if (s == "Id") return OperandCategory::kId;
  if (s == "BitEnum") return OperandCategory::kBitEnum;
  if (s == "ValueEnum") return OperandCategory::kValueEnum;
  if (s == "Literal") return OperandCategory::kLiteral;
  if (s == "Composite") return OperandCategory::kComposite;
  throw SchemaError("unknown operand kind category '" + s + "'");
}

}  // namespace

std::string_view OperandCategoryName(OperandCategory category) {
  switch (category) {
    case OperandCategory::kId: return "Id";
    case OperandCategory::kBitEnum: return "BitEnum";
    case OperandCategory::kValueEnum: return "ValueEnum";
    case OperandCategory::kLiteral: return "Literal";
    case OperandCategory::kComposite: return "Composite";
  }
  return "";
}

bool InstructionDef::HasResult() const {
  return std::any_of(operands.begin(), operands.end(),
                     [](const OperandSlot& s) { return s.kind == "IdResult"; });
}

bool InstructionDef::HasResultType() const {
  return std::any_of(
      operands.begin(), operands.end(),
      [](const OperandSlot& s) { return s.kind == "IdResultType"; });
}

GrammarSpec::GrammarSpec(std::string magic_number, std::uint32_t major,
                         std::uint32_t minor, std::uint32_t revision,
                         std::vector<InstructionDef> instructions,
                         std::vector<OperandKindDef> operand_kinds)
    : magic_number_(std::move(magic_number)),
      major_(major),
      minor_(minor),
      revision_(revision),
      instructions_(std::move(instructions)),
      operand_kinds_(std::move(operand_kinds)) {
  if (!magic_number_.empty()) {
    magic_ = static_cast<std::uint32_t>(
        std::strtoull(magic_number_.c_str(), nullptr, 0));
  }
  BuildIndex();
}

void GrammarSpec::BuildIndex() {
  for (std::size_t i = 0; i < operand_kinds_.size(); ++i) {
    const OperandKindDef& k = operand_kinds_[i];
    if (!kind_by_name_.emplace(k.kind, i).second) {
      throw SchemaError("duplicate operand kind '" + k.kind + "'");
    }
  }
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    const InstructionDef& inst = instructions_[i];
    if (!by_name_.emplace(inst.name, i).second) {
      throw SchemaError("duplicate instruction name '" + inst.name + "'");
    }
    // Aliases share an opcode; the first definition wins.
    by_opcode_.emplace(inst.opcode, i);
  }
  auto check_slots = [this](const std::vector<OperandSlot>& slots,
                            const std::string& owner) {
    for (const OperandSlot& s : slots) {
      if (!kind_by_name_.count(s.kind)) {
        throw SchemaError(owner + " refers to unknown operand kind '" +
                          s.kind + "'");
      }
    }
  };
  for (const InstructionDef& inst : instructions_) {
    check_slots(inst.operands, inst.name);
  }
  for (const OperandKindDef& k : operand_kinds_) {
    for (const EnumerantDef& e : k.enumerants) {
      check_slots(e.parameters, k.kind + "." + e.name);
    }
    for (const std::string& base : k.bases) {
      if (!kind_by_name_.count(base)) {
        throw SchemaError(k.kind + " refers to unknown base kind '" + base +
                          "'");
      }
    }
  }
}

const InstructionDef* GrammarSpec::Find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &instructions_[it->second];
}

const InstructionDef* GrammarSpec::Find(std::uint16_t opcode) const {
  auto it = by_opcode_.find(opcode);
  return it == by_opcode_.end() ? nullptr : &instructions_[it->second];
}

const InstructionDef& GrammarSpec::Lookup(std::string_view name) const {
  if (const InstructionDef* def = Find(name)) return *def;
  throw Error(ErrorCode::kNotFound,
              "no instruction named '" + std::string(name) + "'");
}

const InstructionDef& GrammarSpec::Lookup(std::uint16_t opcode) const {
  if (const InstructionDef* def = Find(opcode)) return *def;
  throw Error(ErrorCode::kNotFound,
              "no instruction with opcode " + std::to_string(opcode));
}

const OperandKindDef* GrammarSpec::FindKind(std::string_view kind) const {
  auto it = kind_by_name_.find(kind);
  return it == kind_by_name_.end() ? nullptr : &operand_kinds_[it->second];
}

const OperandKindDef& GrammarSpec::LookupKind(std::string_view kind) const {
  if (const OperandKindDef* def = FindKind(kind)) return *def;
  throw Error(ErrorCode::kNotFound,
              "no operand kind named '" + std::string(kind) + "'");
}

const EnumerantDef* GrammarSpec::FindEnumerant(std::string_view kind,
                                               std::string_view name) const {
  const OperandKindDef* k = FindKind(kind);
  if (!k) return nullptr;
  for (const EnumerantDef& e : k->enumerants) {
    if (e.name == name) return &e;
  }
  return nullptr;
}

const EnumerantDef* GrammarSpec::FindEnumerant(std::string_view kind,
                                               std::uint32_t value) const {
  const OperandKindDef* k = FindKind(kind);
  if (!k) return nullptr;
  for (const EnumerantDef& e : k->enumerants) {
    if (e.value == value) return &e;
  }
  return nullptr;
}

bool GrammarSpec::operator==(const GrammarSpec& other) const {
  return magic_number_ == other.magic_number_ && major_ == other.major_ &&
         minor_ == other.minor_ && revision_ == other.revision_ &&
         instructions_ == other.instructions_ &&
         operand_kinds_ == other.operand_kinds_;
}

ExtInstGrammar::ExtInstGrammar(std::uint32_t version, std::uint32_t revision,
                               std::vector<ExtInstDef> instructions)
    : version_(version),
      revision_(revision),
      instructions_(std::move(instructions)) {
  for (std::size_t i = 0; i < instructions_.size(); ++i) {
    if (!by_name_.emplace(instructions_[i].name, i).second) {
      throw SchemaError("duplicate extended instruction '" +
                        instructions_[i].name + "'");
    }
    by_number_.emplace(instructions_[i].number, i);
  }
}

const ExtInstDef* ExtInstGrammar::Find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &instructions_[it->second];
}

const ExtInstDef* ExtInstGrammar::Find(std::uint32_t number) const {
  auto it = by_number_.find(number);
  return it == by_number_.end() ? nullptr : &instructions_[it->second];
}

const ExtInstDef& ExtInstGrammar::Lookup(std::string_view name) const {
  if (const ExtInstDef* def = Find(name)) return *def;
  throw Error(ErrorCode::kNotFound,
              "no extended instruction named '" + std::string(name) + "'");
}

const ExtInstDef& ExtInstGrammar::Lookup(std::uint32_t number) const {
  if (const ExtInstDef* def = Find(number)) return *def;
  throw Error(ErrorCode::kNotFound,
              "no extended instruction numbered " + std::to_string(number));
}

GrammarSpec LoadCoreGrammar(std::string_view json_text) {
  const json root = ParseJson(json_text);
  if (!root.is_object()) throw SchemaError("grammar root must be an object");

  std::vector<InstructionDef> instructions;
  for (const json& i : RequireArray(root, "instructions", "grammar")) {
    InstructionDef def;
    def.name = RequireString(i, "opname", "instruction");
    std::uint32_t opcode = ParseNumber(Require(i, "opcode", "instruction"),
                                       "opcode");
    if (opcode > 0xFFFF) {
      throw SchemaError(def.name + ": opcode does not fit in 16 bits");
    }
    def.opcode = static_cast<std::uint16_t>(opcode);
    if (auto c = i.find("class"); c != i.end() && c->is_string()) {
      def.class_attr = c->get<std::string>();
    }
    def.operands = ParseOperands(i, "operands");
    def.capabilities = StringList(i, "capabilities");
    def.extensions = StringList(i, "extensions");
    instructions.push_back(std::move(def));
  }

  std::vector<OperandKindDef> kinds;
  for (const json& k : RequireArray(root, "operand_kinds", "grammar")) {
    OperandKindDef def;
    def.kind = RequireString(k, "kind", "operand kind");
    def.category = ParseCategory(RequireString(k, "category", "operand kind"));
    if (def.IsEnum()) {
      for (const json& e : RequireArray(k, "enumerants", "enum kind")) {
        EnumerantDef en;
        en.name = RequireString(e, "enumerant", "enumerant");
        en.value = ParseNumber(Require(e, "value", "enumerant"), "value");
        en.capabilities = StringList(e, "capabilities");
        en.parameters = ParseOperands(e, "parameters");
        def.enumerants.push_back(std::move(en));
      }
    } else if (def.category == OperandCategory::kComposite) {
      def.bases = StringList(k, "bases");
      if (def.bases.empty()) {
        throw SchemaError(def.kind + ": composite kind without bases");
      }
    }
    kinds.push_back(std::move(def));
  }

  std::string magic;
  if (auto m = root.find("magic_number"); m != root.end() && m->is_string()) {
    magic = m->get<std::string>();
  }
  return GrammarSpec(std::move(magic), OptionalNumber(root, "major_version"),
                     OptionalNumber(root, "minor_version"),
                     OptionalNumber(root, "revision"), std::move(instructions),
                     std::move(kinds));
}

ExtInstGrammar LoadExtendedGrammar(std::string_view json_text) {
  const json root = ParseJson(json_text);
  if (!root.is_object()) throw SchemaError("grammar root must be an object");
  std::vector<ExtInstDef> instructions;
  for (const json& i : RequireArray(root, "instructions", "grammar")) {
    ExtInstDef def;
    def.name = RequireString(i, "opname", "extended instruction");
    def.number = ParseNumber(Require(i, "opcode", "extended instruction"),
                             "opcode");
    def.operands = ParseOperands(i, "operands");
    def.capabilities = StringList(i, "capabilities");
    instructions.push_back(std::move(def));
  }
  return ExtInstGrammar(OptionalNumber(root, "version"),
                        OptionalNumber(root, "revision"),
                        std::move(instructions));
}

std::vector<std::vector<std::size_t>> StronglyConnectedComponents(
    const std::vector<std::vector<std::size_t>>& adjacency) {
  // Iterative Tarjan.
  const std::size_t n = adjacency.size();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited), low(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> components;
  std::size_t next_index = 0;

  struct Frame {
    std::size_t node;
    std::size_t edge;
  };
  for (std::size_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    std::vector<Frame> frames{{root, 0}};
    index[root] = low[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!frames.empty()) {
      Frame& f = frames.back();
      if (f.edge < adjacency[f.node].size()) {
        std::size_t next = adjacency[f.node][f.edge++];
        if (index[next] == kUnvisited) {
          index[next] = low[next] = next_index++;
          stack.push_back(next);
          on_stack[next] = true;
          frames.push_back({next, 0});
        } else if (on_stack[next]) {
          low[f.node] = std::min(low[f.node], index[next]);
        }
        continue;
      }
      std::size_t node = f.node;
      frames.pop_back();
      if (!frames.empty()) {
        low[frames.back().node] = std::min(low[frames.back().node], low[node]);
      }
      if (low[node] == index[node]) {
        std::vector<std::size_t> component;
        std::size_t member;
        do {
          member = stack.back();
          stack.pop_back();
          on_stack[member] = false;
          component.push_back(member);
        } while (member != node);
        std::sort(component.begin(), component.end());
        components.push_back(std::move(component));
      }
    }
  }
  std::sort(components.begin(), components.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return components;
}

DependencyReport CapabilityDependencyGraph(const GrammarSpec& spec) {
  const OperandKindDef* capability = spec.FindKind("Capability");
  if (!capability) {
    throw SchemaError("grammar has no Capability operand kind");
  }
  DependencyReport report;
  std::map<std::string, std::size_t, std::less<>> node_index;
  auto node = [&](const std::string& name) {
    auto [it, inserted] = node_index.emplace(name, report.nodes.size());
    if (inserted) report.nodes.push_back(name);
    return it->second;
  };
  for (const EnumerantDef& e : capability->enumerants) node(e.name);

  std::vector<std::vector<std::size_t>> adjacency;
  for (const EnumerantDef& e : capability->enumerants) {
    for (const std::string& implied : e.capabilities) {
      std::size_t from = node(e.name);
      std::size_t to = node(implied);
      adjacency.resize(report.nodes.size());
      if (std::find(adjacency[from].begin(), adjacency[from].end(), to) !=
          adjacency[from].end()) {
        continue;
      }
      adjacency[from].push_back(to);
      report.edges.emplace_back(e.name, implied);
    }
  }
  adjacency.resize(report.nodes.size());
  for (const auto& component : StronglyConnectedComponents(adjacency)) {
    if (component.size() < 2) continue;
    std::vector<std::string> names;
    for (std::size_t i : component) names.push_back(report.nodes[i]);
    report.cycles.push_back(std::move(names));
  }
  return report;
}

std::set<std::string> DependencyReport::Closure(
    const std::set<std::string>& declared) const {
  std::multimap<std::string, std::string> out_edges(edges.begin(),
                                                    edges.end());
  std::set<std::string> result(declared);
  std::deque<std::string> work(declared.begin(), declared.end());
  while (!work.empty()) {
    std::string current = std::move(work.front());
    work.pop_front();
    auto [lo, hi] = out_edges.equal_range(current);
    for (auto it = lo; it != hi; ++it) {
      if (result.insert(it->second).second) work.push_back(it->second);
    }
  }
  return result;
}

}  // namespace spvkit
