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

#include "spvkit/builder.h"

#include <algorithm>
#include <array>
#include <string>

#include "spvkit/error.h"
#include "spvkit/generated_tables.h"

namespace spvkit {
namespace {

constexpr std::uint16_t kOpVariable = 59;
constexpr std::uint16_t kOpFunction = 54;
constexpr std::uint16_t kOpFunctionParameter = 55;
constexpr std::uint16_t kOpFunctionEnd = 56;
constexpr std::uint16_t kOpLabel = 248;
constexpr std::uint16_t kOpMemoryModel = 14;
constexpr Word kMaxId = 0xFFFFFFFEu;

std::string OpName(std::uint16_t opcode) {
  if (const auto* r = generated::FindInstruction(opcode)) {
    return std::string(r->name);
  }
  return "opcode " + std::to_string(opcode);
}

std::string IdText(Id id) { return "%" + std::to_string(id.value); }

bool FunctionStorage(const Instruction& inst) {
  return inst.operands.size() > 2 &&
         inst.operands[2] == kStorageClassFunction;
}

}  // namespace

struct ModuleState {
  ModuleHeader header;
  Word counter = 0;
  Word max_id = 0;
  std::set<Word> reserved;
  std::map<Word, std::uint16_t> registry;  // id -> defining opcode
  std::array<std::vector<Instruction>, kModuleBucketCount> buckets;
  std::vector<std::unique_ptr<Function>> functions;

  void Track(Id id) { max_id = std::max(max_id, id.value); }

  void Register(const Instruction& inst) {
    if (!inst.result_id) return;
    Define(inst.result_id, inst.opcode);
  }

  void Define(Id id, std::uint16_t opcode) {
    auto [it, inserted] = registry.emplace(id.value, opcode);
    if (!inserted) {
      throw Error(ErrorCode::kSsaViolation,
                  IdText(id) + " defined by " + OpName(opcode) +
                      " is already defined by " + OpName(it->second));
    }
    Track(id);
  }
};

bool Block::terminated() const {
  return !insts_.empty() && IsBlockTerminator(insts_.back().opcode);
}

Block& Block::Add(Instruction inst) {
  Routing r = RouteInstruction(inst.opcode, inst.class_attr);
  if (!r.in_block) {
    throw Error(ErrorCode::kScope,
                OpName(inst.opcode) + " cannot be added to a block");
  }
  if (inst.opcode == kOpVariable && !FunctionStorage(inst)) {
    throw Error(ErrorCode::kScope,
                "OpVariable outside the Function storage class belongs at "
                "module scope");
  }
  if (terminated()) {
    throw Error(ErrorCode::kScope,
                "block " + IdText(label_) + " is already terminated by " +
                    OpName(insts_.back().opcode));
  }
  state_->Register(inst);
  insts_.push_back(std::move(inst));
  return *this;
}

Function& Function::Add(Instruction inst) {
  if (ended_) {
    throw Error(ErrorCode::kScope,
                "function " + IdText(result_id()) + " is already ended");
  }
  if (inst.opcode == kOpFunctionEnd) {
    ended_ = true;
    return *this;
  }
  if (inst.opcode != kOpFunctionParameter) {
    throw Error(ErrorCode::kScope,
                OpName(inst.opcode) +
                    " cannot be added to a function scope; open a block");
  }
  if (!blocks_.empty()) {
    throw Error(ErrorCode::kScope,
                "OpFunctionParameter must precede the first block");
  }
  state_->Register(inst);
  params_.push_back(std::move(inst));
  return *this;
}

Block& Function::BeginBlock(Id label) {
  if (ended_) {
    throw Error(ErrorCode::kScope,
                "function " + IdText(result_id()) + " is already ended");
  }
  if (!label) throw Error(ErrorCode::kArgument, "label id must be nonzero");
  state_->Define(label, kOpLabel);
  blocks_.push_back(std::unique_ptr<Block>(new Block(state_, label)));
  return *blocks_.back();
}

Module Module::Create(unsigned major, unsigned minor,
                      std::uint16_t generator_tool, Word schema) {
  ModuleHeader h;
  if (major > 0xFF || minor > 0xFF) {
    throw Error(ErrorCode::kArgument,
                "unsupported SPIR-V version " + std::to_string(major) + "." +
                    std::to_string(minor));
  }
  h.major_version = static_cast<std::uint8_t>(major);
  h.minor_version = static_cast<std::uint8_t>(minor);
  h.generator = MakeGeneratorWord(generator_tool);
  h.schema = schema;
  return Module(h);
}

Module::Module(const ModuleHeader& header)
    : state_(std::make_unique<ModuleState>()) {
  if (header.major_version != 1 || header.minor_version > 6) {
    throw Error(ErrorCode::kArgument,
                "unsupported SPIR-V version " +
                    std::to_string(header.major_version) + "." +
                    std::to_string(header.minor_version) +
                    "; supported versions are 1.0 to 1.6");
  }
  state_->header = header;
  state_->header.bound = 0;
}

Module::~Module() = default;
Module::Module(Module&&) noexcept = default;
Module& Module::operator=(Module&&) noexcept = default;

const ModuleHeader& Module::header() const { return state_->header; }

Id Module::NextId() {
  Word next = state_->counter;
  do {
    if (next >= kMaxId) {
      throw Error(ErrorCode::kResource, "id space exhausted");
    }
    ++next;
  } while (state_->reserved.count(next));
  state_->counter = next;
  state_->Track(Id(next));
  return Id(next);
}

void Module::ReserveId(Id id) {
  if (!id || id.value > kMaxId) {
    throw Error(ErrorCode::kArgument,
                "cannot reserve id " + std::to_string(id.value));
  }
  state_->reserved.insert(id.value);
  state_->Track(id);
}

Module& Module::Add(Instruction inst) {
  Routing r = RouteInstruction(inst.opcode, inst.class_attr);
  if (!r.module_section) {
    throw Error(ErrorCode::kScope,
                OpName(inst.opcode) + " cannot be added at module scope");
  }
  if (inst.opcode == kOpVariable && FunctionStorage(inst)) {
    throw Error(ErrorCode::kScope,
                "OpVariable in the Function storage class belongs in a block");
  }
  if (inst.opcode == kOpMemoryModel &&
      !state_->buckets[static_cast<std::size_t>(Section::kMemoryModel)]
           .empty()) {
    throw Error(ErrorCode::kScope, "module already has a memory model");
  }
  state_->Register(inst);
  state_->buckets[static_cast<std::size_t>(*r.module_section)].push_back(
      std::move(inst));
  return *this;
}

Function& Module::BeginFunction(Instruction op_function) {
  if (op_function.opcode != kOpFunction) {
    throw Error(ErrorCode::kScope, OpName(op_function.opcode) +
                                       " does not open a function scope");
  }
  state_->Register(op_function);
  state_->functions.push_back(std::unique_ptr<Function>(
      new Function(state_.get(), std::move(op_function))));
  return *state_->functions.back();
}

const std::vector<Instruction>& Module::section(Section s) const {
  return state_->buckets.at(static_cast<std::size_t>(s));
}

std::size_t Module::function_count() const { return state_->functions.size(); }

Function& Module::function(std::size_t i) { return *state_->functions.at(i); }

const Function& Module::function(std::size_t i) const {
  return *state_->functions.at(i);
}

bool Module::IsDefined(Id id) const {
  return state_->registry.count(id.value) != 0;
}

Word Module::ComputeBound() const {
  Word max_id = state_->max_id;
  auto scan = [&max_id](const Instruction& inst) {
    for (Id id : inst.referenced_ids) max_id = std::max(max_id, id.value);
  };
  for (const auto& bucket : state_->buckets) {
    for (const Instruction& inst : bucket) scan(inst);
  }
  for (const auto& f : state_->functions) {
    scan(f->definition_);
    for (const Instruction& p : f->params_) scan(p);
    for (const auto& b : f->blocks_) {
      for (const Instruction& inst : b->insts_) scan(inst);
    }
  }
  return max_id + 1;
}

std::vector<Word> Module::SerializeWords() const {
  const ModuleState& s = *state_;
  auto check = [&s](const Instruction& inst) {
    for (Id id : inst.referenced_ids) {
      if (!s.registry.count(id.value)) {
        throw Error(ErrorCode::kSerialization,
                    "undefined id " + IdText(id) + " referenced by " +
                        OpName(inst.opcode));
      }
    }
  };

  ModuleHeader header = s.header;
  header.bound = ComputeBound();
  auto head = EncodeHeader(header);
  std::vector<Word> out(head.begin(), head.end());
  auto emit = [&](const Instruction& inst) {
    check(inst);
    AppendInstruction(inst.ToRaw(), out);
  };

  for (const auto& bucket : s.buckets) {
    for (const Instruction& inst : bucket) emit(inst);
  }
  // Declarations (functions without blocks) precede definitions.
  for (bool declarations : {true, false}) {
    for (const auto& f : s.functions) {
      if (f->blocks_.empty() != declarations) continue;
      emit(f->definition_);
      for (const Instruction& p : f->params_) emit(p);
      for (const auto& b : f->blocks_) {
        if (!b->terminated()) {
          throw Error(ErrorCode::kStructural,
                      "block " + IdText(b->label_) + " in function " +
                          IdText(f->result_id()) + " has no terminator");
        }
        AppendInstruction(RawInstruction{kOpLabel, {b->label_.value}}, out);
        for (const Instruction& inst : b->insts_) emit(inst);
      }
      AppendInstruction(RawInstruction{kOpFunctionEnd, {}}, out);
    }
  }
  return out;
}

std::vector<std::uint8_t> Module::Serialize() const {
  return WordsToBytes(SerializeWords());
}

std::size_t Module::Serialize(std::ostream& sink) const {
  std::vector<std::uint8_t> bytes = Serialize();
  sink.write(reinterpret_cast<const char*>(bytes.data()),
             static_cast<std::streamsize>(bytes.size()));
  return bytes.size();
}

}  // namespace spvkit
