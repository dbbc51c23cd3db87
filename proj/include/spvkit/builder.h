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

#ifndef SPVKIT_BUILDER_H_
#define SPVKIT_BUILDER_H_

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <string_view>
#include <vector>

#include "spvkit/binary.h"
#include "spvkit/operands.h"

namespace spvkit {

// Logical layout sections, in serialization order.
enum class Section {
  kCapability,
  kExtension,
  kExtInstImport,
  kMemoryModel,
  kEntryPoint,
  kExecutionMode,
  kDebugSource,
  kDebugName,
  kDebugModuleProcessed,
  kAnnotation,
  kGlobal,
  kFunctionDeclaration,
  kFunctionDefinition,
};

inline constexpr std::size_t kModuleBucketCount =
    static_cast<std::size_t>(Section::kGlobal) + 1;

std::string_view SectionName(Section section);

// Where an instruction may be inserted.
struct Routing {
  std::optional<Section> module_section;
  bool in_function = false;
  bool in_block = false;
};

// Routing from the opname override table, then the grammar class (or the
// compiled-in class when class_attr is empty).
Routing RouteInstruction(std::uint16_t opcode, std::string_view class_attr);

inline constexpr Word kStorageClassFunction = 7;

bool IsBlockTerminator(std::uint16_t opcode);

template <class T>
concept TypedInstruction = requires(const T& t) {
  { t.Encode() } -> std::same_as<Instruction>;
};

class Module;
struct ModuleState;

class Block {
 public:
  Id label() const { return label_; }
  const std::vector<Instruction>& instructions() const { return insts_; }
  bool terminated() const;

  // Throws Error(kScope) for instructions that do not belong in a block
  // and Error(kSsaViolation) for a result id that is already defined.
  Block& Add(Instruction inst);
  template <TypedInstruction Op>
  Block& Add(const Op& op) {
    return Add(op.Encode());
  }

 private:
  friend class Function;
  friend class Module;
  Block(ModuleState* state, Id label) : state_(state), label_(label) {}

  ModuleState* state_;
  Id label_;
  std::vector<Instruction> insts_;
};

class Function {
 public:
  Id result_id() const { return definition_.result_id; }
  const Instruction& definition() const { return definition_; }
  const std::vector<Instruction>& parameters() const { return params_; }
  std::size_t block_count() const { return blocks_.size(); }
  Block& block(std::size_t i) { return *blocks_.at(i); }
  const Block& block(std::size_t i) const { return *blocks_.at(i); }

  // Accepts OpFunctionParameter (before any block) and OpFunctionEnd.
  // OpFunctionEnd is always emitted at serialization; adding it only
  // closes the function.
  Function& Add(Instruction inst);
  template <TypedInstruction Op>
  Function& Add(const Op& op) {
    return Add(op.Encode());
  }

  // Throws Error(kSsaViolation) when label is already defined.
  Block& BeginBlock(Id label);

 private:
  friend class Module;
  Function(ModuleState* state, Instruction definition)
      : state_(state), definition_(std::move(definition)) {}

  ModuleState* state_;
  Instruction definition_;
  std::vector<Instruction> params_;
  std::vector<std::unique_ptr<Block>> blocks_;
  bool ended_ = false;
};

class Module {
 public:
  // Throws Error(kArgument) unless 1.0 <= version <= 1.6.
  static Module Create(unsigned major, unsigned minor,
                       std::uint16_t generator_tool = kDefaultGeneratorTool,
                       Word schema = 0);
  // The header's bound is ignored; it is recomputed at serialization.
  explicit Module(const ModuleHeader& header);
  ~Module();
  Module(Module&&) noexcept;
  Module& operator=(Module&&) noexcept;

  const ModuleHeader& header() const;

  // Next free id, counting up from 1 and skipping reserved ids. Throws
  // Error(kResource) when the id space is exhausted.
  Id NextId();
  // Keeps NextId from ever returning id.
  void ReserveId(Id id);

  Module& Add(Instruction inst);
  template <TypedInstruction Op>
  Module& Add(const Op& op) {
    return Add(op.Encode());
  }

  Function& BeginFunction(Instruction op_function);
  template <TypedInstruction Op>
  Function& BeginFunction(const Op& op) {
    return BeginFunction(op.Encode());
  }

  const std::vector<Instruction>& section(Section s) const;
  std::size_t function_count() const;
  Function& function(std::size_t i);
  const Function& function(std::size_t i) const;
  bool IsDefined(Id id) const;

  // Bound the header will carry: one more than the largest id allocated,
  // reserved, defined or referenced.
  Word ComputeBound() const;

  // Throws Error(kSerialization) for references to undefined ids and
  // Error(kStructural) for unterminated blocks.
  std::vector<Word> SerializeWords() const;
  std::vector<std::uint8_t> Serialize() const;
  std::size_t Serialize(std::ostream& sink) const;

 private:
  std::unique_ptr<ModuleState> state_;
};

}  // namespace spvkit

#endif  // SPVKIT_BUILDER_H_
