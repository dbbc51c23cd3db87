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

#ifndef SPVKIT_GENERATED_TABLES_H_
#define SPVKIT_GENERATED_TABLES_H_

#include <cstdint>
#include <span>
#include <string_view>

// Tables emitted by spvkit-gen from the pinned grammar and compiled into the
// library.
namespace spvkit::generated {

struct InstructionRecord {
  std::uint16_t opcode;
  std::string_view name;
  std::string_view class_attr;
};

struct EnumerantRecord {
  std::string_view kind;
  std::string_view name;
  std::uint32_t value;
};

struct ExtInstRecord {
  std::uint32_t number;
  std::string_view name;
};

// Sorted by opcode; aliases keep grammar order.
std::span<const InstructionRecord> InstructionTable();
std::span<const EnumerantRecord> EnumerantTable();
std::span<const ExtInstRecord> OpenCLStdTable();

// First record with the opcode, or nullptr.
const InstructionRecord* FindInstruction(std::uint16_t opcode);

// Grammar JSON the library was generated from.
std::string_view EmbeddedCoreGrammar();
std::string_view EmbeddedOpenCLGrammar();

}  // namespace spvkit::generated

#endif  // SPVKIT_GENERATED_TABLES_H_
