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

#ifndef SPVKIT_GENERATOR_H_
#define SPVKIT_GENERATOR_H_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "spvkit/grammar.h"

namespace spvkit {

enum class ArtifactCategory { kInstruction, kOperandKind, kMapperTable };

struct GeneratedArtifact {
  std::string logical_name;
  std::string source_text;
  ArtifactCategory category = ArtifactCategory::kInstruction;

  // Path relative to the output root, e.g. "instructions/OpIAdd.h".
  std::string RelativePath() const;
};

struct TemplateSet {
  std::string instruction;
  std::string enum_kind;
  std::string literal_kind;
  std::string composite_kind;
  std::string instruction_mapper;
  std::string operand_mapper;
  std::string extinst_mapper;
  std::string umbrella;
};

// Templates compiled into the library from the templates/ directory.
const TemplateSet& DefaultTemplates();
// Reads <dir>/<name>.tmpl for every member of TemplateSet.
TemplateSet LoadTemplates(const std::filesystem::path& dir);

// prefix + raw with non-identifier characters replaced by '_' and a leading
// '_' added when the result would start with a digit. Throws
// Error(kArgument) for an empty raw name.
std::string SanitizeIdentifier(std::string_view raw, std::string_view prefix);

// Operand kinds implemented by hand in spvkit/operands.h rather than
// generated: the Id kinds and the core literal kinds.
bool IsBaseOperandKind(std::string_view kind);

std::vector<GeneratedArtifact> GenerateInstructionDefinitions(
    const GrammarSpec& spec, const TemplateSet& templates = DefaultTemplates());

std::vector<GeneratedArtifact> GenerateOperandKindDefinitions(
    const GrammarSpec& spec, const TemplateSet& templates = DefaultTemplates());

// The three compiled mapper sources: InstructionMapper, OperandKindMapper,
// OpenCLStdMapper.
std::vector<GeneratedArtifact> GenerateMapperArtifacts(
    const GrammarSpec& spec, const ExtInstGrammar& ext,
    const TemplateSet& templates = DefaultTemplates());

// Text of the umbrella header that includes every instruction and kind
// artifact.
std::string GenerateUmbrellaHeader(
    const GrammarSpec& spec, const TemplateSet& templates = DefaultTemplates());

struct EnumMapper {
  std::map<std::string, std::uint32_t, std::less<>> name_to_value;
  // First enumerant in file order wins for aliased values.
  std::map<std::uint32_t, std::string> value_to_name;
};

// In-memory lookup tables over a loaded grammar. The definitions pointed to
// are owned by the grammars, which must outlive the tables.
struct MapperTables {
  std::map<std::string, std::uint16_t, std::less<>> name_to_opcode;
  std::map<std::uint16_t, const InstructionDef*> opcode_to_def;
  std::map<std::string, EnumMapper, std::less<>> enumerants;
  std::map<std::string, std::uint32_t, std::less<>> ext_name_to_number;
  std::map<std::uint32_t, const ExtInstDef*> ext_number_to_def;
};

// Throws Error(kGeneration) when two instructions share an opcode without
// being aliases (same operand kinds and quantifiers).
MapperTables GenerateMapperTables(const GrammarSpec& spec,
                                  const ExtInstGrammar& ext);

}  // namespace spvkit

#endif  // SPVKIT_GENERATOR_H_
