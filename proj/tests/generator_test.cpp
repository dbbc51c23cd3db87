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

#include "spvkit/generator.h"

#include <set>
#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "json.hpp"
#include "spvkit/generated_tables.h"
#include "spvkit/grammar.h"
#include "test_util.h"

namespace spvkit {
namespace {

using ::testing::HasSubstr;
using ::testing::Not;
using testing::CoreGrammarText;
using testing::OpenCLGrammarText;
using testing::ThrownCode;

// Kinds that map to hand-written base types and get no artifact.
const std::set<std::string> kBaseKindNames = {
    "IdResultType",   "IdResult",      "IdMemorySemantics",
    "IdScope",        "IdRef",         "LiteralInteger",
    "LiteralString",  "LiteralContextDependentNumber",
    "LiteralSpecConstantOpInteger"};

TEST(SanitizeIdentifierTest, Examples) {
  EXPECT_EQ(SanitizeIdentifier("1D", ""), "_1D");
  EXPECT_EQ(SanitizeIdentifier("OpIAdd", ""), "OpIAdd");
  EXPECT_EQ(SanitizeIdentifier("4x8Bit", "Fmt"), "Fmt4x8Bit");
  EXPECT_EQ(SanitizeIdentifier("4x8Bit", ""), "_4x8Bit");
  EXPECT_EQ(SanitizeIdentifier("a-b.c", ""), "a_b_c");
  EXPECT_EQ(ThrownCode([] { SanitizeIdentifier("", "x"); }),
            ErrorCode::kArgument);
}

TEST(SanitizeIdentifierTest, OutputIsAlwaysAnIdentifier) {
  for (std::string raw : {"1D", "2D", "3D", "Rect", "x y", "9", "__", "é"}) {
    std::string id = SanitizeIdentifier(raw, "");
    ASSERT_FALSE(id.empty());
    EXPECT_FALSE(std::isdigit(static_cast<unsigned char>(id[0]))) << raw;
    for (char c : id) {
      EXPECT_TRUE(std::isalnum(static_cast<unsigned char>(c)) || c == '_')
          << raw;
    }
  }
}

TEST(GeneratorTest, BaseKinds) {
  for (const auto& k : kBaseKindNames) EXPECT_TRUE(IsBaseOperandKind(k)) << k;
  EXPECT_FALSE(IsBaseOperandKind("Capability"));
  EXPECT_FALSE(IsBaseOperandKind("LiteralExtInstInteger"));
}

TEST(GeneratorTest, EmptyGrammarProducesNoArtifacts) {
  GrammarSpec spec = LoadCoreGrammar(
      R"({"magic_number":"0x07230203","instructions":[],"operand_kinds":[]})");
  EXPECT_TRUE(GenerateInstructionDefinitions(spec).empty());
  EXPECT_TRUE(GenerateOperandKindDefinitions(spec).empty());
}

TEST(GeneratorTest, SingleValueEnumExposesBothConstants) {
  GrammarSpec spec = LoadCoreGrammar(R"({
    "magic_number": "0x07230203",
    "instructions": [],
    "operand_kinds": [
      { "category": "ValueEnum", "kind": "Dim", "enumerants": [
        { "enumerant": "1D", "value": 0 },
        { "enumerant": "Buffer", "value": 5 } ] } ] })");
  auto artifacts = GenerateOperandKindDefinitions(spec);
  ASSERT_EQ(artifacts.size(), 1u);
  EXPECT_EQ(artifacts[0].logical_name, "Dim");
  EXPECT_EQ(artifacts[0].category, ArtifactCategory::kOperandKind);
  EXPECT_EQ(artifacts[0].RelativePath(), "kinds/Dim.h");
  EXPECT_THAT(artifacts[0].source_text, HasSubstr("struct Dim {"));
  EXPECT_THAT(artifacts[0].source_text,
              HasSubstr("static Dim _1D() { return {0x0, {}}; }"));
  EXPECT_THAT(artifacts[0].source_text,
              HasSubstr("static Dim Buffer() { return {0x5, {}}; }"));
  EXPECT_THAT(artifacts[0].source_text, Not(HasSubstr("operator|")));
}

TEST(GeneratorTest, BitEnumGetsCombiner) {
  GrammarSpec spec = LoadCoreGrammar(R"({
    "magic_number": "0x07230203",
    "instructions": [],
    "operand_kinds": [
      { "category": "BitEnum", "kind": "FunctionControl", "enumerants": [
        { "enumerant": "None", "value": "0x0000" },
        { "enumerant": "Inline", "value": "0x0001" } ] } ] })");
  auto artifacts = GenerateOperandKindDefinitions(spec);
  ASSERT_EQ(artifacts.size(), 1u);
  EXPECT_THAT(artifacts[0].source_text, HasSubstr("operator|"));
  EXPECT_THAT(artifacts[0].source_text,
              HasSubstr("static FunctionControl Inline() { return {0x1, {}}; }"));
}

TEST(GeneratorTest, InstructionArtifactCarriesOpcodeAndFields) {
  GrammarSpec spec = LoadCoreGrammar(R"({
    "magic_number": "0x07230203",
    "instructions": [
      { "opname": "OpIAdd", "class": "Arithmetic", "opcode": 128, "operands": [
        { "kind": "IdResultType" }, { "kind": "IdResult" },
        { "kind": "IdRef", "name": "'Operand 1'" },
        { "kind": "IdRef", "name": "'Operand 2'" } ] } ],
    "operand_kinds": [
      { "category": "Id", "kind": "IdResultType" },
      { "category": "Id", "kind": "IdResult" },
      { "category": "Id", "kind": "IdRef" } ] })");
  auto artifacts = GenerateInstructionDefinitions(spec);
  ASSERT_EQ(artifacts.size(), 1u);
  const std::string& text = artifacts[0].source_text;
  EXPECT_EQ(artifacts[0].RelativePath(), "instructions/OpIAdd.h");
  EXPECT_THAT(text, HasSubstr("struct OpIAdd {"));
  EXPECT_THAT(text, HasSubstr("kOpcode = 128;"));
  EXPECT_THAT(text, HasSubstr("kClass = \"Arithmetic\";"));
  EXPECT_THAT(text, HasSubstr("operand_1;"));
  EXPECT_THAT(text, HasSubstr("operand_2;"));
}

TEST(GeneratorTest, IdKindOutsideBaseSetIsAGenerationError) {
  GrammarSpec spec = LoadCoreGrammar(R"({
    "magic_number": "0x07230203", "instructions": [],
    "operand_kinds": [ { "category": "Id", "kind": "IdSomethingNew" } ] })");
  EXPECT_EQ(ThrownCode([&] { GenerateOperandKindDefinitions(spec); }),
            ErrorCode::kGeneration);
}

TEST(GeneratorTest, ConflictingOpcodeIsAGenerationError) {
  GrammarSpec spec = LoadCoreGrammar(R"({
    "magic_number": "0x07230203",
    "instructions": [
      { "opname": "OpA", "opcode": 7 },
      { "opname": "OpB", "opcode": 7, "operands": [ { "kind": "IdRef" } ] } ],
    "operand_kinds": [ { "category": "Id", "kind": "IdRef" } ] })");
  EXPECT_EQ(ThrownCode([&] { GenerateMapperTables(spec, {}); }),
            ErrorCode::kGeneration);
}

TEST(GeneratorTest, SameLayoutOpcodeAliasIsAccepted) {
  GrammarSpec spec = LoadCoreGrammar(R"({
    "magic_number": "0x07230203",
    "instructions": [
      { "opname": "OpA", "opcode": 7, "operands": [ { "kind": "IdRef" } ] },
      { "opname": "OpAKHR", "opcode": 7, "operands": [ { "kind": "IdRef" } ] } ],
    "operand_kinds": [ { "category": "Id", "kind": "IdRef" } ] })");
  MapperTables t = GenerateMapperTables(spec, {});
  EXPECT_EQ(t.name_to_opcode.at("OpAKHR"), 7);
  EXPECT_EQ(t.opcode_to_def.at(7)->name, "OpA");
}

class SnapshotTest : public ::testing::TestWithParam<const char*> {
 protected:
  void SetUp() override {
    text_ = CoreGrammarText(GetParam());
    raw_ = nlohmann::json::parse(text_);
    spec_ = LoadCoreGrammar(text_);
    ext_ = LoadExtendedGrammar(OpenCLGrammarText(GetParam()));
  }
  std::string text_;
  nlohmann::json raw_;
  GrammarSpec spec_;
  ExtInstGrammar ext_;
};

TEST_P(SnapshotTest, OneInstructionArtifactPerGrammarEntry) {
  auto artifacts = GenerateInstructionDefinitions(spec_);
  EXPECT_EQ(artifacts.size(), raw_["instructions"].size());
  std::set<std::string> names;
  for (const auto& a : artifacts) names.insert(a.logical_name);
  EXPECT_EQ(names.size(), artifacts.size());
}

TEST_P(SnapshotTest, OneKindArtifactPerNonBaseKind) {
  std::size_t expected = 0;
  for (const auto& k : raw_["operand_kinds"]) {
    if (!kBaseKindNames.count(k["kind"].get<std::string>())) ++expected;
  }
  EXPECT_EQ(GenerateOperandKindDefinitions(spec_).size(), expected);
}

TEST_P(SnapshotTest, ArtifactsSortedByOpcodeThenKind) {
  auto inst = GenerateInstructionDefinitions(spec_);
  for (std::size_t i = 1; i < inst.size(); ++i) {
    EXPECT_LE(spec_.Lookup(inst[i - 1].logical_name).opcode,
              spec_.Lookup(inst[i].logical_name).opcode);
  }
  auto kinds = GenerateOperandKindDefinitions(spec_);
  for (std::size_t i = 1; i < kinds.size(); ++i) {
    EXPECT_LT(kinds[i - 1].logical_name, kinds[i].logical_name);
  }
}

TEST_P(SnapshotTest, GenerationIsDeterministic) {
  GrammarSpec again = LoadCoreGrammar(text_);
  auto a = GenerateInstructionDefinitions(spec_);
  auto b = GenerateInstructionDefinitions(again);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].logical_name, b[i].logical_name);
    EXPECT_EQ(a[i].source_text, b[i].source_text);
  }
  auto ma = GenerateMapperArtifacts(spec_, ext_);
  auto mb = GenerateMapperArtifacts(again, ext_);
  ASSERT_EQ(ma.size(), 3u);
  for (std::size_t i = 0; i < ma.size(); ++i) {
    EXPECT_EQ(ma[i].source_text, mb[i].source_text);
  }
  EXPECT_EQ(GenerateUmbrellaHeader(spec_), GenerateUmbrellaHeader(again));
}

TEST_P(SnapshotTest, TemplateDirectoryMatchesEmbeddedTemplates) {
  TemplateSet loaded = LoadTemplates(SPVKIT_TEMPLATE_DIR);
  auto a = GenerateOperandKindDefinitions(spec_, loaded);
  auto b = GenerateOperandKindDefinitions(spec_);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].source_text, b[i].source_text);
  }
}

TEST_P(SnapshotTest, MapperTablesMatchRawJson) {
  MapperTables t = GenerateMapperTables(spec_, ext_);
  for (const auto& inst : raw_["instructions"]) {
    const std::string name = inst["opname"];
    ASSERT_EQ(t.name_to_opcode.at(name), inst["opcode"].get<int>()) << name;
  }
  EXPECT_EQ(t.name_to_opcode.at("OpCapability"), 17);
  EXPECT_EQ(t.opcode_to_def.at(17)->name, "OpCapability");
  EXPECT_EQ(t.enumerants.at("Capability").name_to_value.at("Kernel"), 6u);
  EXPECT_EQ(t.enumerants.at("Capability").value_to_name.at(6), "Kernel");
  EXPECT_EQ(t.ext_name_to_number.at("fabs"),
            ext_.Lookup("fabs").number);
  EXPECT_EQ(t.ext_number_to_def.at(t.ext_name_to_number.at("fabs"))->name,
            "fabs");
}

TEST_P(SnapshotTest, EnumerantMappingRoundTrips) {
  MapperTables t = GenerateMapperTables(spec_, ext_);
  for (const auto& [kind, m] : t.enumerants) {
    for (const auto& [value, name] : m.value_to_name) {
      EXPECT_EQ(m.name_to_value.at(name), value) << kind << "." << name;
    }
    // Aliases share a value; the reverse map keeps exactly one name.
    std::set<std::uint32_t> values;
    for (const auto& [name, value] : m.name_to_value) values.insert(value);
    EXPECT_EQ(values.size(), m.value_to_name.size()) << kind;
  }
}

TEST_P(SnapshotTest, MapperArtifactsListEveryEntry) {
  auto artifacts = GenerateMapperArtifacts(spec_, ext_);
  ASSERT_EQ(artifacts.size(), 3u);
  EXPECT_EQ(artifacts[0].RelativePath(), "mappers/InstructionMapper.cpp");
  for (const auto& inst : raw_["instructions"]) {
    EXPECT_THAT(artifacts[0].source_text,
                HasSubstr("\"" + inst["opname"].get<std::string>() + "\""));
  }
  for (const auto& def : ext_.instructions()) {
    EXPECT_THAT(artifacts[2].source_text, HasSubstr("\"" + def.name + "\""));
  }
}

INSTANTIATE_TEST_SUITE_P(Pinned, SnapshotTest,
                         ::testing::Values("1.2", "1.6"),
                         [](const auto& info) {
                           std::string s = info.param;
                           s[1] = '_';
                           return "v" + s;
                         });

TEST(GeneratorSnapshotCounts, Version12) {
  GrammarSpec spec = LoadCoreGrammar(CoreGrammarText("1.2"));
  EXPECT_EQ(GenerateInstructionDefinitions(spec).size(), 366u);
  EXPECT_EQ(GenerateOperandKindDefinitions(spec).size(), 34u);
}

TEST(GeneratorSnapshotCounts, Version16) {
  GrammarSpec spec = LoadCoreGrammar(CoreGrammarText("1.6"));
  // The pinned unified snapshot lists 670 instructions.
  EXPECT_EQ(GenerateInstructionDefinitions(spec).size(), 670u);
  EXPECT_EQ(GenerateOperandKindDefinitions(spec).size(), 44u);
}

TEST(CompiledTablesTest, MatchTheDefaultGrammar) {
  GrammarSpec spec = LoadCoreGrammar(generated::EmbeddedCoreGrammar());
  EXPECT_EQ(generated::InstructionTable().size(), spec.instructions().size());
  for (const auto& rec : generated::InstructionTable()) {
    const InstructionDef* def = spec.Find(rec.name);
    ASSERT_NE(def, nullptr) << rec.name;
    EXPECT_EQ(def->opcode, rec.opcode);
    EXPECT_EQ(def->class_attr, rec.class_attr);
  }
  ASSERT_NE(generated::FindInstruction(17), nullptr);
  EXPECT_EQ(generated::FindInstruction(17)->name, "OpCapability");
  for (const auto& rec : generated::EnumerantTable()) {
    const EnumerantDef* e = spec.FindEnumerant(rec.kind, rec.name);
    ASSERT_NE(e, nullptr) << rec.kind << "." << rec.name;
    EXPECT_EQ(e->value, rec.value);
  }
  ExtInstGrammar ext = LoadExtendedGrammar(generated::EmbeddedOpenCLGrammar());
  EXPECT_EQ(generated::OpenCLStdTable().size(), ext.instructions().size());
}

}  // namespace
}  // namespace spvkit
