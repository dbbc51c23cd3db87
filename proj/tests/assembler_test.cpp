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

#include "spvkit/assembler.h"

#include <string>
#include <vector>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "spvkit/binary.h"
#include "spvkit/bundle.h"
#include "test_util.h"

namespace spvkit {
namespace {

using ::testing::ElementsAre;
using ::testing::HasSubstr;
using testing::ThrownCode;

const char kListing[] =
    "OpCapability Addresses\n"
    "OpCapability Linkage\n"
    "OpCapability Kernel\n"
    "OpCapability Int64\n"
    "OpCapability Int8\n";

const char kMinimalKernel[] = R"(; SPIR-V
; Version: 1.2
; Generator: 7; 3
; Bound: 5
; Schema: 0
               OpCapability Addresses
               OpCapability Kernel
               OpMemoryModel Physical64 OpenCL
               OpEntryPoint Kernel %3 "main"
       %void = OpTypeVoid
          %2 = OpTypeFunction %void
          %3 = OpFunction %void None %2
          %4 = OpLabel
               OpReturn
               OpFunctionEnd
)";

std::vector<Word> Words(const AssemblyResult& r) {
  std::vector<Word> out(r.binary.size() / 4);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = r.binary[4 * i] | (r.binary[4 * i + 1] << 8) |
             (r.binary[4 * i + 2] << 16) |
             (static_cast<Word>(r.binary[4 * i + 3]) << 24);
  }
  return out;
}

AssemblyResult MustAssemble(std::string_view text) {
  AssemblyResult r = AssembleModule(text);
  for (const auto& d : r.diagnostics) ADD_FAILURE() << FormatDiagnostic(d);
  return r;
}

const RawInstruction* FindOp(const DecodedModule& d, std::uint16_t opcode) {
  for (const auto& inst : d.instructions) {
    if (inst.opcode == opcode) return &inst;
  }
  return nullptr;
}

TEST(TokenizeLineTest, ResultAssignment) {
  auto t = TokenizeLine("%sum = OpIAdd %int %a %b");
  ASSERT_TRUE(t.has_value());
  EXPECT_EQ(t->result_name, "sum");
  EXPECT_EQ(t->opcode.text, "OpIAdd");
  ASSERT_EQ(t->operands.size(), 3u);
  EXPECT_EQ(t->operands[0].text, "%int");
  EXPECT_EQ(t->operands[1].text, "%a");
  EXPECT_EQ(t->operands[2].text, "%b");
  EXPECT_EQ(t->operands[2].column, 23u);
}

TEST(TokenizeLineTest, NoResult) {
  auto t = TokenizeLine("OpCapability Kernel");
  ASSERT_TRUE(t.has_value());
  EXPECT_FALSE(t->result_name.has_value());
  EXPECT_EQ(t->opcode.text, "OpCapability");
  ASSERT_EQ(t->operands.size(), 1u);
  EXPECT_EQ(t->operands[0].text, "Kernel");
  EXPECT_FALSE(t->operands[0].quoted);
}

TEST(TokenizeLineTest, QuotedStringIsOneToken) {
  auto t = TokenizeLine("OpName %f \"main kernel\"");
  ASSERT_TRUE(t.has_value());
  ASSERT_EQ(t->operands.size(), 2u);
  EXPECT_EQ(t->operands[1].text, "main kernel");
  EXPECT_TRUE(t->operands[1].quoted);
}

TEST(TokenizeLineTest, EscapesAndComments) {
  auto t = TokenizeLine(R"(OpSourceExtension "a\"b\\c" ; trailing)");
  ASSERT_TRUE(t.has_value());
  ASSERT_EQ(t->operands.size(), 1u);
  EXPECT_EQ(t->operands[0].text, "a\"b\\c");
  EXPECT_FALSE(TokenizeLine("   ; only a comment").has_value());
  EXPECT_FALSE(TokenizeLine("").has_value());
  EXPECT_FALSE(TokenizeLine(" \t ").has_value());
}

TEST(TokenizeLineTest, SyntaxErrors) {
  EXPECT_EQ(ThrownCode([] { TokenizeLine("OpName %f \"open"); }),
            ErrorCode::kSyntax);
  EXPECT_EQ(ThrownCode([] { TokenizeLine("%x = "); }), ErrorCode::kSyntax);
  EXPECT_EQ(ThrownCode([] { TokenizeLine("%x OpNop"); }), ErrorCode::kSyntax);
}

TEST(SymbolTableTest, MemoizesNames) {
  Module m = Module::Create(1, 2);
  SymbolTable t;
  const Id a = t.Resolve(m, "%ifThen");
  EXPECT_EQ(t.Resolve(m, "%ifThen"), a);
  const Id b = t.Resolve(m, "%ifElse");
  EXPECT_NE(a, b);
  EXPECT_EQ(t.size(), 2u);
  EXPECT_EQ(t.Find("%ifThen"), a);
  EXPECT_EQ(t.Find("%nothing"), std::nullopt);
}

TEST(SymbolTableTest, NumericNamesPinIds) {
  Module m = Module::Create(1, 2);
  SymbolTable t;
  EXPECT_EQ(t.Resolve(m, "%7"), Id(7));
  EXPECT_EQ(t.Resolve(m, "%x"), Id(1));
  EXPECT_EQ(ThrownCode([&] { t.Resolve(m, "%1"); }), ErrorCode::kArgument);
  EXPECT_EQ(ThrownCode([&] { t.Resolve(m, "%0"); }), ErrorCode::kArgument);
}

TEST(AssemblerTest, CapabilityListing) {
  AssemblyResult r = MustAssemble(kListing);
  DecodedModule d = DecodeModule(r.binary);
  const GrammarSpec& g = GrammarBundle::Default().core();
  std::vector<Word> values;
  for (const auto& inst : d.instructions) {
    EXPECT_EQ(inst.opcode, 17);
    values.push_back(inst.operands.at(0));
  }
  EXPECT_THAT(values,
              ElementsAre(g.FindEnumerant("Capability", "Addresses")->value,
                          g.FindEnumerant("Capability", "Linkage")->value,
                          g.FindEnumerant("Capability", "Kernel")->value,
                          g.FindEnumerant("Capability", "Int64")->value,
                          g.FindEnumerant("Capability", "Int8")->value));
}

TEST(AssemblerTest, HeaderCommentsSeedHeader) {
  AssemblyResult r = MustAssemble(kMinimalKernel);
  std::vector<Word> w = Words(r);
  ASSERT_GE(w.size(), kHeaderWords);
  EXPECT_EQ(w[1], 0x00010200u);
  EXPECT_EQ(w[2], 0x00070003u);
  EXPECT_EQ(w[3], 5u);
  EXPECT_EQ(DecodeModule(r.binary).instructions.size(), 10u);
}

TEST(AssemblerTest, NonNumericGeneratorKeepsDefault) {
  std::string text = kMinimalKernel;
  text.replace(text.find("; Generator: 7; 3"), 17, "; Generator: Khronos; 0");
  EXPECT_EQ(Words(MustAssemble(text))[2],
            MakeGeneratorWord(kDefaultGeneratorTool));
}

TEST(AssemblerTest, DefaultVersionFromOptions) {
  AssemblyResult r = AssembleModule("OpCapability Shader\n",
                                    GrammarBundle::Default(), {1, 5});
  ASSERT_TRUE(r.ok());
  EXPECT_EQ(Words(r)[1], 0x00010500u);
}

TEST(AssemblerTest, SmallerBoundCommentIsIgnored) {
  std::string text = kMinimalKernel;
  text.replace(text.find("; Bound: 5"), 10, "; Bound: 2");
  EXPECT_EQ(Words(MustAssemble(text))[3], 5u);
  text.replace(text.find("; Bound: 2"), 10, "; Bound: 9");
  EXPECT_EQ(Words(MustAssemble(text))[3], 9u);
}

TEST(AssemblerTest, UnknownEnumerantReportedAtLineOne) {
  AssemblyResult r = AssembleModule("OpCapability Bogus\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].line, 1u);
  EXPECT_EQ(r.diagnostics[0].column, 14u);
  EXPECT_THAT(r.diagnostics[0].message, HasSubstr("Bogus"));
  EXPECT_TRUE(r.binary.empty());
  EXPECT_EQ(FormatDiagnostic(r.diagnostics[0]).rfind("1:14: error: ", 0), 0u);
}

TEST(AssemblerTest, EveryBadLineIsReportedInOrder) {
  const char text[] =
      "OpCapability Bogus\n"
      "OpFrobnicate %x\n"
      "OpCapability Kernel\n"
      "OpMemoryModel Physical64 Nonsense\n"
      "OpName %undefined \"u\"\n";
  AssemblyResult r = AssembleModule(text);
  ASSERT_GE(r.diagnostics.size(), 4u);
  std::vector<std::size_t> lines;
  for (const auto& d : r.diagnostics) lines.push_back(d.line);
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
  for (std::size_t line : {1u, 2u, 4u, 5u}) {
    EXPECT_NE(std::find(lines.begin(), lines.end(), line), lines.end())
        << line;
  }
}

TEST(AssemblerTest, OperandCountErrors) {
  EXPECT_FALSE(AssembleModule("OpCapability\n").ok());
  EXPECT_FALSE(AssembleModule("OpCapability Kernel Shader\n").ok());
  EXPECT_FALSE(AssembleModule("OpTypeVoid\n").ok());
  EXPECT_FALSE(AssembleModule("%x = OpCapability Kernel\n").ok());
}

TEST(AssemblerTest, ForwardReferenceBindsToLaterLabel) {
  const char text[] = R"(OpCapability Addresses
OpCapability Kernel
OpMemoryModel Physical64 OpenCL
OpEntryPoint Kernel %f "f"
%void = OpTypeVoid
%bool = OpTypeBool
%true = OpConstantTrue %bool
%fn = OpTypeFunction %void
%f = OpFunction %void None %fn
%entry = OpLabel
OpSelectionMerge %merge None
OpBranchConditional %true %ifThen %merge
%ifThen = OpLabel
OpBranch %merge
%merge = OpLabel
OpReturn
OpFunctionEnd
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  const RawInstruction* branch = FindOp(d, 250);
  ASSERT_NE(branch, nullptr);
  std::vector<Word> labels;
  for (const auto& inst : d.instructions) {
    if (inst.opcode == 248) labels.push_back(inst.operands[0]);
  }
  ASSERT_EQ(labels.size(), 3u);
  EXPECT_EQ(branch->operands[1], labels[1]);
  EXPECT_EQ(branch->operands[2], labels[2]);
}

TEST(AssemblerTest, IdsFollowFirstMentionOrder) {
  const char text[] = R"(OpCapability Shader
OpMemoryModel Logical GLSL450
OpName %b "b"
%a = OpTypeInt 32 0
%b = OpTypeFloat 32
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  EXPECT_EQ(FindOp(d, 5)->operands[0], 1u);
  EXPECT_EQ(FindOp(d, 21)->operands[0], 2u);
  EXPECT_EQ(d.header.bound, 3u);
}

TEST(AssemblerTest, NumericNamesKeepTheirIds) {
  const char text[] = R"(OpCapability Shader
OpMemoryModel Logical GLSL450
%7 = OpTypeInt 32 0
%x = OpTypeFloat 32
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  EXPECT_EQ(FindOp(d, 21)->operands[0], 7u);
  EXPECT_EQ(FindOp(d, 22)->operands[0], 1u);
  EXPECT_EQ(d.header.bound, 8u);
}

TEST(AssemblerTest, UndefinedIdIsReported) {
  AssemblyResult r = AssembleModule(
      "OpCapability Shader\nOpMemoryModel Logical GLSL450\n"
      "%a = OpTypePointer Function %missing\n");
  ASSERT_EQ(r.diagnostics.size(), 1u);
  EXPECT_EQ(r.diagnostics[0].line, 3u);
  EXPECT_THAT(r.diagnostics[0].message, HasSubstr("%missing"));
}

TEST(AssemblerTest, DuplicateDefinitionIsReported) {
  AssemblyResult r = AssembleModule(
      "%a = OpTypeInt 32 0\n%a = OpTypeFloat 32\n");
  ASSERT_FALSE(r.ok());
  EXPECT_EQ(r.diagnostics[0].line, 2u);
}

TEST(AssemblerTest, LiteralWidthsFollowTheType) {
  const char text[] = R"(OpCapability Kernel
OpCapability Int64
OpCapability Int16
OpCapability Float64
OpMemoryModel Physical64 OpenCL
%u64 = OpTypeInt 64 0
%s16 = OpTypeInt 16 1
%f64 = OpTypeFloat 64
%a = OpConstant %u64 18446744073709551615
%b = OpConstant %s16 -2
%c = OpConstant %f64 -0.5
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  std::vector<std::vector<Word>> values;
  for (const auto& inst : d.instructions) {
    if (inst.opcode == 43) {
      values.emplace_back(inst.operands.begin() + 2, inst.operands.end());
    }
  }
  ASSERT_EQ(values.size(), 3u);
  EXPECT_THAT(values[0], ElementsAre(0xFFFFFFFFu, 0xFFFFFFFFu));
  EXPECT_THAT(values[1], ElementsAre(0xFFFFFFFEu));
  EXPECT_THAT(values[2], ElementsAre(0u, 0xBFE00000u));
}

TEST(AssemblerTest, SwitchOnSixtyFourBitSelector) {
  const char text[] = R"(OpCapability Kernel
OpCapability Int64
OpCapability Addresses
OpMemoryModel Physical64 OpenCL
OpEntryPoint Kernel %f "f"
%void = OpTypeVoid
%u64 = OpTypeInt 64 0
%sel = OpConstant %u64 3
%fn = OpTypeFunction %void
%f = OpFunction %void None %fn
%entry = OpLabel
OpSelectionMerge %done None
OpSwitch %sel %done 1 %one 4294967296 %done
%one = OpLabel
OpBranch %done
%done = OpLabel
OpReturn
OpFunctionEnd
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  const RawInstruction* sw = FindOp(d, 251);
  ASSERT_NE(sw, nullptr);
  ASSERT_EQ(sw->operands.size(), 8u);
  EXPECT_THAT(std::vector<Word>(sw->operands.begin() + 2,
                                sw->operands.begin() + 4),
              ElementsAre(1u, 0u));
  EXPECT_THAT(std::vector<Word>(sw->operands.begin() + 5,
                                sw->operands.begin() + 7),
              ElementsAre(0u, 1u));
}

TEST(AssemblerTest, ExtendedInstructionByName) {
  const char text[] = R"(OpCapability Kernel
OpCapability Addresses
%std = OpExtInstImport "OpenCL.std"
OpMemoryModel Physical64 OpenCL
OpEntryPoint Kernel %f "f"
%void = OpTypeVoid
%float = OpTypeFloat 32
%x = OpConstant %float -1.5
%fn = OpTypeFunction %void
%f = OpFunction %void None %fn
%entry = OpLabel
%y = OpExtInst %float %std fabs %x
OpReturn
OpFunctionEnd
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  const RawInstruction* ext = FindOp(d, 12);
  ASSERT_NE(ext, nullptr);
  EXPECT_EQ(ext->operands.at(3),
            GrammarBundle::Default().opencl().Lookup("fabs").number);
  EXPECT_FALSE(AssembleModule(std::string(text).replace(
                                  std::string(text).find("fabs"), 4, "nope"))
                   .ok());
}

TEST(AssemblerTest, SpecConstantOpUsesInnerOperands) {
  const char text[] = R"(OpCapability Kernel
OpMemoryModel Physical64 OpenCL
%int = OpTypeInt 32 0
%a = OpSpecConstant %int 3
%b = OpSpecConstantOp %int IAdd %a %a
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  const RawInstruction* op = FindOp(d, 52);
  ASSERT_NE(op, nullptr);
  EXPECT_THAT(op->operands, ElementsAre(1u, 3u, 128u, 2u, 2u));
}

TEST(AssemblerTest, BitMasksAndParameters) {
  const char text[] = R"(OpCapability Kernel
OpCapability Addresses
OpMemoryModel Physical64 OpenCL
OpEntryPoint Kernel %f "f"
%void = OpTypeVoid
%int = OpTypeInt 32 0
%ptr = OpTypePointer Function %int
%fn = OpTypeFunction %void
%f = OpFunction %void Inline|Pure %fn
%entry = OpLabel
%v = OpVariable %ptr Function
%x = OpLoad %int %v Volatile|Aligned 8
OpReturn
OpFunctionEnd
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  EXPECT_EQ(FindOp(d, 54)->operands[2], 0x1u | 0x4u);
  EXPECT_THAT(FindOp(d, 61)->operands, ElementsAre(3u, 8u, 7u, 0x3u, 8u));
}

TEST(AssemblerTest, StringsSpanLines) {
  const char text[] = "OpSource OpenCL_C 120 %file \"line one\nline two\"\n"
                      "%file = OpString \"k.cl\"\n";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  const RawInstruction* src = FindOp(d, 3);
  ASSERT_NE(src, nullptr);
  std::size_t consumed = 0;
  EXPECT_EQ(DecodeStringLiteral(std::span<const Word>(src->operands).subspan(3),
                                consumed),
            "line one\nline two");
}

TEST(AssemblerTest, OpUnknownEmitsRawWords) {
  const char text[] = R"(OpCapability Kernel
OpCapability Addresses
OpMemoryModel Physical64 OpenCL
OpEntryPoint Kernel %f "f"
%void = OpTypeVoid
%fn = OpTypeFunction %void
%f = OpFunction %void None %fn
%entry = OpLabel
OpUnknown(4000) 1 2
OpReturn
OpFunctionEnd
)";
  DecodedModule d = DecodeModule(MustAssemble(text).binary);
  const RawInstruction* raw = FindOp(d, 4000);
  ASSERT_NE(raw, nullptr);
  EXPECT_THAT(raw->operands, ElementsAre(1u, 2u));
}

}  // namespace
}  // namespace spvkit
