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

#include <algorithm>
#include <string>

#include "spvkit/builder.h"
#include "spvkit/generated_tables.h"

namespace spvkit {
namespace {

enum class Where { kModule, kModuleOrBlock, kFunction, kBlock, kNowhere };

struct NameRule {
  std::string_view opname;
  Where where;
  Section section;
};

// Instructions whose placement the grammar class does not settle. OpFunction
// and OpLabel open scopes and are never added directly.
constexpr NameRule kNameRules[] = {
    {"OpCapability", Where::kModule, Section::kCapability},
    {"OpExtension", Where::kModule, Section::kExtension},
    {"OpExtInstImport", Where::kModule, Section::kExtInstImport},
    {"OpMemoryModel", Where::kModule, Section::kMemoryModel},
    {"OpEntryPoint", Where::kModule, Section::kEntryPoint},
    {"OpExecutionMode", Where::kModule, Section::kExecutionMode},
    {"OpExecutionModeId", Where::kModule, Section::kExecutionMode},
    {"OpString", Where::kModule, Section::kDebugSource},
    {"OpSource", Where::kModule, Section::kDebugSource},
    {"OpSourceContinued", Where::kModule, Section::kDebugSource},
    {"OpSourceExtension", Where::kModule, Section::kDebugSource},
    {"OpName", Where::kModule, Section::kDebugName},
    {"OpMemberName", Where::kModule, Section::kDebugName},
    {"OpModuleProcessed", Where::kModule, Section::kDebugModuleProcessed},
    {"OpLine", Where::kModuleOrBlock, Section::kGlobal},
    {"OpNoLine", Where::kModuleOrBlock, Section::kGlobal},
    {"OpUndef", Where::kModuleOrBlock, Section::kGlobal},
    {"OpVariable", Where::kModuleOrBlock, Section::kGlobal},
    {"OpExtInst", Where::kBlock, Section::kGlobal},
    {"OpFunction", Where::kNowhere, Section::kGlobal},
    {"OpLabel", Where::kNowhere, Section::kGlobal},
    {"OpFunctionParameter", Where::kFunction, Section::kGlobal},
    {"OpFunctionEnd", Where::kFunction, Section::kGlobal},
    {"OpAsmTargetINTEL", Where::kModule, Section::kGlobal},
    {"OpAliasDomainDeclINTEL", Where::kModule, Section::kGlobal},
    {"OpAliasScopeDeclINTEL", Where::kModule, Section::kGlobal},
    {"OpAliasScopeListDeclINTEL", Where::kModule, Section::kGlobal},
};

struct PrefixRule {
  std::string_view prefix;
  Section section;
};

// Covers vendor type and constant instructions filed under other classes.
constexpr PrefixRule kPrefixRules[] = {
    {"OpType", Section::kGlobal},
    {"OpConstant", Section::kGlobal},
    {"OpSpecConstant", Section::kGlobal},
    {"OpDecorate", Section::kAnnotation},
    {"OpMemberDecorate", Section::kAnnotation},
};

struct ClassRule {
  std::string_view class_attr;
  Section section;
};

constexpr ClassRule kClassRules[] = {
    {"Annotation", Section::kAnnotation},
    {"Type-Declaration", Section::kGlobal},
    {"Constant-Creation", Section::kGlobal},
};

constexpr std::string_view kTerminators[] = {
    "OpBranch",         "OpBranchConditional", "OpSwitch",
    "OpReturn",         "OpReturnValue",       "OpKill",
    "OpUnreachable",    "OpTerminateInvocation", "OpIgnoreIntersectionKHR",
    "OpTerminateRayKHR", "OpEmitMeshTasksEXT",
};

Routing Make(Where where, Section section) {
  Routing r;
  switch (where) {
    case Where::kModule:
      r.module_section = section;
      break;
    case Where::kModuleOrBlock:
      r.module_section = section;
      r.in_block = true;
      break;
    case Where::kFunction:
      r.in_function = true;
      break;
    case Where::kBlock:
      r.in_block = true;
      break;
    case Where::kNowhere:
      break;
  }
  return r;
}

}  // namespace

std::string_view SectionName(Section section) {
  switch (section) {
    case Section::kCapability: return "capabilities";
    case Section::kExtension: return "extensions";
    case Section::kExtInstImport: return "extended instruction imports";
    case Section::kMemoryModel: return "memory model";
    case Section::kEntryPoint: return "entry points";
    case Section::kExecutionMode: return "execution modes";
    case Section::kDebugSource: return "debug source";
    case Section::kDebugName: return "debug names";
    case Section::kDebugModuleProcessed: return "module processed";
    case Section::kAnnotation: return "annotations";
    case Section::kGlobal: return "types, constants and globals";
    case Section::kFunctionDeclaration: return "function declarations";
    case Section::kFunctionDefinition: return "function definitions";
  }
  return "";
}

Routing RouteInstruction(std::uint16_t opcode, std::string_view class_attr) {
  const generated::InstructionRecord* record =
      generated::FindInstruction(opcode);
  std::string_view name = record ? record->name : std::string_view();
  if (class_attr.empty() && record) class_attr = record->class_attr;

  for (const NameRule& rule : kNameRules) {
    if (rule.opname == name) return Make(rule.where, rule.section);
  }
  for (const PrefixRule& rule : kPrefixRules) {
    if (name.substr(0, rule.prefix.size()) == rule.prefix) {
      return Make(Where::kModule, rule.section);
    }
  }
  for (const ClassRule& rule : kClassRules) {
    if (rule.class_attr == class_attr) return Make(Where::kModule, rule.section);
  }
  return Make(Where::kBlock, Section::kGlobal);
}

bool IsBlockTerminator(std::uint16_t opcode) {
  const generated::InstructionRecord* record =
      generated::FindInstruction(opcode);
  return record && std::find(std::begin(kTerminators), std::end(kTerminators),
                             record->name) != std::end(kTerminators);
}

}  // namespace spvkit
