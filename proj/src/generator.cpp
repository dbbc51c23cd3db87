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

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "spvkit/error.h"
#include "spvkit/template.h"

namespace spvkit {
namespace {

constexpr std::string_view kBaseKinds[] = {
    "IdResultType",   "IdResult",
    "IdMemorySemantics", "IdScope",
    "IdRef",          "LiteralInteger",
    "LiteralString",  "LiteralContextDependentNumber",
    "LiteralSpecConstantOpInteger",
};

const std::set<std::string, std::less<>>& CppKeywords() {
  static const std::set<std::string, std::less<>> words = {
      "alignas",   "alignof",   "and",        "asm",       "auto",
      "bool",      "break",     "case",       "catch",     "char",
      "class",     "concept",   "const",      "constexpr", "continue",
      "default",   "delete",    "do",         "double",    "else",
      "enum",      "explicit",  "export",     "extern",    "false",
      "float",     "for",       "friend",     "goto",      "if",
      "inline",    "int",       "long",       "mutable",   "namespace",
      "new",       "not",       "operator",   "or",        "private",
      "protected", "public",    "register",   "requires",  "return",
      "short",     "signed",    "sizeof",     "static",    "struct",
      "switch",    "template",  "this",       "throw",     "true",
      "try",       "typedef",   "typeid",     "typename",  "union",
      "unsigned",  "using",     "virtual",    "void",      "volatile",
      "while",     "xor",       "module",     "import",    "co_await",
      "co_yield",  "co_return", "char8_t",    "consteval", "constinit",
  };
  return words;
}

std::string Banner(const GrammarSpec& spec) {
  return "// Generated by spvkit-gen from SPIR-V grammar " +
         std::to_string(spec.major_version()) + "." +
         std::to_string(spec.minor_version()) + " revision " +
         std::to_string(spec.revision()) + ". Do not edit.";
}

// "'Result Type'" -> "result_type", "IdResultType" -> "id_result_type".
std::string SnakeCase(std::string_view raw) {
  std::string out;
  bool pending_sep = false;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    unsigned char c = static_cast<unsigned char>(raw[i]);
    if (std::isalnum(c)) {
      bool boundary = std::isupper(c) && i > 0 &&
                      (std::islower(static_cast<unsigned char>(raw[i - 1])) ||
                       std::isdigit(static_cast<unsigned char>(raw[i - 1])));
      if ((pending_sep || boundary) && !out.empty()) out += '_';
      pending_sep = false;
      out += static_cast<char>(std::tolower(c));
    } else {
      pending_sep = true;
    }
  }
  if (out.empty()) out = "operand";
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out = "_" + out;
  if (CppKeywords().count(out)) out += '_';
  return out;
}

// Hands out unique names within one generated scope.
class NameSet {
 public:
  std::string Take(std::string name) {
    std::string candidate = name;
    for (int n = 2; used_.count(candidate); ++n) {
      candidate = name + "_" + std::to_string(n);
    }
    used_.insert(candidate);
    return candidate;
  }

 private:
  std::set<std::string> used_;
};

// Qualified so enumerant factories named after a kind cannot hide it.
std::string KindTypeName(std::string_view kind) {
  return IsBaseOperandKind(kind) ? std::string(kind)
                                 : "spv::" + SanitizeIdentifier(kind, "");
}

std::string SlotType(const OperandSlot& slot) {
  std::string type = KindTypeName(slot.kind);
  switch (slot.quantifier) {
    case Quantifier::kOptional: return "OptionalOperand<" + type + ">";
    case Quantifier::kVariadic: return "MultipleOperands<" + type + ">";
    case Quantifier::kSingle: break;
  }
  return type;
}

std::string SlotName(const OperandSlot& slot) {
  return SnakeCase(slot.name.empty() ? slot.kind : slot.name);
}

void AddIncludes(TemplateContext& context,
                 const std::set<std::string>& kinds) {
  auto& list = context.List("includes");
  for (const std::string& kind : kinds) {
    TemplateContext item;
    item.Set("include", "generated/kinds/" + SanitizeIdentifier(kind, "") +
                            ".h");
    list.push_back(std::move(item));
  }
}

void CollectKind(const std::string& kind, std::set<std::string>& out) {
  if (!IsBaseOperandKind(kind)) out.insert(kind);
}

std::string Hex(std::uint32_t v) {
  std::ostringstream s;
  s << "0x" << std::hex << std::uppercase << v;
  return s.str();
}

std::string Quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

TemplateContext InstructionContext(const GrammarSpec& spec,
                                   const InstructionDef& def) {
  TemplateContext context;
  context.Set("banner", Banner(spec))
      .Set("type_name", SanitizeIdentifier(def.name, ""))
      .Set("name", def.name)
      .Set("opcode", std::to_string(def.opcode))
      .Set("class", def.class_attr);
  std::set<std::string> kinds;
  NameSet names;
  auto& fields = context.List("fields");
  for (const OperandSlot& slot : def.operands) {
    TemplateContext field;
    field.Set("field_type", SlotType(slot))
        .Set("field_name", names.Take(SlotName(slot)));
    fields.push_back(std::move(field));
    CollectKind(slot.kind, kinds);
  }
  AddIncludes(context, kinds);
  return context;
}

TemplateContext EnumContext(const GrammarSpec& spec,
                            const OperandKindDef& kind) {
  const bool bits = kind.category == OperandCategory::kBitEnum;
  const std::string type_name = SanitizeIdentifier(kind.kind, "");
  TemplateContext context;
  context.Set("banner", Banner(spec))
      .Set("type_name", type_name)
      .Set("kind", kind.kind)
      .Set("category", std::string(OperandCategoryName(kind.category)));
  context.List("bit_enum");
  context.List("value_enum");
  context.List(bits ? "bit_enum" : "value_enum").emplace_back();

  std::set<std::string> kinds;
  NameSet factories;
  factories.Take(type_name);
  auto& enumerants = context.List("enumerants");
  for (const EnumerantDef& e : kind.enumerants) {
    TemplateContext item;
    NameSet param_names;
    std::string decls, args;
    for (const OperandSlot& p : e.parameters) {
      std::string name = param_names.Take(SlotName(p));
      if (!decls.empty()) {
        decls += ", ";
        args += ", ";
      }
      decls += SlotType(p) + " " + name;
      args += name;
      CollectKind(p.kind, kinds);
    }
    std::string params = "{}";
    if (!e.parameters.empty()) {
      params = "EncodeParameters(" + args + ")";
      if (bits) params = "{{" + Hex(e.value) + ", " + params + "}}";
    }
    item.Set("factory", factories.Take(SanitizeIdentifier(e.name, "")))
        .Set("enumerant", e.name)
        .Set("param_decls", decls)
        .Set("init", "{" + Hex(e.value) + ", " + params + "}");
    enumerants.push_back(std::move(item));
  }
  kinds.erase(kind.kind);
  AddIncludes(context, kinds);
  return context;
}

TemplateContext CompositeContext(const GrammarSpec& spec,
                                 const OperandKindDef& kind) {
  TemplateContext context;
  context.Set("banner", Banner(spec))
      .Set("type_name", SanitizeIdentifier(kind.kind, ""))
      .Set("kind", kind.kind);
  std::set<std::string> kinds;
  auto& fields = context.List("fields");
  for (std::size_t i = 0; i < kind.bases.size(); ++i) {
    TemplateContext field;
    std::string name = kind.bases.size() == 2
                           ? (i == 0 ? "first" : "second")
                           : "part_" + std::to_string(i);
    field.Set("field_type", KindTypeName(kind.bases[i]))
        .Set("field_name", name);
    fields.push_back(std::move(field));
    CollectKind(kind.bases[i], kinds);
  }
  AddIncludes(context, kinds);
  return context;
}

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kNotFound,
                "cannot read template " + path.string());
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

std::string GeneratedArtifact::RelativePath() const {
  switch (category) {
    case ArtifactCategory::kInstruction:
      return "instructions/" + logical_name + ".h";
    case ArtifactCategory::kOperandKind:
      return "kinds/" + logical_name + ".h";
    case ArtifactCategory::kMapperTable:
      return "mappers/" + logical_name + ".cpp";
  }
  return logical_name;
}

TemplateSet LoadTemplates(const std::filesystem::path& dir) {
  TemplateSet t;
  t.instruction = ReadFile(dir / "instruction.tmpl");
  t.enum_kind = ReadFile(dir / "enum_kind.tmpl");
  t.literal_kind = ReadFile(dir / "literal_kind.tmpl");
  t.composite_kind = ReadFile(dir / "composite_kind.tmpl");
  t.instruction_mapper = ReadFile(dir / "instruction_mapper.tmpl");
  t.operand_mapper = ReadFile(dir / "operand_mapper.tmpl");
  t.extinst_mapper = ReadFile(dir / "extinst_mapper.tmpl");
  t.umbrella = ReadFile(dir / "umbrella.tmpl");
  return t;
}

std::string SanitizeIdentifier(std::string_view raw, std::string_view prefix) {
  if (raw.empty()) {
    throw Error(ErrorCode::kArgument, "cannot sanitize an empty name");
  }
  std::string out(prefix);
  out += raw;
  for (char& c : out) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') c = '_';
  }
  if (std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(0, "_");
  return out;
}

bool IsBaseOperandKind(std::string_view kind) {
  return std::find(std::begin(kBaseKinds), std::end(kBaseKinds), kind) !=
         std::end(kBaseKinds);
}

std::vector<GeneratedArtifact> GenerateInstructionDefinitions(
    const GrammarSpec& spec, const TemplateSet& templates) {
  std::vector<const InstructionDef*> defs;
  for (const InstructionDef& def : spec.instructions()) defs.push_back(&def);
  std::sort(defs.begin(), defs.end(), [](const auto* a, const auto* b) {
    return std::tie(a->opcode, a->name) < std::tie(b->opcode, b->name);
  });
  std::vector<GeneratedArtifact> out;
  out.reserve(defs.size());
  for (const InstructionDef* def : defs) {
    out.push_back({SanitizeIdentifier(def->name, ""),
                   RenderTemplate(templates.instruction,
                                  InstructionContext(spec, *def)),
                   ArtifactCategory::kInstruction});
  }
  return out;
}

std::vector<GeneratedArtifact> GenerateOperandKindDefinitions(
    const GrammarSpec& spec, const TemplateSet& templates) {
  std::vector<const OperandKindDef*> kinds;
  for (const OperandKindDef& k : spec.operand_kinds()) {
    if (!IsBaseOperandKind(k.kind)) kinds.push_back(&k);
  }
  std::sort(kinds.begin(), kinds.end(),
            [](const auto* a, const auto* b) { return a->kind < b->kind; });
  std::vector<GeneratedArtifact> out;
  for (const OperandKindDef* k : kinds) {
    std::string text;
    switch (k->category) {
      case OperandCategory::kBitEnum:
      case OperandCategory::kValueEnum:
        text = RenderTemplate(templates.enum_kind, EnumContext(spec, *k));
        break;
      case OperandCategory::kComposite:
        text = RenderTemplate(templates.composite_kind,
                              CompositeContext(spec, *k));
        break;
      case OperandCategory::kLiteral: {
        TemplateContext context;
        context.Set("banner", Banner(spec))
            .Set("type_name", SanitizeIdentifier(k->kind, ""))
            .Set("kind", k->kind);
        text = RenderTemplate(templates.literal_kind, context);
        break;
      }
      case OperandCategory::kId:
        throw Error(ErrorCode::kGeneration,
                    "Id kind '" + k->kind + "' has no base type");
    }
    out.push_back({SanitizeIdentifier(k->kind, ""), std::move(text),
                   ArtifactCategory::kOperandKind});
  }
  return out;
}

std::vector<GeneratedArtifact> GenerateMapperArtifacts(
    const GrammarSpec& spec, const ExtInstGrammar& ext,
    const TemplateSet& templates) {
  // Validates opcode consistency before emitting anything.
  GenerateMapperTables(spec, ext);

  std::vector<GeneratedArtifact> out;
  {
    TemplateContext context;
    context.Set("banner", Banner(spec));
    std::vector<const InstructionDef*> defs;
    for (const InstructionDef& def : spec.instructions()) defs.push_back(&def);
    std::stable_sort(defs.begin(), defs.end(), [](const auto* a,
                                                  const auto* b) {
      return a->opcode < b->opcode;
    });
    auto& rows = context.List("instructions");
    for (const InstructionDef* def : defs) {
      TemplateContext row;
      row.Set("opcode", std::to_string(def->opcode))
          .Set("name", Quote(def->name))
          .Set("class", Quote(def->class_attr));
      rows.push_back(std::move(row));
    }
    out.push_back({"InstructionMapper",
                   RenderTemplate(templates.instruction_mapper, context),
                   ArtifactCategory::kMapperTable});
  }
  {
    TemplateContext context;
    context.Set("banner", Banner(spec));
    std::vector<const OperandKindDef*> kinds;
    for (const OperandKindDef& k : spec.operand_kinds()) {
      if (k.IsEnum()) kinds.push_back(&k);
    }
    std::sort(kinds.begin(), kinds.end(),
              [](const auto* a, const auto* b) { return a->kind < b->kind; });
    auto& rows = context.List("enumerants");
    for (const OperandKindDef* k : kinds) {
      for (const EnumerantDef& e : k->enumerants) {
        TemplateContext row;
        row.Set("kind", Quote(k->kind))
            .Set("name", Quote(e.name))
            .Set("value", Hex(e.value));
        rows.push_back(std::move(row));
      }
    }
    out.push_back({"OperandKindMapper",
                   RenderTemplate(templates.operand_mapper, context),
                   ArtifactCategory::kMapperTable});
  }
  {
    TemplateContext context;
    context.Set("banner", Banner(spec));
    auto& rows = context.List("instructions");
    for (const ExtInstDef& def : ext.instructions()) {
      TemplateContext row;
      row.Set("number", std::to_string(def.number))
          .Set("name", Quote(def.name));
      rows.push_back(std::move(row));
    }
    out.push_back({"OpenCLStdMapper",
                   RenderTemplate(templates.extinst_mapper, context),
                   ArtifactCategory::kMapperTable});
  }
  return out;
}

std::string GenerateUmbrellaHeader(const GrammarSpec& spec,
                                   const TemplateSet& templates) {
  TemplateContext context;
  context.Set("banner", Banner(spec));
  for (const auto& a : GenerateInstructionDefinitions(spec, templates)) {
    context.List("headers").emplace_back().Set("path",
                                               "generated/" + a.RelativePath());
  }
  for (const auto& a : GenerateOperandKindDefinitions(spec, templates)) {
    context.List("headers").emplace_back().Set("path",
                                               "generated/" + a.RelativePath());
  }
  return RenderTemplate(templates.umbrella, context);
}

MapperTables GenerateMapperTables(const GrammarSpec& spec,
                                  const ExtInstGrammar& ext) {
  MapperTables t;
  auto layout = [](const InstructionDef& def) {
    std::vector<std::pair<std::string, Quantifier>> out;
    for (const OperandSlot& s : def.operands) {
      out.emplace_back(s.kind, s.quantifier);
    }
    return out;
  };
  for (const InstructionDef& def : spec.instructions()) {
    if (!t.name_to_opcode.emplace(def.name, def.opcode).second) {
      throw Error(ErrorCode::kGeneration,
                  "instruction '" + def.name + "' listed twice");
    }
    auto [it, inserted] = t.opcode_to_def.emplace(def.opcode, &def);
    if (!inserted && layout(*it->second) != layout(def)) {
      throw Error(ErrorCode::kGeneration,
                  "duplicate opcode " + std::to_string(def.opcode) + ": '" +
                      it->second->name + "' and '" + def.name + "'");
    }
  }
  for (const OperandKindDef& k : spec.operand_kinds()) {
    if (!k.IsEnum()) continue;
    EnumMapper& m = t.enumerants[k.kind];
    for (const EnumerantDef& e : k.enumerants) {
      m.name_to_value.emplace(e.name, e.value);
      m.value_to_name.emplace(e.value, e.name);
    }
  }
  for (const ExtInstDef& def : ext.instructions()) {
    t.ext_name_to_number.emplace(def.name, def.number);
    t.ext_number_to_def.emplace(def.number, &def);
  }
  return t;
}

}  // namespace spvkit
