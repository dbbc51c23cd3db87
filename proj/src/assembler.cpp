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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <deque>
#include <set>
#include <tuple>
#include <unordered_map>

#include "literal_text.h"
#include "operand_walk.h"
#include "spvkit/error.h"

namespace spvkit {
namespace {

constexpr Word kMaxId = 0xFFFFFFFE;
constexpr std::string_view kUnknownPrefix = "OpUnknown(";

bool IsNumericName(std::string_view name) {
  if (name.empty()) return false;
  for (char c : name) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

std::optional<std::uint64_t> ParseDecimal(std::string_view text) {
  std::uint64_t value = 0;
  auto r = std::from_chars(text.data(), text.data() + text.size(), value);
  if (r.ec != std::errc() || r.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

std::string_view Trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

struct LogicalLine {
  std::string text;
  std::size_t line = 1;
};

// Splits text at newlines that are not inside a quoted string.
std::vector<LogicalLine> SplitLines(std::string_view text) {
  std::vector<LogicalLine> out;
  LogicalLine current;
  std::size_t line = 1;
  bool quoted = false;
  bool comment = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '\n' && !quoted) {
      if (!current.text.empty() && current.text.back() == '\r') {
        current.text.pop_back();
      }
      out.push_back(std::move(current));
      current = LogicalLine{};
      current.line = ++line;
      comment = false;
      continue;
    }
    if (c == '\n') ++line;
    current.text += c;
    if (comment) continue;
    if (quoted && c == '\\' && i + 1 < text.size()) {
      current.text += text[++i];
      if (text[i] == '\n') ++line;
    } else if (c == '"') {
      quoted = !quoted;
    } else if (c == ';' && !quoted) {
      comment = true;
    }
  }
  if (!current.text.empty()) out.push_back(std::move(current));
  return out;
}

struct HeaderSeed {
  std::optional<std::pair<unsigned, unsigned>> version;
  std::optional<Word> generator;
  std::optional<Word> bound;
  std::optional<Word> schema;
};

void ReadHeaderComment(std::string_view line, HeaderSeed& seed) {
  line = Trim(line);
  if (line.empty() || line.front() != ';') return;
  line = Trim(line.substr(1));
  auto colon = line.find(':');
  if (colon == std::string_view::npos) return;
  const std::string_view key = Trim(line.substr(0, colon));
  const std::string_view value = Trim(line.substr(colon + 1));
  if (key == "Version") {
    auto dot = value.find('.');
    if (dot == std::string_view::npos) return;
    auto major = ParseDecimal(value.substr(0, dot));
    auto minor = ParseDecimal(value.substr(dot + 1));
    if (major && minor && *major < 256 && *minor < 256) {
      seed.version = {static_cast<unsigned>(*major),
                      static_cast<unsigned>(*minor)};
    }
  } else if (key == "Generator") {
    auto semi = value.find(';');
    if (semi == std::string_view::npos) return;
    auto tool = ParseDecimal(Trim(value.substr(0, semi)));
    auto version = ParseDecimal(Trim(value.substr(semi + 1)));
    if (tool && version && *tool <= 0xFFFF && *version <= 0xFFFF) {
      seed.generator =
          MakeGeneratorWord(static_cast<std::uint16_t>(*tool),
                            static_cast<std::uint16_t>(*version));
    }
  } else if (key == "Bound" || key == "Schema") {
    auto v = ParseDecimal(value);
    if (!v || *v > 0xFFFFFFFF) return;
    (key == "Bound" ? seed.bound : seed.schema) = static_cast<Word>(*v);
  }
}

struct ParsedLine {
  TextInstruction text;
  const InstructionDef* def = nullptr;
  std::optional<std::uint16_t> unknown_opcode;
};

class Assembler {
 public:
  Assembler(const GrammarBundle& grammar, const AssemblerOptions& options)
      : grammar_(grammar), spec_(grammar.core()), options_(options) {}

  AssemblyResult Run(std::string_view text);

 private:
  AssemblyResult Assemble(std::string_view text);

  void Diag(const TextToken& at, std::string message) {
    diags_.push_back({at.line, at.column, std::move(message)});
  }
  void Diag(std::size_t line, std::size_t column, std::string message) {
    diags_.push_back({line, column, std::move(message)});
  }

  void Parse(std::string_view text);
  void ReserveNumericNames();
  void ResolveSymbols();
  void CollectTypes();
  std::optional<Instruction> Encode(const ParsedLine& line);
  void Place(const ParsedLine& line, Instruction inst);
  Id IdOf(const TextToken& tok) const {
    auto id = symbols_.Find(tok.text);
    return id ? *id : Id();
  }

  const GrammarBundle& grammar_;
  const GrammarSpec& spec_;
  AssemblerOptions options_;
  HeaderSeed seed_;
  std::vector<ParsedLine> lines_;
  std::vector<AssemblerDiagnostic> diags_;
  std::optional<Module> module_;
  SymbolTable symbols_;
  OperandContext context_;
  std::map<Word, TextToken> first_mention_;
  std::set<Word> defined_;
  std::set<std::string> declared_;
  Function* function_ = nullptr;
  Block* block_ = nullptr;
  TextToken function_token_;
};

void Assembler::Parse(std::string_view text) {
  bool seen_instruction = false;
  for (const LogicalLine& logical : SplitLines(text)) {
    std::optional<TextInstruction> ti;
    try {
      ti = TokenizeLine(logical.text, logical.line);
    } catch (const Error& e) {
      Diag(e.line(), e.column(), e.what());
      continue;
    }
    if (!ti) {
      if (!seen_instruction) ReadHeaderComment(logical.text, seed_);
      continue;
    }
    seen_instruction = true;
    if (ti->result_name) declared_.insert(*ti->result_name);
    ParsedLine line{std::move(*ti), nullptr, std::nullopt};
    const std::string& name = line.text.opcode.text;
    if (std::string_view(name).substr(0, kUnknownPrefix.size()) ==
            kUnknownPrefix &&
        name.back() == ')') {
      auto number = ParseDecimal(std::string_view(name).substr(
          kUnknownPrefix.size(), name.size() - kUnknownPrefix.size() - 1));
      if (!number || *number > 0xFFFF) {
        Diag(line.text.opcode, "invalid opcode number in '" + name + "'");
        continue;
      }
      line.unknown_opcode = static_cast<std::uint16_t>(*number);
      line.def = spec_.Find(*line.unknown_opcode);
    } else {
      line.def = spec_.Find(name);
      if (!line.def) {
        Diag(line.text.opcode, "unknown opcode '" + name + "'");
        continue;
      }
    }
    lines_.push_back(std::move(line));
  }
}

void Assembler::ReserveNumericNames() {
  auto reserve = [this](const std::string& name, std::size_t line,
                        std::size_t column) {
    auto value = ParseDecimal(name);
    if (!value || *value == 0 || *value > kMaxId) {
      Diag(line, column, "id %" + name + " is out of range");
      return;
    }
    module_->ReserveId(Id(static_cast<Word>(*value)));
  };
  for (const ParsedLine& line : lines_) {
    const TextInstruction& ti = line.text;
    if (ti.result_name && IsNumericName(*ti.result_name)) {
      reserve(*ti.result_name, ti.opcode.line, ti.result_column);
    }
    for (const TextToken& tok : ti.operands) {
      if (!tok.quoted && tok.text.size() > 1 && tok.text[0] == '%' &&
          IsNumericName(std::string_view(tok.text).substr(1))) {
        reserve(tok.text.substr(1), tok.line, tok.column);
      }
    }
  }
}

void Assembler::ResolveSymbols() {
  auto resolve = [this](std::string_view name, const TextToken& at) {
    try {
      Id id = symbols_.Resolve(*module_, name);
      first_mention_.emplace(id.value, at);
    } catch (const Error& e) {
      Diag(at, e.what());
    }
  };
  for (const ParsedLine& line : lines_) {
    const TextInstruction& ti = line.text;
    if (ti.result_name) {
      TextToken at{*ti.result_name, false, ti.opcode.line, ti.result_column};
      resolve(*ti.result_name, at);
    }
    for (const TextToken& tok : ti.operands) {
      if (!tok.quoted && !tok.text.empty() && tok.text[0] == '%') {
        resolve(tok.text, tok);
      }
    }
  }
}

void Assembler::CollectTypes() {
  for (const ParsedLine& line : lines_) {
    const TextInstruction& ti = line.text;
    if (!line.def || line.unknown_opcode || !ti.result_name) continue;
    auto result = symbols_.Find(*ti.result_name);
    if (!result) continue;
    const auto& ops = ti.operands;
    const std::uint16_t opcode = line.def->opcode;
    if (opcode == op::kTypeInt && ops.size() == 2) {
      auto width = ParseWord(ops[0].text);
      auto sign = ParseWord(ops[1].text);
      if (width && sign) {
        context_.numeric_types[result->value] = {NumericType::Kind::kInt,
                                                 *width, *sign != 0};
      }
    } else if (opcode == op::kTypeFloat && !ops.empty()) {
      if (auto width = ParseWord(ops[0].text)) {
        context_.numeric_types[result->value] = {NumericType::Kind::kFloat,
                                                 *width, true};
      }
    } else if (opcode == op::kExtInstImport && !ops.empty() &&
               ops[0].quoted) {
      context_.ext_sets[result->value] = ops[0].text;
    } else if (line.def->HasResultType() && !ops.empty() &&
               !ops[0].quoted && !ops[0].text.empty() &&
               ops[0].text[0] == '%') {
      context_.value_types[result->value] = IdOf(ops[0]).value;
    }
  }
}

std::optional<Instruction> Assembler::Encode(const ParsedLine& line) {
  const TextInstruction& ti = line.text;
  const auto& tokens = ti.operands;
  Instruction inst;
  inst.opcode = line.unknown_opcode ? *line.unknown_opcode : line.def->opcode;

  if (line.unknown_opcode) {
    if (ti.result_name) {
      Diag(ti.opcode.line, ti.result_column,
           "raw instructions cannot name a result");
      return std::nullopt;
    }
    for (const TextToken& tok : tokens) {
      auto word = tok.quoted ? std::nullopt : ParseWord(tok.text);
      if (!word) {
        Diag(tok, "expected a word, got '" + tok.text + "'");
        return std::nullopt;
      }
      inst.operands.push_back(*word);
    }
    return inst;
  }

  const InstructionDef& def = *line.def;
  inst.class_attr = def.class_attr;
  if (ti.result_name && !def.HasResult()) {
    Diag(ti.opcode.line, ti.result_column,
         def.name + " does not produce a result");
    return std::nullopt;
  }
  if (!ti.result_name && def.HasResult()) {
    Diag(ti.opcode, def.name + " requires a result id");
    return std::nullopt;
  }

  auto& words = inst.operands;
  std::deque<OperandSlot> queue(def.operands.begin(), def.operands.end());
  std::size_t t = 0;

  auto end_token = [&]() {
    const TextToken& last = tokens.empty() ? ti.opcode : tokens.back();
    return TextToken{"", false, last.line,
                     last.column + last.text.size() + (last.quoted ? 2 : 0)};
  };
  auto push_front_all = [&queue](auto begin, auto end, bool skip_results) {
    std::vector<OperandSlot> slots;
    for (auto it = begin; it != end; ++it) {
      if (skip_results &&
          (it->kind == "IdResult" || it->kind == "IdResultType")) {
        continue;
      }
      slots.push_back(*it);
    }
    queue.insert(queue.begin(), slots.begin(), slots.end());
  };
  auto enum_value = [&](const std::string& kind, std::string_view name,
                        const TextToken& tok) -> std::optional<Word> {
    if (const EnumerantDef* e = spec_.FindEnumerant(kind, name)) {
      return e->value;
    }
    if (auto word = ParseWord(name)) return word;
    Diag(tok, "unknown " + kind + " enumerant '" + std::string(name) + "'");
    return std::nullopt;
  };

  // Consumes tokens for one instance of slot. False aborts the line.
  auto parse_one = [&](const OperandSlot& slot) -> bool {
    const std::string& k = slot.kind;
    const OperandKindDef* kind = spec_.FindKind(k);
    if (kind && kind->category == OperandCategory::kComposite) {
      std::vector<OperandSlot> bases;
      for (const std::string& base : kind->bases) {
        OperandSlot s{base, "", Quantifier::kSingle};
        if (inst.opcode == op::kSwitch && base == "LiteralInteger") {
          s.kind = "LiteralContextDependentNumber";
        }
        bases.push_back(s);
      }
      queue.insert(queue.begin(), bases.begin(), bases.end());
      return true;
    }
    const TextToken& tok = tokens[t++];
    if (k == "IdResult") {
      --t;  // taken from the left-hand side
      Id id = symbols_.Find(*ti.result_name).value_or(Id());
      words.push_back(id.value);
      inst.result_id = id;
      return true;
    }
    if (kind && kind->category == OperandCategory::kId) {
      if (tok.quoted || tok.text.empty() || tok.text[0] != '%') {
        Diag(tok, "expected an id for " + k + ", got '" + tok.text + "'");
        return false;
      }
      Id id = IdOf(tok);
      words.push_back(id.value);
      inst.referenced_ids.push_back(id);
      if (k == "IdResultType") inst.result_type = id;
      return true;
    }
    if (k == "LiteralString") {
      if (!tok.quoted) {
        Diag(tok, "expected a quoted string, got '" + tok.text + "'");
        return false;
      }
      try {
        AppendStringLiteral(tok.text, words);
      } catch (const Error& e) {
        Diag(tok, e.what());
        return false;
      }
      return true;
    }
    if (tok.quoted) {
      Diag(tok, "unexpected string for " + k);
      return false;
    }
    if (k == "LiteralContextDependentNumber") {
      const Word type_id =
          inst.opcode == op::kSwitch
              ? [&]() -> Word {
                  auto v = context_.value_types.find(words.at(0));
                  return v == context_.value_types.end() ? 0 : v->second;
                }()
              : (words.empty() ? 0 : words[0]);
      auto type = context_.numeric_types.find(type_id);
      if (type == context_.numeric_types.end()) {
        Diag(tok, "cannot resolve the literal width of '" + tok.text + "'");
        return false;
      }
      std::string error;
      auto parsed = ParseNumber(tok.text, type->second, error);
      if (!parsed) {
        Diag(tok, error);
        return false;
      }
      words.insert(words.end(), parsed->begin(), parsed->end());
      return true;
    }
    if (k == "LiteralExtInstInteger") {
      auto set = context_.ext_sets.find(words.size() > 2 ? words[2] : 0);
      const bool opencl =
          set != context_.ext_sets.end() && set->second == "OpenCL.std";
      const ExtInstDef* ext = nullptr;
      if (opencl) ext = grammar_.opencl().Find(std::string_view(tok.text));
      std::optional<Word> number;
      if (ext) {
        number = ext->number;
      } else {
        number = ParseWord(tok.text);
        if (number && opencl) ext = grammar_.opencl().Find(*number);
      }
      if (!number) {
        Diag(tok, "unknown extended instruction '" + tok.text + "'");
        return false;
      }
      words.push_back(*number);
      if (ext) {
        queue.clear();
        push_front_all(ext->operands.begin(), ext->operands.end(), false);
      }
      return true;
    }
    if (k == "LiteralSpecConstantOpInteger") {
      const InstructionDef* inner = spec_.Find("Op" + tok.text);
      if (!inner) inner = spec_.Find(std::string_view(tok.text));
      std::optional<Word> number;
      if (inner) {
        number = inner->opcode;
      } else if ((number = ParseWord(tok.text)) && *number <= 0xFFFF) {
        inner = spec_.Find(static_cast<std::uint16_t>(*number));
      }
      if (!number) {
        Diag(tok, "unknown opcode '" + tok.text + "'");
        return false;
      }
      words.push_back(*number);
      if (inner) {
        queue.clear();
        push_front_all(inner->operands.begin(), inner->operands.end(), true);
      }
      return true;
    }
    if (kind && kind->category == OperandCategory::kValueEnum) {
      auto value = enum_value(k, tok.text, tok);
      if (!value) return false;
      words.push_back(*value);
      if (const EnumerantDef* e = spec_.FindEnumerant(k, *value)) {
        push_front_all(e->parameters.begin(), e->parameters.end(), false);
      }
      return true;
    }
    if (kind && kind->category == OperandCategory::kBitEnum) {
      Word mask = 0;
      std::string_view rest = tok.text;
      while (true) {
        auto bar = rest.find('|');
        auto value = enum_value(k, rest.substr(0, bar), tok);
        if (!value) return false;
        mask |= *value;
        if (bar == std::string_view::npos) break;
        rest.remove_prefix(bar + 1);
      }
      words.push_back(mask);
      std::vector<OperandSlot> params;
      for (int bit = 0; bit < 32; ++bit) {
        const Word value = Word{1} << bit;
        if (!(mask & value)) continue;
        if (const EnumerantDef* e = spec_.FindEnumerant(k, value)) {
          params.insert(params.end(), e->parameters.begin(),
                        e->parameters.end());
        }
      }
      queue.insert(queue.begin(), params.begin(), params.end());
      return true;
    }
    auto word = ParseWord(tok.text);
    if (!word) {
      Diag(tok, "expected an integer for " + k + ", got '" + tok.text + "'");
      return false;
    }
    words.push_back(*word);
    return true;
  };

  while (!queue.empty()) {
    OperandSlot slot = queue.front();
    queue.pop_front();
    if (slot.kind == "IdResult") {
      if (!parse_one(slot)) return std::nullopt;
      continue;
    }
    switch (slot.quantifier) {
      case Quantifier::kSingle:
        if (t >= tokens.size()) {
          Diag(end_token(),
               def.name + " is missing operand " +
                   (slot.name.empty() ? slot.kind : slot.name));
          return std::nullopt;
        }
        if (!parse_one(slot)) return std::nullopt;
        break;
      case Quantifier::kOptional:
        if (t < tokens.size() && !parse_one(slot)) return std::nullopt;
        break;
      case Quantifier::kVariadic:
        if (t < tokens.size()) {
          queue.push_front(slot);
          OperandSlot single = slot;
          single.quantifier = Quantifier::kSingle;
          queue.push_front(single);
        }
        break;
    }
  }
  if (t < tokens.size()) {
    Diag(tokens[t], "unexpected operand '" + tokens[t].text + "' for " +
                        def.name);
    return std::nullopt;
  }
  return inst;
}

void Assembler::Place(const ParsedLine& line, Instruction inst) {
  const TextToken& at = line.text.opcode;
  const Id result = inst.result_id;
  try {
    switch (inst.opcode) {
      case op::kFunction:
        if (function_) {
          Diag(at, "OpFunction inside an unterminated function");
          return;
        }
        function_ = &module_->BeginFunction(std::move(inst));
        function_token_ = at;
        block_ = nullptr;
        break;
      case op::kFunctionEnd:
        if (!function_) {
          Diag(at, "OpFunctionEnd outside a function");
          return;
        }
        function_->Add(std::move(inst));
        function_ = nullptr;
        block_ = nullptr;
        break;
      case op::kLabel:
        if (!function_) {
          Diag(at, "OpLabel outside a function");
          return;
        }
        block_ = &function_->BeginBlock(result);
        break;
      default: {
        if (!function_) {
          module_->Add(std::move(inst));
        } else if (!block_ && line.def &&
                   line.def->name == "OpFunctionParameter") {
          function_->Add(std::move(inst));
        } else if (!block_) {
          Diag(at, at.text + " must follow an OpLabel");
          return;
        } else {
          block_->Add(std::move(inst));
        }
        break;
      }
    }
  } catch (const Error& e) {
    Diag(at, e.what());
    return;
  }
  if (result) defined_.insert(result.value);
}

AssemblyResult Assembler::Run(std::string_view text) {
  AssemblyResult result = Assemble(text);
  std::stable_sort(result.diagnostics.begin(), result.diagnostics.end(),
                   [](const AssemblerDiagnostic& a,
                      const AssemblerDiagnostic& b) {
                     return std::tie(a.line, a.column) <
                            std::tie(b.line, b.column);
                   });
  return result;
}

AssemblyResult Assembler::Assemble(std::string_view text) {
  Parse(text);
  ModuleHeader header;
  if (seed_.version) {
    header.major_version = static_cast<std::uint8_t>(seed_.version->first);
    header.minor_version = static_cast<std::uint8_t>(seed_.version->second);
  } else {
    header.major_version = static_cast<std::uint8_t>(options_.major_version);
    header.minor_version = static_cast<std::uint8_t>(options_.minor_version);
  }
  if (seed_.generator) header.generator = *seed_.generator;
  if (seed_.schema) header.schema = *seed_.schema;
  try {
    module_.emplace(header);
  } catch (const Error& e) {
    Diag(1, 1, e.what());
    return {{}, std::move(diags_)};
  }

  ReserveNumericNames();
  ResolveSymbols();
  CollectTypes();
  for (const ParsedLine& line : lines_) {
    if (auto inst = Encode(line)) Place(line, std::move(*inst));
  }
  if (function_) Diag(function_token_, "function is missing OpFunctionEnd");

  for (const auto& [id, at] : first_mention_) {
    const std::string name =
        at.text[0] == '%' ? at.text.substr(1) : at.text;
    if (!defined_.count(id) && !declared_.count(name)) {
      Diag(at, "%" + name + " is never defined");
    }
  }
  if (!diags_.empty()) return {{}, std::move(diags_)};

  if (seed_.bound && *seed_.bound > module_->ComputeBound()) {
    module_->ReserveId(Id(*seed_.bound - 1));
  }
  AssemblyResult result;
  try {
    result.binary = module_->Serialize();
  } catch (const Error& e) {
    Diag(0, 0, e.what());
    result.binary.clear();
  }
  result.diagnostics = std::move(diags_);
  return result;
}

}  // namespace

std::optional<TextInstruction> TokenizeLine(std::string_view line,
                                            std::size_t line_number) {
  std::vector<TextToken> tokens;
  std::size_t row = line_number;
  std::size_t column = 1;
  std::size_t i = 0;
  auto advance = [&]() {
    if (line[i] == '\n') {
      ++row;
      column = 1;
    } else {
      ++column;
    }
    ++i;
  };
  while (i < line.size()) {
    const char c = line[i];
    if (c == ';') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    TextToken tok;
    tok.line = row;
    tok.column = column;
    if (c == '"') {
      tok.quoted = true;
      advance();
      bool closed = false;
      while (i < line.size()) {
        if (line[i] == '\\' && i + 1 < line.size()) {
          advance();
          tok.text += line[i];
          advance();
        } else if (line[i] == '"') {
          advance();
          closed = true;
          break;
        } else {
          tok.text += line[i];
          advance();
        }
      }
      if (!closed) {
        throw Error(ErrorCode::kSyntax, "unterminated string", tok.line,
                    tok.column);
      }
    } else {
      while (i < line.size() &&
             !std::isspace(static_cast<unsigned char>(line[i])) &&
             line[i] != ';' && line[i] != '"') {
        tok.text += line[i];
        advance();
      }
    }
    tokens.push_back(std::move(tok));
  }
  if (tokens.empty()) return std::nullopt;

  TextInstruction ti;
  std::size_t first = 0;
  const bool assigns = tokens.size() >= 2 && !tokens[1].quoted &&
                       tokens[1].text == "=";
  if (assigns) {
    const TextToken& name = tokens[0];
    if (name.quoted || name.text.size() < 2 || name.text[0] != '%') {
      throw Error(ErrorCode::kSyntax, "expected a result id before '='",
                  name.line, name.column);
    }
    if (tokens.size() < 3) {
      throw Error(ErrorCode::kSyntax, "missing opcode after '='",
                  tokens[1].line, tokens[1].column);
    }
    ti.result_name = name.text.substr(1);
    ti.result_column = name.column;
    first = 2;
  } else if (!tokens[0].quoted && !tokens[0].text.empty() &&
             tokens[0].text[0] == '%') {
    throw Error(ErrorCode::kSyntax, "expected '=' after result id",
                tokens[0].line, tokens[0].column + tokens[0].text.size());
  }
  if (tokens[first].quoted) {
    throw Error(ErrorCode::kSyntax, "expected an opcode name",
                tokens[first].line, tokens[first].column);
  }
  ti.opcode = std::move(tokens[first]);
  ti.operands.assign(std::make_move_iterator(tokens.begin() + first + 1),
                     std::make_move_iterator(tokens.end()));
  return ti;
}

Id SymbolTable::Resolve(Module& m, std::string_view name) {
  if (!name.empty() && name[0] == '%') name.remove_prefix(1);
  if (auto it = by_name_.find(name); it != by_name_.end()) return it->second;
  Id id;
  if (IsNumericName(name)) {
    auto value = ParseDecimal(name);
    if (!value || *value == 0 || *value > kMaxId) {
      throw Error(ErrorCode::kArgument,
                  "id %" + std::string(name) + " is out of range");
    }
    id = Id(static_cast<Word>(*value));
    if (auto taken = by_id_.find(id.value); taken != by_id_.end()) {
      throw Error(ErrorCode::kArgument, "id %" + std::string(name) +
                                            " is already bound to %" +
                                            taken->second);
    }
    m.ReserveId(id);
  } else {
    id = m.NextId();
  }
  by_name_.emplace(std::string(name), id);
  by_id_.emplace(id.value, std::string(name));
  return id;
}

std::optional<Id> SymbolTable::Find(std::string_view name) const {
  if (!name.empty() && name[0] == '%') name.remove_prefix(1);
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

std::string FormatDiagnostic(const AssemblerDiagnostic& d) {
  return std::to_string(d.line) + ":" + std::to_string(d.column) +
         ": error: " + d.message;
}

AssemblyResult AssembleModule(std::string_view text,
                              const GrammarBundle& grammar,
                              const AssemblerOptions& options) {
  Assembler assembler(grammar, options);
  return assembler.Run(text);
}

}  // namespace spvkit
