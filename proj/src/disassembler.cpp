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

#include "spvkit/disassembler.h"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "literal_text.h"
#include "operand_walk.h"
#include "spvkit/builder.h"
#include "spvkit/error.h"

namespace spvkit {

struct FormatContext::State {
  std::unordered_map<Word, std::string> names;
  OperandContext operands;
};

namespace {

enum class Color { kOpcode, kId, kNumber, kString, kEnum, kComment };

std::string Paint(std::string_view text, Color color, bool on) {
  if (!on) return std::string(text);
  std::string_view code;
  switch (color) {
    case Color::kOpcode: code = "\x1b[34m"; break;
    case Color::kId: code = "\x1b[33m"; break;
    case Color::kNumber: code = "\x1b[31m"; break;
    case Color::kString: code = "\x1b[32m"; break;
    case Color::kEnum: code = "\x1b[36m"; break;
    case Color::kComment: code = "\x1b[90m"; break;
  }
  return std::string(code) + std::string(text) + "\x1b[0m";
}

std::string Quote(std::string_view text) {
  std::string out = "\"";
  for (char c : text) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string Hex(Word value) {
  std::ostringstream s;
  s << "0x" << std::hex << value;
  return s.str();
}

std::string BitEnumText(const GrammarSpec& spec, std::string_view kind,
                        Word mask) {
  if (mask == 0) {
    const EnumerantDef* none = spec.FindEnumerant(kind, Word{0});
    return none ? none->name : "0";
  }
  std::string out;
  Word unknown = 0;
  for (int bit = 0; bit < 32; ++bit) {
    const Word value = Word{1} << bit;
    if (!(mask & value)) continue;
    if (const EnumerantDef* e = spec.FindEnumerant(kind, value)) {
      if (!out.empty()) out += '|';
      out += e->name;
    } else {
      unknown |= value;
    }
  }
  if (unknown) {
    if (!out.empty()) out += '|';
    out += Hex(unknown);
  }
  return out;
}

struct Rendered {
  std::string result;  // "%name" without color, empty when none
  std::string painted_result;
  std::string body;
};

Rendered Render(const RawInstruction& inst, const FormatContext::State& state,
                const DisassemblerOptions& options,
                const GrammarBundle& grammar) {
  const GrammarSpec& spec = grammar.core();
  const bool hl = options.highlight;
  Rendered out;
  const InstructionDef* def = spec.Find(inst.opcode);
  if (!def) {
    if (options.strict) {
      throw Error(ErrorCode::kUnknownOpcode,
                  "unknown opcode " + std::to_string(inst.opcode));
    }
    out.body = Paint("OpUnknown(" + std::to_string(inst.opcode) + ")",
                     Color::kOpcode, hl);
    for (Word w : inst.operands) {
      out.body += " " + Paint(std::to_string(w), Color::kNumber, hl);
    }
    return out;
  }

  auto name_of = [&state](Word id) {
    auto it = state.names.find(id);
    return "%" + (it == state.names.end() ? std::to_string(id) : it->second);
  };
  const auto& words = inst.operands;
  std::span<const Word> all(words);
  out.body = Paint(def->name, Color::kOpcode, hl);
  for (const ParsedOperand& p : WalkOperands(inst, grammar, state.operands)) {
    const Word w = words[p.offset];
    std::string text;
    switch (p.type) {
      case OperandType::kResultId:
        out.result = name_of(w);
        out.painted_result = Paint(out.result, Color::kId, hl);
        continue;
      case OperandType::kTypeId:
      case OperandType::kId:
        text = Paint(name_of(w), Color::kId, hl);
        break;
      case OperandType::kLiteralInteger:
      case OperandType::kRawWord:
        text = Paint(std::to_string(w), Color::kNumber, hl);
        break;
      case OperandType::kString: {
        std::size_t used = 0;
        text = Paint(Quote(DecodeStringLiteral(all.subspan(p.offset), used)),
                     Color::kString, hl);
        break;
      }
      case OperandType::kNumber:
        text = Paint(FormatNumber(all.subspan(p.offset, p.count), p.number),
                     Color::kNumber, hl);
        break;
      case OperandType::kValueEnum: {
        const EnumerantDef* e = spec.FindEnumerant(p.kind, w);
        text = e ? Paint(e->name, Color::kEnum, hl)
                 : Paint(std::to_string(w), Color::kNumber, hl);
        break;
      }
      case OperandType::kBitEnum:
        text = Paint(BitEnumText(spec, p.kind, w), Color::kEnum, hl);
        break;
      case OperandType::kExtInstNumber: {
        auto set = state.operands.ext_sets.find(words.size() > 2 ? words[2]
                                                                 : 0);
        const ExtInstDef* ext = nullptr;
        if (set != state.operands.ext_sets.end() &&
            set->second == "OpenCL.std") {
          ext = grammar.opencl().Find(w);
        }
        text = ext ? Paint(ext->name, Color::kOpcode, hl)
                   : Paint(std::to_string(w), Color::kNumber, hl);
        break;
      }
      case OperandType::kSpecConstantOpcode: {
        const InstructionDef* inner =
            w <= 0xFFFF ? spec.Find(static_cast<std::uint16_t>(w)) : nullptr;
        text = inner ? Paint(std::string_view(inner->name).substr(2),
                             Color::kOpcode, hl)
                     : Paint(std::to_string(w), Color::kNumber, hl);
        break;
      }
    }
    out.body += " " + text;
  }
  return out;
}

std::string Sanitize(std::string_view raw) {
  std::string out;
  for (char c : raw) {
    const bool ok = std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    out += ok ? c : '_';
  }
  if (!out.empty() && std::isdigit(static_cast<unsigned char>(out[0]))) {
    out.insert(out.begin(), '_');
  }
  return out;
}

// Ids in the order the assembler first meets them in the output text.
std::vector<Word> MentionOrder(
    const std::vector<RawInstruction>& insts,
    const std::vector<std::vector<ParsedOperand>>& parsed) {
  std::vector<Word> order;
  std::set<Word> seen;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    std::vector<Word> line;
    for (const ParsedOperand& p : parsed[i]) {
      const Word w = insts[i].operands[p.offset];
      if (p.type == OperandType::kResultId) {
        line.insert(line.begin(), w);
      } else if (p.type == OperandType::kId ||
                 p.type == OperandType::kTypeId) {
        line.push_back(w);
      }
    }
    for (Word w : line) {
      if (seen.insert(w).second) order.push_back(w);
    }
  }
  return order;
}

// Keeps only friendly names the assembler would map back to the same id:
// symbolic names take ids sequentially in mention order, skipping ids that
// are spelled numerically.
void PinFriendlyNames(const std::vector<Word>& order,
                      std::unordered_map<Word, std::string>& names) {
  while (true) {
    std::set<Word> reserved;
    for (Word id : order) {
      if (!names.count(id)) reserved.insert(id);
    }
    std::vector<Word> demote;
    Word next = 0;
    for (Word id : order) {
      if (!names.count(id)) continue;
      do {
        ++next;
      } while (reserved.count(next));
      if (next != id) demote.push_back(id);
    }
    if (demote.empty()) return;
    for (Word id : demote) names.erase(id);
  }
}

std::unordered_map<Word, std::string> FriendlyNames(
    const std::vector<RawInstruction>& insts) {
  std::unordered_map<Word, std::string> names;
  std::set<std::string> used;
  for (const RawInstruction& inst : insts) {
    if (inst.opcode != op::kName || inst.operands.size() < 2) continue;
    const Word target = inst.operands[0];
    if (names.count(target)) continue;
    std::size_t consumed = 0;
    std::string raw;
    try {
      raw = DecodeStringLiteral(std::span<const Word>(inst.operands).subspan(1),
                                consumed);
    } catch (const Error&) {
      continue;
    }
    std::string base = Sanitize(raw);
    if (base.empty()) continue;
    std::string name = base;
    for (std::size_t n = 0; used.count(name); ++n) {
      name = base + "_" + std::to_string(n);
    }
    used.insert(name);
    names.emplace(target, std::move(name));
  }
  return names;
}

enum class Group { kPreamble, kDebug, kAnnotation, kGlobal, kFunction };

Group GroupOf(std::uint16_t opcode, std::string_view class_attr) {
  Routing r = RouteInstruction(opcode, class_attr);
  if (!r.module_section) return Group::kGlobal;
  switch (*r.module_section) {
    case Section::kDebugSource:
    case Section::kDebugName:
    case Section::kDebugModuleProcessed:
      return Group::kDebug;
    case Section::kAnnotation:
      return Group::kAnnotation;
    case Section::kGlobal:
    case Section::kFunctionDeclaration:
    case Section::kFunctionDefinition:
      return Group::kGlobal;
    default:
      return Group::kPreamble;
  }
}

}  // namespace

FormatContext::FormatContext() : state_(std::make_unique<State>()) {}
FormatContext::~FormatContext() = default;
FormatContext::FormatContext(FormatContext&&) noexcept = default;
FormatContext& FormatContext::operator=(FormatContext&&) noexcept = default;

void FormatContext::SetName(Word id, std::string name) {
  state_->names[id] = std::move(name);
}

std::string FormatContext::NameOf(Word id) const {
  auto it = state_->names.find(id);
  return it == state_->names.end() ? std::to_string(id) : it->second;
}

void FormatContext::Observe(const RawInstruction& inst,
                            const GrammarBundle& grammar) {
  state_->operands.Observe(inst, grammar.core());
}

std::string FormatInstruction(const RawInstruction& inst,
                              const FormatContext& context,
                              const DisassemblerOptions& options,
                              const GrammarBundle& grammar) {
  Rendered r = Render(inst, context.state(), options, grammar);
  return r.result.empty() ? r.body : r.painted_result + " = " + r.body;
}

std::size_t DisassembleModule(std::span<const std::uint8_t> bytes,
                              const DisassemblerOptions& options,
                              std::ostream& sink,
                              const GrammarBundle& grammar) {
  const DecodedModule module = DecodeModule(bytes);
  const auto& insts = module.instructions;
  const GrammarSpec& spec = grammar.core();
  const bool hl = options.highlight;

  // First pass: operand layout, which the name simulation needs.
  std::vector<std::vector<ParsedOperand>> parsed(insts.size());
  {
    OperandContext walk;
    for (std::size_t i = 0; i < insts.size(); ++i) {
      if (spec.Find(insts[i].opcode)) {
        parsed[i] = WalkOperands(insts[i], grammar, walk);
      }
      walk.Observe(insts[i], spec);
    }
  }

  FormatContext context;
  if (options.inline_names) {
    auto names = FriendlyNames(insts);
    PinFriendlyNames(MentionOrder(insts, parsed), names);
    for (auto& [id, name] : names) context.SetName(id, std::move(name));
  }

  std::vector<Rendered> lines;
  lines.reserve(insts.size());
  std::size_t width = 0;
  for (const RawInstruction& inst : insts) {
    lines.push_back(Render(inst, context.state(), options, grammar));
    context.Observe(inst, grammar);
    if (!lines.back().result.empty()) {
      width = std::max(width, lines.back().result.size() + 3);
    }
  }

  std::size_t count = 0;
  if (!options.no_header) {
    const ModuleHeader& h = module.header;
    const std::string header[] = {
        "; SPIR-V",
        "; Version: " + std::to_string(h.major_version) + "." +
            std::to_string(h.minor_version),
        "; Generator: " + std::to_string(h.generator >> 16) + "; " +
            std::to_string(h.generator & 0xFFFF),
        "; Bound: " + std::to_string(h.bound),
        "; Schema: " + std::to_string(h.schema),
    };
    for (const std::string& line : header) {
      sink << Paint(line, Color::kComment, hl) << '\n';
      ++count;
    }
  }

  bool in_function = false;
  std::optional<Group> previous;
  for (std::size_t i = 0; i < insts.size(); ++i) {
    const std::uint16_t opcode = insts[i].opcode;
    if (opcode == op::kFunction) in_function = true;
    if (options.group) {
      const InstructionDef* def = spec.Find(opcode);
      const Group group =
          in_function ? Group::kFunction
                      : GroupOf(opcode, def ? std::string_view(def->class_attr)
                                            : std::string_view());
      if (previous && *previous != group) {
        sink << '\n';
        ++count;
      }
      previous = group;
    }
    if (opcode == op::kFunctionEnd) in_function = false;

    const Rendered& r = lines[i];
    if (options.no_indent) {
      if (!r.result.empty()) sink << r.painted_result << " = ";
    } else if (r.result.empty()) {
      sink << std::string(width, ' ');
    } else {
      sink << std::string(width - r.result.size() - 3, ' ')
           << r.painted_result << " = ";
    }
    sink << r.body << '\n';
    ++count;
  }
  return count;
}

std::string DisassembleToString(std::span<const std::uint8_t> bytes,
                                const DisassemblerOptions& options,
                                const GrammarBundle& grammar) {
  std::ostringstream out;
  DisassembleModule(bytes, options, out, grammar);
  return out.str();
}

std::string StripAnsi(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\x1b' && i + 1 < text.size() && text[i + 1] == '[') {
      i += 2;
      while (i < text.size() &&
             !std::isalpha(static_cast<unsigned char>(text[i]))) {
        ++i;
      }
      continue;
    }
    out += text[i];
  }
  return out;
}

}  // namespace spvkit
