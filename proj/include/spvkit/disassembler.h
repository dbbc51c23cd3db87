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

#ifndef SPVKIT_DISASSEMBLER_H_
#define SPVKIT_DISASSEMBLER_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <unordered_map>

#include "spvkit/binary.h"
#include "spvkit/bundle.h"

namespace spvkit {

struct DisassemblerOptions {
  bool highlight = false;
  bool inline_names = true;
  bool no_indent = false;
  bool group = false;
  bool no_header = false;
  // Unknown opcodes are errors instead of OpUnknown(n) lines.
  bool strict = false;
};

// Per-module state consulted when rendering one instruction.
class FormatContext {
 public:
  FormatContext();
  ~FormatContext();
  FormatContext(FormatContext&&) noexcept;
  FormatContext& operator=(FormatContext&&) noexcept;

  // Display name for id, without '%'. Defaults to the decimal id.
  void SetName(Word id, std::string name);
  std::string NameOf(Word id) const;
  // Records types, value types and extended instruction sets defined by
  // inst. Call in stream order before formatting later instructions.
  void Observe(const RawInstruction& inst, const GrammarBundle& grammar);

  struct State;
  const State& state() const { return *state_; }

 private:
  std::unique_ptr<State> state_;
};

// One instruction as "%name = OpX operands" with no alignment padding.
// Throws Error(kCorruptOperand) when operand words do not fit the grammar
// and Error(kUnknownOpcode) for unknown opcodes in strict mode.
std::string FormatInstruction(const RawInstruction& inst,
                              const FormatContext& context,
                              const DisassemblerOptions& options,
                              const GrammarBundle& grammar =
                                  GrammarBundle::Default());

// Writes the module as text and returns the number of lines written.
// Decode errors propagate as Error.
std::size_t DisassembleModule(std::span<const std::uint8_t> bytes,
                              const DisassemblerOptions& options,
                              std::ostream& sink,
                              const GrammarBundle& grammar =
                                  GrammarBundle::Default());

std::string DisassembleToString(std::span<const std::uint8_t> bytes,
                                const DisassemblerOptions& options = {},
                                const GrammarBundle& grammar =
                                    GrammarBundle::Default());

// Removes ANSI escape sequences.
std::string StripAnsi(std::string_view text);

}  // namespace spvkit

#endif  // SPVKIT_DISASSEMBLER_H_
