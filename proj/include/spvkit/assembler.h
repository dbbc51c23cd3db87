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

#ifndef SPVKIT_ASSEMBLER_H_
#define SPVKIT_ASSEMBLER_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spvkit/builder.h"
#include "spvkit/bundle.h"

namespace spvkit {

struct TextToken {
  std::string text;  // unescaped contents for quoted tokens
  bool quoted = false;
  std::size_t line = 0;
  std::size_t column = 0;
};

struct TextInstruction {
  std::optional<std::string> result_name;  // without the leading '%'
  std::size_t result_column = 0;
  TextToken opcode;
  std::vector<TextToken> operands;
};

// Splits one logical line. Returns nullopt for blank and comment lines.
// Quoted strings may span physical lines; line_number is where the logical
// line starts. Throws Error(kSyntax) with a column for unterminated strings
// and malformed result assignments.
std::optional<TextInstruction> TokenizeLine(std::string_view line,
                                            std::size_t line_number = 1);

// Binds "%name" spellings to ids. Numeric names ("%13") pin that id.
class SymbolTable {
 public:
  // Returns the bound id, allocating from m on first mention. Throws
  // Error(kArgument) for a numeric name outside the id range or one already
  // handed to a symbolic name.
  Id Resolve(Module& m, std::string_view name);
  std::optional<Id> Find(std::string_view name) const;
  std::size_t size() const { return by_name_.size(); }
  const std::map<std::string, Id, std::less<>>& bindings() const {
    return by_name_;
  }

 private:
  std::map<std::string, Id, std::less<>> by_name_;
  std::map<Word, std::string> by_id_;
};

struct AssemblerOptions {
  // Used when the text has no "; Version:" comment.
  unsigned major_version = 1;
  unsigned minor_version = 2;
};

struct AssemblerDiagnostic {
  std::size_t line = 0;
  std::size_t column = 0;
  std::string message;
};

std::string FormatDiagnostic(const AssemblerDiagnostic& d);

struct AssemblyResult {
  std::vector<std::uint8_t> binary;  // empty when diagnostics is not
  std::vector<AssemblerDiagnostic> diagnostics;
  bool ok() const { return diagnostics.empty(); }
};

// Assembles a document in the Khronos disassembly dialect. The "; Version",
// "; Generator", "; Bound" and "; Schema" comments, when present, seed the
// header; a bound smaller than the module needs is ignored.
AssemblyResult AssembleModule(std::string_view text,
                              const GrammarBundle& grammar =
                                  GrammarBundle::Default(),
                              const AssemblerOptions& options = {});

}  // namespace spvkit

#endif  // SPVKIT_ASSEMBLER_H_
