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

#include "spvkit/cli.h"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "spvkit/assembler.h"
#include "spvkit/disassembler.h"
#include "spvkit/error.h"
#include "spvkit/validator.h"

namespace spvkit {
namespace {

struct CliConfig {
  std::string tool = "dis";
  std::string input;
  std::string legacy_input;
  std::string output;
  std::string color = "auto";
  bool no_header = false;
  bool no_indent = false;
  bool group = false;
  bool no_inline_names = false;
  bool strict = false;
  bool force = false;
};

std::optional<std::string> ReadInput(const std::string& path,
                                     std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  std::ifstream file(path, std::ios::binary);
  if (!file) return std::nullopt;
  return std::string(std::istreambuf_iterator<char>(file), {});
}

bool WriteFile(const std::string& path, std::string_view data) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file.write(data.data(), static_cast<std::streamsize>(data.size()));
  return static_cast<bool>(file);
}

std::span<const std::uint8_t> AsBytes(std::string_view data) {
  return {reinterpret_cast<const std::uint8_t*>(data.data()), data.size()};
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err, bool out_is_terminal) {
  CliConfig cfg;
  CLI::App app{"Assemble, disassemble and validate SPIR-V modules.",
               args.empty() ? "spvkit" : args[0]};
  app.add_option("--tool", cfg.tool, "dis, asm or val")
      ->check(CLI::IsMember({"dis", "asm", "val"}));
  app.add_option("input", cfg.input, "Input file, or - for standard input");
  app.add_option("-d", cfg.legacy_input,
                 "Input file (legacy spelling; the value is optional)")
      ->expected(0, 1);
  app.add_option("-o", cfg.output, "Output file (default: standard output)");
  app.add_flag("--no-header", cfg.no_header, "Omit the header comments");
  app.add_flag("--no-indent", cfg.no_indent, "Do not align result ids");
  app.add_flag("--group", cfg.group, "Separate layout sections");
  app.add_flag("--no-inline-names", cfg.no_inline_names,
               "Show numeric ids instead of OpName names");
  app.add_option("--color", cfg.color, "auto, always or never")
      ->check(CLI::IsMember({"auto", "always", "never"}));
  app.add_flag("--strict", cfg.strict, "Reject unknown opcodes");
  app.add_flag("--force", cfg.force, "Allow binary output to a terminal");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (!cfg.legacy_input.empty()) {
    if (!cfg.input.empty()) {
      err << "error: -d and a positional input are exclusive\n";
      return kExitUsage;
    }
    cfg.input = cfg.legacy_input;
  }
  if (cfg.input.empty()) {
    err << "error: no input file\n" << app.help();
    return kExitUsage;
  }
  std::optional<std::string> data = ReadInput(cfg.input, in);
  if (!data) {
    err << "error: cannot read " << cfg.input << "\n" << app.help();
    return kExitUsage;
  }

  std::optional<GrammarBundle> custom;
  if (const char* dir = std::getenv("SPIRV_GRAMMAR_DIR"); dir && *dir) {
    try {
      custom.emplace(GrammarBundle::FromDirectory(dir));
    } catch (const Error& e) {
      err << "error: SPIRV_GRAMMAR_DIR: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  const GrammarBundle& grammar = custom ? *custom : GrammarBundle::Default();

  auto emit = [&](std::string_view text) {
    if (cfg.output.empty()) {
      out << text;
      return true;
    }
    if (!WriteFile(cfg.output, text)) {
      err << "error: cannot write " << cfg.output << "\n";
      return false;
    }
    return true;
  };

  if (cfg.tool == "dis") {
    DisassemblerOptions opts;
    opts.highlight = cfg.color == "always" ||
                     (cfg.color == "auto" && cfg.output.empty() &&
                      out_is_terminal);
    opts.inline_names = !cfg.no_inline_names;
    opts.no_indent = cfg.no_indent;
    opts.group = cfg.group;
    opts.no_header = cfg.no_header;
    opts.strict = cfg.strict;
    std::string text;
    try {
      text = DisassembleToString(AsBytes(*data), opts, grammar);
    } catch (const Error& e) {
      err << cfg.input << ": error: " << ErrorCodeName(e.code()) << ": "
          << e.what() << "\n";
      return kExitDiagnostics;
    }
    return emit(text) ? kExitSuccess : kExitDiagnostics;
  }

  if (cfg.tool == "asm") {
    if (cfg.output.empty() && out_is_terminal && !cfg.force) {
      err << "error: refusing to write binary to a terminal; use -o or "
             "--force\n";
      return kExitUsage;
    }
    AssemblyResult result = AssembleModule(*data, grammar);
    for (const AssemblerDiagnostic& d : result.diagnostics) {
      err << cfg.input << ":" << FormatDiagnostic(d) << "\n";
    }
    if (!result.ok()) return kExitDiagnostics;
    std::string_view bytes(reinterpret_cast<const char*>(result.binary.data()),
                           result.binary.size());
    return emit(bytes) ? kExitSuccess : kExitDiagnostics;
  }

  std::vector<Diagnostic> diags = ValidateModule(AsBytes(*data), grammar);
  std::ostringstream report;
  for (const Diagnostic& d : diags) report << FormatDiagnostic(d) << "\n";
  if (!emit(report.str())) return kExitDiagnostics;
  return HasErrors(diags) ? kExitDiagnostics : kExitSuccess;
}

}  // namespace spvkit
