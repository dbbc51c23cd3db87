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

// Build-time generator: reads the pinned grammar and the templates and
// writes the typed instruction API, operand kinds, mapper tables and the
// embedded grammar source into <out>/generated/.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "spvkit/error.h"
#include "spvkit/generator.h"
#include "spvkit/grammar.h"

namespace fs = std::filesystem;

namespace {

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Leaves unchanged files alone so dependents are not rebuilt.
void WriteIfChanged(const fs::path& path, const std::string& text) {
  if (fs::exists(path)) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    if (s.str() == text) return;
  }
  fs::create_directories(path.parent_path());
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string RawChunks(const std::string& text) {
  constexpr std::size_t kChunk = 4096;
  std::string out;
  for (std::size_t i = 0; i < text.size(); i += kChunk) {
    out += "    R\"spvkit(" + text.substr(i, kChunk) + ")spvkit\"\n";
  }
  if (out.empty()) out = "    \"\"\n";
  return out;
}

std::string EmbeddedGrammarSource(const std::string& banner,
                                  const std::string& core,
                                  const std::string& opencl) {
  std::string out = banner + "\n#include \"spvkit/generated_tables.h\"\n\n";
  out += "namespace spvkit::generated {\nnamespace {\n\n";
  out += "constexpr char kCore[] =\n" + RawChunks(core) + ";\n\n";
  out += "constexpr char kOpenCL[] =\n" + RawChunks(opencl) + ";\n\n";
  out += "}  // namespace\n\n";
  out += "std::string_view EmbeddedCoreGrammar() {\n";
  out += "  return {kCore, sizeof(kCore) - 1};\n}\n\n";
  out += "std::string_view EmbeddedOpenCLGrammar() {\n";
  out += "  return {kOpenCL, sizeof(kOpenCL) - 1};\n}\n\n";
  out += "}  // namespace spvkit::generated\n";
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generate the typed SPIR-V API from a grammar snapshot"};
  std::string grammar_dir, template_dir, out_dir;
  app.add_option("--grammar-dir", grammar_dir, "Pinned grammar directory")
      ->required();
  app.add_option("--templates", template_dir, "Template directory")
      ->required();
  app.add_option("--out", out_dir, "Output root")->required();
  CLI11_PARSE(app, argc, argv);

  try {
    const std::string core_text =
        ReadFile(fs::path(grammar_dir) / "spirv.core.grammar.json");
    const std::string opencl_text =
        ReadFile(fs::path(grammar_dir) / "extinst.opencl.std.100.grammar.json");
    const spvkit::GrammarSpec spec = spvkit::LoadCoreGrammar(core_text);
    const spvkit::ExtInstGrammar ext = spvkit::LoadExtendedGrammar(opencl_text);
    const spvkit::TemplateSet templates = spvkit::LoadTemplates(template_dir);

    const fs::path root = fs::path(out_dir) / "generated";
    std::size_t count = 0;
    for (const auto& list :
         {spvkit::GenerateInstructionDefinitions(spec, templates),
          spvkit::GenerateOperandKindDefinitions(spec, templates),
          spvkit::GenerateMapperArtifacts(spec, ext, templates)}) {
      for (const auto& artifact : list) {
        WriteIfChanged(root / artifact.RelativePath(), artifact.source_text);
        ++count;
      }
    }
    WriteIfChanged(root / "spv.h",
                   spvkit::GenerateUmbrellaHeader(spec, templates));
    std::string banner = "// Generated by spvkit-gen. Do not edit.";
    WriteIfChanged(root / "embedded_grammar.cpp",
                   EmbeddedGrammarSource(banner, core_text, opencl_text));
    std::cout << "spvkit-gen: " << count << " artifacts in " << root.string()
              << "\n";
  } catch (const std::exception& e) {
    std::cerr << "spvkit-gen: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
