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

#include "spvkit/bundle.h"

#include <fstream>
#include <sstream>

#include "spvkit/error.h"
#include "spvkit/generated_tables.h"

namespace spvkit {
namespace {

std::string ReadFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kNotFound, "cannot read " + path.string());
  }
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

GrammarBundle::GrammarBundle(GrammarSpec core, ExtInstGrammar opencl) {
  auto data = std::make_shared<Data>();
  data->core = std::move(core);
  data->opencl = std::move(opencl);
  data->tables = GenerateMapperTables(data->core, data->opencl);
  data_ = std::move(data);
}

const GrammarBundle& GrammarBundle::Default() {
  static const GrammarBundle bundle(
      LoadCoreGrammar(generated::EmbeddedCoreGrammar()),
      LoadExtendedGrammar(generated::EmbeddedOpenCLGrammar()));
  return bundle;
}

GrammarBundle GrammarBundle::FromDirectory(const std::filesystem::path& dir) {
  return GrammarBundle(
      LoadCoreGrammar(ReadFile(dir / "spirv.core.grammar.json")),
      LoadExtendedGrammar(
          ReadFile(dir / "extinst.opencl.std.100.grammar.json")));
}

}  // namespace spvkit
