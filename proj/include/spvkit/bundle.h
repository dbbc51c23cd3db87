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

#ifndef SPVKIT_BUNDLE_H_
#define SPVKIT_BUNDLE_H_

#include <filesystem>
#include <memory>

#include "spvkit/generator.h"
#include "spvkit/grammar.h"

namespace spvkit {

// A core grammar, the OpenCL.std grammar and their mapper tables, shared by
// the assembler, disassembler and validator. Cheap to copy.
class GrammarBundle {
 public:
  GrammarBundle(GrammarSpec core, ExtInstGrammar opencl);

  // The grammar the library was generated from.
  static const GrammarBundle& Default();
  // Reads spirv.core.grammar.json and extinst.opencl.std.100.grammar.json.
  static GrammarBundle FromDirectory(const std::filesystem::path& dir);

  const GrammarSpec& core() const { return data_->core; }
  const ExtInstGrammar& opencl() const { return data_->opencl; }
  const MapperTables& tables() const { return data_->tables; }

 private:
  struct Data {
    GrammarSpec core;
    ExtInstGrammar opencl;
    MapperTables tables;
  };
  std::shared_ptr<const Data> data_;
};

}  // namespace spvkit

#endif  // SPVKIT_BUNDLE_H_
