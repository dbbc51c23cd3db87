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

#include "spvkit/generated_tables.h"

namespace spvkit::generated {

const InstructionRecord* FindInstruction(std::uint16_t opcode) {
  auto table = InstructionTable();
  auto it = std::lower_bound(
      table.begin(), table.end(), opcode,
      [](const InstructionRecord& r, std::uint16_t op) { return r.opcode < op; });
  return it != table.end() && it->opcode == opcode ? &*it : nullptr;
}

}  // namespace spvkit::generated
