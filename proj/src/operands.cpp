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

#include "spvkit/operands.h"

#include <bit>

namespace spvkit {

LiteralContextDependentNumber LiteralContextDependentNumber::Float32(
    float value) {
  return {{std::bit_cast<Word>(value)}};
}

LiteralContextDependentNumber LiteralContextDependentNumber::Float64(
    double value) {
  return {EncodeContextDependentLiteral(std::bit_cast<std::uint64_t>(value),
                                        64)};
}

}  // namespace spvkit
