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

#ifndef SPVKIT_SPV_H_
#define SPVKIT_SPV_H_

// The generated typed instruction API (namespace spvkit::spv) and the
// operand base types it builds on.

#include "spvkit/operands.h"
#include "generated/spv.h"

namespace spvkit::spv {

using spvkit::IdMemorySemantics;
using spvkit::IdRef;
using spvkit::IdResult;
using spvkit::IdResultType;
using spvkit::IdScope;
using spvkit::LiteralContextDependentNumber;
using spvkit::LiteralInteger;
using spvkit::LiteralSpecConstantOpInteger;
using spvkit::LiteralString;

}  // namespace spvkit::spv

#endif  // SPVKIT_SPV_H_
