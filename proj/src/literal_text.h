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

#ifndef SPVKIT_SRC_LITERAL_TEXT_H_
#define SPVKIT_SRC_LITERAL_TEXT_H_

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "spvkit/binary.h"

namespace spvkit {

// Type governing a context-dependent literal.
struct NumericType {
  enum class Kind { kInt, kFloat };
  Kind kind = Kind::kInt;
  unsigned width = 32;
  bool is_signed = false;
};

// Text for a literal occupying words. Floats use the shortest decimal that
// reads back exactly; infinities and NaNs use hex floats with the maximum
// exponent, e.g. "0x1p+128" or "-0x1.8p+128".
std::string FormatNumber(std::span<const Word> words, const NumericType& type);

// Parses a literal for type. Returns nullopt and fills error on failure.
std::optional<std::vector<Word>> ParseNumber(std::string_view token,
                                             const NumericType& type,
                                             std::string& error);

// Parses an unsigned 32-bit literal in decimal or 0x hex.
std::optional<Word> ParseWord(std::string_view token);

std::uint16_t FloatToHalf(float value);
float HalfToFloat(std::uint16_t bits);

}  // namespace spvkit

#endif  // SPVKIT_SRC_LITERAL_TEXT_H_
