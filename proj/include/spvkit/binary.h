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

#ifndef SPVKIT_BINARY_H_
#define SPVKIT_BINARY_H_

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace spvkit {

using Word = std::uint32_t;

inline constexpr Word kMagicNumber = 0x07230203;
inline constexpr std::size_t kHeaderWords = 5;

// Generator word: tool id in the high 16 bits, tool version in the low 16.
inline constexpr Word MakeGeneratorWord(std::uint16_t tool,
                                        std::uint16_t version = 0) {
  return (static_cast<Word>(tool) << 16) | version;
}

inline constexpr std::uint16_t kDefaultGeneratorTool = 32;

struct ModuleHeader {
  Word magic = kMagicNumber;
  std::uint8_t major_version = 1;
  std::uint8_t minor_version = 0;
  Word generator = MakeGeneratorWord(kDefaultGeneratorTool);
  Word bound = 0;
  Word schema = 0;

  Word VersionWord() const {
    return (static_cast<Word>(major_version) << 16) |
           (static_cast<Word>(minor_version) << 8);
  }

  bool operator==(const ModuleHeader&) const = default;
};

struct RawInstruction {
  std::uint16_t opcode = 0;
  std::vector<Word> operands;

  std::size_t WordCount() const { return operands.size() + 1; }

  bool operator==(const RawInstruction&) const = default;
};

struct DecodedModule {
  ModuleHeader header;
  std::vector<RawInstruction> instructions;
  // Set when the input was in the opposite byte order.
  bool byte_swapped = false;
};

enum class Signedness { kUnsigned, kSigned };

// Throws Error(kInternal) for a zero bound.
std::array<Word, kHeaderWords> EncodeHeader(const ModuleHeader& header);

// Throws Error(kEncoding) when the word count overflows 16 bits.
std::vector<Word> EncodeInstruction(const RawInstruction& inst);
void AppendInstruction(const RawInstruction& inst, std::vector<Word>& out);

// Throws Error(kArgument) on an embedded NUL.
std::vector<Word> EncodeStringLiteral(std::string_view text);
void AppendStringLiteral(std::string_view text, std::vector<Word>& out);

// Reads a string literal starting at words[0]. Sets consumed to the number
// of words used. Throws Error(kCorruptOperand) when no terminator is found.
std::string DecodeStringLiteral(std::span<const Word> words,
                                std::size_t& consumed);

// bits holds the value's two's complement or IEEE bit pattern. Widths other
// than 8, 16, 32 and 64 (including 0, "unresolved") throw Error(kCodec).
std::vector<Word> EncodeContextDependentLiteral(
    std::uint64_t bits, unsigned bit_width,
    Signedness signedness = Signedness::kUnsigned);

inline std::size_t LiteralWordCount(unsigned bit_width) {
  return bit_width > 32 ? 2 : 1;
}

std::vector<Word> EncodeModule(const ModuleHeader& header,
                               const std::vector<RawInstruction>& insts);

DecodedModule DecodeModule(std::span<const std::uint8_t> bytes);
DecodedModule DecodeWords(std::span<const Word> words);

// Little-endian byte image of a word stream.
std::vector<std::uint8_t> WordsToBytes(std::span<const Word> words);

}  // namespace spvkit

#endif  // SPVKIT_BINARY_H_
