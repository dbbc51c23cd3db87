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

#include "spvkit/binary.h"

#include <cstdio>

#include "spvkit/error.h"

namespace spvkit {
namespace {

Word ByteSwap(Word w) {
  return ((w & 0xFFu) << 24) | ((w & 0xFF00u) << 8) | ((w >> 8) & 0xFF00u) |
         (w >> 24);
}

std::string Hex(Word w) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "0x%08X", w);
  return buf;
}

}  // namespace

std::array<Word, kHeaderWords> EncodeHeader(const ModuleHeader& header) {
  if (header.bound == 0) {
    throw Error(ErrorCode::kInternal,
                "header bound is 0; it must be computed before encoding");
  }
  return {header.magic, header.VersionWord(), header.generator, header.bound,
          header.schema};
}

void AppendInstruction(const RawInstruction& inst, std::vector<Word>& out) {
  const std::size_t count = inst.WordCount();
  if (count > 0xFFFF) {
    throw Error(ErrorCode::kEncoding,
                "instruction with opcode " + std::to_string(inst.opcode) +
                    " needs " + std::to_string(count) +
                    " words; the limit is 65535");
  }
  out.push_back((static_cast<Word>(count) << 16) | inst.opcode);
  out.insert(out.end(), inst.operands.begin(), inst.operands.end());
}

std::vector<Word> EncodeInstruction(const RawInstruction& inst) {
  std::vector<Word> out;
  out.reserve(inst.WordCount());
  AppendInstruction(inst, out);
  return out;
}

void AppendStringLiteral(std::string_view text, std::vector<Word>& out) {
  if (text.find('\0') != std::string_view::npos) {
    throw Error(ErrorCode::kArgument,
                "string literal contains an embedded NUL byte");
  }
  const std::size_t words = text.size() / 4 + 1;
  const std::size_t first = out.size();
  out.resize(first + words, 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    out[first + i / 4] |= static_cast<Word>(static_cast<unsigned char>(text[i]))
                          << (8 * (i % 4));
  }
}

std::vector<Word> EncodeStringLiteral(std::string_view text) {
  std::vector<Word> out;
  AppendStringLiteral(text, out);
  return out;
}

std::string DecodeStringLiteral(std::span<const Word> words,
                                std::size_t& consumed) {
  std::string out;
  for (std::size_t i = 0; i < words.size(); ++i) {
    for (int b = 0; b < 4; ++b) {
      char c = static_cast<char>((words[i] >> (8 * b)) & 0xFF);
      if (c == '\0') {
        consumed = i + 1;
        return out;
      }
      out.push_back(c);
    }
  }
  throw Error(ErrorCode::kCorruptOperand,
              "string literal is not NUL-terminated");
}

std::vector<Word> EncodeContextDependentLiteral(std::uint64_t bits,
                                                unsigned bit_width,
                                                Signedness signedness) {
  switch (bit_width) {
    case 64:
      return {static_cast<Word>(bits), static_cast<Word>(bits >> 32)};
    case 32:
      return {static_cast<Word>(bits)};
    case 8:
    case 16: {
      const Word mask = (Word{1} << bit_width) - 1;
      Word low = static_cast<Word>(bits) & mask;
      if (signedness == Signedness::kSigned &&
          (low & (Word{1} << (bit_width - 1)))) {
        low |= ~mask;
      }
      return {low};
    }
    default:
      throw Error(ErrorCode::kCodec,
                  bit_width == 0
                      ? std::string("literal width is unresolved")
                      : "unsupported literal width " +
                            std::to_string(bit_width));
  }
}

std::vector<Word> EncodeModule(const ModuleHeader& header,
                               const std::vector<RawInstruction>& insts) {
  auto head = EncodeHeader(header);
  std::vector<Word> out(head.begin(), head.end());
  for (const RawInstruction& inst : insts) AppendInstruction(inst, out);
  return out;
}

DecodedModule DecodeWords(std::span<const Word> input) {
  if (input.size() < kHeaderWords) {
    throw Error(ErrorCode::kTruncatedStream,
                "stream holds " + std::to_string(input.size()) +
                    " words; a header needs 5");
  }
  DecodedModule m;
  std::vector<Word> swapped;
  std::span<const Word> words = input;
  if (input[0] != kMagicNumber) {
    if (ByteSwap(input[0]) != kMagicNumber) {
      throw Error(ErrorCode::kNotSpirv,
                  "bad magic number " + Hex(input[0]));
    }
    swapped.reserve(input.size());
    for (Word w : input) swapped.push_back(ByteSwap(w));
    words = swapped;
    m.byte_swapped = true;
  }
  m.header.magic = words[0];
  m.header.major_version = static_cast<std::uint8_t>((words[1] >> 16) & 0xFF);
  m.header.minor_version = static_cast<std::uint8_t>((words[1] >> 8) & 0xFF);
  m.header.generator = words[2];
  m.header.bound = words[3];
  m.header.schema = words[4];

  std::size_t pos = kHeaderWords;
  while (pos < words.size()) {
    const Word first = words[pos];
    const std::size_t count = first >> 16;
    if (count == 0) {
      throw Error(ErrorCode::kCorruptStream,
                  "instruction at word " + std::to_string(pos) +
                      " has word count 0");
    }
    if (pos + count > words.size()) {
      throw Error(ErrorCode::kTruncatedStream,
                  "instruction at word " + std::to_string(pos) + " needs " +
                      std::to_string(count) + " words but only " +
                      std::to_string(words.size() - pos) + " remain");
    }
    RawInstruction inst;
    inst.opcode = static_cast<std::uint16_t>(first & 0xFFFF);
    inst.operands.assign(words.begin() + pos + 1, words.begin() + pos + count);
    m.instructions.push_back(std::move(inst));
    pos += count;
  }
  return m;
}

DecodedModule DecodeModule(std::span<const std::uint8_t> bytes) {
  if (bytes.size() % 4 != 0 || bytes.size() < kHeaderWords * 4) {
    throw Error(ErrorCode::kTruncatedStream,
                "stream of " + std::to_string(bytes.size()) +
                    " bytes is not a whole number of words of at least a "
                    "header");
  }
  std::vector<Word> words(bytes.size() / 4);
  for (std::size_t i = 0; i < words.size(); ++i) {
    words[i] = static_cast<Word>(bytes[4 * i]) |
               static_cast<Word>(bytes[4 * i + 1]) << 8 |
               static_cast<Word>(bytes[4 * i + 2]) << 16 |
               static_cast<Word>(bytes[4 * i + 3]) << 24;
  }
  return DecodeWords(words);
}

std::vector<std::uint8_t> WordsToBytes(std::span<const Word> words) {
  std::vector<std::uint8_t> out;
  out.reserve(words.size() * 4);
  for (Word w : words) {
    out.push_back(static_cast<std::uint8_t>(w));
    out.push_back(static_cast<std::uint8_t>(w >> 8));
    out.push_back(static_cast<std::uint8_t>(w >> 16));
    out.push_back(static_cast<std::uint8_t>(w >> 24));
  }
  return out;
}

}  // namespace spvkit
