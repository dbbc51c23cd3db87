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

#include "literal_text.h"

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>

namespace spvkit {
namespace {

struct FloatFormat {
  unsigned mantissa_bits;
  unsigned exponent_bits;
  int special_exponent;  // max finite exponent + 1
};

FloatFormat FormatFor(unsigned width) {
  switch (width) {
    case 16: return {10, 5, 16};
    case 64: return {52, 11, 1024};
    default: return {23, 8, 128};
  }
}

std::uint64_t Bits(std::span<const Word> words, unsigned width) {
  std::uint64_t bits = words.empty() ? 0 : words[0];
  if (width > 32 && words.size() > 1) {
    bits |= static_cast<std::uint64_t>(words[1]) << 32;
  }
  if (width < 64) bits &= (std::uint64_t{1} << width) - 1;
  return bits;
}

template <class T>
std::string ShortestDecimal(T value) {
  char buf[64];
  auto result = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, result.ptr);
}

std::string FormatSpecial(std::uint64_t bits, const FloatFormat& f) {
  const std::uint64_t mantissa =
      bits & ((std::uint64_t{1} << f.mantissa_bits) - 1);
  const bool negative = (bits >> (f.mantissa_bits + f.exponent_bits)) & 1;
  const unsigned shift = (4 - f.mantissa_bits % 4) % 4;
  const unsigned digits = (f.mantissa_bits + shift) / 4;
  std::string hex;
  std::uint64_t aligned = mantissa << shift;
  for (unsigned i = 0; i < digits; ++i) {
    unsigned nibble = (aligned >> (4 * (digits - 1 - i))) & 0xF;
    hex += "0123456789abcdef"[nibble];
  }
  while (!hex.empty() && hex.back() == '0') hex.pop_back();
  std::string out = negative ? "-0x1" : "0x1";
  if (!hex.empty()) out += "." + hex;
  return out + "p+" + std::to_string(f.special_exponent);
}

// Parses "0x1[.hex]p+E" where E is the special exponent into raw bits.
std::optional<std::uint64_t> ParseSpecial(std::string_view body, bool negative,
                                          const FloatFormat& f) {
  const std::string suffix = "p+" + std::to_string(f.special_exponent);
  if (body.size() < suffix.size() ||
      body.substr(body.size() - suffix.size()) != suffix) {
    return std::nullopt;
  }
  body.remove_suffix(suffix.size());
  if (body.substr(0, 3) != "0x1" && body.substr(0, 3) != "0X1") {
    return std::nullopt;
  }
  body.remove_prefix(3);
  std::uint64_t mantissa = 0;
  const unsigned shift = (4 - f.mantissa_bits % 4) % 4;
  const unsigned digits = (f.mantissa_bits + shift) / 4;
  if (!body.empty()) {
    if (body[0] != '.' || body.size() == 1 || body.size() - 1 > digits) {
      return std::nullopt;
    }
    std::uint64_t value = 0;
    auto r = std::from_chars(body.data() + 1, body.data() + body.size(), value,
                             16);
    if (r.ec != std::errc() || r.ptr != body.data() + body.size()) {
      return std::nullopt;
    }
    value <<= 4 * (digits - (body.size() - 1));
    if (value & ((std::uint64_t{1} << shift) - 1)) return std::nullopt;
    mantissa = value >> shift;
  }
  const std::uint64_t exponent_mask = (std::uint64_t{1} << f.exponent_bits) - 1;
  std::uint64_t bits = (exponent_mask << f.mantissa_bits) | mantissa;
  if (negative) bits |= std::uint64_t{1} << (f.mantissa_bits + f.exponent_bits);
  return bits;
}

template <class T>
bool ParseFloat(std::string_view text, T& value) {
  std::chars_format format = std::chars_format::general;
  if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    format = std::chars_format::hex;
  }
  if (text.empty()) return false;
  auto r = std::from_chars(text.data(), text.data() + text.size(), value,
                           format);
  return r.ec == std::errc() && r.ptr == text.data() + text.size();
}

std::vector<Word> ToWords(std::uint64_t bits, unsigned width) {
  if (width > 32) {
    return {static_cast<Word>(bits), static_cast<Word>(bits >> 32)};
  }
  return {static_cast<Word>(bits)};
}

}  // namespace

float HalfToFloat(std::uint16_t bits) {
  const std::uint32_t sign = static_cast<std::uint32_t>(bits & 0x8000) << 16;
  const std::uint32_t exponent = (bits >> 10) & 0x1F;
  const std::uint32_t mantissa = bits & 0x3FF;
  if (exponent == 0) {
    float magnitude = std::ldexp(static_cast<float>(mantissa), -24);
    return sign ? -magnitude : magnitude;
  }
  if (exponent == 31) {
    return std::bit_cast<float>(sign | 0x7F800000u | (mantissa << 13));
  }
  return std::bit_cast<float>(sign | ((exponent - 15 + 127) << 23) |
                              (mantissa << 13));
}

std::uint16_t FloatToHalf(float value) {
  const std::uint32_t f = std::bit_cast<std::uint32_t>(value);
  const std::uint16_t sign = static_cast<std::uint16_t>((f >> 16) & 0x8000);
  const std::uint32_t magnitude = f & 0x7FFFFFFF;
  if (magnitude >= 0x7F800000) {
    if (magnitude == 0x7F800000) return sign | 0x7C00;
    std::uint16_t nan = static_cast<std::uint16_t>((magnitude >> 13) & 0x3FF);
    if (nan == 0) nan = 0x200;
    return sign | 0x7C00 | nan;
  }
  if (magnitude >= 0x477FF000) return sign | 0x7C00;
  if (magnitude < 0x38800000) {
    float scaled = std::bit_cast<float>(magnitude) * 16777216.0f;
    return sign | static_cast<std::uint16_t>(std::nearbyint(scaled));
  }
  std::uint32_t half = ((((magnitude >> 23) - 127 + 15)) << 10) |
                       ((magnitude & 0x7FFFFF) >> 13);
  const std::uint32_t rest = magnitude & 0x1FFF;
  if (rest > 0x1000 || (rest == 0x1000 && (half & 1))) ++half;
  return sign | static_cast<std::uint16_t>(half);
}

std::string FormatNumber(std::span<const Word> words, const NumericType& type) {
  const std::uint64_t bits = Bits(words, type.width);
  if (type.kind == NumericType::Kind::kInt) {
    if (type.is_signed && type.width < 64 &&
        (bits >> (type.width - 1)) & 1) {
      std::uint64_t extended = bits | (~std::uint64_t{0} << type.width);
      return std::to_string(static_cast<std::int64_t>(extended));
    }
    if (type.is_signed) return std::to_string(static_cast<std::int64_t>(bits));
    return std::to_string(bits);
  }
  const FloatFormat f = FormatFor(type.width);
  const std::uint64_t exponent =
      (bits >> f.mantissa_bits) & ((std::uint64_t{1} << f.exponent_bits) - 1);
  if (exponent == (std::uint64_t{1} << f.exponent_bits) - 1) {
    return FormatSpecial(bits, f);
  }
  switch (type.width) {
    case 16:
      return ShortestDecimal(HalfToFloat(static_cast<std::uint16_t>(bits)));
    case 64:
      return ShortestDecimal(std::bit_cast<double>(bits));
    default:
      return ShortestDecimal(std::bit_cast<float>(static_cast<Word>(bits)));
  }
}

std::optional<std::vector<Word>> ParseNumber(std::string_view token,
                                             const NumericType& type,
                                             std::string& error) {
  const bool negative = !token.empty() && token[0] == '-';
  std::string_view body = negative ? token.substr(1) : token;
  if (body.empty()) {
    error = "expected a number";
    return std::nullopt;
  }
  if (type.kind == NumericType::Kind::kFloat) {
    const FloatFormat f = FormatFor(type.width);
    if (auto special = ParseSpecial(body, negative, f)) {
      return ToWords(*special, type.width);
    }
    if (type.width == 64) {
      double v;
      if (!ParseFloat(body, v)) {
        error = "invalid floating-point literal '" + std::string(token) + "'";
        return std::nullopt;
      }
      return ToWords(std::bit_cast<std::uint64_t>(negative ? -v : v), 64);
    }
    float v;
    if (!ParseFloat(body, v)) {
      error = "invalid floating-point literal '" + std::string(token) + "'";
      return std::nullopt;
    }
    if (negative) v = -v;
    if (type.width == 16) return ToWords(FloatToHalf(v), 16);
    return ToWords(std::bit_cast<Word>(v), 32);
  }

  std::uint64_t magnitude = 0;
  const bool hex = body.size() > 2 && body[0] == '0' &&
                   (body[1] == 'x' || body[1] == 'X');
  std::string_view digits = hex ? body.substr(2) : body;
  auto r = std::from_chars(digits.data(), digits.data() + digits.size(),
                           magnitude, hex ? 16 : 10);
  if (digits.empty() || r.ec != std::errc() ||
      r.ptr != digits.data() + digits.size()) {
    error = "invalid integer literal '" + std::string(token) + "'";
    return std::nullopt;
  }
  const unsigned w = type.width;
  const std::uint64_t all = w == 64 ? ~std::uint64_t{0}
                                    : (std::uint64_t{1} << w) - 1;
  std::uint64_t bits = magnitude;
  if (negative) {
    if (!type.is_signed || hex) {
      error = "negative literal '" + std::string(token) +
              "' for an unsigned type";
      return std::nullopt;
    }
    const std::uint64_t limit = std::uint64_t{1} << (w - 1);
    if (magnitude > limit) {
      error = "literal '" + std::string(token) + "' does not fit in " +
              std::to_string(w) + " bits";
      return std::nullopt;
    }
    bits = (~magnitude + 1) & all;
  } else {
    const std::uint64_t limit =
        (type.is_signed && !hex) ? (all >> 1) : all;
    if (magnitude > limit) {
      error = "literal '" + std::string(token) + "' does not fit in " +
              std::to_string(w) + " bits";
      return std::nullopt;
    }
  }
  return EncodeContextDependentLiteral(
      bits, w, type.is_signed ? Signedness::kSigned : Signedness::kUnsigned);
}

std::optional<Word> ParseWord(std::string_view token) {
  const bool hex = token.size() > 2 && token[0] == '0' &&
                   (token[1] == 'x' || token[1] == 'X');
  std::string_view digits = hex ? token.substr(2) : token;
  Word value = 0;
  auto r = std::from_chars(digits.data(), digits.data() + digits.size(), value,
                           hex ? 16 : 10);
  if (digits.empty() || r.ec != std::errc() ||
      r.ptr != digits.data() + digits.size()) {
    return std::nullopt;
  }
  return value;
}

}  // namespace spvkit
