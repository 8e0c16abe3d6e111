#include "mosaic/unicode.hpp"

#include <stdexcept>

namespace mosaic {

namespace {

// Length of a well-formed sequence starting at `i`, and its code point; 0 if
// the bytes are malformed (overlong, surrogate, truncated or out of range).
std::size_t decode_one(std::string_view s, std::size_t i, char32_t& out) {
  const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
  const unsigned char b0 = byte(i);
  if (b0 < 0x80) {
    out = b0;
    return 1;
  }
  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return 0;
  }
  if (i + len > s.size()) return 0;
  for (std::size_t k = 1; k < len; ++k) {
    const unsigned char b = byte(i + k);
    if ((b & 0xC0) != 0x80) return 0;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return 0;
  out = cp;
  return len;
}

constexpr bool in(char32_t c, char32_t lo, char32_t hi) { return c >= lo && c <= hi; }

}  // namespace

Utf8Text::Utf8Text(std::string utf8) : utf8_(std::move(utf8)) {
  chars_.reserve(utf8_.size());
  byte_offsets_.reserve(utf8_.size() + 1);
  const std::string_view s = utf8_;
  std::size_t i = 0;
  while (i < s.size()) {
    char32_t cp = 0;
    std::size_t len = decode_one(s, i, cp);
    if (len == 0) {
      cp = unicode::kReplacement;
      len = 1;
    }
    byte_offsets_.push_back(i);
    chars_.push_back(cp);
    i += len;
  }
  byte_offsets_.push_back(s.size());
}

std::string_view Utf8Text::slice(TextSpan span) const {
  if (span.start > span.end || span.end > chars_.size()) {
    throw std::out_of_range("span outside text");
  }
  const std::size_t b = byte_offsets_[span.start];
  return std::string_view(utf8_).substr(b, byte_offsets_[span.end] - b);
}

namespace unicode {

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

// Letter blocks of the common alphabetic scripts. Not a full Unicode
// property table; code points outside these ranges are treated as non-letters.
bool is_letter(char32_t c) noexcept {
  if (c < 0x80) return in(c, 'a', 'z') || in(c, 'A', 'Z');
  if (c == 0xAA || c == 0xB5 || c == 0xBA) return true;
  if (in(c, 0xC0, 0x24F)) return c != 0xD7 && c != 0xF7;
  if (in(c, 0x250, 0x2AF)) return true;                    // IPA
  if (in(c, 0x370, 0x3FF)) {                               // Greek
    return c == 0x386 || (in(c, 0x388, 0x3FF) && c != 0x3F6 && c != 0x38B && c != 0x38D &&
                          c != 0x3A2);
  }
  if (in(c, 0x400, 0x52F)) return !in(c, 0x482, 0x489);   // Cyrillic
  if (in(c, 0x531, 0x556) || in(c, 0x561, 0x587)) return true;  // Armenian
  if (in(c, 0x5D0, 0x5EA)) return true;                    // Hebrew
  if (in(c, 0x620, 0x64A)) return true;                    // Arabic
  if (in(c, 0x904, 0x939)) return true;                    // Devanagari
  if (in(c, 0x10A0, 0x10FF)) return true;                  // Georgian
  if (in(c, 0x1E00, 0x1FFF)) return true;                  // Latin/Greek extended
  if (in(c, 0x3041, 0x3096) || in(c, 0x30A1, 0x30FA)) return true;  // kana
  if (in(c, 0x4E00, 0x9FFF)) return true;                  // CJK
  if (in(c, 0xAC00, 0xD7A3)) return true;                  // Hangul
  return false;
}

bool is_line_break(char32_t c) noexcept {
  return c == '\n' || c == '\r' || c == 0x2028 || c == 0x2029 || c == 0x85;
}

bool is_space(char32_t c) noexcept {
  switch (c) {
    case ' ': case '\t': case '\n': case '\v': case '\f': case '\r':
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return in(c, 0x2000, 0x200A);
  }
}

char32_t to_lower(char32_t c) noexcept {
  if (c < 0x80) return in(c, 'A', 'Z') ? c + 32 : c;
  if (in(c, 0xC0, 0xDE)) return c == 0xD7 ? c : c + 32;
  if (in(c, 0x100, 0x137) || in(c, 0x14A, 0x177)) return (c % 2 == 0) ? c + 1 : c;
  if (c == 0x130) return 'i';
  if (in(c, 0x139, 0x148) || in(c, 0x179, 0x17E)) return (c % 2 == 1) ? c + 1 : c;
  if (c == 0x178) return 0xFF;
  if (in(c, 0x391, 0x3AB)) return c == 0x3A2 ? c : c + 32;
  if (c == 0x386) return 0x3AC;
  if (in(c, 0x388, 0x38A)) return c + 37;
  if (c == 0x38C) return 0x3CC;
  if (c == 0x38E || c == 0x38F) return c + 63;
  if (in(c, 0x410, 0x42F)) return c + 32;
  if (in(c, 0x400, 0x40F)) return c + 80;
  if (in(c, 0x460, 0x481) || in(c, 0x48A, 0x4BF) || in(c, 0x4D0, 0x52F)) {
    return (c % 2 == 0) ? c + 1 : c;
  }
  if (in(c, 0x531, 0x556)) return c + 48;
  if (in(c, 0x1E00, 0x1E95) || in(c, 0x1EA0, 0x1EFF)) return (c % 2 == 0) ? c + 1 : c;
  return c;
}

bool is_upper(char32_t c) noexcept { return to_lower(c) != c; }

std::string fold_case(std::string_view utf8) {
  std::string out;
  out.reserve(utf8.size());
  std::size_t i = 0;
  while (i < utf8.size()) {
    char32_t cp = 0;
    std::size_t len = decode_one(utf8, i, cp);
    if (len == 0) {
      cp = kReplacement;
      len = 1;
    }
    append_utf8(out, to_lower(cp));
    i += len;
  }
  return out;
}

}  // namespace unicode
}  // namespace mosaic
