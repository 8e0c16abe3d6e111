#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/text_span.hpp"

namespace mosaic {

/// UTF-8 source text with a decoded code point view. All offsets used by the
/// pipeline are code point indices into `chars()`, never byte offsets.
/// Malformed byte sequences decode to U+FFFD, one replacement per bad byte.
class Utf8Text {
 public:
  Utf8Text() : byte_offsets_{0} {}
  explicit Utf8Text(std::string utf8);

  [[nodiscard]] std::size_t length() const noexcept { return chars_.size(); }
  [[nodiscard]] bool empty() const noexcept { return chars_.empty(); }
  [[nodiscard]] char32_t operator[](std::size_t i) const noexcept { return chars_[i]; }
  [[nodiscard]] std::u32string_view chars() const noexcept { return chars_; }
  [[nodiscard]] const std::string& utf8() const noexcept { return utf8_; }

  /// UTF-8 bytes covered by `span`.
  [[nodiscard]] std::string_view slice(TextSpan span) const;

 private:
  std::string utf8_;
  std::u32string chars_;
  std::vector<std::size_t> byte_offsets_;  // length() + 1 entries
};

namespace unicode {

inline constexpr char32_t kReplacement = 0xFFFD;

void append_utf8(std::string& out, char32_t cp);

[[nodiscard]] bool is_letter(char32_t c) noexcept;
[[nodiscard]] bool is_space(char32_t c) noexcept;
[[nodiscard]] bool is_line_break(char32_t c) noexcept;
[[nodiscard]] bool is_upper(char32_t c) noexcept;

/// Simple one-to-one lowercase folding (ASCII, Latin-1, Latin Extended-A,
/// Greek, Cyrillic). Code points outside those blocks are returned unchanged.
[[nodiscard]] char32_t to_lower(char32_t c) noexcept;

/// Lowercases every code point of a UTF-8 string.
[[nodiscard]] std::string fold_case(std::string_view utf8);

}  // namespace unicode
}  // namespace mosaic
