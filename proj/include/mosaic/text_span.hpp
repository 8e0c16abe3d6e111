#pragma once

#include <cstddef>

namespace mosaic {

/// Half-open range of code point offsets [start, end).
struct TextSpan {
  std::size_t start = 0;
  std::size_t end = 0;

  [[nodiscard]] constexpr std::size_t length() const noexcept { return end - start; }
  [[nodiscard]] constexpr bool contains(TextSpan other) const noexcept {
    return start <= other.start && other.end <= end;
  }
  friend constexpr bool operator==(TextSpan, TextSpan) = default;
};

}  // namespace mosaic
