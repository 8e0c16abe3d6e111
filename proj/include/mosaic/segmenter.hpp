#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/text_span.hpp"
#include "mosaic/unicode.hpp"

namespace mosaic {

struct Token {
  TextSpan span;
  std::string surface;     // UTF-8 slice of the source
  std::string normalized;  // lowercase surface, typographic apostrophe folded to '
};

/// Unit of aggregation. Window groups `window` consecutive tokens.
class Granularity {
 public:
  enum class Kind { Word, Window, Sentence, Paragraph, Document };

  static Granularity word() { return Granularity{Kind::Word, 0}; }
  /// Throws std::invalid_argument when n == 0.
  static Granularity window(std::size_t n);
  static Granularity sentence() { return Granularity{Kind::Sentence, 0}; }
  static Granularity paragraph() { return Granularity{Kind::Paragraph, 0}; }
  static Granularity document() { return Granularity{Kind::Document, 0}; }

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  /// Window size; 0 for every other kind.
  [[nodiscard]] std::size_t window_size() const noexcept { return window_; }

  friend bool operator==(const Granularity&, const Granularity&) = default;

 private:
  Granularity(Kind kind, std::size_t window) : kind_(kind), window_(window) {}

  Kind kind_;
  std::size_t window_;
};

/// "word", "window:<n>", "sentence", "paragraph" or "document".
[[nodiscard]] std::string to_string(const Granularity& g);
/// Inverse of to_string. Throws std::invalid_argument on anything else.
[[nodiscard]] Granularity parse_granularity(std::string_view text);

/// Half-open range of token indices.
struct TokenRange {
  std::size_t begin = 0;
  std::size_t end = 0;

  [[nodiscard]] std::size_t size() const noexcept { return end - begin; }
  friend bool operator==(TokenRange, TokenRange) = default;
};

struct Segment {
  TextSpan span;
  Granularity level = Granularity::document();
  TokenRange tokens;
};

/// Maximal runs of letters; an apostrophe or hyphen is kept only between two
/// letters ("don't", "re-do").
[[nodiscard]] std::vector<Token> tokenize(const Utf8Text& text);

/// Paragraphs are separated by one or more blank lines. Spans are trimmed of
/// surrounding whitespace.
[[nodiscard]] std::vector<TextSpan> split_paragraphs(const Utf8Text& text);

/// A sentence ends at a run of terminators (. ! ? …), plus any closing quotes
/// or brackets, when followed by whitespace and an uppercase letter (opening
/// quotes or brackets may sit in between) or by the end of its paragraph. Sentences never cross paragraph boundaries.
[[nodiscard]] std::vector<TextSpan> split_sentences(const Utf8Text& text);

/// Segments of `text` at granularity `g`, ordered and non-overlapping, with
/// every token in exactly one segment. `tokens` must be tokenize(text).
[[nodiscard]] std::vector<Segment> segments_for(const Utf8Text& text,
                                                std::span<const Token> tokens,
                                                const Granularity& g);
[[nodiscard]] std::vector<Segment> segments_for(const Utf8Text& text, const Granularity& g);

}  // namespace mosaic
