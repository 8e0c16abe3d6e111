#include "mosaic/segmenter.hpp"

#include <charconv>
#include <stdexcept>

namespace mosaic {

namespace {

constexpr char32_t kRightSingleQuote = 0x2019;

bool is_joiner(char32_t c) { return c == '\'' || c == kRightSingleQuote || c == '-'; }

bool is_terminator(char32_t c) { return c == '.' || c == '!' || c == '?' || c == 0x2026; }

bool is_closer(char32_t c) {
  switch (c) {
    case '"': case '\'': case ')': case ']': case '}':
    case 0x2019: case 0x201D: case 0xBB: case 0x203A:
      return true;
    default:
      return false;
  }
}

bool is_opener(char32_t c) {
  switch (c) {
    case '"': case '\'': case '(': case '[': case '{':
    case 0x2018: case 0x201C: case 0xAB: case 0x2039:
      return true;
    default:
      return false;
  }
}

// Shrinks `span` to exclude leading and trailing whitespace; may become empty.
TextSpan trim(const Utf8Text& text, TextSpan span) {
  while (span.start < span.end && unicode::is_space(text[span.start])) ++span.start;
  while (span.end > span.start && unicode::is_space(text[span.end - 1])) --span.end;
  return span;
}

void split_paragraph_sentences(const Utf8Text& text, TextSpan para, std::vector<TextSpan>& out) {
  std::size_t start = para.start;
  std::size_t i = para.start;
  while (i < para.end) {
    if (!is_terminator(text[i])) {
      ++i;
      continue;
    }
    std::size_t end = i;
    while (end < para.end && is_terminator(text[end])) ++end;
    while (end < para.end && is_closer(text[end])) ++end;

    std::size_t next = end;
    while (next < para.end && unicode::is_space(text[next])) ++next;
    std::size_t first_letter = next;
    while (first_letter < para.end && is_opener(text[first_letter])) ++first_letter;
    const bool boundary = next == para.end || (next > end && first_letter < para.end &&
                                               unicode::is_upper(text[first_letter]));
    if (boundary) {
      out.push_back(TextSpan{start, end});
      start = next;
    }
    i = end;
  }
  if (const TextSpan rest = trim(text, TextSpan{start, para.end}); rest.length() > 0) {
    out.push_back(rest);
  }
}

// Assigns tokens to spans by containment. Spans are ordered and disjoint and
// tokens never straddle a span edge, so one forward sweep suffices.
std::vector<Segment> contain(std::span<const TextSpan> spans, std::span<const Token> tokens,
                             const Granularity& g) {
  std::vector<Segment> out;
  out.reserve(spans.size());
  std::size_t t = 0;
  for (const TextSpan span : spans) {
    while (t < tokens.size() && tokens[t].span.start < span.start) ++t;
    const std::size_t begin = t;
    while (t < tokens.size() && span.contains(tokens[t].span)) ++t;
    out.push_back(Segment{span, g, TokenRange{begin, t}});
  }
  return out;
}

}  // namespace

Granularity Granularity::window(std::size_t n) {
  if (n == 0) throw std::invalid_argument("window size must be at least 1");
  return Granularity{Kind::Window, n};
}

std::string to_string(const Granularity& g) {
  switch (g.kind()) {
    case Granularity::Kind::Word: return "word";
    case Granularity::Kind::Window: return "window:" + std::to_string(g.window_size());
    case Granularity::Kind::Sentence: return "sentence";
    case Granularity::Kind::Paragraph: return "paragraph";
    case Granularity::Kind::Document: return "document";
  }
  return "document";
}

Granularity parse_granularity(std::string_view text) {
  if (text == "word") return Granularity::word();
  if (text == "sentence") return Granularity::sentence();
  if (text == "paragraph") return Granularity::paragraph();
  if (text == "document") return Granularity::document();
  constexpr std::string_view prefix = "window:";
  if (text.starts_with(prefix)) {
    const std::string_view digits = text.substr(prefix.size());
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), n);
    if (!digits.empty() && ec == std::errc{} && ptr == digits.data() + digits.size()) {
      return Granularity::window(n);
    }
  }
  throw std::invalid_argument("invalid granularity '" + std::string(text) +
                              "' (expected word, window:<n>, sentence, paragraph or document)");
}

std::vector<Token> tokenize(const Utf8Text& text) {
  std::vector<Token> tokens;
  const std::size_t n = text.length();
  std::size_t i = 0;
  while (i < n) {
    if (!unicode::is_letter(text[i])) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < n && unicode::is_letter(text[i])) ++i;
    while (i + 1 < n && is_joiner(text[i]) && unicode::is_letter(text[i + 1])) {
      ++i;
      while (i < n && unicode::is_letter(text[i])) ++i;
    }
    Token tok;
    tok.span = TextSpan{start, i};
    tok.surface = std::string(text.slice(tok.span));
    tok.normalized.reserve(tok.surface.size());
    for (std::size_t k = start; k < i; ++k) {
      const char32_t c = text[k];
      unicode::append_utf8(tok.normalized, c == kRightSingleQuote ? U'\'' : unicode::to_lower(c));
    }
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<TextSpan> split_paragraphs(const Utf8Text& text) {
  std::vector<TextSpan> out;
  const std::size_t n = text.length();
  std::size_t para_start = 0;
  std::size_t i = 0;
  while (i < n) {
    if (!unicode::is_line_break(text[i])) {
      ++i;
      continue;
    }
    // Count line breaks in the run of whitespace starting here; \r\n is one.
    std::size_t j = i;
    std::size_t breaks = 0;
    while (j < n && unicode::is_space(text[j])) {
      if (text[j] == '\r' && j + 1 < n && text[j + 1] == '\n') {
        ++breaks;
        j += 2;
        continue;
      }
      if (unicode::is_line_break(text[j])) ++breaks;
      ++j;
    }
    if (breaks >= 2) {
      if (const TextSpan p = trim(text, TextSpan{para_start, i}); p.length() > 0) {
        out.push_back(p);
      }
      para_start = j;
    }
    i = j;
  }
  if (const TextSpan p = trim(text, TextSpan{para_start, n}); p.length() > 0) out.push_back(p);
  return out;
}

std::vector<TextSpan> split_sentences(const Utf8Text& text) {
  std::vector<TextSpan> out;
  for (const TextSpan para : split_paragraphs(text)) split_paragraph_sentences(text, para, out);
  return out;
}

std::vector<Segment> segments_for(const Utf8Text& text, std::span<const Token> tokens,
                                  const Granularity& g) {
  std::vector<Segment> out;
  switch (g.kind()) {
    case Granularity::Kind::Word:
      out.reserve(tokens.size());
      for (std::size_t t = 0; t < tokens.size(); ++t) {
        out.push_back(Segment{tokens[t].span, g, TokenRange{t, t + 1}});
      }
      return out;
    case Granularity::Kind::Window: {
      const std::size_t w = g.window_size();
      out.reserve((tokens.size() + w - 1) / w);
      for (std::size_t t = 0; t < tokens.size(); t += w) {
        const std::size_t last = std::min(t + w, tokens.size());
        out.push_back(
            Segment{TextSpan{tokens[t].span.start, tokens[last - 1].span.end}, g, {t, last}});
      }
      return out;
    }
    case Granularity::Kind::Sentence:
      return contain(split_sentences(text), tokens, g);
    case Granularity::Kind::Paragraph:
      return contain(split_paragraphs(text), tokens, g);
    case Granularity::Kind::Document: {
      const TextSpan whole = trim(text, TextSpan{0, text.length()});
      if (whole.length() == 0) return out;
      const TextSpan spans[] = {whole};
      return contain(spans, tokens, g);
    }
  }
  return out;
}

std::vector<Segment> segments_for(const Utf8Text& text, const Granularity& g) {
  const auto tokens = tokenize(text);
  return segments_for(text, tokens, g);
}

}  // namespace mosaic
