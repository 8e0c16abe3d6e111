#include "mosaic/lexicon.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

#include "mosaic/errors.hpp"
#include "mosaic/unicode.hpp"

namespace mosaic {

namespace {

std::optional<double> parse_real(std::string_view field) {
  // from_chars rejects a leading '+', which some exporters emit.
  if (!field.empty() && field.front() == '+') field.remove_prefix(1);
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc{} || ptr != last || !std::isfinite(value)) {
    return std::nullopt;
  }
  return value;
}

std::vector<std::string_view> split_tabs(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  while (true) {
    const std::size_t tab = line.find('\t', pos);
    if (tab == std::string_view::npos) {
      fields.push_back(line.substr(pos));
      return fields;
    }
    fields.push_back(line.substr(pos, tab - pos));
    pos = tab + 1;
  }
}

bool has_space(std::string_view utf8) {
  const Utf8Text text{std::string(utf8)};
  return std::any_of(text.chars().begin(), text.chars().end(), unicode::is_space);
}

std::string format_shortest(double v) {
  std::array<char, 32> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

}  // namespace

std::optional<RatingScale> parse_rating_scale(std::string_view text) {
  // The separator is the first '-' after the first character, so a negative
  // lower bound ("-1-1") still parses.
  const std::size_t dash = text.find('-', 1);
  if (text.empty() || dash == std::string_view::npos) return std::nullopt;
  const auto lo = parse_real(text.substr(0, dash));
  const auto hi = parse_real(text.substr(dash + 1));
  if (!lo || !hi || !(*lo < *hi)) return std::nullopt;
  return RatingScale{*lo, *hi};
}

double normalize_scale(double value, double lo, double hi) {
  if (!(hi > lo)) throw std::domain_error("scale upper bound must exceed lower bound");
  if (!(value >= lo && value <= hi)) {
    throw std::domain_error("rating " + format_shortest(value) + " outside scale [" +
                            format_shortest(lo) + ", " + format_shortest(hi) + "]");
  }
  return std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
}

Lexicon::Lexicon(std::vector<LexiconEntry> entries, RatingScale source_scale,
                 DuplicatePolicy policy)
    : scale_(source_scale) {
  entries_.reserve(entries.size());
  for (auto& e : entries) {
    if (e.term.empty()) throw std::invalid_argument("empty lexicon term");
    if (!e.vad.in_unit_cube()) throw std::invalid_argument("VAD outside unit cube: " + e.term);
    std::string term = unicode::fold_case(e.term);
    if (policy == DuplicatePolicy::Reject && entries_.contains(term)) {
      throw std::invalid_argument("duplicate lexicon term: " + term);
    }
    entries_.insert_or_assign(std::move(term), e.vad);
  }
}

std::optional<VadVector> Lexicon::lookup(std::string_view normalized_token) const {
  if (const auto it = entries_.find(normalized_token); it != entries_.end()) return it->second;
  return std::nullopt;
}

std::vector<LexiconEntry> Lexicon::sorted_entries() const {
  std::vector<LexiconEntry> out;
  out.reserve(entries_.size());
  for (const auto& [term, vad] : entries_) out.push_back({term, vad});
  std::sort(out.begin(), out.end(),
            [](const LexiconEntry& a, const LexiconEntry& b) { return a.term < b.term; });
  return out;
}

Lexicon parse_lexicon(std::istream& source, RatingScale scale, DuplicatePolicy policy) {
  if (!(scale.hi > scale.lo)) throw LexiconError(0, 0, "invalid rating scale");

  Lexicon lexicon;
  lexicon.scale_ = scale;

  std::string raw;
  std::size_t line_no = 0;
  bool seen_data_line = false;
  while (std::getline(source, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (line.empty() || line.front() == '#') continue;

    const auto fields = split_tabs(line);
    if (!seen_data_line) {
      seen_data_line = true;
      if (fields.size() >= 2 && !parse_real(fields[1])) continue;  // header row
    }
    if (fields.size() != 4) {
      throw LexiconError(line_no, 0,
                         "expected 4 tab-separated fields, found " + std::to_string(fields.size()));
    }
    if (fields[0].empty()) throw LexiconError(line_no, 1, "empty term");

    VadVector vad;
    for (std::size_t col = 1; col <= 3; ++col) {
      const auto value = parse_real(fields[col]);
      if (!value) {
        throw LexiconError(line_no, col + 1,
                           "non-numeric rating '" + std::string(fields[col]) + "'");
      }
      try {
        vad[kVadAxes[col - 1]] = normalize_scale(*value, scale.lo, scale.hi);
      } catch (const std::domain_error& e) {
        throw LexiconError(line_no, col + 1, e.what());
      }
    }

    // Multi-word expressions can never match a token; they are dropped.
    if (has_space(fields[0])) {
      ++lexicon.skipped_multiword_;
      continue;
    }
    std::string term = unicode::fold_case(fields[0]);
    if (policy == DuplicatePolicy::Reject && lexicon.entries_.contains(term)) {
      throw LexiconError(line_no, 1, "duplicate term '" + term + "'");
    }
    lexicon.entries_.insert_or_assign(std::move(term), vad);
  }
  if (source.bad()) throw std::system_error(std::make_error_code(std::errc::io_error));
  return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path, RatingScale scale,
                     DuplicatePolicy policy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                            "cannot open lexicon " + path.string());
  }
  return parse_lexicon(in, scale, policy);
}

void write_lexicon(std::ostream& out, const Lexicon& lexicon) {
  out << "term\tvalence\tarousal\tdominance\n";
  for (const auto& e : lexicon.sorted_entries()) {
    out << e.term << '\t' << format_shortest(e.vad.valence) << '\t'
        << format_shortest(e.vad.arousal) << '\t' << format_shortest(e.vad.dominance) << '\n';
  }
}

}  // namespace mosaic
