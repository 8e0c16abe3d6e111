#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mosaic/vad.hpp"

namespace mosaic {

/// Declared rating scale of a lexicon file, e.g. 0-1 or 1-9.
struct RatingScale {
  double lo = 0.0;
  double hi = 1.0;

  friend constexpr bool operator==(const RatingScale&, const RatingScale&) = default;
};

/// Parses "lo-hi" (e.g. "1-9"). Returns nullopt unless lo < hi.
[[nodiscard]] std::optional<RatingScale> parse_rating_scale(std::string_view text);

enum class DuplicatePolicy { Reject, LastWins };

/// Maps `value` from [lo, hi] onto [0, 1]. Throws std::domain_error when
/// hi <= lo or value lies outside the closed interval.
[[nodiscard]] double normalize_scale(double value, double lo, double hi);

struct LexiconEntry {
  std::string term;
  VadVector vad;
};

/// Immutable term -> VAD lookup. Terms are stored lowercase.
class Lexicon {
 public:
  Lexicon() = default;
  Lexicon(std::vector<LexiconEntry> entries, RatingScale source_scale,
          DuplicatePolicy policy = DuplicatePolicy::Reject);

  [[nodiscard]] std::optional<VadVector> lookup(std::string_view normalized_token) const;
  [[nodiscard]] std::size_t entry_count() const noexcept { return entries_.size(); }
  [[nodiscard]] RatingScale source_scale() const noexcept { return scale_; }

  /// Rows dropped at parse time because the term held whitespace.
  [[nodiscard]] std::size_t skipped_multiword() const noexcept { return skipped_multiword_; }

  /// Entries sorted by term.
  [[nodiscard]] std::vector<LexiconEntry> sorted_entries() const;

 private:
  friend Lexicon parse_lexicon(std::istream&, RatingScale, DuplicatePolicy);

  struct TermHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const noexcept {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::unordered_map<std::string, VadVector, TermHash, std::equal_to<>> entries_;
  RatingScale scale_;
  std::size_t skipped_multiword_ = 0;
};

/// Reads the tab-separated `term valence arousal dominance` format. Comment
/// lines start with '#'; blank lines are ignored; a first data line whose
/// second field is not numeric is treated as a header.
/// Throws LexiconError with the 1-based line number of the offending row.
[[nodiscard]] Lexicon parse_lexicon(std::istream& source, RatingScale scale = {},
                                    DuplicatePolicy policy = DuplicatePolicy::Reject);

/// Opens and parses a lexicon file. Throws std::system_error if unreadable.
[[nodiscard]] Lexicon load_lexicon(const std::filesystem::path& path, RatingScale scale = {},
                                   DuplicatePolicy policy = DuplicatePolicy::Reject);

/// Writes the lexicon back as TSV at unit scale, sorted by term.
void write_lexicon(std::ostream& out, const Lexicon& lexicon);

}  // namespace mosaic
