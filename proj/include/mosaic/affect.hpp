#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mosaic/lexicon.hpp"
#include "mosaic/segmenter.hpp"
#include "mosaic/vad.hpp"

namespace mosaic {

struct Contributor {
  std::string word;
  VadVector vad;

  friend bool operator==(const Contributor&, const Contributor&) = default;
};

struct SegmentScore {
  Segment segment;
  std::optional<VadVector> vad;  // present iff matched > 0
  std::size_t matched = 0;
  std::size_t total = 0;
  std::vector<Contributor> contributors;  // text order
};

/// Mean VAD of the lexicon hits among `tokens` (the tokens of `segment`).
[[nodiscard]] SegmentScore score_segment(const Segment& segment, std::span<const Token> tokens,
                                         const Lexicon& lexicon);

[[nodiscard]] std::vector<SegmentScore> score_all(const Utf8Text& text,
                                                  std::span<const Token> tokens,
                                                  const Granularity& g, const Lexicon& lexicon);
[[nodiscard]] std::vector<SegmentScore> score_all(const Utf8Text& text, const Granularity& g,
                                                  const Lexicon& lexicon);

/// Mean over every contributor of every score; nullopt when nothing matched.
[[nodiscard]] std::optional<VadVector> weighted_summary(std::span<const SegmentScore> scores);

/// Combines fine scores into the coarser `coarse` segments without
/// re-tokenizing. Each fine segment must lie inside exactly one coarse
/// segment, otherwise InvariantError is thrown.
[[nodiscard]] std::vector<SegmentScore> reaggregate(std::span<const SegmentScore> fine,
                                                    std::span<const Segment> coarse);

}  // namespace mosaic
