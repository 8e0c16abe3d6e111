#include "mosaic/pipeline.hpp"

namespace mosaic {

AnalysisResult make_result(std::size_t text_length, const Granularity& g,
                           std::span<const SegmentScore> scores, const MappingConfig& cfg) {
  AnalysisResult result;
  result.text_length = text_length;
  result.granularity = g;
  result.config = cfg.params();
  result.segments.reserve(scores.size());
  for (const SegmentScore& s : scores) {
    SegmentResult seg;
    seg.span = s.segment.span;
    seg.matched = s.matched;
    seg.total = s.total;
    seg.vad = s.vad;
    seg.color = s.vad ? vad_to_srgb(*s.vad, cfg) : cfg.params().no_data_color;
    seg.top_words = top_words(s.contributors);
    result.segments.push_back(std::move(seg));
  }
  if (const auto summary = weighted_summary(scores)) {
    result.summary = SummaryResult{*summary, vad_to_srgb(*summary, cfg)};
  }
  return result;
}

AnalysisResult analyze(const Utf8Text& text, const Granularity& g, const Lexicon& lexicon,
                       const MappingConfig& cfg) {
  const auto tokens = tokenize(text);
  const auto scores = score_all(text, tokens, g, lexicon);
  return make_result(text.length(), g, scores, cfg);
}

}  // namespace mosaic
