#include "mosaic/affect.hpp"

#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

struct VadSum {
  double v = 0.0, a = 0.0, d = 0.0;

  void add(const VadVector& x, double weight = 1.0) {
    v += weight * x.valence;
    a += weight * x.arousal;
    d += weight * x.dominance;
  }
  [[nodiscard]] VadVector mean(double count) const { return {v / count, a / count, d / count}; }
};

}  // namespace

SegmentScore score_segment(const Segment& segment, std::span<const Token> tokens,
                           const Lexicon& lexicon) {
  SegmentScore score;
  score.segment = segment;
  score.total = tokens.size();
  VadSum sum;
  for (const Token& tok : tokens) {
    if (const auto vad = lexicon.lookup(tok.normalized)) {
      score.contributors.push_back({tok.normalized, *vad});
      sum.add(*vad);
    }
  }
  score.matched = score.contributors.size();
  if (score.matched > 0) score.vad = sum.mean(static_cast<double>(score.matched));
  return score;
}

std::vector<SegmentScore> score_all(const Utf8Text& text, std::span<const Token> tokens,
                                    const Granularity& g, const Lexicon& lexicon) {
  const auto segments = segments_for(text, tokens, g);
  std::vector<SegmentScore> out;
  out.reserve(segments.size());
  for (const Segment& seg : segments) {
    out.push_back(score_segment(seg, tokens.subspan(seg.tokens.begin, seg.tokens.size()), lexicon));
  }
  return out;
}

std::vector<SegmentScore> score_all(const Utf8Text& text, const Granularity& g,
                                    const Lexicon& lexicon) {
  const auto tokens = tokenize(text);
  return score_all(text, tokens, g, lexicon);
}

std::optional<VadVector> weighted_summary(std::span<const SegmentScore> scores) {
  VadSum sum;
  std::size_t count = 0;
  for (const SegmentScore& s : scores) {
    for (const Contributor& c : s.contributors) sum.add(c.vad);
    count += s.contributors.size();
  }
  if (count == 0) return std::nullopt;
  return sum.mean(static_cast<double>(count));
}

std::vector<SegmentScore> reaggregate(std::span<const SegmentScore> fine,
                                      std::span<const Segment> coarse) {
  std::vector<SegmentScore> out;
  out.reserve(coarse.size());
  std::size_t f = 0;
  for (const Segment& seg : coarse) {
    if (f < fine.size() && fine[f].segment.span.start < seg.span.start) {
      throw InvariantError("fine segment at offset " +
                           std::to_string(fine[f].segment.span.start) +
                           " is not contained in any coarse segment");
    }
    SegmentScore score;
    score.segment = seg;
    VadSum sum;
    for (; f < fine.size() && fine[f].segment.span.start < seg.span.end; ++f) {
      const SegmentScore& part = fine[f];
      if (!seg.span.contains(part.segment.span)) {
        throw InvariantError("fine segment at offset " + std::to_string(part.segment.span.start) +
                             " crosses a coarse segment boundary");
      }
      score.total += part.total;
      score.matched += part.matched;
      if (part.vad) sum.add(*part.vad, static_cast<double>(part.matched));
      score.contributors.insert(score.contributors.end(), part.contributors.begin(),
                                part.contributors.end());
    }
    if (score.matched > 0) score.vad = sum.mean(static_cast<double>(score.matched));
    out.push_back(std::move(score));
  }
  if (f != fine.size()) {
    throw InvariantError("fine segment at offset " + std::to_string(fine[f].segment.span.start) +
                         " is not contained in any coarse segment");
  }
  return out;
}

}  // namespace mosaic
