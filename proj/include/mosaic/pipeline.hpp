#pragma once

#include <cstddef>
#include <span>

#include "mosaic/affect.hpp"
#include "mosaic/colormap.hpp"
#include "mosaic/lexicon.hpp"
#include "mosaic/render.hpp"
#include "mosaic/segmenter.hpp"

namespace mosaic {

/// Colours scored segments and attaches the document summary.
[[nodiscard]] AnalysisResult make_result(std::size_t text_length, const Granularity& g,
                                         std::span<const SegmentScore> scores,
                                         const MappingConfig& cfg);

/// tokenize -> segment -> score -> map.
[[nodiscard]] AnalysisResult analyze(const Utf8Text& text, const Granularity& g,
                                     const Lexicon& lexicon, const MappingConfig& cfg);

}  // namespace mosaic
