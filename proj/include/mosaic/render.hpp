#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mosaic/affect.hpp"
#include "mosaic/colormap.hpp"
#include "mosaic/segmenter.hpp"

namespace mosaic {

inline constexpr std::size_t kTopWords = 5;

struct WordScore {
  std::string word;
  VadVector vad;
};

struct SegmentResult {
  TextSpan span;
  std::size_t matched = 0;
  std::size_t total = 0;
  std::optional<VadVector> vad;
  ColorSrgb color;  // no_data_color when vad is absent
  std::vector<WordScore> top_words;
};

struct SummaryResult {
  VadVector vad;
  ColorSrgb color;
};

/// Everything the mosaic displays, in serializable form.
struct AnalysisResult {
  std::size_t text_length = 0;
  Granularity granularity = Granularity::sentence();
  std::vector<SegmentResult> segments;
  std::optional<SummaryResult> summary;
  MappingParams config;
};

/// Up to `k` distinct words, strongest first (distance of the VAD from
/// neutral), ties broken by word.
[[nodiscard]] std::vector<WordScore> top_words(std::span<const Contributor> contributors,
                                               std::size_t k = kTopWords);

struct Tile {
  std::size_t index = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  ColorSrgb color;
  bool no_data = false;
};

struct MosaicSpec {
  std::size_t columns = 1;
  std::size_t rows = 0;
  std::size_t tile_size = 16;
  std::size_t gap = 2;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<Tile> tiles;
};

struct MosaicOptions {
  std::optional<std::size_t> columns;  // default: ceil(sqrt(n))
  std::size_t tile_size = 16;
  std::size_t gap = 2;
};

/// ceil(sqrt(n)), at least 1.
[[nodiscard]] std::size_t default_columns(std::size_t n) noexcept;

/// Row-major placement of `n` tiles. Throws std::invalid_argument for
/// columns == 0 or tile_size == 0.
[[nodiscard]] MosaicSpec layout_mosaic(std::size_t n, std::size_t columns, std::size_t tile_size,
                                       std::size_t gap);

/// Layout plus colours for every segment of `result`.
[[nodiscard]] MosaicSpec build_mosaic(const AnalysisResult& result,
                                      const MosaicOptions& options = {});

/// Standalone SVG with one <rect> per tile. Throws InvariantError when the
/// mosaic and result disagree on segment count.
[[nodiscard]] std::string emit_svg(const MosaicSpec& mosaic, const AnalysisResult& result);

/// Canonical JSON: fixed key order, no whitespace, reals with at most six
/// decimals.
[[nodiscard]] std::string emit_json(const AnalysisResult& result);

[[nodiscard]] std::string emit_legend_svg(const LegendGrid& grid, std::size_t cell_size = 16);
[[nodiscard]] std::string emit_legend_json(const LegendGrid& grid);

/// Fixed six-decimal rendering with trailing zeros stripped ("0.5", "120").
[[nodiscard]] std::string format_real(double value);

}  // namespace mosaic
