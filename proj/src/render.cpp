#include "mosaic/render.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <string_view>
#include <unordered_set>

#include <json.hpp>

#include "mosaic/errors.hpp"

namespace mosaic {

namespace {

std::string fixed(double value, int precision) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                       std::chars_format::fixed, precision);
  if (ec != std::errc{}) throw std::range_error("cannot format real");
  return std::string(buf.data(), ptr);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

void append_vad(std::string& out, const VadVector& vad) {
  out += '[';
  out += format_real(vad.valence);
  out += ',';
  out += format_real(vad.arousal);
  out += ',';
  out += format_real(vad.dominance);
  out += ']';
}

void append_config(std::string& out, const MappingParams& p) {
  out += '{';
  bool first = true;
  for (std::string_view key : kMappingKeys) {
    if (!first) out += ',';
    first = false;
    out += '"';
    out += key;
    out += "\":";
    if (key == "hue_direction" || key == "no_data_color") {
      out += json_string(mapping_param_text(p, key));
    } else if (key == "axis_assignment") {
      const auto& a = p.axis_assignment;
      out += "[\"";
      out += to_string(a.hue);
      out += "\",\"";
      out += to_string(a.saturation);
      out += "\",\"";
      out += to_string(a.lightness);
      out += "\"]";
    } else {
      out += mapping_param_text(p, key);
    }
  }
  out += '}';
}

std::string tooltip(const SegmentResult& seg) {
  if (!seg.vad) return "no lexicon matches";
  return "valence " + fixed(seg.vad->valence, 3) + ", arousal " + fixed(seg.vad->arousal, 3) +
         ", dominance " + fixed(seg.vad->dominance, 3) + " (" + std::to_string(seg.matched) +
         "/" + std::to_string(seg.total) + " matched)";
}

}  // namespace

std::string format_real(double value) {
  std::string s = fixed(value, 6);
  if (s.find('.') != std::string::npos) {
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
  }
  if (s == "-0") s = "0";
  return s;
}

std::vector<WordScore> top_words(std::span<const Contributor> contributors, std::size_t k) {
  std::vector<WordScore> words;
  std::unordered_set<std::string_view> seen;
  for (const Contributor& c : contributors) {
    if (seen.insert(c.word).second) words.push_back({c.word, c.vad});
  }
  const auto stronger = [](const WordScore& a, const WordScore& b) {
    const double da = distance_from_neutral(a.vad);
    const double db = distance_from_neutral(b.vad);
    if (da != db) return da > db;
    return a.word < b.word;
  };
  const std::size_t keep = std::min(k, words.size());
  std::partial_sort(words.begin(), words.begin() + static_cast<std::ptrdiff_t>(keep), words.end(),
                    stronger);
  words.resize(keep);
  return words;
}

std::size_t default_columns(std::size_t n) noexcept {
  if (n <= 1) return 1;
  auto c = static_cast<std::size_t>(std::sqrt(static_cast<double>(n)));
  while (c * c < n) ++c;
  while (c > 1 && (c - 1) * (c - 1) >= n) --c;
  return c;
}

MosaicSpec layout_mosaic(std::size_t n, std::size_t columns, std::size_t tile_size,
                         std::size_t gap) {
  if (columns == 0) throw std::invalid_argument("mosaic needs at least one column");
  if (tile_size == 0) throw std::invalid_argument("tile size must be positive");
  MosaicSpec m;
  m.columns = columns;
  m.tile_size = tile_size;
  m.gap = gap;
  m.rows = (n + columns - 1) / columns;
  m.width = columns * tile_size + (columns - 1) * gap;
  m.height = m.rows == 0 ? 0 : m.rows * tile_size + (m.rows - 1) * gap;
  m.tiles.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    m.tiles.push_back(Tile{i, i / columns, i % columns, {}, false});
  }
  return m;
}

MosaicSpec build_mosaic(const AnalysisResult& result, const MosaicOptions& options) {
  const std::size_t n = result.segments.size();
  MosaicSpec m = layout_mosaic(n, options.columns.value_or(default_columns(n)),
                               options.tile_size, options.gap);
  for (Tile& t : m.tiles) {
    const SegmentResult& seg = result.segments[t.index];
    t.color = seg.color;
    t.no_data = !seg.vad.has_value();
  }
  return m;
}

std::string emit_svg(const MosaicSpec& mosaic, const AnalysisResult& result) {
  if (mosaic.tiles.size() != result.segments.size()) {
    throw InvariantError("mosaic has " + std::to_string(mosaic.tiles.size()) +
                         " tiles but result has " + std::to_string(result.segments.size()) +
                         " segments");
  }
  const std::string w = std::to_string(mosaic.width);
  const std::string h = std::to_string(mosaic.height);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" +
                    h + "\" viewBox=\"0 0 " + w + " " + h + "\">\n";
  const std::size_t pitch = mosaic.tile_size + mosaic.gap;
  const std::string size = std::to_string(mosaic.tile_size);
  for (const Tile& t : mosaic.tiles) {
    const SegmentResult& seg = result.segments[t.index];
    out += "<rect x=\"" + std::to_string(t.col * pitch) + "\" y=\"" +
           std::to_string(t.row * pitch) + "\" width=\"" + size + "\" height=\"" + size +
           "\" fill=\"" + srgb_to_hex(t.color) + "\" data-index=\"" + std::to_string(t.index) +
           "\" data-start=\"" + std::to_string(seg.span.start) + "\" data-end=\"" +
           std::to_string(seg.span.end) + "\"><title>" + tooltip(seg) + "</title></rect>\n";
  }
  out += "</svg>\n";
  return out;
}

std::string emit_json(const AnalysisResult& result) {
  std::string out;
  out.reserve(128 + result.segments.size() * 160);
  out += "{\"text_length\":";
  out += std::to_string(result.text_length);
  out += ",\"granularity\":";
  out += json_string(to_string(result.granularity));
  out += ",\"segments\":[";
  for (std::size_t i = 0; i < result.segments.size(); ++i) {
    const SegmentResult& seg = result.segments[i];
    if (i != 0) out += ',';
    out += "{\"start\":";
    out += std::to_string(seg.span.start);
    out += ",\"end\":";
    out += std::to_string(seg.span.end);
    out += ",\"matched\":";
    out += std::to_string(seg.matched);
    out += ",\"total\":";
    out += std::to_string(seg.total);
    out += ",\"vad\":";
    if (seg.vad) {
      append_vad(out, *seg.vad);
    } else {
      out += "null";
    }
    out += ",\"color\":\"";
    out += srgb_to_hex(seg.color);
    out += "\",\"top_words\":[";
    for (std::size_t k = 0; k < seg.top_words.size(); ++k) {
      if (k != 0) out += ',';
      out += "{\"word\":";
      out += json_string(seg.top_words[k].word);
      out += ",\"vad\":";
      append_vad(out, seg.top_words[k].vad);
      out += '}';
    }
    out += "]}";
  }
  out += "],\"summary\":";
  if (result.summary) {
    out += "{\"vad\":";
    append_vad(out, result.summary->vad);
    out += ",\"color\":\"";
    out += srgb_to_hex(result.summary->color);
    out += "\"}";
  } else {
    out += "null";
  }
  out += ",\"config\":";
  append_config(out, result.config);
  out += '}';
  return out;
}

std::string emit_legend_svg(const LegendGrid& grid, std::size_t cell_size) {
  const std::string w = std::to_string(grid.nx * cell_size);
  const std::string h = std::to_string(grid.ny * cell_size);
  std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" +
                    h + "\" viewBox=\"0 0 " + w + " " + h + "\" data-fixed-axis=\"" +
                    std::string(to_string(grid.fixed_axis)) + "\" data-fixed-value=\"" +
                    format_real(grid.fixed_value) + "\" data-x-axis=\"" +
                    std::string(to_string(grid.x_axis)) + "\" data-y-axis=\"" +
                    std::string(to_string(grid.y_axis)) + "\">\n";
  const std::string size = std::to_string(cell_size);
  for (std::size_t y = 0; y < grid.ny; ++y) {
    for (std::size_t x = 0; x < grid.nx; ++x) {
      out += "<rect x=\"" + std::to_string(x * cell_size) + "\" y=\"" +
             std::to_string(y * cell_size) + "\" width=\"" + size + "\" height=\"" + size +
             "\" fill=\"" + srgb_to_hex(grid.at(x, y)) + "\"/>\n";
    }
  }
  out += "</svg>\n";
  return out;
}

std::string emit_legend_json(const LegendGrid& grid) {
  std::string out = "{\"axis\":\"" + std::string(to_string(grid.fixed_axis)) +
                    "\",\"value\":" + format_real(grid.fixed_value) + ",\"x_axis\":\"" +
                    std::string(to_string(grid.x_axis)) + "\",\"y_axis\":\"" +
                    std::string(to_string(grid.y_axis)) + "\",\"nx\":" + std::to_string(grid.nx) +
                    ",\"ny\":" + std::to_string(grid.ny) + ",\"grid\":[";
  for (std::size_t y = 0; y < grid.ny; ++y) {
    if (y != 0) out += ',';
    out += '[';
    for (std::size_t x = 0; x < grid.nx; ++x) {
      if (x != 0) out += ',';
      out += '"' + srgb_to_hex(grid.at(x, y)) + '"';
    }
    out += ']';
  }
  out += "]}";
  return out;
}

}  // namespace mosaic
