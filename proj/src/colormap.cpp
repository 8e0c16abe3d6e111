#include "mosaic/colormap.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <system_error>

#include "mosaic/errors.hpp"
#include "mosaic/render.hpp"

namespace mosaic {

namespace {

constexpr double kGamutEps = 1e-12;

double wrap_degrees(double h) {
  h = std::fmod(h, 360.0);
  if (h < 0.0) h += 360.0;
  return h >= 360.0 ? 0.0 : h;
}

std::string_view trim(std::string_view s) {
  constexpr std::string_view ws = " \t\r\n";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(ws) - b + 1);
}

double parse_number(std::string_view key, std::string_view text) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size() ||
      !std::isfinite(value)) {
    throw ConfigError(std::string(key), "expected a number, got '" + std::string(text) + "'");
  }
  return value;
}

AxisAssignment parse_axes(std::string_view text) {
  std::array<VadAxis, 3> axes{};
  std::size_t count = 0;
  while (true) {
    const std::size_t comma = text.find(',');
    const std::string_view name = trim(text.substr(0, comma));
    const auto axis = parse_vad_axis(name);
    if (!axis || count == 3) {
      throw ConfigError("axis_assignment",
                        "expected three comma-separated axes (hue,saturation,lightness drivers)");
    }
    axes[count++] = *axis;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  if (count != 3) {
    throw ConfigError("axis_assignment",
                      "expected three comma-separated axes (hue,saturation,lightness drivers)");
  }
  return AxisAssignment{axes[0], axes[1], axes[2]};
}

double unit_lerp(double t, double lo, double hi) { return lo + t * (hi - lo); }

double unit_inverse(double value, double lo, double hi, char component) {
  if (!std::isfinite(value) || value < lo - kGamutEps || value > hi + kGamutEps) {
    throw OutOfGamutError(component, std::string(1, component) + "=" + format_real(value) +
                                         " outside [" + format_real(lo) + ", " +
                                         format_real(hi) + "]");
  }
  return std::clamp((value - lo) / (hi - lo), 0.0, 1.0);
}

}  // namespace

std::string_view to_string(HueDirection d) noexcept {
  switch (d) {
    case HueDirection::ShorterArc: return "shorter-arc";
    case HueDirection::Increasing: return "increasing";
    case HueDirection::Decreasing: return "decreasing";
  }
  return "increasing";
}

std::optional<HueDirection> parse_hue_direction(std::string_view text) noexcept {
  for (auto d : {HueDirection::ShorterArc, HueDirection::Increasing, HueDirection::Decreasing}) {
    if (to_string(d) == text) return d;
  }
  return std::nullopt;
}

void set_mapping_param(MappingParams& p, std::string_view key, std::string_view value) {
  value = trim(value);
  const std::string k(key);
  if (key == "hue_negative") {
    p.hue_negative = parse_number(key, value);
  } else if (key == "hue_positive") {
    p.hue_positive = parse_number(key, value);
  } else if (key == "hue_direction") {
    const auto d = parse_hue_direction(value);
    if (!d) throw ConfigError(k, "expected shorter-arc, increasing or decreasing");
    p.hue_direction = *d;
  } else if (key == "saturation_min") {
    p.saturation_min = parse_number(key, value);
  } else if (key == "saturation_max") {
    p.saturation_max = parse_number(key, value);
  } else if (key == "lightness_min") {
    p.lightness_min = parse_number(key, value);
  } else if (key == "lightness_max") {
    p.lightness_max = parse_number(key, value);
  } else if (key == "axis_assignment") {
    p.axis_assignment = parse_axes(value);
  } else if (key == "no_data_color") {
    const auto c = parse_hex_color(value);
    if (!c) throw ConfigError(k, "expected #rrggbb");
    p.no_data_color = *c;
  } else {
    throw ConfigError(k, "unknown mapping key");
  }
}

std::string mapping_param_text(const MappingParams& p, std::string_view key) {
  if (key == "hue_negative") return format_real(p.hue_negative);
  if (key == "hue_positive") return format_real(p.hue_positive);
  if (key == "hue_direction") return std::string(to_string(p.hue_direction));
  if (key == "saturation_min") return format_real(p.saturation_min);
  if (key == "saturation_max") return format_real(p.saturation_max);
  if (key == "lightness_min") return format_real(p.lightness_min);
  if (key == "lightness_max") return format_real(p.lightness_max);
  if (key == "axis_assignment") {
    const auto& a = p.axis_assignment;
    return std::string(to_string(a.hue)) + "," + std::string(to_string(a.saturation)) + "," +
           std::string(to_string(a.lightness));
  }
  if (key == "no_data_color") return srgb_to_hex(p.no_data_color);
  throw ConfigError(std::string(key), "unknown mapping key");
}

MappingParams read_mapping_params(std::istream& in, MappingParams base) {
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", "mapping line " + std::to_string(line_no) + ": expected key = value");
    }
    set_mapping_param(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

MappingParams load_mapping_params(const std::filesystem::path& path, MappingParams base) {
  std::ifstream in(path);
  if (!in) {
    throw std::system_error(std::make_error_code(std::errc::no_such_file_or_directory),
                            "cannot open mapping config " + path.string());
  }
  return read_mapping_params(in, base);
}

MappingConfig::MappingConfig(const MappingParams& params) : params_(params) {
  const auto& p = params_;
  for (const auto& [key, v] : {std::pair{"hue_negative", p.hue_negative},
                               std::pair{"hue_positive", p.hue_positive}}) {
    if (!std::isfinite(v) || v < 0.0 || v >= 360.0) throw ConfigError(key, "must lie in [0, 360)");
  }
  const double up = wrap_degrees(p.hue_positive - p.hue_negative);
  if (up == 0.0) throw ConfigError("hue_positive", "must differ from hue_negative");
  switch (p.hue_direction) {
    case HueDirection::Increasing: hue_travel_ = up; break;
    case HueDirection::Decreasing: hue_travel_ = up - 360.0; break;
    case HueDirection::ShorterArc: hue_travel_ = up <= 180.0 ? up : up - 360.0; break;
  }

  if (!(p.saturation_min > 0.0)) throw ConfigError("saturation_min", "must be > 0");
  if (!(p.saturation_max <= 1.0)) throw ConfigError("saturation_max", "must be <= 1");
  if (!(p.saturation_min < p.saturation_max)) {
    throw ConfigError("saturation_min", "must be < saturation_max");
  }
  if (!(p.lightness_min > 0.0)) throw ConfigError("lightness_min", "must be > 0");
  if (!(p.lightness_max < 1.0)) throw ConfigError("lightness_max", "must be < 1");
  if (!(p.lightness_min < p.lightness_max)) {
    throw ConfigError("lightness_min", "must be < lightness_max");
  }

  const auto& a = p.axis_assignment;
  if (a.hue == a.saturation || a.hue == a.lightness || a.saturation == a.lightness) {
    throw ConfigError("axis_assignment", "must be a permutation of valence, arousal, dominance");
  }

  if (!p.no_data_color.achromatic()) throw ConfigError("no_data_color", "must be a gray (r=g=b)");
  // Smallest chroma in the image occurs at minimum saturation and the
  // lightness extreme farthest from 0.5.
  const double edge = std::min(1.0 - std::abs(2.0 * p.lightness_min - 1.0),
                               1.0 - std::abs(2.0 * p.lightness_max - 1.0));
  if (p.saturation_min * edge * 255.0 < 1.0) {
    throw ConfigError("saturation_min",
                      "too small for the lightness range: some colours would quantize to gray");
  }
}

ColorHsl vad_to_hsl(const VadVector& vad, const MappingConfig& cfg) {
  const auto& p = cfg.params();
  const auto& a = p.axis_assignment;
  return ColorHsl{
      wrap_degrees(p.hue_negative + vad[a.hue] * cfg.hue_travel()),
      unit_lerp(vad[a.saturation], p.saturation_min, p.saturation_max),
      unit_lerp(vad[a.lightness], p.lightness_min, p.lightness_max),
  };
}

VadVector hsl_to_vad(const ColorHsl& color, const MappingConfig& cfg) {
  const auto& p = cfg.params();
  if (!std::isfinite(color.h)) throw OutOfGamutError('h', "hue is not finite");

  const double arc = std::abs(cfg.hue_travel());
  double along = wrap_degrees(cfg.hue_travel() > 0.0 ? color.h - p.hue_negative
                                                     : p.hue_negative - color.h);
  if (along > arc) {
    if (along > 360.0 - 1e-9) {
      along = 0.0;  // just behind the start of the arc
    } else if (along - arc > 1e-9) {
      throw OutOfGamutError('h', "h=" + format_real(color.h) + " outside the hue arc from " +
                                     format_real(p.hue_negative) + " to " +
                                     format_real(p.hue_positive));
    } else {
      along = arc;
    }
  }

  VadVector vad;
  const auto& a = p.axis_assignment;
  vad[a.hue] = along / arc;
  vad[a.saturation] = unit_inverse(color.s, p.saturation_min, p.saturation_max, 's');
  vad[a.lightness] = unit_inverse(color.l, p.lightness_min, p.lightness_max, 'l');
  return vad;
}

ColorSrgb hsl_to_srgb(const ColorHsl& color) {
  const double s = std::clamp(color.s, 0.0, 1.0);
  const double l = std::clamp(color.l, 0.0, 1.0);
  const double chroma = (1.0 - std::abs(2.0 * l - 1.0)) * s;
  const double sector = wrap_degrees(color.h) / 60.0;
  const double x = chroma * (1.0 - std::abs(std::fmod(sector, 2.0) - 1.0));
  double r = 0.0, g = 0.0, b = 0.0;
  switch (static_cast<int>(sector)) {
    case 0: r = chroma, g = x; break;
    case 1: r = x, g = chroma; break;
    case 2: g = chroma, b = x; break;
    case 3: g = x, b = chroma; break;
    case 4: r = x, b = chroma; break;
    default: r = chroma, b = x; break;
  }
  const double m = l - chroma / 2.0;
  const auto channel = [m](double c) {
    return static_cast<std::uint8_t>(std::clamp(std::round((c + m) * 255.0), 0.0, 255.0));
  };
  return ColorSrgb{channel(r), channel(g), channel(b)};
}

ColorHsl srgb_to_hsl(const ColorSrgb& color) {
  const double r = color.r / 255.0;
  const double g = color.g / 255.0;
  const double b = color.b / 255.0;
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double chroma = hi - lo;
  const double l = (hi + lo) / 2.0;
  if (chroma == 0.0) return ColorHsl{0.0, 0.0, l};

  const double s = chroma / (1.0 - std::abs(2.0 * l - 1.0));
  double h = 0.0;
  if (hi == r) {
    h = 60.0 * std::fmod((g - b) / chroma, 6.0);
  } else if (hi == g) {
    h = 60.0 * ((b - r) / chroma + 2.0);
  } else {
    h = 60.0 * ((r - g) / chroma + 4.0);
  }
  return ColorHsl{wrap_degrees(h), std::min(s, 1.0), l};
}

std::string srgb_to_hex(const ColorSrgb& color) {
  constexpr char digits[] = "0123456789abcdef";
  std::string out = "#";
  for (std::uint8_t c : {color.r, color.g, color.b}) {
    out.push_back(digits[c >> 4]);
    out.push_back(digits[c & 0xF]);
  }
  return out;
}

std::optional<ColorSrgb> parse_hex_color(std::string_view text) {
  if (text.size() != 7 || text.front() != '#') return std::nullopt;
  std::array<std::uint8_t, 3> ch{};
  for (std::size_t i = 0; i < 3; ++i) {
    const char* first = text.data() + 1 + 2 * i;
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(first, first + 2, value, 16);
    if (ec != std::errc{} || ptr != first + 2) return std::nullopt;
    ch[i] = static_cast<std::uint8_t>(value);
  }
  return ColorSrgb{ch[0], ch[1], ch[2]};
}

LegendGrid legend_slice(VadAxis fixed_axis, double fixed_value, std::size_t nx, std::size_t ny,
                        const MappingConfig& cfg) {
  if (nx < 2 || ny < 2) throw std::invalid_argument("legend grid needs at least 2x2 cells");
  if (!(fixed_value >= 0.0 && fixed_value <= 1.0)) {
    throw std::invalid_argument("legend fixed value must lie in [0, 1]");
  }
  LegendGrid grid;
  grid.fixed_axis = fixed_axis;
  grid.fixed_value = fixed_value;
  std::array<VadAxis, 2> free{};
  std::size_t k = 0;
  for (VadAxis axis : kVadAxes) {
    if (axis != fixed_axis) free[k++] = axis;
  }
  grid.x_axis = free[0];
  grid.y_axis = free[1];
  grid.nx = nx;
  grid.ny = ny;
  grid.cells.reserve(nx * ny);
  for (std::size_t y = 0; y < ny; ++y) {
    for (std::size_t x = 0; x < nx; ++x) {
      VadVector vad;
      vad[fixed_axis] = fixed_value;
      vad[grid.x_axis] = static_cast<double>(x) / static_cast<double>(nx - 1);
      vad[grid.y_axis] = static_cast<double>(y) / static_cast<double>(ny - 1);
      grid.cells.push_back(vad_to_srgb(vad, cfg));
    }
  }
  return grid;
}

}  // namespace mosaic
