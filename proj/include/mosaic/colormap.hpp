#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mosaic/vad.hpp"

namespace mosaic {

struct ColorHsl {
  double h = 0.0;  // degrees, [0, 360)
  double s = 0.0;
  double l = 0.0;
};

struct ColorSrgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  [[nodiscard]] constexpr bool achromatic() const noexcept { return r == g && g == b; }
  friend constexpr bool operator==(const ColorSrgb&, const ColorSrgb&) = default;
};

enum class HueDirection { ShorterArc, Increasing, Decreasing };

[[nodiscard]] std::string_view to_string(HueDirection d) noexcept;
[[nodiscard]] std::optional<HueDirection> parse_hue_direction(std::string_view text) noexcept;

/// Which VAD component drives each HSL channel.
struct AxisAssignment {
  VadAxis hue = VadAxis::Valence;
  VadAxis saturation = VadAxis::Arousal;
  VadAxis lightness = VadAxis::Dominance;

  friend constexpr bool operator==(const AxisAssignment&, const AxisAssignment&) = default;
};

/// Raw, unvalidated mapping parameters. Field names double as config-file keys.
struct MappingParams {
  double hue_negative = 0.0;
  double hue_positive = 120.0;
  HueDirection hue_direction = HueDirection::Increasing;
  double saturation_min = 0.05;
  double saturation_max = 0.95;
  double lightness_min = 0.25;
  double lightness_max = 0.75;
  AxisAssignment axis_assignment{};
  ColorSrgb no_data_color{0xd9, 0xd9, 0xd9};
};

/// Config keys in canonical order.
inline constexpr std::string_view kMappingKeys[] = {
    "hue_negative",   "hue_positive",  "hue_direction",   "saturation_min", "saturation_max",
    "lightness_min",  "lightness_max", "axis_assignment", "no_data_color"};

/// Sets one parameter from its textual form. Throws ConfigError naming the key
/// for unknown keys or unparsable values. Does not validate combinations.
void set_mapping_param(MappingParams& params, std::string_view key, std::string_view value);

/// Textual form of one parameter, accepted back by set_mapping_param.
[[nodiscard]] std::string mapping_param_text(const MappingParams& params, std::string_view key);

/// Reads flat `key = value` lines ('#' comments) over `base`.
[[nodiscard]] MappingParams read_mapping_params(std::istream& in, MappingParams base = {});
[[nodiscard]] MappingParams load_mapping_params(const std::filesystem::path& path,
                                                MappingParams base = {});

/// A validated, immutable emotion -> colour mapping.
///
/// Valid configurations keep the mapping a bijection onto its image: the hue
/// arc is non-empty and shorter than a full turn, saturation_min > 0,
/// 0 < lightness_min < lightness_max < 1, and the three channels are driven by
/// distinct VAD axes. Two further rules keep no-data tiles distinguishable
/// after 8-bit quantization: no_data_color must be achromatic and every mapped
/// colour must keep at least one 8-bit step of chroma.
class MappingConfig {
 public:
  /// Throws ConfigError on the first violated rule.
  explicit MappingConfig(const MappingParams& params = {});

  [[nodiscard]] const MappingParams& params() const noexcept { return params_; }
  /// Signed hue travel from hue_negative to hue_positive in degrees;
  /// positive means increasing hue.
  [[nodiscard]] double hue_travel() const noexcept { return hue_travel_; }

 private:
  MappingParams params_;
  double hue_travel_ = 0.0;
};

[[nodiscard]] ColorHsl vad_to_hsl(const VadVector& vad, const MappingConfig& cfg);

/// Exact inverse of vad_to_hsl. Throws OutOfGamutError naming the channel
/// when `color` lies outside the image of the mapping.
[[nodiscard]] VadVector hsl_to_vad(const ColorHsl& color, const MappingConfig& cfg);

/// Hexcone HSL -> RGB, channels rounded half away from zero.
[[nodiscard]] ColorSrgb hsl_to_srgb(const ColorHsl& color);
[[nodiscard]] ColorHsl srgb_to_hsl(const ColorSrgb& color);

/// Lowercase "#rrggbb".
[[nodiscard]] std::string srgb_to_hex(const ColorSrgb& color);
/// Accepts "#rrggbb" in either case.
[[nodiscard]] std::optional<ColorSrgb> parse_hex_color(std::string_view text);

[[nodiscard]] inline ColorSrgb vad_to_srgb(const VadVector& vad, const MappingConfig& cfg) {
  return hsl_to_srgb(vad_to_hsl(vad, cfg));
}

/// A row-major colour grid.
struct LegendGrid {
  VadAxis fixed_axis = VadAxis::Dominance;
  double fixed_value = 0.5;
  VadAxis x_axis = VadAxis::Valence;
  VadAxis y_axis = VadAxis::Arousal;
  std::size_t nx = 0;
  std::size_t ny = 0;
  std::vector<ColorSrgb> cells;

  [[nodiscard]] const ColorSrgb& at(std::size_t x, std::size_t y) const {
    return cells[y * nx + x];
  }
};

/// Samples the two free axes on an inclusive uniform grid over [0,1]^2. The
/// first free axis (in valence, arousal, dominance order) runs along x.
/// Throws std::invalid_argument if nx or ny < 2 or fixed_value is outside [0,1].
[[nodiscard]] LegendGrid legend_slice(VadAxis fixed_axis, double fixed_value, std::size_t nx,
                                      std::size_t ny, const MappingConfig& cfg);

}  // namespace mosaic
