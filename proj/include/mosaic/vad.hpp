#pragma once

#include <array>
#include <optional>
#include <string_view>

namespace mosaic {

enum class VadAxis { Valence = 0, Arousal = 1, Dominance = 2 };

inline constexpr std::array<VadAxis, 3> kVadAxes{VadAxis::Valence, VadAxis::Arousal,
                                                 VadAxis::Dominance};

[[nodiscard]] std::string_view to_string(VadAxis axis) noexcept;
[[nodiscard]] std::optional<VadAxis> parse_vad_axis(std::string_view name) noexcept;

/// A point in the valence/arousal/dominance unit cube.
struct VadVector {
  double valence = 0.5;
  double arousal = 0.5;
  double dominance = 0.5;

  [[nodiscard]] constexpr double operator[](VadAxis axis) const noexcept {
    switch (axis) {
      case VadAxis::Valence: return valence;
      case VadAxis::Arousal: return arousal;
      case VadAxis::Dominance: return dominance;
    }
    return 0.0;
  }
  [[nodiscard]] constexpr double& operator[](VadAxis axis) noexcept {
    switch (axis) {
      case VadAxis::Arousal: return arousal;
      case VadAxis::Dominance: return dominance;
      default: return valence;
    }
  }

  [[nodiscard]] constexpr bool in_unit_cube() const noexcept {
    return valence >= 0.0 && valence <= 1.0 && arousal >= 0.0 && arousal <= 1.0 &&
           dominance >= 0.0 && dominance <= 1.0;
  }

  friend constexpr bool operator==(const VadVector&, const VadVector&) = default;
};

inline constexpr VadVector kNeutralVad{0.5, 0.5, 0.5};

/// Euclidean distance from the neutral point.
[[nodiscard]] double distance_from_neutral(const VadVector& vad) noexcept;

}  // namespace mosaic
