#include "mosaic/vad.hpp"

#include <cmath>

namespace mosaic {

std::string_view to_string(VadAxis axis) noexcept {
  switch (axis) {
    case VadAxis::Valence: return "valence";
    case VadAxis::Arousal: return "arousal";
    case VadAxis::Dominance: return "dominance";
  }
  return "valence";
}

std::optional<VadAxis> parse_vad_axis(std::string_view name) noexcept {
  for (VadAxis axis : kVadAxes) {
    if (to_string(axis) == name) return axis;
  }
  return std::nullopt;
}

double distance_from_neutral(const VadVector& vad) noexcept {
  const double dv = vad.valence - kNeutralVad.valence;
  const double da = vad.arousal - kNeutralVad.arousal;
  const double dd = vad.dominance - kNeutralVad.dominance;
  return std::sqrt(dv * dv + da * da + dd * dd);
}

}  // namespace mosaic
