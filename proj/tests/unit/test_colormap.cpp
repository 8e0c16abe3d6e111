#include <doctest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "mosaic/colormap.hpp"
#include "mosaic/errors.hpp"
#include "support/oracles.hpp"
#include "support/reference_colors.hpp"

using namespace mosaic;

namespace {

const MappingConfig kDefault{};

void check_hsl(const ColorHsl& c, double h, double s, double l, double tol = 1e-12) {
  CHECK(c.h == doctest::Approx(h).epsilon(tol));
  CHECK(c.s == doctest::Approx(s).epsilon(tol));
  CHECK(c.l == doctest::Approx(l).epsilon(tol));
}

int channel_diff(const ColorSrgb& a, const ColorSrgb& b) {
  return std::max({std::abs(a.r - b.r), std::abs(a.g - b.g), std::abs(a.b - b.b)});
}

MappingParams with(const std::string& key, const std::string& value) {
  MappingParams p;
  set_mapping_param(p, key, value);
  return p;
}

// Random valid configuration (rejection-sampled).
MappingConfig random_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> hue(0.0, 360.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> pick(0, 5);
  while (true) {
    MappingParams p;
    p.hue_negative = std::floor(hue(rng));
    p.hue_positive = std::floor(hue(rng));
    p.hue_direction = static_cast<HueDirection>(pick(rng) % 3);
    p.saturation_min = unit(rng);
    p.saturation_max = unit(rng);
    p.lightness_min = unit(rng);
    p.lightness_max = unit(rng);
    if (p.saturation_min > p.saturation_max) std::swap(p.saturation_min, p.saturation_max);
    if (p.lightness_min > p.lightness_max) std::swap(p.lightness_min, p.lightness_max);
    static const AxisAssignment perms[] = {
        {VadAxis::Valence, VadAxis::Arousal, VadAxis::Dominance},
        {VadAxis::Valence, VadAxis::Dominance, VadAxis::Arousal},
        {VadAxis::Arousal, VadAxis::Valence, VadAxis::Dominance},
        {VadAxis::Arousal, VadAxis::Dominance, VadAxis::Valence},
        {VadAxis::Dominance, VadAxis::Valence, VadAxis::Arousal},
        {VadAxis::Dominance, VadAxis::Arousal, VadAxis::Valence}};
    p.axis_assignment = perms[pick(rng)];
    try {
      return MappingConfig(p);
    } catch (const ConfigError&) {
    }
  }
}

}  // namespace

TEST_SUITE("colormap") {

TEST_CASE("vad_to_hsl with the default mapping") {
  check_hsl(vad_to_hsl({0.5, 0.5, 0.5}, kDefault), 60.0, 0.50, 0.50);
  check_hsl(vad_to_hsl({1.0, 1.0, 1.0}, kDefault), 120.0, 0.95, 0.75);
  check_hsl(vad_to_hsl({0.0, 0.0, 0.0}, kDefault), 0.0, 0.05, 0.25);
}

TEST_CASE("hsl_to_vad inverts the default mapping") {
  const auto mid = hsl_to_vad({60.0, 0.5, 0.5}, kDefault);
  CHECK(mid.valence == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mid.arousal == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(mid.dominance == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(hsl_to_vad({120.0, 0.95, 0.75}, kDefault) == VadVector{1.0, 1.0, 1.0});
}

TEST_CASE("hsl_to_vad names the out-of-gamut component") {
  const auto component = [](const ColorHsl& c) {
    try {
      (void)hsl_to_vad(c, kDefault);
    } catch (const OutOfGamutError& e) {
      return e.component();
    }
    return '-';
  };
  CHECK(component({60.0, 0.01, 0.5}) == 's');
  CHECK(component({60.0, 0.99, 0.5}) == 's');
  CHECK(component({60.0, 0.5, 0.2}) == 'l');
  CHECK(component({60.0, 0.5, 0.8}) == 'l');
  CHECK(component({200.0, 0.5, 0.5}) == 'h');
  CHECK(component({std::nan(""), 0.5, 0.5}) == 'h');
}

TEST_CASE("wrapping and decreasing hue arcs") {
  const MappingConfig wrap{with("hue_negative", "300")};  // 300 -> 120 increasing: 180 deg
  CHECK(wrap.hue_travel() == 180.0);
  check_hsl(vad_to_hsl({0.5, 0.5, 0.5}, wrap), 30.0, 0.5, 0.5);

  MappingParams p;
  p.hue_direction = HueDirection::Decreasing;  // 0 -> 120 going down: 240 deg
  const MappingConfig down{p};
  CHECK(down.hue_travel() == -240.0);
  check_hsl(vad_to_hsl({0.5, 0.5, 0.5}, down), 240.0, 0.5, 0.5);
  CHECK(hsl_to_vad({240.0, 0.5, 0.5}, down).valence == doctest::Approx(0.5));
  CHECK_THROWS_AS((void)hsl_to_vad({60.0, 0.5, 0.5}, down), OutOfGamutError);

  p.hue_direction = HueDirection::ShorterArc;
  p.hue_negative = 350;
  p.hue_positive = 10;
  CHECK(MappingConfig{p}.hue_travel() == doctest::Approx(20.0));
  p.hue_negative = 10;
  p.hue_positive = 350;
  CHECK(MappingConfig{p}.hue_travel() == doctest::Approx(-20.0));
}

TEST_CASE("hsl_to_srgb known answers") {
  CHECK(hsl_to_srgb({0.0, 1.0, 0.5}) == ColorSrgb{255, 0, 0});
  CHECK(hsl_to_srgb({240.0, 1.0, 0.5}) == ColorSrgb{0, 0, 255});
  for (double h : {0.0, 45.0, 200.0, 359.9}) CHECK(hsl_to_srgb({h, 0.0, 0.5}) == ColorSrgb{128, 128, 128});
}

TEST_CASE("reference colour table, both directions") {
  for (const auto& ref : testing::kReferenceColors) {
    CAPTURE(ref.name);
    CHECK(channel_diff(hsl_to_srgb({ref.h, ref.s, ref.l}), {ref.r, ref.g, ref.b}) <= 1);
    const ColorHsl back = srgb_to_hsl({ref.r, ref.g, ref.b});
    CHECK(std::abs(back.s - ref.s) <= 1.0 / 255);
    CHECK(std::abs(back.l - ref.l) <= 1.0 / 255);
    if (ref.s > 0) CHECK(std::abs(back.h - ref.h) <= 0.5);
  }
}

TEST_CASE("hexcone conversion agrees with the CSS formulation") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> hue(0.0, 360.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int exact = 0;
  for (int i = 0; i < 20000; ++i) {
    const double h = hue(rng), s = unit(rng), l = unit(rng);
    const ColorSrgb a = hsl_to_srgb({h, s, l});
    const ColorSrgb b = testing::css_hsl_to_srgb8(h, s, l);
    CHECK(channel_diff(a, b) <= 1);
    exact += a == b ? 1 : 0;
  }
  CHECK(exact >= 19990);  // only rounding ties at .5 may differ
}

TEST_CASE("srgb_to_hsl round trips every 8-bit colour on a lattice") {
  for (int r = 0; r <= 255; r += 15) {
    for (int g = 0; g <= 255; g += 15) {
      for (int b = 0; b <= 255; b += 15) {
        const ColorSrgb c{static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                          static_cast<std::uint8_t>(b)};
        CHECK(hsl_to_srgb(srgb_to_hsl(c)) == c);
      }
    }
  }
}

TEST_CASE("hex formatting and parsing") {
  CHECK(srgb_to_hex({255, 0, 0}) == "#ff0000");
  CHECK(srgb_to_hex({0, 0, 0}) == "#000000");
  CHECK(srgb_to_hex({171, 205, 239}) == "#abcdef");
  CHECK(parse_hex_color("#ABCDEF") == ColorSrgb{171, 205, 239});
  CHECK_FALSE(parse_hex_color("abcdef"));
  CHECK_FALSE(parse_hex_color("#abcde"));
  CHECK_FALSE(parse_hex_color("#abcdeg"));
}

TEST_CASE("legend slice at dominance 0.5") {
  const auto grid = legend_slice(VadAxis::Dominance, 0.5, 2, 2, kDefault);
  CHECK(grid.x_axis == VadAxis::Valence);
  CHECK(grid.y_axis == VadAxis::Arousal);
  REQUIRE(grid.cells.size() == 4);
  // Corners (v, a) in {0,1}^2 at d = 0.5, worked through the hexcone by hand:
  // s = 0.05 -> m = 0.475, C = 0.05; s = 0.95 -> m = 0.025, C = 0.95.
  CHECK(srgb_to_hex(grid.at(0, 0)) == "#867979");
  CHECK(srgb_to_hex(grid.at(1, 0)) == "#798679");
  CHECK(srgb_to_hex(grid.at(0, 1)) == "#f90606");
  CHECK(srgb_to_hex(grid.at(1, 1)) == "#06f906");
  for (std::size_t y = 0; y < 2; ++y) {
    for (std::size_t x = 0; x < 2; ++x) {
      const VadVector vad{double(x), double(y), 0.5};
      CHECK(grid.at(x, y) == vad_to_srgb(vad, kDefault));
    }
  }
}

TEST_CASE("legend slice pins the driven channel") {
  const auto grid = legend_slice(VadAxis::Valence, 1.0, 5, 4, kDefault);
  CHECK(grid.cells.size() == 20);
  CHECK(grid.x_axis == VadAxis::Arousal);
  CHECK(grid.y_axis == VadAxis::Dominance);
  for (std::size_t y = 0; y < grid.ny; ++y) {
    for (std::size_t x = 0; x < grid.nx; ++x) {
      const ColorHsl hsl = vad_to_hsl({1.0, x / 4.0, y / 3.0}, kDefault);
      CHECK(hsl.h == 120.0);
      CHECK(grid.at(x, y) == hsl_to_srgb(hsl));
    }
  }
  CHECK(legend_slice(VadAxis::Arousal, 0.0, 2, 3, kDefault).cells.size() == 6);
  CHECK_THROWS_AS((void)legend_slice(VadAxis::Arousal, 0.0, 1, 3, kDefault),
                  std::invalid_argument);
  CHECK_THROWS_AS((void)legend_slice(VadAxis::Arousal, 1.5, 2, 3, kDefault),
                  std::invalid_argument);
}

TEST_CASE("bijectivity on random points and random configurations") {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 50; ++c) {
    const MappingConfig cfg = c == 0 ? kDefault : random_config(rng);
    double worst = 0.0;
    for (int i = 0; i < 2000; ++i) {
      const VadVector p{unit(rng), unit(rng), unit(rng)};
      const VadVector q = hsl_to_vad(vad_to_hsl(p, cfg), cfg);
      for (VadAxis axis : kVadAxes) worst = std::max(worst, std::abs(p[axis] - q[axis]));
    }
    CHECK(worst < 1e-9);
  }
}

TEST_CASE("corners round trip exactly enough") {
  std::mt19937_64 rng(8);
  for (int c = 0; c < 50; ++c) {
    const MappingConfig cfg = random_config(rng);
    for (double v : {0.0, 1.0}) {
      for (double a : {0.0, 1.0}) {
        for (double d : {0.0, 1.0}) {
          const VadVector q = hsl_to_vad(vad_to_hsl({v, a, d}, cfg), cfg);
          CHECK(std::abs(q.valence - v) < 1e-9);
          CHECK(std::abs(q.arousal - a) < 1e-9);
          CHECK(std::abs(q.dominance - d) < 1e-9);
        }
      }
    }
  }
}

TEST_CASE("mapped colours are never the no-data grey") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int c = 0; c < 30; ++c) {
    const MappingConfig cfg = c == 0 ? kDefault : random_config(rng);
    for (int i = 0; i < 500; ++i) {
      const ColorSrgb col = vad_to_srgb({unit(rng), unit(rng), unit(rng)}, cfg);
      CHECK_FALSE(col.achromatic());
      CHECK(col != cfg.params().no_data_color);
    }
  }
}

TEST_CASE("invalid configurations are rejected at construction") {
  const auto rejects = [](const std::string& key, const std::string& value) {
    try {
      MappingConfig cfg{with(key, value)};
    } catch (const ConfigError& e) {
      return e.key();
    }
    return std::string("accepted");
  };
  CHECK(rejects("saturation_min", "0") == "saturation_min");
  CHECK(rejects("saturation_min", "0.95") == "saturation_min");
  CHECK(rejects("saturation_max", "1.2") == "saturation_max");
  CHECK(rejects("lightness_min", "0") == "lightness_min");
  CHECK(rejects("lightness_max", "1") == "lightness_max");
  CHECK(rejects("lightness_min", "0.8") == "lightness_min");
  CHECK(rejects("hue_positive", "0") == "hue_positive");
  CHECK(rejects("hue_negative", "360") == "hue_negative");
  CHECK(rejects("hue_negative", "-1") == "hue_negative");
  CHECK(rejects("axis_assignment", "valence,valence,dominance") == "axis_assignment");
  CHECK(rejects("no_data_color", "#d9d9da") == "no_data_color");
  CHECK(rejects("saturation_min", "0.001") == "saturation_min");
  CHECK(rejects("saturation_min", "0.1") == "accepted");

  CHECK_THROWS_AS(with("unknown_key", "1"), ConfigError);
  CHECK_THROWS_AS(with("hue_direction", "sideways"), ConfigError);
  CHECK_THROWS_AS(with("saturation_min", "abc"), ConfigError);
  CHECK_THROWS_AS(with("axis_assignment", "valence,arousal"), ConfigError);
  CHECK_THROWS_AS(with("no_data_color", "grey"), ConfigError);
}

TEST_CASE("mapping config file") {
  std::istringstream in(
      "# custom mapping\n"
      "hue_negative = 240\n"
      "hue_positive=0\n"
      "hue_direction = decreasing\n"
      "saturation_min = 0.2\n"
      "axis_assignment = arousal, valence, dominance\n"
      "no_data_color = #CCCCCC\n");
  const auto p = read_mapping_params(in);
  CHECK(p.hue_negative == 240.0);
  CHECK(p.hue_positive == 0.0);
  CHECK(p.hue_direction == HueDirection::Decreasing);
  CHECK(p.saturation_min == 0.2);
  CHECK(p.saturation_max == 0.95);
  CHECK(p.axis_assignment == AxisAssignment{VadAxis::Arousal, VadAxis::Valence, VadAxis::Dominance});
  CHECK(p.no_data_color == ColorSrgb{0xcc, 0xcc, 0xcc});
  const MappingConfig cfg{p};
  CHECK(cfg.hue_travel() == -240.0);
  // Arousal now drives hue.
  check_hsl(vad_to_hsl({0.0, 0.5, 0.5}, cfg), 120.0, 0.2, 0.5);

  std::istringstream bad("hue_negative 240\n");
  CHECK_THROWS_AS((void)read_mapping_params(bad), ConfigError);

  MappingParams round;
  for (auto key : kMappingKeys) set_mapping_param(round, key, mapping_param_text(p, key));
  CHECK(round.axis_assignment == p.axis_assignment);
  CHECK(round.hue_direction == p.hue_direction);
  CHECK(round.no_data_color == p.no_data_color);
}

}  // TEST_SUITE
