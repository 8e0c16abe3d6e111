#include <doctest.h>

#include <json.hpp>

#include "mosaic/service.hpp"
#include "support/fixtures.hpp"
#include "support/schema.hpp"

using namespace mosaic;
using nlohmann::json;

namespace {

AnalysisService make_service(const std::string& lexicon = "demo_vad.tsv",
                             ServiceOptions options = {}) {
  auto lex = std::make_shared<const Lexicon>(load_lexicon(testing::fixture(lexicon)));
  return AnalysisService(lex, MappingConfig{}, options);
}

std::string body(const std::string& text, const std::string& granularity) {
  return json{{"text", text}, {"granularity", granularity}}.dump();
}

}  // namespace

TEST_SUITE("service") {

TEST_CASE("analyze two sentences") {
  const auto svc = make_service();
  const auto r = svc.analyze(body("I love peace. War brings death.", "sentence"));
  CHECK(r.status == 200);
  CHECK(r.content_type == "application/json");
  CHECK(testing::validate_analysis_json(r.body).empty());
  CHECK(json::parse(r.body)["segments"].size() == 2);
  CHECK(svc.analyze(body("I love peace. War brings death.", "sentence")).body == r.body);
}

TEST_CASE("granularity defaults to sentence") {
  const auto svc = make_service();
  const auto r = svc.analyze(R"({"text": "One. Two."})");
  CHECK(r.status == 200);
  CHECK(json::parse(r.body)["granularity"] == "sentence");
}

TEST_CASE("bad requests are 400") {
  const auto svc = make_service();
  CHECK(svc.analyze("{}").status == 400);
  CHECK(svc.analyze("not json").status == 400);
  CHECK(svc.analyze("[1,2]").status == 400);
  CHECK(svc.analyze(R"({"text": 3})").status == 400);
  CHECK(svc.analyze(body("x", "window:0")).status == 400);
  CHECK(svc.analyze(body("x", "chapter")).status == 400);
  CHECK(svc.analyze(R"({"text": "x", "granularity": 5})").status == 400);
  const auto r = svc.analyze("{}");
  CHECK(json::parse(r.body).contains("error"));
}

TEST_CASE("mapping overrides are whitelisted and validated") {
  const auto svc = make_service();
  const auto ok = svc.analyze(
      R"({"text": "I love peace.", "mapping": {"hue_positive": 240, "axis_assignment": ["arousal","valence","dominance"]}})");
  REQUIRE(ok.status == 200);
  const auto doc = json::parse(ok.body);
  CHECK(doc["config"]["hue_positive"] == 240);
  CHECK(doc["config"]["axis_assignment"][0] == "arousal");

  const auto fine = svc.analyze(R"({"text": "x", "mapping": {"saturation_min": 0.123456789}})");
  CHECK(fine.status == 200);

  for (const char* bad : {R"({"text": "x", "mapping": {"colour": 1}})",
                          R"({"text": "x", "mapping": {"saturation_min": "0.1"}})",
                          R"({"text": "x", "mapping": {"saturation_min": 0}})",
                          R"({"text": "x", "mapping": {"hue_direction": 3}})",
                          R"({"text": "x", "mapping": {"axis_assignment": ["valence"]}})",
                          R"({"text": "x", "mapping": {"no_data_color": "#ff0000"}})",
                          R"({"text": "x", "mapping": 7})"}) {
    CAPTURE(bad);
    const auto r = svc.analyze(bad);
    CHECK(r.status == 400);
    CHECK(json::parse(r.body)["error"].get<std::string>().starts_with("mapping"));
  }
}

TEST_CASE("text size limit counts characters") {
  ServiceOptions options;
  options.max_text_chars = 10;
  const auto svc = make_service("demo_vad.tsv", options);
  CHECK(svc.analyze(body(std::string(10, 'a'), "word")).status == 200);
  CHECK(svc.analyze(body(std::string(11, 'a'), "word")).status == 413);
  // Ten two-byte characters are 20 bytes but within the limit.
  std::string accents;
  for (int i = 0; i < 10; ++i) accents += "\xC3\xA9";
  CHECK(svc.analyze(body(accents, "word")).status == 200);
}

TEST_CASE("empty lexicon marks every segment no-data") {
  const auto svc = make_service("lexicon_empty.tsv");
  const auto r = svc.analyze(body("I love peace. War brings death.", "sentence"));
  REQUIRE(r.status == 200);
  const auto doc = json::parse(r.body);
  for (const auto& seg : doc["segments"]) CHECK(seg["color"] == "#d9d9d9");
  CHECK(doc["summary"].is_null());
}

TEST_CASE("legend endpoint") {
  const auto svc = make_service();
  const auto r = svc.legend({{"axis", "dominance"}, {"value", "0.5"}, {"nx", "2"}, {"ny", "2"}});
  REQUIRE(r.status == 200);
  CHECK(json::parse(r.body)["grid"] ==
        json::parse(R"([["#867979","#798679"],["#f90606","#06f906"]])"));

  const auto defaults = json::parse(svc.legend({}).body);
  CHECK(defaults["nx"] == 32);
  CHECK(defaults["ny"] == 32);
  CHECK(defaults["grid"].size() == 32);
  CHECK(defaults["grid"][0].size() == 32);
  CHECK(defaults["axis"] == "dominance");

  CHECK(svc.legend({{"value", "2"}}).status == 400);
  CHECK(svc.legend({{"value", "nan"}}).status == 400);
  CHECK(svc.legend({{"axis", "joy"}}).status == 400);
  CHECK(svc.legend({{"nx", "1"}}).status == 400);
  CHECK(svc.legend({{"ny", "100000"}}).status == 400);
}

TEST_CASE("lexicon info and health") {
  const auto three = make_service("lexicon3.tsv");
  const auto info = three.lexicon_info();
  CHECK(info.status == 200);
  CHECK(json::parse(info.body) == json::parse(R"({"entries": 3, "scale": [0, 1]})"));
  CHECK(three.lexicon_info().body == info.body);
  CHECK(json::parse(make_service("lexicon_empty.tsv").lexicon_info().body)["entries"] == 0);
  CHECK(three.healthz().status == 200);
  CHECK(three.healthz().body == "ok");
  CHECK(three.index_page().content_type.starts_with("text/html"));
}

}  // TEST_SUITE
