#include <doctest.h>

#include <random>
#include <sstream>

#include "mosaic/errors.hpp"
#include "mosaic/lexicon.hpp"
#include "support/fixtures.hpp"

using namespace mosaic;

namespace {

Lexicon parse(const std::string& tsv, RatingScale scale = {},
              DuplicatePolicy policy = DuplicatePolicy::Reject) {
  std::istringstream in(tsv);
  return parse_lexicon(in, scale, policy);
}

void check_vad(const VadVector& got, const VadVector& want, double tol = 1e-12) {
  CHECK(got.valence == doctest::Approx(want.valence).epsilon(tol));
  CHECK(got.arousal == doctest::Approx(want.arousal).epsilon(tol));
  CHECK(got.dominance == doctest::Approx(want.dominance).epsilon(tol));
}

}  // namespace

TEST_SUITE("lexicon") {

TEST_CASE("normalize_scale maps bounds and midpoint") {
  CHECK(normalize_scale(5.0, 1.0, 9.0) == 0.5);
  CHECK(normalize_scale(1.0, 1.0, 9.0) == 0.0);
  CHECK(normalize_scale(9.0, 1.0, 9.0) == 1.0);
  CHECK(normalize_scale(7.4, 1.0, 9.0) == doctest::Approx(0.8).epsilon(1e-12));
}

TEST_CASE("normalize_scale rejects bad input") {
  CHECK_THROWS_AS((void)normalize_scale(9.5, 1.0, 9.0), std::domain_error);
  CHECK_THROWS_AS((void)normalize_scale(0.5, 1.0, 9.0), std::domain_error);
  CHECK_THROWS_AS((void)normalize_scale(1.0, 1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS((void)normalize_scale(1.0, 2.0, 1.0), std::domain_error);
}

TEST_CASE("normalize_scale is order preserving") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-100.0, 100.0);
  for (int i = 0; i < 2000; ++i) {
    double lo = u(rng), hi = u(rng);
    if (lo == hi) continue;
    if (lo > hi) std::swap(lo, hi);
    std::uniform_real_distribution<double> in(lo, hi);
    double a = in(rng), b = in(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    CHECK(normalize_scale(a, lo, hi) <= normalize_scale(b, lo, hi));
    if ((b - a) / (hi - lo) > 1e-12) CHECK(normalize_scale(a, lo, hi) < normalize_scale(b, lo, hi));
  }
}

TEST_CASE("rating scale parsing") {
  CHECK(parse_rating_scale("0-1") == RatingScale{0.0, 1.0});
  CHECK(parse_rating_scale("1-9") == RatingScale{1.0, 9.0});
  CHECK(parse_rating_scale("-1-1") == RatingScale{-1.0, 1.0});
  CHECK_FALSE(parse_rating_scale("9-1"));
  CHECK_FALSE(parse_rating_scale("1"));
  CHECK_FALSE(parse_rating_scale("a-b"));
  CHECK_FALSE(parse_rating_scale(""));
}

TEST_CASE("three-row fixture at unit scale") {
  const auto lex = load_lexicon(testing::fixture("lexicon3.tsv"));
  CHECK(lex.entry_count() == 3);
  CHECK(lex.source_scale() == RatingScale{0.0, 1.0});
  // Frozen from an independent re-parse of the fixture.
  check_vad(*lex.lookup("happy"), {0.9, 0.6, 0.7});
  check_vad(*lex.lookup("sad"), {0.1, 0.3, 0.2});
  check_vad(*lex.lookup("calm"), {0.7, 0.1, 0.6});
}

TEST_CASE("1-9 scale fixture with comment, header, CRLF and mixed case") {
  const auto lex = load_lexicon(testing::fixture("lexicon_1to9.tsv"), RatingScale{1.0, 9.0});
  CHECK(lex.entry_count() == 3);
  check_vad(*lex.lookup("happy"), {0.9, 0.625, 0.8});
  check_vad(*lex.lookup("sad"), {0.0, 0.3, 0.2});
  check_vad(*lex.lookup("calm"), {0.7, 0.1, 1.0});
  CHECK_FALSE(lex.lookup("Happy"));
}

TEST_CASE("header-only file is empty") {
  const auto lex = load_lexicon(testing::fixture("lexicon_empty.tsv"));
  CHECK(lex.entry_count() == 0);
  CHECK(parse("").entry_count() == 0);
  CHECK(parse("# only a comment\n\n").entry_count() == 0);
}

TEST_CASE("missing columns is reported with its line number") {
  try {
    (void)parse("term\tv\ta\td\nsad\t0.1\t0.2\t0.3\nhappy\t0.9\n");
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(e.line() == 3);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("first data row without a header is not mistaken for one") {
  try {
    (void)parse("happy\t0.9\n");
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(e.line() == 1);
  }
}

TEST_CASE("non-numeric and out-of-range ratings name row and column") {
  try {
    (void)parse("term\tv\ta\td\nhappy\t0.9\tx\t0.1\n");
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  try {
    (void)parse("happy\t0.9\t0.5\t1.5\n");
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 4);
  }
  CHECK_THROWS_AS((void)parse("happy\t0.9\t0.5\t0.1\t0.2\n"), LexiconError);
  CHECK_THROWS_AS((void)parse("\t0.9\t0.5\t0.1\n"), LexiconError);
}

TEST_CASE("ratings at the scale bounds are accepted") {
  const auto lex = parse("edge\t0\t1\t0\n");
  check_vad(*lex.lookup("edge"), {0.0, 1.0, 0.0});
}

TEST_CASE("duplicate policy") {
  const std::string tsv = "Happy\t0.9\t0.5\t0.5\nhappy\t0.1\t0.5\t0.5\n";
  try {
    (void)parse(tsv);
    FAIL("expected LexiconError");
  } catch (const LexiconError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("happy") != std::string::npos);
  }
  const auto lex = parse(tsv, {}, DuplicatePolicy::LastWins);
  CHECK(lex.entry_count() == 1);
  CHECK(lex.lookup("happy")->valence == 0.1);
}

TEST_CASE("multi-word rows are skipped") {
  const auto lex = parse("ice cream\t0.8\t0.5\t0.5\nice\t0.4\t0.3\t0.5\n");
  CHECK(lex.entry_count() == 1);
  CHECK(lex.skipped_multiword() == 1);
}

TEST_CASE("lookup semantics") {
  const auto lex = load_lexicon(testing::fixture("lexicon3.tsv"));
  CHECK_FALSE(lex.lookup("joyful"));
  CHECK_FALSE(lex.lookup(""));
  const auto first = lex.lookup("happy");
  for (int i = 0; i < 5; ++i) CHECK(lex.lookup("happy") == first);
  CHECK(lex.entry_count() == 3);
}

TEST_CASE("missing file raises system_error") {
  CHECK_THROWS_AS((void)load_lexicon("/nonexistent/lexicon.tsv"), std::system_error);
}

TEST_CASE("parse-serialize round trip") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(1.0, 9.0);
  std::string tsv = "word\tvalence\tarousal\tdominance\n";
  for (int i = 0; i < 300; ++i) {
    tsv += "w" + std::string(1, static_cast<char>('a' + i % 26)) + std::to_string(i);
    for (int k = 0; k < 3; ++k) tsv += "\t" + std::to_string(u(rng));
    tsv += "\n";
  }
  const auto first = parse(tsv, RatingScale{1.0, 9.0});
  std::ostringstream out;
  write_lexicon(out, first);
  const auto second = parse(out.str());
  REQUIRE(second.entry_count() == first.entry_count());
  for (const auto& e : first.sorted_entries()) {
    const auto v = second.lookup(e.term);
    REQUIRE(v);
    CHECK(std::abs(v->valence - e.vad.valence) <= 1e-12);
    CHECK(std::abs(v->arousal - e.vad.arousal) <= 1e-12);
    CHECK(std::abs(v->dominance - e.vad.dominance) <= 1e-12);
  }
}

}  // TEST_SUITE
