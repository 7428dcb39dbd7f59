#include <cmath>
#include <string>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "polarimeter/config.hpp"
#include "polarimeter/sentiment.hpp"
#include "polarimeter/util.hpp"

using namespace polarimeter;

namespace {

struct FixtureCase {
    std::string text;
    double neg, neu, pos, compound;
};

std::vector<FixtureCase> load_fixture() {
    const std::string data = read_file("tests/fixtures/sentiment_cases.tsv");
    std::vector<FixtureCase> cases;
    size_t pos = 0;
    bool header = true;
    while (pos < data.size()) {
        size_t eol = data.find('\n', pos);
        if (eol == std::string::npos) eol = data.size();
        const std::string line = data.substr(pos, eol - pos);
        pos = eol + 1;
        if (header) {  // first line names the columns
            header = false;
            continue;
        }
        if (line.empty()) continue;
        std::vector<std::string> cols;
        size_t start = 0;
        while (true) {
            const size_t tab = line.find('\t', start);
            if (tab == std::string::npos) {
                cols.push_back(line.substr(start));
                break;
            }
            cols.push_back(line.substr(start, tab - start));
            start = tab + 1;
        }
        REQUIRE(cols.size() == 5);
        cases.push_back({cols[0], parse_real(cols[1], "neg"),
                         parse_real(cols[2], "neu"), parse_real(cols[3], "pos"),
                         parse_real(cols[4], "compound")});
    }
    return cases;
}

const Lexicon& fixture_lexicon() {
    static const Lexicon lexicon = load_lexicon("data/vader_lexicon.txt");
    return lexicon;
}

}  // namespace

TEST_CASE("scores match the oracle fixture within 1e-4") {
    const std::vector<FixtureCase> cases = load_fixture();
    REQUIRE(cases.size() == 200);
    const RuleConstants constants;
    for (const FixtureCase& c : cases) {
        const SentimentResult r =
            score_text(c.text, fixture_lexicon(), constants);
        CAPTURE(c.text);
        CHECK(std::abs(r.compound - c.compound) <= 1e-4);
        CHECK(std::abs(r.neg - c.neg) <= 1e-4);
        CHECK(std::abs(r.neu - c.neu) <= 1e-4);
        CHECK(std::abs(r.pos - c.pos) <= 1e-4);
    }
}

TEST_CASE("proportions sum to one on scored text") {
    const RuleConstants constants;
    for (const FixtureCase& c : load_fixture()) {
        const SentimentResult r =
            score_text(c.text, fixture_lexicon(), constants);
        if (r.neg == 0.0 && r.neu == 0.0 && r.pos == 0.0) continue;
        CAPTURE(c.text);
        CHECK(std::abs(r.neg + r.neu + r.pos - 1.0) <= 1e-6);
    }
}

TEST_CASE("empty and uncovered inputs are neutral") {
    const RuleConstants constants;
    const Lexicon empty_lexicon;
    const SentimentResult none = score_text("", fixture_lexicon(), constants);
    CHECK(none.compound == 0.0);
    CHECK(none.neg == 0.0);
    CHECK(none.neu == 0.0);
    CHECK(none.pos == 0.0);
    // No lexicon hits and no punctuation emphasis: compound stays 0.
    const SentimentResult flat =
        score_text("the chair sat on the floor", empty_lexicon, constants);
    CHECK(flat.compound == 0.0);
    const SentimentResult punct = score_text("!!!", fixture_lexicon(), constants);
    CHECK(punct.compound == 0.0);
}

TEST_CASE("exclamation marks amplify monotonically and saturate") {
    const RuleConstants constants;
    const double plain =
        score_text("good", fixture_lexicon(), constants).compound;
    const double bang =
        score_text("good!!!", fixture_lexicon(), constants).compound;
    CHECK(plain > 0.0);
    CHECK(bang > plain);
    const double four =
        score_text("good!!!!", fixture_lexicon(), constants).compound;
    const double eight =
        score_text("good!!!!!!!!", fixture_lexicon(), constants).compound;
    CHECK(four == eight);  // emphasis saturates at four marks
}

TEST_CASE("normalize_valence is odd, bounded, and monotone") {
    const double alpha = 15.0;
    CHECK(normalize_valence(0.0, alpha) == 0.0);
    CHECK(normalize_valence(15.0, alpha) ==
          doctest::Approx(15.0 / std::sqrt(240.0)).epsilon(1e-12));
    oracles::Lcg rng(77);
    double prev_s = -1e9;
    double prev_v = -1.0;
    for (int i = 0; i < 500; ++i) {
        const double s = (rng.uniform() - 0.5) * 60.0;
        const double v = normalize_valence(s, alpha);
        CHECK(std::abs(normalize_valence(-s, alpha) + v) <= 1e-15);
        CHECK(v > -1.0);
        CHECK(v < 1.0);
        (void)prev_s;
        (void)prev_v;
    }
    // Monotonicity on an ordered sweep.
    double last = -1.0;
    for (double s = -40.0; s <= 40.0; s += 0.25) {
        const double v = normalize_valence(s, alpha);
        CHECK(v > last);
        last = v;
    }
}

TEST_CASE("lexicon parsing validates entries") {
    const Lexicon ok = parse_lexicon("good\t1.9\nbad\t-2.5\t0.5\t[1,2]\n", "lex");
    CHECK(ok.at("good") == 1.9);
    CHECK(ok.at("bad") == -2.5);  // extra columns ignored
    CHECK(parse_lexicon("", "lex").empty());
    CHECK_THROWS_WITH_AS(parse_lexicon("bad\tx\n", "lex"),
                         doctest::Contains("lex:1"), Error);
    CHECK_THROWS_WITH_AS(parse_lexicon("good\t1.9\nworse\t-9.5\n", "lex"),
                         doctest::Contains("lex:2"), Error);
    const Lexicon dup = parse_lexicon("word\t1.0\nword\t2.0\n", "lex");
    CHECK(dup.at("word") == 2.0);  // later entries overwrite earlier ones
    CHECK_THROWS_AS(load_lexicon("tests/fixtures/missing_lexicon.txt"), Error);
}

TEST_CASE("rule constants load from config keys") {
    Config cfg;
    cfg.set("sentiment.alpha", "30");
    cfg.set("sentiment.booster_increment", "0.5");
    const RuleConstants constants = RuleConstants::from_config(cfg);
    CHECK(constants.alpha == 30.0);
    CHECK(constants.booster_increment == 0.5);
    CHECK(constants.caps_increment == 0.733);  // untouched default

    // A larger alpha shrinks |compound| for the same text.
    const RuleConstants defaults;
    const double base =
        score_text("great win", fixture_lexicon(), defaults).compound;
    const double damped =
        score_text("great win", fixture_lexicon(), constants).compound;
    CHECK(base > damped);
    CHECK(damped > 0.0);

    Config bad;
    bad.set("sentiment.alpha", "0");
    CHECK_THROWS_AS(RuleConstants::from_config(bad), Error);
}

TEST_CASE("scoring honors negation, boosters, and caps emphasis") {
    const RuleConstants constants;
    const Lexicon& lex = fixture_lexicon();
    const double plain = score_text("good", lex, constants).compound;
    const double negated = score_text("not good", lex, constants).compound;
    CHECK(plain > 0.0);
    CHECK(negated < 0.0);
    const double boosted = score_text("very good", lex, constants).compound;
    CHECK(boosted > plain);
    const double damped = score_text("slightly good", lex, constants).compound;
    CHECK(damped < plain);
    const double caps = score_text("GOOD news", lex, constants).compound;
    const double lower = score_text("good news", lex, constants).compound;
    CHECK(caps > lower);
}
