#pragma once

#include <string>
#include <string_view>
#include <unordered_map>

#include "polarimeter/config.hpp"

namespace polarimeter {

struct SentimentResult {
    double neg = 0.0;
    double neu = 0.0;
    double pos = 0.0;
    double compound = 0.0;
};

// Tunable scoring constants. Defaults reproduce the reference rule engine;
// every field can be overridden through config keys (sentiment.alpha, ...).
struct RuleConstants {
    double alpha = 15.0;                  // compound normalization constant
    double booster_increment = 0.293;     // intensity added by booster words
    double caps_increment = 0.733;        // ALL-CAPS emphasis bonus
    double negation_factor = -0.74;       // multiplier applied by negations
    double but_pre_weight = 0.5;          // weight for clauses before "but"
    double but_post_weight = 1.5;         // weight for clauses after "but"
    double exclamation_increment = 0.292; // per '!', counting at most 4 marks
    double question_increment = 0.18;     // per '?' when 2-3 marks present
    double question_cap = 0.96;           // flat amplifier for 4+ marks

    static RuleConstants from_config(const Config& config);
};

using Lexicon = std::unordered_map<std::string, double>;

// Parses a tab-delimited lexicon: token<TAB>valence, extra columns ignored,
// later duplicate tokens overwrite earlier ones. Valences must be numeric and
// within [-4, 4]. An empty file yields an empty (all-neutral) lexicon.
Lexicon load_lexicon(const std::string& path);
Lexicon parse_lexicon(std::string_view data, const std::string& origin);

// s / sqrt(s^2 + alpha), clamped to [-1, 1]. Odd and strictly increasing.
double normalize_valence(double s, double alpha);

// Scores one text with the full rule sequence: lexicon valence per token,
// booster/dampener lookback with distance decay, ALL-CAPS emphasis, negation
// handling, special-case idioms, "least"/"but" adjustments, and punctuation
// amplification. Total function: empty input scores as all zeros.
SentimentResult score_text(std::string_view text, const Lexicon& lexicon,
                           const RuleConstants& constants);

}  // namespace polarimeter
