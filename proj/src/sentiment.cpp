#include "polarimeter/sentiment.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <unordered_set>
#include <vector>

#include "polarimeter/util.hpp"

namespace polarimeter {
namespace {

const std::unordered_set<std::string>& negate_words() {
    static const std::unordered_set<std::string> words = {
        "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt",
        "doesnt", "ain't", "aren't", "can't", "couldn't", "daren't", "didn't",
        "doesn't", "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt",
        "mustnt", "neither", "don't", "hadn't", "hasn't", "haven't", "isn't",
        "mightn't", "mustn't", "neednt", "needn't", "never", "none", "nope",
        "nor", "not", "nothing", "nowhere", "oughtnt", "shant", "shouldnt",
        "uhuh", "wasnt", "werent", "oughtn't", "shan't", "shouldn't", "uh-uh",
        "wasn't", "weren't", "without", "wont", "wouldnt", "won't", "wouldn't",
        "rarely", "seldom", "despite"};
    return words;
}

// Booster vocabulary mapped to +1 (intensifier) or -1 (dampener); the actual
// increment is direction * constants.booster_increment. Multiword entries are
// only reachable through the idiom n-gram scan.
const std::unordered_map<std::string, int>& booster_directions() {
    static const std::unordered_map<std::string, int> words = {
        {"absolutely", 1}, {"amazingly", 1}, {"awfully", 1}, {"completely", 1},
        {"considerable", 1}, {"considerably", 1}, {"decidedly", 1},
        {"deeply", 1}, {"effing", 1}, {"enormous", 1}, {"enormously", 1},
        {"entirely", 1}, {"especially", 1}, {"exceptional", 1},
        {"exceptionally", 1}, {"extreme", 1}, {"extremely", 1},
        {"fabulously", 1}, {"flipping", 1}, {"flippin", 1}, {"frackin", 1},
        {"fracking", 1}, {"fricking", 1}, {"frickin", 1}, {"frigging", 1},
        {"friggin", 1}, {"fully", 1}, {"fuckin", 1}, {"fucking", 1},
        {"fuggin", 1}, {"fugging", 1}, {"greatly", 1}, {"hella", 1},
        {"highly", 1}, {"hugely", 1}, {"incredible", 1}, {"incredibly", 1},
        {"intensely", 1}, {"major", 1}, {"majorly", 1}, {"more", 1},
        {"most", 1}, {"particularly", 1}, {"purely", 1}, {"quite", 1},
        {"really", 1}, {"remarkably", 1}, {"so", 1}, {"substantially", 1},
        {"thoroughly", 1}, {"total", 1}, {"totally", 1}, {"tremendous", 1},
        {"tremendously", 1}, {"uber", 1}, {"unbelievably", 1},
        {"unusually", 1}, {"utter", 1}, {"utterly", 1}, {"very", 1},
        {"almost", -1}, {"barely", -1}, {"hardly", -1}, {"just enough", -1},
        {"kind of", -1}, {"kinda", -1}, {"kindof", -1}, {"kind-of", -1},
        {"less", -1}, {"little", -1}, {"marginal", -1}, {"marginally", -1},
        {"occasional", -1}, {"occasionally", -1}, {"partly", -1},
        {"scarce", -1}, {"scarcely", -1}, {"slight", -1}, {"slightly", -1},
        {"somewhat", -1}, {"sort of", -1}, {"sorta", -1}, {"sortof", -1},
        {"sort-of", -1}};
    return words;
}

// Fixed-valence idioms, looked up over lowercase 2- and 3-grams around the
// current token.
const std::unordered_map<std::string, double>& special_case_idioms() {
    static const std::unordered_map<std::string, double> idioms = {
        {"the shit", 3.0},      {"the bomb", 3.0},     {"bad ass", 1.5},
        {"badass", 1.5},        {"bus stop", 0.0},     {"yeah right", -2.0},
        {"kiss of death", -1.5}, {"to die for", 3.0},  {"beating heart", 3.1},
        {"broken heart", -2.9}};
    return idioms;
}

bool is_strip_punct(char c) {
    // The 32 ASCII punctuation characters stripped from token edges.
    static const std::string punct = "!\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
    return punct.find(c) != std::string::npos;
}

// Strips punctuation from both ends; keeps the original token whenever the
// stripped core is 2 characters or shorter, so emoticons like ":)" survive.
std::string strip_punct_if_word(const std::string& token) {
    size_t b = 0;
    size_t e = token.size();
    while (b < e && is_strip_punct(token[b])) ++b;
    while (e > b && is_strip_punct(token[e - 1])) --e;
    const size_t len = e - b;
    if (len <= 2) return token;
    return token.substr(b, len);
}

// Uppercase test with the reference semantics: at least one cased character
// and no lowercase ones. ASCII letters only; other bytes count as uncased.
bool is_upper_token(const std::string& token) {
    bool has_cased = false;
    for (char c : token) {
        if (c >= 'a' && c <= 'z') return false;
        if (c >= 'A' && c <= 'Z') has_cased = true;
    }
    return has_cased;
}

bool allcap_differential(const std::vector<std::string>& words) {
    size_t upper = 0;
    for (const auto& w : words) {
        if (is_upper_token(w)) ++upper;
    }
    return upper > 0 && upper < words.size();
}

bool is_negation(const std::string& word_lower) {
    if (negate_words().count(word_lower)) return true;
    return word_lower.find("n't") != std::string::npos;
}

struct ScoreContext {
    const std::vector<std::string>& words;        // original casing
    const std::vector<std::string>& words_lower;  // lowercase mirror
    const Lexicon& lexicon;
    const RuleConstants& k;
    bool cap_diff;
};

// Contribution of a booster/dampener `dist+1` places back from a hit.
double scalar_inc_dec(const ScoreContext& ctx, size_t word_index, double valence) {
    const std::string& lower = ctx.words_lower[word_index];
    auto it = booster_directions().find(lower);
    if (it == booster_directions().end()) return 0.0;
    double scalar = it->second * ctx.k.booster_increment;
    if (valence < 0) scalar = -scalar;
    if (is_upper_token(ctx.words[word_index]) && ctx.cap_diff) {
        scalar += (valence > 0) ? ctx.k.caps_increment : -ctx.k.caps_increment;
    }
    return scalar;
}

double negation_adjust(const ScoreContext& ctx, double valence, int start_i,
                       size_t i) {
    const auto& wl = ctx.words_lower;
    const double n_scalar = ctx.k.negation_factor;
    auto is_so_this = [&](size_t idx) {
        return wl[idx] == "so" || wl[idx] == "this";
    };
    if (start_i == 0) {
        if (is_negation(wl[i - 1])) valence *= n_scalar;
    } else if (start_i == 1) {
        if (wl[i - 2] == "never" && is_so_this(i - 1)) {
            valence *= 1.25;
        } else if (wl[i - 2] == "without" && wl[i - 1] == "doubt") {
            // explicit non-negation: "without doubt" keeps the valence
        } else if (is_negation(wl[i - 2])) {
            valence *= n_scalar;
        }
    } else {
        // Mirrors the reference precedence exactly: the 1.25 branch fires for
        // "never so/this <word> _" OR for bare "so"/"this" directly before
        // the scored word, because the reference condition groups that way.
        if ((wl[i - 3] == "never" && is_so_this(i - 2)) || is_so_this(i - 1)) {
            valence *= 1.25;
        } else if (wl[i - 3] == "without" && wl[i - 2] == "doubt") {
            // keep valence
        } else if (is_negation(wl[i - 3])) {
            valence *= n_scalar;
        }
    }
    return valence;
}

double least_adjust(const ScoreContext& ctx, double valence, size_t i) {
    const auto& wl = ctx.words_lower;
    if (i > 1 && !ctx.lexicon.count(wl[i - 1]) && wl[i - 1] == "least") {
        if (wl[i - 2] != "at" && wl[i - 2] != "very") {
            valence *= ctx.k.negation_factor;
        }
    } else if (i > 0 && !ctx.lexicon.count(wl[i - 1]) && wl[i - 1] == "least") {
        valence *= ctx.k.negation_factor;
    }
    return valence;
}

// Idiom handling, reached only from the deepest lookback step (i >= 3).
// Lookback sequences are checked first-match-wins; the lookahead bigram and
// trigram each overwrite unconditionally; booster n-grams then add on top.
double special_idioms_adjust(const ScoreContext& ctx, double valence, size_t i) {
    const auto& wl = ctx.words_lower;
    const size_t n = wl.size();
    const std::string onezero = wl[i - 1] + " " + wl[i];
    const std::string twoonezero = wl[i - 2] + " " + wl[i - 1] + " " + wl[i];
    const std::string twoone = wl[i - 2] + " " + wl[i - 1];
    const std::string threetwoone = wl[i - 3] + " " + wl[i - 2] + " " + wl[i - 1];
    const std::string threetwo = wl[i - 3] + " " + wl[i - 2];

    const auto& idioms = special_case_idioms();
    for (const std::string* seq :
         {&onezero, &twoonezero, &twoone, &threetwoone, &threetwo}) {
        auto it = idioms.find(*seq);
        if (it != idioms.end()) {
            valence = it->second;
            break;
        }
    }
    if (n - 1 > i) {
        const std::string zeroone = wl[i] + " " + wl[i + 1];
        auto it = idioms.find(zeroone);
        if (it != idioms.end()) valence = it->second;
    }
    if (n - 1 > i + 1) {
        const std::string zeroonetwo = wl[i] + " " + wl[i + 1] + " " + wl[i + 2];
        auto it = idioms.find(zeroonetwo);
        if (it != idioms.end()) valence = it->second;
    }
    for (const std::string* ngram : {&threetwoone, &threetwo, &twoone}) {
        auto it = booster_directions().find(*ngram);
        if (it != booster_directions().end()) {
            valence += it->second * ctx.k.booster_increment;
        }
    }
    return valence;
}

double token_valence(const ScoreContext& ctx, size_t i) {
    const std::string& lower = ctx.words_lower[i];
    auto hit = ctx.lexicon.find(lower);
    if (hit == ctx.lexicon.end()) return 0.0;

    double valence = hit->second;
    const size_t n = ctx.words.size();

    // "no" right before another lexicon word acts as a modifier, not a hit.
    if (lower == "no" && i + 1 < n && ctx.lexicon.count(ctx.words_lower[i + 1])) {
        valence = 0.0;
    }
    if ((i >= 1 && ctx.words_lower[i - 1] == "no") ||
        (i >= 2 && ctx.words_lower[i - 2] == "no") ||
        (i >= 3 && ctx.words_lower[i - 3] == "no" &&
         (ctx.words_lower[i - 1] == "or" || ctx.words_lower[i - 1] == "nor"))) {
        valence = hit->second * ctx.k.negation_factor;
    }
    if (is_upper_token(ctx.words[i]) && ctx.cap_diff) {
        valence += (valence > 0) ? ctx.k.caps_increment : -ctx.k.caps_increment;
    }

    for (int start_i = 0; start_i < 3; ++start_i) {
        const size_t back = static_cast<size_t>(start_i) + 1;
        // Only look past words that are not themselves lexicon entries.
        if (i > static_cast<size_t>(start_i) &&
            !ctx.lexicon.count(ctx.words_lower[i - back])) {
            double s = scalar_inc_dec(ctx, i - back, valence);
            if (start_i == 1 && s != 0.0) s *= 0.95;
            if (start_i == 2 && s != 0.0) s *= 0.9;
            valence += s;
            valence = negation_adjust(ctx, valence, start_i, i);
            if (start_i == 2) {
                valence = special_idioms_adjust(ctx, valence, i);
            }
        }
    }
    return least_adjust(ctx, valence, i);
}

// Clause reweighting around the first "but". Slot selection goes through a
// value lookup (first slot holding the same value), reproducing the reference
// behavior when duplicate values appear on both sides of "but".
void but_adjust(const std::vector<std::string>& words_lower,
                std::vector<double>& sentiments, const RuleConstants& k) {
    auto but_it = std::find(words_lower.begin(), words_lower.end(), "but");
    if (but_it == words_lower.end()) return;
    const size_t bi = static_cast<size_t>(but_it - words_lower.begin());
    for (size_t pos = 0; pos < sentiments.size(); ++pos) {
        const double v = sentiments[pos];
        const size_t si = static_cast<size_t>(
            std::find(sentiments.begin(), sentiments.end(), v) -
            sentiments.begin());
        if (si < bi) {
            sentiments[si] = v * k.but_pre_weight;
        } else if (si > bi) {
            sentiments[si] = v * k.but_post_weight;
        }
    }
}

double punctuation_amplifier(std::string_view text, const RuleConstants& k) {
    size_t ep = 0;
    size_t qm = 0;
    for (char c : text) {
        if (c == '!') ++ep;
        if (c == '?') ++qm;
    }
    if (ep > 4) ep = 4;
    double amp = static_cast<double>(ep) * k.exclamation_increment;
    if (qm > 1) {
        amp += (qm <= 3) ? static_cast<double>(qm) * k.question_increment
                         : k.question_cap;
    }
    return amp;
}

}  // namespace

RuleConstants RuleConstants::from_config(const Config& config) {
    RuleConstants k;
    k.alpha = config.get_real("sentiment.alpha", k.alpha);
    k.booster_increment =
        config.get_real("sentiment.booster_increment", k.booster_increment);
    k.caps_increment = config.get_real("sentiment.caps_increment", k.caps_increment);
    k.negation_factor = config.get_real("sentiment.negation_factor", k.negation_factor);
    k.but_pre_weight = config.get_real("sentiment.but_pre_weight", k.but_pre_weight);
    k.but_post_weight = config.get_real("sentiment.but_post_weight", k.but_post_weight);
    k.exclamation_increment =
        config.get_real("sentiment.exclamation_increment", k.exclamation_increment);
    k.question_increment =
        config.get_real("sentiment.question_increment", k.question_increment);
    k.question_cap = config.get_real("sentiment.question_cap", k.question_cap);
    if (k.alpha <= 0) throw Error("sentiment.alpha must be positive");
    return k;
}

Lexicon parse_lexicon(std::string_view data, const std::string& origin) {
    Lexicon lexicon;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= data.size()) {
        size_t eol = data.find('\n', pos);
        std::string_view line =
            data.substr(pos, eol == std::string_view::npos ? eol : eol - pos);
        pos = (eol == std::string_view::npos) ? data.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.empty()) continue;
        const size_t tab = line.find('\t');
        if (tab == std::string_view::npos || tab == 0) {
            throw Error(origin + ":" + std::to_string(line_no) +
                        ": expected token<TAB>valence");
        }
        std::string_view rest = line.substr(tab + 1);
        const size_t tab2 = rest.find('\t');
        if (tab2 != std::string_view::npos) rest = rest.substr(0, tab2);
        const std::string token(line.substr(0, tab));
        const double valence = parse_real(
            rest, origin + ":" + std::to_string(line_no) + " valence");
        if (valence < -4.0 || valence > 4.0) {
            throw Error(origin + ":" + std::to_string(line_no) +
                        ": valence out of range [-4, 4]");
        }
        lexicon[token] = valence;  // later duplicates overwrite
    }
    return lexicon;
}

Lexicon load_lexicon(const std::string& path) {
    return parse_lexicon(read_file(path), path);
}

double normalize_valence(double s, double alpha) {
    const double norm = s / std::sqrt(s * s + alpha);
    if (norm < -1.0) return -1.0;
    if (norm > 1.0) return 1.0;
    return norm;
}

SentimentResult score_text(std::string_view text, const Lexicon& lexicon,
                           const RuleConstants& constants) {
    std::vector<std::string> words;
    for (const std::string& token : split_whitespace(text)) {
        words.push_back(strip_punct_if_word(token));
    }
    std::vector<std::string> words_lower;
    words_lower.reserve(words.size());
    for (const auto& w : words) words_lower.push_back(to_lower_ascii(w));

    const ScoreContext ctx{words, words_lower, lexicon, constants,
                           allcap_differential(words)};

    std::vector<double> sentiments;
    sentiments.reserve(words.size());
    for (size_t i = 0; i < words.size(); ++i) {
        // Booster words themselves score zero; so does "kind" in "kind of".
        if (booster_directions().count(words_lower[i])) {
            sentiments.push_back(0.0);
            continue;
        }
        if (i + 1 < words.size() && words_lower[i] == "kind" &&
            words_lower[i + 1] == "of") {
            sentiments.push_back(0.0);
            continue;
        }
        sentiments.push_back(token_valence(ctx, i));
    }
    but_adjust(words_lower, sentiments, constants);

    SentimentResult result;
    if (sentiments.empty()) return result;

    double sum_s = 0.0;
    for (double v : sentiments) sum_s += v;
    const double amp = punctuation_amplifier(text, constants);
    if (sum_s > 0) {
        sum_s += amp;
    } else if (sum_s < 0) {
        sum_s -= amp;
    }
    result.compound = normalize_valence(sum_s, constants.alpha);

    // Proportions use shifted magnitudes: each positive hit counts as v+1,
    // each negative as v-1, neutral tokens as 1, with the punctuation
    // amplifier credited to the dominant side.
    double pos_sum = 0.0;
    double neg_sum = 0.0;
    double neu_count = 0.0;
    for (double v : sentiments) {
        if (v > 0) {
            pos_sum += v + 1.0;
        } else if (v < 0) {
            neg_sum += v - 1.0;
        } else {
            neu_count += 1.0;
        }
    }
    if (pos_sum > std::fabs(neg_sum)) {
        pos_sum += amp;
    } else if (pos_sum < std::fabs(neg_sum)) {
        neg_sum -= amp;
    }
    const double total = pos_sum + std::fabs(neg_sum) + neu_count;
    result.pos = std::fabs(pos_sum / total);
    result.neg = std::fabs(neg_sum / total);
    result.neu = std::fabs(neu_count / total);
    return result;
}

}  // namespace polarimeter
