#include "polarimeter/textprep.hpp"

#include "polarimeter/csv.hpp"
#include "polarimeter/util.hpp"

namespace polarimeter {
namespace {

bool is_word_char(char c) {
    return (c >= 'a' && c <= 'z') || is_ascii_digit(c) || c == '\'';
}

// Replaces the common typographic apostrophes (U+2019, U+2018, U+02BC) with
// ASCII ' so contraction keys written with ' match tweets pasted from the web.
std::string fold_apostrophes(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    for (size_t i = 0; i < raw.size(); ++i) {
        const unsigned char a = static_cast<unsigned char>(raw[i]);
        if (a == 0xE2 && i + 2 < raw.size() &&
            static_cast<unsigned char>(raw[i + 1]) == 0x80 &&
            (static_cast<unsigned char>(raw[i + 2]) == 0x98 ||
             static_cast<unsigned char>(raw[i + 2]) == 0x99)) {
            out.push_back('\'');
            i += 2;
        } else if (a == 0xCA && i + 1 < raw.size() &&
                   static_cast<unsigned char>(raw[i + 1]) == 0xBC) {
            out.push_back('\'');
            i += 1;
        } else {
            out.push_back(raw[i]);
        }
    }
    return out;
}

std::string expand_contractions(const std::string& text,
                                const ContractionTable& table) {
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        if (!is_word_char(text[i])) {
            out.push_back(text[i]);
            ++i;
            continue;
        }
        size_t j = i;
        while (j < text.size() && is_word_char(text[j])) ++j;
        const std::string word = text.substr(i, j - i);
        auto it = table.entries.find(word);
        out += (it == table.entries.end()) ? word : it->second;
        i = j;
    }
    return out;
}

bool marker_at(const std::string& text, size_t i, std::string_view marker) {
    return text.compare(i, marker.size(), marker) == 0;
}

// Removes URL spans (and @mention spans when requested). A marker only
// counts at a word boundary so "awww.ok" is not treated as a www. link.
// A bare "http" word without :// is left alone and survives as a token.
std::string remove_spans(const std::string& text, bool drop_mentions) {
    static constexpr std::string_view kUrlMarkers[] = {"http://", "https://",
                                                       "www.", "t.co/"};
    std::string out;
    out.reserve(text.size());
    size_t i = 0;
    while (i < text.size()) {
        const bool at_boundary =
            i == 0 || !(is_word_char(text[i - 1]) && text[i - 1] != '\'');
        bool removed = false;
        if (at_boundary) {
            for (std::string_view marker : kUrlMarkers) {
                if (marker_at(text, i, marker)) {
                    while (i < text.size() && !is_ascii_space(text[i])) ++i;
                    removed = true;
                    break;
                }
            }
        }
        if (!removed && drop_mentions && text[i] == '@') {
            ++i;
            while (i < text.size() &&
                   (is_word_char(text[i]) || text[i] == '_') && text[i] != '\'') {
                ++i;
            }
            removed = true;
        }
        if (!removed) {
            out.push_back(text[i]);
            ++i;
        }
    }
    return out;
}

// Deletes every character outside {a-z, 0-9, space}. Whitespace variants
// (tab, newline) become spaces rather than vanishing so they keep separating
// tokens; all other characters are removed in place, merging adjacent word
// content ("h.r." -> "hr").
std::string whitelist_filter(const std::string& text) {
    std::string out;
    out.reserve(text.size());
    for (char c : text) {
        if ((c >= 'a' && c <= 'z') || is_ascii_digit(c) || c == ' ') {
            out.push_back(c);
        } else if (is_ascii_space(c)) {
            out.push_back(' ');
        }
    }
    return out;
}

}  // namespace

const ContractionTable& ContractionTable::builtin() {
    static const ContractionTable table = [] {
        ContractionTable t;
        static const std::pair<const char*, const char*> kEntries[] = {
            {"ain't", "is not"},
            {"aren't", "are not"},
            {"can't", "cannot"},
            {"can't've", "cannot have"},
            {"'cause", "because"},
            {"could've", "could have"},
            {"couldn't", "could not"},
            {"couldn't've", "could not have"},
            {"didn't", "did not"},
            {"doesn't", "does not"},
            {"don't", "do not"},
            {"hadn't", "had not"},
            {"hadn't've", "had not have"},
            {"hasn't", "has not"},
            {"haven't", "have not"},
            {"he'd", "he would"},
            {"he'd've", "he would have"},
            {"he'll", "he will"},
            {"he'll've", "he will have"},
            {"he's", "he is"},
            {"how'd", "how did"},
            {"how'd'y", "how do you"},
            {"how'll", "how will"},
            {"how's", "how is"},
            {"i'd", "i would"},
            {"i'd've", "i would have"},
            {"i'll", "i will"},
            {"i'll've", "i will have"},
            {"i'm", "i am"},
            {"i've", "i have"},
            {"isn't", "is not"},
            {"it'd", "it would"},
            {"it'd've", "it would have"},
            {"it'll", "it will"},
            {"it'll've", "it will have"},
            {"it's", "it is"},
            {"let's", "let us"},
            {"ma'am", "madam"},
            {"mayn't", "may not"},
            {"might've", "might have"},
            {"mightn't", "might not"},
            {"mightn't've", "might not have"},
            {"must've", "must have"},
            {"mustn't", "must not"},
            {"mustn't've", "must not have"},
            {"needn't", "need not"},
            {"needn't've", "need not have"},
            {"o'clock", "of the clock"},
            {"oughtn't", "ought not"},
            {"oughtn't've", "ought not have"},
            {"shan't", "shall not"},
            {"sha'n't", "shall not"},
            {"shan't've", "shall not have"},
            {"she'd", "she would"},
            {"she'd've", "she would have"},
            {"she'll", "she will"},
            {"she'll've", "she will have"},
            {"she's", "she is"},
            {"should've", "should have"},
            {"shouldn't", "should not"},
            {"shouldn't've", "should not have"},
            {"so've", "so have"},
            {"so's", "so is"},
            {"that'd", "that would"},
            {"that'd've", "that would have"},
            {"that's", "that is"},
            {"there'd", "there would"},
            {"there'd've", "there would have"},
            {"there's", "there is"},
            {"they'd", "they would"},
            {"they'd've", "they would have"},
            {"they'll", "they will"},
            {"they'll've", "they will have"},
            {"they're", "they are"},
            {"they've", "they have"},
            {"to've", "to have"},
            {"wasn't", "was not"},
            {"we'd", "we would"},
            {"we'd've", "we would have"},
            {"we'll", "we will"},
            {"we'll've", "we will have"},
            {"we're", "we are"},
            {"we've", "we have"},
            {"weren't", "were not"},
            {"what'll", "what will"},
            {"what'll've", "what will have"},
            {"what're", "what are"},
            {"what's", "what is"},
            {"what've", "what have"},
            {"when's", "when is"},
            {"when've", "when have"},
            {"where'd", "where did"},
            {"where's", "where is"},
            {"where've", "where have"},
            {"who'll", "who will"},
            {"who'll've", "who will have"},
            {"who's", "who is"},
            {"who've", "who have"},
            {"why's", "why is"},
            {"why've", "why have"},
            {"will've", "will have"},
            {"won't", "will not"},
            {"won't've", "will not have"},
            {"would've", "would have"},
            {"wouldn't", "would not"},
            {"wouldn't've", "would not have"},
            {"y'all", "you all"},
            {"y'all'd", "you all would"},
            {"y'all'd've", "you all would have"},
            {"y'all're", "you all are"},
            {"y'all've", "you all have"},
            {"you'd", "you would"},
            {"you'd've", "you would have"},
            {"you'll", "you will"},
            {"you'll've", "you will have"},
            {"you're", "you are"},
            {"you've", "you have"},
            {"gov't", "government"},
            {"nat'l", "national"},
            {"int'l", "international"},
        };
        for (const auto& [key, value] : kEntries) {
            t.entries.emplace(key, value);
        }
        return t;
    }();
    return table;
}

ContractionTable ContractionTable::load_csv(const std::string& path) {
    const CsvTable table = read_csv_file(path, {"contraction", "expansion"});
    ContractionTable out;
    size_t row_no = 0;
    for (const auto& row : table.rows) {
        ++row_no;
        const std::string& key = row[0];
        const std::string& value = row[1];
        if (key.empty() || value.empty()) {
            throw Error(path + ": empty contraction or expansion at data row " +
                        std::to_string(row_no));
        }
        if (key != to_lower_ascii(key)) {
            throw Error(path + ": contraction key must be lowercase at data row " +
                        std::to_string(row_no));
        }
        if (value.find('\'') != std::string::npos) {
            throw Error(path + ": expansion contains an apostrophe at data row " +
                        std::to_string(row_no));
        }
        out.entries[key] = value;
    }
    return out;
}

std::string normalize_text(std::string_view raw, const ContractionTable& table,
                           const TextprepOptions& options) {
    const std::string lowered = to_lower_ascii(fold_apostrophes(raw));
    const std::string expanded = expand_contractions(lowered, table);
    const std::string unspanned = remove_spans(expanded, options.drop_mentions);
    const std::string filtered = whitelist_filter(unspanned);

    std::string out;
    out.reserve(filtered.size());
    for (const std::string& token : split_whitespace(filtered)) {
        if (token.size() < 2) continue;
        if (!out.empty()) out.push_back(' ');
        out += token;
    }
    return out;
}

std::vector<std::string> tokens_of(std::string_view clean) {
    return split_whitespace(clean);
}

}  // namespace polarimeter
