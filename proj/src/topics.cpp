#include "polarimeter/topics.hpp"

#include <algorithm>
#include <cstddef>
#include <set>

#include "polarimeter/util.hpp"

namespace polarimeter {

namespace {

// Minimal reader for the topics config. Understands exactly the shapes the
// file uses: [[topic]] table headers, `key = "string"`, and
// `key = ["a", "b", ...]` arrays that may span lines and carry trailing
// commas. Comments run from '#' to end of line outside of strings.
struct Token {
    enum Kind { TableOpen, LBracket, RBracket, Equals, Comma, String, Ident };
    Kind kind;
    std::string text;
    int line;
};

class Lexer {
public:
    Lexer(const std::string& text, const std::string& origin)
        : text_(text), origin_(origin) {}

    std::vector<Token> run() {
        std::vector<Token> out;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '\n') {
                ++line_;
                ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
            } else if (c == '#') {
                while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
            } else if (c == '[') {
                if (pos_ + 1 < text_.size() && text_[pos_ + 1] == '[') {
                    out.push_back({Token::TableOpen, readTableHeader(), line_});
                } else {
                    out.push_back({Token::LBracket, "[", line_});
                    ++pos_;
                }
            } else if (c == ']') {
                out.push_back({Token::RBracket, "]", line_});
                ++pos_;
            } else if (c == '=') {
                out.push_back({Token::Equals, "=", line_});
                ++pos_;
            } else if (c == ',') {
                out.push_back({Token::Comma, ",", line_});
                ++pos_;
            } else if (c == '"') {
                out.push_back({Token::String, readString(), line_});
            } else if (isIdentChar(c)) {
                std::size_t start = pos_;
                while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
                out.push_back(
                    {Token::Ident, text_.substr(start, pos_ - start), line_});
            } else {
                fail("unexpected character '" + std::string(1, c) + "'");
            }
        }
        return out;
    }

private:
    static bool isIdentChar(char c) {
        return is_ascii_alpha(c) || is_ascii_digit(c) || c == '_' || c == '-';
    }

    std::string readTableHeader() {
        // pos_ sits on the first '[' of "[[name]]".
        pos_ += 2;
        std::size_t start = pos_;
        while (pos_ < text_.size() && isIdentChar(text_[pos_])) ++pos_;
        std::string name = text_.substr(start, pos_ - start);
        if (name.empty() || pos_ + 1 >= text_.size() || text_[pos_] != ']' ||
            text_[pos_ + 1] != ']') {
            fail("malformed table header, expected [[name]]");
        }
        pos_ += 2;
        return name;
    }

    std::string readString() {
        ++pos_;  // opening quote
        std::string value;
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '"') {
                ++pos_;
                return value;
            }
            if (c == '\n') break;
            if (c == '\\' && pos_ + 1 < text_.size() &&
                (text_[pos_ + 1] == '"' || text_[pos_ + 1] == '\\')) {
                value.push_back(text_[pos_ + 1]);
                pos_ += 2;
                continue;
            }
            value.push_back(c);
            ++pos_;
        }
        fail("unterminated string");
        return value;  // unreachable
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw Error(origin_ + ":" + std::to_string(line_) + ": " + what);
    }

    const std::string& text_;
    const std::string& origin_;
    std::size_t pos_ = 0;
    int line_ = 1;
};

std::vector<TopicWord> parse_phrase(const std::string& raw) {
    std::vector<TopicWord> phrase;
    for (const std::string& word : split_whitespace(raw)) {
        constexpr std::string_view kPrefixMarker = "prefix:";
        TopicWord tw;
        if (word.rfind(kPrefixMarker, 0) == 0) {
            tw.prefix = true;
            tw.text = word.substr(kPrefixMarker.size());
        } else {
            tw.text = word;
        }
        phrase.push_back(std::move(tw));
    }
    return phrase;
}

bool is_normalized_word(const std::string& w) {
    if (w.size() < 2) return false;
    return std::all_of(w.begin(), w.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || is_ascii_digit(c);
    });
}

std::string phrase_to_string(const std::vector<TopicWord>& phrase) {
    std::string s;
    for (const TopicWord& tw : phrase) {
        if (!s.empty()) s.push_back(' ');
        if (tw.prefix) s += "prefix:";
        s += tw.text;
    }
    return s;
}

}  // namespace

std::vector<TopicSpec> parse_topics(const std::string& text,
                                    const std::string& origin) {
    std::vector<Token> toks = Lexer(text, origin).run();
    std::vector<TopicSpec> specs;
    std::size_t i = 0;

    auto fail = [&](int line, const std::string& what) -> void {
        throw Error(origin + ":" + std::to_string(line) + ": " + what);
    };

    while (i < toks.size()) {
        const Token& t = toks[i];
        if (t.kind == Token::TableOpen) {
            if (t.text != "topic") {
                fail(t.line, "unknown table [[" + t.text + "]]");
            }
            specs.emplace_back();
            ++i;
            continue;
        }
        if (t.kind != Token::Ident) {
            fail(t.line, "expected key or [[topic]], got '" + t.text + "'");
        }
        if (specs.empty()) {
            fail(t.line, "key '" + t.text + "' outside any [[topic]] table");
        }
        if (i + 1 >= toks.size() || toks[i + 1].kind != Token::Equals) {
            fail(t.line, "expected '=' after key '" + t.text + "'");
        }
        const std::string& key = t.text;
        i += 2;
        if (i >= toks.size()) fail(t.line, "missing value for '" + key + "'");

        TopicSpec& spec = specs.back();
        if (toks[i].kind == Token::String) {
            if (key == "name") {
                spec.name = toks[i].text;
            } else if (key == "provenance") {
                spec.provenance = toks[i].text;
            } else {
                fail(toks[i].line, "unknown key '" + key + "'");
            }
            ++i;
        } else if (toks[i].kind == Token::LBracket) {
            if (key != "phrases") {
                fail(toks[i].line, "unknown list key '" + key + "'");
            }
            ++i;
            bool expect_value = true;
            while (true) {
                if (i >= toks.size()) fail(t.line, "unterminated phrase list");
                if (toks[i].kind == Token::RBracket) {
                    ++i;
                    break;
                }
                if (toks[i].kind == Token::String) {
                    if (!expect_value) {
                        fail(toks[i].line, "missing comma in phrase list");
                    }
                    spec.phrases.push_back(parse_phrase(toks[i].text));
                    expect_value = false;
                    ++i;
                } else if (toks[i].kind == Token::Comma) {
                    expect_value = true;  // trailing comma before ']' is fine
                    ++i;
                } else {
                    fail(toks[i].line,
                         "unexpected '" + toks[i].text + "' in phrase list");
                }
            }
        } else {
            fail(toks[i].line, "unsupported value for '" + key + "'");
        }
    }
    return specs;
}

std::vector<TopicSpec> load_topics(const std::string& path) {
    std::vector<TopicSpec> specs = parse_topics(read_file(path), path);
    validate_specs(specs);
    return specs;
}

void validate_specs(const std::vector<TopicSpec>& specs) {
    std::vector<std::string> problems;
    std::set<std::string> seen_names;

    if (specs.empty()) problems.push_back("no topics defined");

    for (const TopicSpec& spec : specs) {
        if (spec.name.empty()) {
            problems.push_back("topic with empty name");
            continue;
        }
        if (!seen_names.insert(spec.name).second) {
            problems.push_back("duplicate topic name '" + spec.name + "'");
        }
        if (spec.phrases.empty()) {
            problems.push_back("topic '" + spec.name + "' has no phrases");
        }
        std::set<std::string> seen_phrases;
        for (const auto& phrase : spec.phrases) {
            std::string shown = phrase_to_string(phrase);
            if (phrase.empty() || phrase.size() > 4) {
                problems.push_back("topic '" + spec.name + "': phrase \"" +
                                   shown + "\" must have 1 to 4 words");
                continue;
            }
            if (!seen_phrases.insert(shown).second) {
                problems.push_back("topic '" + spec.name +
                                   "': duplicate phrase \"" + shown + "\"");
            }
            for (const TopicWord& tw : phrase) {
                if (!is_normalized_word(tw.text)) {
                    problems.push_back(
                        "topic '" + spec.name + "': phrase \"" + shown +
                        "\" has non-normalized word '" + tw.text +
                        "' (want 2+ chars of lowercase a-z or 0-9)");
                }
            }
        }
    }

    if (!problems.empty()) {
        std::string msg = "invalid topic config:";
        for (const std::string& p : problems) msg += "\n  " + p;
        throw Error(msg);
    }
}

bool phrase_matches(const std::vector<std::string>& tokens,
                    const std::vector<TopicWord>& phrase) {
    if (phrase.empty() || tokens.size() < phrase.size()) return false;
    const std::size_t last_start = tokens.size() - phrase.size();
    for (std::size_t start = 0; start <= last_start; ++start) {
        bool ok = true;
        for (std::size_t j = 0; j < phrase.size(); ++j) {
            const std::string& tok = tokens[start + j];
            const TopicWord& tw = phrase[j];
            if (tw.prefix ? tok.rfind(tw.text, 0) != 0 : tok != tw.text) {
                ok = false;
                break;
            }
        }
        if (ok) return true;
    }
    return false;
}

std::vector<std::string> assign_topics(const std::vector<std::string>& tokens,
                                       const std::vector<TopicSpec>& specs) {
    std::vector<std::string> matched;
    for (const TopicSpec& spec : specs) {
        for (const auto& phrase : spec.phrases) {
            if (phrase_matches(tokens, phrase)) {
                matched.push_back(spec.name);
                break;
            }
        }
    }
    return matched;
}

}  // namespace polarimeter
