#pragma once

#include <string>
#include <vector>

namespace polarimeter {

// One word of a topic phrase. Plain words match a token exactly; prefix words
// (written "prefix:stem" in the config) match any token starting with stem.
struct TopicWord {
    std::string text;
    bool prefix = false;
};

struct TopicSpec {
    std::string name;
    std::string provenance;  // freeform note, e.g. "curated"
    std::vector<std::vector<TopicWord>> phrases;
};

// Loads topic specs from a TOML-style file: one [[topic]] table per topic
// with `name`, `phrases = [...]` and optional `provenance` string keys.
// File order is preserved and defines report order downstream.
std::vector<TopicSpec> load_topics(const std::string& path);
std::vector<TopicSpec> parse_topics(const std::string& text,
                                    const std::string& origin);

// Rejects duplicate topic names, empty phrase lists, phrases that are not
// normalized (lowercase a-z/0-9 words of length >= 2, 1-4 words per phrase),
// and empty prefix stems. Throws with one line per problem.
void validate_specs(const std::vector<TopicSpec>& specs);

// True when the phrase occurs as a contiguous run of whole tokens.
bool phrase_matches(const std::vector<std::string>& tokens,
                    const std::vector<TopicWord>& phrase);

// Names of all topics with at least one matching phrase, in spec order.
std::vector<std::string> assign_topics(const std::vector<std::string>& tokens,
                                       const std::vector<TopicSpec>& specs);

}  // namespace polarimeter
