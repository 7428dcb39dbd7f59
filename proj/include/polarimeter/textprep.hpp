#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polarimeter {

// Maps contraction forms (lowercase, containing apostrophes) to expansions
// that contain no apostrophes, e.g. "don't" -> "do not".
struct ContractionTable {
    std::map<std::string, std::string> entries;

    // Fixed built-in table of standard English contractions, used when no
    // file is supplied.
    static const ContractionTable& builtin();
    // Loads a two-column `contraction,expansion` CSV; validates that keys are
    // lowercase and expansions apostrophe-free.
    static ContractionTable load_csv(const std::string& path);
};

struct TextprepOptions {
    // When set, @mentions are removed whole instead of keeping their word
    // part with the '@' stripped.
    bool drop_mentions = false;
};

// Normalizes raw tweet text, in order: lowercase; expand contractions; remove
// URL spans (http/https/www./t.co/ up to the next whitespace; also @mention
// spans when drop_mentions is set); delete every character outside
// {a-z, 0-9, space}; drop single-character tokens; collapse whitespace.
// Curly apostrophes are mapped to ASCII ' up front so contraction keys match.
// The result is idempotent: normalizing a normalized string is a no-op.
std::string normalize_text(std::string_view raw, const ContractionTable& table,
                           const TextprepOptions& options = {});

// Whitespace split of normalized text.
std::vector<std::string> tokens_of(std::string_view clean);

}  // namespace polarimeter
