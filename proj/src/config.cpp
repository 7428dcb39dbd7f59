#include "polarimeter/config.hpp"

#include <cstdlib>

#include "polarimeter/util.hpp"

namespace polarimeter {

const std::set<std::string>& Config::known_keys() {
    static const std::set<std::string> keys = {
        "paths.members",
        "paths.tweets",
        "paths.lexicon",
        "paths.topics",
        "paths.contractions",
        "paths.stopwords",
        "paths.output_dir",
        "window.start",
        "window.end",
        "cluster.k",
        "cluster.tol",
        "cluster.max_iter",
        "ngrams.top",
        "run.threads",
        "sentiment.alpha",
        "sentiment.booster_increment",
        "sentiment.caps_increment",
        "sentiment.negation_factor",
        "sentiment.but_pre_weight",
        "sentiment.but_post_weight",
        "sentiment.exclamation_increment",
        "sentiment.question_increment",
        "sentiment.question_cap",
        "flags.score_raw",
        "flags.drop_mentions",
        "flags.no_stopwords",
        "flags.include_centrist",
        "flags.welch",
    };
    return keys;
}

Config Config::resolve(const std::optional<std::string>& cli_path) {
    if (cli_path) return load_file(*cli_path);
    if (const char* env = std::getenv("POLARIMETER_CONFIG"); env && *env) {
        return load_file(env);
    }
    return Config{};
}

Config Config::load_file(const std::string& path) {
    return parse(read_file(path), path);
}

Config Config::parse(const std::string& text, const std::string& origin) {
    Config cfg;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        const size_t eol = text.find('\n', pos);
        const std::string line =
            trim(text.substr(pos, eol == std::string::npos ? eol : eol - pos));
        pos = (eol == std::string::npos) ? text.size() + 1 : eol + 1;
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        const size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(origin + ":" + std::to_string(line_no) +
                        ": expected 'key = value'");
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (!known_keys().count(key)) {
            throw Error(origin + ":" + std::to_string(line_no) +
                        ": unknown config key '" + key + "'");
        }
        cfg.values_[key] = value;
    }
    return cfg;
}

void Config::set(const std::string& key, const std::string& value) {
    if (!known_keys().count(key)) {
        throw Error("unknown config key '" + key + "'");
    }
    values_[key] = value;
}

bool Config::has(const std::string& key) const { return values_.count(key) > 0; }

std::string Config::get_string(const std::string& key,
                               const std::string& fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double Config::get_real(const std::string& key, double fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_real(it->second, key);
}

long long Config::get_int(const std::string& key, long long fallback) const {
    auto it = values_.find(key);
    return it == values_.end() ? fallback : parse_int(it->second, key);
}

bool Config::get_bool(const std::string& key, bool fallback) const {
    auto it = values_.find(key);
    if (it == values_.end()) return fallback;
    const std::string& v = it->second;
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw Error("invalid boolean '" + v + "' for " + key);
}

}  // namespace polarimeter
