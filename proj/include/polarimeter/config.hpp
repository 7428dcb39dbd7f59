#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>

namespace polarimeter {

// Flat key=value configuration with dotted key names (e.g. sentiment.alpha).
// Lines starting with '#' (after leading spaces) are comments; blank lines are
// ignored. Unknown keys are rejected so typos surface immediately. Values set
// later override earlier ones, which implements the CLI-beats-file rule: the
// CLI layer loads the file first, then applies explicit command-line values.
class Config {
  public:
    static const std::set<std::string>& known_keys();

    // Loads from an explicit path if given, else from the POLARIMETER_CONFIG
    // environment variable if set, else returns an empty config.
    static Config resolve(const std::optional<std::string>& cli_path);
    static Config load_file(const std::string& path);
    static Config parse(const std::string& text, const std::string& origin);

    void set(const std::string& key, const std::string& value);
    bool has(const std::string& key) const;

    std::string get_string(const std::string& key, const std::string& fallback) const;
    double get_real(const std::string& key, double fallback) const;
    long long get_int(const std::string& key, long long fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;

    const std::map<std::string, std::string>& entries() const { return values_; }

  private:
    std::map<std::string, std::string> values_;
};

}  // namespace polarimeter
