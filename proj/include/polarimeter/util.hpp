#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace polarimeter {

// Library-level failure carrying a human-readable message. The CLI layer maps
// these to exit code 2 and prefixes the failing stage name.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

bool is_ascii_digit(char c);
bool is_ascii_alpha(char c);
bool is_ascii_space(char c);

// ASCII-only case fold; bytes outside A-Z pass through untouched.
std::string to_lower_ascii(std::string_view s);

std::string trim(std::string_view s);

std::vector<std::string> split_whitespace(std::string_view s);

// Serializes a real with 6 significant digits (the on-disk format for every
// real-valued CSV/JSON field). Produces the same bytes on every platform we
// target because the value is printed via printf %g with a fixed precision.
std::string format_real(double v);

// Shortest decimal form that parses back to exactly the same double. Used
// where serialize/parse must be lossless (roster scores).
std::string format_real_exact(double v);

// Strict numeric parsers; `what` names the field for error messages.
double parse_real(std::string_view s, const std::string& what);
long long parse_int(std::string_view s, const std::string& what);

// Validates YYYY-MM-DD with plausible month/day ranges. ISO dates compare
// correctly as plain strings, which the window filter relies on.
bool valid_iso_date(std::string_view s);

// Reads a whole file into memory; throws Error when unreadable.
std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace polarimeter
