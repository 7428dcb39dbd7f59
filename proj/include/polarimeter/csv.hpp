#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace polarimeter {

// Comma-separated records with RFC-style quoting: fields containing commas,
// quotes, or line breaks are wrapped in double quotes, and a literal quote is
// doubled. Rows end at LF or CRLF outside quotes; quoted fields keep embedded
// line breaks verbatim. A UTF-8 byte-order mark at the start of the input is
// stripped. Fully empty lines produce no row.
std::vector<std::vector<std::string>> parse_csv(std::string_view data);

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// Parses CSV text, validates the exact header, and checks every row has the
// header's column count. Error messages carry `origin` (a path or label) and
// the 1-based data row number.
CsvTable make_table(std::string_view data, const std::string& origin,
                    const std::vector<std::string>& expected_header);

// Same validation for a file on disk.
CsvTable read_csv_file(const std::string& path,
                       const std::vector<std::string>& expected_header);

std::string csv_quote(std::string_view field);
void append_csv_row(std::string& out, const std::vector<std::string>& fields);

}  // namespace polarimeter
