#include "polarimeter/csv.hpp"

#include "polarimeter/util.hpp"

namespace polarimeter {

std::vector<std::vector<std::string>> parse_csv(std::string_view data) {
    if (data.size() >= 3 && data.substr(0, 3) == "\xEF\xBB\xBF") {
        data.remove_prefix(3);
    }

    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> row;
    std::string field;
    bool in_quotes = false;
    bool field_was_quoted = false;
    bool row_has_content = false;  // any field boundary or character seen
    size_t line = 1;
    size_t quote_start_line = 0;

    auto end_field = [&] {
        row.push_back(field);
        field.clear();
        field_was_quoted = false;
    };
    auto end_row = [&] {
        if (row_has_content) {
            end_field();
            rows.push_back(std::move(row));
            row = {};
        }
        row_has_content = false;
    };

    for (size_t i = 0; i < data.size(); ++i) {
        const char c = data[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < data.size() && data[i + 1] == '"') {
                    field.push_back('"');
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field.push_back(c);
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field.empty() && !field_was_quoted) {
                    in_quotes = true;
                    field_was_quoted = true;
                    row_has_content = true;
                    quote_start_line = line;
                } else if (field_was_quoted) {
                    throw Error("stray quote after closing quote at line " +
                                std::to_string(line));
                } else {
                    field.push_back(c);  // bare quote inside an unquoted field
                    row_has_content = true;
                }
                break;
            case ',':
                end_field();
                row_has_content = true;
                break;
            case '\r':
                if (i + 1 < data.size() && data[i + 1] == '\n') ++i;
                ++line;
                end_row();
                break;
            case '\n':
                ++line;
                end_row();
                break;
            default:
                if (field_was_quoted) {
                    throw Error("unexpected character after closing quote at line " +
                                std::to_string(line));
                }
                field.push_back(c);
                row_has_content = true;
                break;
        }
    }
    if (in_quotes) {
        throw Error("unterminated quoted field starting at line " +
                    std::to_string(quote_start_line));
    }
    end_row();
    return rows;
}

CsvTable make_table(std::string_view data, const std::string& origin,
                    const std::vector<std::string>& expected_header) {
    auto rows = parse_csv(data);
    if (rows.empty()) {
        throw Error(origin + ": missing header row");
    }
    if (rows.front() != expected_header) {
        std::string want;
        for (size_t i = 0; i < expected_header.size(); ++i) {
            if (i) want.push_back(',');
            want += expected_header[i];
        }
        throw Error(origin + ": unexpected header, expected '" + want + "'");
    }
    CsvTable table;
    table.header = std::move(rows.front());
    for (size_t r = 1; r < rows.size(); ++r) {
        if (rows[r].size() != expected_header.size()) {
            throw Error(origin + ": wrong column count at data row " +
                        std::to_string(r) + " (got " +
                        std::to_string(rows[r].size()) + ", want " +
                        std::to_string(expected_header.size()) + ")");
        }
        table.rows.push_back(std::move(rows[r]));
    }
    return table;
}

CsvTable read_csv_file(const std::string& path,
                       const std::vector<std::string>& expected_header) {
    return make_table(read_file(path), path, expected_header);
}

std::string csv_quote(std::string_view field) {
    const bool needs_quotes =
        field.find_first_of(",\"\n\r") != std::string_view::npos;
    if (!needs_quotes) return std::string(field);
    std::string out;
    out.reserve(field.size() + 2);
    out.push_back('"');
    for (char c : field) {
        if (c == '"') out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

void append_csv_row(std::string& out, const std::vector<std::string>& fields) {
    for (size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_quote(fields[i]);
    }
    out.push_back('\n');
}

}  // namespace polarimeter
