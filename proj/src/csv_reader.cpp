#include "csv_reader.hpp"

namespace functor_audit::detail {

std::vector<CsvRow> read_csv(std::string_view text, bool* ok) {
    std::vector<CsvRow> rows;
    if (ok) *ok = true;
    // Byte order mark.
    if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

    CsvRow row;
    std::string field;
    bool in_quotes = false;
    bool row_has_content = false;
    long line = 1;
    row.line = 1;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
    };
    auto end_row = [&] {
        if (row_has_content || !row.fields.empty()) {
            end_field();
            rows.push_back(std::move(row));
        }
        row = CsvRow{};
        field.clear();
        row_has_content = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        if (c == '"') {
            in_quotes = true;
            row_has_content = true;
        } else if (c == ',') {
            end_field();
            row_has_content = true;
        } else if (c == '\n' || c == '\r') {
            if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
            end_row();
            ++line;
            row.line = line;
        } else {
            field += c;
            row_has_content = true;
        }
    }
    if (in_quotes && ok) *ok = false;
    end_row();
    return rows;
}

}  // namespace functor_audit::detail
