#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace functor_audit::detail {

struct CsvRow {
    long line = 0;  // 1-based line where the row starts
    std::vector<std::string> fields;
};

/// RFC 4180 reader: comma separated, `"` quoting with `""` escapes, quoted
/// fields may span lines. Blank lines are skipped. Returns false in
/// `ok` for an unterminated quote at end of input (the partial row is
/// still returned so the caller can report it).
std::vector<CsvRow> read_csv(std::string_view text, bool* ok = nullptr);

}  // namespace functor_audit::detail
