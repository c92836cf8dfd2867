#pragma once

// Comma-separated text with double-quote quoting (embedded quotes doubled).

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace citemetrics::csv {

struct Record {
  std::size_t line;  // 1-based line on which the record starts
  std::vector<std::string> fields;
};

struct ParseError {
  std::size_t line;
  std::string message;
};

struct Table {
  std::vector<Record> records;  // header included as records[0] when present
  std::optional<ParseError> error;
};

// Splits text into records. Accepts LF and CRLF line endings and a leading
// UTF-8 byte-order mark. Blank lines are skipped. Parsing stops at the first
// malformed quote and reports it in `error`.
Table parse(std::string_view text);

std::string quote_field(std::string_view field);
std::string format_row(const std::vector<std::string>& fields);

}  // namespace citemetrics::csv
