#include "citemetrics/csv.hpp"

namespace citemetrics::csv {

Table parse(std::string_view text) {
  Table table;
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);

  std::size_t line = 1;
  std::size_t pos = 0;
  const std::size_t n = text.size();

  while (pos < n) {
    // Blank line.
    if (text[pos] == '\n' || (text[pos] == '\r' && pos + 1 < n && text[pos + 1] == '\n')) {
      pos += text[pos] == '\r' ? 2 : 1;
      ++line;
      continue;
    }

    Record record{line, {}};
    std::string field;
    bool end_of_record = false;
    while (!end_of_record) {
      field.clear();
      if (pos < n && text[pos] == '"') {
        const std::size_t opened_at = line;
        ++pos;
        bool closed = false;
        while (pos < n) {
          const char c = text[pos];
          if (c == '"') {
            if (pos + 1 < n && text[pos + 1] == '"') {
              field.push_back('"');
              pos += 2;
              continue;
            }
            ++pos;
            closed = true;
            break;
          }
          if (c == '\n') ++line;
          field.push_back(c);
          ++pos;
        }
        if (!closed) {
          table.error = ParseError{opened_at, "unterminated quoted field"};
          return table;
        }
        if (pos < n && text[pos] != ',' && text[pos] != '\n' &&
            !(text[pos] == '\r' && pos + 1 < n && text[pos + 1] == '\n')) {
          table.error = ParseError{line, "unexpected character after closing quote"};
          return table;
        }
      } else {
        while (pos < n && text[pos] != ',' && text[pos] != '\n') {
          if (text[pos] == '\r' && pos + 1 < n && text[pos + 1] == '\n') break;
          if (text[pos] == '"') {
            table.error = ParseError{line, "quote inside unquoted field"};
            return table;
          }
          field.push_back(text[pos]);
          ++pos;
        }
      }
      record.fields.push_back(field);

      if (pos >= n) {
        end_of_record = true;
      } else if (text[pos] == ',') {
        ++pos;
      } else {
        pos += text[pos] == '\r' ? 2 : 1;
        ++line;
        end_of_record = true;
      }
    }
    table.records.push_back(std::move(record));
  }
  return table;
}

std::string quote_field(std::string_view field) {
  if (field.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (const char c : field) {
    if (c == '"') out.push_back('"');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::string format_row(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out.push_back(',');
    out += quote_field(fields[i]);
  }
  out.push_back('\n');
  return out;
}

}  // namespace citemetrics::csv
