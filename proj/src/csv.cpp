/**
 * @file csv.cpp
 * @brief CSV quoting and parsing.
 */

#include "musnet/csv.h"

#include <fstream>
#include <ostream>
#include <sstream>

#include "musnet/error.h"

namespace musnet::csv {

std::string escape(std::string_view field) {
  if (field.find_first_of(",\"\n\r") == std::string_view::npos) return std::string(field);
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

void writeRow(std::ostream& out, const Row& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (i) out << ',';
    out << escape(row[i]);
  }
  out << '\n';
}

std::vector<Row> parse(std::string_view text) {
  std::vector<Row> rows;
  Row row;
  std::string field;
  bool quoted = false;
  bool fieldStarted = false;
  auto endRow = [&] {
    if (fieldStarted || !row.empty()) {
      row.push_back(std::move(field));
      rows.push_back(std::move(row));
    }
    row.clear();
    field.clear();
    fieldStarted = false;
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        quoted = true;
        fieldStarted = true;
        break;
      case ',':
        row.push_back(std::move(field));
        field.clear();
        fieldStarted = true;
        break;
      case '\r':
        break;
      case '\n':
        endRow();
        break;
      default:
        field += c;
        fieldStarted = true;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted CSV field");
  endRow();
  return rows;
}

std::string readText(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeText(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot write '" + path + "'");
  out << text;
  if (!out) throw Error(ErrorCode::Io, "write to '" + path + "' failed");
}

std::vector<Row> readFile(const std::string& path) { return parse(readText(path)); }

}  // namespace musnet::csv
