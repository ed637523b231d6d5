/**
 * @file csv.h
 * @brief Minimal RFC 4180 reading and writing (UTF-8, LF line endings).
 */

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace musnet::csv {

using Row = std::vector<std::string>;

/// Quotes the field when it contains a comma, quote or newline.
std::string escape(std::string_view field);
void writeRow(std::ostream& out, const Row& row);

/// Parses a whole document. Blank lines are skipped.
std::vector<Row> parse(std::string_view text);
std::vector<Row> readFile(const std::string& path);

std::string readText(const std::string& path);
void writeText(const std::string& path, std::string_view text);

}  // namespace musnet::csv
