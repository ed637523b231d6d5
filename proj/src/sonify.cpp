/**
 * @file sonify.cpp
 * @brief Series parsing, scale tables and index mapping.
 */

#include "musnet/sonify.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>

#include <json.hpp>

#include "musnet/csv.h"
#include "musnet/error.h"

namespace musnet {

namespace {

struct ScaleDef {
  std::string_view name;
  std::vector<int> degrees;
};

const std::vector<ScaleDef>& scales() {
  static const std::vector<ScaleDef> table{
      {"chromatic", {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}},
      {"major", {0, 2, 4, 5, 7, 9, 11}},
      {"natural_minor", {0, 2, 3, 5, 7, 8, 10}},
      {"pentatonic", {0, 2, 4, 7, 9}},
      {"wholetone", {0, 2, 4, 6, 8, 10}},
  };
  return table;
}

double parseNumber(std::string_view field, std::size_t line) {
  double value = 0.0;
  const auto* first = field.data();
  const auto* last = field.data() + field.size();
  if (!field.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": '" + std::string(field) +
                                           "' is not a number");
  }
  return value;
}

}  // namespace

DataSeries parseSeries(std::string_view text) {
  DataSeries d;
  std::size_t lineNo = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++lineNo;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',' || line[i] == '\r')) ++i;
      const std::size_t begin = i;
      while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',' && line[i] != '\r') ++i;
      if (i > begin) fields.push_back(line.substr(begin, i - begin));
    }
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(lineNo) + ": expected two columns");
    }
    d.x.push_back(parseNumber(fields[0], lineNo));
    d.y.push_back(parseNumber(fields[1], lineNo));
  }
  if (d.y.empty()) throw Error(ErrorCode::EmptySeries, "no data rows");
  return d;
}

DataSeries readSeries(const std::filesystem::path& path) { return parseSeries(csv::readText(path.string())); }

ScaleMap scaleMap(std::string_view name) {
  for (const auto& s : scales()) {
    if (s.name == name) return {std::string(s.name), s.degrees};
  }
  throw Error(ErrorCode::UnknownScale, "unknown scale '" + std::string(name) + "'");
}

std::vector<std::string> scaleNames() {
  std::vector<std::string> names;
  for (const auto& s : scales()) names.emplace_back(s.name);
  return names;
}

std::string ScoreEvents::toJson() const {
  nlohmann::json doc;
  doc["events"] = nlohmann::json::array();
  for (const auto& e : events) {
    doc["events"].push_back({{"notes", e.notes}, {"duration", formatRational(e.duration)}, {"velocity", e.velocity}});
  }
  return doc.dump(2);
}

ScoreEvents midiMap(const DataSeries& d, const ScaleMap& s, int baseNote, int octaves, const Rational& duration,
                    int velocity) {
  if (d.y.empty()) throw Error(ErrorCode::EmptySeries, "no data rows");
  if (octaves < 1) throw Error(ErrorCode::InvalidArgument, "octaves must be at least 1");
  if (s.degrees.empty()) throw Error(ErrorCode::UnknownScale, "scale has no degrees");
  if (duration <= 0) throw Error(ErrorCode::NonPositiveDuration, "event duration must be positive");
  if (velocity < 1 || velocity > 127) throw Error(ErrorCode::InvalidArgument, "velocity must lie in 1..127");

  const auto [lo, hi] = std::minmax_element(d.y.begin(), d.y.end());
  const double range = *hi - *lo;
  const int count = s.nnote() * octaves;
  ScoreEvents out;
  out.events.reserve(d.y.size());
  for (double y : d.y) {
    int idx = 0;
    if (range > 0.0) {
      idx = static_cast<int>(std::lround((y - *lo) / range * (count - 1)));
      idx = std::clamp(idx, 0, count - 1);
    }
    const int note = baseNote + 12 * (idx / s.nnote()) + s.degrees[static_cast<std::size_t>(idx % s.nnote())];
    if (note < 0 || note > 127) {
      throw Error(ErrorCode::NoteRange, "mapped note " + std::to_string(note) + " outside 0..127");
    }
    out.events.push_back({{note}, duration, velocity});
  }
  return out;
}

}  // namespace musnet
