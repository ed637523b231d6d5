/**
 * @file sonify.h
 * @brief Data series to scale-mapped note events.
 */

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "musnet/rhythm.h"

namespace musnet {

struct DataSeries {
  std::vector<double> x;
  std::vector<double> y;
};

/// Two numeric columns separated by whitespace or commas; blank lines and
/// '#' comments are skipped. Throws ParseError (with the line number) or
/// EmptySeries.
DataSeries parseSeries(std::string_view text);
DataSeries readSeries(const std::filesystem::path& path);

struct ScaleMap {
  std::string name;
  std::vector<int> degrees;

  int nnote() const noexcept { return static_cast<int>(degrees.size()); }
};

/// chromatic, major, natural_minor, pentatonic, wholetone; else UnknownScale.
ScaleMap scaleMap(std::string_view name);
std::vector<std::string> scaleNames();

struct ScoreEvent {
  /// Sounding MIDI notes (one for a melody event, several for a chord).
  std::vector<int> notes;
  /// Whole note = 1.
  Rational duration{1, 4};
  int velocity = 80;

  friend bool operator==(const ScoreEvent&, const ScoreEvent&) = default;
};

struct ScoreEvents {
  std::vector<ScoreEvent> events;

  std::string toJson() const;
};

/// Min-max normalizes y onto scale indices in [0, nnote * octaves); a constant
/// series maps to index 0.
ScoreEvents midiMap(const DataSeries& d, const ScaleMap& s, int baseNote = 60, int octaves = 1,
                    const Rational& duration = Rational(1, 4), int velocity = 80);

}  // namespace musnet
