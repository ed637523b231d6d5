/**
 * @file midi.cpp
 * @brief SMF byte encoding.
 */

#include "musnet/midi.h"

#include <fstream>

#include "musnet/error.h"

namespace musnet {

namespace {

void putVarLen(std::vector<std::uint8_t>& out, std::uint32_t value) {
  std::uint8_t buf[5];
  int n = 0;
  buf[n++] = static_cast<std::uint8_t>(value & 0x7F);
  while ((value >>= 7) != 0) buf[n++] = static_cast<std::uint8_t>((value & 0x7F) | 0x80);
  while (n > 0) out.push_back(buf[--n]);
}

void putBE(std::vector<std::uint8_t>& out, std::uint32_t value, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) out.push_back(static_cast<std::uint8_t>(value >> (8 * i)));
}

}  // namespace

std::vector<std::uint8_t> encodeMidi(const ScoreEvents& e, const MidiOptions& options) {
  if (options.ticksPerQuarter < 1 || options.ticksPerQuarter > 0x7FFF) {
    throw Error(ErrorCode::InvalidArgument, "ticks per quarter must lie in 1..32767");
  }
  if (options.tempoBpm < 1) throw Error(ErrorCode::InvalidArgument, "tempo must be positive");
  if (options.channel < 0 || options.channel > 15) throw Error(ErrorCode::InvalidArgument, "channel must lie in 0..15");

  std::vector<std::uint8_t> track;
  const auto usPerQuarter = static_cast<std::uint32_t>(60'000'000 / options.tempoBpm);
  track.insert(track.end(), {0x00, 0xFF, 0x51, 0x03});
  putBE(track, usPerQuarter, 3);

  const auto ch = static_cast<std::uint8_t>(options.channel);
  for (const auto& ev : e.events) {
    if (ev.duration <= 0) throw Error(ErrorCode::NonPositiveDuration, "event duration must be positive");
    if (ev.velocity < 1 || ev.velocity > 127) throw Error(ErrorCode::InvalidArgument, "velocity must lie in 1..127");
    if (ev.notes.empty()) throw Error(ErrorCode::InvalidArgument, "event has no notes");
    for (int note : ev.notes) {
      if (note < 0 || note > 127) throw Error(ErrorCode::NoteRange, "note " + std::to_string(note) + " outside 0..127");
    }
    const Rational ticks = ev.duration * Rational(4 * options.ticksPerQuarter);
    if (ticks.denominator() != 1 || ticks.numerator() > 0x0FFFFFFF) {
      throw Error(ErrorCode::InvalidArgument, "duration " + formatRational(ev.duration) +
                                                  " is not a whole number of ticks");
    }
    for (int note : ev.notes) {
      track.insert(track.end(), {0x00, static_cast<std::uint8_t>(0x90 | ch), static_cast<std::uint8_t>(note),
                                 static_cast<std::uint8_t>(ev.velocity)});
    }
    std::uint32_t delta = static_cast<std::uint32_t>(ticks.numerator());
    for (int note : ev.notes) {
      putVarLen(track, delta);
      track.insert(track.end(), {static_cast<std::uint8_t>(0x80 | ch), static_cast<std::uint8_t>(note), 0x40});
      delta = 0;
    }
  }
  track.insert(track.end(), {0x00, 0xFF, 0x2F, 0x00});

  std::vector<std::uint8_t> out{'M', 'T', 'h', 'd'};
  putBE(out, 6, 4);
  putBE(out, 0, 2);
  putBE(out, 1, 2);
  putBE(out, static_cast<std::uint32_t>(options.ticksPerQuarter), 2);
  out.insert(out.end(), {'M', 'T', 'r', 'k'});
  putBE(out, static_cast<std::uint32_t>(track.size()), 4);
  out.insert(out.end(), track.begin(), track.end());
  return out;
}

void writeMidi(const ScoreEvents& e, const std::filesystem::path& path, const MidiOptions& options) {
  const auto bytes = encodeMidi(e, options);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

}  // namespace musnet
