/**
 * @file midi.h
 * @brief Standard MIDI File (format 0) writer.
 */

#pragma once

#include <cstdint>
#include <filesystem>
#include <vector>

#include "musnet/sonify.h"

namespace musnet {

struct MidiOptions {
  int ticksPerQuarter = 480;
  int tempoBpm = 120;
  int channel = 0;
};

/// One track: tempo meta-event, then per event all note-ons at delta 0 and the
/// note-offs after duration * 4 * ticksPerQuarter ticks, then end-of-track.
/// Throws NoteRange for notes outside 0..127 and InvalidArgument when a
/// duration is not a whole number of ticks.
std::vector<std::uint8_t> encodeMidi(const ScoreEvents& e, const MidiOptions& options = {});

void writeMidi(const ScoreEvents& e, const std::filesystem::path& path, const MidiOptions& options = {});

}  // namespace musnet
