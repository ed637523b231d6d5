/**
 * @file sonify_test.cpp
 * @brief Series parsing, scale mapping and MIDI encoding.
 */

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "musnet/error.h"
#include "musnet/midi.h"
#include "musnet/sonify.h"
#include "oracles.h"

using namespace musnet;

TEST(ReadSeries, Formats) {
  const DataSeries ws = parseSeries("0 1\n1 2\n");
  EXPECT_EQ(ws.x, (std::vector<double>{0, 1}));
  EXPECT_EQ(ws.y, (std::vector<double>{1, 2}));
  const DataSeries cs = parseSeries("# header\n0,1\n\n1, 2\n");
  EXPECT_EQ(cs.x, ws.x);
  EXPECT_EQ(cs.y, ws.y);
  EXPECT_EQ(parseSeries("1e2\t-3.5  # tail\n").y, (std::vector<double>{-3.5}));
}

TEST(ReadSeries, Errors) {
  try {
    parseSeries("");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySeries);
  }
  try {
    parseSeries("0 1\n1 x\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_THROW(parseSeries("1 2 3\n"), Error);
  const auto path = std::filesystem::temp_directory_path() / "musnet_series.txt";
  std::ofstream(path) << "0 5\n1 6\n";
  EXPECT_EQ(readSeries(path).y, (std::vector<double>{5, 6}));
  std::filesystem::remove(path);
}

TEST(ScaleMap, BuiltIns) {
  EXPECT_EQ(scaleMap("major").nnote(), 7);
  EXPECT_EQ(scaleMap("chromatic").nnote(), 12);
  EXPECT_EQ(scaleMap("pentatonic").degrees, (std::vector<int>{0, 2, 4, 7, 9}));
  EXPECT_EQ(scaleMap("natural_minor").degrees, (std::vector<int>{0, 2, 3, 5, 7, 8, 10}));
  EXPECT_EQ(scaleMap("wholetone").nnote(), 6);
  try {
    scaleMap("unknown");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownScale);
  }
}

TEST(MidiMap, Examples) {
  DataSeries d{{0, 1}, {0, 1}};
  const ScoreEvents e = midiMap(d, scaleMap("chromatic"), 60, 1);
  ASSERT_EQ(e.events.size(), 2U);
  EXPECT_EQ(e.events[0].notes, (std::vector<int>{60}));
  EXPECT_EQ(e.events[1].notes, (std::vector<int>{71}));
  EXPECT_EQ(e.events[0].velocity, 80);

  DataSeries flat{{0, 1, 2}, {3, 3, 3}};
  for (const auto& ev : midiMap(flat, scaleMap("major"), 48, 2).events) EXPECT_EQ(ev.notes, (std::vector<int>{48}));

  DataSeries wide{{0, 1, 2}, {-5, 0, 5}};
  const ScoreEvents w = midiMap(wide, scaleMap("major"), 60, 2);
  EXPECT_EQ(w.events.front().notes[0], 60);
  EXPECT_EQ(w.events.back().notes[0], 60 + 12 + 11);
}

TEST(MidiMap, MonotoneAndInRange) {
  std::mt19937_64 rng(31);
  std::normal_distribution<double> val(0.0, 10.0);
  for (const auto& name : scaleNames()) {
    DataSeries d;
    for (int i = 0; i < 60; ++i) {
      d.x.push_back(i);
      d.y.push_back(val(rng));
    }
    const ScoreEvents e = midiMap(d, scaleMap(name), 40, 3);
    for (std::size_t i = 0; i < d.y.size(); ++i) {
      EXPECT_GE(e.events[i].notes[0], 40);
      EXPECT_LE(e.events[i].notes[0], 40 + 36);
      for (std::size_t j = 0; j < d.y.size(); ++j) {
        if (d.y[i] <= d.y[j]) EXPECT_LE(e.events[i].notes[0], e.events[j].notes[0]);
      }
    }
  }
  DataSeries high{{0, 1}, {0, 1}};
  EXPECT_THROW(midiMap(high, scaleMap("chromatic"), 120, 1), Error);
}

TEST(Midi, HeaderAndQuarterNote) {
  ScoreEvents e;
  e.events.push_back({{60}, Rational(1, 4), 80});
  const auto bytes = encodeMidi(e);
  const std::vector<std::uint8_t> header{'M', 'T', 'h', 'd', 0, 0, 0, 6, 0, 0, 0, 1, 0x01, 0xE0};
  ASSERT_GE(bytes.size(), header.size());
  EXPECT_TRUE(std::equal(header.begin(), header.end(), bytes.begin()));
  const auto parsed = oracle::parseMidi(bytes);
  ASSERT_EQ(parsed.events.size(), 1U);
  EXPECT_EQ(parsed.events[0].ticks, 480U);
  EXPECT_EQ(parsed.tempo, 500000U);
  EXPECT_EQ(bytes[bytes.size() - 3], 0xFF);
  EXPECT_EQ(bytes[bytes.size() - 2], 0x2F);
  EXPECT_EQ(bytes[bytes.size() - 1], 0x00);
}

TEST(Midi, Errors) {
  ScoreEvents bad;
  bad.events.push_back({{128}, Rational(1, 4), 80});
  try {
    encodeMidi(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NoteRange);
  }
  ScoreEvents odd;
  odd.events.push_back({{60}, Rational(1, 7), 80});
  EXPECT_THROW(encodeMidi(odd), Error);
}

TEST(Midi, ChordsAndFileRoundTrip) {
  ScoreEvents e;
  e.events.push_back({{60, 64, 67}, Rational(1, 2), 80});
  e.events.push_back({{62}, Rational(3, 16), 90});
  e.events.push_back({{67, 71, 74}, Rational(1, 6), 80});
  const auto path = std::filesystem::temp_directory_path() / "musnet_test.mid";
  writeMidi(e, path, {96, 90, 0});
  std::ifstream in(path, std::ios::binary);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  std::filesystem::remove(path);
  const auto parsed = oracle::parseMidi(bytes);
  EXPECT_EQ(parsed.format, 0);
  EXPECT_EQ(parsed.tracks, 1);
  EXPECT_EQ(parsed.division, 96);
  ASSERT_EQ(parsed.events.size(), 3U);
  EXPECT_EQ(parsed.events[0].notes, (std::vector<int>{60, 64, 67}));
  EXPECT_EQ(parsed.events[0].ticks, 192U);
  EXPECT_EQ(parsed.events[1].ticks, 72U);
  EXPECT_EQ(parsed.events[1].velocity, 90);
  EXPECT_EQ(parsed.events[2].ticks, 64U);
}
