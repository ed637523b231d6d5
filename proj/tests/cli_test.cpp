/**
 * @file cli_test.cpp
 * @brief End-to-end runs of the musnet executable.
 */

#include <gtest/gtest.h>

#include <algorithm>
#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "musnet/csv.h"
#include "musnet/operators.h"
#include "oracles.h"

namespace fs = std::filesystem;

namespace {

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("musnet_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  int run(const std::string& args, const std::string& sub = "out") {
    const std::string cmd = std::string(MUSNET_CLI_PATH) + " --out-dir " + (dir_ / sub).string() + " " + args +
                            " 2>" + (dir_ / "stderr.txt").string() + " >/dev/null";
    const int status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  }
  std::string read(const std::string& rel) const { return musnet::csv::readText((dir_ / rel).string()); }
  std::string stderrText() const { return read("stderr.txt"); }
  void write(const std::string& rel, const std::string& text) const { std::ofstream(dir_ / rel) << text; }

  fs::path dir_;
};

std::size_t lineCount(const std::string& text) { return static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')); }

}  // namespace

TEST_F(Cli, DictionaryPcs) {
  ASSERT_EQ(run("dictionary --space pcs --nc 3 --tet 12"), 0);
  const std::string csv = read("out/catalog.csv");
  EXPECT_EQ(lineCount(csv), 13U);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "name,element,features");
  const auto config = nlohmann::json::parse(stderrText().substr(0, stderrText().find('\n')));
  EXPECT_EQ(config["seed"], 0);
  EXPECT_EQ(config["command"], "dictionary");
}

TEST_F(Cli, DictionaryUsageErrors) {
  EXPECT_NE(run("dictionary --space pcs"), 0);
  EXPECT_NE(stderrText().find("--nc"), std::string::npos);
  EXPECT_NE(run("dictionary --space bogus --nc 3"), 0);
  EXPECT_NE(run(""), 0);
}

TEST_F(Cli, DictionaryScoreAndRhythm) {
  write("chords.json", R"({"tet":12,"chords":[[0,4,7],[7,11,2],[0,4,7]]})");
  ASSERT_EQ(run("dictionary --space score --input " + (dir_ / "chords.json").string()), 0);
  EXPECT_EQ(lineCount(read("out/catalog.csv")), 3U);
  ASSERT_EQ(run("dictionary --space rhythm --nc 4 --symbols q,e,e,s", "r"), 0);
  EXPECT_EQ(lineCount(read("r/catalog.csv")), 4U);
  ASSERT_EQ(run("dictionary --space rhythmP --n 4 --nc 2 --ref 1/8", "p"), 0);
  EXPECT_EQ(lineCount(read("p/catalog.csv")), 3U);
  // Rows are [1/8,3/8] and [1/4,1/4]; only the second is a palindrome.
  EXPECT_EQ(read("p/nonretrogradable.txt"), "2-2\n");
}

TEST_F(Cli, NetworkByNameEdgesAtUnitDistance) {
  ASSERT_EQ(run("network --space vleadname --nc 3 --name \"O(1)\""), 0);
  const auto nodes = musnet::csv::parse(read("out/nodes.csv"));
  const auto edges = musnet::csv::parse(read("out/edges.csv"));
  ASSERT_GT(edges.size(), 1U);
  for (std::size_t i = 1; i < edges.size(); ++i) {
    const auto a = musnet::PcSet::parse(nodes[std::stoul(edges[i][0]) + 1][1]);
    const auto b = musnet::PcSet::parse(nodes[std::stoul(edges[i][1]) + 1][1]);
    EXPECT_DOUBLE_EQ(musnet::vlDistance(a, b), 1.0);
  }
  const auto stats = nlohmann::json::parse(read("out/stats.json"));
  for (const char* key : {"avgdeg", "modularity", "communities", "seed"}) EXPECT_TRUE(stats.contains(key)) << key;
}

TEST_F(Cli, NetworkDeterminism) {
  ASSERT_EQ(run("--seed 7 network --space pcs --nc 4 --thup 3 --prob 0.5", "a"), 0);
  ASSERT_EQ(run("--seed 7 network --space pcs --nc 4 --thup 3 --prob 0.5 --jobs 4", "b"), 0);
  EXPECT_EQ(read("a/edges.csv"), read("b/edges.csv"));
  EXPECT_EQ(read("a/nodes.csv"), read("b/nodes.csv"));
  EXPECT_EQ(read("a/stats.json"), read("b/stats.json"));
}

TEST_F(Cli, NetworkValidation) {
  EXPECT_NE(run("network --space pcs --nc 3 --thup 0.1 --thdw 0.2"), 0);
  const std::string err = stderrText();
  EXPECT_NE(err.find("InvalidArgument"), std::string::npos);
  EXPECT_NE(run("network --space vleadname --nc 3"), 0);
}

TEST_F(Cli, EgoAndScoreAndOrch) {
  ASSERT_EQ(run("network --space pcs --nc 4 --ego 4-1 --thup-ego 2"), 0);
  EXPECT_TRUE(fs::exists(dir_ / "out/nodes_ego.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out/edges_ego.csv"));
  EXPECT_TRUE(fs::exists(dir_ / "out/edges_alters.csv"));

  write("chords.json", R"({"chords":[[0,4,7],[7,11,2],[0,4,7],[5,9,0]]})");
  ASSERT_EQ(run("network --space score --input " + (dir_ / "chords.json").string(), "s"), 0);
  EXPECT_NE(read("s/edges.csv").find("\"R(-1,-2,0)\""), std::string::npos);

  write("orch.csv", "vln,vc\n1,0\n0,1\n1,0\n0,1\n");
  ASSERT_EQ(run("network --space orch --input " + (dir_ / "orch.csv").string(), "o"), 0);
  EXPECT_EQ(read("o/edges.csv"), "Source,Target,Weight\n2,1,2\n1,2,1\n");
}

TEST_F(Cli, DesignPipelineToMidi) {
  const std::string args = "--seed 3 design --space harmonic --nc 3 --names \"O(1)\" --nnodes 6 --nedges 2 "
                           "--rhythm \"[q,e]\" --midi design.mid";
  ASSERT_EQ(run(args, "a"), 0);
  ASSERT_EQ(run(args, "b"), 0);
  EXPECT_EQ(read("a/design.json"), read("b/design.json"));
  const auto design = nlohmann::json::parse(read("a/design.json"));
  const auto route = nlohmann::json::parse(read("a/route.json"));
  EXPECT_EQ(design["items"].size(), route["route"].size());
  EXPECT_EQ(route["matching"], "exact");

  std::ifstream in(dir_ / "a/design.mid", std::ios::binary);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto parsed = oracle::parseMidi(bytes);
  EXPECT_EQ(parsed.events.size(), design["items"].size());
  for (std::size_t i = 0; i < parsed.events.size(); ++i) EXPECT_EQ(parsed.events[i].ticks, i % 2 ? 240U : 480U);

  ASSERT_EQ(run("design --space harmonic --nc 3 --nnodes 1 --nstart 2", "c"), 0);
  EXPECT_EQ(nlohmann::json::parse(read("c/design.json"))["items"].size(), 1U);
  EXPECT_NE(run("design --space harmonic --nc 3 --nnodes 40", "d"), 0);
  EXPECT_NE(stderrText().find("ScaffoldTooLarge"), std::string::npos);
}

TEST_F(Cli, Sonify) {
  write("data.txt", "0 0\n1 1\n2 0.5\n");
  ASSERT_EQ(run("sonify --input " + (dir_ / "data.txt").string() + " --scale chromatic --base 60"), 0);
  std::ifstream in(dir_ / "out/sonify.mid", std::ios::binary);
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto parsed = oracle::parseMidi(bytes);
  ASSERT_EQ(parsed.events.size(), 3U);
  EXPECT_EQ(parsed.events[0].notes[0], 60);
  EXPECT_EQ(parsed.events[1].notes[0], 71);
  EXPECT_EQ(parsed.events[2].notes[0], 66);
  EXPECT_NE(run("sonify --input " + (dir_ / "data.txt").string() + " --scale nope"), 0);
  EXPECT_NE(run("sonify --input " + (dir_ / "missing.txt").string()), 0);
}
