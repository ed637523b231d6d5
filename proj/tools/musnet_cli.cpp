/**
 * @file musnet_cli.cpp
 * @brief Command-line front end: dictionary, network, design and sonify.
 */

#include <CLI11.hpp>
#include <algorithm>
#include <filesystem>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "musnet/catalog.h"
#include "musnet/community.h"
#include "musnet/csv.h"
#include "musnet/design.h"
#include "musnet/error.h"
#include "musnet/midi.h"
#include "musnet/netgen.h"
#include "musnet/score.h"
#include "musnet/sonify.h"

namespace fs = std::filesystem;
using namespace musnet;

namespace {

struct Common {
  std::uint64_t seed = 0;
  std::string metric = "euclidean";
  std::string outDir = ".";
  unsigned jobs = 1;
  int tet = 12;
};

// Flags that select or build a catalog.
struct CatalogFlags {
  std::optional<int> nc;
  std::string order = "prime";
  std::string row;
  std::string symbols;
  std::optional<int> n;
  std::string ref = "1/8";
  std::string catalogPath;
  std::string input;
};

struct NetworkFlags {
  std::string space = "pcs";
  double thup = 1.5;
  double thdw = 0.0;
  double prob = 1.0;
  std::string name;
  std::string ego;
  double thupEgo = 1.5;
  double thdwEgo = 0.0;
  bool distanceOps = false;
  std::optional<std::size_t> start;
  std::optional<std::size_t> end;
};

struct DesignFlags {
  std::string space = "harmonic";
  std::string names;
  std::string slices;
  std::string nodesPath;
  std::string edgesPath;
  int nnodes = 10;
  int nedges = 1;
  int nstart = 0;
  bool reverse = false;
  std::string rhythm;
  std::string fac = "1";
  std::string midi;
};

struct SonifyFlags {
  std::string input;
  std::string scale = "major";
  int base = 60;
  int octaves = 1;
  std::string duration = "1/4";
  int velocity = 80;
  int tpq = 480;
  int tempo = 120;
  std::string out = "sonify.mid";
};

std::vector<std::string> splitList(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b != std::string::npos) out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

fs::path outPath(const Common& c, const std::string& name) { return fs::path(c.outDir) / name; }

void writeFile(const Common& c, const std::string& name, std::string_view text) {
  csv::writeText(outPath(c, name).string(), text);
}

std::string joinLines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

int requireNc(const CatalogFlags& f) {
  if (!f.nc) throw Error(ErrorCode::InvalidArgument, "--nc is required for this space");
  return *f.nc;
}

CatalogResult buildCatalog(const std::string& space, const CatalogFlags& f, const Common& c) {
  if (space == "pcs" || space == "vlead" || space == "vleadname") {
    std::optional<std::vector<int>> row;
    if (!f.row.empty()) row = parseIntList(f.row);
    return pcsDictionary(requireNc(f), c.tet, parsePcsOrder(f.order), row);
  }
  if (space == "rhythm" || space == "rlead") {
    if (f.n) return rhythmPDictionary(*f.n, requireNc(f), parseRational(f.ref));
    if (f.symbols.empty()) throw Error(ErrorCode::InvalidArgument, "--symbols or --n is required for rhythm spaces");
    const auto symbols = splitList(f.symbols, ',');
    return rhythmDictionary(requireNc(f), symbols);
  }
  if (space == "rhythmP") {
    if (!f.n) throw Error(ErrorCode::InvalidArgument, "--n is required for rhythmP");
    return rhythmPDictionary(*f.n, requireNc(f), parseRational(f.ref));
  }
  if (space == "score") {
    if (f.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required for the score space");
    return {scoreDictionary(readChordSequence(f.input)), {}};
  }
  throw Error(ErrorCode::InvalidArgument, "unknown space '" + space + "'");
}

Catalog loadOrBuildCatalog(const std::string& space, const CatalogFlags& f, const Common& c) {
  if (!f.catalogPath.empty()) {
    const bool rhythm = space == "rhythm" || space == "rlead";
    return Catalog::fromCsv(csv::readText(f.catalogPath), rhythm ? CatalogKind::Rhythm : CatalogKind::Pcs, c.tet);
  }
  return buildCatalog(space, f, c).catalog;
}

void writeStats(const Common& c, const Graph& g, std::uint64_t seed, nlohmann::json extra = nlohmann::json::object()) {
  const Communities comm = detectCommunities(undirectedProjection(g), seed);
  nlohmann::json stats = std::move(extra);
  stats["nodes"] = g.nodes.size();
  stats["edges"] = g.edges.size();
  stats["avgdeg"] = averageDegree(g);
  stats["modularity"] = comm.modularity;
  stats["communities"] = comm.partition.empty() ? 0 : *std::max_element(comm.partition.begin(), comm.partition.end()) + 1;
  stats["seed"] = seed;
  writeFile(c, "stats.json", stats.dump(2) + "\n");
  std::string parts = "Id,Community\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    parts += std::to_string(g.nodes[i].id) + "," + std::to_string(comm.partition[i]) + "\n";
  }
  writeFile(c, "communities.csv", parts);
}

void writeGraph(const Common& c, const Graph& g) {
  writeFile(c, "nodes.csv", g.nodesCsv());
  writeFile(c, "edges.csv", g.edgesCsv());
}

void runDictionary(const std::string& space, const CatalogFlags& f, const Common& c) {
  const CatalogResult r = buildCatalog(space, f, c);
  writeFile(c, "catalog.csv", r.catalog.toCsv());
  writeFile(c, "zlist.txt", joinLines(r.zlist));
  if (r.catalog.kind == CatalogKind::Rhythm) {
    std::vector<std::string> names;
    for (const auto& row : r.catalog.rows) {
      if (row.nonRetrogradable) names.push_back(row.name);
    }
    writeFile(c, "nonretrogradable.txt", joinLines(names));
  }
}

void runNetwork(const NetworkFlags& nf, const CatalogFlags& f, const Common& c) {
  const MetricId metric = parseMetric(c.metric);
  if (nf.space == "score") {
    if (f.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required for the score space");
    const ChordSequence s = readChordSequence(f.input);
    const ScoreNetwork net =
        (nf.start || nf.end)
            ? scoreSubNetwork(s, nf.start.value_or(0), nf.end.value_or(s.chords.size()), !nf.distanceOps, metric, c.seed)
            : scoreNetwork(s, !nf.distanceOps, metric, c.seed);
    writeGraph(c, net.graph);
    writeStats(c, net.graph, c.seed, {{"counts", net.counts}});
    return;
  }
  if (nf.space == "orch") {
    if (f.input.empty()) throw Error(ErrorCode::InvalidArgument, "--input is required for the orch space");
    const Orchestration o = parseOrchestration(csv::readText(f.input));
    const OrchNetwork net = orchestralNetwork(o.beats, c.seed);
    writeGraph(c, net.graph);
    writeStats(c, net.graph, c.seed, {{"instruments", o.instruments}});
    return;
  }

  NetworkParams p;
  p.thup = nf.thup;
  p.thdw = nf.thdw;
  p.prob = nf.prob;
  p.metric = metric;
  p.seed = c.seed;
  p.jobs = c.jobs;
  p.validate();

  const Catalog cat = loadOrBuildCatalog(nf.space, f, c);
  if (!nf.ego.empty()) {
    if (nf.space != "pcs" && nf.space != "rhythm") {
      throw Error(ErrorCode::InvalidArgument, "ego networks are built on the pcs and rhythm spaces");
    }
    const EgoNetwork ego = egoNetwork(cat, nf.ego, {nf.thupEgo, nf.thdwEgo, nf.thup, nf.thdw, metric});
    writeFile(c, "nodes_ego.csv", ego.ego.nodesCsv());
    writeFile(c, "edges_ego.csv", ego.ego.edgesCsv());
    writeFile(c, "edges_alters.csv", ego.alters.edgesCsv());
    return;
  }

  Graph g;
  if (nf.space == "pcs") {
    g = pcsNetwork(cat, p);
  } else if (nf.space == "vlead") {
    g = vlNetwork(cat, p);
  } else if (nf.space == "vleadname") {
    if (nf.name.empty()) throw Error(ErrorCode::InvalidArgument, "--name is required for vleadname");
    g = vlNetworkByName(cat, OperatorName::parse(nf.name), metric, c.jobs);
  } else if (nf.space == "rhythm") {
    g = rhythmNetwork(cat, p);
  } else if (nf.space == "rlead") {
    g = rLeadNetwork(cat, p);
  } else {
    throw Error(ErrorCode::InvalidArgument, "unknown network space '" + nf.space + "'");
  }
  writeGraph(c, g);
  writeStats(c, g, c.seed);
}

Graph referenceNetwork(const DesignFlags& df, const CatalogFlags& f, const Common& c) {
  if (!df.nodesPath.empty() || !df.edgesPath.empty()) {
    if (df.nodesPath.empty() || df.edgesPath.empty()) {
      throw Error(ErrorCode::InvalidArgument, "--nodes and --edges must be given together");
    }
    return Graph::fromCsv(csv::readText(df.nodesPath), csv::readText(df.edgesPath));
  }
  const MetricId metric = parseMetric(c.metric);
  if (df.space == "harmonic") {
    const Catalog cat = loadOrBuildCatalog("pcs", f, c);
    if (!df.slices.empty()) {
      std::vector<ProbSlice> slices;
      for (const auto& s : splitList(df.slices, ';')) {
        const auto parts = splitList(s, ':');
        if (parts.size() != 3) throw Error(ErrorCode::InvalidArgument, "slices are thdw:thup:prob");
        slices.push_back({std::stod(parts[0]), std::stod(parts[1]), std::stod(parts[2])});
      }
      return networkHarmonyGen(cat, slices, metric, c.seed, c.jobs);
    }
    std::vector<OperatorName> names;
    for (const auto& n : splitList(df.names.empty() ? "O(1)" : df.names, ';')) names.push_back(OperatorName::parse(n));
    return networkHarmonyGen(cat, names, metric, c.jobs);
  }
  if (df.space == "rhythmic") {
    const Catalog cat = loadOrBuildCatalog("rhythm", f, c);
    NetworkParams p;
    p.metric = metric;
    p.seed = c.seed;
    p.jobs = c.jobs;
    return rhythmNetwork(cat, p);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown design space '" + df.space + "'");
}

void runDesign(const DesignFlags& df, const CatalogFlags& f, const Common& c) {
  const Graph ref = referenceNetwork(df, f, c);
  const DesignParams p{df.nnodes, df.nedges, df.nstart, c.seed, df.reverse};
  const DesignSequence seq = df.space == "rhythmic" ? rhythmicDesign(ref, p) : harmonicDesign(ref, p);
  writeFile(c, "design.json", seq.toJson() + "\n");
  writeFile(c, "route.json", seq.routeJson() + "\n");
  if (df.midi.empty()) return;
  if (df.space != "harmonic") throw Error(ErrorCode::InvalidArgument, "--midi needs a harmonic design");
  std::vector<PcSet> chords;
  for (const auto& item : seq.items) chords.push_back(PcSet::parse(item, c.tet));
  std::vector<RhythmSeq> rhythms;
  for (const auto& cell : splitList(df.rhythm.empty() ? "[q]" : df.rhythm, ';')) rhythms.push_back(RhythmSeq::parse(cell));
  const ScoreEvents events = scoreDesign(chords, rhythms, parseRational(df.fac));
  writeFile(c, "events.json", events.toJson() + "\n");
  writeMidi(events, outPath(c, df.midi));
}

void runSonify(const SonifyFlags& sf, const Common& c) {
  const DataSeries d = readSeries(sf.input);
  const ScoreEvents events =
      midiMap(d, scaleMap(sf.scale), sf.base, sf.octaves, parseRational(sf.duration), sf.velocity);
  writeFile(c, "events.json", events.toJson() + "\n");
  writeMidi(events, outPath(c, sf.out), {sf.tpq, sf.tempo, 0});
}

void addCatalogFlags(CLI::App* cmd, CatalogFlags& f) {
  cmd->add_option("--nc", f.nc, "Cardinality (pitches or durations per element)");
  cmd->add_option("--order", f.order, "Pcs canonical form: prime, normal, normal0");
  cmd->add_option("--row", f.row, "Restrict pcs to the pitches of this row, e.g. [0,1,4,6]");
  cmd->add_option("--symbols", f.symbols, "Duration symbols for rhythm dictionaries, e.g. q,e,e,s");
  cmd->add_option("--n", f.n, "Total length in reference units (rhythmP)");
  cmd->add_option("--ref", f.ref, "Reference duration for rhythmP");
  cmd->add_option("--catalog", f.catalogPath, "Load the catalog from a CSV file instead of generating it");
  cmd->add_option("--input", f.input, "Chord-sequence JSON or orchestration CSV");
}

nlohmann::json configJson(const std::string& command, const Common& c) {
  return {{"command", command}, {"seed", c.seed}, {"metric", c.metric}, {"out_dir", c.outDir},
          {"jobs", c.jobs},     {"tet", c.tet}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Musical network toolkit: catalogs, networks, designs and sonification"};
  app.require_subcommand(1);
  app.fallthrough();

  Common common;
  app.add_option("--seed", common.seed, "PRNG seed");
  app.add_option("--metric", common.metric, "euclidean, taxicab or chebyshev")
      ->check(CLI::IsMember({"euclidean", "taxicab", "cityblock", "manhattan", "chebyshev"}));
  app.add_option("--out-dir", common.outDir, "Output directory");
  app.add_option("--jobs", common.jobs, "Worker threads for pairwise distances")->check(CLI::PositiveNumber);
  app.add_option("--tet", common.tet, "Pitch classes per octave")->check(CLI::PositiveNumber);

  CatalogFlags catalogFlags;
  std::string dictSpace = "pcs";
  auto* dict = app.add_subcommand("dictionary", "Enumerate a catalog to catalog.csv and zlist.txt");
  dict->add_option("--space", dictSpace, "pcs, rhythm, rhythmP or score")
      ->check(CLI::IsMember({"pcs", "rhythm", "rhythmP", "score"}));
  addCatalogFlags(dict, catalogFlags);

  NetworkFlags nf;
  auto* net = app.add_subcommand("network", "Build a network to nodes.csv, edges.csv and stats.json");
  net->add_option("--space", nf.space, "pcs, vlead, vleadname, rhythm, rlead, score or orch")
      ->check(CLI::IsMember({"pcs", "vlead", "vleadname", "rhythm", "rlead", "score", "orch"}));
  net->add_option("--thup", nf.thup, "Upper distance threshold (exclusive)");
  net->add_option("--thdw", nf.thdw, "Lower distance threshold (exclusive)");
  net->add_option("--prob", nf.prob, "Edge acceptance probability");
  net->add_option("--name", nf.name, "Operator name for vleadname, e.g. O(1)");
  net->add_option("--ego", nf.ego, "Focal row name or element for an ego network");
  net->add_option("--thup-ego", nf.thupEgo, "Upper threshold for ego-alter edges");
  net->add_option("--thdw-ego", nf.thdwEgo, "Lower threshold for ego-alter edges");
  net->add_flag("--distance-ops", nf.distanceOps, "Label score edges with distance operators");
  net->add_option("--start", nf.start, "First chord of a score slice");
  net->add_option("--end", nf.end, "One past the last chord of a score slice");
  addCatalogFlags(net, catalogFlags);

  DesignFlags df;
  auto* des = app.add_subcommand("design", "Map a scale-free scaffold onto a reference network");
  des->add_option("--space", df.space, "harmonic or rhythmic")->check(CLI::IsMember({"harmonic", "rhythmic"}));
  des->add_option("--names", df.names, "Operator names joined by ';' (harmonic, default O(1))");
  des->add_option("--slices", df.slices, "Probabilistic slices thdw:thup:prob joined by ';'");
  des->add_option("--nodes", df.nodesPath, "Reference nodes.csv");
  des->add_option("--edges", df.edgesPath, "Reference edges.csv");
  des->add_option("--nnodes", df.nnodes, "Scaffold node count");
  des->add_option("--nedges", df.nedges, "Edges per arriving scaffold node");
  des->add_option("--nstart", df.nstart, "Rotation of the reference degree ranking");
  des->add_flag("--reverse", df.reverse, "Rank scaffold nodes by ascending degree");
  des->add_option("--rhythm", df.rhythm, "Rhythm cells joined by ';' for the MIDI score, e.g. [q,e,e]");
  des->add_option("--fac", df.fac, "Duration scale factor");
  des->add_option("--midi", df.midi, "Also write a MIDI score with this file name");
  addCatalogFlags(des, catalogFlags);

  SonifyFlags sf;
  auto* son = app.add_subcommand("sonify", "Map a two-column data file onto a scale and write MIDI");
  son->add_option("--input", sf.input, "Data file (x y per line)")->required();
  son->add_option("--scale", sf.scale, "chromatic, major, natural_minor, pentatonic or wholetone");
  son->add_option("--base", sf.base, "Lowest MIDI note");
  son->add_option("--octaves", sf.octaves, "Octave span");
  son->add_option("--duration", sf.duration, "Event duration (whole note = 1)");
  son->add_option("--velocity", sf.velocity, "Note velocity");
  son->add_option("--tpq", sf.tpq, "Ticks per quarter note");
  son->add_option("--tempo", sf.tempo, "Tempo in BPM");
  son->add_option("--out", sf.out, "MIDI file name");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    fs::create_directories(common.outDir);
    nlohmann::json config = configJson(app.get_subcommands().front()->get_name(), common);
    if (dict->parsed()) {
      config["space"] = dictSpace;
      config["nc"] = catalogFlags.nc ? nlohmann::json(*catalogFlags.nc) : nlohmann::json(nullptr);
      std::cerr << config.dump() << "\n";
      runDictionary(dictSpace, catalogFlags, common);
    } else if (net->parsed()) {
      config["space"] = nf.space;
      config["thup"] = nf.thup;
      config["thdw"] = nf.thdw;
      config["prob"] = nf.prob;
      std::cerr << config.dump() << "\n";
      runNetwork(nf, catalogFlags, common);
    } else if (des->parsed()) {
      config["space"] = df.space;
      config["nnodes"] = df.nnodes;
      config["nedges"] = df.nedges;
      config["nstart"] = df.nstart;
      config["reverse"] = df.reverse;
      std::cerr << config.dump() << "\n";
      runDesign(df, catalogFlags, common);
    } else if (son->parsed()) {
      config["input"] = sf.input;
      config["scale"] = sf.scale;
      std::cerr << config.dump() << "\n";
      runSonify(sf, common);
    }
  } catch (const Error& e) {
    std::cerr << "musnet: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "musnet: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
