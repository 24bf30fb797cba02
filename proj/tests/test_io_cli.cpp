#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "divcalc/cli.hpp"
#include "divcalc/divcalc.hpp"

using namespace divcalc;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  CliRun r = run(args);
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

fs::path scratch_dir(const std::string& name) {
  fs::path p = fs::temp_directory_path() / ("divcalc-test-" + name);
  fs::create_directories(p);
  return p;
}

void write_file(const fs::path& p, const std::string& text) { std::ofstream(p) << text; }

}  // namespace

TEST(Io, LatticeRoundTrip) {
  for (const auto& name : builtin_surface_names()) {
    auto s = builtin_surface(name);
    Json j = io::lattice_to_json(*s.model);
    auto back = io::lattice_from_json(j);
    EXPECT_EQ(back.model->basis(), s.model->basis()) << name;
    EXPECT_EQ(back.model->gram(), s.model->gram()) << name;
    EXPECT_EQ(back.model->canonical(), s.model->canonical()) << name;
    EXPECT_EQ(back.model->effective(), s.model->effective()) << name;
    EXPECT_EQ(back.model->chi(), s.model->chi()) << name;
  }
}

TEST(Io, LatticeErrors) {
  Json j = io::lattice_to_json(*make_sigma(1).model);
  Json missing = j;
  missing.erase("gram");
  EXPECT_THROW(io::lattice_from_json(missing), ParseError);
  Json kind = j;
  kind["kind"] = "k3";
  EXPECT_THROW(io::lattice_from_json(kind), ParseError);
  Json eff = j;
  eff["effective"] = {"Z"};
  EXPECT_THROW(io::lattice_from_json(eff), ParseError);
  Json type = j;
  type["chi"] = "one";
  EXPECT_THROW(io::lattice_from_json(type), ParseError);
  Json asym = j;
  asym["gram"][0][1] = 1;
  EXPECT_THROW(io::lattice_from_json(asym), PreconditionError);
}

TEST(Io, ConfigFiles) {
  Json c = Json::parse(R"({"name": "g8", "labels": ["E", "E1", "E2"], "pairs": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]})");
  auto s = io::surface_from_json(c, "inline");
  EXPECT_EQ(s.name, "g8");
  EXPECT_EQ(s.tag, SurfaceTag::Enriques);
  EXPECT_EQ(self(parse_class("3E+E1+E2", s)), 14);
  Json bad = Json::parse(R"({"labels": ["E", "E1"], "pairs": [[0, 1]]})");
  EXPECT_THROW(io::surface_from_json(bad, "inline"), ParseError);
  EXPECT_THROW(io::read_json_file("/nonexistent/file.json"), NotFound);
}

TEST(Io, SurfaceSearchPath) {
  fs::path dir = scratch_dir("path");
  write_file(dir / "cone.json", R"({"name": "cone", "basis": ["E", "Delta"], "gram": [[0, 1], [1, -2]],
                                   "ample_ref": [3, 1], "chi": 1, "effective": ["E"], "kind": "enriques"})");
  write_file(dir / "broken.json", "{ not json");
  setenv("DIVCALC_SURFACE_PATH", ("/nonexistent::" + dir.string()).c_str(), 1);
  auto s = io::find_surface("cone");
  EXPECT_EQ(s.tag, SurfaceTag::Enriques);
  EXPECT_EQ(self(parse_class("E+Delta", s)), 0);
  EXPECT_EQ(io::find_surface("sigma4").n, 4);
  EXPECT_THROW(io::find_surface("nowhere"), NotFound);
  EXPECT_THROW(io::find_surface("broken"), ParseError);
  unsetenv("DIVCALC_SURFACE_PATH");
  EXPECT_THROW(io::find_surface("cone"), NotFound);
}

TEST(Io, ReportFieldOrder) {
  Json j = run_json({"pair", "H", "G1", "--surface", "sigma2"});
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"command", "surface", "result", "elapsed_ms", "version"}));
  EXPECT_EQ(j["command"], "pair");
  EXPECT_EQ(j["surface"], "sigma2");
  EXPECT_EQ(j["result"]["pairing"], 0);
  EXPECT_TRUE(j["elapsed_ms"].is_number_integer());
  EXPECT_EQ(j["version"], kVersion);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"gaussian", "--l2", "12", "--h0-residual", "1"}).code, 0);
  EXPECT_EQ(run({"gaussian", "--l2", "10", "--h0-residual", "1"}).code, 0);
  EXPECT_EQ(run({"gaussian", "--l2", "10", "--h0-residual", "1", "--strict"}).code, 2);
  EXPECT_EQ(run({"--strict", "gaussian", "--l2", "12", "--h0-residual", "1"}).code, 0);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
  CliRun bad = run({"pair", "H", "G1+Q", "--surface", "sigma2"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.err.find("divcalc: error:"), std::string::npos);
  EXPECT_NE(bad.err.find("position 2"), std::string::npos);
  EXPECT_EQ(run({"gonality", "--l2", "8", "--phi", "3"}).code, 1);
  EXPECT_EQ(run({"verify"}).code, 1);
}

TEST(Cli, HumanOutput) {
  CliRun v = run({"verify", "--case", "g1kondelp-d"});
  EXPECT_EQ(v.code, 0);
  EXPECT_EQ(v.out, "PASS g1kondelp-d\n");
  CliRun s = run({"self", "-2K", "--surface", "sigma3"});
  EXPECT_EQ(s.out, "(6H-2G1-2G2-2G3)^2 = 24\n");
  CliRun g = run({"gaussian", "--l2", "12", "--h0-residual", "1"});
  EXPECT_EQ(g.out.rfind("SURJECTIVE via (iv)", 0), 0u);
  CliRun all = run({"verify", "--all"});
  EXPECT_NE(all.out.find(std::to_string(fixture_catalog().size()) + "/" +
                         std::to_string(fixture_catalog().size()) + " passed"),
            std::string::npos);
}

TEST(Cli, JsonResults) {
  Json g = run_json({"gonality", "--l2", "30", "--phi", "5"});
  EXPECT_EQ(g["result"]["gonality"], 9);
  EXPECT_EQ(g["result"]["case"], "listed");

  Json e = run_json({"enumerate", "--surface", "sigma2", "--k", "4"});
  EXPECT_EQ(e["result"]["survivors"].size(), 2u);
  EXPECT_EQ(e["result"]["mod4_applied"], true);

  Json d = run_json({"destab"});
  EXPECT_EQ(d["result"]["survivors"].size(), 3u);

  Json r = run_json({"reflect", "E+E1+R1", "R1"});
  EXPECT_EQ(r["surface"], "enriques");

  Json sc = run_json({"scroll", "--g", "9", "--b1", "3"});
  EXPECT_EQ(sc["result"]["g"], 9);

  Json v = run_json({"verify", "--all"});
  EXPECT_EQ(v["result"]["failed"], 0);
  EXPECT_EQ(v["result"]["passed"], static_cast<Int>(fixture_catalog().size()));
}

TEST(Cli, ConfigFileOption) {
  fs::path dir = scratch_dir("config");
  write_file(dir / "g8.json", R"({"labels": ["E", "E1", "E2"], "pairs": [[0, 1, 1], [0, 2, 1], [1, 2, 1]]})");
  Json j = run_json({"phi", "3E+E1+E2", "--config", (dir / "g8.json").string()});
  EXPECT_EQ(j["result"]["phi"], 2);
  EXPECT_EQ(j["result"]["certified"], true);
}
