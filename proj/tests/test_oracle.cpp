#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <set>

#include "divcalc/divcalc.hpp"
#include "oracle.hpp"

using namespace divcalc;

namespace {

const std::string kGoldenDir = std::string(DIVCALC_SOURCE_DIR) + "/tests/golden";

std::vector<oracle::Survivor> production(const SurfaceKind& s, const Coords& C, Int k, Coords* box = nullptr) {
  auto r = enumerate_bogreider(s, DivClass(s.model, C), k);
  if (box) *box = r.box;
  std::vector<oracle::Survivor> out;
  for (const auto& d : r.survivors) out.push_back({d.L.coords(), d.z});
  std::sort(out.begin(), out.end());
  return out;
}

/// Twice the production box plus a margin, shrunk to box + 2 when that would
/// exceed a few million points.
oracle::Vec oracle_bound(const Coords& box) {
  oracle::Vec wide, narrow;
  double volume = 1;
  for (Int b : box) {
    wide.push_back(2 * b + 2);
    narrow.push_back(b + 2);
    volume *= static_cast<double>(4 * b + 5);
  }
  return volume <= 5e6 ? wide : narrow;
}

std::string show(const std::vector<oracle::Survivor>& v) {
  std::string s;
  for (const auto& x : v) {
    s += "(";
    for (std::size_t i = 0; i < x.L.size(); ++i) s += (i ? "," : "") + std::to_string(x.L[i]);
    s += ") z=" + std::to_string(x.z) + "; ";
  }
  return s;
}

struct GoldenCase {
  std::string id;
  std::string hand_check;
};

const std::vector<GoldenCase>& golden_cases() {
  static const std::vector<GoldenCase> cases = {
      {"g1kondelp-c",
       "C = 6H-2G1-2G2, k = 6. L = H: L^2 = 1, L.C = 6, M.L = 5, z = 1, deg D = 0. "
       "L = 2H-G1-G2: L^2 = 2, L.C = 8, M.L = 6, z = 0, deg D = 2."},
      {"g1kondelp-e",
       "C = 6H-2G1-2G2-2G3, k = 5. L = H and L = 2H-G1-G2-G3 both have L^2 = 1, L.C = 6, "
       "M.L = 5, z = 0, deg D = 1."},
      {"g1kondelp-f",
       "C = 6H-2G1-2G2-2G3, k = 6. H and 2H-G1-G2-G3: M.L = 5, z = 1, deg D = 0. "
       "2H-Gi-Gj: L^2 = 2, L.C = 8, M.L = 6, z = 0, deg D = 2. "
       "3H-G1-G2-G3: L^2 = 6, L.C = 12, M.L = 6, z = 0, deg D = 6."},
      {"g1kondelp-i", "C = 4C0+8f = 4(C0+2f), k = 6. L = C0+2f: L^2 = 2, L.C = 8, M.L = 6, z = 0, deg D = 2."},
  };
  return cases;
}

Json golden_json(const GoldenCase& g, const CaseFixture& f, const oracle::Vec& bound,
                 const std::vector<oracle::Survivor>& found) {
  Json j;
  j["case"] = g.id;
  j["surface"] = f.surface;
  j["C"] = f.C;
  j["k"] = f.k;
  j["oracle_bound"] = bound;
  j["hand_check"] = g.hand_check;
  Json rows = Json::array();
  for (const auto& s : found) rows.push_back({{"L", s.L}, {"z", s.z}});
  j["survivors"] = rows;
  return j;
}

}  // namespace

TEST(Oracle, FixturesAgreeWithBruteForce) {
  for (const auto& f : fixture_catalog()) {
    if (f.kind != "bogreider") continue;
    auto s = builtin_surface(f.surface);
    Coords box;
    auto got = production(s, f.C, f.k, &box);
    auto want = oracle::scan(oracle::by_name(f.surface), f.C, f.k, oracle_bound(box));
    EXPECT_EQ(got, want) << f.id << "\n production: " << show(got) << "\n oracle: " << show(want);
  }
}

TEST(Oracle, SweepOverSurfacesAndDegrees) {
  struct Job {
    std::string surface;
    Coords C;
  };
  std::vector<Job> jobs;
  for (int n = 1; n <= 4; ++n) {
    auto s = make_sigma(n);
    jobs.push_back({s.name, (s.canonical() * -2).coords()});
  }
  jobs.push_back({"sigma2", {5, -1, -2}});
  jobs.push_back({"sigma3", {4, -1, -1, -1}});
  jobs.push_back({"blq", {4, 8}});
  jobs.push_back({"blq", {2, 5}});
  for (int n = 2; n <= 6; ++n) jobs.push_back({"blc" + std::to_string(n), {2, 2 * n}});
  int compared = 0;
  for (const auto& job : jobs) {
    auto s = builtin_surface(job.surface);
    DivClass C(s.model, job.C);
    const Int c2 = self(C);
    for (Int k = 2; 4 * k <= c2 + 8; ++k) {
      Coords box;
      auto got = production(s, job.C, k, &box);
      auto want = oracle::scan(oracle::by_name(job.surface), job.C, k, oracle_bound(box));
      EXPECT_EQ(got, want) << job.surface << " " << render(C) << " k=" << k;
      ++compared;
    }
  }
  EXPECT_GT(compared, 30);
}

TEST(Oracle, GoldenFiles) {
  const bool update = std::getenv("DIVCALC_UPDATE_GOLDEN") != nullptr;
  for (const auto& g : golden_cases()) {
    const CaseFixture& f = find_fixture(g.id);
    auto s = builtin_surface(f.surface);
    Coords box;
    auto got = production(s, f.C, f.k, &box);
    const auto bound = oracle_bound(box);
    auto found = oracle::scan(oracle::by_name(f.surface), f.C, f.k, bound);
    const std::string path = kGoldenDir + "/" + g.id + ".json";
    if (update) {
      std::ofstream(path) << golden_json(g, f, bound, found).dump(2) << "\n";
    }
    Json stored = io::read_json_file(path);
    ASSERT_FALSE(stored.at("hand_check").get<std::string>().empty());
    std::vector<oracle::Survivor> golden;
    for (const auto& row : stored.at("survivors")) golden.push_back({row.at("L").get<oracle::Vec>(), row.at("z")});
    std::sort(golden.begin(), golden.end());
    EXPECT_EQ(found, golden) << g.id << ": oracle drifted from the stored file";
    EXPECT_EQ(got, golden) << g.id;
    std::vector<oracle::Survivor> expected;
    for (const auto& e : f.expected) expected.push_back({e.L, e.z});
    std::sort(expected.begin(), expected.end());
    EXPECT_EQ(expected, golden) << g.id;
  }
}

TEST(Oracle, DestabAgreesWithBruteForce) {
  for (Int grid : {8, 16, 24}) {
    auto r = enumerate_destab(grid);
    auto want = oracle::destab_scan(grid);
    ASSERT_EQ(r.survivors.size(), want.size()) << grid;
    for (std::size_t i = 0; i < want.size(); ++i) {
      EXPECT_EQ(r.survivors[i].a, want[i].a);
      EXPECT_EQ(r.survivors[i].a1, want[i].a1);
      EXPECT_EQ(r.survivors[i].lenW, want[i].lenW);
    }
  }
}

TEST(Oracle, GonalityAgreesWithTheCaseTable) {
  for (Int phi = 1; phi <= 9; ++phi)
    for (Int l2 = 2; l2 <= 100; l2 += 2) {
      if (phi * phi > l2) continue;
      EXPECT_EQ(gonality(l2, phi), oracle::gonality(l2, phi)) << l2 << " " << phi;
    }
}
