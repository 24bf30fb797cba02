#pragma once

// Catalog of worked cases with their expected numeric outcomes, and a driver
// that recomputes each one and compares.

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "divcalc/enumeration.hpp"

namespace divcalc {

struct ExpectedSurvivor {
  Coords L;
  Int z;
};

struct KilledSurvivor {
  Coords L;
  std::string reason;
};

struct CaseFixture {
  std::string id;
  std::string kind;  // "bogreider", "destab", "identities", "quasinef"
  std::string title;
  std::string surface;
  Coords C;
  Int k = 0;
  std::vector<ExpectedSurvivor> expected;
  std::vector<KilledSurvivor> killed;
  std::vector<std::string> annotations;
};

struct SurvivorRow {
  std::string L;
  Coords coords;
  Int z = 0;
  Int ML = 0;
  Int L2 = 0;
  Int deg_D = 0;
};

struct KillRow {
  std::string L;
  std::string reason;
};

struct CheckRow {
  std::string what;
  Int expected;
  Int actual;
  bool ok() const { return expected == actual; }
};

struct CaseReport {
  std::string id;
  std::string kind;
  std::string surface;
  bool pass = false;
  std::vector<SurvivorRow> survivors;
  std::vector<KillRow> killed;
  std::vector<SurvivorRow> net;  // survivors not killed by a geometric argument
  std::vector<DestabCandidate> destab;
  std::vector<std::string> annotations;
  std::vector<CheckRow> checks;
  std::vector<std::pair<std::string, Int>> trace;
  std::vector<std::string> diffs;
};

inline const std::vector<CaseFixture>& fixture_catalog() {
  static const std::vector<CaseFixture> catalog = [] {
    const std::string h0 = "h0(A) = 3 contradiction: A would be the restriction of a net";
    std::vector<CaseFixture> c;
    c.push_back({"g1kondelp-a", "bogreider", "sigma1, C = -2K, no complete base-point free g1_6", "sigma1",
                 {6, -2}, 6, {{{1, 0}, 1}}, {{{1, 0}, h0}}, {}});
    c.push_back({"g1kondelp-b", "bogreider", "sigma2, C = -2K, g1_4 = (H - Gi)|C", "sigma2",
                 {6, -2, -2}, 4, {{{1, -1, 0}, 0}, {{1, 0, -1}, 0}}, {}, {}});
    c.push_back({"g1kondelp-c", "bogreider", "sigma2, C = -2K, g1_6 = (2H - G1 - G2)|C - P1 - P2", "sigma2",
                 {6, -2, -2}, 6, {{{1, 0, 0}, 1}, {{2, -1, -1}, 0}}, {{{1, 0, 0}, h0}},
                 {"2H-G1-G2: deg D = 2, A is L|C minus two points"}});
    c.push_back({"g1kondelp-d", "bogreider", "sigma3, C = -2K, g1_4 = (H - Gi)|C", "sigma3",
                 {6, -2, -2, -2}, 4, {{{1, -1, 0, 0}, 0}, {{1, 0, -1, 0}, 0}, {{1, 0, 0, -1}, 0}}, {}, {}});
    c.push_back({"g1kondelp-e", "bogreider", "sigma3, C = -2K, g1_5 = H|C - P or (2H - G1 - G2 - G3)|C - P",
                 "sigma3", {6, -2, -2, -2}, 5, {{{1, 0, 0, 0}, 0}, {{2, -1, -1, -1}, 0}}, {},
                 {"deg D = 1 for both survivors: A is L|C minus one point"}});
    c.push_back({"g1kondelp-f", "bogreider", "sigma3, C = -2K, g1_6", "sigma3", {6, -2, -2, -2}, 6,
                 {{{1, 0, 0, 0}, 1},
                  {{2, -1, -1, -1}, 1},
                  {{2, -1, -1, 0}, 0},
                  {{2, -1, 0, -1}, 0},
                  {{2, 0, -1, -1}, 0},
                  {{3, -1, -1, -1}, 0}},
                 {{{1, 0, 0, 0}, h0}, {{2, -1, -1, -1}, h0}},
                 {"2H-Gi-Gj: deg D = 2, A is L|C minus two points",
                  "3H-G1-G2-G3 = -K with C = 2L: the residual (-K)|C - A is another base-point free g1_6"}});
    c.push_back({"g1kondelp-g", "bogreider", "blc6, C = 2C0 + 12f, g1_4 = (f1 + f2)|C", "blc6", {2, 12}, 4,
                 {{{0, 2}, 0}}, {}, {"mod4 disabled: C is -2K - 2C0, not -2K"}});
    c.push_back({"g1kondelp-g5", "bogreider", "blc6, C = 2C0 + 12f, no g1_5", "blc6", {2, 12}, 5, {}, {}, {}});
    c.push_back({"g1kondelp-h", "bogreider", "blq, C = -2K, unique g1_4 = f|C", "blq", {4, 8}, 4,
                 {{{0, 1}, 0}, {{1, 1}, 0}}, {}, {"f and C0+f both restrict to f|C since C0.C = 0"}});
    c.push_back({"g1kondelp-i", "bogreider", "blq, C = -2K, g1_6 = H|C - P1 - P2", "blq", {4, 8}, 6,
                 {{{1, 2}, 0}}, {}, {"C0+2f = H with C = 4L: deg D = 2"}});
    {
      CaseFixture j{"g1kondelp-j", "destab", "blq, destabilizing A + B = 4C0 + 7f with c2 = 4", "blq", {4, 7}, 4,
                    {{{3, 6}, 0}, {{3, 7}, 0}, {{4, 6}, 0}}, {}, {}};
      j.killed = {{{3, 6}, "B = C0 + F forces Z = F.C, so f|C + Z = 2f|C is a g3_8"},
                  {{3, 7}, "B = C0 forces Z in C0 n C = empty"},
                  {{4, 6}, "B = F forces Z = F.C, so f|C + Z = 2f|C is a g3_8"}};
      c.push_back(std::move(j));
    }
    c.push_back({"lemmag7", "identities", "genus 7: L = 3E + 2E1 (E.E1 = 1) or L = 3E + E1 (E.E1 = 2)",
                 "config", {}, 0, {}, {}, {}});
    c.push_back({"lemmag8", "identities", "genus 8: L = 3E + E1 + E2, all products 1", "config", {}, 0, {}, {},
                 {"either (E+E1)|C or (E+E1+K_S)|C is a complete base-point free g1_6",
                  "(2E+E2)|C and (2E+E2+K_S)|C are complete base-point free g2_8"}});
    c.push_back({"lemmag8-qnef", "quasinef", "2E + E2 with E2 = E1 + Gamma is quasi-nef", "config", {}, 0, {}, {},
                 {}});
    c.push_back({"lemmag9", "identities", "genus 9: L = 4E + E1 (E.E1 = 2), branch E1 = 2E2", "config", {}, 0,
                 {}, {}, {}});
    c.push_back({"lemmag9-qnef", "quasinef", "E1 = 2E + 2Delta is not quasi-nef", "config", {}, 0, {}, {}, {}});
    return c;
  }();
  return catalog;
}

inline const CaseFixture& find_fixture(const std::string& id) {
  for (const auto& f : fixture_catalog())
    if (f.id == id) return f;
  throw NotFound("unknown case id '" + id + "'");
}

namespace detail {

inline std::string coords_str(const Coords& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
  return s + ")";
}

inline void check(CaseReport& r, const std::string& what, Int expected, Int actual) {
  r.checks.push_back({what, expected, actual});
}

inline void verify_bogreider(const CaseFixture& f, CaseReport& r) {
  const SurfaceKind s = builtin_surface(f.surface);
  const DivClass C(s.model, f.C);
  const auto res = enumerate_bogreider(s, C, f.k);
  auto killed_reason = [&](const Coords& x) -> const std::string* {
    for (const auto& k : f.killed)
      if (k.L == x) return &k.reason;
    return nullptr;
  };
  std::set<std::pair<Coords, Int>> got, want;
  for (const auto& d : res.survivors) {
    SurvivorRow row{render(d.L), d.L.coords(), d.z, d.ML, d.L2, d.deg_D};
    got.insert({row.coords, row.z});
    if (const auto* why = killed_reason(row.coords))
      r.killed.push_back({row.L, *why});
    else
      r.net.push_back(row);
    r.survivors.push_back(std::move(row));
  }
  for (const auto& e : f.expected) want.insert({e.L, e.z});
  for (const auto& g : got)
    if (!want.count(g)) r.diffs.push_back("unexpected survivor " + coords_str(g.first) + " z=" + std::to_string(g.second));
  for (const auto& w : want)
    if (!got.count(w)) {
      std::string why = "not in search box";
      for (const auto& rej : res.rejected)
        if (rej.L == w.first) why = "rejected by " + rej.filter;
      r.diffs.push_back("missing survivor " + coords_str(w.first) + " z=" + std::to_string(w.second) + " (" + why + ")");
    }
  for (const char* n : bogreider_filters()) r.trace.emplace_back(n, res.rejected_by.at(n));
  r.annotations = f.annotations;
  for (const auto& n : res.notes) r.annotations.push_back(n);
  r.pass = r.diffs.empty();
}

inline void verify_destab(const CaseFixture& f, CaseReport& r) {
  const auto res = enumerate_destab();
  std::set<Coords> got, want;
  for (const auto& c : res.survivors) {
    SurvivorRow row{std::to_string(c.a) + "C0+" + std::to_string(c.a1) + "f", {c.a, c.a1}, 0, 0, c.A2, 0};
    got.insert(row.coords);
    r.survivors.push_back(row);
    r.destab.push_back(c);
    check(r, "A.B + lenW at " + coords_str(row.coords), 4, c.AB + c.lenW);
    check(r, "(A-B)^2 - 4 lenW at " + coords_str(row.coords), 8, c.A2 + c.B2 - 2 * c.AB - 4 * c.lenW);
  }
  for (const auto& k : f.killed) r.killed.push_back({coords_str(k.L), k.reason});
  for (const auto& e : f.expected) want.insert(e.L);
  for (const auto& g : got)
    if (!want.count(g)) r.diffs.push_back("unexpected candidate " + coords_str(g));
  for (const auto& w : want)
    if (!got.count(w)) r.diffs.push_back("missing candidate " + coords_str(w));
  for (const char* n : destab_filters()) r.trace.emplace_back(n, res.rejected_by.at(n));
  r.pass = r.diffs.empty() && std::all_of(r.checks.begin(), r.checks.end(), [](const CheckRow& c) { return c.ok(); });
}

inline Int phi_value(const SurfaceKind& s, const DivClass& L) { return phi(s, L, PhiSublattice{}).value; }

inline void verify_identities(const CaseFixture& f, CaseReport& r) {
  if (f.id == "lemmag7") {
    const SurfaceKind s1 = IsotropicConfig::from_pairs({"E", "E1"}, {{0, 1, 1}}).surface("lemmag7-i");
    const DivClass E = s1.lookup("E"), E1 = s1.lookup("E1");
    const DivClass L = 3 * E + 2 * E1;
    check(r, "(i) L^2", 12, self(L));
    check(r, "(i) E.L", 2, pair(E, L));
    check(r, "(i) phi(L)", 2, phi_value(s1, L));
    check(r, "(i) phi(L-2E)", 1, phi_value(s1, L - 2 * E));
    const SurfaceKind s2 = IsotropicConfig::from_pairs({"E", "E1"}, {{0, 1, 2}}).surface("lemmag7-ii");
    const DivClass F = s2.lookup("E"), F1 = s2.lookup("E1");
    const DivClass L2 = 3 * F + F1;
    check(r, "(ii) L^2", 12, self(L2));
    check(r, "(ii) E.L", 2, pair(F, L2));
    check(r, "(ii) phi(L)", 2, phi_value(s2, L2));
    check(r, "(ii) phi(L-2E)", 2, phi_value(s2, L2 - 2 * F));
    check(r, "genus", 7, genus(s1, L));
  } else if (f.id == "lemmag8") {
    const SurfaceKind s =
        IsotropicConfig::from_pairs({"E", "E1", "E2"}, {{0, 1, 1}, {0, 2, 1}, {1, 2, 1}}).surface("lemmag8");
    const DivClass E = s.lookup("E"), E1 = s.lookup("E1"), E2 = s.lookup("E2");
    const DivClass L = 3 * E + E1 + E2;
    check(r, "L^2", 14, self(L));
    check(r, "E.L", 2, pair(E, L));
    check(r, "(E+E1).L", 6, pair(E + E1, L));
    check(r, "(2E+E2).L", 8, pair(2 * E + E2, L));
    check(r, "(E+E1)^2", 2, self(E + E1));
    check(r, "(2E+E2)^2", 4, self(2 * E + E2));
    check(r, "phi(L)", 2, phi_value(s, L));
    check(r, "genus", 8, genus(s, L));
  } else if (f.id == "lemmag9") {
    const SurfaceKind s = IsotropicConfig::from_pairs({"E", "E1"}, {{0, 1, 2}}).surface("lemmag9");
    const DivClass E = s.lookup("E"), E1 = s.lookup("E1");
    const DivClass L = 4 * E + E1;
    check(r, "L^2", 16, self(L));
    check(r, "E.L", 2, pair(E, L));
    check(r, "phi(L)", 2, phi_value(s, L));
    check(r, "genus", 9, genus(s, L));
    const SurfaceKind t = IsotropicConfig::from_pairs({"E", "E2"}, {{0, 1, 1}}).surface("lemmag9-branch");
    const DivClass G = t.lookup("E"), G2 = t.lookup("E2");
    const DivClass Lb = 4 * G + 2 * G2;
    check(r, "branch E1 = 2E2: L^2", 16, self(Lb));
    check(r, "branch E1 = 2E2: E.L", 2, pair(G, Lb));
    check(r, "branch (2E+E2)^2", 4, self(2 * G + G2));
    check(r, "branch (2E+E2).L", 8, pair(2 * G + G2, Lb));
  }
  r.annotations = f.annotations;
  for (const auto& c : r.checks)
    if (!c.ok())
      r.diffs.push_back(c.what + ": expected " + std::to_string(c.expected) + ", got " + std::to_string(c.actual));
  r.pass = r.diffs.empty();
}

inline void verify_quasinef(const CaseFixture& f, CaseReport& r) {
  if (f.id == "lemmag8-qnef") {
    auto m = make_model("lemmag8-qnef", {"E", "E1", "Gamma"}, {{0, 1, 0}, {1, 0, 1}, {0, 1, -2}}, {}, {2, 2, 1}, 1,
                        {true, true, false});
    const SurfaceKind s = custom_surface(m, SurfaceTag::Enriques);
    const DivClass E = s.lookup("E"), E1 = s.lookup("E1"), G = s.lookup("Gamma");
    const DivClass E2 = E1 + G;
    check(r, "E2^2", 0, self(E2));
    check(r, "E.E2", 1, pair(E, E2));
    check(r, "E1.E2", 1, pair(E1, E2));
    check(r, "E2.Gamma", -1, pair(E2, G));
    auto v = quasi_nef_test(s, 2 * E + E2, {G});
    check(r, "verdict is quasi_nef", 1, v.outcome == NefOutcome::QuasiNef ? 1 : 0);
    check(r, "witness pairing", -1, v.witness_pairing);
    r.annotations.push_back(std::string("verdict: ") + to_string(v.outcome) + ", " + v.h1_note);
  } else {
    auto m = make_model("lemmag9-qnef", {"E", "Delta"}, {{0, 1}, {1, -2}}, {}, {3, 1}, 1, {true, false});
    const SurfaceKind s = custom_surface(m, SurfaceTag::Enriques);
    const DivClass E = s.lookup("E"), D = s.lookup("Delta");
    const DivClass E1 = 2 * E + 2 * D;
    check(r, "E1^2", 0, self(E1));
    check(r, "E.E1", 2, pair(E, E1));
    auto v = quasi_nef_test(s, E1, {D});
    check(r, "verdict is violated", 1, v.outcome == NefOutcome::Violated ? 1 : 0);
    check(r, "witness pairing", -2, v.witness_pairing);
    check(r, "(2E+Delta)^2", 2, self(2 * E + D));
    r.annotations.push_back(std::string("verdict: ") + to_string(v.outcome));
  }
  for (const auto& c : r.checks)
    if (!c.ok())
      r.diffs.push_back(c.what + ": expected " + std::to_string(c.expected) + ", got " + std::to_string(c.actual));
  r.pass = r.diffs.empty();
}

}  // namespace detail

inline CaseReport verify_case(const std::string& id) {
  const CaseFixture& f = find_fixture(id);
  CaseReport r;
  r.id = f.id;
  r.kind = f.kind;
  r.surface = f.surface;
  if (f.kind == "bogreider")
    detail::verify_bogreider(f, r);
  else if (f.kind == "destab")
    detail::verify_destab(f, r);
  else if (f.kind == "identities")
    detail::verify_identities(f, r);
  else
    detail::verify_quasinef(f, r);
  return r;
}

inline std::vector<CaseReport> verify_all() {
  std::vector<CaseReport> out;
  for (const auto& f : fixture_catalog()) out.push_back(verify_case(f.id));
  return out;
}

}  // namespace divcalc
