#pragma once

// JSON file formats and report serialization.

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "divcalc/divexpr.hpp"
#include "divcalc/fixtures.hpp"
#include "divcalc/gaussian.hpp"

namespace divcalc {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

namespace io {

inline Json read_json_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw NotFound("cannot open '" + path + "'");
  try {
    return Json::parse(f);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
}

template <class T>
T field(const Json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ParseError(where + ": missing field '" + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception& e) {
    throw ParseError(where + ": field '" + key + "' has the wrong type");
  }
}

/// {"name", "basis", "gram", "canonical", "ample_ref", "chi"} plus optional
/// "effective" (list of labels) and "kind" ("enriques" or "custom").
inline SurfaceKind lattice_from_json(const Json& j, const std::string& where = "lattice") {
  auto name = field<std::string>(j, "name", where);
  auto basis = field<std::vector<std::string>>(j, "basis", where);
  auto gram = field<Matrix>(j, "gram", where);
  auto canonical = j.contains("canonical") ? field<Coords>(j, "canonical", where) : Coords(basis.size(), 0);
  auto ample = field<Coords>(j, "ample_ref", where);
  auto chi = field<Int>(j, "chi", where);
  std::vector<bool> eff(basis.size(), false);
  if (j.contains("effective")) {
    for (const auto& l : field<std::vector<std::string>>(j, "effective", where)) {
      auto it = std::find(basis.begin(), basis.end(), l);
      if (it == basis.end()) throw ParseError(where + ": effective label '" + l + "' is not a basis label");
      eff[static_cast<std::size_t>(it - basis.begin())] = true;
    }
  }
  std::string kind = j.contains("kind") ? field<std::string>(j, "kind", where) : "custom";
  if (kind != "enriques" && kind != "custom") throw ParseError(where + ": kind must be 'enriques' or 'custom'");
  auto model = make_model(name, basis, gram, canonical, ample, chi, eff);
  return custom_surface(model, kind == "enriques" ? SurfaceTag::Enriques : SurfaceTag::Custom);
}

inline Json lattice_to_json(const LatticeModel& m) {
  Json j;
  j["name"] = m.name();
  j["basis"] = m.basis();
  j["gram"] = m.gram();
  j["canonical"] = m.canonical();
  j["ample_ref"] = m.ample_ref();
  j["chi"] = m.chi();
  Json eff = Json::array();
  for (std::size_t i = 0; i < m.rank(); ++i)
    if (m.effective()[i]) eff.push_back(m.basis()[i]);
  j["effective"] = eff;
  return j;
}

/// {"labels": [...], "pairs": [[i, j, v], ...]}
inline IsotropicConfig config_from_json(const Json& j, const std::string& where = "config") {
  auto labels = field<std::vector<std::string>>(j, "labels", where);
  std::vector<std::tuple<std::size_t, std::size_t, Int>> pairs;
  if (j.contains("pairs")) {
    for (const auto& p : j.at("pairs")) {
      if (!p.is_array() || p.size() != 3) throw ParseError(where + ": each pair must be [i, j, value]");
      pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>(), p[2].get<Int>());
    }
  }
  return IsotropicConfig::from_pairs(labels, pairs);
}

inline SurfaceKind surface_from_json(const Json& j, const std::string& where) {
  if (j.contains("labels") && !j.contains("gram")) {
    std::string name = j.contains("name") ? j.at("name").get<std::string>() : "enriques-config";
    return config_from_json(j, where).surface(name);
  }
  return lattice_from_json(j, where);
}

inline SurfaceKind load_surface_file(const std::string& path) { return surface_from_json(read_json_file(path), path); }

/// Built-in name, or <name>.json in a directory of DIVCALC_SURFACE_PATH.
inline SurfaceKind find_surface(const std::string& name) {
  try {
    return builtin_surface(name);
  } catch (const NotFound&) {
  }
  if (const char* env = std::getenv("DIVCALC_SURFACE_PATH")) {
    std::stringstream ss(env);
    std::string dir;
    while (std::getline(ss, dir, ':')) {
      if (dir.empty()) continue;
      std::string path = dir + "/" + name + ".json";
      if (std::ifstream(path)) return load_surface_file(path);
    }
  }
  throw NotFound("unknown surface '" + name + "' (not built in, not on DIVCALC_SURFACE_PATH)");
}

// ---------------------------------------------------------------------------
// Serialization

inline Json to_json(const DivClass& d) {
  Json j;
  j["class"] = render(d);
  j["coords"] = d.coords();
  if (d.torsion_twist()) j["torsion_twist"] = true;
  return j;
}

inline Json surface_to_json(const SurfaceKind& s) {
  Json j;
  j["name"] = s.name;
  j["tag"] = to_string(s.tag);
  if (s.n) j["n"] = s.n;
  j["lattice"] = lattice_to_json(*s.model);
  Signature sig = signature(*s.model);
  j["signature"] = {sig.positive, sig.negative, sig.zero};
  Json special = Json::object();
  for (const auto& [k, v] : s.special) special[k] = to_json(v);
  j["special"] = special;
  Json tests = Json::array();
  for (const auto& t : s.sign_tests) tests.push_back(render(t));
  j["sign_tests"] = tests;
  j["linear_equals_numerical"] = s.linear_equals_numerical;
  j["invariant_problems"] = check_invariants(*s.model);
  return j;
}

inline Json to_json(const Decomposition& d) {
  Json j;
  j["L"] = render(d.L);
  j["L_coords"] = d.L.coords();
  j["M"] = render(d.M);
  j["z"] = d.z;
  j["ML"] = d.ML;
  j["L2"] = d.L2;
  j["deg_D"] = d.deg_D;
  Json t = Json::array();
  for (const auto& [f, o] : d.filter_trace) t.push_back({f, o});
  j["filter_trace"] = t;
  return j;
}

inline Json to_json(const BogreiderResult& r, bool with_rejections = false) {
  Json j;
  Json s = Json::array();
  for (const auto& d : r.survivors) s.push_back(to_json(d));
  j["survivors"] = s;
  j["box"] = r.box;
  j["mod4_applied"] = r.mod4_applied;
  j["hypothesis_holds"] = r.hypothesis_holds;
  Json counts = Json::object();
  for (const char* n : bogreider_filters()) counts[n] = r.rejected_by.at(n);
  j["rejected_by"] = counts;
  if (with_rejections) {
    Json rej = Json::array();
    for (const auto& x : r.rejected) rej.push_back({{"L", x.L}, {"filter", x.filter}});
    j["rejected"] = rej;
  }
  j["notes"] = r.notes;
  return j;
}

inline Json to_json(const DestabCandidate& c) {
  return Json{{"a", c.a}, {"a1", c.a1}, {"A2", c.A2}, {"B2", c.B2}, {"AB", c.AB}, {"lenW", c.lenW}};
}

inline Json to_json(const DestabResult& r) {
  Json j;
  Json s = Json::array();
  for (const auto& c : r.survivors) s.push_back(to_json(c));
  j["survivors"] = s;
  j["grid"] = r.grid;
  Json counts = Json::object();
  for (const char* n : destab_filters()) counts[n] = r.rejected_by.at(n);
  j["rejected_by"] = counts;
  return j;
}

inline Json to_json(const SurvivorRow& r) {
  return Json{{"L", r.L}, {"coords", r.coords}, {"z", r.z}, {"ML", r.ML}, {"L2", r.L2}, {"deg_D", r.deg_D}};
}

inline Json to_json(const CaseReport& r) {
  Json j;
  j["case"] = r.id;
  j["status"] = r.pass ? "PASS" : "FAIL";
  j["kind"] = r.kind;
  j["surface"] = r.surface;
  Json s = Json::array();
  if (r.kind == "destab")
    for (const auto& c : r.destab) s.push_back(to_json(c));
  else
    for (const auto& x : r.survivors) s.push_back(to_json(x));
  j["survivors"] = s;
  Json k = Json::array();
  for (const auto& x : r.killed) k.push_back({{"L", x.L}, {"reason", x.reason}});
  j["killed"] = k;
  Json net = Json::array();
  for (const auto& x : r.net) net.push_back(x.L);
  if (r.kind == "bogreider") j["net"] = net;
  Json checks = Json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"check", c.what}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok()}});
  if (!r.checks.empty()) j["checks"] = checks;
  Json trace = Json::array();
  for (const auto& [f, n] : r.trace) trace.push_back({{"filter", f}, {"rejected", n}});
  for (const auto& d : r.diffs) trace.push_back({{"diff", d}});
  j["trace"] = trace;
  j["annotations"] = r.annotations;
  return j;
}

inline Json to_json(const CaseFixture& f) {
  Json j;
  j["id"] = f.id;
  j["kind"] = f.kind;
  j["title"] = f.title;
  j["surface"] = f.surface;
  if (f.kind == "bogreider") {
    j["C"] = f.C;
    j["k"] = f.k;
  }
  Json e = Json::array();
  for (const auto& x : f.expected) {
    Json row{{"L", x.L}};
    if (f.kind == "bogreider") row["z"] = x.z;
    e.push_back(row);
  }
  j["expected"] = e;
  Json k = Json::array();
  for (const auto& x : f.killed) k.push_back({{"L", x.L}, {"reason", x.reason}});
  j["killed"] = k;
  j["annotations"] = f.annotations;
  return j;
}

inline Json catalog_to_json() {
  Json a = Json::array();
  for (const auto& f : fixture_catalog()) a.push_back(to_json(f));
  return a;
}

inline Json to_json(const GaussianVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.status == VerdictStatus::CorankBound) {
    j["corank_bound"] = v.corank;
    j["equality"] = v.equality;
    j["clamped"] = v.clamped;
  }
  j["rule"] = v.rule;
  j["qualifiers"] = v.qualifiers;
  j["notes"] = v.notes;
  Json echo = Json::object();
  for (const auto& [k, x] : v.inputs) echo[k] = x;
  j["inputs_echo"] = echo;
  return j;
}

inline Json to_json(const PhiResult& r) {
  return Json{{"phi", r.value}, {"witness", to_json(r.witness)}, {"certified", r.certified}, {"note", r.note}};
}

inline Json to_json(const HodgeVerdict& v) {
  Json j{{"outcome", to_string(v.outcome)},
         {"LC_squared", arith::to_string(v.lc_squared)},
         {"L2_C2", arith::to_string(v.product)}};
  if (v.lambda) j["lambda"] = v.lambda->str();
  return j;
}

inline Json to_json(const NefVerdict& v) {
  Json j{{"outcome", to_string(v.outcome)}};
  if (v.witness) {
    j["witness"] = to_json(*v.witness);
    j["witness_pairing"] = v.witness_pairing;
  }
  j["h1_note"] = v.h1_note;
  return j;
}

inline Json to_json(const Lemma10Verdict& v) {
  Json j{{"outcome", to_string(v.outcome)}, {"AB", v.product}};
  if (v.primitive) {
    j["F"] = to_json(*v.primitive);
    j["a"] = v.a;
    j["b"] = v.b;
  }
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

inline Json to_json(const ScrollInvariants& s) {
  return Json{{"b2", s.b2}, {"degV", s.deg_v}, {"degY", s.deg_y}, {"pa_hyperplane", s.pa_hyperplane},
              {"n2_holds", s.n2_holds}};
}

inline Json to_json(const std::vector<IsotropicHit>& hits) {
  Json a = Json::array();
  for (const auto& h : hits) a.push_back({{"F", to_json(h.F)}, {"value", h.value}});
  return a;
}

/// {"command", "surface", "result", "elapsed_ms", "version"}
inline Json run_report(const std::string& command, const std::string& surface, Json result, Int elapsed_ms) {
  Json j;
  j["command"] = command;
  j["surface"] = surface;
  j["result"] = std::move(result);
  j["elapsed_ms"] = elapsed_ms;
  j["version"] = kVersion;
  return j;
}

}  // namespace io
}  // namespace divcalc
