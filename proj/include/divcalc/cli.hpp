#pragma once

// Command-line front end. `run` parses a command line, dispatches to the
// library and writes either human-readable text or a JSON run report.

#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "divcalc/io.hpp"

namespace divcalc::cli {

struct Outcome {
  Json result;
  std::string text;
  bool no_conclusion = false;
  bool failed = false;
};

struct Options {
  std::string surface = "enriques";
  std::string config;
  std::string curve;
  std::optional<Int> k, l2, phi, deg_m, h1_m, h0_residual, h0_2k_m, cliff, box, g, b1, cork_mu, h0_b2;
  Int grid = 16;
  std::string case_id;
  bool all = false;
  bool json = false;
  bool strict = false;
  std::vector<std::string> args;
  std::vector<std::string> h0_aux;
  std::vector<std::string> nodal;
  std::string type = "general";
  std::string mod4 = "auto";
  bool rejections = false;
  bool special_2d = false;
  bool m_special = false;
  bool h1_zero = false;
  bool mu_surjective = false;
};

namespace detail {

inline std::string verdict_line(const GaussianVerdict& v) {
  std::string s = v.status_text();
  if (v.status != VerdictStatus::NoConclusion) s += " via " + v.rule;
  if (v.status == VerdictStatus::CorankBound && v.equality) s += " (equality)";
  if (v.clamped) s += " (clamped)";
  return s;
}

inline Outcome verdict_outcome(const GaussianVerdict& v) {
  Outcome o;
  o.result = io::to_json(v);
  std::ostringstream t;
  t << verdict_line(v) << "\n";
  for (const auto& q : v.qualifiers) t << "  for: " << q << "\n";
  for (const auto& n : v.notes) t << "  note: " << n << "\n";
  o.text = t.str();
  o.no_conclusion = v.status == VerdictStatus::NoConclusion;
  return o;
}

inline Int need(const std::optional<Int>& v, const char* flag) {
  if (!v) throw PreconditionError(std::string("missing ") + flag);
  return *v;
}

inline CurveType curve_type(const std::string& t) {
  if (t == "general") return CurveType::General;
  if (t == "quintic") return CurveType::PlaneQuintic;
  if (t == "trigonal") return CurveType::Trigonal;
  if (t == "nontrigonal") return CurveType::Nontrigonal;
  throw PreconditionError("unknown curve type '" + t + "'");
}

inline std::map<std::string, Int> parse_aux(const std::vector<std::string>& items) {
  std::map<std::string, Int> out;
  for (const auto& s : items) {
    auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) throw ParseError("expected KEY=VALUE, got '" + s + "'");
    try {
      std::size_t used = 0;
      Int v = std::stoll(s.substr(eq + 1), &used);
      if (used != s.size() - eq - 1) throw std::invalid_argument(s);
      out[s.substr(0, eq)] = v;
    } catch (const std::logic_error&) {
      throw ParseError("value in '" + s + "' is not an integer");
    }
  }
  return out;
}

}  // namespace detail

/// Runs one command line (without the program name). Returns the exit code:
/// 0 on success, 2 for NO_CONCLUSION under --strict, 1 on errors and failed
/// verification.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact divisor arithmetic on Enriques and rational surfaces", "divcalc"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--surface", o.surface, "built-in surface or <name>.json on DIVCALC_SURFACE_PATH");
  app.add_option("--config", o.config, "lattice or isotropic-config JSON file");
  app.add_flag("--json", o.json, "print a JSON run report");
  app.add_flag("--strict", o.strict, "exit 2 when the verdict is NO_CONCLUSION");

  std::map<std::string, std::function<Outcome()>> handlers;
  std::optional<SurfaceKind> loaded;
  auto surf = [&]() -> const SurfaceKind& {
    if (!loaded) loaded = o.config.empty() ? io::find_surface(o.surface) : io::load_surface_file(o.config);
    return *loaded;
  };
  auto cls = [&](const std::string& text) { return parse_class(text, surf()); };
  auto one_class = [&](const char* what) -> std::string {
    if (!o.args.empty()) return o.args.front();
    if (!o.curve.empty()) return o.curve;
    throw PreconditionError(std::string("missing ") + what);
  };

  auto sub = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };
  auto classes = [&](CLI::App* c, const char* help, int n) { c->add_option("classes", o.args, help)->expected(n); };
  auto curve_opt = [&](CLI::App* c) { c->add_option("--curve", o.curve, "divisor expression, e.g. 6H-2G1-2G2"); };
  auto int_opt = [&](CLI::App* c, const char* flag, std::optional<Int>& v, const char* help) {
    c->add_option(flag, v, help);
  };

  // Lattice arithmetic --------------------------------------------------------

  auto* c_pair = sub("pair", "intersection number of two classes");
  classes(c_pair, "two divisor expressions", 2);
  handlers["pair"] = [&] {
    DivClass a = cls(o.args.at(0)), b = cls(o.args.at(1));
    Int v = pair(a, b);
    return Outcome{{{"a", render(a)}, {"b", render(b)}, {"pairing", v}}, render(a) + " . " + render(b) + " = " +
                                                                          std::to_string(v) + "\n"};
  };

  auto* c_self = sub("self", "self-intersection of a class");
  classes(c_self, "divisor expression", 1);
  curve_opt(c_self);
  handlers["self"] = [&] {
    DivClass a = cls(one_class("class"));
    Int v = self(a);
    return Outcome{{{"class", render(a)}, {"self", v}}, "(" + render(a) + ")^2 = " + std::to_string(v) + "\n"};
  };

  auto* c_genus = sub("genus", "arithmetic genus of a curve class");
  classes(c_genus, "divisor expression", 1);
  curve_opt(c_genus);
  handlers["genus"] = [&] {
    DivClass c = cls(one_class("--curve"));
    Int g = genus(surf(), c);
    return Outcome{{{"class", render(c)}, {"C2", self(c)}, {"CK", pair(c, surf().canonical())}, {"genus", g}},
                   "g(" + render(c) + ") = " + std::to_string(g) + "\n"};
  };

  auto* c_chi = sub("chi", "Riemann-Roch Euler characteristic of a class");
  classes(c_chi, "divisor expression", 1);
  curve_opt(c_chi);
  handlers["chi"] = [&] {
    DivClass l = cls(one_class("class"));
    Int v = chi(surf(), l);
    return Outcome{{{"class", render(l)}, {"chi", v}}, "chi(" + render(l) + ") = " + std::to_string(v) + "\n"};
  };

  auto* c_reflect = sub("reflect", "reflection of L in a (-2)-class");
  classes(c_reflect, "L and the (-2)-class", 2);
  handlers["reflect"] = [&] {
    DivClass l = cls(o.args.at(0)), d = cls(o.args.at(1));
    DivClass r = reflect_nodal(l, d);
    return Outcome{{{"L", render(l)},
                    {"delta", render(d)},
                    {"result", io::to_json(r)},
                    {"L2_before", self(l)},
                    {"L2_after", self(r)}},
                   "s(" + render(l) + ") = " + render(r) + "\n"};
  };

  auto* c_hodge = sub("hodge", "Hodge index comparison of L against the curve");
  classes(c_hodge, "L", 1);
  curve_opt(c_hodge);
  handlers["hodge"] = [&] {
    if (o.curve.empty()) throw PreconditionError("missing --curve");
    DivClass l = cls(o.args.at(0)), c = cls(o.curve);
    HodgeVerdict v = hodge_filter(l, c);
    Json j = io::to_json(v);
    return Outcome{j, std::string(to_string(v.outcome)) + "\n"};
  };

  auto* c_lemma = sub("lemma10", "A.B > 0 test for effective classes with A^2, B^2 >= 0");
  classes(c_lemma, "A and B", 2);
  handlers["lemma10"] = [&] {
    Lemma10Verdict v = check_lemma10(cls(o.args.at(0)), cls(o.args.at(1)));
    std::string t = std::string(to_string(v.outcome)) + " (A.B = " + std::to_string(v.product) + ")\n";
    if (!v.note.empty()) t += "  note: " + v.note + "\n";
    return Outcome{io::to_json(v), t};
  };

  auto* c_mod4 = sub("mod4", "congruence 3L^2 + M.L = 0 mod 4 for C = L + M");
  classes(c_mod4, "L", 1);
  curve_opt(c_mod4);
  handlers["mod4"] = [&] {
    if (o.curve.empty()) throw PreconditionError("missing --curve");
    DivClass l = cls(o.args.at(0)), c = cls(o.curve);
    DivClass m = c - l;
    bool ok = mod4_condition(l, m);
    return Outcome{{{"L", render(l)}, {"M", render(m)}, {"value", 3 * self(l) + pair(m, l)}, {"holds", ok}},
                   std::string(ok ? "holds" : "fails") + "\n"};
  };

  // Surface-level computations -----------------------------------------------

  auto* c_phi = sub("phi", "phi(L): minimum of |F.L| over isotropic F");
  classes(c_phi, "L", 1);
  curve_opt(c_phi);
  int_opt(c_phi, "--box", o.box, "scan a coordinate cube of this half-width");
  handlers["phi"] = [&] {
    DivClass l = cls(one_class("class"));
    PhiMode mode = PhiSublattice{};
    if (o.box) mode = PhiBoxed{*o.box};
    PhiResult r = phi(surf(), l, mode);
    Json j = io::to_json(r);
    j["class"] = render(l);
    j["L2"] = self(l);
    std::string t = "phi(" + render(l) + ") = " + std::to_string(r.value) + ", witness " + render(r.witness) +
                    (r.certified ? "" : " (not certified)") + "\n";
    if (!r.note.empty()) t += "  note: " + r.note + "\n";
    return Outcome{j, t};
  };

  auto* c_iso = sub("isotropic", "isotropic classes F in a cube, sorted by |F.target|");
  classes(c_iso, "target class", 1);
  curve_opt(c_iso);
  int_opt(c_iso, "--box", o.box, "half-width of the cube (default 2)");
  handlers["isotropic"] = [&] {
    DivClass t = cls(one_class("target"));
    auto hits = isotropic_search(surf().model, t, o.box.value_or(2));
    std::ostringstream s;
    for (const auto& h : hits) s << render(h.F) << "  |F.L| = " << h.value << "\n";
    return Outcome{{{"target", render(t)}, {"hits", io::to_json(hits)}}, s.str()};
  };

  auto* c_qnef = sub("quasinef", "nef / quasi-nef test against listed (-2)-classes");
  classes(c_qnef, "L", 1);
  c_qnef->add_option("--nodal", o.nodal, "(-2)-classes to test against");
  handlers["quasinef"] = [&] {
    DivClass l = cls(o.args.at(0));
    std::vector<DivClass> nodal;
    for (const auto& n : o.nodal) nodal.push_back(cls(n));
    NefVerdict v = quasi_nef_test(surf(), l, nodal);
    std::string t = std::string(to_string(v.outcome));
    if (v.witness) t += " (witness " + render(*v.witness) + ", pairing " + std::to_string(v.witness_pairing) + ")";
    t += "\n";
    if (!v.h1_note.empty()) t += "  note: " + v.h1_note + "\n";
    return Outcome{io::to_json(v), t};
  };

  auto* c_enum = sub("enumerate", "decompositions C = L + M for a base-point free pencil of degree k");
  curve_opt(c_enum);
  int_opt(c_enum, "--k", o.k, "pencil degree");
  int_opt(c_enum, "--box", o.box, "explicit cube half-width instead of the certified box");
  c_enum->add_option("--mod4", o.mod4, "congruence filter: auto, on or off")
      ->check(CLI::IsMember({"auto", "on", "off"}));
  c_enum->add_flag("--rejections", o.rejections, "list every rejected point in the JSON report");
  handlers["enumerate"] = [&] {
    DivClass c = cls(o.curve.empty() ? "-2K" : o.curve);
    BogreiderOptions opt;
    opt.box = o.box;
    opt.keep_rejections = o.rejections;
    if (o.mod4 != "auto") opt.c_is_minus_2k = o.mod4 == "on";
    Int k = detail::need(o.k, "--k");
    BogreiderResult r = enumerate_bogreider(surf(), c, k, opt);
    Json j = io::to_json(r, o.rejections);
    j["C"] = render(c);
    j["k"] = k;
    std::ostringstream t;
    t << "C = " << render(c) << ", k = " << k << ", " << r.survivors.size() << " survivor(s)\n";
    for (const auto& d : r.survivors)
      t << "  L = " << render(d.L) << "  M = " << render(d.M) << "  z = " << d.z << "  L.M = " << d.ML
        << "  L^2 = " << d.L2 << "  deg D = " << d.deg_D << "\n";
    t << "rejected:";
    for (const char* n : bogreider_filters()) t << " " << n << "=" << r.rejected_by.at(n);
    t << "\n";
    for (const auto& n : r.notes) t << "note: " << n << "\n";
    return Outcome{j, t.str()};
  };

  auto* c_destab = sub("destab", "destabilizing decompositions on the blown-up quadric cone");
  c_destab->add_option("--grid", o.grid, "scan half-width for (a, a1)");
  handlers["destab"] = [&] {
    DestabResult r = enumerate_destab(o.grid);
    std::ostringstream t;
    for (const auto& c : r.survivors)
      t << "(a, a1) = (" << c.a << ", " << c.a1 << ")  A^2 = " << c.A2 << "  B^2 = " << c.B2 << "  A.B = " << c.AB
        << "  lenW = " << c.lenW << "\n";
    return Outcome{io::to_json(r), t.str()};
  };

  // Curve criteria -------------------------------------------------------------

  auto* c_gon = sub("gonality", "gonality of a general curve in |L|");
  int_opt(c_gon, "--l2", o.l2, "L^2");
  int_opt(c_gon, "--phi", o.phi, "phi(L)");
  c_gon->add_flag("--special-2d", o.special_2d, "L = 2D with D^2 = 10, phi(D) = 3");
  handlers["gonality"] = [&] {
    Int l2 = detail::need(o.l2, "--l2"), ph = detail::need(o.phi, "--phi");
    GonalityResult r = gonality_detail(l2, ph, !o.special_2d);
    const char* which[] = {"general", "square_even", "near_square", "listed"};
    return Outcome{{{"L2", l2}, {"phi", ph}, {"gonality", r.gonality}, {"case", which[static_cast<int>(r.which)]}},
                   std::to_string(r.gonality) + "\n"};
  };

  auto* c_cliff = sub("cliff", "Clifford-index surjectivity criterion");
  int_opt(c_cliff, "--cliff", o.cliff, "Cliff(C)");
  int_opt(c_cliff, "--h0-2k-minus-m", o.h0_2k_m, "h0(2K_C - M)");
  handlers["cliff"] = [&] {
    return detail::verdict_outcome(
        check_cliff_criterion(detail::need(o.cliff, "--cliff"), detail::need(o.h0_2k_m, "--h0-2k-minus-m")));
  };

  auto gaussian_inputs = [&](CLI::App* c) {
    int_opt(c, "--g", o.g, "genus");
    int_opt(c, "--l2", o.l2, "L^2");
    int_opt(c, "--phi", o.phi, "phi(L)");
    int_opt(c, "--deg-m", o.deg_m, "deg M");
    int_opt(c, "--h1-m", o.h1_m, "h1(M)");
    int_opt(c, "--h0-residual", o.h0_residual, "h0 of the residual bundle of the applicable condition");
    int_opt(c, "--h0-2k-minus-m", o.h0_2k_m, "h0(2K_C - M)");
    int_opt(c, "--cliff", o.cliff, "Cliff(C)");
    int_opt(c, "--cork-mu", o.cork_mu, "corank of the multiplication map");
  };
  auto make_input = [&] {
    GaussianInput in;
    in.g = o.g;
    in.L2 = o.l2;
    in.phi = o.phi;
    in.degM = o.deg_m;
    in.h1M = o.h1_m;
    in.h0_residual = o.h0_residual;
    in.h0_2K_minus_M = o.h0_2k_m;
    in.cliff = o.cliff;
    in.cork_mu = o.cork_mu;
    in.aux_h0 = detail::parse_aux(o.h0_aux);
    return in;
  };

  auto* c_gauss = sub("gaussian", "surjectivity of the Gaussian map for curves on an Enriques surface");
  gaussian_inputs(c_gauss);
  handlers["gaussian"] = [&] { return detail::verdict_outcome(check_main_theorem(make_input())); };

  auto* c_corank = sub("corank", "corank lower bounds in low genus and on special curves");
  gaussian_inputs(c_corank);
  c_corank->add_option("--type", o.type, "general, quintic, trigonal or nontrigonal");
  c_corank->add_option("--h0", o.h0_aux, "auxiliary counts KEY=VALUE, keys 3K-M 4K-M 5A-M 4A-M 3K-(g-4)A-M");
  handlers["corank"] = [&] {
    return detail::verdict_outcome(
        corank_low_genus(detail::need(o.g, "--g"), make_input(), detail::curve_type(o.type)));
  };

  auto* c_bel = sub("bel", "H1(M) = 0, deg M >= g+1, h0(2K - M) <= Cliff - 2");
  gaussian_inputs(c_bel);
  handlers["bel"] = [&] {
    return detail::verdict_outcome(check_bel(detail::need(o.g, "--g"), detail::need(o.deg_m, "--deg-m"),
                                             detail::need(o.h1_m, "--h1-m"),
                                             detail::need(o.h0_2k_m, "--h0-2k-minus-m"),
                                             detail::need(o.cliff, "--cliff")));
  };

  auto* c_degree = sub("degree", "degree thresholds for surjectivity");
  int_opt(c_degree, "--g", o.g, "genus");
  int_opt(c_degree, "--deg-m", o.deg_m, "deg M");
  c_degree->add_option("--type", o.type, "general, quintic or trigonal");
  c_degree->add_flag("--m-special", o.m_special, "M is the excluded bundle at the equality degree");
  handlers["degree"] = [&] {
    DegreeFlags f;
    f.plane_quintic = o.type == "quintic";
    f.trigonal = o.type == "trigonal";
    if (!f.plane_quintic && !f.trigonal && o.type != "general" && o.type != "nontrigonal")
      throw PreconditionError("unknown curve type '" + o.type + "'");
    f.m_eq_special = o.m_special;
    return detail::verdict_outcome(
        check_degree_corollaries(detail::need(o.g, "--g"), detail::need(o.deg_m, "--deg-m"), f));
  };

  auto* c_tet = sub("tetragonal", "tetragonal criterion with the second scroll invariant");
  int_opt(c_tet, "--h0-2k-minus-m", o.h0_2k_m, "h0(2K_C - M)");
  int_opt(c_tet, "--h0-b2", o.h0_b2, "h0(2K_C - M - b2 A)");
  c_tet->add_flag("--h1-zero", o.h1_zero, "H1(M) = 0");
  c_tet->add_flag("--mu-surjective", o.mu_surjective, "the multiplication map is surjective");
  handlers["tetragonal"] = [&] {
    return detail::verdict_outcome(tetragonal_corank(detail::need(o.h0_2k_m, "--h0-2k-minus-m"),
                                                     detail::need(o.h0_b2, "--h0-b2"), o.h1_zero, o.mu_surjective));
  };

  auto* c_scroll = sub("scroll", "scroll invariants of a tetragonal canonical curve");
  int_opt(c_scroll, "--g", o.g, "genus");
  int_opt(c_scroll, "--b1", o.b1, "first scroll invariant");
  handlers["scroll"] = [&] {
    Int g = detail::need(o.g, "--g"), b1 = detail::need(o.b1, "--b1");
    ScrollInvariants s = scroll_invariants(g, b1);
    Json j = io::to_json(s);
    j["g"] = g;
    j["b1"] = b1;
    std::ostringstream t;
    t << "b2 = " << s.b2 << ", deg V = " << s.deg_v << ", deg Y = " << s.deg_y << ", p_a = " << s.pa_hyperplane
      << ", h0(N(-2)) = 0: " << (s.n2_holds ? "yes" : "no") << "\n";
    return Outcome{j, t.str()};
  };

  auto* c_b2 = sub("b2rule", "b2 >= 1 for a general curve on an Enriques surface");
  int_opt(c_b2, "--l2", o.l2, "L^2");
  int_opt(c_b2, "--phi", o.phi, "phi(L)");
  handlers["b2rule"] = [&] {
    B2Rule r = b2_rule_enriques(detail::need(o.l2, "--l2"), detail::need(o.phi, "--phi"));
    const char* s = r.b2_at_least_1 ? "b2_at_least_1" : "unknown";
    return Outcome{{{"b2", s}, {"qualifiers", r.qualifiers}}, std::string(s) + "\n"};
  };

  // Fixtures and surfaces ------------------------------------------------------

  auto* c_verify = sub("verify", "recompute catalogued cases and compare");
  c_verify->add_option("--case", o.case_id, "case id");
  c_verify->add_flag("--all", o.all, "every catalogued case");
  handlers["verify"] = [&] {
    if (o.all == !o.case_id.empty()) throw PreconditionError("give exactly one of --case or --all");
    std::vector<CaseReport> reports = o.all ? verify_all() : std::vector<CaseReport>{verify_case(o.case_id)};
    Outcome out;
    Json cases = Json::array();
    Int passed = 0;
    std::ostringstream t;
    for (const auto& r : reports) {
      cases.push_back(io::to_json(r));
      passed += r.pass;
      t << (r.pass ? "PASS " : "FAIL ") << r.id << "\n";
      for (const auto& d : r.diffs) t << "  " << d << "\n";
    }
    if (o.all) t << passed << "/" << reports.size() << " passed\n";
    out.result = {{"cases", cases}, {"passed", passed}, {"failed", static_cast<Int>(reports.size()) - passed}};
    out.text = t.str();
    out.failed = passed != static_cast<Int>(reports.size());
    return out;
  };

  auto* c_catalog = sub("catalog", "export the case catalog");
  (void)c_catalog;
  handlers["catalog"] = [&] {
    std::ostringstream t;
    for (const auto& f : fixture_catalog()) t << f.id << "  [" << f.kind << "]  " << f.title << "\n";
    return Outcome{{{"cases", io::catalog_to_json()}}, t.str()};
  };

  auto* c_surface = sub("surface", "list or show surfaces");
  c_surface->require_subcommand(1);
  auto* c_list = c_surface->add_subcommand("list", "built-in surface names");
  auto* c_show = c_surface->add_subcommand("show", "lattice data of a surface");
  c_show->add_option("name", o.args, "surface name (default: --surface or --config)")->expected(0, 1);
  handlers["surface"] = [&] {
    if (c_list->parsed()) {
      std::ostringstream t;
      for (const auto& n : builtin_surface_names()) t << n << "\n";
      return Outcome{{{"surfaces", builtin_surface_names()}}, t.str()};
    }
    if (!o.args.empty()) {
      o.surface = o.args.front();
      o.config.clear();
    }
    const SurfaceKind& s = surf();
    std::ostringstream t;
    t << s.name << " (" << to_string(s.tag) << "), rank " << s.model->rank() << "\n";
    Signature sig = signature(*s.model);
    t << "  signature (" << sig.positive << ", " << sig.negative << ")\n";
    t << "  K = " << render(s.canonical()) << "\n";
    t << "  labels:";
    for (const auto& l : s.labels()) t << " " << l;
    t << "\n";
    return Outcome{io::surface_to_json(s), t.str()};
  };

  // ---------------------------------------------------------------------------

  std::vector<std::string> rev(argv.rbegin(), argv.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "divcalc: " << e.what() << "\n" << app.help();
    return 1;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  Outcome result;
  try {
    result = handlers.at(command)();
  } catch (const std::exception& e) {
    err << "divcalc: error: " << e.what() << "\n";
    return 1;
  }
  const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);

  if (o.json) {
    out << io::run_report(command, loaded ? loaded->name : "", result.result, static_cast<Int>(ms.count())).dump(2)
        << "\n";
  } else {
    out << result.text;
  }
  if (result.failed) return 1;
  if (o.strict && result.no_conclusion) return 2;
  return 0;
}

}  // namespace divcalc::cli
