#pragma once

// Decomposition searches C = L + M for a base-point free pencil of degree k on
// a curve C, and the destabilization search on the blown-up quadric cone.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divcalc/surface.hpp"

namespace divcalc {

/// Sign conditions a = L·H ≥ 0, bᵢ = L·Gᵢ ≥ 0 and the Cauchy–Schwarz bound
/// (3a + L·K)² ≤ n(a² − L²). False for L² < 0.
inline bool cs_filter(const SurfaceKind& s, const DivClass& L) {
  if (s.tag != SurfaceTag::SigmaN) throw PreconditionError("cs_filter applies to sigma_n surfaces");
  const Int l2 = self(L);
  if (l2 < 0) return false;
  const Int a = pair(L, s.lookup("H"));
  if (a < 0) return false;
  for (int i = 1; i <= s.n; ++i)
    if (pair(L, s.lookup("G" + std::to_string(i))) < 0) return false;
  const Int lhs = arith::add(arith::mul(3, a), pair(L, s.canonical()));
  return arith::wmul(lhs, lhs) <= arith::wmul(s.n, arith::sub(arith::mul(a, a), l2));
}

/// Stage names in the order they are applied.
inline const std::array<const char*, 10>& bogreider_filters() {
  static const std::array<const char*, 10> names = {"nonzero", "sign",    "L2>=0", "ML>=L2", "ML<=k",
                                                    "degD>=0", "iv",      "cs2",   "hodge",  "mod4"};
  return names;
}

struct Decomposition {
  DivClass L;
  DivClass M;
  Int z;
  Int ML;
  Int L2;
  Int deg_D;
  std::vector<std::pair<std::string, std::string>> filter_trace;
};

struct Rejection {
  Coords L;
  std::string filter;
};

struct BogreiderOptions {
  /// Whether C ∼ −2K holds linearly. Unset: inferred where Pic = Num.
  std::optional<bool> c_is_minus_2k;
  /// Explicit cube [−box, box]^r instead of the certified ellipsoid box.
  std::optional<Int> box;
  bool keep_rejections = true;
};

struct BogreiderResult {
  std::vector<Decomposition> survivors;
  std::vector<Rejection> rejected;
  std::map<std::string, Int> rejected_by;
  Coords box;
  bool mod4_applied = false;
  bool hypothesis_holds = false;
  std::vector<std::string> notes;
};

namespace detail {

struct Candidate {
  Coords x;
  std::uint8_t failed;  // index into bogreider_filters(), or 255 for a survivor
  Int ML, L2;
  HodgeOutcome hodge;
};

/// Coordinate bounds containing every L with L² ≥ 0 and 0 ≤ L·C ≤ 2k: such L
/// satisfy 2(L·C)² − C²L² ≤ 8k², an ellipsoid when C² > 0.
inline Coords bogreider_box(const SurfaceKind& s, const DivClass& C, Int k) {
  std::optional<Coords> b;
  try {
    b = majorant_box(*s.model, C.coords(), arith::wmul(8, arith::wmul(k, k)));
  } catch (const OverflowError&) {
    throw SearchError("search box for k = " + std::to_string(k) + " overflows");
  }
  if (!b) throw SearchError("no certified box (needs C² > 0 on a hyperbolic lattice); pass an explicit box");
  return *b;
}

}  // namespace detail

/// All decompositions C = L + M satisfying the numeric constraints for a
/// base-point free g¹_k, with the staged filters recorded for every rejected
/// point of the search box.
inline BogreiderResult enumerate_bogreider(const SurfaceKind& s, const DivClass& C, Int k,
                                           const BogreiderOptions& opt = {}) {
  if (!same_model(s.model, C.model())) throw ModelMismatch("C is not a class on '" + s.name + "'");
  if (k < 2) throw PreconditionError("k must be at least 2");
  const Int c2 = self(C);
  if (c2 < 0) throw PreconditionError("C² < 0");
  genus(s, C);  // rejects classes failing the adjunction parity

  BogreiderResult res;
  const DivClass K = s.canonical();
  const bool is_m2k = C == K * -2;
  if (opt.c_is_minus_2k) {
    res.mod4_applied = *opt.c_is_minus_2k;
    if (res.mod4_applied && !is_m2k) throw PreconditionError("C is not numerically -2K");
  } else {
    res.mod4_applied = is_m2k && s.linear_equals_numerical;
  }
  if (is_m2k && !res.mod4_applied)
    res.notes.push_back("C ≡ -2K numerically but linear equivalence is not known here; mod4 disabled");

  const Int disc = arith::sub(c2, arith::mul(4, k));
  res.hypothesis_holds = disc >= std::max<Int>(0, 3 - 4 * s.model->chi());
  if (!res.hypothesis_holds)
    res.notes.push_back("C² - 4k = " + std::to_string(disc) +
                        " is below max(0, 3 - 4χ(O)); the decomposition need not exist");

  res.box = opt.box ? Coords(s.model->rank(), *opt.box) : detail::bogreider_box(s, C, k);

  const ModelPtr& model = s.model;
  const Coords wc = model->apply(C.coords());
  std::vector<Coords> tests;
  for (const auto& t : s.sign_tests) tests.push_back(model->apply(t.coords()));
  const bool sigma = s.tag == SurfaceTag::SigmaN;
  const std::size_t r = model->rank();

  auto dot = [&](const Coords& x, const Coords& w) {
    Int v = 0;
    for (std::size_t i = 0; i < r; ++i) v = arith::add(v, arith::mul(x[i], w[i]));
    return v;
  };

  auto found = detail::scan_box<detail::Candidate>(res.box, [&](const Coords& x, auto& out) {
    detail::Candidate c{x, 255, 0, 0, HodgeOutcome::Pass};
    auto fail = [&](std::uint8_t stage) {
      c.failed = stage;
      if (!opt.keep_rejections) c.x.clear();
      out.push_back(std::move(c));
    };
    if (std::all_of(x.begin(), x.end(), [](Int v) { return v == 0; })) return fail(0);
    for (const auto& w : tests)
      if (dot(x, w) < 0) return fail(1);
    c.L2 = model->form(x, x);
    if (c.L2 < 0) return fail(2);
    const Int lc = dot(x, wc);
    c.ML = arith::sub(lc, c.L2);
    if (c.ML < c.L2) return fail(3);
    if (c.ML > k) return fail(4);
    if (arith::add(c.ML, c.L2) - k < 0) return fail(5);
    if (c.L2 == 0 && c.ML != k) return fail(6);
    if (sigma && !cs_filter(s, DivClass(model, x))) return fail(7);
    if (c.L2 > 0 && c2 > 0) {
      c.hodge = hodge_filter(DivClass(model, x), C).outcome;
      if (c.hodge == HodgeOutcome::Fail || c.hodge == HodgeOutcome::FailByIntegrality) return fail(8);
    }
    if (res.mod4_applied && arith::floor_mod(arith::add(arith::mul(3, c.L2), c.ML), 4) != 0) return fail(9);
    out.push_back(c);
  });

  const auto& names = bogreider_filters();
  for (const char* n : names) res.rejected_by[n] = 0;
  for (auto& c : found) {
    if (c.failed != 255) {
      ++res.rejected_by[names[c.failed]];
      if (opt.keep_rejections) res.rejected.push_back({std::move(c.x), names[c.failed]});
      continue;
    }
    DivClass L(model, c.x);
    Decomposition d{L, C - L, k - c.ML, c.ML, c.L2, c.ML + c.L2 - k, {}};
    for (std::size_t i = 0; i < names.size(); ++i) {
      std::string outcome = "pass";
      if (i == 7 && !sigma) outcome = "n/a";
      if (i == 8) outcome = c.L2 > 0 && c2 > 0 ? to_string(c.hodge) : "n/a";
      if (i == 9 && !res.mod4_applied) outcome = "disabled";
      d.filter_trace.emplace_back(names[i], outcome);
    }
    res.survivors.push_back(std::move(d));
  }
  std::sort(res.survivors.begin(), res.survivors.end(),
            [](const Decomposition& a, const Decomposition& b) { return lex_less(a.L.coords(), b.L.coords()); });
  std::sort(res.rejected.begin(), res.rejected.end(),
            [](const Rejection& a, const Rejection& b) { return lex_less(a.L, b.L); });
  return res;
}

// ---------------------------------------------------------------------------
// Destabilizing decompositions 𝓛 = A + B on the blown-up quadric cone

struct DestabCandidate {
  Int a;
  Int a1;
  Int A2;
  Int B2;
  Int AB;
  Int lenW;
};

/// Order in which the destabilization constraints are applied.
inline const std::array<const char*, 10>& destab_filters() {
  static const std::array<const char*, 10> names = {"eq2",  "B-nef", "eq1", "B!=0",  "lenW>=0",
                                                    "ab",   "ab2",   "ab3", "ab4",   "identity"};
  return names;
}

struct DestabResult {
  std::vector<DestabCandidate> survivors;
  std::map<std::string, Int> rejected_by;
  Int grid = 0;
};

/// A = aC0 + a1 f, B = (4 − a)C0 + (7 − a1)f with c₂ = 4 and 𝓛 = 4C0 + 7f.
/// Scans a ∈ [−grid, grid], a1 ∈ [−grid, grid].
inline DestabResult enumerate_destab(Int grid = 16) {
  const SurfaceKind s = make_blq();
  const DivClass bigL(s.model, {4, 7});
  const DivClass nef1(s.model, {0, 1});  // f
  const DivClass nef2(s.model, {1, 2});  // C0 + 2f
  const Int c2 = 4;
  DestabResult res;
  res.grid = grid;
  for (const char* n : destab_filters()) res.rejected_by[n] = 0;
  for (Int a = -grid; a <= grid; ++a) {
    for (Int a1 = -grid; a1 <= grid; ++a1) {
      DivClass A(s.model, {a, a1});
      DivClass B = bigL - A;
      auto reject = [&](const char* n) { ++res.rejected_by[n]; };
      if (pair(A, nef1) < 0 || pair(A, nef2) < 0) { reject("eq2"); continue; }
      if (pair(B, nef1) < 0 || pair(B, nef2) < 0) { reject("B-nef"); continue; }
      if (pair(A - B, nef2) < 0) { reject("eq1"); continue; }
      if (B.is_zero()) { reject("B!=0"); continue; }
      const Int A2 = self(A), B2 = self(B), AB = pair(A, B);
      const Int lenW = c2 - AB;
      if (lenW < 0) { reject("lenW>=0"); continue; }
      if (A2 + B2 < 16) { reject("ab"); continue; }
      if (A2 <= B2) { reject("ab2"); continue; }
      if (A2 < 10) { reject("ab3"); continue; }
      if (a < 1 || a > 4 || a1 < 4 || a1 > 7 || a * (a1 - a) < 5) { reject("ab4"); continue; }
      if (self(A - B) != 8 + 4 * lenW || A2 != 2 * a * (a1 - a)) { reject("identity"); continue; }
      res.survivors.push_back({a, a1, A2, B2, AB, lenW});
    }
  }
  return res;
}

}  // namespace divcalc
