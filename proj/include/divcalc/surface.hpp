#pragma once

// Named surfaces: the Enriques lattice U ⊕ E8(-1), blow-ups of the plane,
// the blown-up quadric cone and the blown-up elliptic cones, together with the
// numerical formulas used on them.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <variant>
#include <vector>

#include "divcalc/lattice.hpp"

namespace divcalc {

enum class SurfaceTag { Enriques, SigmaN, BlQ, BlCn, Custom };

inline const char* to_string(SurfaceTag t) {
  switch (t) {
    case SurfaceTag::Enriques: return "Enriques";
    case SurfaceTag::SigmaN: return "SigmaN";
    case SurfaceTag::BlQ: return "BlQ";
    case SurfaceTag::BlCn: return "BlCn";
    case SurfaceTag::Custom: return "Custom";
  }
  return "?";
}

struct SurfaceKind {
  SurfaceTag tag = SurfaceTag::Custom;
  std::string name;
  int n = 0;  // number of blown-up points on Σₙ, cone degree on Bl_V Cₙ
  ModelPtr model;
  /// Named classes beyond the basis labels ("K", "H" on the quadric cone, ...).
  std::map<std::string, DivClass> special;
  /// Classes a nef class must meet non-negatively; the sign part of (cs1)
  /// and its analogues on the rational ruled surfaces.
  std::vector<DivClass> sign_tests;
  /// Whether C ∼ −2K may be inferred from C ≡ −2K. True where Pic = Num.
  bool linear_equals_numerical = false;

  DivClass canonical() const { return canonical_class(model); }

  /// A basis label or special class by name.
  DivClass lookup(const std::string& label) const {
    if (auto it = special.find(label); it != special.end()) return it->second;
    if (auto i = model->index_of(label)) return DivClass::basis(model, *i);
    throw NotFound("surface '" + name + "' has no class named '" + label + "'");
  }

  std::vector<std::string> labels() const {
    std::vector<std::string> out = model->basis();
    for (const auto& [k, v] : special)
      if (!model->index_of(k)) out.push_back(k);
    return out;
  }
};

// ---------------------------------------------------------------------------
// Built-in models

inline SurfaceKind make_enriques() {
  std::vector<std::string> basis = {"E", "E1"};
  for (int i = 1; i <= 8; ++i) basis.push_back("R" + std::to_string(i));
  Matrix g(10, std::vector<Int>(10, 0));
  g[0][1] = g[1][0] = 1;
  // E8(-1): chain R1 - ... - R7, with R8 attached to R5.
  for (int i = 2; i < 10; ++i) g[i][i] = -2;
  for (int i = 2; i < 8; ++i) g[i][i + 1] = g[i + 1][i] = 1;
  g[6][9] = g[9][6] = 1;
  std::vector<bool> eff(10, false);
  eff[0] = eff[1] = true;
  Coords ample(10, 0);
  ample[0] = ample[1] = 1;
  SurfaceKind s;
  s.tag = SurfaceTag::Enriques;
  s.name = "enriques";
  s.model = make_model("enriques", basis, g, Coords(10, 0), ample, 1, eff);
  s.special.emplace("K", DivClass::zero(s.model).with_twist(true));
  s.special.emplace("K_S", s.special.at("K"));
  s.sign_tests = {DivClass::basis(s.model, 0), DivClass::basis(s.model, 1)};
  return s;
}

inline SurfaceKind make_sigma(int n) {
  if (n < 1 || n > 9) throw PreconditionError("sigma_n needs 1 <= n <= 9");
  const std::size_t r = static_cast<std::size_t>(n) + 1;
  std::vector<std::string> basis = {"H"};
  for (int i = 1; i <= n; ++i) basis.push_back("G" + std::to_string(i));
  Matrix g(r, std::vector<Int>(r, 0));
  g[0][0] = 1;
  for (std::size_t i = 1; i < r; ++i) g[i][i] = -1;
  Coords k(r, 1);
  k[0] = -3;
  Coords ample(r, -1);
  ample[0] = 4;
  SurfaceKind s;
  s.tag = SurfaceTag::SigmaN;
  s.n = n;
  s.name = "sigma" + std::to_string(n);
  s.model = make_model(s.name, basis, g, k, ample, 1, std::vector<bool>(r, true));
  s.special.emplace("K", canonical_class(s.model));
  for (std::size_t i = 0; i < r; ++i) s.sign_tests.push_back(DivClass::basis(s.model, i));
  s.linear_equals_numerical = true;
  return s;
}

inline SurfaceKind make_blq() {
  SurfaceKind s;
  s.tag = SurfaceTag::BlQ;
  s.name = "blq";
  s.model = make_model("blq", {"C0", "f"}, {{-2, 1}, {1, 0}}, {-2, -4}, {1, 3}, 1, {true, true});
  s.special.emplace("K", canonical_class(s.model));
  s.special.emplace("H", DivClass(s.model, {1, 2}));
  // The nef cone is spanned by f and C0 + 2f.
  s.sign_tests = {DivClass(s.model, {0, 1}), DivClass(s.model, {1, 2})};
  s.linear_equals_numerical = true;
  return s;
}

inline SurfaceKind make_blc(int n) {
  if (n < 1) throw PreconditionError("blc_n needs n >= 1");
  SurfaceKind s;
  s.tag = SurfaceTag::BlCn;
  s.n = n;
  s.name = "blc" + std::to_string(n);
  s.model = make_model(s.name, {"C0", "f"}, {{-n, 1}, {1, 0}}, {-2, -n}, {1, Int(n) + 1}, 0, {true, true});
  s.special.emplace("K", canonical_class(s.model));
  // Nef cone spanned by f and C0 + nf.
  s.sign_tests = {DivClass(s.model, {0, 1}), DivClass(s.model, {1, n})};
  return s;
}

namespace detail {
inline std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
  if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) return std::nullopt;
  int v = 0;
  for (std::size_t i = prefix.size(); i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9' || v > 1000) return std::nullopt;
    v = v * 10 + (name[i] - '0');
  }
  return v;
}
}  // namespace detail

/// "enriques", "sigma1".."sigma9", "blq", "blc<n>".
inline SurfaceKind builtin_surface(const std::string& name) {
  if (name == "enriques") return make_enriques();
  if (name == "blq") return make_blq();
  if (auto n = detail::suffix_number(name, "sigma"); n && *n >= 1 && *n <= 9) return make_sigma(*n);
  if (auto n = detail::suffix_number(name, "blc"); n && *n >= 1) return make_blc(*n);
  throw NotFound("unknown surface '" + name + "'");
}

inline std::vector<std::string> builtin_surface_names() {
  std::vector<std::string> out = {"enriques"};
  for (int n = 1; n <= 9; ++n) out.push_back("sigma" + std::to_string(n));
  out.push_back("blq");
  out.push_back("blc6");
  return out;
}

/// Wrap a custom lattice as a surface. Effective labels become sign tests.
inline SurfaceKind custom_surface(ModelPtr model, SurfaceTag tag = SurfaceTag::Custom) {
  SurfaceKind s;
  s.tag = tag;
  s.name = model->name();
  s.model = model;
  bool k_trivial = std::all_of(model->canonical().begin(), model->canonical().end(), [](Int v) { return v == 0; });
  if (tag == SurfaceTag::Enriques && k_trivial) {
    s.special.emplace("K", DivClass::zero(model).with_twist(true));
    if (!model->index_of("K_S")) s.special.emplace("K_S", s.special.at("K"));
  } else if (!model->index_of("K"))
    s.special.emplace("K", canonical_class(model));
  for (std::size_t i = 0; i < model->rank(); ++i)
    if (model->effective()[i]) s.sign_tests.push_back(DivClass::basis(model, i));
  return s;
}

// ---------------------------------------------------------------------------
// Isotropic configurations on an Enriques surface

/// Classes E, E1, ... with E² = Ei² = 0 and prescribed mutual products.
struct IsotropicConfig {
  std::vector<std::string> labels;
  Matrix pair_table;

  IsotropicConfig(std::vector<std::string> l, Matrix table) : labels(std::move(l)), pair_table(std::move(table)) {
    const std::size_t r = labels.size();
    if (r == 0) throw PreconditionError("isotropic config needs at least one label");
    if (pair_table.size() != r) throw PreconditionError("pair table size does not match labels");
    for (std::size_t i = 0; i < r; ++i) {
      if (pair_table[i].size() != r) throw PreconditionError("pair table is not square");
      if (pair_table[i][i] != 0) throw PreconditionError("isotropic config diagonal must be zero");
      for (std::size_t j = 0; j < r; ++j) {
        if (pair_table[i][j] != pair_table[j][i]) throw PreconditionError("pair table is not symmetric");
        if (pair_table[i][j] < 0) throw PreconditionError("isotropic config products must be >= 0");
      }
    }
  }

  /// Table from a list of (i, j, value); unlisted pairs are 0.
  static IsotropicConfig from_pairs(std::vector<std::string> labels,
                                    const std::vector<std::tuple<std::size_t, std::size_t, Int>>& pairs) {
    const std::size_t r = labels.size();
    Matrix t(r, std::vector<Int>(r, 0));
    for (auto [i, j, v] : pairs) {
      if (i >= r || j >= r) throw PreconditionError("pair index out of range");
      if (i == j && v != 0) throw PreconditionError("isotropic config diagonal must be zero");
      t[i][j] = t[j][i] = v;
    }
    return IsotropicConfig(std::move(labels), std::move(t));
  }

  SurfaceKind surface(const std::string& name = "enriques-config") const {
    ModelPtr m = make_model(name, labels, pair_table, Coords(labels.size(), 0), Coords(labels.size(), 1), 1,
                            std::vector<bool>(labels.size(), true));
    return custom_surface(m, SurfaceTag::Enriques);
  }
};

// ---------------------------------------------------------------------------
// Numerical formulas

/// Arithmetic genus by adjunction, 2g − 2 = C² + C·K.
inline Int genus(const SurfaceKind& s, const DivClass& C) {
  Int twice = arith::add(self(C), pair(C, s.canonical()));
  if (twice % 2 != 0) throw PreconditionError("C² + C·K is odd: not the class of a curve");
  if (twice < -2) throw PreconditionError("C² + C·K < -2: not the class of a curve");
  return twice / 2 + 1;
}

/// Riemann–Roch: χ(L) = χ(O) + L·(L − K)/2.
inline Int chi(const SurfaceKind& s, const DivClass& L) {
  Int v = pair(L, L - s.canonical());
  if (v % 2 != 0) throw PreconditionError("L·(L − K) is odd");
  return arith::add(s.model->chi(), v / 2);
}

/// 3L² + M·L ≡ 0 (mod 4), the congruence forced when C ∼ −2K.
inline bool mod4_condition(const DivClass& L, const DivClass& M) {
  return arith::floor_mod(arith::add(arith::mul(3, self(L)), pair(M, L)), 4) == 0;
}

// ---------------------------------------------------------------------------
// φ

struct PhiSublattice {};
struct PhiBoxed {
  Int bound;
};
using PhiMode = std::variant<PhiSublattice, PhiBoxed>;

struct PhiResult {
  Int value;
  DivClass witness;
  bool certified;
  std::string note;
};

namespace detail {
inline std::optional<PhiResult> best_witness(const std::vector<IsotropicHit>& hits, const DivClass& L) {
  // Hits are sorted by value; between F and −F prefer the one meeting L positively.
  if (hits.empty()) return std::nullopt;
  for (const auto& h : hits) {
    if (h.value != hits.front().value) break;
    if (pair(h.F, L) > 0) return PhiResult{h.value, h.F, false, ""};
  }
  return PhiResult{hits.front().value, hits.front().F, false, ""};
}
}  // namespace detail

/// φ(L) = min |F·L| over nonzero isotropic F of the surface lattice.
///
/// Sublattice mode takes B = min |Eᵢ·L| over the isotropic basis labels and
/// scans the ellipsoid 2(F·L)² − L²F² ≤ 2B², which contains every isotropic F
/// with |F·L| ≤ B; the result is the exact minimum over the lattice. Boxed
/// mode scans a coordinate cube and is certified only if that cube contains
/// the same ellipsoid for the value found.
inline PhiResult phi(const SurfaceKind& s, const DivClass& L, const PhiMode& mode) {
  if (s.tag != SurfaceTag::Enriques) throw PreconditionError("phi is defined here for Enriques surfaces only");
  if (!same_model(s.model, L.model())) throw ModelMismatch("class is not on surface '" + s.name + "'");
  const Int l2 = self(L);
  if (l2 <= 0) throw PreconditionError("phi needs L² > 0");

  auto finish = [&](PhiResult r) {
    if (arith::wmul(r.value, r.value) > Wide(l2))
      throw SearchError("search found phi = " + std::to_string(r.value) + " with phi² > L² = " +
                        std::to_string(l2) + " (bound too small or lattice too coarse)");
    return r;
  };

  if (std::holds_alternative<PhiSublattice>(mode)) {
    std::optional<PhiResult> seed;
    for (std::size_t i = 0; i < s.model->rank(); ++i) {
      DivClass e = DivClass::basis(s.model, i);
      if (self(e) != 0) continue;
      Int v = pair(e, L);
      Int a = v < 0 ? -v : v;
      if (!seed || a < seed->value) seed = PhiResult{a, v < 0 ? -e : e, false, ""};
    }
    if (!seed) throw SearchError("sublattice mode needs at least one isotropic basis label");
    try {
      auto box = majorant_box(*s.model, L.coords(), arith::wmul(2, arith::wmul(seed->value, seed->value)));
      if (!box) throw SearchError("lattice '" + s.model->name() + "' is not hyperbolic; use boxed mode");
      auto best = detail::best_witness(detail::isotropic_in_box(s.model, L, *box), L);
      PhiResult r = best ? *best : *seed;
      r.certified = true;
      r.note = "exact minimum over the lattice";
      return finish(r);
    } catch (const OverflowError&) {
      seed->note = "certificate overflowed; value is an upper bound from the basis labels";
      return finish(*seed);
    }
  }

  const Int bound = std::get<PhiBoxed>(mode).bound;
  auto best = detail::best_witness(isotropic_search(s.model, L, bound), L);
  if (!best) throw SearchError("no isotropic class inside box " + std::to_string(bound) + "; raise --box");
  PhiResult r = *best;
  try {
    auto box = majorant_box(*s.model, L.coords(), arith::wmul(2, arith::wmul(r.value, r.value)));
    r.certified = box && std::all_of(box->begin(), box->end(), [&](Int b) { return b <= bound; });
  } catch (const OverflowError&) {
    r.certified = false;
  }
  r.note = r.certified ? "box contains every isotropic class of smaller pairing" : "minimum within the box only";
  return finish(r);
}

// ---------------------------------------------------------------------------
// Quasi-nef test

enum class NefOutcome { Nef, QuasiNef, Violated };

inline const char* to_string(NefOutcome o) {
  switch (o) {
    case NefOutcome::Nef: return "nef";
    case NefOutcome::QuasiNef: return "quasi_nef";
    case NefOutcome::Violated: return "violated";
  }
  return "?";
}

struct NefVerdict {
  NefOutcome outcome;
  std::optional<DivClass> witness;
  Int witness_pairing = 0;
  std::string h1_note;
};

/// Classification of L against a finite set of (-2)-classes and the surface's
/// sign-test classes. The verdict is relative to the classes supplied.
inline NefVerdict quasi_nef_test(const SurfaceKind& s, const DivClass& L, const std::vector<DivClass>& nodal) {
  for (const auto& d : nodal)
    if (self(d) != -2) throw PreconditionError("nodal class " + render(d) + " has self-intersection != -2");
  NefVerdict v{NefOutcome::Nef, std::nullopt, 0, ""};
  if (self(L) < 0) {
    v.outcome = NefOutcome::Violated;
    v.h1_note = "L² < 0";
    return v;
  }
  for (const auto& t : s.sign_tests) {
    Int p = pair(L, t);
    if (p < 0 && (!v.witness || p < v.witness_pairing)) {
      v.outcome = NefOutcome::Violated;
      v.witness = t;
      v.witness_pairing = p;
    }
  }
  if (v.outcome == NefOutcome::Violated) return v;
  for (const auto& d : nodal) {
    Int p = pair(L, d);
    if (p < 0 && (!v.witness || p < v.witness_pairing)) {
      v.witness = d;
      v.witness_pairing = p;
    }
  }
  if (v.witness) v.outcome = v.witness_pairing == -1 ? NefOutcome::QuasiNef : NefOutcome::Violated;
  if (v.outcome != NefOutcome::Violated) {
    bool multiple_of_isotropic = false;
    if (!L.is_zero() && self(L) == 0) {
      auto [f, m] = primitive_part(L);
      multiple_of_isotropic = m >= 2 && self(f) == 0;
    }
    v.h1_note = multiple_of_isotropic ? "L ≡ nE pattern: h¹(L) may be nonzero" : "h¹(L) = 0 expected";
  }
  return v;
}

// ---------------------------------------------------------------------------
// Scroll invariants of a tetragonal canonical curve

struct ScrollInvariants {
  Int b2;
  Int deg_v;
  Int deg_y;
  Int pa_hyperplane;
  bool n2_holds;
};

inline ScrollInvariants scroll_invariants(Int g, Int b1) {
  if (g < 6) throw PreconditionError("scroll invariants need g >= 6");
  Int b2 = g - 5 - b1;
  if (b2 < 0 || b1 < b2)
    throw PreconditionError("need b1 >= b2 >= 0 with b1 + b2 = g - 5, got b1 = " + std::to_string(b1));
  Int deg_y = g - 1 + b2;
  Int pa = g - 4 - b1;
  return {b2, g - 3, deg_y, pa, deg_y >= 2 * pa + 3};
}

}  // namespace divcalc
