#pragma once

// Numeric hypothesis checkers for surjectivity and corank of the Gaussian maps
// Φ_{M,ω_C}, the gonality of curves on Enriques surfaces, and Clifford-index
// helpers. Cohomology counts are inputs; nothing here computes them.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "divcalc/arith.hpp"
#include "divcalc/error.hpp"

namespace divcalc {

// ---------------------------------------------------------------------------
// Gonality and Clifford index

/// Exceptional (L², φ) pairs whose gonality is ⌊L²/4⌋ + 2.
inline const std::vector<std::pair<Int, Int>>& gonality_exception_list() {
  static const std::vector<std::pair<Int, Int>> list = {{30, 5}, {22, 4}, {20, 4}, {14, 3}, {12, 3}, {6, 2}};
  return list;
}

enum class GonalityCase { General, SquareEven, NearSquare, Listed };

struct GonalityResult {
  Int gonality;
  GonalityCase which;
};

inline GonalityResult gonality_detail(Int l2, Int phi, bool not_2D_special = true) {
  if (l2 <= 0) throw PreconditionError("gonality needs L² > 0");
  if (phi < 1) throw PreconditionError("gonality needs phi >= 1");
  if (arith::mul(phi, phi) > l2) throw PreconditionError("phi² > L² is impossible for a line bundle");
  for (auto [a, b] : gonality_exception_list())
    if (a == l2 && b == phi) return {l2 / 4 + 2, GonalityCase::Listed};
  if (l2 == phi * phi && phi >= 2 && phi % 2 == 0) return {2 * phi - 2, GonalityCase::SquareEven};
  if (phi >= 3 && l2 == phi * phi + phi - 2 && not_2D_special)
    return {(phi == 3 || phi == 4) ? 2 * phi - 2 : 2 * phi - 1, GonalityCase::NearSquare};
  return {2 * phi, GonalityCase::General};
}

/// Gonality of a general curve in a base-component free |L| with L² > 0.
/// `not_2D_special` is false when L ≡ 2D with D² = 10, φ(D) = 3.
inline Int gonality(Int l2, Int phi, bool not_2D_special = true) {
  return gonality_detail(l2, phi, not_2D_special).gonality;
}

/// Cliff(A) = deg A − 2(h⁰(A) − 1).
inline Int clifford_of_series(Int d, Int h0) {
  if (h0 < 1 || d < 0) throw PreconditionError("clifford_of_series needs h0 >= 1 and d >= 0");
  return d - 2 * (h0 - 1);
}

/// Cliff(C) ≤ ⌊(g − 1)/2⌋.
inline Int cliff_upper_bound(Int g) {
  if (g < 4) throw PreconditionError("cliff_upper_bound needs g >= 4");
  return (g - 1) / 2;
}

// ---------------------------------------------------------------------------
// Verdicts

enum class VerdictStatus { Surjective, CorankBound, NoConclusion };

inline const char* to_string(VerdictStatus s) {
  switch (s) {
    case VerdictStatus::Surjective: return "SURJECTIVE";
    case VerdictStatus::CorankBound: return "CORANK_BOUND";
    case VerdictStatus::NoConclusion: return "NO_CONCLUSION";
  }
  return "?";
}

struct GaussianVerdict {
  VerdictStatus status = VerdictStatus::NoConclusion;
  Int corank = 0;         // the lower bound, for CORANK_BOUND
  bool equality = false;  // the bound is the exact corank
  bool clamped = false;   // a negative formula value was raised to 0
  std::string rule;
  std::vector<std::string> qualifiers;
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, Int>> inputs;

  bool surjective() const { return status == VerdictStatus::Surjective; }
  std::string status_text() const {
    if (status == VerdictStatus::CorankBound) return "CORANK_BOUND(" + std::to_string(corank) + ")";
    return to_string(status);
  }
};

/// Hypothesis bundle for the checkers. Keys of `aux_h0`: "3K-M", "4K-M",
/// "5A-M", "4A-M", "3K-(g-4)A-M".
struct GaussianInput {
  std::optional<Int> g;
  std::optional<Int> L2;
  std::optional<Int> phi;
  std::optional<Int> degM;
  std::optional<Int> h1M;
  std::optional<Int> h0_2K_minus_M;
  /// h⁰(4L|C − M) if L² = 4, h⁰((3L + K_S)|C − M) if L² = 6, h⁰(2L|C − M) if L² ≥ 8.
  std::optional<Int> h0_residual;
  std::optional<Int> cliff;
  std::optional<Int> cork_mu;
  std::map<std::string, Int> aux_h0;

  std::vector<std::pair<std::string, Int>> echo() const {
    std::vector<std::pair<std::string, Int>> out;
    auto put = [&](const char* k, const std::optional<Int>& v) {
      if (v) out.emplace_back(k, *v);
    };
    put("g", g);
    put("L2", L2);
    put("phi", phi);
    put("degM", degM);
    put("h1M", h1M);
    put("h0_2K_minus_M", h0_2K_minus_M);
    put("h0_residual", h0_residual);
    put("cliff", cliff);
    put("cork_mu", cork_mu);
    for (const auto& [k, v] : aux_h0) out.emplace_back("h0(" + k + ")", v);
    return out;
  }

  void validate() const {
    auto nonneg = [](const char* k, const std::optional<Int>& v) {
      if (v && *v < 0) throw PreconditionError(std::string(k) + " must be >= 0");
    };
    nonneg("h1M", h1M);
    nonneg("h0_2K_minus_M", h0_2K_minus_M);
    nonneg("h0_residual", h0_residual);
    nonneg("cliff", cliff);
    nonneg("cork_mu", cork_mu);
    for (const auto& [k, v] : aux_h0)
      if (v < 0) throw PreconditionError("h0(" + k + ") must be >= 0");
  }
};

namespace detail {

/// h¹(M), taking h¹(M) = 0 when deg M ≥ 2g − 1.
inline std::optional<Int> effective_h1(const std::optional<Int>& h1M, const std::optional<Int>& degM, Int g,
                                       std::vector<std::string>& notes) {
  const bool derivable = degM && *degM >= 2 * g - 1;
  if (h1M) {
    if (derivable && *h1M != 0)
      throw PreconditionError("h1M = " + std::to_string(*h1M) + " contradicts deg M >= 2g - 1");
    return h1M;
  }
  if (derivable) {
    notes.push_back("h1(M) = 0 derived from deg M = " + std::to_string(*degM) + " >= 2g - 1 = " +
                    std::to_string(2 * g - 1));
    return Int(0);
  }
  return std::nullopt;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Main criterion for curves on Enriques surfaces

/// Surjectivity of Φ_{M,ω_C} for a general C ∈ |L|, L base-point free with
/// L² ≥ 4. Conditions (i)–(v) are tried in order; the first one satisfied
/// decides, and every satisfied one is listed in the notes.
inline GaussianVerdict check_main_theorem(const GaussianInput& in) {
  in.validate();
  if (!in.L2) throw PreconditionError("L2 is required");
  const Int l2 = *in.L2;
  if (l2 < 4 || l2 % 2 != 0) throw PreconditionError("L2 must be even and >= 4");
  const Int g = l2 / 2 + 1;
  if (in.g && *in.g != g) throw PreconditionError("g = " + std::to_string(*in.g) + " but L²/2 + 1 = " + std::to_string(g));

  GaussianVerdict v;
  v.inputs = in.echo();
  v.qualifiers.push_back("general member of |L|");
  if (in.phi && arith::mul(*in.phi, *in.phi) > l2) throw PreconditionError("phi² > L²");

  // On C ∈ |L| one has 2K_C = 2L|C, so h⁰(2L|C − M) is also h⁰(2K_C − M).
  std::optional<Int> h_2L = l2 >= 8 ? (in.h0_residual ? in.h0_residual : in.h0_2K_minus_M) : in.h0_2K_minus_M;
  if (l2 >= 8 && in.h0_residual && in.h0_2K_minus_M && *in.h0_residual != *in.h0_2K_minus_M)
    throw PreconditionError("h0_residual and h0_2K_minus_M both give h0(2L|C - M) but differ");
  const std::optional<Int> res = l2 >= 8 ? h_2L : in.h0_residual;
  if (l2 == 6) v.notes.push_back("(ii) uses the twist (3L + K_S)|C, numerically equal to 3L|C");

  std::vector<std::string> satisfied;
  std::vector<std::string> near;
  auto consider = [&](const std::string& id, bool applicable, std::optional<bool> ok, const std::string& why) {
    if (!applicable) {
      near.push_back(id + " needs " + why);
      return;
    }
    if (!ok) {
      near.push_back(id + " undecided: missing input");
      return;
    }
    if (*ok)
      satisfied.push_back(id);
    else
      near.push_back(id + " fails: " + why);
  };
  auto eq0 = [&](const std::optional<Int>& h) -> std::optional<bool> {
    if (!h) return std::nullopt;
    return *h == 0;
  };

  consider("(i)", l2 == 4, eq0(res), l2 == 4 ? "h0(4L|C - M) = 0" : "L² = 4");
  consider("(ii)", l2 == 6, eq0(res), l2 == 6 ? "h0((3L+K_S)|C - M) = 0" : "L² = 6");
  consider("(iii)", l2 >= 8, eq0(res), l2 >= 8 ? "h0(2L|C - M) = 0" : "L² >= 8");
  consider("(iv)", l2 >= 12, res ? std::optional<bool>(*res == 1) : std::nullopt,
           l2 >= 12 ? "h0(2L|C - M) = 1" : "L² >= 12");

  std::vector<std::string> derive_notes;
  const auto h1 = detail::effective_h1(in.h1M, in.degM, g, derive_notes);
  const bool v_applicable = l2 / 2 + 2 >= 6;
  std::optional<bool> v_ok;
  std::string v_why = "L²/2 + 2 >= 6";
  if (v_applicable) {
    v_why = "H1(M) = 0, deg M >= " + std::to_string(l2 / 2 + 2) + ", h0(2L|C - M) <= Cliff(C) - 2";
    if (h1 && *h1 != 0)
      v_ok = false;
    else if (in.degM && *in.degM < l2 / 2 + 2)
      v_ok = false;
    else if (h_2L && in.cliff && *h_2L > *in.cliff - 2)
      v_ok = false;
    else if (h1 && in.degM && h_2L && in.cliff)
      v_ok = true;
  }
  consider("(v)", v_applicable, v_ok, v_why);

  const bool branch_i_iv_decidable = res.has_value();
  const bool branch_v_decidable = v_ok.has_value();
  if (!branch_i_iv_decidable && !branch_v_decidable) {
    std::string need = "need h0_residual";
    if (v_applicable) need += ", or all of h1M (or deg M >= 2g-1), degM, h0(2L|C - M) and cliff for (v)";
    throw PreconditionError(need);
  }

  v.notes.insert(v.notes.end(), derive_notes.begin(), derive_notes.end());
  if (!satisfied.empty()) {
    v.status = VerdictStatus::Surjective;
    v.rule = satisfied.front();
    std::string all = "satisfied:";
    for (const auto& s : satisfied) all += " " + s;
    v.notes.push_back(all);
  } else {
    v.status = VerdictStatus::NoConclusion;
    v.rule = "none";
  }
  for (const auto& n : near) v.notes.push_back(n);
  return v;
}

// ---------------------------------------------------------------------------
// General curve criteria

/// Pure Clifford-index criterion: (i) Cliff = 2 and h⁰(2K − M) = 0, or
/// (ii) Cliff ≥ 3 and h⁰(2K − M) ≤ 1.
inline GaussianVerdict check_cliff_criterion(Int cliff, Int h0_2K_minus_M) {
  if (cliff < 2) throw PreconditionError("the Clifford criterion needs Cliff(C) >= 2");
  if (h0_2K_minus_M < 0) throw PreconditionError("h0 counts are >= 0");
  GaussianVerdict v;
  v.inputs = {{"cliff", cliff}, {"h0_2K_minus_M", h0_2K_minus_M}};
  if (cliff == 2 && h0_2K_minus_M == 0) {
    v.status = VerdictStatus::Surjective;
    v.rule = "cliff(i)";
  } else if (cliff >= 3 && h0_2K_minus_M <= 1) {
    v.status = VerdictStatus::Surjective;
    v.rule = "cliff(ii)";
  } else {
    v.rule = "none";
    v.notes.push_back(cliff == 2 ? "Cliff = 2 needs h0(2K - M) = 0" : "Cliff >= 3 needs h0(2K - M) <= 1");
  }
  return v;
}

/// H¹(M) = 0, deg M ≥ g + 1 and h⁰(2K − M) ≤ Cliff(C) − 2.
inline GaussianVerdict check_bel(Int g, Int degM, Int h1M, Int h0_2K_minus_M, Int cliff) {
  if (g < 4) throw PreconditionError("needs g >= 4");
  if (h1M < 0 || h0_2K_minus_M < 0 || cliff < 0) throw PreconditionError("counts must be >= 0");
  GaussianVerdict v;
  v.inputs = {{"g", g}, {"degM", degM}, {"h1M", h1M}, {"h0_2K_minus_M", h0_2K_minus_M}, {"cliff", cliff}};
  if (cliff > cliff_upper_bound(g))
    v.notes.push_back("Cliff = " + std::to_string(cliff) + " exceeds the bound " + std::to_string(cliff_upper_bound(g)));
  bool ok = true;
  if (h1M != 0) ok = false, v.notes.push_back("needs H1(M) = 0");
  if (degM < g + 1) ok = false, v.notes.push_back("needs deg M >= g + 1 = " + std::to_string(g + 1));
  if (h0_2K_minus_M > cliff - 2) ok = false, v.notes.push_back("needs h0(2K - M) <= Cliff - 2");
  v.status = ok ? VerdictStatus::Surjective : VerdictStatus::NoConclusion;
  v.rule = ok ? "bel2" : "none";
  return v;
}

/// Divisor form: D = P1 + ... + Pm with H¹(M − 2Pᵢ) = 0 for each i, h⁰(D) = 1,
/// h⁰(2K − M − D) = 0 and m ≤ Cliff(C) − 2.
inline GaussianVerdict check_bel_divisor(Int g, const std::vector<Int>& h1_M_minus_2P, Int h0_D,
                                         Int h0_2K_minus_M_minus_D, Int cliff) {
  if (g < 4) throw PreconditionError("needs g >= 4");
  const Int m = static_cast<Int>(h1_M_minus_2P.size());
  if (m < 1) throw PreconditionError("needs m >= 1 points");
  GaussianVerdict v;
  v.inputs = {{"g", g}, {"m", m}, {"h0_D", h0_D}, {"h0_2K_minus_M_minus_D", h0_2K_minus_M_minus_D}, {"cliff", cliff}};
  bool ok = true;
  for (Int i = 0; i < m; ++i)
    if (h1_M_minus_2P[static_cast<std::size_t>(i)] != 0)
      ok = false, v.notes.push_back("H1(M - 2P" + std::to_string(i + 1) + ") != 0");
  if (h0_D != 1) ok = false, v.notes.push_back("needs h0(D) = 1");
  if (h0_2K_minus_M_minus_D != 0) ok = false, v.notes.push_back("needs h0(2K - M - D) = 0");
  if (m > cliff - 2) ok = false, v.notes.push_back("needs m <= Cliff - 2");
  v.status = ok ? VerdictStatus::Surjective : VerdictStatus::NoConclusion;
  v.rule = ok ? "bel" : "none";
  return v;
}

enum class CurveType { General, PlaneQuintic, Trigonal, Nontrigonal };

namespace detail {
inline Int need(const GaussianInput& in, const std::string& key) {
  auto it = in.aux_h0.find(key);
  if (it == in.aux_h0.end()) throw PreconditionError("missing input h0(" + key + ")");
  return it->second;
}
inline Int need(const std::optional<Int>& v, const char* name) {
  if (!v) throw PreconditionError(std::string("missing input ") + name);
  return *v;
}
}  // namespace detail

/// Corank lower bounds on curves of low genus and on plane quintics and
/// trigonal curves. Negative formula values are clamped to 0.
inline GaussianVerdict corank_low_genus(Int g, const GaussianInput& in, CurveType type = CurveType::General) {
  in.validate();
  GaussianVerdict v;
  v.inputs = in.echo();
  v.inputs.insert(v.inputs.begin(), {"g", g});
  const bool h0_minus_M_zero = in.degM && *in.degM > 0;
  if (h0_minus_M_zero) v.notes.push_back("H0(-M) = 0 since deg M > 0");

  auto bound = [&](const std::string& rule, Int raw) {
    v.rule = rule;
    v.status = VerdictStatus::CorankBound;
    v.corank = raw < 0 ? 0 : raw;
    v.clamped = raw < 0;
    if (v.clamped) v.notes.push_back("formula gave " + std::to_string(raw) + "; clamped to 0");
    v.equality = h0_minus_M_zero;
    if (v.equality) v.notes.push_back("bound is an equality");
  };

  if (type == CurveType::PlaneQuintic) {
    if (g != 6) throw PreconditionError("a plane quintic has genus 6");
    const Int h5 = detail::need(in, "5A-M");
    if (h5 == 0) {
      v.status = VerdictStatus::Surjective;
      v.rule = "low(d)";
      return v;
    }
    std::vector<std::string> n;
    const auto h1 = detail::effective_h1(in.h1M, in.degM, g, n);
    v.notes.insert(v.notes.end(), n.begin(), n.end());
    if (detail::need(h1, "h1M") == 0 && detail::need(in.cork_mu, "cork_mu") == 0) {
      v.rule = "low(d)";
      v.status = VerdictStatus::CorankBound;
      v.corank = h5;
      auto it = in.aux_h0.find("4A-M");
      v.equality = it != in.aux_h0.end() && it->second <= 1;
      if (v.equality) v.notes.push_back("bound is an equality since h0(4A - M) <= 1");
    } else {
      v.rule = "none";
      v.notes.push_back("the bound needs H1(M) = 0 and mu surjective");
    }
    return v;
  }
  if (type == CurveType::Trigonal) {
    if (g < 5) throw PreconditionError("the trigonal branch needs g >= 5");
    const Int h3 = detail::need(in, "3K-(g-4)A-M");
    const std::optional<Int> h2 = in.h0_2K_minus_M;
    if (h3 == 0 && h2 && *h2 <= 1) {
      v.status = VerdictStatus::Surjective;
      v.rule = "low(e)";
      return v;
    }
    std::vector<std::string> n;
    const auto h1 = detail::effective_h1(in.h1M, in.degM, g, n);
    v.notes.insert(v.notes.end(), n.begin(), n.end());
    if (detail::need(h1, "h1M") == 0 && detail::need(in.cork_mu, "cork_mu") == 0) {
      v.rule = "low(e)";
      v.status = VerdictStatus::CorankBound;
      v.corank = h3;
      v.equality = h2 && *h2 <= 1;
      if (v.equality) v.notes.push_back("bound is an equality since h0(2K - M) <= 1");
    } else {
      v.rule = "none";
      v.notes.push_back("the bound needs H1(M) = 0 and mu surjective");
    }
    return v;
  }

  std::vector<std::string> n;
  const Int h1 = detail::need(detail::effective_h1(in.h1M, in.degM, g, n), "h1M");
  v.notes.insert(v.notes.end(), n.begin(), n.end());
  const Int cork = detail::need(in.cork_mu, "cork_mu");
  if (g == 3) {
    bound("low(a)", detail::need(in, "4K-M") - cork - 3 * h1);
  } else if (g == 4) {
    bound("low(b)", detail::need(in.h0_2K_minus_M, "h0_2K_minus_M") + detail::need(in, "3K-M") - cork - 4 * h1);
  } else if (g == 5) {
    if (type != CurveType::Nontrigonal) throw PreconditionError("the genus 5 formula needs a nontrigonal curve");
    bound("low(c)", 3 * detail::need(in.h0_2K_minus_M, "h0_2K_minus_M") - cork - 5 * h1);
  } else {
    throw PreconditionError("no low-genus formula for g = " + std::to_string(g) + " on this curve type");
  }
  return v;
}

struct DegreeFlags {
  bool plane_quintic = false;
  bool trigonal = false;
  /// M is the excluded bundle at the equality degree (5A, 3K − (g−4)A or 2K).
  bool m_eq_special = false;
};

/// Degree thresholds: plane quintic deg M ≥ 25 (M ≠ 5A at equality); trigonal
/// deg M ≥ max(4g − 6, 3g + 6) (M ≠ 3K − (g−4)A when g ≤ 12 at 3g + 6); other
/// curves of genus ≥ 5 deg M ≥ 4g − 4 (M ≠ 2K at equality).
inline GaussianVerdict check_degree_corollaries(Int g, Int degM, const DegreeFlags& f) {
  if (f.plane_quintic && f.trigonal) throw PreconditionError("a curve cannot be both a plane quintic and trigonal");
  if (g < 5) throw PreconditionError("needs g >= 5");
  GaussianVerdict v;
  v.inputs = {{"g", g}, {"degM", degM}, {"m_eq_special", f.m_eq_special ? 1 : 0}};
  Int threshold;
  bool excluded;
  if (f.plane_quintic) {
    if (g != 6) throw PreconditionError("a plane quintic has genus 6");
    threshold = 25;
    excluded = degM == 25 && f.m_eq_special;
    v.rule = "degree(plane quintic)";
  } else if (f.trigonal) {
    threshold = std::max(4 * g - 6, 3 * g + 6);
    excluded = g <= 12 && degM == 3 * g + 6 && f.m_eq_special;
    v.rule = "degree(trigonal)";
  } else {
    threshold = 4 * g - 4;
    excluded = degM == threshold && f.m_eq_special;
    v.rule = "degree(general)";
  }
  v.notes.push_back("threshold " + std::to_string(threshold));
  if (degM >= threshold && !excluded) {
    v.status = VerdictStatus::Surjective;
  } else {
    v.status = VerdictStatus::NoConclusion;
    v.notes.push_back(excluded ? "M is the excluded bundle at the equality degree" : "deg M is below the threshold");
    v.rule = "none";
  }
  return v;
}

/// Tetragonal criterion with b₂ = b_{2,A}: (i) h⁰(2K − M) ≤ 1 and
/// h⁰(2K − M − b₂A) = 0 give surjectivity; (ii) with H¹(M) = 0 and μ
/// surjective, cork ≥ h⁰(2K − M − b₂A), an equality when h⁰(2K − M) ≤ 1.
inline GaussianVerdict tetragonal_corank(Int h0_2K_minus_M, Int h0_2K_minus_M_minus_b2A, bool h1M_zero,
                                         bool mu_surjective) {
  if (h0_2K_minus_M < 0 || h0_2K_minus_M_minus_b2A < 0) throw PreconditionError("h0 counts are >= 0");
  GaussianVerdict v;
  v.inputs = {{"h0_2K_minus_M", h0_2K_minus_M},
              {"h0_2K_minus_M_minus_b2A", h0_2K_minus_M_minus_b2A},
              {"h1M_zero", h1M_zero ? 1 : 0},
              {"mu_surjective", mu_surjective ? 1 : 0}};
  if (h0_2K_minus_M <= 1 && h0_2K_minus_M_minus_b2A == 0) {
    v.status = VerdictStatus::Surjective;
    v.rule = "tetragonal(i)";
  } else if (h1M_zero && mu_surjective) {
    v.status = VerdictStatus::CorankBound;
    v.rule = "tetragonal(ii)";
    v.corank = h0_2K_minus_M_minus_b2A;
    v.equality = h0_2K_minus_M <= 1;
  } else {
    v.rule = "none";
  }
  return v;
}

struct B2Rule {
  bool b2_at_least_1;
  std::vector<std::string> qualifiers;
};

/// On an Enriques surface, L² ≥ 12 and φ(L) = 2 give b₂(C) ≥ 1 for general C ∈ |L|.
inline B2Rule b2_rule_enriques(Int l2, Int phi) {
  if (l2 < 4 || l2 % 2 != 0) throw PreconditionError("L2 must be even and >= 4");
  if (l2 >= 12 && phi == 2) return {true, {"general member of |L|"}};
  return {false, {}};
}

/// The tetragonal route for condition (iv): b₂ ≥ 1 and h⁰(2K − M) = 1 force
/// h⁰(2K − M − b₂A) = 0, then the tetragonal criterion applies.
inline GaussianVerdict chain_b2_tetragonal(Int l2, Int phi, Int h0_2K_minus_M) {
  GaussianVerdict v;
  const B2Rule b = b2_rule_enriques(l2, phi);
  if (!b.b2_at_least_1 || h0_2K_minus_M > 1) {
    v.rule = "none";
    v.notes.push_back(b.b2_at_least_1 ? "h0(2K - M) > 1" : "b2 >= 1 not available");
    return v;
  }
  v = tetragonal_corank(h0_2K_minus_M, 0, false, false);
  v.qualifiers = b.qualifiers;
  v.notes.push_back("b2 >= 1 from L² = " + std::to_string(l2) + ", phi = 2");
  return v;
}

}  // namespace divcalc
