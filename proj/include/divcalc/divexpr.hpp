#pragma once

// Divisor expressions: signed integer combinations of labels such as
// "6H-2G1-2G2", "-2K" or "3E + 2E1".

#include <cctype>
#include <map>
#include <string>
#include <vector>

#include "divcalc/surface.hpp"

namespace divcalc {

struct DivTerm {
  Int coefficient;
  std::string label;
  std::size_t position;  // offset of the term in the source
};

struct DivExpr {
  std::string source;
  std::vector<DivTerm> terms;

  /// Coefficients summed per label; zero entries dropped.
  std::map<std::string, Int> coefficients() const {
    std::map<std::string, Int> out;
    for (const auto& t : terms) out[t.label] = arith::add(out[t.label], t.coefficient);
    for (auto it = out.begin(); it != out.end();) it = it->second == 0 ? out.erase(it) : std::next(it);
    return out;
  }
};

/// Grammar: [sign] term (sign term)*, term = [digits] ['*'] identifier, or the
/// literal 0. Identifiers start with a letter and continue with letters,
/// digits or '_'. Whitespace is ignored between tokens.
inline DivExpr parse_divexpr(const std::string& s) {
  DivExpr e{s, {}};
  std::size_t i = 0;
  auto skip = [&] {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  };
  skip();
  if (i == s.size()) throw ParseError("empty divisor expression", i);
  bool first = true;
  while (true) {
    skip();
    if (i == s.size()) {
      if (first) throw ParseError("empty divisor expression", i);
      throw ParseError("expected a term after the sign", i);
    }
    const std::size_t start = i;
    Int sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      sign = s[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw ParseError("expected '+' or '-'", i);
    }
    bool has_number = false;
    Int number = 0;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      has_number = true;
      number = arith::add(arith::mul(number, 10), s[i] - '0');
      ++i;
    }
    skip();
    if (has_number && i < s.size() && s[i] == '*') {
      ++i;
      skip();
      if (i == s.size() || !std::isalpha(static_cast<unsigned char>(s[i])))
        throw ParseError("expected a label after '*'", i);
    }
    std::string label;
    if (i < s.size() && std::isalpha(static_cast<unsigned char>(s[i]))) {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) label += s[i++];
    }
    if (label.empty()) {
      if (!has_number) throw ParseError("expected a coefficient or a label", i);
      if (number != 0) throw ParseError("constant term " + std::to_string(number) + " is not a divisor class", start);
    } else {
      e.terms.push_back({arith::mul(sign, has_number ? number : 1), label, start});
    }
    first = false;
    skip();
    if (i == s.size()) break;
  }
  return e;
}

/// Canonical text of the coefficient map, e.g. "6H-2G1-2G2", or "0".
inline std::string render(const DivExpr& e) {
  std::string out;
  for (const auto& [label, c] : e.coefficients()) {
    if (c < 0)
      out += '-';
    else if (!out.empty())
      out += '+';
    Int mag = c < 0 ? -c : c;
    if (mag != 1) out += std::to_string(mag);
    out += label;
  }
  return out.empty() ? "0" : out;
}

/// Evaluate against a surface's basis labels and special classes.
inline DivClass resolve(const DivExpr& e, const SurfaceKind& s) {
  DivClass out = DivClass::zero(s.model);
  for (const auto& t : e.terms) {
    DivClass c = DivClass::zero(s.model);
    try {
      c = s.lookup(t.label);
    } catch (const NotFound&) {
      throw ParseError("unknown label '" + t.label + "' on surface '" + s.name + "'", t.position);
    }
    out = out + c * t.coefficient;
  }
  return out;
}

inline DivClass parse_class(const std::string& text, const SurfaceKind& s) { return resolve(parse_divexpr(text), s); }

}  // namespace divcalc
