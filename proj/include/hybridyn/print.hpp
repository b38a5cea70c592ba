#ifndef HYBRIDYN_PRINT_HPP
#define HYBRIDYN_PRINT_HPP

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "expr.hpp"

// Canonical ASCII text form. Everything printed here parses back to the
// same normalized expression.

namespace hybridyn {

inline const char* param_name(Param p) {
  switch (p) {
    case Param::m_C: return "m_C";
    case Param::m_Q: return "m_Q";
    case Param::k: return "k";
    case Param::hbar: return "hbar";
    case Param::M: return "M";
    case Param::m: return "m";
    case Param::w: return "w";
  }
  return "?";
}

inline const char* time_atom_name(TimeAtom a) {
  switch (a) {
    case TimeAtom::t: return "t";
    case TimeAtom::cos_wt: return "cos(w*t)";
    case TimeAtom::sin_wt: return "sin(w*t)";
  }
  return "?";
}

inline std::string to_string(const Generator& g) {
  std::string s = g.kind == Conjugate::position ? "x_" : "p_";
  s += g.is_classical() ? "C" : "Q";
  if (g.dof != 0) s += "[" + std::to_string(g.dof) + "]";
  return s;
}

namespace detail {

struct SignedText {
  bool negative = false;
  std::string body;  // empty means 1
};

inline std::string join_factors(const std::string& a, const std::string& b) {
  if (a.empty()) return b;
  if (b.empty()) return a;
  return a + "*" + b;
}

inline std::string with_power(const std::string& base, int exponent) {
  return exponent == 1 ? base : base + "^" + std::to_string(exponent);
}

inline std::string rational_factor(const Rational& q) {
  // q > 0; 1 is elided by the caller.
  if (q.get_den() == 1) return q.get_num().get_str();
  return "(" + q.get_str() + ")";
}

inline SignedText gaussian_text(const Gaussian& g) {
  if (g.is_real()) {
    Rational a = abs(g.real());
    return {sgn(g.real()) < 0, a == 1 ? "" : rational_factor(a)};
  }
  if (sgn(g.real()) == 0) {
    Rational a = abs(g.imag());
    return {sgn(g.imag()) < 0, a == 1 ? "i" : rational_factor(a) + "*i"};
  }
  Rational b = abs(g.imag());
  std::string im = b == 1 ? "i" : rational_factor(b) + "*i";
  return {false, "(" + g.real().get_str() + (sgn(g.imag()) < 0 ? " - " : " + ") + im + ")"};
}

inline SignedText coeff_term_text(const CoeffKey& key, const Gaussian& value) {
  SignedText s = gaussian_text(value);
  static constexpr Param order[] = {Param::hbar, Param::m_C, Param::m_Q, Param::k, Param::M, Param::m, Param::w};
  for (Param p : order)
    if (int e = key.param(p); e != 0) s.body = join_factors(s.body, with_power(param_name(p), e));
  for (std::size_t a = 0; a < num_time_atoms; ++a)
    if (unsigned e = key.time[a]; e != 0)
      s.body = join_factors(s.body, with_power(time_atom_name(static_cast<TimeAtom>(a)), static_cast<int>(e)));
  return s;
}

inline std::string generator_text(const TermKey& key) {
  std::string s;
  for (const auto& [g, e] : key.monomial.factors()) s = join_factors(s, with_power(to_string(g), static_cast<int>(e)));
  const auto& w = key.word.generators();
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    s = join_factors(s, with_power(to_string(w[i]), static_cast<int>(j - i)));
    i = j;
  }
  return s;
}

inline std::string join_sum(const std::vector<SignedText>& parts) {
  if (parts.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const std::string body = parts[i].body.empty() ? "1" : parts[i].body;
    if (i == 0)
      out = (parts[i].negative ? "-" : "") + body;
    else
      out += (parts[i].negative ? " - " : " + ") + body;
  }
  return out;
}

}  // namespace detail

inline std::string to_string(const CoeffExpr& c) {
  std::vector<detail::SignedText> parts;
  for (const auto& [key, value] : c.terms()) parts.push_back(detail::coeff_term_text(key, value));
  return detail::join_sum(parts);
}

inline std::string to_string(const HybridExpr& e) {
  std::vector<detail::SignedText> parts;
  for (const auto& [key, c] : e.terms()) {
    const std::string gens = detail::generator_text(key);
    if (c.size() == 1 || gens.empty()) {
      for (const auto& [ck, cv] : c.terms()) {
        detail::SignedText s = detail::coeff_term_text(ck, cv);
        s.body = detail::join_factors(s.body, gens);
        parts.push_back(std::move(s));
      }
    } else {
      parts.push_back({false, "(" + to_string(c) + ")*" + gens});
    }
  }
  return detail::join_sum(parts);
}

inline std::ostream& operator<<(std::ostream& os, const CoeffExpr& c) { return os << to_string(c); }
inline std::ostream& operator<<(std::ostream& os, const HybridExpr& e) { return os << to_string(e); }

}  // namespace hybridyn

#endif
