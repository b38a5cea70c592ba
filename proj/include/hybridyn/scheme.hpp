#ifndef HYBRIDYN_SCHEME_HPP
#define HYBRIDYN_SCHEME_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rational.hpp"

namespace hybridyn {

/// Constants (a, b, c) of the σ-operation, i.e. the quantization recipe
/// used on the classical sector. (0,0,0) is Weyl ordering, (1,1,0) the
/// anti-normal (Husimi) parameterization.
struct Scheme {
  Rational a{0};
  Rational b{0};
  Rational c{0};

  static Scheme weyl() { return {0, 0, 0}; }
  static Scheme husimi() { return {1, 1, 0}; }

  std::string triple() const { return a.get_str() + "," + b.get_str() + "," + c.get_str(); }

  std::string name() const {
    if (*this == weyl()) return "weyl";
    if (*this == husimi()) return "husimi";
    return triple();
  }

  friend bool operator==(const Scheme& x, const Scheme& y) { return x.a == y.a && x.b == y.b && x.c == y.c; }
};

inline std::array<Scheme, 3> preset_schemes() { return {Scheme::weyl(), Scheme::husimi(), Scheme{0, 0, 1}}; }

/// Accepts "weyl", "husimi" or a triple "a,b,c" of rationals.
inline Scheme parse_scheme(std::string_view text) {
  if (text == "weyl") return Scheme::weyl();
  if (text == "husimi") return Scheme::husimi();
  std::array<Rational, 3> v;
  std::size_t start = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    const std::size_t comma = text.find(',', start);
    if ((i < 2) != (comma != std::string_view::npos))
      throw std::invalid_argument("scheme must be 'weyl', 'husimi' or 'a,b,c': '" + std::string(text) + "'");
    std::string_view part = text.substr(start, i < 2 ? comma - start : std::string_view::npos);
    while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
    while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
    v[i] = parse_rational(part);
    start = comma + 1;
  }
  return {v[0], v[1], v[2]};
}

}  // namespace hybridyn

#endif
