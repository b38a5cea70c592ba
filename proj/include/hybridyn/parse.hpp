#ifndef HYBRIDYN_PARSE_HPP
#define HYBRIDYN_PARSE_HPP

#include <cctype>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bracket.hpp"
#include "print.hpp"

// Expression language:
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] nat)?         negative powers only for scalars
//   atom   := number ['/' number] | 'i' | 'hbar' | 't' | param | generator
//           | func '(' args ')' | '(' expr ')'
//   generator := ('x_C'|'p_C'|'x_Q'|'p_Q') ('[' nat ']')?
//   param  := 'm_C'|'m_Q'|'k'|'M'|'m'|'w'
//   func   := 'cos'|'sin' (argument w*t) | 'comm'|'pb'|'sigma'|'star'|'hb'

namespace hybridyn {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t line, std::size_t column)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) + ": " + msg),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

namespace detail {

class Parser {
 public:
  Parser(std::string_view src, std::optional<Scheme> scheme) : src_(src), scheme_(std::move(scheme)) {}

  HybridExpr parse() {
    HybridExpr e = expr();
    skip_ws();
    if (pos_ < src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }

  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < at && i < src_.size(); ++i) {
      if (src_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, line, col);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < src_.size() && src_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string nat() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return std::string(src_.substr(start, pos_ - start));
  }

  std::string identifier() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < src_.size() && (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_')) ++pos_;
    return std::string(src_.substr(start, pos_ - start));
  }

  HybridExpr expr() {
    HybridExpr sum;
    bool negative = false;
    if (accept('-'))
      negative = true;
    else
      accept('+');
    for (;;) {
      HybridExpr t = term();
      sum = negative ? sum - t : sum + t;
      if (accept('+'))
        negative = false;
      else if (accept('-'))
        negative = true;
      else
        return sum;
    }
  }

  HybridExpr term() {
    HybridExpr prod = factor();
    while (accept('*')) prod = prod * factor();
    return prod;
  }

  HybridExpr factor() {
    const std::size_t start = (skip_ws(), pos_);
    HybridExpr base = atom();
    if (!accept('^')) return base;
    const bool negative = accept('-');
    const long n = std::stol(nat());
    if (!negative) return pow(base, static_cast<unsigned>(n));
    if (!is_scalar(base)) fail_at("negative power of a non-scalar expression", start);
    try {
      return as_coefficient(base).pow(static_cast<int>(-n));
    } catch (const std::domain_error& e) {
      fail_at(e.what(), start);
    }
  }

  std::vector<HybridExpr> arguments(std::size_t count, const std::string& name) {
    expect('(');
    std::vector<HybridExpr> args;
    args.push_back(expr());
    while (accept(',')) args.push_back(expr());
    expect(')');
    if (args.size() != count) fail(name + " takes " + std::to_string(count) + " arguments");
    return args;
  }

  const Scheme& require_scheme(const std::string& name, std::size_t at) const {
    if (!scheme_) fail_at("'" + name + "' requires a scheme in scope", at);
    return *scheme_;
  }

  HybridExpr atom() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of input");
    const char c = src_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (accept('(')) {
      HybridExpr e = expr();
      expect(')');
      return e;
    }
    const std::size_t start = pos_;
    const std::string id = identifier();
    if (id.empty()) fail("unexpected '" + std::string(1, c) + "'");

    if (id == "i") return CoeffExpr::imaginary();
    if (id == "hbar") return scalar(Param::hbar);
    if (id == "t") return CoeffExpr::atom(TimeAtom::t);
    if (id == "m_C") return scalar(Param::m_C);
    if (id == "m_Q") return scalar(Param::m_Q);
    if (id == "k") return scalar(Param::k);
    if (id == "M") return scalar(Param::M);
    if (id == "m") return scalar(Param::m);
    if (id == "w") return scalar(Param::w);
    if (id == "x_C" || id == "p_C" || id == "x_Q" || id == "p_Q") {
      unsigned dof = 0;
      if (accept('[')) {
        dof = static_cast<unsigned>(std::stoul(nat()));
        expect(']');
      }
      const Sector s = id[2] == 'C' ? Sector::classical : Sector::quantum;
      const Conjugate k = id[0] == 'x' ? Conjugate::position : Conjugate::momentum;
      return HybridExpr::generator({s, k, dof});
    }
    if (id == "cos" || id == "sin") {
      const auto args = arguments(1, id);
      if (args[0] != scalar(Param::w) * CoeffExpr::atom(TimeAtom::t))
        fail_at(id + " only accepts the argument w*t", start);
      return CoeffExpr::atom(id == "cos" ? TimeAtom::cos_wt : TimeAtom::sin_wt);
    }
    if (id == "comm") {
      const auto a = arguments(2, id);
      return commutator(a[0], a[1]);
    }
    if (id == "pb") {
      const auto a = arguments(2, id);
      return poisson(a[0], a[1]);
    }
    if (id == "sigma" || id == "star" || id == "hb") {
      const Scheme& s = require_scheme(id, start);
      const auto a = arguments(2, id);
      if (id == "sigma") return sigma(a[0], a[1], s);
      if (id == "star") return star(a[0], a[1], s);
      return hybrid_bracket(a[0], a[1], s);
    }
    fail_at("unknown identifier " + id, start);
  }

  HybridExpr number() {
    std::string text = nat();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      text += "." + nat();
    } else if (accept('/')) {
      text += "/" + nat();
      if (parse_rational(text.substr(text.find('/') + 1)) == 0) fail("zero denominator");
    }
    return CoeffExpr(Gaussian(parse_rational(text)));
  }

  std::string_view src_;
  std::optional<Scheme> scheme_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses and normalizes an expression. sigma/star/hb need a scheme.
inline HybridExpr parse(std::string_view src, std::optional<Scheme> scheme = std::nullopt) {
  return detail::Parser(src, std::move(scheme)).parse();
}

}  // namespace hybridyn

#endif
