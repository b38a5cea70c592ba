#ifndef HYBRIDYN_RATIONAL_HPP
#define HYBRIDYN_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>

namespace hybridyn {

using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q{mpz_class(num), mpz_class(den)};
  q.canonicalize();
  return q;
}

/// Parses "p", "p/q", "-p/q" or a finite decimal such as "0.25".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  auto fail = [&] { throw std::invalid_argument("not a rational: '" + s + "'"); };
  if (s.empty()) fail();
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    if (s.find('/') != std::string::npos) fail();
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac = s.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+") fail();
    Rational q;
    if (q.get_num().set_str(digits[0] == '+' ? digits.substr(1) : digits, 10) != 0) fail();
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac);
    q.get_den() = den;
    q.canonicalize();
    return q;
  }
  Rational q;
  if (q.set_str(s[0] == '+' ? s.substr(1) : s, 10) != 0) fail();
  if (q.get_den() == 0) fail();
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

template <typename Real>
Real to_real(const Rational& q) {
  if constexpr (std::is_floating_point_v<Real>) {
    return static_cast<Real>(q.get_d());
  } else {
    return Real(q.get_num().get_str()) / Real(q.get_den().get_str());
  }
}

/// Exact complex rational re + im·i.
class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(Rational re, Rational im = 0) : re_(std::move(re)), im_(std::move(im)) {}
  Gaussian(long re) : re_(re) {}

  static Gaussian imaginary_unit() { return {0, 1}; }

  const Rational& real() const { return re_; }
  const Rational& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Gaussian conj() const { return {re_, -im_}; }

  Gaussian inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
  }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    Rational im = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    im_ = std::move(im);
    return *this;
  }

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator-(const Gaussian& a) { return {-a.re_, -a.im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

}  // namespace hybridyn

#endif
