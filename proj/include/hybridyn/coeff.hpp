#ifndef HYBRIDYN_COEFF_HPP
#define HYBRIDYN_COEFF_HPP

#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hybridyn {

/// Formal scalar parameters. M, m and w (ω) are independent symbols; their
/// relations to m_C, m_Q, k are only imposed by ParameterPoint.
enum class Param : std::size_t { m_C, m_Q, k, hbar, M, m, w };
inline constexpr std::size_t num_params = 7;

/// Time atoms t, cos(ωt), sin(ωt).
enum class TimeAtom : std::size_t { t, cos_wt, sin_wt };
inline constexpr std::size_t num_time_atoms = 3;

struct CoeffKey {
  std::array<int, num_params> params{};
  std::array<unsigned, num_time_atoms> time{};

  int param(Param p) const { return params[static_cast<std::size_t>(p)]; }
  unsigned atom(TimeAtom a) const { return time[static_cast<std::size_t>(a)]; }
  bool has_time() const { return time[0] != 0 || time[1] != 0 || time[2] != 0; }

  friend auto operator<=>(const CoeffKey&, const CoeffKey&) = default;
};

inline CoeffKey operator*(const CoeffKey& a, const CoeffKey& b) {
  CoeffKey r;
  for (std::size_t i = 0; i < num_params; ++i) r.params[i] = a.params[i] + b.params[i];
  for (std::size_t i = 0; i < num_time_atoms; ++i) r.time[i] = a.time[i] + b.time[i];
  return r;
}

template <typename Real>
struct ComplexValue {
  Real re{0};
  Real im{0};
};

/// Numeric binding of the physical parameters; the derived M, m, ω follow
/// M = m_C + m_Q, m = m_C m_Q / M, ω = sqrt(k / m).
template <typename Real = double>
struct ParameterPoint {
  Real m_C{1};
  Real m_Q{1};
  Real k{1};
  Real hbar{1};

  Real total_mass() const { return m_C + m_Q; }
  Real reduced_mass() const { return m_C * m_Q / (m_C + m_Q); }
  Real omega() const {
    using std::sqrt;
    return sqrt(k / reduced_mass());
  }

  std::array<Real, num_params> values() const {
    return {m_C, m_Q, k, hbar, total_mass(), reduced_mass(), omega()};
  }
};

namespace detail {
template <typename Real>
Real ipow(const Real& x, int n) {
  Real r(1);
  Real b = n < 0 ? Real(1) / x : x;
  unsigned e = static_cast<unsigned>(n < 0 ? -n : n);
  while (e) {
    if (e & 1u) r *= b;
    b *= b;
    e >>= 1u;
  }
  return r;
}
}  // namespace detail

/// Commutative scalar: a finite sum of Gaussian-rational multiples of
/// parameter monomials times time-atom monomials. Zero is the empty sum.
class CoeffExpr {
 public:
  using container_type = std::map<CoeffKey, Gaussian>;

  CoeffExpr() = default;
  CoeffExpr(Gaussian c) { add_term({}, std::move(c)); }
  CoeffExpr(long c) : CoeffExpr(Gaussian(c)) {}
  CoeffExpr(const CoeffKey& key, Gaussian c) { add_term(key, std::move(c)); }

  static CoeffExpr rational(long num, long den = 1) { return Gaussian(make_rational(num, den)); }
  static CoeffExpr imaginary() { return Gaussian::imaginary_unit(); }
  static CoeffExpr param(Param p, int exponent = 1) {
    CoeffKey key;
    key.params[static_cast<std::size_t>(p)] = exponent;
    return {key, Gaussian(1)};
  }
  static CoeffExpr atom(TimeAtom a, unsigned exponent = 1) {
    CoeffKey key;
    key.time[static_cast<std::size_t>(a)] = exponent;
    return {key, Gaussian(1)};
  }
  /// iħ
  static CoeffExpr i_hbar() { return CoeffExpr(param(Param::hbar)) * imaginary(); }

  const container_type& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_number() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == CoeffKey{}); }
  bool is_time_independent() const {
    for (const auto& [key, c] : terms_)
      if (key.has_time()) return false;
    return true;
  }
  Gaussian number() const {
    if (!is_number()) throw std::logic_error("coefficient is not a plain number");
    return terms_.empty() ? Gaussian() : terms_.begin()->second;
  }

  void add_term(const CoeffKey& key, Gaussian c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, std::move(c));
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  CoeffExpr& operator+=(const CoeffExpr& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, c);
    return *this;
  }
  CoeffExpr& operator-=(const CoeffExpr& o) {
    for (const auto& [key, c] : o.terms_) add_term(key, -c);
    return *this;
  }
  friend CoeffExpr operator+(CoeffExpr a, const CoeffExpr& b) { return a += b; }
  friend CoeffExpr operator-(CoeffExpr a, const CoeffExpr& b) { return a -= b; }
  friend CoeffExpr operator-(const CoeffExpr& a) {
    CoeffExpr r;
    for (const auto& [key, c] : a.terms_) r.terms_.emplace(key, -c);
    return r;
  }
  friend CoeffExpr operator*(const CoeffExpr& a, const CoeffExpr& b) {
    CoeffExpr r;
    for (const auto& [ka, ca] : a.terms_)
      for (const auto& [kb, cb] : b.terms_) r.add_term(ka * kb, ca * cb);
    return r;
  }
  CoeffExpr& operator*=(const CoeffExpr& o) { return *this = *this * o; }

  friend bool operator==(const CoeffExpr&, const CoeffExpr&) = default;

  /// Inverse of a single-term coefficient; sums have no inverse in this algebra.
  CoeffExpr inverse() const {
    if (terms_.size() != 1) throw std::domain_error("only a single-term coefficient can be inverted");
    const auto& [key, c] = *terms_.begin();
    if (key.has_time()) throw std::domain_error("time atoms cannot be inverted");
    CoeffKey inv;
    for (std::size_t i = 0; i < num_params; ++i) inv.params[i] = -key.params[i];
    return {inv, c.inverse()};
  }

  CoeffExpr pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    CoeffExpr r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
  }

  template <typename Real>
  ComplexValue<Real> evaluate_parts(const ParameterPoint<Real>& point, const Real& t) const {
    using std::cos;
    using std::sin;
    const auto values = point.values();
    const Real wt = values[static_cast<std::size_t>(Param::w)] * t;
    const std::array<Real, num_time_atoms> atoms{t, cos(wt), sin(wt)};
    ComplexValue<Real> sum;
    for (const auto& [key, c] : terms_) {
      Real f(1);
      for (std::size_t i = 0; i < num_params; ++i)
        if (key.params[i] != 0) f *= detail::ipow(values[i], key.params[i]);
      for (std::size_t i = 0; i < num_time_atoms; ++i)
        if (key.time[i] != 0) f *= detail::ipow(atoms[i], static_cast<int>(key.time[i]));
      sum.re += to_real<Real>(c.real()) * f;
      sum.im += to_real<Real>(c.imag()) * f;
    }
    return sum;
  }

  std::complex<double> evaluate(const ParameterPoint<double>& point, double t) const {
    auto v = evaluate_parts(point, t);
    return {v.re + 0.0, v.im + 0.0};
  }

 private:
  container_type terms_;
};

/// d/dt in the closed time-atom algebra.
inline CoeffExpr d_time(const CoeffExpr& c) {
  CoeffExpr r;
  for (const auto& [key, value] : c.terms()) {
    for (std::size_t a = 0; a < num_time_atoms; ++a) {
      const unsigned e = key.time[a];
      if (e == 0) continue;
      CoeffKey k = key;
      k.time[a] -= 1;
      Gaussian factor = value * Gaussian(static_cast<long>(e));
      switch (static_cast<TimeAtom>(a)) {
        case TimeAtom::t:
          break;
        case TimeAtom::cos_wt:  // -ω sin
          k.params[static_cast<std::size_t>(Param::w)] += 1;
          k.time[static_cast<std::size_t>(TimeAtom::sin_wt)] += 1;
          factor = -factor;
          break;
        case TimeAtom::sin_wt:  // ω cos
          k.params[static_cast<std::size_t>(Param::w)] += 1;
          k.time[static_cast<std::size_t>(TimeAtom::cos_wt)] += 1;
          break;
      }
      r.add_term(k, std::move(factor));
    }
  }
  return r;
}

/// Structural substitution t = 0 (cos → 1, sin → 0).
inline CoeffExpr at_time_zero(const CoeffExpr& c) {
  CoeffExpr r;
  for (const auto& [key, value] : c.terms()) {
    if (key.atom(TimeAtom::t) != 0 || key.atom(TimeAtom::sin_wt) != 0) continue;
    CoeffKey k = key;
    k.time = {};
    r.add_term(k, value);
  }
  return r;
}

/// Structural substitution t → -t.
inline CoeffExpr time_reversed(const CoeffExpr& c) {
  CoeffExpr r;
  for (const auto& [key, value] : c.terms()) {
    const bool odd = ((key.atom(TimeAtom::t) + key.atom(TimeAtom::sin_wt)) & 1u) != 0;
    r.add_term(key, odd ? -value : value);
  }
  return r;
}

/// Taylor polynomial in t through t^order, obtained by expanding cos(ωt) and
/// sin(ωt) into their power series.
inline CoeffExpr taylor_polynomial(const CoeffExpr& c, unsigned order) {
  using Series = std::vector<CoeffExpr>;  // index = power of t
  auto multiply = [order](const Series& a, const Series& b) {
    Series r(order + 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; i + j <= order && j < b.size(); ++j)
        if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
    return r;
  };
  auto trig_series = [order](bool sine) {
    Series s(order + 1);
    mpz_class factorial = 1;
    for (unsigned n = 0; n <= order; ++n) {
      if (n > 0) factorial *= n;
      if ((n % 2 == 1) != sine) continue;
      const long sign = ((n / 2) % 2 == 0) ? 1 : -1;
      Rational q{mpz_class(sign), factorial};
      s[n] = CoeffExpr(Gaussian(q)) * CoeffExpr::param(Param::w, static_cast<int>(n));
    }
    return s;
  };
  const Series cos_s = trig_series(false);
  const Series sin_s = trig_series(true);

  CoeffExpr result;
  for (const auto& [key, value] : c.terms()) {
    CoeffKey base = key;
    base.time = {};
    Series s(order + 1);
    s[0] = CoeffExpr(base, value);
    for (unsigned i = 0; i < key.atom(TimeAtom::cos_wt); ++i) s = multiply(s, cos_s);
    for (unsigned i = 0; i < key.atom(TimeAtom::sin_wt); ++i) s = multiply(s, sin_s);
    const unsigned shift = key.atom(TimeAtom::t);
    for (unsigned n = 0; n + shift <= order; ++n)
      if (!s[n].is_zero()) result += s[n] * CoeffExpr::atom(TimeAtom::t, n + shift);
  }
  return result;
}

/// Coefficient of t^n in a polynomial in t (time-atom free apart from t).
inline CoeffExpr t_power_coefficient(const CoeffExpr& c, unsigned n) {
  CoeffExpr r;
  for (const auto& [key, value] : c.terms()) {
    if (key.atom(TimeAtom::cos_wt) != 0 || key.atom(TimeAtom::sin_wt) != 0)
      throw std::invalid_argument("t_power_coefficient expects a polynomial in t");
    if (key.atom(TimeAtom::t) != n) continue;
    CoeffKey k = key;
    k.time = {};
    r.add_term(k, value);
  }
  return r;
}

}  // namespace hybridyn

#endif
