#ifndef HYBRIDYN_GENERATOR_HPP
#define HYBRIDYN_GENERATOR_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace hybridyn {

enum class Sector : unsigned char { classical, quantum };
enum class Conjugate : unsigned char { position, momentum };

/// One of x_C[i], p_C[i], x_Q[i], p_Q[i].
struct Generator {
  Sector sector{Sector::classical};
  Conjugate kind{Conjugate::position};
  unsigned dof{0};

  bool is_quantum() const { return sector == Sector::quantum; }
  bool is_classical() const { return sector == Sector::classical; }

  // Sector first, then DOF, then position before momentum: exactly the
  // normal order of quantum words.
  friend auto operator<=>(const Generator& a, const Generator& b) {
    if (auto c = a.sector <=> b.sector; c != 0) return c;
    if (auto c = a.dof <=> b.dof; c != 0) return c;
    return a.kind <=> b.kind;
  }
  friend bool operator==(const Generator&, const Generator&) = default;
};

inline Generator classical_position(unsigned dof = 0) { return {Sector::classical, Conjugate::position, dof}; }
inline Generator classical_momentum(unsigned dof = 0) { return {Sector::classical, Conjugate::momentum, dof}; }
inline Generator quantum_position(unsigned dof = 0) { return {Sector::quantum, Conjugate::position, dof}; }
inline Generator quantum_momentum(unsigned dof = 0) { return {Sector::quantum, Conjugate::momentum, dof}; }

/// Commuting product of classical generators; the empty monomial is 1.
class ClassicalMonomial {
 public:
  using Factor = std::pair<Generator, unsigned>;

  ClassicalMonomial() = default;
  explicit ClassicalMonomial(Generator g, unsigned exponent = 1) {
    if (exponent > 0) factors_.emplace_back(g, exponent);
  }

  const std::vector<Factor>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }

  unsigned exponent(const Generator& g) const {
    for (const auto& [h, e] : factors_)
      if (h == g) return e;
    return 0;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& f : factors_) d += f.second;
    return d;
  }

  /// Same monomial with the exponent of g changed by delta.
  ClassicalMonomial shifted(const Generator& g, int delta) const {
    ClassicalMonomial r;
    bool seen = false;
    for (const auto& [h, e] : factors_) {
      if (h == g) {
        seen = true;
        const int ne = static_cast<int>(e) + delta;
        if (ne > 0) r.factors_.emplace_back(h, static_cast<unsigned>(ne));
      } else {
        r.factors_.emplace_back(h, e);
      }
    }
    if (!seen && delta > 0) {
      r.factors_.emplace_back(g, static_cast<unsigned>(delta));
      std::sort(r.factors_.begin(), r.factors_.end());
    }
    return r;
  }

  friend ClassicalMonomial operator*(const ClassicalMonomial& a, const ClassicalMonomial& b) {
    ClassicalMonomial r;
    auto i = a.factors_.begin();
    auto j = b.factors_.begin();
    while (i != a.factors_.end() || j != b.factors_.end()) {
      if (j == b.factors_.end() || (i != a.factors_.end() && i->first < j->first)) {
        r.factors_.push_back(*i++);
      } else if (i == a.factors_.end() || j->first < i->first) {
        r.factors_.push_back(*j++);
      } else {
        r.factors_.emplace_back(i->first, i->second + j->second);
        ++i;
        ++j;
      }
    }
    return r;
  }

  friend auto operator<=>(const ClassicalMonomial&, const ClassicalMonomial&) = default;
  friend bool operator==(const ClassicalMonomial&, const ClassicalMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Ordered product of quantum generators.
class QuantumWord {
 public:
  QuantumWord() = default;
  explicit QuantumWord(std::vector<Generator> gens) : gens_(std::move(gens)) {}

  const std::vector<Generator>& generators() const { return gens_; }
  std::size_t size() const { return gens_.size(); }
  bool empty() const { return gens_.empty(); }

  bool is_normal() const { return std::is_sorted(gens_.begin(), gens_.end()); }

  friend QuantumWord operator*(const QuantumWord& a, const QuantumWord& b) {
    std::vector<Generator> g = a.gens_;
    g.insert(g.end(), b.gens_.begin(), b.gens_.end());
    return QuantumWord(std::move(g));
  }

  friend auto operator<=>(const QuantumWord&, const QuantumWord&) = default;
  friend bool operator==(const QuantumWord&, const QuantumWord&) = default;

 private:
  std::vector<Generator> gens_;
};

namespace detail {

/// Normal word as per-DOF exponents x^a p^b, DOFs ascending.
struct DofPower {
  unsigned dof;
  unsigned x;
  unsigned p;
};
using NormalWord = std::vector<DofPower>;

inline NormalWord to_normal_word(const QuantumWord& w) {
  NormalWord r;
  for (const auto& g : w.generators()) {
    if (r.empty() || r.back().dof != g.dof) r.push_back({g.dof, 0, 0});
    (g.kind == Conjugate::position ? r.back().x : r.back().p) += 1;
  }
  return r;
}

inline QuantumWord from_normal_word(const NormalWord& w) {
  std::vector<Generator> g;
  for (const auto& d : w) {
    g.insert(g.end(), d.x, quantum_position(d.dof));
    g.insert(g.end(), d.p, quantum_momentum(d.dof));
  }
  return QuantumWord(std::move(g));
}

/// A term of a normal-ordering expansion: factor · ħ^hbar_power · word.
struct NormalTerm {
  Gaussian factor;
  int hbar_power;
  NormalWord word;
};

inline mpz_class binomial(unsigned n, unsigned k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// (x^a p^b)(x^c p^d) = Σ_j j! C(b,j) C(c,j) (-iħ)^j x^(a+c-j) p^(b+d-j).
inline std::vector<NormalTerm> single_dof_product(const DofPower& u, const DofPower& v) {
  std::vector<NormalTerm> r;
  const unsigned jmax = std::min(u.p, v.x);
  mpz_class fact = 1;
  for (unsigned j = 0; j <= jmax; ++j) {
    if (j > 0) fact *= j;
    mpz_class n = fact * binomial(u.p, j) * binomial(v.x, j);
    // (-i)^j
    Gaussian phase = (j % 4 == 0) ? Gaussian(1) : (j % 4 == 1) ? Gaussian(0, -1) : (j % 4 == 2) ? Gaussian(-1) : Gaussian(0, 1);
    Gaussian c = phase * Gaussian(Rational(n));
    NormalWord w;
    DofPower d{u.dof, u.x + v.x - j, u.p + v.p - j};
    if (d.x + d.p > 0) w.push_back(d);
    r.push_back({std::move(c), static_cast<int>(j), std::move(w)});
  }
  return r;
}

/// Product of two normal words, re-expanded in normal order.
inline std::vector<NormalTerm> normal_product(const NormalWord& a, const NormalWord& b) {
  std::vector<NormalTerm> acc{{Gaussian(1), 0, {}}};
  auto extend = [&acc](const std::vector<NormalTerm>& part) {
    std::vector<NormalTerm> next;
    next.reserve(acc.size() * part.size());
    for (const auto& x : acc) {
      for (const auto& y : part) {
        NormalWord w = x.word;
        w.insert(w.end(), y.word.begin(), y.word.end());
        next.push_back({x.factor * y.factor, x.hbar_power + y.hbar_power, std::move(w)});
      }
    }
    acc = std::move(next);
  };
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() || j != b.end()) {
    if (j == b.end() || (i != a.end() && i->dof < j->dof)) {
      extend({{Gaussian(1), 0, {*i++}}});
    } else if (i == a.end() || j->dof < i->dof) {
      extend({{Gaussian(1), 0, {*j++}}});
    } else {
      extend(single_dof_product(*i++, *j++));
    }
  }
  return acc;
}

}  // namespace detail

}  // namespace hybridyn

#endif
