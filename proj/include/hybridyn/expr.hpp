#ifndef HYBRIDYN_EXPR_HPP
#define HYBRIDYN_EXPR_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "generator.hpp"

namespace hybridyn {

/// (classical monomial, quantum word) pair identifying a term. Terms sort by
/// descending total degree so printed sums lead with the highest powers and
/// end with the constant.
struct TermKey {
  ClassicalMonomial monomial;
  QuantumWord word;

  unsigned degree() const { return monomial.degree() + static_cast<unsigned>(word.size()); }
  bool is_scalar() const { return monomial.empty() && word.empty(); }

  friend bool operator==(const TermKey&, const TermKey&) = default;
  friend bool operator<(const TermKey& a, const TermKey& b) {
    const unsigned da = a.degree();
    const unsigned db = b.degree();
    if (da != db) return da > db;
    if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
    if (a.monomial != b.monomial) return a.monomial < b.monomial;
    return a.word < b.word;
  }
};

/// Finite sum of coefficient × classical monomial × quantum word. Every
/// arithmetic operation returns a normalized expression; only the raw
/// constructors can hold words out of normal order.
class HybridExpr {
 public:
  using container_type = std::map<TermKey, CoeffExpr>;

  HybridExpr() = default;
  HybridExpr(CoeffExpr c) { add_term({}, std::move(c)); }
  HybridExpr(long c) : HybridExpr(CoeffExpr(c)) {}

  static HybridExpr generator(const Generator& g) {
    HybridExpr e;
    if (g.is_classical())
      e.add_term({ClassicalMonomial(g), {}}, CoeffExpr(1));
    else
      e.add_term({{}, QuantumWord({g})}, CoeffExpr(1));
    return e;
  }

  /// A single term whose word is kept exactly as given (not normalized).
  static HybridExpr raw_term(CoeffExpr c, ClassicalMonomial m, QuantumWord w) {
    HybridExpr e;
    e.add_term({std::move(m), std::move(w)}, std::move(c));
    return e;
  }

  const container_type& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_normal() const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [](const auto& t) { return t.first.word.is_normal(); });
  }

  void add_term(const TermKey& key, CoeffExpr c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  friend bool operator==(const HybridExpr&, const HybridExpr&) = default;

 private:
  container_type terms_;
};

namespace detail {

inline void accumulate_normal_product(HybridExpr& out, const CoeffExpr& c, const ClassicalMonomial& m,
                                      const NormalWord& a, const NormalWord& b) {
  for (auto& t : normal_product(a, b)) {
    CoeffKey key;
    key.params[static_cast<std::size_t>(Param::hbar)] = t.hbar_power;
    out.add_term({m, from_normal_word(t.word)}, c * CoeffExpr(key, t.factor));
  }
}

}  // namespace detail

/// Rewrites every word into normal order using p_Q x_Q = x_Q p_Q - iħ per DOF.
inline HybridExpr normalize(const HybridExpr& e) {
  if (e.is_normal()) return e;
  HybridExpr out;
  for (const auto& [key, c] : e.terms()) {
    if (key.word.is_normal()) {
      out.add_term(key, c);
      continue;
    }
    // Fold the word generator by generator from the left.
    HybridExpr partial = HybridExpr::raw_term(c, key.monomial, {});
    for (const auto& g : key.word.generators()) {
      HybridExpr next;
      const detail::NormalWord single{{g.dof, g.kind == Conjugate::position ? 1u : 0u,
                                       g.kind == Conjugate::momentum ? 1u : 0u}};
      for (const auto& [pk, pc] : partial.terms())
        detail::accumulate_normal_product(next, pc, pk.monomial, detail::to_normal_word(pk.word), single);
      partial = std::move(next);
    }
    for (const auto& [pk, pc] : partial.terms()) out.add_term(pk, pc);
  }
  return out;
}

inline HybridExpr operator+(const HybridExpr& a, const HybridExpr& b) {
  HybridExpr r = normalize(a);
  for (const HybridExpr nb = normalize(b); const auto& [key, c] : nb.terms()) r.add_term(key, c);
  return r;
}

inline HybridExpr operator-(const HybridExpr& a) {
  HybridExpr r;
  for (const HybridExpr na = normalize(a); const auto& [key, c] : na.terms()) r.add_term(key, -c);
  return r;
}

inline HybridExpr operator-(const HybridExpr& a, const HybridExpr& b) { return a + (-b); }

inline HybridExpr operator*(const HybridExpr& a, const HybridExpr& b) {
  const HybridExpr na = normalize(a);
  const HybridExpr nb = normalize(b);
  HybridExpr r;
  for (const auto& [ka, ca] : na.terms()) {
    const detail::NormalWord wa = detail::to_normal_word(ka.word);
    for (const auto& [kb, cb] : nb.terms())
      detail::accumulate_normal_product(r, ca * cb, ka.monomial * kb.monomial, wa, detail::to_normal_word(kb.word));
  }
  return r;
}

inline HybridExpr operator*(const CoeffExpr& c, const HybridExpr& e) {
  HybridExpr r;
  if (c.is_zero()) return r;
  for (const HybridExpr ne = normalize(e); const auto& [key, ec] : ne.terms()) r.add_term(key, c * ec);
  return r;
}

inline HybridExpr& operator+=(HybridExpr& a, const HybridExpr& b) { return a = a + b; }
inline HybridExpr& operator-=(HybridExpr& a, const HybridExpr& b) { return a = a - b; }
inline HybridExpr& operator*=(HybridExpr& a, const HybridExpr& b) { return a = a * b; }

inline HybridExpr add(const HybridExpr& a, const HybridExpr& b) { return a + b; }
inline HybridExpr mul(const HybridExpr& a, const HybridExpr& b) { return a * b; }

/// Written-order product without rewriting to normal order.
inline HybridExpr mul_unnormalized(const HybridExpr& a, const HybridExpr& b) {
  HybridExpr r;
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms()) r.add_term({ka.monomial * kb.monomial, ka.word * kb.word}, ca * cb);
  return r;
}

inline HybridExpr pow(const HybridExpr& e, unsigned n) {
  HybridExpr r(1);
  for (unsigned i = 0; i < n; ++i) r = r * e;
  return r;
}

/// Formal ∂/∂g for a classical generator g; quantum words and coefficients
/// are constants.
inline HybridExpr d_classical(const HybridExpr& e, const Generator& g) {
  if (!g.is_classical()) throw std::invalid_argument("d_classical: generator must be classical");
  HybridExpr r;
  for (const HybridExpr ne = normalize(e); const auto& [key, c] : ne.terms()) {
    const unsigned n = key.monomial.exponent(g);
    if (n == 0) continue;
    r.add_term({key.monomial.shifted(g, -1), key.word}, CoeffExpr(static_cast<long>(n)) * c);
  }
  return r;
}

inline HybridExpr map_coefficients(const HybridExpr& e, const std::function<CoeffExpr(const CoeffExpr&)>& f) {
  HybridExpr r;
  for (const auto& [key, c] : e.terms()) r.add_term(key, f(c));
  return r;
}

inline HybridExpr d_time(const HybridExpr& e) {
  return map_coefficients(normalize(e), [](const CoeffExpr& c) { return d_time(c); });
}

inline HybridExpr at_time_zero(const HybridExpr& e) {
  return map_coefficients(normalize(e), [](const CoeffExpr& c) { return at_time_zero(c); });
}

// ---- sector structure ------------------------------------------------------

inline bool is_scalar(const HybridExpr& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.is_scalar(); });
}

/// The scalar value of an expression containing no generators.
inline CoeffExpr as_coefficient(const HybridExpr& e) {
  if (!is_scalar(e)) throw std::invalid_argument("expression is not a scalar");
  return e.is_zero() ? CoeffExpr() : e.terms().begin()->second;
}

inline bool is_pure_classical(const HybridExpr& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.word.empty(); });
}

inline bool is_pure_quantum(const HybridExpr& e) {
  return std::all_of(e.terms().begin(), e.terms().end(), [](const auto& t) { return t.first.monomial.empty(); });
}

inline bool is_pure(const HybridExpr& e) { return is_pure_classical(e) || is_pure_quantum(e); }

/// True when every term is pure (a sum of pure classical and pure quantum parts).
inline bool is_additive(const HybridExpr& e) {
  return std::all_of(e.terms().begin(), e.terms().end(),
                     [](const auto& t) { return t.first.monomial.empty() || t.first.word.empty(); });
}

struct SectorSplit {
  HybridExpr classical;  // includes the scalar part
  HybridExpr quantum;
};

inline SectorSplit split_sectors(const HybridExpr& e) {
  if (!is_additive(e)) throw std::invalid_argument("expression mixes sectors within a term");
  SectorSplit s;
  for (const HybridExpr ne = normalize(e); const auto& [key, c] : ne.terms()) (key.word.empty() ? s.classical : s.quantum).add_term(key, c);
  return s;
}

inline unsigned quantum_degree(const HybridExpr& e) {
  std::size_t d = 0;
  for (const auto& t : e.terms()) d = std::max(d, t.first.word.size());
  return static_cast<unsigned>(d);
}

inline unsigned total_degree(const HybridExpr& e) {
  unsigned d = 0;
  for (const auto& t : e.terms()) d = std::max(d, t.first.degree());
  return d;
}

inline std::set<unsigned> classical_dofs(const HybridExpr& e) {
  std::set<unsigned> s;
  for (const auto& t : e.terms())
    for (const auto& f : t.first.monomial.factors()) s.insert(f.first.dof);
  return s;
}

inline std::set<unsigned> quantum_dofs(const HybridExpr& e) {
  std::set<unsigned> s;
  for (const auto& t : e.terms())
    for (const auto& g : t.first.word.generators()) s.insert(g.dof);
  return s;
}

inline std::size_t total_terms(const std::vector<HybridExpr>& es) {
  std::size_t n = 0;
  for (const auto& e : es) n += e.size();
  return n;
}

// ---- shorthand constructors -----------------------------------------------

inline HybridExpr x_C(unsigned dof = 0) { return HybridExpr::generator(classical_position(dof)); }
inline HybridExpr p_C(unsigned dof = 0) { return HybridExpr::generator(classical_momentum(dof)); }
inline HybridExpr x_Q(unsigned dof = 0) { return HybridExpr::generator(quantum_position(dof)); }
inline HybridExpr p_Q(unsigned dof = 0) { return HybridExpr::generator(quantum_momentum(dof)); }
inline HybridExpr scalar(Param p, int exponent = 1) { return CoeffExpr::param(p, exponent); }
inline HybridExpr i_hbar() { return CoeffExpr::i_hbar(); }

}  // namespace hybridyn

#endif
