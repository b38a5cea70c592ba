#ifndef HYBRIDYN_BRACKET_HPP
#define HYBRIDYN_BRACKET_HPP

#include <set>
#include <stdexcept>
#include <string>

#include "expr.hpp"
#include "report.hpp"
#include "scheme.hpp"

namespace hybridyn {

class NotPureError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {

inline std::set<unsigned> shared_classical_dofs(const HybridExpr& a, const HybridExpr& b) {
  std::set<unsigned> s = classical_dofs(a);
  for (unsigned i : classical_dofs(b)) s.insert(i);
  return s;
}

inline HybridExpr dx(const HybridExpr& e, unsigned dof) { return d_classical(e, classical_position(dof)); }
inline HybridExpr dp(const HybridExpr& e, unsigned dof) { return d_classical(e, classical_momentum(dof)); }

inline CoeffExpr rational_coeff(const Rational& q) { return Gaussian(q); }

/// 1/(iħ) = -i ħ^-1
inline CoeffExpr inverse_i_hbar() { return CoeffExpr::i_hbar().inverse(); }

}  // namespace detail

/// [a, b] = ab - ba, not divided by iħ.
inline HybridExpr commutator(const HybridExpr& a, const HybridExpr& b) { return a * b - b * a; }

/// Σ_i ∂a/∂x_C[i] ∂b/∂p_C[i] - ∂a/∂p_C[i] ∂b/∂x_C[i], first-argument
/// derivative on the left.
inline HybridExpr poisson(const HybridExpr& a, const HybridExpr& b) {
  HybridExpr r;
  for (unsigned i : detail::shared_classical_dofs(a, b))
    r += detail::dx(a, i) * detail::dp(b, i) - detail::dp(a, i) * detail::dx(b, i);
  return r;
}

/// a ∂A/∂x ∂B/∂x + b ∂A/∂p ∂B/∂p + c (∂A/∂x ∂B/∂p + ∂A/∂p ∂B/∂x), summed
/// over classical DOFs with shared constants; factors in written order.
inline HybridExpr sigma(const HybridExpr& a, const HybridExpr& b, const Scheme& s) {
  HybridExpr r;
  for (unsigned i : detail::shared_classical_dofs(a, b)) {
    const HybridExpr ax = detail::dx(a, i), ap = detail::dp(a, i);
    const HybridExpr bx = detail::dx(b, i), bp = detail::dp(b, i);
    if (sgn(s.a) != 0) r += detail::rational_coeff(s.a) * (ax * bx);
    if (sgn(s.b) != 0) r += detail::rational_coeff(s.b) * (ap * bp);
    if (sgn(s.c) != 0) r += detail::rational_coeff(s.c) * (ax * bp + ap * bx);
  }
  return r;
}

/// Hybrid composition product a⊛b = ab + (iħ/2)[{a,b} + σ(a,b)].
inline HybridExpr star(const HybridExpr& a, const HybridExpr& b, const Scheme& s) {
  const CoeffExpr half_i_hbar = CoeffExpr::rational(1, 2) * CoeffExpr::i_hbar();
  return a * b + half_i_hbar * (poisson(a, b) + sigma(a, b, s));
}

/// {[a, b]} = (a⊛b - b⊛a)/iħ.
inline HybridExpr hybrid_bracket(const HybridExpr& a, const HybridExpr& b, const Scheme& s) {
  return detail::inverse_i_hbar() * (star(a, b, s) - star(b, a, s));
}

/// [a,b]/iħ + ½({a,b} - {b,a}) + ½(σ(a,b) - σ(b,a)).
inline HybridExpr hybrid_bracket_expanded(const HybridExpr& a, const HybridExpr& b, const Scheme& s) {
  const CoeffExpr half = CoeffExpr::rational(1, 2);
  return detail::inverse_i_hbar() * commutator(a, b) + half * (poisson(a, b) - poisson(b, a)) +
         half * (sigma(a, b, s) - sigma(b, a, s));
}

/// Compares {[a, b]} with the pure bracket it must reduce to. b may be an
/// additive hybrid, in which case the pure brackets of its two sectors are
/// summed (bilinearity).
inline CheckReport reduce_check(const HybridExpr& a, const HybridExpr& b, const Scheme& s) {
  if (!is_additive(b)) throw NotPureError("reduce_check: argument is not pure: " + to_string(b));
  const SectorSplit split = split_sectors(b);
  const HybridExpr pure = poisson(a, split.classical) + detail::inverse_i_hbar() * commutator(a, split.quantum);
  return make_report("reduction", {a, b}, s, hybrid_bracket(a, b, s) - pure);
}

}  // namespace hybridyn

#endif
