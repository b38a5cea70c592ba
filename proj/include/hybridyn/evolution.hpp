#ifndef HYBRIDYN_EVOLUTION_HPP
#define HYBRIDYN_EVOLUTION_HPP

#include <stdexcept>
#include <string>
#include <utility>

#include "bracket.hpp"
#include "print.hpp"

namespace hybridyn {

struct EomResult {
  HybridExpr variable;
  HybridExpr hamiltonian;
  Scheme scheme;
  HybridExpr derivative;
};

/// dA/dt = {[A, H]} for a time-independent A.
inline EomResult derive_eom(const HybridExpr& a, const HybridExpr& h, const Scheme& s) {
  return {a, h, s, hybrid_bracket(a, h, s)};
}

/// Time derivative of a pure variable from its own sector's bracket alone.
inline HybridExpr pure_derivative(const HybridExpr& a, const HybridExpr& h) {
  if (is_pure_classical(a)) return poisson(a, h);
  if (is_pure_quantum(a)) return detail::inverse_i_hbar() * commutator(a, h);
  throw NotPureError("pure_derivative: argument is not pure: " + to_string(a));
}

/// Non-canonical: the two product-rule guesses for d(ηC ηQ)/dt, kept in the
/// written factor orders and not normalized. Not an equation of motion.
struct NaiveDerivatives {
  static constexpr bool canonical = false;
  HybridExpr first;   // (dηC/dt) ηQ + ηC (dηQ/dt)
  HybridExpr second;  // ηQ (dηC/dt) + ηC (dηQ/dt)
};

inline NaiveDerivatives naive_derivatives(const HybridExpr& eta_c, const HybridExpr& eta_q, const HybridExpr& h) {
  if (!is_pure_classical(eta_c)) throw NotPureError("naive_derivatives: classical factor is not pure: " + to_string(eta_c));
  if (!is_pure_quantum(eta_q)) throw NotPureError("naive_derivatives: quantum factor is not pure: " + to_string(eta_q));
  const HybridExpr dc = pure_derivative(eta_c, h);
  const HybridExpr dq = pure_derivative(eta_q, h);
  const HybridExpr tail = mul_unnormalized(eta_c, dq);
  HybridExpr first = mul_unnormalized(dc, eta_q);
  HybridExpr second = mul_unnormalized(eta_q, dc);
  for (const auto& [key, c] : tail.terms()) {
    first.add_term(key, c);
    second.add_term(key, c);
  }
  return {std::move(first), std::move(second)};
}

inline std::string to_string(const NaiveDerivatives& n) {
  return "[non-canonical] ordering 1: " + to_string(n.first) + "\n[non-canonical] ordering 2: " + to_string(n.second);
}

/// Symmetrized naive derivative minus the bracket derivative of ηC ηQ.
inline HybridExpr naive_defect(const HybridExpr& eta_c, const HybridExpr& eta_q, const HybridExpr& h,
                               const Scheme& s) {
  const NaiveDerivatives n = naive_derivatives(eta_c, eta_q, h);
  const HybridExpr symmetrized = CoeffExpr::rational(1, 2) * (normalize(n.first) + normalize(n.second));
  return symmetrized - derive_eom(eta_c * eta_q, h, s).derivative;
}

/// Σ_{n ≤ order} tⁿ/n! adⁿ A with ad = {[·, H]}.
inline HybridExpr lie_series(const HybridExpr& a, const HybridExpr& h, const Scheme& s, unsigned order = 8) {
  HybridExpr term = normalize(a);
  HybridExpr sum = term;
  mpz_class factorial = 1;
  for (unsigned n = 1; n <= order; ++n) {
    term = hybrid_bracket(term, h, s);
    if (term.is_zero()) break;
    factorial *= n;
    const CoeffExpr weight = CoeffExpr(Gaussian(Rational(mpz_class(1), factorial))) * CoeffExpr::atom(TimeAtom::t, n);
    sum += weight * term;
  }
  return sum;
}

}  // namespace hybridyn

#endif
