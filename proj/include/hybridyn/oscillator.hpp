#ifndef HYBRIDYN_OSCILLATOR_HPP
#define HYBRIDYN_OSCILLATOR_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bracket.hpp"
#include "expr.hpp"
#include "report.hpp"

namespace hybridyn {

/// Quantum-classical harmonic oscillator: one classical and one quantum
/// particle coupled by a spring. Masses and coupling are formal parameters in
/// every symbolic expression; the numeric values here are used only for
/// evaluation (curves, figure data).
struct OscillatorModel {
  double m_C = 1;
  double m_Q = 1;
  double k = 1;
  unsigned classical_dof = 0;
  unsigned quantum_dof = 0;

  ParameterPoint<double> point(double hbar = 1) const {
    if (!(m_C > 0 && m_Q > 0 && k > 0)) throw std::invalid_argument("masses and coupling must be positive");
    return {m_C, m_Q, k, hbar};
  }

  HybridExpr xc() const { return x_C(classical_dof); }
  HybridExpr pc() const { return p_C(classical_dof); }
  HybridExpr xq() const { return x_Q(quantum_dof); }
  HybridExpr pq() const { return p_Q(quantum_dof); }
};

enum class Variable { x_C, p_C, x_Q, p_Q, X, P, x, p };

inline constexpr std::array<Variable, 8> all_variables{Variable::x_C, Variable::p_C, Variable::x_Q, Variable::p_Q,
                                                       Variable::X,   Variable::P,   Variable::x,   Variable::p};

inline const char* to_string(Variable v) {
  switch (v) {
    case Variable::x_C: return "x_C";
    case Variable::p_C: return "p_C";
    case Variable::x_Q: return "x_Q";
    case Variable::p_Q: return "p_Q";
    case Variable::X: return "X";
    case Variable::P: return "P";
    case Variable::x: return "x";
    case Variable::p: return "p";
  }
  return "?";
}

/// p_C²/2m_C + p_Q²/2m_Q + ½k(x_C − x_Q)²
inline HybridExpr hamiltonian(const OscillatorModel& model = {}) {
  const CoeffExpr half = CoeffExpr::rational(1, 2);
  const HybridExpr sep = model.xc() - model.xq();
  return (half * CoeffExpr::param(Param::m_C, -1)) * pow(model.pc(), 2) +
         (half * CoeffExpr::param(Param::m_Q, -1)) * pow(model.pq(), 2) +
         (half * CoeffExpr::param(Param::k)) * pow(sep, 2);
}

struct ComCoordinates {
  HybridExpr X, P, x, p;
};

struct ParticleCoordinates {
  HybridExpr x_C, p_C, x_Q, p_Q;
};

/// Center-of-mass and relative coordinates in terms of the particle generators.
inline ComCoordinates com_transform(const OscillatorModel& model = {}) {
  const CoeffExpr inv_M = CoeffExpr::param(Param::M, -1);
  const CoeffExpr mC = CoeffExpr::param(Param::m_C);
  const CoeffExpr mQ = CoeffExpr::param(Param::m_Q);
  return {(inv_M * mC) * model.xc() + (inv_M * mQ) * model.xq(), model.pc() + model.pq(), model.xc() - model.xq(),
          (inv_M * mQ) * model.pc() - (inv_M * mC) * model.pq()};
}

/// Particle coordinates recovered from center-of-mass ones.
inline ParticleCoordinates inverse_com_transform(const ComCoordinates& c) {
  const CoeffExpr inv_M = CoeffExpr::param(Param::M, -1);
  const CoeffExpr mC_M = CoeffExpr::param(Param::m_C) * inv_M;
  const CoeffExpr mQ_M = CoeffExpr::param(Param::m_Q) * inv_M;
  return {c.X + mQ_M * c.x, mC_M * c.P + c.p, c.X - mC_M * c.x, mQ_M * c.P - c.p};
}

/// The Hamiltonian in center-of-mass form P²/2M + p²/2m + ½kx², with the
/// coordinates substituted by their particle expressions.
inline HybridExpr hamiltonian_com_form(const OscillatorModel& model = {}) {
  const ComCoordinates c = com_transform(model);
  const CoeffExpr half = CoeffExpr::rational(1, 2);
  return (half * CoeffExpr::param(Param::M, -1)) * pow(c.P, 2) + (half * CoeffExpr::param(Param::m, -1)) * pow(c.p, 2) +
         (half * CoeffExpr::param(Param::k)) * pow(c.x, 2);
}

struct EvolvedVariable {
  Variable label;
  HybridExpr expression;  // over initial-time generators, time-dependent coefficients
};

namespace detail {

inline CoeffExpr cw() { return CoeffExpr::atom(TimeAtom::cos_wt); }
inline CoeffExpr sw() { return CoeffExpr::atom(TimeAtom::sin_wt); }
inline CoeffExpr tt() { return CoeffExpr::atom(TimeAtom::t); }
inline CoeffExpr P(Param p, int e = 1) { return CoeffExpr::param(p, e); }

/// Position/momentum solution of one particle. `own` is the particle being
/// evolved, `other` its partner; the classical solution and the quantum one
/// are related by exchanging the roles (and the masses).
struct ParticleSolution {
  HybridExpr position;
  HybridExpr momentum;
};

inline ParticleSolution particle_solution(const HybridExpr& x_own, const HybridExpr& p_own, Param m_own,
                                          const HybridExpr& x_other, const HybridExpr& p_other, Param m_other) {
  const CoeffExpr inv_M = P(Param::M, -1);
  const CoeffExpr one_minus_cos = CoeffExpr(1) - cw();
  // (m_own + m_other cos ωt)/M, written so that it is exactly 1 at t = 0
  const CoeffExpr direct = CoeffExpr(1) - P(m_other) * inv_M * one_minus_cos;
  const CoeffExpr m_w_sin = P(Param::m) * P(Param::w) * sw();

  HybridExpr position = direct * x_own +
                        (inv_M * tt() + P(m_other) * P(m_own, -1) * inv_M * P(Param::w, -1) * sw()) * p_own +
                        (P(m_other) * inv_M * one_minus_cos) * x_other +
                        (inv_M * tt() - inv_M * P(Param::w, -1) * sw()) * p_other;
  HybridExpr momentum = direct * p_own - m_w_sin * x_own + (P(m_own) * inv_M * one_minus_cos) * p_other +
                        m_w_sin * x_other;
  return {position, momentum};
}

}  // namespace detail

/// Closed-form Heisenberg solution of a variable in terms of the t = 0
/// generators.
inline EvolvedVariable evolve_closed_form(const OscillatorModel& model, Variable v) {
  using detail::P;
  const auto classical =
      detail::particle_solution(model.xc(), model.pc(), Param::m_C, model.xq(), model.pq(), Param::m_Q);
  const auto quantum =
      detail::particle_solution(model.xq(), model.pq(), Param::m_Q, model.xc(), model.pc(), Param::m_C);
  const ComCoordinates c0 = com_transform(model);
  const CoeffExpr cw = detail::cw();
  const CoeffExpr sw = detail::sw();

  switch (v) {
    case Variable::x_C: return {v, classical.position};
    case Variable::p_C: return {v, classical.momentum};
    case Variable::x_Q: return {v, quantum.position};
    case Variable::p_Q: return {v, quantum.momentum};
    case Variable::X: return {v, c0.X + (P(Param::M, -1) * detail::tt()) * c0.P};
    case Variable::P: return {v, c0.P};
    case Variable::x: return {v, cw * c0.x + (P(Param::m, -1) * P(Param::w, -1) * sw) * c0.p};
    case Variable::p: return {v, cw * c0.p - (P(Param::m) * P(Param::w) * sw) * c0.x};
  }
  throw std::invalid_argument("unknown variable");
}

/// The corresponding t = 0 expression of a variable.
inline HybridExpr initial_value(const OscillatorModel& model, Variable v) {
  const ComCoordinates c = com_transform(model);
  switch (v) {
    case Variable::x_C: return model.xc();
    case Variable::p_C: return model.pc();
    case Variable::x_Q: return model.xq();
    case Variable::p_Q: return model.pq();
    case Variable::X: return c.X;
    case Variable::P: return c.P;
    case Variable::x: return c.x;
    case Variable::p: return c.p;
  }
  throw std::invalid_argument("unknown variable");
}

/// [x_C(t), p_C(t)]/iħ as a scalar coefficient.
inline CoeffExpr commutator_curve(const OscillatorModel& model = {}) {
  const HybridExpr x = evolve_closed_form(model, Variable::x_C).expression;
  const HybridExpr p = evolve_closed_form(model, Variable::p_C).expression;
  return as_coefficient(detail::inverse_i_hbar() * commutator(x, p));
}

/// {x_C(t), p_C(t)} as a scalar coefficient.
inline CoeffExpr poisson_curve(const OscillatorModel& model = {}) {
  const HybridExpr x = evolve_closed_form(model, Variable::x_C).expression;
  const HybridExpr p = evolve_closed_form(model, Variable::p_C).expression;
  return as_coefficient(poisson(x, p));
}

enum class Particle { classical, quantum };

/// Defect {[x(t), p(t)]} − 1 for the evolved pair of one particle.
inline CheckReport hybrid_canonical_check(const OscillatorModel& model, const Scheme& s,
                                          Particle which = Particle::classical) {
  const bool c = which == Particle::classical;
  const HybridExpr x = evolve_closed_form(model, c ? Variable::x_C : Variable::x_Q).expression;
  const HybridExpr p = evolve_closed_form(model, c ? Variable::p_C : Variable::p_Q).expression;
  return make_report(c ? "hybrid-canonical(x_C,p_C)" : "hybrid-canonical(x_Q,p_Q)", {x, p}, s,
                     hybrid_bracket(x, p, s) - HybridExpr(1));
}

struct TimeGrid {
  double start = -8;
  double stop = 8;
  unsigned count = 401;

  double at(unsigned i) const { return start + (stop - start) * static_cast<double>(i) / static_cast<double>(count - 1); }
};

/// Parses "t0:t1:n" with n ≥ 2.
inline TimeGrid parse_grid(std::string_view text) {
  const auto c1 = text.find(':');
  const auto c2 = c1 == std::string_view::npos ? c1 : text.find(':', c1 + 1);
  if (c2 == std::string_view::npos) throw std::invalid_argument("grid must be t0:t1:n");
  TimeGrid g;
  try {
    std::size_t used = 0;
    const std::string a(text.substr(0, c1)), b(text.substr(c1 + 1, c2 - c1 - 1)), n(text.substr(c2 + 1));
    g.start = std::stod(a, &used);
    if (used != a.size()) throw std::invalid_argument(a);
    g.stop = std::stod(b, &used);
    if (used != b.size()) throw std::invalid_argument(b);
    const long count = std::stol(n, &used);
    if (used != n.size() || count < 2) throw std::invalid_argument(n);
    g.count = static_cast<unsigned>(count);
  } catch (const std::exception&) {
    throw std::invalid_argument("invalid grid '" + std::string(text) + "': expected t0:t1:n with n >= 2");
  }
  return g;
}

struct CurveRow {
  double t;
  double commutator;
  double poisson;
};

inline std::vector<CurveRow> curve_rows(const OscillatorModel& model, const TimeGrid& grid) {
  const CoeffExpr cc = commutator_curve(model);
  const CoeffExpr pc = poisson_curve(model);
  const auto point = model.point();
  std::vector<CurveRow> rows;
  for (unsigned i = 0; i < grid.count; ++i) {
    const double t = grid.at(i);
    rows.push_back({t, cc.evaluate(point, t).real(), pc.evaluate(point, t).real()});
  }
  return rows;
}

struct FigureRow {
  double t;
  double value;
  double m_C;
};

/// Commutator curve for several classical masses (m_Q = k = 1 by default).
inline std::vector<FigureRow> figure_rows(const std::vector<double>& masses, const TimeGrid& grid = {},
                                          double m_Q = 1, double k = 1) {
  const CoeffExpr cc = commutator_curve();
  std::vector<FigureRow> rows;
  for (double mc : masses) {
    const auto point = OscillatorModel{mc, m_Q, k}.point();
    for (unsigned i = 0; i < grid.count; ++i) {
      const double t = grid.at(i);
      rows.push_back({t, cc.evaluate(point, t).real(), mc});
    }
  }
  return rows;
}

}  // namespace hybridyn

#endif
