// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <sys/wait.h>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hybridyn/cli.hpp"
#include "hybridyn/hybridyn.hpp"

using namespace hybridyn;

namespace {

using Real50 = boost::multiprecision::cpp_bin_float_50;

CoeffExpr par(Param p, int e = 1) { return CoeffExpr::param(p, e); }
CoeffExpr cw() { return CoeffExpr::atom(TimeAtom::cos_wt); }
CoeffExpr sw() { return CoeffExpr::atom(TimeAtom::sin_wt); }
CoeffExpr wt() { return par(Param::w) * CoeffExpr::atom(TimeAtom::t); }

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

/// (m/M)(2 − 2cos ωt − ωt sin ωt)
CoeffExpr commutator_law() {
  return par(Param::m) * par(Param::M, -1) * (CoeffExpr(2) - CoeffExpr(2) * cw() - wt() * sw());
}

/// (m_C + m_Q cos ωt)²/M² + (m/(m_C M)) sin ωt (m_C ωt + m_Q sin ωt)
CoeffExpr poisson_law() {
  const CoeffExpr direct = par(Param::m_C) + par(Param::m_Q) * cw();
  return par(Param::M, -2) * direct * direct +
         par(Param::m) * par(Param::m_C, -1) * par(Param::M, -1) * sw() * (par(Param::m_C) * wt() + par(Param::m_Q) * sw());
}

/// k[(x_Q p_Q + p_Q x_Q)/2 − x_C p_Q − x_Q p_C + x_C p_C + iħc/2]
HybridExpr eta_dot(const Rational& c) {
  const CoeffExpr half = CoeffExpr::rational(1, 2);
  return par(Param::k) * (half * (x_Q() * p_Q() + p_Q() * x_Q()) - x_C() * p_Q() - x_Q() * p_C() + x_C() * p_C() +
                          half * CoeffExpr::i_hbar() * CoeffExpr(Gaussian(c)));
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

int run_binary(const std::string& args) {
  const int raw = std::system((std::string(HYBRIDYN_CLI) + " " + args + " >/dev/null 2>&1").c_str());
  return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

// ---- criteria --------------------------------------------------------------

Outcome commutator_curve_law() {
  const double r = coefficient_residual(commutator_curve(), commutator_law(), 1000, default_seed);
  return {r < 1e-9, "max residual " + fmt("%.3e", r) + " over 1000 samples (tol 1e-9)"};
}

Outcome poisson_curve_law() {
  const CoeffExpr pc = poisson_curve();
  const double r = coefficient_residual(pc, poisson_law(), 1000, default_seed);
  const bool unit = at_time_zero(pc) == CoeffExpr(1);
  return {r < 1e-9 && unit, "max residual " + fmt("%.3e", r) + " over 1000 samples; value at t=0: " +
                                to_string(at_time_zero(pc))};
}

Outcome hybrid_canonical() {
  double worst = 0;
  bool ok = true;
  for (const Scheme& s : preset_schemes()) {
    const CheckReport r = hybrid_canonical_check(OscillatorModel{}, s, Particle::classical);
    const auto cmp = compare_semantic(r.defect, HybridExpr(), 32, 1e-12);
    worst = std::max(worst, cmp.max_residual);
    ok = ok && cmp.equal;
  }
  return {ok, "max residual " + fmt("%.3e", worst) + " over weyl, husimi, 0,0,1 (tol 1e-12)"};
}

Outcome eom_consistency() {
  const OscillatorModel model;
  const HybridExpr h = hamiltonian(model);
  double worst = 0;
  bool ok = true;
  for (const Scheme& s : preset_schemes())
    for (Variable v : all_variables) {
      const HybridExpr a = evolve_closed_form(model, v).expression;
      const auto cmp = compare_semantic(d_time(a), hybrid_bracket(a, h, s), 32, 1e-9);
      worst = std::max(worst, cmp.max_residual);
      ok = ok && cmp.equal;
    }
  return {ok, "8 variables x 3 schemes, max residual " + fmt("%.3e", worst) + " (tol 1e-9)"};
}

Outcome eta_dot_reproduction() {
  const HybridExpr eta = p_C() * p_Q();
  const HybridExpr h = hamiltonian();
  bool structural = true;
  for (long a : {0L, 1L, -2L})
    for (long b : {0L, 1L, 3L})
      for (long c : {0L, 1L, 2L, -1L}) {
        const Scheme s{make_rational(a), make_rational(b), make_rational(c)};
        structural = structural && derive_eom(eta, h, s).derivative == eta_dot(make_rational(c));
      }
  bool difference = true;
  for (long c1 : {0L, 1L, 2L})
    for (long c2 : {0L, 1L, -3L}) {
      const HybridExpr d = derive_eom(eta, h, {0, 0, make_rational(c1)}).derivative -
                           derive_eom(eta, h, {0, 0, make_rational(c2)}).derivative;
      difference = difference && d == CoeffExpr::rational(c1 - c2, 2) * CoeffExpr::i_hbar() * par(Param::k) * HybridExpr(1);
    }
  const HybridExpr d0 = naive_defect(p_C(), p_Q(), h, {0, 0, 0});
  const HybridExpr d1 = naive_defect(p_C(), p_Q(), h, {0, 0, 1});
  const bool naive = d0.is_zero() && d1 == CoeffExpr::rational(-1, 2) * CoeffExpr::i_hbar() * par(Param::k) * HybridExpr(1);
  return {structural && difference && naive, std::string("structural ") + (structural ? "yes" : "no") +
                                                  "; c-difference " + (difference ? "yes" : "no") +
                                                  "; naive defect c=0: " + to_string(d0) + ", c=1: " + to_string(d1)};
}

Outcome bracket_forms() {
  unsigned mismatches = 0;
  for (const Scheme& s : preset_schemes())
    for (unsigned i = 0; i < 200; ++i) {
      RandomExprGenerator gen(default_seed + 31ull * i, {3, 3, 3, 1, 3});
      const HybridExpr a = gen.hybrid(), b = gen.hybrid();
      if (hybrid_bracket(a, b, s) != hybrid_bracket_expanded(a, b, s)) ++mismatches;
    }
  return {mismatches == 0, std::to_string(mismatches) + " structural mismatches over 3 x 200 pairs"};
}

Outcome reduction_bilinearity() {
  std::size_t checks = 0, nonzero = 0;
  for (const Scheme& s : preset_schemes()) {
    const SuiteResult r = run_suite(Suite::reduction, {s, default_seed, 40});
    for (const auto& c : r.checks) {
      ++checks;
      if (!c.report.defect.is_zero()) ++nonzero;
    }
    const CoeffExpr lambda = CoeffExpr::rational(2, 3) * par(Param::k);
    for (unsigned i = 0; i < 40; ++i) {
      RandomExprGenerator gen(default_seed + 101ull * i, {2, 2, 4, 1, 3});
      const HybridExpr a = gen.hybrid(), b = gen.hybrid(), c = gen.additive();
      const HybridExpr left = hybrid_bracket(a + lambda * b, c, s) - hybrid_bracket(a, c, s) - lambda * hybrid_bracket(b, c, s);
      const HybridExpr right = hybrid_bracket(c, a + lambda * b, s) - hybrid_bracket(c, a, s) - lambda * hybrid_bracket(c, b, s);
      checks += 2;
      if (!left.is_zero()) ++nonzero;
      if (!right.is_zero()) ++nonzero;
    }
  }
  return {nonzero == 0, std::to_string(nonzero) + " nonzero defects over " + std::to_string(checks) + " checks"};
}

Outcome figure_behaviour() {
  std::ostringstream out, err;
  const char* argv[] = {"hybridyn", "oscillator", "fig1"};
  const int status = cli::run(3, argv, out, err);
  const auto lines = split_lines(out.str());
  if (status != 0 || lines.empty() || lines[0] != "t,value,m_C") return {false, "fig1 command failed"};
  std::map<double, std::map<double, double>> by_mass;  // m_C -> t -> value
  for (std::size_t i = 1; i < lines.size(); ++i) {
    double t, v, m;
    if (std::sscanf(lines[i].c_str(), "%lf,%lf,%lf", &t, &v, &m) != 3) return {false, "bad row " + lines[i]};
    by_mass[m][t] = v;
  }
  bool zero = true, even = true;
  for (const auto& [m, rows] : by_mass) {
    zero = zero && rows.count(0.0) && rows.at(0.0) == 0.0;
    for (const auto& [t, v] : rows) even = even && rows.count(-t) && std::abs(rows.at(-t) - v) < 1e-11;
  }
  const double v1 = std::abs(by_mass[1][2.0]), v5 = std::abs(by_mass[5][2.0]), v25 = std::abs(by_mass[25][2.0]);
  const bool decreasing = by_mass.size() == 3 && v1 > v5 && v5 > v25;
  return {zero && even && decreasing, "t=0 zero " + std::string(zero ? "yes" : "no") + "; even " + (even ? "yes" : "no") +
                                          "; |value(2)| = " + fmt("%.6g", v1) + " > " + fmt("%.6g", v5) + " > " +
                                          fmt("%.6g", v25)};
}

Outcome small_time_law() {
  // five-node central stencil for f'''' at t = 0, evaluated in 50-digit arithmetic
  const CoeffExpr curve = commutator_curve();
  const CoeffExpr expected = CoeffExpr::rational(1, 12) * par(Param::m) * par(Param::M, -1) * par(Param::w, 4);
  SampleGenerator gen(default_seed);
  double worst = 0;
  for (int i = 0; i < 32; ++i) {
    const auto p = gen.parameters();
    const ParameterPoint<Real50> q{Real50(p.m_C), Real50(p.m_Q), Real50(p.k), Real50(p.hbar)};
    const Real50 h = Real50("1e-8") / q.omega();
    auto f = [&](int j) { return curve.evaluate_parts(q, Real50(j) * h).re; };
    const Real50 d4 = (f(2) - 4 * f(1) + 6 * f(0) - 4 * f(-1) + f(-2)) / (h * h * h * h);
    const Real50 fit = d4 / 24;
    const Real50 exact = expected.evaluate_parts(q, Real50(0)).re;
    worst = std::max(worst, static_cast<double>(abs(fit - exact)));
  }
  return {worst < 1e-9, "max |fit - (m/M)w^4/12| = " + fmt("%.3e", worst) + " over 32 samples (tol 1e-9)"};
}

Outcome consistency_discovery() {
  const SuiteResult jac = run_suite(Suite::jacobi, {Scheme::weyl(), default_seed, 40});
  const SuiteResult leib = run_suite(Suite::leibniz, {Scheme::weyl(), default_seed, 40});
  auto violated = [](const SuiteResult& r) {
    std::size_t n = 0;
    for (const auto& d : r.discoveries)
      for (const auto& rep : d.reports) n += rep.holds() ? 0 : 1;
    return n;
  };
  const std::size_t vj = violated(jac), vl = violated(leib);
  const CheckReport assoc = associator(pow(x_C(), 3), x_C(), pow(p_C(), 3), Scheme::weyl());
  const ScanResult scan = subalgebra_scan({x_C(), p_C(), HybridExpr(1)}, Scheme::weyl(), 1);
  const bool ok = vj >= 1 && vl >= 1 && !assoc.defect.is_zero() && scan.associative;
  return {ok, "jacobi violations " + std::to_string(vj) + ", leibniz violations " + std::to_string(vl) +
                  "; associator " + to_string(assoc.defect) + "; linear scan associative " +
                  (scan.associative ? "yes" : "no")};
}

Outcome lie_series_match() {
  const OscillatorModel model;
  const HybridExpr series = lie_series(x_C(), hamiltonian(model), Scheme::weyl(), 8);
  const HybridExpr exact = evolve_closed_form(model, Variable::x_C).expression;
  SampleGenerator gen(default_seed);
  std::mt19937_64 rng(default_seed + 1);
  std::uniform_real_distribution<double> u(-0.5, 0.5);
  double worst = 0;
  for (int i = 0; i < 16; ++i) {
    Representation r = gen.representation(1, 1, 1);
    r.t = u(rng) / r.params.omega();
    worst = std::max(worst, interior_distance(series, exact, r));
  }
  return {worst < 1e-6, "max interior distance " + fmt("%.3e", worst) + " over 16 samples (tol 1e-6)"};
}

Outcome corpus_contract() {
  std::ifstream in(std::string(HYBRIDYN_TEST_DATA) + "/corpus.txt");
  std::vector<std::string> corpus;
  for (std::string line; std::getline(in, line);)
    if (!line.empty() && line[0] != '#') corpus.push_back(line);
  std::size_t round_trip = 0, status_ok = 0;
  for (const auto& src : corpus) {
    try {
      const HybridExpr e = parse(src);
      if (parse(to_string(e)) == e) ++round_trip;
    } catch (const ParseError&) {
    }
    const bool good = run_binary("bracket " + quoted(src) + " x_C") == 0;
    const bool bad = run_binary("bracket " + quoted(src + " +") + " x_C") == 2;
    if (good && bad) ++status_ok;
  }
  const bool failure = run_binary("check jacobi --trials 0") == 1;
  const bool ok = corpus.size() == 50 && round_trip == 50 && status_ok == 50 && failure;
  return {ok, std::to_string(round_trip) + "/" + std::to_string(corpus.size()) + " round-trip, " +
                  std::to_string(status_ok) + " exit 0/2 pairs, check failure exit 1 " + (failure ? "yes" : "no")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"commutator curve", commutator_curve_law},
      {"poisson curve", poisson_curve_law},
      {"hybrid canonical relation", hybrid_canonical},
      {"eom consistency", eom_consistency},
      {"eta-dot reproduction", eta_dot_reproduction},
      {"bracket-form equivalence", bracket_forms},
      {"reduction and bilinearity", reduction_bilinearity},
      {"fig1 behaviour", figure_behaviour},
      {"small-time law", small_time_law},
      {"consistency discovery", consistency_discovery},
      {"lie series", lie_series_match},
      {"parser round-trip and exit status", corpus_contract},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failures;
    std::printf("%s AC%02zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str());
  }
  std::printf("%s: %zu/%zu criteria passed\n", failures ? "FAIL" : "PASS", criteria.size() - failures, criteria.size());
  return failures ? 1 : 0;
}
