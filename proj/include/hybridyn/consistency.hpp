#ifndef HYBRIDYN_CONSISTENCY_HPP
#define HYBRIDYN_CONSISTENCY_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bracket.hpp"
#include "random.hpp"
#include "report.hpp"

namespace hybridyn {

/// {[A,{[B,C]}]} + {[B,{[C,A]}]} + {[C,{[A,B]}]}
inline CheckReport jacobiator(const HybridExpr& a, const HybridExpr& b, const HybridExpr& c, const Scheme& s,
                              std::optional<std::uint64_t> seed = std::nullopt) {
  const HybridExpr defect = hybrid_bracket(a, hybrid_bracket(b, c, s), s) + hybrid_bracket(b, hybrid_bracket(c, a, s), s) +
                            hybrid_bracket(c, hybrid_bracket(a, b, s), s);
  return make_report("jacobi", {a, b, c}, s, defect, seed);
}

/// {[A, B⊛C]} − {[A,B]}⊛C − B⊛{[A,C]}
inline CheckReport leibniz_defect(const HybridExpr& a, const HybridExpr& b, const HybridExpr& c, const Scheme& s,
                                  std::optional<std::uint64_t> seed = std::nullopt) {
  const HybridExpr defect =
      hybrid_bracket(a, star(b, c, s), s) - star(hybrid_bracket(a, b, s), c, s) - star(b, hybrid_bracket(a, c, s), s);
  return make_report("leibniz", {a, b, c}, s, defect, seed);
}

/// (A⊛B)⊛C − A⊛(B⊛C)
inline CheckReport associator(const HybridExpr& a, const HybridExpr& b, const HybridExpr& c, const Scheme& s,
                              std::optional<std::uint64_t> seed = std::nullopt) {
  const HybridExpr defect = star(star(a, b, s), c, s) - star(a, star(b, c, s), s);
  return make_report("assoc", {a, b, c}, s, defect, seed);
}

class TermBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ScanResult {
  std::vector<HybridExpr> closure;
  std::vector<CheckReport> reports;
  bool associative = true;
};

inline constexpr std::size_t default_term_budget = 10000;

/// ⊛-closure of the generators up to a total-degree cap, then the associator
/// of every ordered triple of closure elements.
inline ScanResult subalgebra_scan(const std::vector<HybridExpr>& generators, const Scheme& s, unsigned degree_cap,
                                  std::size_t term_budget = default_term_budget) {
  if (degree_cap > 4) throw std::invalid_argument("subalgebra_scan: degree cap must be at most 4");
  ScanResult out;
  auto contains = [&out](const HybridExpr& e) {
    for (const auto& x : out.closure)
      if (x == e) return true;
    return false;
  };
  auto check_budget = [&] {
    if (total_terms(out.closure) > term_budget)
      throw TermBudgetExceeded("subalgebra_scan: closure exceeds the term budget of " + std::to_string(term_budget) +
                               " terms");
  };
  for (const auto& g : generators) {
    HybridExpr n = normalize(g);
    if (!n.is_zero() && !contains(n)) out.closure.push_back(std::move(n));
  }
  check_budget();

  std::size_t done = 0;  // elements [0, done) have been multiplied with each other
  while (done < out.closure.size()) {
    const std::size_t end = out.closure.size();
    for (std::size_t i = 0; i < end; ++i) {
      for (std::size_t j = (i < done ? done : 0); j < end; ++j) {
        for (int order = 0; order < 2; ++order) {
          const auto& a = out.closure[order ? j : i];
          const auto& b = out.closure[order ? i : j];
          HybridExpr p = star(a, b, s);
          if (p.is_zero() || total_degree(p) > degree_cap || contains(p)) continue;
          out.closure.push_back(std::move(p));
          check_budget();
        }
      }
    }
    done = end;
  }

  const auto& cl = out.closure;
  for (const auto& a : cl)
    for (const auto& b : cl)
      for (const auto& c : cl) {
        out.reports.push_back(associator(a, b, c, s));
        if (!out.reports.back().holds()) out.associative = false;
      }
  return out;
}

// ---- suites ---------------------------------------------------------------

enum class Suite { jacobi, leibniz, assoc, reduction, all };

inline Suite parse_suite(const std::string& name) {
  if (name == "jacobi") return Suite::jacobi;
  if (name == "leibniz") return Suite::leibniz;
  if (name == "assoc") return Suite::assoc;
  if (name == "reduction") return Suite::reduction;
  if (name == "all") return Suite::all;
  throw std::invalid_argument("unknown suite '" + name + "' (expected jacobi|leibniz|assoc|reduction|all)");
}

enum class Expectation { holds, violated };

struct ExpectedCheck {
  std::string label;
  CheckReport report;
  Expectation expected;
  bool met() const { return report.holds() == (expected == Expectation::holds); }
};

/// Random search that must turn up at least one violated report.
struct Discovery {
  std::string label;
  std::vector<CheckReport> reports;
  bool found() const {
    for (const auto& r : reports)
      if (!r.holds()) return true;
    return false;
  }
};

struct SuiteResult {
  std::vector<ExpectedCheck> checks;
  std::vector<Discovery> discoveries;
  std::vector<std::string> aborted;  // diagnostics of non-fatal aborts

  bool passed() const {
    for (const auto& c : checks)
      if (!c.met()) return false;
    for (const auto& d : discoveries)
      if (!d.found()) return false;
    return true;
  }
};

struct SuiteOptions {
  Scheme scheme = Scheme::weyl();
  std::uint64_t seed = default_seed;
  unsigned trials = 40;
};

namespace detail {

/// Seed of the i-th random trial, recorded in its report.
inline std::uint64_t trial_seed(std::uint64_t base, unsigned i) { return base + 7919ull * (i + 1); }

inline void pure_triples(SuiteResult& out, const Scheme& s,
                         CheckReport (*law)(const HybridExpr&, const HybridExpr&, const HybridExpr&, const Scheme&,
                                            std::optional<std::uint64_t>),
                         const std::string& name, bool classical_holds) {
  out.checks.push_back({name + ": pure quantum triple", law(x_Q(), p_Q(), x_Q() * p_Q() * p_Q(), s, std::nullopt),
                        Expectation::holds});
  out.checks.push_back(
      {name + ": pure quantum triple (quadratic)", law(p_Q() * p_Q(), x_Q() * x_Q(), x_Q() * p_Q(), s, std::nullopt),
       Expectation::holds});
  if (classical_holds)
    out.checks.push_back({name + ": pure classical triple",
                          law(x_C() * x_C(), p_C() * p_C(), x_C() * p_C(), s, std::nullopt), Expectation::holds});
}

inline void discovery(SuiteResult& out, const SuiteOptions& opt,
                      CheckReport (*law)(const HybridExpr&, const HybridExpr&, const HybridExpr&, const Scheme&,
                                         std::optional<std::uint64_t>),
                      const std::string& name) {
  Discovery d{name + ": random hybrid triples", {}};
  for (unsigned i = 0; i < opt.trials; ++i) {
    const std::uint64_t seed = trial_seed(opt.seed, i);
    RandomExprGenerator gen(seed, {2, 2, 4, 1, 2});
    const HybridExpr a = gen.mixed();
    const HybridExpr b = gen.hybrid();
    const HybridExpr c = gen.hybrid();
    d.reports.push_back(law(a, b, c, opt.scheme, seed));
  }
  out.discoveries.push_back(std::move(d));
}

}  // namespace detail

inline SuiteResult run_suite(Suite suite, const SuiteOptions& opt = {}) {
  SuiteResult out;
  const Scheme& s = opt.scheme;
  auto merge = [&out](SuiteResult r) {
    for (auto& c : r.checks) out.checks.push_back(std::move(c));
    for (auto& d : r.discoveries) out.discoveries.push_back(std::move(d));
    for (auto& a : r.aborted) out.aborted.push_back(std::move(a));
  };

  switch (suite) {
    case Suite::all:
      for (Suite each : {Suite::reduction, Suite::jacobi, Suite::leibniz, Suite::assoc}) merge(run_suite(each, opt));
      break;

    case Suite::reduction: {
      const HybridExpr eta = p_C() * p_Q();
      const HybridExpr kinetic_q = (CoeffExpr::rational(1, 2) * CoeffExpr::param(Param::m_Q, -1)) * (p_Q() * p_Q());
      const std::vector<std::pair<std::string, HybridExpr>> pure_args{
          {"p_Q^2/2m_Q", kinetic_q}, {"x_C^2", x_C() * x_C()}, {"x_C + x_Q", x_C() + x_Q()}};
      for (const Scheme& sc : preset_schemes())
        for (const auto& [label, b] : pure_args)
          out.checks.push_back({"reduction: eta with " + label, reduce_check(eta, b, sc), Expectation::holds});
      for (unsigned i = 0; i < opt.trials; ++i) {
        const std::uint64_t seed = detail::trial_seed(opt.seed, i);
        RandomExprGenerator gen(seed, {2, 2, 4, 1, 2});
        const HybridExpr a = gen.hybrid();
        const HybridExpr b = (i % 3 == 0) ? gen.pure_classical() : (i % 3 == 1) ? gen.pure_quantum() : gen.additive();
        CheckReport r = reduce_check(a, b, s);
        r.seed = seed;
        out.checks.push_back({"reduction: random", std::move(r), Expectation::holds});
      }
      break;
    }

    case Suite::jacobi: {
      detail::pure_triples(out, s, jacobiator, "jacobi", true);
      // additive hybrid with two pure arguments of different sectors
      out.checks.push_back({"jacobi: additive hybrid with pure arguments",
                            jacobiator(x_C() * p_C() + p_Q() * p_Q(), p_C() * p_C(), x_Q() * x_Q() * p_Q(), s),
                            Expectation::holds});
      detail::discovery(out, opt, jacobiator, "jacobi");
      break;
    }

    case Suite::leibniz: {
      detail::pure_triples(out, s, leibniz_defect, "leibniz", s == Scheme::weyl());
      detail::discovery(out, opt, leibniz_defect, "leibniz");
      break;
    }

    case Suite::assoc: {
      auto x3 = pow(x_C(), 3);
      auto p3 = pow(p_C(), 3);
      out.checks.push_back({"assoc: (x_C^3, x_C, p_C^3)", associator(x3, x_C(), p3, s), Expectation::violated});
      out.checks.push_back({"assoc: (x_C, p_C, x_C)", associator(x_C(), p_C(), x_C(), s), Expectation::holds});
      out.checks.push_back({"assoc: pure quantum triple", associator(p_Q() * p_Q(), x_Q() * x_Q(), x_Q(), s),
                            Expectation::holds});
      auto scan = [&](const std::string& label, const std::vector<HybridExpr>& gens, unsigned cap,
                      Expectation expected) {
        try {
          ScanResult r = subalgebra_scan(gens, s, cap);
          CheckReport summary = make_report("assoc-scan", gens, s, HybridExpr());
          for (const auto& rep : r.reports)
            if (!rep.holds()) {
              summary = rep;
              summary.law = "assoc-scan";
              break;
            }
          out.checks.push_back({label + " (" + std::to_string(r.closure.size()) + " elements, associative subalgebra: " +
                                    (r.associative ? "yes" : "no") + ")",
                                std::move(summary), expected});
        } catch (const TermBudgetExceeded& e) {
          out.aborted.push_back(label + ": " + e.what());
        }
      };
      scan("scan {x_C, p_C, 1}, degree <= 1", {x_C(), p_C(), HybridExpr(1)}, 1, Expectation::holds);
      scan("scan {x_Q, p_Q, 1}, degree <= 2", {x_Q(), p_Q(), HybridExpr(1)}, 2, Expectation::holds);
      scan("scan {x_C^3, p_C^3}, degree <= 4", {x3, p3}, 4, Expectation::violated);
      break;
    }
  }
  return out;
}

}  // namespace hybridyn

#endif
