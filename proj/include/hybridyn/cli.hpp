#ifndef HYBRIDYN_CLI_HPP
#define HYBRIDYN_CLI_HPP

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <ostream>
#include <string>
#include <vector>

#include "consistency.hpp"
#include "evolution.hpp"
#include "oscillator.hpp"
#include "parse.hpp"
#include "print.hpp"

namespace hybridyn::cli {

enum ExitStatus : int { success = 0, check_failure = 1, usage_error = 2 };

/// %.12g, with negative zero printed as 0.
inline std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v == 0 ? 0.0 : v);
  return buf;
}

namespace detail {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline void write_curves(std::ostream& os, const std::vector<CurveRow>& rows) {
  os << "t,commutator,poisson\n";
  for (const auto& r : rows)
    os << format_number(r.t) << ',' << format_number(r.commutator) << ',' << format_number(r.poisson) << '\n';
}

inline void write_figure(std::ostream& os, const std::vector<FigureRow>& rows) {
  os << "t,value,m_C\n";
  for (const auto& r : rows) os << format_number(r.t) << ',' << format_number(r.value) << ',' << format_number(r.m_C) << '\n';
}

inline std::string describe(const ExpectedCheck& c) {
  return (c.met() ? "ok   " : "FAIL ") + c.label + " [expected " +
         (c.expected == Expectation::holds ? "holds" : "violated") + "] :: " + to_string(c.report);
}

/// Splits a single-term product η = c·(classical monomial)·(quantum word)
/// into its classical and quantum factors.
/// An argument such as "-i*hbar" or "-(x_C)" is an expression, not a short
/// flag; a leading space keeps the option parser from claiming it.
inline std::vector<std::string> protect_negative_expressions(int argc, const char* const* argv) {
  std::vector<std::string> args(argv, argv + argc);
  for (std::size_t i = 1; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a.size() > 2 && a[0] == '-' && (std::isalpha(static_cast<unsigned char>(a[1])) || a[1] == '('))
      args[i] = " " + a;
  }
  return args;
}

inline std::pair<HybridExpr, HybridExpr> split_product(const HybridExpr& a) {
  if (a.size() != 1) throw UsageError("--naive requires a single product term such as p_C*p_Q");
  const auto& [key, c] = *a.terms().begin();
  return {HybridExpr::raw_term(c, key.monomial, {}), HybridExpr::raw_term(CoeffExpr(1), {}, key.word)};
}

}  // namespace detail

/// Runs the command line; returns 0 on success, 1 on check failure and 2 on
/// usage or parse errors.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Hybrid quantum-classical canonical dynamics calculator", "hybridyn"};
  app.require_subcommand(1);

  std::string scheme_text = "weyl";

  std::string bracket_a, bracket_b;
  auto* bracket = app.add_subcommand("bracket", "Print the hybrid bracket {[A, B]}");
  bracket->add_option("A", bracket_a, "first argument")->required();
  bracket->add_option("B", bracket_b, "second argument")->required();
  bracket->add_option("--scheme", scheme_text, "weyl, husimi or a,b,c");

  std::string eom_a, eom_h = "qc-ho";
  bool eom_naive = false;
  auto* eom = app.add_subcommand("eom", "Print dA/dt = {[A, H]}");
  eom->add_option("A", eom_a, "variable")->required();
  eom->add_option("--hamiltonian", eom_h, "expression or qc-ho");
  eom->add_option("--scheme", scheme_text, "weyl, husimi or a,b,c");
  eom->add_flag("--naive", eom_naive, "also print the two non-canonical product-rule derivatives");

  std::string osc_what;
  std::vector<double> osc_mc;
  double osc_mq = 1, osc_k = 1;
  std::string osc_grid, osc_out;
  auto* osc = app.add_subcommand("oscillator", "Quantum-classical harmonic oscillator");
  osc->add_option("what", osc_what, "eom | curves | fig1 | canonical")
      ->required()
      ->check(CLI::IsMember({"eom", "curves", "fig1", "canonical"}));
  osc->add_option("--mC", osc_mc, "classical mass (fig1: list of masses)")->delimiter(',');
  osc->add_option("--mQ", osc_mq, "quantum mass");
  osc->add_option("--k", osc_k, "coupling strength");
  osc->add_option("--grid", osc_grid, "time grid t0:t1:n");
  osc->add_option("--scheme", scheme_text, "weyl, husimi or a,b,c");
  osc->add_option("--out", osc_out, "output path");

  std::string check_suite;
  std::uint64_t check_seed = default_seed;
  unsigned check_trials = 40;
  auto* check = app.add_subcommand("check", "Run consistency suites");
  check->add_option("suite", check_suite, "jacobi | leibniz | assoc | reduction | all")->required();
  check->add_option("--seed", check_seed, "seed of the random search");
  check->add_option("--trials", check_trials, "random trials per search");
  check->add_option("--scheme", scheme_text, "weyl, husimi or a,b,c");

  const std::vector<std::string> args = detail::protect_negative_expressions(argc, argv);
  std::vector<const char*> protected_argv;
  for (const auto& a : args) protected_argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(protected_argv.size()), protected_argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? success : usage_error;
  }

  try {
    const Scheme scheme = parse_scheme(scheme_text);

    if (*bracket) {
      const HybridExpr a = parse(bracket_a, scheme);
      const HybridExpr b = parse(bracket_b, scheme);
      out << to_string(hybrid_bracket(a, b, scheme)) << '\n';
      return success;
    }

    if (*eom) {
      const HybridExpr a = parse(eom_a, scheme);
      const HybridExpr h = eom_h == "qc-ho" ? hamiltonian() : parse(eom_h, scheme);
      out << to_string(derive_eom(a, h, scheme).derivative) << '\n';
      if (eom_naive) {
        const auto [c, q] = detail::split_product(a);
        if (!is_pure_classical(c) || !is_pure_quantum(q) || c.is_zero() || q.is_zero())
          throw detail::UsageError("--naive requires a product of a classical and a quantum factor");
        out << to_string(naive_derivatives(c, q, h)) << '\n';
      }
      return success;
    }

    if (*osc) {
      std::ofstream file;
      if (!osc_out.empty()) {
        file.open(osc_out);
        if (!file) throw detail::UsageError("cannot open " + osc_out);
      }
      std::ostream& os = osc_out.empty() ? out : file;
      const TimeGrid grid = osc_grid.empty() ? TimeGrid{} : parse_grid(osc_grid);
      auto single_mass = [&] {
        if (osc_mc.size() > 1) throw detail::UsageError("--mC takes a single value for " + osc_what);
        return osc_mc.empty() ? 1.0 : osc_mc.front();
      };
      if (osc_what == "eom") {
        const OscillatorModel model;
        for (Variable v : all_variables)
          os << to_string(v) << "(t) = " << to_string(evolve_closed_form(model, v).expression) << '\n';
        return success;
      }
      if (osc_what == "curves") {
        const OscillatorModel model{single_mass(), osc_mq, osc_k};
        (void)model.point();
        detail::write_curves(os, curve_rows(model, grid));
        return success;
      }
      if (osc_what == "fig1") {
        const std::vector<double> masses = osc_mc.empty() ? std::vector<double>{1, 5, 25} : osc_mc;
        for (double m : masses)
          if (!(m > 0)) throw detail::UsageError("masses must be positive");
        if (!(osc_mq > 0 && osc_k > 0)) throw detail::UsageError("masses and coupling must be positive");
        detail::write_figure(os, figure_rows(masses, grid, osc_mq, osc_k));
        return success;
      }
      bool ok = true;
      for (Particle p : {Particle::classical, Particle::quantum}) {
        const CheckReport r = hybrid_canonical_check(OscillatorModel{}, scheme, p);
        ok = ok && r.holds();
        os << to_string(r) << '\n';
      }
      return ok ? success : check_failure;
    }

    if (*check) {
      const Suite suite = parse_suite(check_suite);
      const SuiteResult result = run_suite(suite, {scheme, check_seed, check_trials});
      for (const auto& c : result.checks) out << detail::describe(c) << '\n';
      for (const auto& d : result.discoveries) {
        std::size_t violated = 0;
        for (const auto& r : d.reports) {
          out << "     " << to_string(r) << '\n';
          if (!r.holds()) ++violated;
        }
        out << (d.found() ? "ok   " : "FAIL ") << d.label << ": " << violated << "/" << d.reports.size()
            << " violated [expected at least 1]\n";
      }
      for (const auto& a : result.aborted) out << "abort " << a << '\n';
      out << "suite " << check_suite << ": " << (result.passed() ? "PASS" : "FAIL") << '\n';
      return result.passed() ? success : check_failure;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return usage_error;
  } catch (const detail::UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  }
  return usage_error;
}

}  // namespace hybridyn::cli

#endif
