#ifndef HYBRIDYN_RANDOM_HPP
#define HYBRIDYN_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "expr.hpp"

namespace hybridyn {

struct RandomExprOptions {
  unsigned max_classical_degree = 2;  // per term
  unsigned max_quantum_degree = 2;    // per term
  unsigned max_total_degree = 4;      // per term
  unsigned dofs = 1;                  // DOF indices drawn from [0, dofs)
  unsigned max_terms = 3;
};

/// Seeded random polynomials with coefficients in {±1, ±½}. Quantum words are
/// drawn as arbitrary generator sequences, so raw terms are generally out of
/// normal order.
class RandomExprGenerator {
 public:
  explicit RandomExprGenerator(std::uint64_t seed, RandomExprOptions opts = {}) : rng_(seed), opts_(opts) {}

  const RandomExprOptions& options() const { return opts_; }

  /// Sum of random terms, possibly with unnormalized words.
  HybridExpr raw(bool allow_classical = true, bool allow_quantum = true) {
    HybridExpr e;
    const unsigned n = uniform(1, opts_.max_terms);
    for (unsigned i = 0; i < n; ++i) {
      unsigned dc = allow_classical ? uniform(0, opts_.max_classical_degree) : 0;
      unsigned dq = allow_quantum ? uniform(0, opts_.max_quantum_degree) : 0;
      while (dc + dq > opts_.max_total_degree) (dc >= dq ? dc : dq) -= 1;
      ClassicalMonomial m;
      for (unsigned j = 0; j < dc; ++j) m = m * ClassicalMonomial(generator(Sector::classical));
      std::vector<Generator> w;
      for (unsigned j = 0; j < dq; ++j) w.push_back(generator(Sector::quantum));
      HybridExpr t = HybridExpr::raw_term(coefficient(), m, QuantumWord(std::move(w)));
      for (const auto& [key, c] : t.terms()) e.add_term(key, c);
    }
    return e;
  }

  HybridExpr hybrid() { return normalize(raw()); }
  HybridExpr pure_classical() { return normalize(raw(true, false)); }
  HybridExpr pure_quantum() { return normalize(raw(false, true)); }
  HybridExpr additive() { return pure_classical() + pure_quantum(); }

  /// A hybrid with at least one term mixing both sectors.
  HybridExpr mixed() {
    for (;;) {
      HybridExpr e = hybrid();
      if (!is_additive(e)) return e;
    }
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  unsigned uniform(unsigned lo, unsigned hi) { return std::uniform_int_distribution<unsigned>(lo, hi)(rng_); }

  Generator generator(Sector s) {
    const auto kind = uniform(0, 1) == 0 ? Conjugate::position : Conjugate::momentum;
    return {s, kind, uniform(0, opts_.dofs - 1)};
  }

  CoeffExpr coefficient() {
    static const long num[] = {1, -1, 1, -1};
    static const long den[] = {1, 1, 2, 2};
    const unsigned i = uniform(0, 3);
    return CoeffExpr::rational(num[i], den[i]);
  }

  std::mt19937_64 rng_;
  RandomExprOptions opts_;
};

}  // namespace hybridyn

#endif
