#ifndef HYBRIDYN_ORACLE_HPP
#define HYBRIDYN_ORACLE_HPP

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "expr.hpp"

namespace hybridyn {

using Matrix = Eigen::MatrixXcd;

class RepresentationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t default_seed = 0x5EED;

/// Numeric binding used to turn a HybridExpr into a truncated matrix.
///
/// Each quantum DOF lives in an N-level ladder space with
/// x_Q = s(a + a†)/√2 and p_Q = i(ħ/s)(a† − a)/√2, so [x_Q, p_Q] = iħ away
/// from the top levels. Several quantum DOFs use the tensor product space.
/// Classical generators are evaluated at a point and act as scalars.
struct Representation {
  unsigned truncation = 24;
  unsigned quantum_dofs = 1;
  double scale = 1.0;
  std::vector<double> x_C{0.0};
  std::vector<double> p_C{0.0};
  ParameterPoint<double> params{};
  double t = 0.0;

  std::size_t dimension() const {
    std::size_t d = 1;
    for (unsigned i = 0; i < quantum_dofs; ++i) d *= truncation;
    return d;
  }

  void validate() const {
    if (truncation < 8) throw RepresentationError("truncation must be at least 8");
    if (!(scale > 0)) throw RepresentationError("quantum scale must be positive");
    if (!(params.m_C > 0 && params.m_Q > 0 && params.k > 0 && params.hbar > 0))
      throw RepresentationError("parameters must be strictly positive");
    if (quantum_dofs == 0 || dimension() > 4096) throw RepresentationError("unsupported number of quantum DOFs");
    if (x_C.size() != p_C.size()) throw RepresentationError("classical point has mismatched sizes");
  }

  std::string describe() const {
    std::ostringstream os;
    os.precision(17);
    os << "m_C=" << params.m_C << " m_Q=" << params.m_Q << " k=" << params.k << " hbar=" << params.hbar
       << " t=" << t;
    for (std::size_t i = 0; i < x_C.size(); ++i) os << " x_C[" << i << "]=" << x_C[i] << " p_C[" << i << "]=" << p_C[i];
    os << " N=" << truncation;
    return os.str();
  }
};

namespace detail {

/// Level of DOF j in a tensor-product basis index.
inline unsigned level(std::size_t index, unsigned dof, unsigned n) {
  for (unsigned i = 0; i < dof; ++i) index /= n;
  return static_cast<unsigned>(index % n);
}

inline Matrix quantum_generator_matrix(const Generator& g, const Representation& r) {
  const unsigned n = r.truncation;
  const std::size_t dim = r.dimension();
  const double s = r.scale;
  const double hbar = r.params.hbar;
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  std::size_t stride = 1;
  for (unsigned i = 0; i < g.dof; ++i) stride *= n;

  Matrix m = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
  for (std::size_t col = 0; col < dim; ++col) {
    const unsigned lv = level(col, g.dof, n);
    // a|l> = √l |l-1>,  a†|l> = √(l+1) |l+1>
    if (lv > 0) {
      const double amp = std::sqrt(static_cast<double>(lv)) * inv_sqrt2;
      const std::complex<double> v = g.kind == Conjugate::position ? std::complex<double>(s * amp)
                                                                   : std::complex<double>(0, -hbar / s * amp);
      m(static_cast<Eigen::Index>(col - stride), static_cast<Eigen::Index>(col)) = v;
    }
    if (lv + 1 < n) {
      const double amp = std::sqrt(static_cast<double>(lv + 1)) * inv_sqrt2;
      const std::complex<double> v = g.kind == Conjugate::position ? std::complex<double>(s * amp)
                                                                   : std::complex<double>(0, hbar / s * amp);
      m(static_cast<Eigen::Index>(col + stride), static_cast<Eigen::Index>(col)) = v;
    }
  }
  return m;
}

inline double classical_value(const Generator& g, const Representation& r) {
  const auto& v = g.kind == Conjugate::position ? r.x_C : r.p_C;
  if (g.dof >= v.size()) throw RepresentationError("no value bound for " + std::string(g.kind == Conjugate::position ? "x_C" : "p_C") + "[" + std::to_string(g.dof) + "]");
  return v[g.dof];
}

}  // namespace detail

/// Matrix of e under r. Requires quantum degree d < N/2 so the interior
/// block used for comparisons is non-empty and free of truncation effects.
inline Matrix represent(const HybridExpr& e, const Representation& r) {
  r.validate();
  const unsigned d = quantum_degree(e);
  if (2 * d >= r.truncation)
    throw RepresentationError("quantum degree " + std::to_string(d) + " too high for truncation " +
                              std::to_string(r.truncation));
  for (unsigned dof : quantum_dofs(e))
    if (dof >= r.quantum_dofs) throw RepresentationError("quantum DOF " + std::to_string(dof) + " not represented");

  const auto dim = static_cast<Eigen::Index>(r.dimension());
  std::map<Generator, Matrix> cache;
  auto generator_matrix = [&](const Generator& g) -> const Matrix& {
    auto it = cache.find(g);
    if (it == cache.end()) it = cache.emplace(g, detail::quantum_generator_matrix(g, r)).first;
    return it->second;
  };

  Matrix out = Matrix::Zero(dim, dim);
  for (const auto& [key, c] : e.terms()) {
    std::complex<double> scalar = c.evaluate(r.params, r.t);
    for (const auto& [g, n] : key.monomial.factors()) scalar *= std::pow(detail::classical_value(g, r), static_cast<int>(n));
    if (key.word.empty()) {
      out.diagonal().array() += scalar;
      continue;
    }
    Matrix w = generator_matrix(key.word.generators().front());
    for (std::size_t i = 1; i < key.word.size(); ++i) w = w * generator_matrix(key.word.generators()[i]);
    out += scalar * w;
  }
  return out;
}

/// Basis indices whose level in every quantum DOF is below N − 2d.
inline std::vector<Eigen::Index> interior_indices(const Representation& r, unsigned degree) {
  std::vector<Eigen::Index> idx;
  const unsigned limit = r.truncation - 2 * degree;
  for (std::size_t i = 0; i < r.dimension(); ++i) {
    bool inside = true;
    for (unsigned j = 0; j < r.quantum_dofs && inside; ++j) inside = detail::level(i, j, r.truncation) < limit;
    if (inside) idx.push_back(static_cast<Eigen::Index>(i));
  }
  return idx;
}

inline double interior_norm(const Matrix& m, const std::vector<Eigen::Index>& idx) {
  double sum = 0;
  for (auto i : idx)
    for (auto j : idx) sum += std::norm(m(i, j));
  return std::sqrt(sum);
}

/// Frobenius norm of represent(a) − represent(b) on the protected block.
inline double interior_distance(const HybridExpr& a, const HybridExpr& b, const Representation& r) {
  const unsigned d = std::max(quantum_degree(a), quantum_degree(b));
  const Matrix diff = represent(a, r) - represent(b, r);
  return interior_norm(diff, interior_indices(r, d));
}

/// Seeded draws of sample points from the fixed positive ranges:
/// parameters (including ħ) in [0.5, 4], classical values in [-2, 2],
/// t in [-6, 6].
class SampleGenerator {
 public:
  explicit SampleGenerator(std::uint64_t seed = default_seed) : rng_(seed) {}

  ParameterPoint<double> parameters() {
    std::uniform_real_distribution<double> u(0.5, 4.0);
    ParameterPoint<double> p;
    p.m_C = u(rng_);
    p.m_Q = u(rng_);
    p.k = u(rng_);
    p.hbar = u(rng_);
    return p;
  }

  double time() { return std::uniform_real_distribution<double>(-6.0, 6.0)(rng_); }

  Representation representation(unsigned classical_dofs, unsigned quantum_dofs, unsigned degree) {
    Representation r;
    r.quantum_dofs = std::max(1u, quantum_dofs);
    r.truncation = std::max(r.quantum_dofs == 1 ? 24u : 10u, 2 * degree + 6);
    r.params = parameters();
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const unsigned n = std::max(1u, classical_dofs);
    r.x_C.resize(n);
    r.p_C.resize(n);
    for (unsigned i = 0; i < n; ++i) {
      r.x_C[i] = u(rng_);
      r.p_C[i] = u(rng_);
    }
    r.t = time();
    return r;
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct SemanticComparison {
  bool equal = true;
  double max_residual = 0;
  std::string worst_sample;
};

inline SemanticComparison compare_semantic(const HybridExpr& a, const HybridExpr& b, unsigned samples = 32,
                                           double tol = 1e-9, std::uint64_t seed = default_seed) {
  if (samples < 1) throw std::invalid_argument("samples must be at least 1");
  if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
  SemanticComparison out;
  if (normalize(a) == normalize(b)) return out;

  unsigned cdofs = 0;
  unsigned qdofs = 0;
  for (const auto* e : {&a, &b}) {
    for (unsigned i : classical_dofs(*e)) cdofs = std::max(cdofs, i + 1);
    for (unsigned i : quantum_dofs(*e)) qdofs = std::max(qdofs, i + 1);
  }
  const unsigned d = std::max(quantum_degree(a), quantum_degree(b));
  SampleGenerator gen(seed);
  for (unsigned s = 0; s < samples; ++s) {
    const Representation r = gen.representation(cdofs, qdofs, d);
    const double res = interior_distance(a, b, r);
    if (!(res < out.max_residual) || std::isnan(res)) {
      out.max_residual = res;
      out.worst_sample = r.describe();
    }
    if (!(res < tol)) out.equal = false;
  }
  return out;
}

/// Randomized identity test; structural equality short-circuits to true.
inline bool equal_semantic(const HybridExpr& a, const HybridExpr& b, unsigned samples = 32, double tol = 1e-9,
                           std::uint64_t seed = default_seed) {
  return compare_semantic(a, b, samples, tol, seed).equal;
}

/// Largest |a − b| over random parameter and time draws.
inline double coefficient_residual(const CoeffExpr& a, const CoeffExpr& b, unsigned samples,
                                   std::uint64_t seed = default_seed) {
  SampleGenerator gen(seed);
  const CoeffExpr diff = a - b;
  double worst = 0;
  for (unsigned s = 0; s < samples; ++s) {
    const auto p = gen.parameters();
    const double t = gen.time();
    worst = std::max(worst, std::abs(diff.evaluate(p, t)));
  }
  return worst;
}

}  // namespace hybridyn

#endif
