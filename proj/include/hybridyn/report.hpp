#ifndef HYBRIDYN_REPORT_HPP
#define HYBRIDYN_REPORT_HPP

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oracle.hpp"
#include "print.hpp"
#include "scheme.hpp"

namespace hybridyn {

enum class Verdict { holds, violated };

inline const char* to_string(Verdict v) { return v == Verdict::holds ? "holds" : "violated"; }

/// Outcome of one consistency check. The defect is kept as a normalized
/// expression so its structure (e.g. its order in ħ) can be inspected.
struct CheckReport {
  std::string law;
  std::vector<HybridExpr> arguments;
  Scheme scheme;
  HybridExpr defect;
  double residual = 0;
  Verdict verdict = Verdict::holds;
  std::optional<std::uint64_t> seed;
  std::string sample;  // sample point of the largest residual, if any

  bool holds() const { return verdict == Verdict::holds; }
};

inline constexpr double check_tolerance = 1e-9;

inline CheckReport make_report(std::string law, std::vector<HybridExpr> arguments, const Scheme& scheme,
                               HybridExpr defect, std::optional<std::uint64_t> seed = std::nullopt) {
  CheckReport r{std::move(law), std::move(arguments), scheme, normalize(defect), 0, Verdict::holds, seed, {}};
  if (!r.defect.is_zero()) {
    const auto cmp = compare_semantic(r.defect, HybridExpr(), 32, check_tolerance);
    r.residual = cmp.max_residual;
    r.sample = cmp.worst_sample;
    r.verdict = cmp.equal ? Verdict::holds : Verdict::violated;
  }
  return r;
}

/// One line: law | scheme | verdict | defect | residual | args | seed.
inline std::string to_string(const CheckReport& r) {
  char residual[32];
  std::snprintf(residual, sizeof residual, "%.3e", r.residual);
  std::string line = r.law + " | scheme=" + r.scheme.name() + " | " + to_string(r.verdict) +
                     " | defect: " + to_string(r.defect) + " | residual: " + residual + " | args: ";
  for (std::size_t i = 0; i < r.arguments.size(); ++i) line += (i ? " ; " : "") + to_string(r.arguments[i]);
  if (r.seed) line += " | seed: " + std::to_string(*r.seed);
  return line;
}

}  // namespace hybridyn

#endif
