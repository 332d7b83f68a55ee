#pragma once

// Named verification suites: parameter sweeps over the single checks in
// verify.hpp. Reports come back in a fixed order regardless of threads.

#include <cstdint>
#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "crslab/verify.hpp"

namespace crslab {

using Report = std::variant<CheckReport, ConvergenceReport>;

bool report_passed(const Report& r);

/// Overrides for suite defaults. Unset fields fall back to each suite's own
/// default grid (see README).
struct SuiteOptions {
  std::optional<std::uint64_t> k_max;
  std::optional<std::vector<std::uint64_t>> k_values;
  std::optional<unsigned> r_max;
  std::optional<std::vector<unsigned>> r_values;
  std::optional<std::vector<unsigned>> s_values;
  std::optional<std::uint64_t> x;
  std::optional<std::vector<Rational>> eps;
  std::optional<Rational> lambda;
  std::optional<std::vector<std::uint64_t>> n_values;
  std::optional<std::vector<SequenceVariant>> variants;
  std::optional<Rational> tolerance;
  unsigned threads = 1;
};

inline constexpr std::string_view kSuiteNames[] = {"identities", "thm31", "thm32", "thm33",
                                                   "thm34",      "corollary", "all"};

/// Throws std::invalid_argument for an unknown suite name.
std::vector<Report> run_suite(std::string_view name, const SuiteOptions& opts);

}  // namespace crslab
