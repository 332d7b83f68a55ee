#pragma once

// Checks that evaluate both sides of each identity and inequality about
// weighted averages and partial sums of c_k^(s), returning structured
// evidence instead of booleans.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "crslab/arith.hpp"
#include "crslab/rational.hpp"

namespace crslab {

enum class Relation { Equal, Less, LessEqual, Greater, GreaterEqual, Trend };

std::string_view relation_symbol(Relation r);

/// Literal truth of `lhs rel rhs`. Trend has no pointwise meaning and throws.
bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs);

using KeyValues = std::vector<std::pair<std::string, std::string>>;

struct CheckReport {
  std::string check_id;
  KeyValues inputs;
  Rational lhs;
  Rational rhs;
  Relation relation = Relation::Equal;
  bool holds = false;
  Rational margin;  // |lhs - rhs|
  std::string paper_anchor;
  std::optional<bool> hypothesis_met;
  KeyValues details;
};

/// Fills holds and margin from lhs/relation/rhs.
CheckReport make_check(std::string check_id, KeyValues inputs, Rational lhs, Relation rel,
                       Rational rhs, std::string anchor);

enum class SequenceVariant { BoundedOmega, Window, WindowTimes2 };

std::string_view variant_name(SequenceVariant v);
/// Accepts "bounded-omega", "window", "window-times2" (alias "window2").
SequenceVariant parse_variant(std::string_view name);

struct ConvergenceRow {
  std::uint64_t n = 0;
  BigInt k_n;
  unsigned omega = 0;
  std::optional<Rational> value;  // absent when the row is skipped
  Rational target;
  std::optional<Rational> gap;
  std::string note;
};

struct ConvergenceReport {
  std::string sequence_id;
  SequenceVariant variant = SequenceVariant::Window;
  unsigned r = 0;
  unsigned s = 0;
  Rational lambda;
  Rational target;
  std::optional<Rational> alt_target;
  std::vector<ConvergenceRow> rows;
  std::optional<Rational> final_gap;  // gap of the last evaluated row
  Rational tolerance;
  bool converged = false;
  std::string paper_anchor;
};

struct BeurlingSemigroup {
  std::vector<std::uint64_t> primes;
  std::uint64_t bound = 1;
  std::vector<std::uint64_t> members;
};

/// All products of primes from P not exceeding x (1 included). Throws
/// std::invalid_argument if P contains a non-prime or x = 0.
BeurlingSemigroup beurling_generate(std::span<const std::uint64_t> primes, std::uint64_t x);

/// A(x)/x where A(x) counts members of `sorted` in [1, x].
Rational density_estimate(std::span<const std::uint64_t> sorted, std::uint64_t x);

/// Product of the primes in (n, floor(lambda * n)]; the unit when empty.
/// Requires lambda > 1.
Factorization primorial_window(std::uint64_t n, const Rational& lambda);
/// 2 * primorial_window(n, lambda); requires n >= 2.
Factorization primorial_window_times2(std::uint64_t n, const Rational& lambda);

/// The k_n used by `variant`: the n-th prime, or one of the two windows.
Factorization sequence_term(SequenceVariant variant, std::uint64_t n, const Rational& lambda);

/// Target limit of the weighted average along `variant`.
Rational sequence_target(SequenceVariant variant, unsigned r, unsigned s);

/// epsilon-closeness for k whose prime reciprocals sum to at most eps/2.
/// Conclusion: |W - (J_s(k)/k^s - 1/(r+1))| < eps^s. When the hypothesis
/// fails the report holds vacuously and says so.
CheckReport check_theorem_3_1(const Factorization& k, unsigned r, unsigned s,
                              const Rational& eps);

ConvergenceReport check_theorem_3_2(SequenceVariant variant, unsigned r, unsigned s,
                                    std::span<const std::uint64_t> n_list,
                                    const Rational& lambda, const Rational& tolerance);

/// average_over_k(x, r, s) > 0.
CheckReport check_theorem_3_3(std::uint64_t x, unsigned r, unsigned s);

/// |W(k, r_hi, s) - J_s(k)/k^s| < |W(k, r_lo, s) - J_s(k)/k^s| for k >= 2;
/// for k = 1 the gap is exactly zero at every r.
CheckReport check_limit_trend(std::uint64_t k, unsigned s, unsigned r_lo, unsigned r_hi);

/// max_N |sum_{j <= N^s} c_k^(s)(j)| >= J_{2s}(k)/(4k^s) + J_s(k)/2. Requires
/// k >= 2 (k = 1 is unbounded: std::invalid_argument) and k^s <= 10^4
/// (std::domain_error).
CheckReport check_theorem_3_4(std::uint64_t k, unsigned s);

/// |1/2 + tail * k^s / J_s(k)| <= k^{s(s-1)} 2^omega(k).
CheckReport check_corollary(std::uint64_t k, unsigned r, unsigned s);

/// direct / closed / delta-form agreement for k >= 2, k^s <= 10^4.
CheckReport check_three_forms(std::uint64_t k, unsigned r, unsigned s);

/// sum_{j=1}^{k^s} c_k^(s)(j) = 0, k >= 2.
CheckReport check_zero_sum(std::uint64_t k, unsigned s);

/// Counts residues j in [0, k^s) where closed form, divisor oracle and
/// rounded exponential oracle agree; holds when the count is k^s.
CheckReport check_crs_agreement(std::uint64_t k, unsigned s);

/// weighted_average_value(1, r, s) equals the direct sum, 1; records the
/// undispatched closed-form value 1 - 1/(r+1) alongside.
CheckReport check_unit_dispatch(unsigned r, unsigned s);

/// Squarefree k with 1..3 prime factors, all primes in (4/eps, 12/eps],
/// ascending. Enumerated from the Beurling semigroup of those primes.
std::vector<Factorization> theorem_3_1_candidates(const Rational& eps);

}  // namespace crslab
