#pragma once

// Weighted power-sum averages
//
//   W(k, r, s) = k^{-s(r+1)} sum_{j=1}^{k^s} j^r c_k^(s)(j)
//
// by direct summation, by the Bernoulli closed form
//
//   W = J_s(k)/(2k^s) + 1/(r+1) sum_{m=1}^{floor(r/2)} C(r+1, 2m) B_{2m} J_{2ms}(k)/k^{2ms}
//
// and by the lower-Riemann-sum error form
//
//   W = J_s(k)/k^s - 1/(r+1) - sum_{d | k, d > 1} mu(d) delta_{d^s, r},
//   delta_{d^s, r} = 1/(r+1) - S_r(d^s)/d^{s(r+1)}.
//
// Both closed forms hold for k >= 2 only. At k = 1 the direct sum is 1 while
// the Bernoulli form gives 1 - 1/(r+1); weighted_average_value dispatches on k.

#include <cstdint>
#include <optional>
#include <vector>

#include "crslab/arith.hpp"
#include "crslab/rational.hpp"

namespace crslab {

struct WeightedAverageBreakdown {
  unsigned r = 0;
  unsigned s = 0;
  BigInt k;
  Rational value;
  Rational leading;         // J_s(k) / (2 k^s)
  Rational bernoulli_tail;  // the sum over m; zero for r = 1
  std::optional<Rational> delta_correction;  // sum_{d | k, d > 1} mu(d) delta; k >= 2 only
};

struct DeltaTerm {
  BigInt d;
  unsigned s;
  unsigned r;
  Rational value;
};

/// J_t(k) / k^t as prod_{p | k} (1 - p^{-t}).
Rational jordan_density(const Factorization& k, unsigned t);

/// Literal sum_{j=1}^{k^s} j^r crs_closed(k, s, j). Throws std::domain_error
/// when k^s > kOracleGuard.
BigInt weighted_sum_direct(const Factorization& k, unsigned r, unsigned s);
BigInt weighted_sum_direct(std::uint64_t k, unsigned r, unsigned s);

/// The Bernoulli closed form's two terms, for any k >= 1 and with no
/// dispatch. At k = 1 their sum is 1 - 1/(r+1), not the true value 1.
struct ClosedFormTerms {
  Rational leading;
  Rational bernoulli_tail;
};
ClosedFormTerms closed_form_terms(const Factorization& k, unsigned r, unsigned s);

/// Requires k >= 2 (std::invalid_argument otherwise). Fills every field,
/// including the delta correction.
WeightedAverageBreakdown weighted_average_closed(const Factorization& k, unsigned r,
                                                 unsigned s);
WeightedAverageBreakdown weighted_average_closed(std::uint64_t k, unsigned r, unsigned s);

/// Same as weighted_average_closed for k >= 2. For k = 1 the value is 1 and
/// leading/tail are the undispatched closed-form terms; delta is absent.
WeightedAverageBreakdown weighted_average_breakdown(const Factorization& k, unsigned r,
                                                    unsigned s);

/// k = 1 -> 1; otherwise the closed-form value.
Rational weighted_average_value(const Factorization& k, unsigned r, unsigned s);
Rational weighted_average_value(std::uint64_t k, unsigned r, unsigned s);

/// 1/(r+1) - S_r(d^s)/d^{s(r+1)}. Requires d >= 2; throws ConsistencyError
/// unless 0 < value < 1/d^s.
DeltaTerm delta_term(const BigInt& d, unsigned s, unsigned r);

/// sum_{d | k, d > 1} mu(d) delta_term(d, s, r); k >= 2.
Rational delta_correction(const Factorization& k, unsigned r, unsigned s);

/// J_s(k)/k^s - 1/(r+1) - delta_correction(k, r, s); k >= 2.
Rational weighted_average_delta_form(const Factorization& k, unsigned r, unsigned s);
Rational weighted_average_delta_form(std::uint64_t k, unsigned r, unsigned s);

/// (1/x) sum_{k=1}^{x} weighted_average_value(k, r, s).
Rational average_over_k(std::uint64_t x, unsigned r, unsigned s);

/// average_over_k(x, r, s) for every x = 1..x_max, computed from one running
/// sum. Element i holds x = i + 1. `threads` parallelizes the per-k values.
std::vector<Rational> average_over_k_prefix(std::uint64_t x_max, unsigned r, unsigned s,
                                            unsigned threads = 1);

/// J_s(k)/k^s, the r -> infinity limit of weighted_average_value.
Rational limit_r_infinity(const Factorization& k, unsigned s);
Rational limit_r_infinity(std::uint64_t k, unsigned s);

}  // namespace crslab
