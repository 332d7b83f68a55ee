#pragma once

// Cohen's generalized Ramanujan sum
//
//   c_k^(s)(j) = sum_{1 <= m <= k^s, (m, k^s)_s = 1} exp(2 pi i j m / k^s)
//
// evaluated three ways (closed form, Möbius divisor sum, literal exponential
// sum), plus its partial sums and the maximum of |sum_{j <= N^s} c_k^(s)(j)|.

#include <complex>
#include <cstdint>
#include <optional>

#include "crslab/arith.hpp"
#include "crslab/rational.hpp"

namespace crslab {

/// Largest k^s the floating-point oracle and the direct weighted sum accept.
inline constexpr std::uint64_t kOracleGuard = 10'000;

/// (k, s, j) with j reduced to 0 <= j < k^s. Residue 0 stands for j = k^s.
class CrsQuery {
 public:
  /// Throws std::invalid_argument for s = 0 or a unit-less k (k must be >= 1).
  CrsQuery(Factorization k, unsigned s, const BigInt& j);
  CrsQuery(std::uint64_t k, unsigned s, const BigInt& j);

  const Factorization& k() const { return k_; }
  unsigned s() const { return s_; }
  /// Canonical residue in [0, k^s).
  const BigInt& j() const { return j_; }
  /// k^s.
  const BigInt& period() const { return period_; }
  /// j with residue 0 replaced by k^s; the representative used in gcds.
  BigInt j_star() const { return j_ == 0 ? period_ : j_; }

 private:
  Factorization k_;
  unsigned s_;
  BigInt period_;
  BigInt j_;
};

struct CrsEvaluation {
  BigInt value;
  BigInt gcd_s;  // (j*, k^s)_s
  BigInt d;      // d^s * gcd_s = k^s
};

/// c = J_s(k) mu(d) / J_s(d) with d^s = k^s / (j*, k^s)_s.
CrsEvaluation crs_closed(const CrsQuery& q);

/// sum_{d | k, d^s | j*} d^s mu(k / d).
BigInt crs_divisor_oracle(const CrsQuery& q);

/// Literal double-precision sum over m = 1..k^s. Throws std::domain_error if
/// k^s > kOracleGuard.
std::complex<double> crs_exponential_oracle(const CrsQuery& q);

/// Integer nearest to `z` when |Im z| < tol and |Re z - round(Re z)| < tol.
std::optional<std::int64_t> nearest_integer(std::complex<double> z, double tol = 1e-6);

/// sum_{j=1}^{m} c_k^(s)(j). Full periods contribute 0 for k >= 2 (and k^s
/// each for k = 1); the remainder uses sum_{d | k} d^s mu(k/d) floor(rem / d^s).
BigInt crs_partial_sum(const Factorization& k, unsigned s, const BigInt& m);
BigInt crs_partial_sum(std::uint64_t k, unsigned s, const BigInt& m);

struct MaxPartialSum {
  BigInt max_abs;
  std::uint64_t argmax_n;  // smallest N attaining the maximum
};

/// max over N of |sum_{j=1}^{N^s} c_k^(s)(j)|, scanning N = 1..k^s (N^s mod
/// k^s is periodic in N with period k^s). Returns std::nullopt for k = 1,
/// where the partial sums grow without bound. `scan_periods` > 1 extends the
/// scan to N = 1..scan_periods*k^s. Throws std::domain_error if the scan
/// length exceeds 10^8.
std::optional<MaxPartialSum> crs_max_partial(const Factorization& k, unsigned s,
                                             unsigned scan_periods = 1);
std::optional<MaxPartialSum> crs_max_partial(std::uint64_t k, unsigned s,
                                             unsigned scan_periods = 1);

}  // namespace crslab
