#include "crslab/crs.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace crslab {

namespace {

// Factorization of a divisor d of k, read off k's primes.
Factorization divisor_factorization(const Factorization& k, const BigInt& d) {
  std::vector<PrimePower> out;
  BigInt rest = d;
  for (const auto& [p, e] : k.factors()) {
    unsigned v = 0;
    while (v < e && mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++v;
    }
    if (v > 0) out.push_back({p, v});
  }
  if (rest != 1) {
    throw ConsistencyError("derived d = " + to_string(d) + " does not divide k = " +
                           to_string(k.value()));
  }
  return Factorization::from_prime_powers(std::move(out));
}

}  // namespace

CrsQuery::CrsQuery(Factorization k, unsigned s, const BigInt& j)
    : k_(std::move(k)), s_(s) {
  if (s_ == 0) throw std::invalid_argument("CrsQuery: s must be positive");
  period_ = pow(k_.value(), s_);
  mpz_fdiv_r(j_.get_mpz_t(), j.get_mpz_t(), period_.get_mpz_t());
}

CrsQuery::CrsQuery(std::uint64_t k, unsigned s, const BigInt& j)
    : CrsQuery(k == 0 ? throw std::invalid_argument("CrsQuery: k must be positive")
                      : factorization_of(k),
               s, j) {}

CrsEvaluation crs_closed(const CrsQuery& q) {
  const BigInt gcd_s = generalized_gcd_power(q.j_star(), q.k(), q.s());
  const BigInt d = exact_root(exact_div(q.period(), gcd_s), q.s());
  const Factorization df = divisor_factorization(q.k(), d);
  const int mu = mobius(df);
  BigInt value(0);
  if (mu != 0) {
    value = exact_div(jordan_totient(q.s(), q.k()), jordan_totient(q.s(), df));
    if (mu < 0) value = -value;
  }
  return {value, gcd_s, d};
}

BigInt crs_divisor_oracle(const CrsQuery& q) {
  // Walk every exponent vector b <= a of k; d = prod p^b, k/d = prod p^(a-b).
  const auto& factors = q.k().factors();
  const BigInt j = q.j_star();
  BigInt total(0);
  std::vector<unsigned> b(factors.size(), 0);
  while (true) {
    BigInt d(1);
    int mu = 1;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      d *= pow(factors[i].prime, b[i]);
      const unsigned gap = factors[i].exponent - b[i];
      if (gap >= 2) mu = 0;
      if (gap == 1) mu = -mu;
    }
    if (mu != 0) {
      const BigInt ds = pow(d, q.s());
      if (mpz_divisible_p(j.get_mpz_t(), ds.get_mpz_t())) total += mu * ds;
    }
    std::size_t i = 0;
    while (i < factors.size() && b[i] == factors[i].exponent) b[i++] = 0;
    if (i == factors.size()) break;
    ++b[i];
  }
  return total;
}

std::complex<double> crs_exponential_oracle(const CrsQuery& q) {
  if (q.period() > kOracleGuard) {
    throw std::domain_error("exponential oracle: k^s = " + to_string(q.period()) +
                            " exceeds " + std::to_string(kOracleGuard));
  }
  const std::uint64_t n = to_u64(q.period());
  const std::uint64_t j = to_u64(q.j());
  const BigInt nb(static_cast<unsigned long>(n));
  std::complex<double> sum{0.0, 0.0};
  for (std::uint64_t m = 1; m <= n; ++m) {
    if (generalized_gcd(BigInt(static_cast<unsigned long>(m)), nb, q.s()) != 1) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>((j * m) % n) /
                         static_cast<double>(n);
    sum += std::polar(1.0, angle);
  }
  return sum;
}

std::optional<std::int64_t> nearest_integer(std::complex<double> z, double tol) {
  const double re = std::round(z.real());
  if (std::abs(z.imag()) >= tol || std::abs(z.real() - re) >= tol) return std::nullopt;
  return static_cast<std::int64_t>(re);
}

BigInt crs_partial_sum(const Factorization& k, unsigned s, const BigInt& m) {
  if (m < 1) throw std::invalid_argument("crs_partial_sum: M must be positive");
  if (s == 0) throw std::invalid_argument("crs_partial_sum: s must be positive");
  if (k.is_unit()) return m;
  const BigInt period = pow(k.value(), s);
  BigInt rem;
  mpz_fdiv_r(rem.get_mpz_t(), m.get_mpz_t(), period.get_mpz_t());
  BigInt total(0);
  if (rem == 0) return total;
  for (const auto& [e, mu] : squarefree_divisors(k)) {
    const BigInt ds = pow(exact_div(k.value(), e), s);
    BigInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), rem.get_mpz_t(), ds.get_mpz_t());
    total += mu * ds * fl;
  }
  return total;
}

BigInt crs_partial_sum(std::uint64_t k, unsigned s, const BigInt& m) {
  if (k == 0) throw std::invalid_argument("crs_partial_sum: k must be positive");
  return crs_partial_sum(factorization_of(k), s, m);
}

std::optional<MaxPartialSum> crs_max_partial(const Factorization& k, unsigned s,
                                             unsigned scan_periods) {
  if (s == 0) throw std::invalid_argument("crs_max_partial: s must be positive");
  if (k.is_unit()) return std::nullopt;
  const BigInt period = pow(k.value(), s);
  const BigInt scan = period * scan_periods;
  if (scan_periods == 0 || scan > 100'000'000) {
    throw std::domain_error("crs_max_partial: scan length " + to_string(scan) +
                            " out of range");
  }
  const std::uint64_t n_max = to_u64(scan);
  MaxPartialSum best{BigInt(-1), 0};
  BigInt cutoff;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    // N^s mod k^s; residue 0 is a whole number of periods and sums to 0.
    const BigInt nb(static_cast<unsigned long>(n));
    mpz_powm_ui(cutoff.get_mpz_t(), nb.get_mpz_t(), s, period.get_mpz_t());
    BigInt v(0);
    if (cutoff != 0) v = abs(crs_partial_sum(k, s, cutoff));
    if (v > best.max_abs) best = {v, n};
  }
  return best;
}

std::optional<MaxPartialSum> crs_max_partial(std::uint64_t k, unsigned s,
                                             unsigned scan_periods) {
  if (k == 0) throw std::invalid_argument("crs_max_partial: k must be positive");
  return crs_max_partial(factorization_of(k), s, scan_periods);
}

}  // namespace crslab
