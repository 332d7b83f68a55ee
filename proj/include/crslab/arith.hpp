#pragma once

// Multiplicative-function toolkit: factorization, divisors, Möbius, Jordan
// totient, generalized GCD and prime ranges.

#include <cstdint>
#include <memory>
#include <shared_mutex>
#include <span>
#include <unordered_map>
#include <vector>

#include "crslab/rational.hpp"

namespace crslab {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Canonical factorization. Primes strictly increase, exponents are >= 1 and
/// the product of the factors is `value()`. The unit has no factors.
class Factorization {
 public:
  Factorization() = default;  // the unit

  /// Validates and canonicalizes: sorts, merges repeated primes. Throws
  /// std::invalid_argument for a zero exponent or a prime < 2. Primality
  /// itself is the caller's contract.
  static Factorization from_prime_powers(std::vector<PrimePower> factors);
  /// Squarefree value built from a list of distinct primes.
  static Factorization from_primes(std::span<const std::uint64_t> primes);

  const BigInt& value() const { return value_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  bool is_squarefree() const;

  /// Factorization of value()^e.
  Factorization power(unsigned e) const;

 private:
  BigInt value_{1};
  std::vector<PrimePower> factors_;
};

/// Trial division by 2, 3 and then 6k +/- 1. Throws std::invalid_argument for
/// n < 1 and std::out_of_range when n does not fit 64 bits.
Factorization factorize(const BigInt& n);
Factorization factorize(std::uint64_t n);

/// Thread-safe memo of factorize(). Entries are immutable once inserted.
class FactorizationCache {
 public:
  std::shared_ptr<const Factorization> get(std::uint64_t n);
  std::size_t size() const;

  static FactorizationCache& global();

 private:
  mutable std::shared_mutex mu_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const Factorization>> entries_;
};

/// Shorthand for FactorizationCache::global().get(n), dereferenced.
const Factorization& factorization_of(std::uint64_t n);

/// All positive divisors in ascending order.
std::vector<BigInt> divisors(const Factorization& f);
std::vector<BigInt> divisors(std::uint64_t n);

/// Squarefree divisors d with their Möbius sign, ascending by d. These are
/// the only divisors with nonzero Möbius value; there are 2^omega of them.
struct SignedDivisor {
  BigInt d;
  int mu;
};
std::vector<SignedDivisor> squarefree_divisors(const Factorization& f);

int mobius(const Factorization& f);
int mobius(std::uint64_t n);

/// J_s(n) = n^s * prod_{p | n} (1 - p^{-s}), evaluated with exact division.
BigInt jordan_totient(unsigned s, const Factorization& n);
BigInt jordan_totient(unsigned s, std::uint64_t n);

/// Largest d^s dividing both a and b. Requires a, b >= 1 and s >= 1; the
/// gcd of a and b is factorized, so it must fit 64 bits.
BigInt generalized_gcd(const BigInt& a, const BigInt& b, unsigned s);

/// (a, k^s)_s using the known factorization of k; no factoring of `a`.
BigInt generalized_gcd_power(const BigInt& a, const Factorization& k, unsigned s);

unsigned omega(const Factorization& f);
unsigned omega(std::uint64_t n);

/// Primes p with lo < p <= hi, ascending. Sieve when hi <= 10^7, trial
/// division above that.
std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi);

/// Primality by trial division; fine for the desk-scale values used here.
bool is_prime(std::uint64_t n);

/// The n-th prime, 1-based (nth_prime(1) = 2).
std::uint64_t nth_prime(std::uint64_t n);

}  // namespace crslab
