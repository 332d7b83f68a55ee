#include "crslab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>

namespace crslab {

namespace {

constexpr std::uint64_t kSieveLimit = 10'000'000;

void divide_out(std::uint64_t& n, std::uint64_t p, std::vector<PrimePower>& out) {
  if (n % p != 0) return;
  unsigned e = 0;
  while (n % p == 0) {
    n /= p;
    ++e;
  }
  out.push_back({p, e});
}

}  // namespace

Factorization Factorization::from_prime_powers(std::vector<PrimePower> factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  Factorization f;
  for (const auto& pp : factors) {
    if (pp.prime < 2) throw std::invalid_argument("factor below 2: " + std::to_string(pp.prime));
    if (pp.exponent == 0) throw std::invalid_argument("zero exponent for prime " +
                                                      std::to_string(pp.prime));
    if (!f.factors_.empty() && f.factors_.back().prime == pp.prime) {
      f.factors_.back().exponent += pp.exponent;
    } else {
      f.factors_.push_back(pp);
    }
    f.value_ *= pow(pp.prime, pp.exponent);
  }
  return f;
}

Factorization Factorization::from_primes(std::span<const std::uint64_t> primes) {
  std::vector<PrimePower> pp;
  pp.reserve(primes.size());
  for (auto p : primes) pp.push_back({p, 1});
  auto f = from_prime_powers(std::move(pp));
  if (!f.is_squarefree()) throw std::invalid_argument("from_primes: repeated prime");
  return f;
}

bool Factorization::is_squarefree() const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [](const PrimePower& pp) { return pp.exponent == 1; });
}

Factorization Factorization::power(unsigned e) const {
  if (e == 0) return {};
  Factorization f;
  f.factors_ = factors_;
  for (auto& pp : f.factors_) pp.exponent *= e;
  f.value_ = crslab::pow(value_, e);
  return f;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be positive");
  std::vector<PrimePower> out;
  divide_out(n, 2, out);
  divide_out(n, 3, out);
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    divide_out(n, p, out);
    divide_out(n, p + 2, out);
  }
  if (n > 1) out.push_back({n, 1});
  return Factorization::from_prime_powers(std::move(out));
}

Factorization factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive, got " + to_string(n));
  return factorize(to_u64(n));
}

std::shared_ptr<const Factorization> FactorizationCache::get(std::uint64_t n) {
  {
    std::shared_lock lock(mu_);
    if (auto it = entries_.find(n); it != entries_.end()) return it->second;
  }
  auto f = std::make_shared<const Factorization>(factorize(n));
  std::unique_lock lock(mu_);
  return entries_.try_emplace(n, std::move(f)).first->second;
}

std::size_t FactorizationCache::size() const {
  std::shared_lock lock(mu_);
  return entries_.size();
}

FactorizationCache& FactorizationCache::global() {
  static FactorizationCache cache;
  return cache;
}

const Factorization& factorization_of(std::uint64_t n) {
  // Entries are never evicted, so the reference stays valid.
  return *FactorizationCache::global().get(n);
}

std::vector<BigInt> divisors(const Factorization& f) {
  std::vector<BigInt> out{BigInt(1)};
  for (const auto& [p, e] : f.factors()) {
    const std::size_t base = out.size();
    BigInt pk(1);
    for (unsigned i = 1; i <= e; ++i) {
      pk *= static_cast<unsigned long>(p);
      for (std::size_t t = 0; t < base; ++t) out.push_back(out[t] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<BigInt> divisors(std::uint64_t n) { return divisors(factorization_of(n)); }

std::vector<SignedDivisor> squarefree_divisors(const Factorization& f) {
  std::vector<SignedDivisor> out{{BigInt(1), 1}};
  for (const auto& pp : f.factors()) {
    const std::size_t base = out.size();
    for (std::size_t t = 0; t < base; ++t) {
      out.push_back({out[t].d * static_cast<unsigned long>(pp.prime), -out[t].mu});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const SignedDivisor& a, const SignedDivisor& b) { return a.d < b.d; });
  return out;
}

int mobius(const Factorization& f) {
  if (!f.is_squarefree()) return 0;
  return f.factors().size() % 2 == 0 ? 1 : -1;
}

int mobius(std::uint64_t n) { return mobius(factorization_of(n)); }

BigInt jordan_totient(unsigned s, const Factorization& n) {
  if (s == 0) throw std::invalid_argument("jordan_totient: s must be positive");
  BigInt v = pow(n.value(), s);
  for (const auto& pp : n.factors()) {
    const BigInt ps = pow(pp.prime, s);
    v = exact_div(v, ps) * (ps - 1);
  }
  return v;
}

BigInt jordan_totient(unsigned s, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("jordan_totient: n must be positive");
  return jordan_totient(s, factorization_of(n));
}

BigInt generalized_gcd(const BigInt& a, const BigInt& b, unsigned s) {
  if (a < 1 || b < 1) throw std::invalid_argument("generalized_gcd: arguments must be positive");
  if (s == 0) throw std::invalid_argument("generalized_gcd: s must be positive");
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  BigInt out(1);
  for (const auto& [p, e] : factorization_of(to_u64(g)).factors()) {
    out *= pow(p, s * (e / s));
  }
  return out;
}

BigInt generalized_gcd_power(const BigInt& a, const Factorization& k, unsigned s) {
  if (a < 1) throw std::invalid_argument("generalized_gcd_power: a must be positive");
  if (s == 0) throw std::invalid_argument("generalized_gcd_power: s must be positive");
  BigInt out(1);
  for (const auto& [p, e] : k.factors()) {
    // v = min(v_p(a), s*e), counted without building p^(s*e).
    unsigned v = 0;
    BigInt rest = a;
    const unsigned cap = s * e;
    while (v < cap && mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++v;
    }
    out *= pow(p, s * (v / s));
  }
  return out;
}

unsigned omega(const Factorization& f) { return static_cast<unsigned>(f.factors().size()); }

unsigned omega(std::uint64_t n) { return omega(factorization_of(n)); }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  if (n % 3 == 0) return n == 3;
  for (std::uint64_t p = 5; p <= n / p; p += 6) {
    if (n % p == 0 || n % (p + 2) == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in_range(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1) throw std::invalid_argument("primes_in_range: lo must be >= 1");
  std::vector<std::uint64_t> out;
  if (hi <= lo) return out;
  if (hi <= kSieveLimit) {
    std::vector<bool> composite(hi + 1, false);
    for (std::uint64_t p = 2; p * p <= hi; ++p) {
      if (composite[p]) continue;
      for (std::uint64_t m = p * p; m <= hi; m += p) composite[m] = true;
    }
    for (std::uint64_t n = std::max<std::uint64_t>(lo + 1, 2); n <= hi; ++n) {
      if (!composite[n]) out.push_back(n);
    }
    return out;
  }
  for (std::uint64_t n = lo + 1; n <= hi && n != 0; ++n) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

std::uint64_t nth_prime(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("nth_prime: n is 1-based");
  // p_n < n (ln n + ln ln n) for n >= 6.
  std::uint64_t bound = 15;
  if (n >= 6) {
    const double x = static_cast<double>(n);
    bound = static_cast<std::uint64_t>(x * (std::log(x) + std::log(std::log(x)))) + 1;
  }
  const auto primes = primes_in_range(1, bound);
  if (primes.size() < n) throw std::logic_error("nth_prime: bound too small");
  return primes[n - 1];
}

}  // namespace crslab
