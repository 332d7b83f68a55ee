#include "crslab/exact.hpp"

#include <stdexcept>

namespace crslab {

BernoulliCache::BernoulliCache() { entries_.emplace_back(1); }

Rational BernoulliCache::get(std::size_t n) {
  std::lock_guard lock(mu_);
  while (entries_.size() <= n) {
    const std::size_t m = entries_.size();  // solve for B_m
    Rational acc;
    for (std::size_t j = 0; j < m; ++j) {
      acc += Rational(binomial(m + 1, j)) * entries_[j];
    }
    entries_.push_back(-acc / Rational(static_cast<long>(m + 1)));
  }
  return entries_[n];
}

std::size_t BernoulliCache::size() const {
  std::lock_guard lock(mu_);
  return entries_.size();
}

BernoulliCache& BernoulliCache::global() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli_number(std::size_t n) { return BernoulliCache::global().get(n); }

Rational bernoulli_polynomial(std::size_t n, const Rational& x) {
  // Horner in x over coefficients C(n, k) B_k, highest power first.
  Rational acc;
  for (std::size_t i = 0; i <= n; ++i) {
    // term index k = i contributes x^{n-k}
    acc = acc * x + Rational(binomial(n, i)) * bernoulli_number(i);
  }
  return acc;
}

BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

BigInt power_sum(unsigned r, const BigInt& n) {
  if (r < 1) throw std::invalid_argument("power_sum: r must be >= 1");
  if (n < 2) throw std::invalid_argument("power_sum: n must be >= 2");
  const Rational scaled = bernoulli_polynomial(r + 1, Rational(n)) - bernoulli_number(r + 1);
  const Rational s = scaled / Rational(static_cast<long>(r + 1));
  if (!s.is_integer() || s.sign() < 0) {
    throw ConsistencyError("power_sum: Bernoulli form gave " + s.str());
  }
  return s.to_integer();
}

}  // namespace crslab
