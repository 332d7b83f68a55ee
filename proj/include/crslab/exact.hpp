#pragma once

// Bernoulli numbers and polynomials, binomials, and Faulhaber power sums.

#include <cstddef>
#include <mutex>
#include <vector>

#include "crslab/rational.hpp"

namespace crslab {

/// B_0, B_1, ... computed on demand from sum_{j=0}^{n} C(n+1, j) B_j = 0
/// (so B_1 = -1/2). Extension is serialized; lookups return copies.
class BernoulliCache {
 public:
  BernoulliCache();

  Rational get(std::size_t n);
  std::size_t size() const;

  static BernoulliCache& global();

 private:
  mutable std::mutex mu_;
  std::vector<Rational> entries_;
};

Rational bernoulli_number(std::size_t n);

/// B_n(x) = sum_{k=0}^{n} C(n, k) B_k x^{n-k}.
Rational bernoulli_polynomial(std::size_t n, const Rational& x);

/// C(n, k); zero when k > n.
BigInt binomial(unsigned long n, unsigned long k);

/// S_r(n) = sum_{j=1}^{n-1} j^r via (r+1) S_r(n) = B_{r+1}(n) - B_{r+1}.
/// Requires r >= 1 and n >= 2 (std::invalid_argument otherwise). Throws
/// ConsistencyError if the Bernoulli form is not a non-negative integer.
BigInt power_sum(unsigned r, const BigInt& n);

}  // namespace crslab
