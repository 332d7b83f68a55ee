#include "crslab/weighted.hpp"

#include <stdexcept>
#include <string>

#include "crslab/crs.hpp"
#include "crslab/exact.hpp"
#include "crslab/parallel.hpp"

namespace crslab {

namespace {

void require_positive(unsigned r, unsigned s, const char* who) {
  if (r == 0) throw std::invalid_argument(std::string(who) + ": r must be positive");
  if (s == 0) throw std::invalid_argument(std::string(who) + ": s must be positive");
}

Rational inverse_succ(unsigned r) { return Rational(1, static_cast<unsigned long>(r) + 1); }

}  // namespace

Rational jordan_density(const Factorization& k, unsigned t) {
  Rational out(1);
  for (const auto& pp : k.factors()) {
    const BigInt pt = pow(pp.prime, t);
    out *= Rational(pt - 1, pt);
  }
  return out;
}

BigInt weighted_sum_direct(const Factorization& k, unsigned r, unsigned s) {
  require_positive(r, s, "weighted_sum_direct");
  const BigInt period = pow(k.value(), s);
  if (period > kOracleGuard) {
    throw std::domain_error("weighted_sum_direct: k^s = " + to_string(period) + " exceeds " +
                            std::to_string(kOracleGuard));
  }
  const std::uint64_t n = to_u64(period);
  BigInt total(0);
  for (std::uint64_t j = 1; j <= n; ++j) {
    const BigInt jb(static_cast<unsigned long>(j));
    total += pow(jb, r) * crs_closed(CrsQuery(k, s, jb)).value;
  }
  return total;
}

BigInt weighted_sum_direct(std::uint64_t k, unsigned r, unsigned s) {
  if (k == 0) throw std::invalid_argument("weighted_sum_direct: k must be positive");
  return weighted_sum_direct(factorization_of(k), r, s);
}

ClosedFormTerms closed_form_terms(const Factorization& k, unsigned r, unsigned s) {
  require_positive(r, s, "closed_form_terms");
  ClosedFormTerms t;
  t.leading = jordan_density(k, s) / Rational(2);
  for (unsigned m = 1; m <= r / 2; ++m) {
    t.bernoulli_tail += Rational(binomial(r + 1, 2 * m)) * bernoulli_number(2 * m) *
                        jordan_density(k, 2 * m * s);
  }
  t.bernoulli_tail *= inverse_succ(r);
  return t;
}

WeightedAverageBreakdown weighted_average_closed(const Factorization& k, unsigned r,
                                                 unsigned s) {
  if (k.is_unit()) {
    throw std::invalid_argument("weighted_average_closed: requires k >= 2");
  }
  auto b = weighted_average_breakdown(k, r, s);
  return b;
}

WeightedAverageBreakdown weighted_average_closed(std::uint64_t k, unsigned r, unsigned s) {
  if (k == 0) throw std::invalid_argument("weighted_average_closed: k must be positive");
  return weighted_average_closed(factorization_of(k), r, s);
}

WeightedAverageBreakdown weighted_average_breakdown(const Factorization& k, unsigned r,
                                                    unsigned s) {
  const ClosedFormTerms t = closed_form_terms(k, r, s);
  WeightedAverageBreakdown b;
  b.r = r;
  b.s = s;
  b.k = k.value();
  b.leading = t.leading;
  b.bernoulli_tail = t.bernoulli_tail;
  if (k.is_unit()) {
    b.value = Rational(1);
  } else {
    b.value = t.leading + t.bernoulli_tail;
    b.delta_correction = delta_correction(k, r, s);
  }
  return b;
}

Rational weighted_average_value(const Factorization& k, unsigned r, unsigned s) {
  if (k.is_unit()) {
    require_positive(r, s, "weighted_average_value");
    return Rational(1);
  }
  const ClosedFormTerms t = closed_form_terms(k, r, s);
  return t.leading + t.bernoulli_tail;
}

Rational weighted_average_value(std::uint64_t k, unsigned r, unsigned s) {
  if (k == 0) throw std::invalid_argument("weighted_average_value: k must be positive");
  return weighted_average_value(factorization_of(k), r, s);
}

DeltaTerm delta_term(const BigInt& d, unsigned s, unsigned r) {
  require_positive(r, s, "delta_term");
  if (d < 2) throw std::invalid_argument("delta_term: d must be >= 2");
  const BigInt ds = pow(d, s);
  const Rational value =
      inverse_succ(r) - Rational(power_sum(r, ds), pow(ds, static_cast<unsigned long>(r) + 1));
  if (value.sign() <= 0 || value >= Rational(BigInt(1), ds)) {
    throw ConsistencyError("delta_term(" + to_string(d) + ", " + std::to_string(s) + ", " +
                           std::to_string(r) + ") = " + value.str() +
                           " outside (0, 1/d^s)");
  }
  return {d, s, r, value};
}

Rational delta_correction(const Factorization& k, unsigned r, unsigned s) {
  if (k.is_unit()) throw std::invalid_argument("delta_correction: requires k >= 2");
  Rational total;
  for (const auto& [d, mu] : squarefree_divisors(k)) {
    if (d == 1) continue;
    const Rational delta = delta_term(d, s, r).value;
    if (mu > 0) {
      total += delta;
    } else {
      total -= delta;
    }
  }
  return total;
}

Rational weighted_average_delta_form(const Factorization& k, unsigned r, unsigned s) {
  if (k.is_unit()) throw std::invalid_argument("weighted_average_delta_form: requires k >= 2");
  return jordan_density(k, s) - inverse_succ(r) - delta_correction(k, r, s);
}

Rational weighted_average_delta_form(std::uint64_t k, unsigned r, unsigned s) {
  if (k == 0) throw std::invalid_argument("weighted_average_delta_form: k must be positive");
  return weighted_average_delta_form(factorization_of(k), r, s);
}

std::vector<Rational> average_over_k_prefix(std::uint64_t x_max, unsigned r, unsigned s,
                                            unsigned threads) {
  require_positive(r, s, "average_over_k");
  const auto values = parallel_map(x_max, threads, [&](std::size_t i) {
    return weighted_average_value(static_cast<std::uint64_t>(i + 1), r, s);
  });
  std::vector<Rational> out;
  out.reserve(values.size());
  Rational running;
  for (std::size_t i = 0; i < values.size(); ++i) {
    running += values[i];
    out.push_back(running / Rational(static_cast<long>(i + 1)));
  }
  return out;
}

Rational average_over_k(std::uint64_t x, unsigned r, unsigned s) {
  if (x == 0) throw std::invalid_argument("average_over_k: x must be positive");
  return average_over_k_prefix(x, r, s).back();
}

Rational limit_r_infinity(const Factorization& k, unsigned s) {
  if (s == 0) throw std::invalid_argument("limit_r_infinity: s must be positive");
  return jordan_density(k, s);
}

Rational limit_r_infinity(std::uint64_t k, unsigned s) {
  if (k == 0) throw std::invalid_argument("limit_r_infinity: k must be positive");
  return limit_r_infinity(factorization_of(k), s);
}

}  // namespace crslab
