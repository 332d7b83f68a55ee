#include "crslab/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "crslab/crs.hpp"
#include "crslab/exact.hpp"
#include "crslab/weighted.hpp"

namespace crslab {

namespace {

std::string str(std::uint64_t v) { return std::to_string(v); }

Rational inverse_succ(unsigned r) { return Rational(1, static_cast<unsigned long>(r) + 1); }

}  // namespace

std::string_view relation_symbol(Relation r) {
  switch (r) {
    case Relation::Equal: return "=";
    case Relation::Less: return "<";
    case Relation::LessEqual: return "<=";
    case Relation::Greater: return ">";
    case Relation::GreaterEqual: return ">=";
    case Relation::Trend: return "trend";
  }
  return "?";
}

bool relation_holds(const Rational& lhs, Relation rel, const Rational& rhs) {
  switch (rel) {
    case Relation::Equal: return lhs == rhs;
    case Relation::Less: return lhs < rhs;
    case Relation::LessEqual: return lhs <= rhs;
    case Relation::Greater: return lhs > rhs;
    case Relation::GreaterEqual: return lhs >= rhs;
    case Relation::Trend: break;
  }
  throw std::invalid_argument("relation_holds: trend is not a pointwise relation");
}

CheckReport make_check(std::string check_id, KeyValues inputs, Rational lhs, Relation rel,
                       Rational rhs, std::string anchor) {
  CheckReport c;
  c.check_id = std::move(check_id);
  c.inputs = std::move(inputs);
  c.holds = relation_holds(lhs, rel, rhs);
  c.margin = abs(lhs - rhs);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.relation = rel;
  c.paper_anchor = std::move(anchor);
  return c;
}

std::string_view variant_name(SequenceVariant v) {
  switch (v) {
    case SequenceVariant::BoundedOmega: return "bounded-omega";
    case SequenceVariant::Window: return "window";
    case SequenceVariant::WindowTimes2: return "window-times2";
  }
  return "?";
}

SequenceVariant parse_variant(std::string_view name) {
  if (name == "bounded-omega") return SequenceVariant::BoundedOmega;
  if (name == "window") return SequenceVariant::Window;
  if (name == "window-times2" || name == "window2") return SequenceVariant::WindowTimes2;
  throw std::invalid_argument("unknown sequence variant: " + std::string(name));
}

BeurlingSemigroup beurling_generate(std::span<const std::uint64_t> primes, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("beurling_generate: x must be positive");
  BeurlingSemigroup g;
  g.primes.assign(primes.begin(), primes.end());
  std::sort(g.primes.begin(), g.primes.end());
  g.primes.erase(std::unique(g.primes.begin(), g.primes.end()), g.primes.end());
  for (auto p : g.primes) {
    if (!is_prime(p)) throw std::invalid_argument("beurling_generate: " + str(p) + " is not prime");
  }
  g.bound = x;
  g.members = {1};
  for (auto p : g.primes) {
    const std::size_t existing = g.members.size();
    for (std::size_t i = 0; i < existing; ++i) {
      std::uint64_t v = g.members[i];
      while (v <= x / p) {
        v *= p;
        g.members.push_back(v);
      }
    }
  }
  std::sort(g.members.begin(), g.members.end());
  return g;
}

Rational density_estimate(std::span<const std::uint64_t> sorted, std::uint64_t x) {
  if (x == 0) throw std::invalid_argument("density_estimate: x must be positive");
  const auto lo = std::lower_bound(sorted.begin(), sorted.end(), std::uint64_t{1});
  const auto hi = std::upper_bound(sorted.begin(), sorted.end(), x);
  const auto count = static_cast<unsigned long>(hi - lo);
  return Rational(BigInt(count), BigInt(static_cast<unsigned long>(x)));
}

Factorization primorial_window(std::uint64_t n, const Rational& lambda) {
  if (n == 0) throw std::invalid_argument("primorial_window: n must be positive");
  if (lambda <= Rational(1)) throw std::invalid_argument("primorial_window: lambda must exceed 1");
  BigInt hi;
  const BigInt scaled = lambda.numerator() * static_cast<unsigned long>(n);
  mpz_fdiv_q(hi.get_mpz_t(), scaled.get_mpz_t(), lambda.denominator().get_mpz_t());
  const auto primes = primes_in_range(n, to_u64(hi));
  return Factorization::from_primes(primes);
}

Factorization primorial_window_times2(std::uint64_t n, const Rational& lambda) {
  if (n < 2) throw std::invalid_argument("primorial_window_times2: n must be >= 2");
  std::vector<PrimePower> pp = primorial_window(n, lambda).factors();
  pp.push_back({2, 1});
  return Factorization::from_prime_powers(std::move(pp));
}

Factorization sequence_term(SequenceVariant variant, std::uint64_t n, const Rational& lambda) {
  switch (variant) {
    case SequenceVariant::BoundedOmega: return factorization_of(nth_prime(n));
    case SequenceVariant::Window: return primorial_window(n, lambda);
    case SequenceVariant::WindowTimes2: return primorial_window_times2(n, lambda);
  }
  throw std::invalid_argument("sequence_term: bad variant");
}

Rational sequence_target(SequenceVariant variant, unsigned r, unsigned s) {
  if (variant != SequenceVariant::WindowTimes2) return Rational(1) - inverse_succ(r);
  const BigInt two_s = pow(BigInt(2), s);
  return Rational(two_s - 1, two_s) -
         Rational(power_sum(r, two_s), pow(two_s, static_cast<unsigned long>(r) + 1));
}

CheckReport check_theorem_3_1(const Factorization& k, unsigned r, unsigned s,
                              const Rational& eps) {
  if (eps <= Rational(0) || eps >= Rational(1)) {
    throw std::invalid_argument("check_theorem_3_1: eps must lie in (0, 1)");
  }
  if (r < 2) throw std::invalid_argument("check_theorem_3_1: r must be >= 2");
  if (k.is_unit()) throw std::invalid_argument("check_theorem_3_1: k must be >= 2");

  Rational reciprocal_sum;
  for (const auto& pp : k.factors()) {
    reciprocal_sum += Rational(BigInt(1), BigInt(static_cast<unsigned long>(pp.prime)));
  }
  const bool hypothesis = reciprocal_sum <= eps / Rational(2);

  const Rational w = weighted_average_value(k, r, s);
  const Rational center = jordan_density(k, s) - inverse_succ(r);
  const Rational alt_center = jordan_density(k, s) / Rational(2) - inverse_succ(r);
  const Rational bound = pow(eps, static_cast<long>(s));

  CheckReport c = make_check(
      "thm31",
      {{"k", to_string(k.value())}, {"r", str(r)}, {"s", str(s)}, {"eps", eps.str()}},
      abs(w - center), Relation::Less, bound, "Theorem 3.1");
  const bool conclusion = c.holds;
  c.hypothesis_met = hypothesis;
  c.holds = !hypothesis || conclusion;
  c.details = {
      {"hypothesis_lhs", reciprocal_sum.str()},
      {"hypothesis_rhs", (eps / Rational(2)).str()},
      {"conclusion_holds", conclusion ? "true" : "false"},
      {"value", w.str()},
      {"center", center.str()},
      {"alt_center", alt_center.str()},
      {"alt_center_distance", abs(w - alt_center).str()},
      {"note", "center J_s(k)/k^s - 1/(r+1) follows the delta-form identity; "
               "alt_center J_s(k)/(2k^s) - 1/(r+1) is reported for comparison"},
  };
  if (!hypothesis) c.details.emplace_back("status", "hypothesis not met; conclusion not asserted");
  return c;
}

ConvergenceReport check_theorem_3_2(SequenceVariant variant, unsigned r, unsigned s,
                                    std::span<const std::uint64_t> n_list,
                                    const Rational& lambda, const Rational& tolerance) {
  if (r == 0 || s == 0) throw std::invalid_argument("check_theorem_3_2: r and s must be positive");
  if (!std::is_sorted(n_list.begin(), n_list.end()) ||
      std::adjacent_find(n_list.begin(), n_list.end()) != n_list.end()) {
    throw std::invalid_argument("check_theorem_3_2: n list must be strictly increasing");
  }
  ConvergenceReport rep;
  rep.variant = variant;
  rep.sequence_id = std::string(variant_name(variant)) + "/r=" + str(r) + "/s=" + str(s);
  rep.r = r;
  rep.s = s;
  rep.lambda = lambda;
  rep.tolerance = tolerance;
  rep.target = sequence_target(variant, r, s);
  rep.paper_anchor = "Theorem 3.2";
  if (variant == SequenceVariant::WindowTimes2) {
    const BigInt two_s = pow(BigInt(2), s);
    rep.alt_target = Rational(1, 2) - Rational(power_sum(r, two_s),
                                               pow(two_s, static_cast<unsigned long>(r) + 1));
  }
  for (auto n : n_list) {
    ConvergenceRow row;
    row.n = n;
    row.target = rep.target;
    const Factorization k = sequence_term(variant, n, lambda);
    row.k_n = k.value();
    row.omega = omega(k);
    if (k.is_unit()) {
      row.note = "empty window";
    } else {
      row.value = weighted_average_value(k, r, s);
      row.gap = abs(*row.value - rep.target);
      rep.final_gap = row.gap;
    }
    rep.rows.push_back(std::move(row));
  }
  rep.converged = rep.final_gap.has_value() && *rep.final_gap < tolerance;
  return rep;
}

CheckReport check_theorem_3_3(std::uint64_t x, unsigned r, unsigned s) {
  return make_check("thm33", {{"x", str(x)}, {"r", str(r)}, {"s", str(s)}},
                    average_over_k(x, r, s), Relation::Greater, Rational(0), "Theorem 3.3");
}

CheckReport check_limit_trend(std::uint64_t k, unsigned s, unsigned r_lo, unsigned r_hi) {
  if (r_lo >= r_hi) throw std::invalid_argument("check_limit_trend: need r_lo < r_hi");
  const Rational limit = limit_r_infinity(k, s);
  const Rational gap_hi = abs(weighted_average_value(k, r_hi, s) - limit);
  const Rational gap_lo = abs(weighted_average_value(k, r_lo, s) - limit);
  KeyValues inputs{{"k", str(k)}, {"s", str(s)}, {"r_lo", str(r_lo)}, {"r_hi", str(r_hi)}};
  CheckReport c = k == 1 ? make_check("thm33.limit", std::move(inputs), gap_hi, Relation::Equal,
                                      Rational(0), "Theorem 3.3")
                         : make_check("thm33.limit", std::move(inputs), gap_hi, Relation::Less,
                                      gap_lo, "Theorem 3.3");
  c.details = {{"limit", limit.str()}, {"gap_r_lo", gap_lo.str()}};
  return c;
}

CheckReport check_theorem_3_4(std::uint64_t k, unsigned s) {
  if (k < 2) throw std::invalid_argument("check_theorem_3_4: k = 1 has an unbounded maximum");
  const Factorization& kf = factorization_of(k);
  const BigInt period = pow(kf.value(), s);
  if (period > kOracleGuard) {
    throw std::domain_error("check_theorem_3_4: k^s = " + to_string(period) + " exceeds " +
                            std::to_string(kOracleGuard));
  }
  const MaxPartialSum best = *crs_max_partial(kf, s);
  const Rational rhs = Rational(jordan_totient(2 * s, kf), 4 * period) +
                       Rational(jordan_totient(s, kf), BigInt(2));

  // Maximum over every cutoff M = 1..k^s, for comparison.
  BigInt running(0), max_any(0);
  std::uint64_t argmax_any = 1;
  const std::uint64_t n = to_u64(period);
  for (std::uint64_t j = 1; j <= n; ++j) {
    running += crs_closed(CrsQuery(kf, s, BigInt(static_cast<unsigned long>(j)))).value;
    if (abs(running) > max_any) {
      max_any = abs(running);
      argmax_any = j;
    }
  }

  CheckReport c = make_check("thm34", {{"k", str(k)}, {"s", str(s)}}, Rational(best.max_abs),
                             Relation::GreaterEqual, rhs, "Theorem 3.4");
  c.details = {
      {"argmax_n", str(best.argmax_n)},
      {"max_over_all_cutoffs", to_string(max_any)},
      {"argmax_cutoff", str(argmax_any)},
      {"bound_holds_over_all_cutoffs", Rational(max_any) >= rhs ? "true" : "false"},
  };
  return c;
}

CheckReport check_corollary(std::uint64_t k, unsigned r, unsigned s) {
  const Factorization& kf = factorization_of(k);
  const ClosedFormTerms t = closed_form_terms(kf, r, s);
  const Rational lhs = abs(Rational(1, 2) + t.bernoulli_tail / jordan_density(kf, s));
  const BigInt rhs = pow(kf.value(), static_cast<unsigned long>(s) * (s - 1)) *
                     pow(BigInt(2), omega(kf));
  return make_check("corollary", {{"k", str(k)}, {"r", str(r)}, {"s", str(s)}}, lhs,
                    Relation::LessEqual, Rational(rhs), "Corollary 3.5");
}

CheckReport check_three_forms(std::uint64_t k, unsigned r, unsigned s) {
  if (k < 2) throw std::invalid_argument("check_three_forms: k must be >= 2");
  const Factorization& kf = factorization_of(k);
  const Rational direct =
      Rational(weighted_sum_direct(kf, r, s),
               pow(kf.value(), static_cast<unsigned long>(s) * (r + 1)));
  const Rational closed = weighted_average_closed(kf, r, s).value;
  const Rational delta = weighted_average_delta_form(kf, r, s);
  CheckReport c = make_check("identities.three_forms",
                             {{"k", str(k)}, {"r", str(r)}, {"s", str(s)}}, direct,
                             Relation::Equal, closed, "weighted-average closed forms");
  c.details = {{"delta_form", delta.str()}};
  c.holds = c.holds && delta == closed;
  return c;
}

CheckReport check_zero_sum(std::uint64_t k, unsigned s) {
  if (k < 2) throw std::invalid_argument("check_zero_sum: k must be >= 2");
  const Factorization& kf = factorization_of(k);
  const BigInt period = pow(kf.value(), s);
  if (period > kOracleGuard) throw std::domain_error("check_zero_sum: k^s exceeds guard");
  BigInt total(0);
  const std::uint64_t n = to_u64(period);
  for (std::uint64_t j = 1; j <= n; ++j) {
    total += crs_closed(CrsQuery(kf, s, BigInt(static_cast<unsigned long>(j)))).value;
  }
  return make_check("identities.zero_sum", {{"k", str(k)}, {"s", str(s)}}, Rational(total),
                    Relation::Equal, Rational(0), "full-period sum");
}

CheckReport check_crs_agreement(std::uint64_t k, unsigned s) {
  const Factorization& kf = factorization_of(k);
  const BigInt period = pow(kf.value(), s);
  if (period > kOracleGuard) throw std::domain_error("check_crs_agreement: k^s exceeds guard");
  const std::uint64_t n = to_u64(period);
  std::uint64_t agree = 0;
  std::string first_mismatch;
  for (std::uint64_t j = 0; j < n; ++j) {
    const CrsQuery q(kf, s, BigInt(static_cast<unsigned long>(j)));
    const BigInt closed = crs_closed(q).value;
    const BigInt divisor = crs_divisor_oracle(q);
    const auto rounded = nearest_integer(crs_exponential_oracle(q));
    if (closed == divisor && rounded && BigInt(static_cast<long>(*rounded)) == closed) {
      ++agree;
    } else if (first_mismatch.empty()) {
      first_mismatch = str(j);
    }
  }
  CheckReport c = make_check("identities.crs_agreement", {{"k", str(k)}, {"s", str(s)}},
                             Rational(BigInt(static_cast<unsigned long>(agree))),
                             Relation::Equal, Rational(period), "generalized Ramanujan sum");
  if (!first_mismatch.empty()) c.details = {{"first_mismatch_j", first_mismatch}};
  return c;
}

CheckReport check_unit_dispatch(unsigned r, unsigned s) {
  const Factorization unit;
  const Rational dispatched = weighted_average_value(unit, r, s);
  const Rational direct(weighted_sum_direct(unit, r, s));
  const ClosedFormTerms t = closed_form_terms(unit, r, s);
  CheckReport c = make_check("identities.unit_k", {{"r", str(r)}, {"s", str(s)}}, dispatched,
                             Relation::Equal, direct, "weighted-average closed form at k = 1");
  c.details = {{"closed_form_at_k1", (t.leading + t.bernoulli_tail).str()},
               {"note", "the closed form gives 1 - 1/(r+1) at k = 1; the direct sum is 1"}};
  return c;
}

std::vector<Factorization> theorem_3_1_candidates(const Rational& eps) {
  if (eps <= Rational(0) || eps >= Rational(1)) {
    throw std::invalid_argument("theorem_3_1_candidates: eps must lie in (0, 1)");
  }
  // (4/eps, 12/eps] with exact rational endpoints.
  const Rational lo = Rational(4) / eps;
  const Rational hi = Rational(12) / eps;
  BigInt lo_floor, hi_floor;
  mpz_fdiv_q(lo_floor.get_mpz_t(), lo.numerator().get_mpz_t(), lo.denominator().get_mpz_t());
  mpz_fdiv_q(hi_floor.get_mpz_t(), hi.numerator().get_mpz_t(), hi.denominator().get_mpz_t());
  const auto primes = primes_in_range(to_u64(lo_floor), to_u64(hi_floor));
  std::uint64_t bound = 1;
  for (std::size_t i = 0; i < std::min<std::size_t>(3, primes.size()); ++i) {
    bound *= primes[primes.size() - 1 - i];
  }
  const BeurlingSemigroup g = beurling_generate(primes, bound);
  std::vector<Factorization> out;
  for (auto m : g.members) {
    if (m == 1) continue;
    const Factorization& f = factorization_of(m);
    if (f.is_squarefree() && omega(f) <= 3) out.push_back(f);
  }
  return out;
}

}  // namespace crslab
