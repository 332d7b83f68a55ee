#include <doctest.h>

#include <algorithm>

#include "brute.hpp"
#include "crslab/suites.hpp"
#include "crslab/verify.hpp"
#include "crslab/weighted.hpp"

using namespace crslab;

namespace {

Rational q(long p, long d) { return Rational(BigInt(p), BigInt(d)); }

std::string detail(const CheckReport& c, std::string_view key) {
  for (const auto& [k, v] : c.details) {
    if (k == key) return v;
  }
  return "<missing>";
}

}  // namespace

TEST_CASE("relations") {
  CHECK(relation_holds(Rational(1), Relation::Less, Rational(2)));
  CHECK_FALSE(relation_holds(Rational(2), Relation::Less, Rational(2)));
  CHECK(relation_holds(Rational(2), Relation::LessEqual, Rational(2)));
  CHECK(relation_holds(Rational(2), Relation::GreaterEqual, Rational(2)));
  CHECK_FALSE(relation_holds(Rational(2), Relation::Greater, Rational(2)));
  CHECK(relation_holds(q(1, 2), Relation::Equal, q(2, 4)));
  CHECK_THROWS(relation_holds(Rational(1), Relation::Trend, Rational(1)));
  const auto c = make_check("x", {}, q(1, 3), Relation::Less, q(1, 2), "a");
  CHECK(c.holds);
  CHECK(c.margin == q(1, 6));
}

TEST_CASE("beurling semigroups") {
  CHECK(beurling_generate({}, 100).members == std::vector<std::uint64_t>{1});
  const std::uint64_t two[] = {2};
  CHECK(beurling_generate(two, 10).members == std::vector<std::uint64_t>{1, 2, 4, 8});
  const std::uint64_t two_three[] = {3, 2};
  CHECK(beurling_generate(two_three, 12).members ==
        std::vector<std::uint64_t>{1, 2, 3, 4, 6, 8, 9, 12});
  const std::uint64_t bad[] = {2, 4};
  CHECK_THROWS_AS(beurling_generate(bad, 10), std::invalid_argument);
  CHECK_THROWS_AS(beurling_generate(two, 0), std::invalid_argument);
}

TEST_CASE("beurling generation is closed and complete") {
  auto gen = brute::rng(99);
  const std::vector<std::uint64_t> pool{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::uint64_t> p;
    for (auto prime : pool) {
      if (gen() % 3 == 0) p.push_back(prime);
    }
    const std::uint64_t x = 10'000;
    std::vector<std::uint64_t> expected;
    for (std::uint64_t n = 1; n <= x; ++n) {
      std::uint64_t m = n;
      for (auto prime : p) {
        while (m % prime == 0) m /= prime;
      }
      if (m == 1) expected.push_back(n);
    }
    const auto sg = beurling_generate(p, x);
    CHECK(sg.members == expected);
    for (auto a : sg.members) {
      for (auto b : sg.members) {
        if (a * b > x) break;
        CHECK(std::binary_search(sg.members.begin(), sg.members.end(), a * b));
      }
    }
  }
}

TEST_CASE("density estimate") {
  const std::uint64_t one[] = {1};
  CHECK(density_estimate(one, 10) == q(1, 10));
  std::vector<std::uint64_t> evens;
  for (std::uint64_t n = 2; n <= 100; n += 2) evens.push_back(n);
  CHECK(density_estimate(evens, 100) == q(1, 2));
  const std::uint64_t two_three[] = {2, 3};
  const auto members = beurling_generate(two_three, 1000).members;
  CHECK(density_estimate(members, 1000) < density_estimate(members, 100));
}

TEST_CASE("primorial windows") {
  CHECK(primorial_window(1, Rational(2)).value() == 2);
  CHECK(primorial_window(10, Rational(2)).value() == 46189);
  CHECK(primorial_window(4, q(3, 2)).value() == 5);
  CHECK(primorial_window(7, q(8, 7)).is_unit());
  CHECK(primorial_window_times2(10, Rational(2)).value() == 92378);
  CHECK(primorial_window_times2(4, q(3, 2)).value() == 10);
  CHECK(primorial_window_times2(2, Rational(2)).value() == 6);
  CHECK_THROWS_AS(primorial_window_times2(1, Rational(2)), std::invalid_argument);
  CHECK_THROWS_AS(primorial_window(5, Rational(1)), std::invalid_argument);
  CHECK(omega(primorial_window(40, Rational(2))) == 10);
  CHECK(sequence_term(SequenceVariant::BoundedOmega, 5, Rational(2)).value() == 11);
}

TEST_CASE("variant names") {
  CHECK(parse_variant("window2") == SequenceVariant::WindowTimes2);
  CHECK(parse_variant("window-times2") == SequenceVariant::WindowTimes2);
  CHECK(parse_variant("bounded-omega") == SequenceVariant::BoundedOmega);
  CHECK(variant_name(SequenceVariant::Window) == "window");
  CHECK_THROWS_AS(parse_variant("primes"), std::invalid_argument);
}

TEST_CASE("sequence targets") {
  CHECK(sequence_target(SequenceVariant::Window, 2, 1) == q(2, 3));
  CHECK(sequence_target(SequenceVariant::WindowTimes2, 1, 1) == q(1, 4));
  // s = 2: 3/4 - S_2(4)/4^3 = 3/4 - 14/64
  CHECK(sequence_target(SequenceVariant::WindowTimes2, 2, 2) == q(3, 4) - q(14, 64));
}

TEST_CASE("epsilon-closeness reports") {
  const auto holds = check_theorem_3_1(factorization_of(143), 4, 1, q(1, 2));
  CHECK(holds.hypothesis_met == true);
  CHECK(holds.holds);
  CHECK(detail(holds, "hypothesis_lhs") == "24/143");
  CHECK(detail(holds, "hypothesis_rhs") == "1/4");
  const auto s2 = check_theorem_3_1(factorization_of(143), 4, 2, q(1, 2));
  CHECK(s2.holds);
  CHECK(s2.rhs == q(1, 4));
  CHECK(s2.lhs < s2.rhs);
  const auto unmet = check_theorem_3_1(factorization_of(6), 4, 1, q(1, 2));
  CHECK(unmet.hypothesis_met == false);
  CHECK(unmet.holds);
  CHECK(detail(unmet, "hypothesis_lhs") == "5/6");
  CHECK(detail(unmet, "status") != "<missing>");
  CHECK_THROWS_AS(check_theorem_3_1(factorization_of(6), 1, 1, q(1, 2)), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem_3_1(factorization_of(6), 2, 1, Rational(1)),
                  std::invalid_argument);
}

TEST_CASE("epsilon-closeness candidates") {
  const auto ks = theorem_3_1_candidates(q(1, 2));
  REQUIRE_FALSE(ks.empty());
  for (const auto& k : ks) {
    CHECK(k.is_squarefree());
    CHECK(k.factors().size() >= 1);
    CHECK(k.factors().size() <= 3);
    for (const auto& pp : k.factors()) {
      CHECK(pp.prime > 8);
      CHECK(pp.prime <= 24);
    }
  }
  // primes 11, 13, 17, 19, 23: 5 + 10 + 10 products
  CHECK(ks.size() == 25);
  CHECK(std::is_sorted(ks.begin(), ks.end(),
                       [](const auto& a, const auto& b) { return a.value() < b.value(); }));
}

TEST_CASE("sequence convergence reports") {
  const std::uint64_t ns[] = {1, 2, 3, 4, 5};
  const auto bo = check_theorem_3_2(SequenceVariant::BoundedOmega, 1, 1, ns, Rational(2), q(1, 5));
  CHECK(bo.target == q(1, 2));
  for (const auto& row : bo.rows) {
    const auto p = to_u64(row.k_n);
    CHECK(row.gap == q(1, 2 * static_cast<long>(p)));
  }
  CHECK(bo.converged == (*bo.final_gap < bo.tolerance));

  const std::uint64_t with_empty[] = {1, 7, 10};
  const auto w = check_theorem_3_2(SequenceVariant::Window, 2, 1, with_empty, q(8, 7), q(1, 20));
  CHECK(w.rows[1].note == "empty window");
  CHECK_FALSE(w.rows[1].value.has_value());

  const std::uint64_t ten[] = {10};
  const auto w2 = check_theorem_3_2(SequenceVariant::WindowTimes2, 1, 1, ten, Rational(2), q(1, 20));
  CHECK(w2.target == q(1, 4));
  CHECK(w2.alt_target == q(1, 4));

  const std::uint64_t unsorted[] = {5, 2};
  CHECK_THROWS_AS(check_theorem_3_2(SequenceVariant::Window, 2, 1, unsorted, Rational(2), q(1, 20)),
                  std::invalid_argument);
}

TEST_CASE("average positivity and the limit trend") {
  CHECK(check_theorem_3_3(1, 1, 1).lhs == Rational(1));
  CHECK(check_theorem_3_3(2, 2, 1).lhs == q(11, 16));
  CHECK(check_theorem_3_3(200, 10, 2).holds);
  for (std::uint64_t k = 1; k <= 10; ++k) {
    for (unsigned s = 1; s <= 2; ++s) CHECK(check_limit_trend(k, s, 20, 40).holds);
  }
  CHECK(check_limit_trend(1, 1, 20, 40).relation == Relation::Equal);
}

TEST_CASE("max partial sum bound reports") {
  const auto c = check_theorem_3_4(2, 1);
  CHECK(c.lhs == Rational(1));
  CHECK(c.rhs == q(7, 8));
  CHECK(c.holds);
  CHECK(check_theorem_3_4(3, 1).rhs == q(5, 3));
  CHECK(check_theorem_3_4(3, 1).holds);
  CHECK_THROWS_AS(check_theorem_3_4(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(check_theorem_3_4(101, 2), std::domain_error);
  // N^s cutoffs fall short at s = 2 for k = 2 and 4; arbitrary cutoffs do not.
  for (std::uint64_t k : {2, 4}) {
    const auto r = check_theorem_3_4(k, 2);
    CHECK_FALSE(r.holds);
    CHECK(detail(r, "bound_holds_over_all_cutoffs") == "true");
  }
  CHECK(check_theorem_3_4(2, 2).rhs == q(39, 16));
  CHECK(detail(check_theorem_3_4(2, 2), "max_over_all_cutoffs") == "3");
}

TEST_CASE("corollary reports") {
  const auto k1 = check_corollary(1, 5, 3);
  CHECK(k1.lhs == q(5, 6));
  CHECK(k1.rhs == Rational(1));
  CHECK(k1.holds);
  const auto k2 = check_corollary(2, 3, 1);
  CHECK(k2.lhs == q(7, 8));
  CHECK(k2.rhs == Rational(2));
  CHECK(check_corollary(6, 10, 2).holds);
}

TEST_CASE("identity checks") {
  CHECK(check_three_forms(4, 3, 1).holds);
  CHECK(check_zero_sum(12, 2).holds);
  CHECK(check_crs_agreement(12, 2).holds);
  CHECK(check_crs_agreement(12, 2).lhs == Rational(144));
  const auto unit = check_unit_dispatch(4, 2);
  CHECK(unit.holds);
  CHECK(detail(unit, "closed_form_at_k1") == "4/5");
}

TEST_CASE("suites are deterministic across thread counts") {
  SuiteOptions one;
  one.k_max = 8;
  one.r_max = 4;
  SuiteOptions four = one;
  four.threads = 4;
  for (std::string_view name : {"identities", "corollary", "thm34"}) {
    const auto a = run_suite(name, one);
    const auto b = run_suite(name, four);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      const auto& ca = std::get<CheckReport>(a[i]);
      const auto& cb = std::get<CheckReport>(b[i]);
      CHECK(ca.check_id == cb.check_id);
      CHECK(ca.inputs == cb.inputs);
      CHECK(ca.lhs == cb.lhs);
      CHECK(ca.holds == cb.holds);
    }
  }
  CHECK_THROWS_AS(run_suite("nope", one), std::invalid_argument);
}
