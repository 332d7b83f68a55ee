#include <doctest.h>

#include <numeric>
#include <set>

#include "brute.hpp"
#include "crslab/crs.hpp"

using namespace crslab;

namespace {

BigInt closed(std::uint64_t k, unsigned s, long j) { return crs_closed(CrsQuery(k, s, BigInt(j))).value; }

std::vector<long> period_values(std::uint64_t k, unsigned s) {
  std::vector<long> out;
  const auto ks = brute::ipow(k, s);
  for (std::uint64_t j = 1; j <= ks; ++j) out.push_back(closed(k, s, static_cast<long>(j)).get_si());
  return out;
}

}  // namespace

TEST_CASE("query normalizes j into [0, k^s)") {
  const CrsQuery q(6, 2, BigInt(-1));
  CHECK(q.j() == 35);
  CHECK(q.period() == 36);
  CHECK(CrsQuery(6, 2, BigInt(72)).j() == 0);
  CHECK(CrsQuery(6, 2, BigInt(72)).j_star() == 36);
  CHECK_THROWS_AS(CrsQuery(0, 1, BigInt(1)), std::invalid_argument);
  CHECK_THROWS_AS(CrsQuery(3, 0, BigInt(1)), std::invalid_argument);
}

TEST_CASE("closed form examples") {
  for (unsigned s = 1; s <= 4; ++s) {
    for (long j = -3; j <= 20; ++j) CHECK(closed(1, s, j) == 1);
  }
  for (std::uint64_t k = 1; k <= 12; ++k) {
    for (unsigned s = 1; s <= 2; ++s) CHECK(closed(k, s, 0) == jordan_totient(s, k));
  }
  CHECK(closed(2, 1, 1) == -1);
  CHECK(closed(2, 2, 1) == -1);
  const auto e = crs_closed(CrsQuery(12, 1, BigInt(8)));
  CHECK(e.gcd_s == 4);
  CHECK(e.d == 3);
  CHECK(e.value == -2);
}

TEST_CASE("frozen period tables from an independent exponential sum") {
  CHECK(period_values(12, 1) == std::vector<long>{0, 2, 0, -2, 0, -4, 0, -2, 0, 2, 0, 4});
  CHECK(period_values(8, 1) == std::vector<long>{0, 0, 0, -4, 0, 0, 0, 4});
  std::vector<long> k4s2(16, 0);
  k4s2[3] = k4s2[7] = k4s2[11] = -4;
  k4s2[15] = 12;
  CHECK(period_values(4, 2) == k4s2);
  CHECK(period_values(6, 2) ==
        std::vector<long>{1,  1, 1, -3, 1,  1, 1, -3, -8, 1, 1, -3, 1, 1, 1, -3, 1,  -8,
                          1, -3, 1, 1,  1, -3, 1, 1,  -8, -3, 1, 1, 1, -3, 1, 1, 1, 24});
}

TEST_CASE("closed form against the test-side brute force") {
  for (std::uint64_t k = 1; k <= 24; ++k) {
    for (unsigned s = 1; s <= 2; ++s) {
      const auto ks = brute::ipow(k, s);
      if (ks > 600) continue;
      for (std::uint64_t j = 0; j < ks; ++j) {
        CHECK(closed(k, s, static_cast<long>(j)) == brute::crs(k, s, j));
      }
    }
  }
}

TEST_CASE("three evaluators agree") {
  for (std::uint64_t k = 1; k <= 30; ++k) {
    for (unsigned s = 1; s <= 2; ++s) {
      if (brute::ipow(k, s) > kOracleGuard) continue;
      for (std::uint64_t j = 0; j < brute::ipow(k, s); ++j) {
        const CrsQuery q(k, s, BigInt(static_cast<unsigned long>(j)));
        const auto c = crs_closed(q).value;
        CHECK(crs_divisor_oracle(q) == c);
        const auto rounded = nearest_integer(crs_exponential_oracle(q));
        REQUIRE(rounded.has_value());
        CHECK(*rounded == c.get_si());
      }
    }
  }
}

TEST_CASE("oracle spot values and guard") {
  CHECK(crs_divisor_oracle(CrsQuery(1, 1, BigInt(0))) == 1);
  CHECK(crs_divisor_oracle(CrsQuery(2, 1, BigInt(1))) == -1);
  CHECK(crs_divisor_oracle(CrsQuery(4, 1, BigInt(2))) == closed(4, 1, 2));
  const auto z = crs_exponential_oracle(CrsQuery(2, 1, BigInt(1)));
  CHECK(std::abs(z - std::complex<double>(-1, 0)) < 1e-6);
  CHECK(nearest_integer(crs_exponential_oracle(CrsQuery(1, 3, BigInt(7)))) == 1);
  CHECK(nearest_integer(crs_exponential_oracle(CrsQuery(6, 1, BigInt(2)))) ==
        closed(6, 1, 2).get_si());
  CHECK_THROWS_AS(crs_exponential_oracle(CrsQuery(101, 2, BigInt(1))), std::domain_error);
  CHECK_FALSE(nearest_integer({0.5, 0.0}).has_value());
  CHECK_FALSE(nearest_integer({1.0, 1e-3}).has_value());
}

TEST_CASE("classical reduction at s = 1") {
  // c_k(j) = mu(k/g) phi(k) / phi(k/g), g = gcd(j, k)
  for (std::uint64_t k = 1; k <= 50; ++k) {
    for (std::uint64_t j = 1; j <= k; ++j) {
      const auto m = k / std::gcd(j, k);
      const auto expected = brute::mobius(m) * static_cast<long>(to_u64(jordan_totient(1, k))) /
                            static_cast<long>(to_u64(jordan_totient(1, m)));
      CHECK(closed(k, 1, static_cast<long>(j)) == expected);
    }
  }
}

TEST_CASE("periodicity, value bound, zero full-period sum") {
  for (std::uint64_t k = 1; k <= 30; ++k) {
    for (unsigned s = 1; s <= 2; ++s) {
      const auto ks = brute::ipow(k, s);
      const auto js = jordan_totient(s, k);
      BigInt sum = 0;
      for (std::uint64_t j = 1; j <= ks; ++j) {
        const auto e = crs_closed(CrsQuery(k, s, BigInt(static_cast<unsigned long>(j))));
        CHECK(e.value == closed(k, s, static_cast<long>(j + ks)));
        CHECK(abs(e.value) <= js);
        CHECK((e.value == js) == (e.gcd_s == ks));
        CHECK(pow(e.d, s) * e.gcd_s == ks);
        CHECK(ks % to_u64(pow(e.d, s)) == 0);
        sum += e.value;
      }
      CHECK(sum == (k == 1 ? 1 : 0));
    }
  }
}

TEST_CASE("nonzero values come from exactly 2^omega(k) divisors d") {
  for (std::uint64_t k = 1; k <= 30; ++k) {
    std::set<std::uint64_t> ds;
    for (std::uint64_t j = 1; j <= k * k; ++j) {
      const auto e = crs_closed(CrsQuery(k, 2, BigInt(static_cast<unsigned long>(j))));
      if (e.value != 0) ds.insert(to_u64(e.d));
    }
    CHECK(ds.size() == (std::size_t{1} << omega(k)));
  }
}

TEST_CASE("partial sums") {
  CHECK(crs_partial_sum(2, 1, 2) == 0);
  CHECK(crs_partial_sum(1, 2, 5) == 5);
  CHECK(crs_partial_sum(6, 1, 3) == -2);
  CHECK(crs_partial_sum(12, 1, 7) == -4);
  CHECK(crs_partial_sum(6, 2, pow(BigInt(10), 40) + 9) == 1);
  for (std::uint64_t k = 1; k <= 15; ++k) {
    for (unsigned s = 1; s <= 2; ++s) {
      BigInt running = 0;
      for (std::uint64_t m = 1; m <= 3 * brute::ipow(k, s); ++m) {
        running += closed(k, s, static_cast<long>(m));
        CHECK(crs_partial_sum(k, s, BigInt(static_cast<unsigned long>(m))) == running);
      }
    }
  }
}

TEST_CASE("max partial sum frozen values") {
  struct Row {
    std::uint64_t k;
    unsigned s;
    long max;
    std::uint64_t n;
  };
  for (const auto& [k, s, max, n] : std::vector<Row>{{2, 1, 1, 1},
                                                      {3, 1, 2, 2},
                                                      {6, 1, 3, 4},
                                                      {12, 1, 6, 8},
                                                      {2, 2, 1, 1},
                                                      {4, 2, 8, 3},
                                                      {6, 2, 27, 8}}) {
    const auto m = crs_max_partial(k, s);
    REQUIRE(m.has_value());
    CHECK(m->max_abs == max);
    CHECK(m->argmax_n == n);
  }
  CHECK_FALSE(crs_max_partial(1, 1).has_value());
}

TEST_CASE("max partial scan over one period already sees every cutoff class") {
  for (std::uint64_t k = 2; k <= 10; ++k) {
    for (unsigned s = 1; s <= 2; ++s) {
      const auto once = crs_max_partial(k, s);
      const auto twice = crs_max_partial(k, s, 2);
      CHECK(once->max_abs == twice->max_abs);
      CHECK(once->argmax_n == twice->argmax_n);
      // brute force over N <= 2 k^s with literal partial sums
      BigInt best = 0;
      for (std::uint64_t n = 1; n <= 2 * brute::ipow(k, s); ++n) {
        BigInt sum = 0;
        const auto cutoff = brute::ipow(n, s) % brute::ipow(k, s);
        for (std::uint64_t j = 1; j <= cutoff; ++j) sum += closed(k, s, static_cast<long>(j));
        if (abs(sum) > best) best = abs(sum);
      }
      CHECK(once->max_abs == best);
    }
  }
}
