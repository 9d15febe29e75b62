#include <doctest.h>

#include <boost/multiprecision/cpp_int.hpp>
#include <numbers>

#include "farey/farey.hpp"
#include "oracles.hpp"

using namespace farey;

TEST_CASE("totient table examples") {
  const auto t6 = TotientTable::build(6);
  const std::vector<std::int64_t> expected{1, 1, 2, 2, 4, 2};
  for (std::int64_t k = 1; k <= 6; ++k) CHECK(t6.phi(k) == expected[k - 1]);
  CHECK(t6.phi_sum(6) == CheckedInt{12});
  CHECK(t6.phi_sum(0) == CheckedInt{0});

  const auto t1 = TotientTable::build(1);
  CHECK(t1.phi(1) == 1);
  CHECK(t1.phi_sum(1) == CheckedInt{1});

  const auto t5 = TotientTable::build(5);
  CHECK(t5.phi_sum(5) == CheckedInt{10});
  CHECK(farey_cardinality(5, t5) == CheckedInt{11});
}

TEST_CASE("table errors") {
  CHECK_THROWS_AS(TotientTable::build(0), DomainError);
  CHECK_THROWS_AS(TotientTable::build(1000, 100), BudgetError);
  const auto t = TotientTable::build(10);
  CHECK_THROWS(t.phi(11));
}

TEST_CASE("phi matches gcd counting") {
  const auto t = TotientTable::build(2000);
  for (std::int64_t n = 1; n <= 2000; ++n) CHECK(t.phi(n) == oracle::phi_by_gcd(n));
}

TEST_CASE("divisor sum of phi is n") {
  const std::int64_t limit = 10000;
  const auto t = TotientTable::build(limit);
  std::vector<std::int64_t> acc(limit + 1, 0);
  for (std::int64_t d = 1; d <= limit; ++d) {
    for (std::int64_t m = d; m <= limit; m += d) acc[m] += t.phi(d);
  }
  for (std::int64_t n = 1; n <= limit; ++n) REQUIRE(acc[n] == n);
}

TEST_CASE("smallest prime factor") {
  const auto t = TotientTable::build(1000);
  for (std::int64_t n = 2; n <= 1000; ++n) {
    const std::int64_t p = t.smallest_prime_factor(n);
    CHECK(n % p == 0);
    for (std::int64_t d = 2; d < p; ++d) CHECK(n % d != 0);
  }
}

TEST_CASE("farey cardinality matches enumeration") {
  const auto t = TotientTable::build(300);
  CHECK(farey_cardinality(3, t) == CheckedInt{5});
  CHECK(farey_cardinality(1, t) == CheckedInt{2});
  CHECK(farey_cardinality(6, t) == CheckedInt{13});
  for (std::int64_t n = 1; n <= 300; ++n) {
    REQUIRE(farey_cardinality(n, t) == CheckedInt{static_cast<std::int64_t>(oracle::farey_listing(n).size())});
  }
}

TEST_CASE("scaled phi ratio sum") {
  const auto t = TotientTable::build(20);
  CHECK(scaled_phi_ratio_sum(3, 6, t) == CheckedInt{13});
  CHECK(scaled_phi_ratio_sum(1, 6, t) == CheckedInt{6});
  CHECK(scaled_phi_ratio_sum(4, 12, t) == CheckedInt{32});
  CHECK_THROWS_AS(scaled_phi_ratio_sum(4, 6, t), DomainError);
}

TEST_CASE("lcm_range") {
  CHECK(lcm_range(2) == CheckedInt{2});
  CHECK(lcm_range(3) == CheckedInt{6});
  CHECK(lcm_range(4) == CheckedInt{12});
  CHECK(lcm_range(12) == CheckedInt{27720});
  CHECK_THROWS_AS(lcm_range(1), DomainError);
  CHECK_THROWS_AS(lcm_range(200), OverflowError);
}

TEST_CASE("error terms") {
  const auto t = TotientTable::build(10000);
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(static_cast<double>(error_terms(1, t).e_n) == doctest::Approx(1 - 3 / pi2).epsilon(1e-12));
  CHECK(static_cast<double>(error_terms(1, t).e_n) == doctest::Approx(0.6960).epsilon(1e-4));
  CHECK(static_cast<double>(error_terms(6, t).e_n) == doctest::Approx(12 - 108 / pi2).epsilon(1e-12));
  CHECK(static_cast<double>(error_terms(6, t).e_n) == doctest::Approx(1.0572).epsilon(1e-4));
  const auto big = error_terms(10000, t);
  CHECK(std::fabs(static_cast<double>(big.e_n)) / 10000 < 1);
  CHECK(std::fabs(static_cast<double>(big.e_n)) / 1e8 < 1e-2);

  // H(n) against an exact rational sum of phi(k)/k.
  using boost::multiprecision::cpp_rational;
  cpp_rational exact = 0;
  const auto series = error_term_series(60, t);
  REQUIRE(series.size() == 60);
  for (std::int64_t n = 1; n <= 60; ++n) {
    exact += cpp_rational(t.phi(n), n);
    const double expected = static_cast<double>(exact) - 6.0 * static_cast<double>(n) / pi2;
    CHECK(series[n - 1].n == n);
    CHECK(static_cast<double>(series[n - 1].h_n) == doctest::Approx(expected).epsilon(1e-12));
  }
}
