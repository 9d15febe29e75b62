#include <doctest.h>

#include <numbers>

#include "farey/farey.hpp"
#include "oracles.hpp"

using namespace farey;

namespace {
Fraction fr(std::int64_t h, std::int64_t k) { return Fraction(h, k); }
}  // namespace

TEST_CASE("exact index examples") {
  CHECK(exact_index_unit_fraction(3, 2).value == CheckedInt{7});
  CHECK(exact_index_unit_fraction(3, 6).value == CheckedInt{2});
  CHECK(exact_index_unit_fraction(3, 3).value == CheckedInt{5});
  CHECK(exact_index_unit_fraction(3, 3).error_order == ErrorOrder::exact);
  CHECK(exact_index_unit_fraction(3, 3).i == 2);
  CHECK_THROWS_AS(exact_index_unit_fraction(3, 1), DomainError);
  CHECK_THROWS_AS(exact_index_unit_fraction(3, 7), DomainError);
  CHECK_THROWS_AS(exact_index_unit_fraction(1, 1), DomainError);
}

TEST_CASE("exact index equals listing rank for i_max <= 8, every q") {
  for (std::int64_t i_max = 2; i_max <= 8; ++i_max) {
    const std::int64_t n = lcm_range(i_max).to_i64();
    const auto listing = oracle::farey_listing(n);
    for (std::int64_t q = (n + i_max - 1) / i_max; q <= n; ++q) {
      INFO("i_max=" << i_max << " q=" << q);
      REQUIRE(exact_index_unit_fraction(i_max, q).value == CheckedInt{oracle::listing_rank(listing, fr(1, q))});
    }
  }
}

TEST_CASE("asymptotic index") {
  const double pi2 = std::numbers::pi * std::numbers::pi;
  CHECK(static_cast<double>(asymptotic_index_zero(6, 6)) == doctest::Approx(108.0 / (6 * pi2)));
  CHECK(static_cast<double>(asymptotic_index_zero(6, 6)) == doctest::Approx(1.8238).epsilon(1e-4));
  for (const std::int64_t n : {10, 100, 1000}) {
    CHECK(static_cast<double>(asymptotic_index_zero(n, n)) == doctest::Approx(3.0 * n / pi2));
  }
  const auto t = TotientTable::build(840);
  const double c_zero =
      std::fabs(exact_index_unit_fraction(7, 120, t).value.to_double() - static_cast<double>(asymptotic_index_zero(840, 120))) /
      840;
  MESSAGE("N=840, q=120: |exact - asymptotic| / N = " << c_zero);
  CHECK(c_zero < 4);

  CHECK(farey_cardinality(12, t) == CheckedInt{47});
  CHECK(static_cast<double>(asymptotic_index_half(12, 3, 47)) == doctest::Approx(23.5 + 432.0 / (12 * pi2)));
  double c_half = 0;
  const std::int64_t n = 840;
  const CheckedInt m = farey_cardinality(n, t);
  // The estimate is meant for bounded i = N / (2q); take i <= 7.
  for (std::int64_t q = n / 14; q <= n / 2; ++q) {
    const double exact = rank_fast(n, fr(q + 1, 2 * q + 1), t).rank.to_double();
    c_half = std::max(c_half, std::fabs(exact - static_cast<double>(asymptotic_index_half(n, q, m))) / n);
  }
  MESSAGE("N=840: max |rank((q+1)/(2q+1)) - asymptotic| / N = " << c_half);
  CHECK(c_half < 4);
  for (std::int64_t k = 2; k <= 300; ++k) {
    CHECK(rank_fast(k, fr(1, 2), t).rank * CheckedInt{2} == farey_cardinality(k, t) + CheckedInt{1});
  }
}

TEST_CASE("general estimate has an O(i^2) error") {
  double worst = 0;
  for (std::int64_t eta = 2; eta <= 5; ++eta) {
    for (const auto& pair : vertex_pairs_with_eta(eta)) {
      for (std::int64_t i_max = 2; i_max <= 6; ++i_max) {
        const std::int64_t reduced = lcm_range(i_max).to_i64();
        const std::int64_t n = eta * reduced;
        const auto t = TotientTable::build(n);
        const CheckedInt base = rank_fast(n, pair.vertex(), t).rank;
        for (std::int64_t q = (reduced + i_max - 1) / i_max; q <= reduced; ++q) {
          const IndexEstimate est = general_index_estimate(pair, i_max, q, base, t);
          CHECK(est.error_order == ErrorOrder::quadratic_in_i);
          const double err = (rank_fast(n, est.target, t).rank - est.value).to_double();
          const double i = static_cast<double>(est.i);
          worst = std::max(worst, std::fabs(err) / (i * i));
        }
      }
    }
  }
  MESSAGE("max |error| / i^2 = " << worst);
  CHECK(worst <= 4.0);
}

TEST_CASE("general estimate at i = 1 reduces to base + s (N/eta - q)") {
  const auto t = TotientTable::build(100);
  const auto half = VertexPair::make(fr(1, 2), fr(0, 1));
  const IndexEstimate est = general_index_estimate(half, 4, 12, 100, t);
  CHECK(est.i == 1);
  CHECK(est.value == CheckedInt{100});
  const auto up = VertexPair::make(fr(1, 2), fr(1, 1));
  const IndexEstimate e2 = general_index_estimate(up, 4, 7, 100, t);
  CHECK(e2.i == 1);
  CHECK(e2.value == CheckedInt{100 + (12 - 7)});
}

TEST_CASE("general estimate rejects eta = 1 and out-of-range q") {
  const auto t = TotientTable::build(100);
  CHECK_THROWS_AS(general_index_estimate(VertexPair::make(fr(0, 1), Fraction::infinity()), 3, 2, 1, t),
                  DomainError);
  const auto half = VertexPair::make(fr(1, 2), fr(0, 1));
  CHECK_THROWS_AS(general_index_estimate(half, 3, 7, 1, t), DomainError);
  CHECK_THROWS_AS(general_index_estimate(half, 3, 1, 1, t), DomainError);
}

TEST_CASE("log-spaced q grid") {
  const auto qs = log_spaced_q(27720, 12, 50);
  CHECK(qs.front() == 2310);
  CHECK(qs.back() == 27720);
  CHECK(std::is_sorted(qs.begin(), qs.end()));
  CHECK(std::adjacent_find(qs.begin(), qs.end()) == qs.end());
  CHECK(qs.size() <= 50);
  CHECK(qs.size() >= 40);
}
