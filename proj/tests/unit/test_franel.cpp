#include <doctest.h>

#include "farey/farey.hpp"
#include "oracles.hpp"

using namespace farey;

namespace {
Fraction fr(std::int64_t h, std::int64_t k) { return Fraction(h, k); }

// sum over ranks [first, last] of |F_N(j) - (j - shift)/|F_N||, from the listing.
Rational listing_sum(std::int64_t n, std::size_t first, std::size_t last, std::int64_t shift = 0) {
  const auto f = oracle::farey_listing(n);
  const auto m = static_cast<std::int64_t>(f.size());
  Rational s = 0;
  for (std::size_t j = first; j <= last; ++j) {
    s += abs(Rational(f[j - 1].num(), f[j - 1].den()) - Rational(static_cast<std::int64_t>(j) - shift, m));
  }
  return s;
}
}  // namespace

TEST_CASE("full Franel sums") {
  CHECK(*full_franel_sum(1).sum_exact == Rational(1, 2));
  CHECK(*full_franel_sum(3).sum_exact == Rational(1, 2));
  CHECK(*full_franel_sum(5).sum_exact == Rational(59, 110));
  for (std::int64_t n = 1; n <= 40; ++n) {
    const FranelResult r = full_franel_sum(n);
    const Rational expected = listing_sum(n, 1, oracle::farey_listing(n).size());
    REQUIRE(*r.sum_exact == expected);
    CHECK(static_cast<double>(r.sum_float) == doctest::Approx(static_cast<double>(expected)).epsilon(1e-12));
  }
}

TEST_CASE("float mode agrees with exact mode") {
  for (const std::int64_t n : {50, 80, 120}) {
    const FranelResult r = full_franel_sum(n);
    REQUIRE(r.sum_exact);
    const double exact = static_cast<double>(*r.sum_exact);
    CHECK(std::fabs(static_cast<double>(r.sum_float) - exact) / exact < 1e-9);
  }
  FranelOptions no_exact;
  no_exact.exact_term_budget = 0;
  CHECK_FALSE(full_franel_sum(20, no_exact).sum_exact);
}

TEST_CASE("partial sums") {
  const FranelResult head = partial_franel_sum_range(6, fr(0, 1), fr(1, 3), 1);
  CHECK(head.term_count == CheckedInt{5});
  CHECK(head.last_rank == CheckedInt{5});
  CHECK(*head.sum_exact == listing_sum(6, 1, 5));

  CHECK(*partial_franel_sum_range(3, fr(0, 1), fr(1, 1), 1).sum_exact == Rational(1, 2));

  const FranelResult upper = partial_franel_sum_range(6, fr(1, 2), fr(1, 1), 7);
  CHECK(*upper.sum_exact == listing_sum(6, 7, 13));
  // Reflection x -> 1 - x, j -> M + 1 - j shifts each deviation by 1/M, so
  // the two halves differ (257/780 vs 61/260).
  const FranelResult lower = partial_franel_sum_range(6, fr(0, 1), fr(1, 2), 1);
  CHECK(*lower.sum_exact == Rational(257, 780));
  CHECK(*upper.sum_exact == Rational(61, 260));
  CHECK(*upper.sum_exact == listing_sum(6, 1, 7, 1));

  CHECK_THROWS_AS(partial_franel_sum_range(6, fr(1, 3), fr(1, 2), 4), DomainError);  // wrong anchor rank
  CHECK_THROWS_AS(partial_franel_sum_range(6, fr(1, 2), fr(1, 3), 7), DomainError);
}

TEST_CASE("whole sum is the sum of its parts") {
  for (const std::int64_t n : {7, 30, 64}) {
    const auto t = TotientTable::build(n);
    const std::vector cuts{fr(0, 1), fr(1, 5), fr(1, 3), fr(1, 2), fr(5, 7), fr(1, 1)};
    Rational total = 0;
    // Disjoint segments [c_k, c_{k+1}) realised as closed windows ending just before the next cut.
    const auto f = oracle::farey_listing(n);
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const auto lo_rank = rank_fast(n, cuts[k], t).rank.to_i64();
      const auto hi_rank = k + 2 == cuts.size() ? static_cast<std::int64_t>(f.size())
                                                : rank_fast(n, cuts[k + 1], t).rank.to_i64() - 1;
      total += *partial_franel_sum_range(n, cuts[k], f[hi_rank - 1], lo_rank, t).sum_exact;
    }
    CHECK(total == *full_franel_sum(n).sum_exact);
  }
}

TEST_CASE("reflected windows agree after the 1/M shift") {
  for (const std::int64_t n : {9, 25, 60}) {
    const auto t = TotientTable::build(n);
    const auto f = oracle::farey_listing(n);
    const Fraction lo(1, 4), hi(2, 5);
    const Fraction mlo(3, 5), mhi(3, 4);
    const Rational mirrored = *partial_franel_sum_range(n, mlo, mhi, rank_fast(n, mlo, t).rank, t).sum_exact;
    const auto first = static_cast<std::size_t>(oracle::listing_rank(f, lo));
    const auto last = static_cast<std::size_t>(oracle::listing_rank(f, hi));
    CHECK(mirrored == listing_sum(n, first, last, 1));
  }
}

TEST_CASE("term budget") {
  FranelOptions tight;
  tight.term_budget = 100;
  CHECK_THROWS_AS(full_franel_sum(100, tight), BudgetError);
}

TEST_CASE("Dress scan") {
  const DressReport d1 = dress_scan(1);
  CHECK(d1.max_term == Rational(1, 2));
  CHECK(d1.bound_ok);
  const DressReport d2 = dress_scan(2);
  CHECK(d2.max_term == Rational(1, 3));
  CHECK(d2.bound_ok);
  const DressReport d6 = dress_scan(6);
  CHECK(d6.max_term <= Rational(1, 6));
  CHECK(d6.rank2_term == Rational(1, 78));
  CHECK(d6.bound_ok);
  const auto sweep = dress_sweep(1, 200, {}, 2);
  REQUIRE(sweep.size() == 200);
  for (const auto& r : sweep) {
    CHECK(r.bound_ok);
    CHECK(r.max_term == full_franel_sum(r.order).max_term);
  }
}

TEST_CASE("Kanemitsu sum") {
  const KanemitsuResult k4 = kanemitsu_sum(4);
  CHECK(k4.cutoff_rank == CheckedInt{2});
  CHECK(k4.cardinality == CheckedInt{7});
  CHECK(*k4.exact == Rational(-1, 28));
  CHECK(*kanemitsu_sum(5).exact == Rational(9, 220));
  CHECK(static_cast<double>(kanemitsu_sum(5).value) == doctest::Approx(9.0 / 220));
  CHECK_THROWS_AS(kanemitsu_sum(3), DomainError);
}

TEST_CASE("vertex partial sums and growth scan") {
  const auto zero = VertexPair::make(fr(0, 1), Fraction::infinity());
  const GrowthScan g = growth_scan(zero, {4, 6, 8}, {}, 2);
  REQUIRE(g.rows.size() == 3);
  CHECK(g.rows[0].order == 12);
  CHECK(g.rows[1].order == 60);
  CHECK(g.rows[2].order == 840);
  for (const auto& row : g.rows) {
    CHECK(row.sum.sum_float > 0);
    CHECK_FALSE(row.predicted);
  }
  // i = 4, N = 12: the section runs from 0/1 to 1/q' with q' = 12/4 = 3.
  CHECK(g.rows[0].sum.hi == fr(1, 3));
  CHECK(*g.rows[0].sum.sum_exact == listing_sum(12, 1, oracle::listing_rank(oracle::farey_listing(12), fr(1, 3))));

  const auto third = VertexPair::make(fr(1, 3), fr(1, 2));
  const VertexPartialSum v = vertex_partial_sum(third, 4);
  CHECK(v.order == 36);
  REQUIRE(v.predicted);
  REQUIRE(v.measured_over_predicted);
  CHECK(*v.predicted > 0);
}
