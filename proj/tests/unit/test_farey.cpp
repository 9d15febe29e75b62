#include <doctest.h>

#include <random>

#include "farey/farey.hpp"
#include "oracles.hpp"

using namespace farey;

namespace {
Fraction fr(std::int64_t h, std::int64_t k) { return Fraction(h, k); }
}  // namespace

TEST_CASE("next_farey examples") {
  CHECK(next_farey(5, fr(0, 1), fr(1, 5)) == fr(1, 4));
  CHECK(next_farey(5, fr(2, 5), fr(1, 2)) == fr(3, 5));
  CHECK(next_farey(2, fr(0, 1), fr(1, 2)) == fr(1, 1));
  CHECK_THROWS_AS(next_farey(5, fr(0, 1), fr(1, 2)), DomainError);
}

TEST_CASE("next_farey walks the whole listing") {
  for (std::int64_t n = 2; n <= 40; ++n) {
    const auto f = oracle::farey_listing(n);
    for (std::size_t k = 2; k < f.size(); ++k) REQUIRE(next_farey(n, f[k - 2], f[k - 1]) == f[k]);
  }
}

TEST_CASE("enumerate_window examples") {
  CHECK(enumerate_window(6, fr(1, 3), fr(1, 2)).fractions == std::vector{fr(1, 3), fr(2, 5), fr(1, 2)});
  CHECK(enumerate_window(1, fr(0, 1), fr(1, 1)).fractions == std::vector{fr(0, 1), fr(1, 1)});
  const auto f5 = enumerate_window(5, fr(0, 1), fr(1, 1)).fractions;
  REQUIRE(f5.size() == 11);
  CHECK(f5[9] == fr(4, 5));
  CHECK(f5[10] == fr(1, 1));
  CHECK_THROWS_AS(enumerate_window(1000, fr(0, 1), fr(1, 1), 100), BudgetError);
}

TEST_CASE("enumerate_window matches listing for arbitrary endpoints") {
  std::mt19937_64 rng(11);
  for (std::int64_t n = 1; n <= 30; ++n) {
    for (int trial = 0; trial < 20; ++trial) {
      std::uniform_int_distribution<std::int64_t> den(1, 40);
      const std::int64_t k1 = den(rng), k2 = den(rng);
      Fraction a(std::uniform_int_distribution<std::int64_t>(0, k1)(rng), k1);
      Fraction b(std::uniform_int_distribution<std::int64_t>(0, k2)(rng), k2);
      if (b < a) std::swap(a, b);
      REQUIRE(enumerate_window(n, a, b).fractions == oracle::window_listing(n, a, b));
    }
  }
}

TEST_CASE("window size estimate is in the right range") {
  for (const std::int64_t n : {2520, 27720}) {
    const Fraction lo(1, 7), hi(2, 9);
    const auto count = static_cast<double>(for_each_in_window(n, lo, hi, [](const Fraction&) {}));
    const auto estimate = static_cast<double>(estimated_window_size(n, lo, hi));
    CHECK(estimate / count == doctest::Approx(1.0).epsilon(0.05));
  }
}

TEST_CASE("rank examples") {
  CHECK(rank_oracle(6, fr(1, 2)).rank == CheckedInt{7});
  CHECK(rank_oracle(6, fr(1, 6)).rank == CheckedInt{2});
  CHECK(rank_oracle(5, fr(1, 4)).rank == CheckedInt{3});
  CHECK(rank_fast(100, fr(1, 2)).rank == rank_oracle(100, fr(1, 2)).rank);
  CHECK(rank_fast(1, fr(1, 1)).rank == CheckedInt{2});
  CHECK(rank_fast(6, fr(1, 3)).rank == CheckedInt{5});
  CHECK(rank_fast(6, fr(1, 3)).method == RankMethod::moebius_rank);
  CHECK(rank_fast(6, fr(1, 7)).rank == CheckedInt{1});  // counts F_6 elements <= x
  CHECK(rank_fast(6, fr(3, 7)).rank == rank_oracle(6, fr(3, 7)).rank);
  CHECK_THROWS_AS(rank_fast(6, fr(7, 6)), DomainError);
}

TEST_CASE("rank_fast equals listing position for every member, N <= 200") {
  const auto table = TotientTable::build(200);
  for (std::int64_t n = 1; n <= 200; ++n) {
    const auto f = oracle::farey_listing(n);
    for (std::size_t k = 0; k < f.size(); ++k) {
      REQUIRE(rank_fast(n, f[k], table).rank == CheckedInt{static_cast<std::int64_t>(k + 1)});
    }
  }
}

TEST_CASE("ranks of non-members count the elements below") {
  std::mt19937_64 rng(3);
  for (std::int64_t n = 1; n <= 50; ++n) {
    const auto f = oracle::farey_listing(n);
    for (int trial = 0; trial < 30; ++trial) {
      const std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, 3 * n)(rng);
      const Fraction x(std::uniform_int_distribution<std::int64_t>(0, k)(rng), k);
      const auto below = static_cast<std::int64_t>(std::upper_bound(f.begin(), f.end(), x) - f.begin());
      REQUIRE(rank_fast(n, x).rank == CheckedInt{below});
      REQUIRE(rank_oracle(n, x).rank == CheckedInt{below});
    }
  }
}

TEST_CASE("rank_oracle equals listing position, N <= 60") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto f = oracle::farey_listing(n);
    for (std::size_t k = 0; k < f.size(); ++k) {
      REQUIRE(rank_oracle(n, f[k]).rank == CheckedInt{static_cast<std::int64_t>(k + 1)});
    }
  }
}

TEST_CASE("rank_fast against the Dirichlet recursion, random N <= 1e5") {
  const auto table = TotientTable::build(100000);
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::int64_t> order_dist(1, 100000);
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t n = order_dist(rng);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, n)(rng);
    std::int64_t h = std::uniform_int_distribution<std::int64_t>(1, k)(rng);
    while (std::gcd(h, k) != 1) h = h % k + 1;
    oracle::DirichletRank dirichlet(n, h, k);
    REQUIRE(rank_fast(n, fr(h, k), table).rank == CheckedInt{dirichlet.rank()});
  }
}

TEST_CASE("rank symmetry about 1/2") {
  const auto table = TotientTable::build(500);
  for (std::int64_t n = 1; n <= 500; n += 37) {
    const CheckedInt m = farey_cardinality(n, table);
    for (std::int64_t k = 1; k <= n; k += 5) {
      for (std::int64_t h = 0; h <= k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        CHECK(rank_fast(n, fr(h, k), table).rank + rank_fast(n, fr(k - h, k), table).rank == m + CheckedInt{1});
      }
    }
  }
}

TEST_CASE("rank of 1/N is 2") {
  for (std::int64_t n = 1; n <= 1000; ++n) CHECK(rank_fast(n, fr(1, n)).rank == CheckedInt{2});
}

TEST_CASE("neighbour examples") {
  auto n1 = farey_neighbors(5, fr(1, 2));
  CHECK(*n1.left == fr(2, 5));
  CHECK(*n1.right == fr(3, 5));
  auto n2 = farey_neighbors(2, fr(1, 2));
  CHECK(*n2.left == fr(0, 1));
  CHECK(*n2.right == fr(1, 1));
  auto n3 = farey_neighbors(3, fr(1, 3));
  CHECK(*n3.left == fr(0, 1));
  CHECK(*n3.right == fr(1, 2));
  CHECK_FALSE(farey_neighbors(4, fr(0, 1)).left);
  CHECK_FALSE(farey_neighbors(4, fr(1, 1)).right);
}

TEST_CASE("neighbours match the listing") {
  for (std::int64_t n = 1; n <= 60; ++n) {
    const auto f = oracle::farey_listing(n);
    for (std::size_t k = 0; k < f.size(); ++k) {
      const auto nb = farey_neighbors(n, f[k]);
      if (k == 0) {
        CHECK_FALSE(nb.left);
      } else {
        REQUIRE(nb.left);
        CHECK(*nb.left == f[k - 1]);
      }
      if (k + 1 == f.size()) {
        CHECK_FALSE(nb.right);
      } else {
        REQUIRE(nb.right);
        CHECK(*nb.right == f[k + 1]);
      }
    }
  }
}

TEST_CASE("bracket against a linear scan") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 2000; ++trial) {
    const std::int64_t n = std::uniform_int_distribution<std::int64_t>(1, 80)(rng);
    const std::int64_t k = std::uniform_int_distribution<std::int64_t>(1, 500)(rng);
    const Fraction x(std::uniform_int_distribution<std::int64_t>(0, k)(rng), k);
    const auto f = oracle::farey_listing(n);
    Fraction below = f.front(), above = f.back();
    for (const auto& y : f) {
      if (y <= x) below = y;
    }
    for (auto it = f.rbegin(); it != f.rend(); ++it) {
      if (*it >= x) above = *it;
    }
    const Bracket b = bracket(n, x);
    REQUIRE(b.below == below);
    REQUIRE(b.above == above);
  }
}

TEST_CASE("large orders stream without overflow") {
  const std::int64_t n = kMaxOrder;
  const Fraction lo(1, 3);
  std::vector<Fraction> expected{lo, *farey_neighbors(n, lo).right};
  for (int k = 0; k < 3; ++k) expected.push_back(next_farey(n, expected[expected.size() - 2], expected.back()));
  CHECK(expected[1] == Fraction(715827882, 2147483645));
  std::vector<Fraction> seen;
  for_each_in_window(n, lo, expected.back(), [&](const Fraction& f) { seen.push_back(f); });
  CHECK(seen == expected);
  for (std::size_t k = 1; k < seen.size(); ++k) CHECK(are_neighbors(seen[k - 1], seen[k]));
  CHECK(bracket(n, Fraction(1, 2) ).below == Fraction(1, 2));
  CHECK(bracket(n, Fraction(1'000'000'007, 3'000'000'000)).below.den() <= n);
  CHECK_THROWS_AS(check_order(kMaxOrder + 1), BudgetError);
  CHECK_THROWS_AS(check_order(0), DomainError);
}
