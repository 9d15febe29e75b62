#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "farey/checked_int.hpp"
#include "farey/error.hpp"
#include "farey/fraction.hpp"
#include "farey/totient.hpp"

namespace farey {

// Largest order accepted by the enumeration routines; keeps every product of
// two numerators/denominators inside 64 bits.
inline constexpr std::int64_t kMaxOrder = (std::int64_t{1} << 31) - 1;
inline constexpr std::int64_t kDefaultWindowBudget = 10'000'000;

void check_order(std::int64_t order);

// Successor of cur in F_N from the pair (prev, cur) of consecutive terms:
// k = floor((N + prev.den) / cur.den), next = (k cur.num - prev.num)/(k cur.den - prev.den).
Fraction next_farey(std::int64_t order, const Fraction& prev, const Fraction& cur);

// Largest element of F_N that is <= x and smallest that is >= x (equal when
// x is itself in F_N). Found by Stern-Brocot descent with batched steps.
struct Bracket {
  Fraction below;
  Fraction above;
};
Bracket bracket(std::int64_t order, const Fraction& x);

// Immediate neighbours of x in F_N; left is empty for 0/1, right for 1/1.
struct Neighbors {
  std::optional<Fraction> left;
  std::optional<Fraction> right;
};
Neighbors farey_neighbors(std::int64_t order, const Fraction& x);

// All x in F_N with lo <= x <= hi, ascending.
struct FareyWindow {
  std::int64_t order = 0;
  Fraction lo;
  Fraction hi;
  std::vector<Fraction> fractions;
};

// Rough element count of F_N restricted to [lo, hi], used for budgeting.
std::int64_t estimated_window_size(std::int64_t order, const Fraction& lo, const Fraction& hi);

FareyWindow enumerate_window(std::int64_t order, const Fraction& lo, const Fraction& hi,
                             std::int64_t element_budget = kDefaultWindowBudget);

namespace detail {

struct WindowStart {
  std::optional<Fraction> first;
  std::optional<Fraction> second;
};
WindowStart window_start(std::int64_t order, const Fraction& lo, const Fraction& hi);

}  // namespace detail

// Streams F_N over [lo, hi] in ascending order without materializing it.
// Returns the number of visited fractions.
template <class Visitor>
std::int64_t for_each_in_window(std::int64_t order, const Fraction& lo, const Fraction& hi, Visitor&& visit) {
  const auto start = detail::window_start(order, lo, hi);
  if (!start.first) return 0;
  visit(*start.first);
  if (!start.second) return 1;
  std::int64_t count = 1;
  std::int64_t a = start.first->num(), b = start.first->den();
  std::int64_t c = start.second->num(), d = start.second->den();
  const std::int64_t hn = hi.num(), hd = hi.den();
  while (static_cast<__int128>(c) * hd <= static_cast<__int128>(hn) * d) {
    visit(Fraction::from_reduced(c, d));
    ++count;
    if (c == d) break;  // reached 1/1
    const std::int64_t k = (order + b) / d;
    const std::int64_t e = k * c - a;
    const std::int64_t f = k * d - b;
    a = c;
    b = d;
    c = e;
    d = f;
  }
  return count;
}

enum class RankMethod { enumeration_oracle, moebius_rank, closed_form };

std::string_view to_string(RankMethod method);

// rank: number of elements of F_N that are <= target (0/1 has rank 1).
struct RankReport {
  std::int64_t order = 0;
  Fraction target;
  CheckedInt rank;
  RankMethod method = RankMethod::enumeration_oracle;
};

// Counts coprime numerators denominator by denominator with explicit gcds.
RankReport rank_oracle(std::int64_t order, const Fraction& x);

// Same value through #{h <= m : gcd(h, d) = 1} = sum_{e | d} mu(e) floor(m / e),
// with the squarefree divisors of d read off a smallest-prime-factor sieve.
RankReport rank_fast(std::int64_t order, const Fraction& x, const TotientTable& table);
RankReport rank_fast(std::int64_t order, const Fraction& x);

}  // namespace farey
