#include "farey/sequence.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <string>

#include "farey/constants.hpp"

namespace farey {

namespace {

using i128 = __int128;

void check_unit_interval(const Fraction& x, const char* what) {
  if (x > Fraction::one()) throw DomainError(std::string(what) + " must lie in [0, 1], got " + x.to_string());
}

// Parents (l, r) of x in the Stern-Brocot tree restricted to [0/1, 1/1]:
// l < x < r, l and r neighbours, x = mediant(l, r). Requires 0 < x < 1.
std::pair<Fraction, Fraction> stern_brocot_parents(const Fraction& x) {
  const i128 p = x.num(), q = x.den();
  i128 ln = 0, ld = 1, rn = 1, rd = 1;
  while (true) {
    const i128 mn = ln + rn, md = ld + rd;
    if (mn == p && md == q) break;
    if (mn * q < p * md) {
      // x right of the mediant: l <- l + k r.
      const i128 gap_r = rn * q - p * rd;
      const i128 gap_l = p * ld - ln * q;
      const i128 k = gap_l / gap_r;
      if (gap_l % gap_r == 0) {
        ln += (k - 1) * rn;
        ld += (k - 1) * rd;
        break;
      }
      ln += k * rn;
      ld += k * rd;
    } else {
      const i128 gap_l = p * ld - ln * q;
      const i128 gap_r = rn * q - p * rd;
      const i128 k = gap_r / gap_l;
      if (gap_r % gap_l == 0) {
        rn += (k - 1) * ln;
        rd += (k - 1) * ld;
        break;
      }
      rn += k * ln;
      rd += k * ld;
    }
  }
  return {Fraction::from_reduced(static_cast<std::int64_t>(ln), static_cast<std::int64_t>(ld)),
          Fraction::from_reduced(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd))};
}

}  // namespace

void check_order(std::int64_t order) {
  if (order < 1) throw DomainError("Farey order must be >= 1, got " + std::to_string(order));
  if (order > kMaxOrder) throw BudgetError("Farey order " + std::to_string(order) + " exceeds 2^31 - 1");
}

Fraction next_farey(std::int64_t order, const Fraction& prev, const Fraction& cur) {
  check_order(order);
  if (cur == Fraction::one()) throw DomainError("1/1 has no successor in F_N");
  if (!(prev < cur) || cur > Fraction::one() || prev.den() > order || cur.den() > order ||
      det2(cur, prev) != CheckedInt{1} || prev.den() + cur.den() <= order) {
    throw DomainError(prev.to_string() + ", " + cur.to_string() + " are not consecutive in F_" +
                      std::to_string(order));
  }
  const std::int64_t k = (order + prev.den()) / cur.den();
  return Fraction::from_reduced(k * cur.num() - prev.num(), k * cur.den() - prev.den());
}

Bracket bracket(std::int64_t order, const Fraction& x) {
  check_order(order);
  check_unit_interval(x, "bracketed fraction");
  if (x.den() <= order) return {x, x};

  const i128 p = x.num(), q = x.den(), n = order;
  i128 ln = 0, ld = 1, rn = 1, rd = 1;
  while (true) {
    const i128 mn = ln + rn, md = ld + rd;
    if (md > n) break;
    // x has denominator > N, so it never equals a mediant visited here.
    if (mn * q < p * md) {
      const i128 gap_r = rn * q - p * rd;
      const i128 gap_l = p * ld - ln * q;
      const i128 k = std::min((gap_l - 1) / gap_r, (n - ld) / rd);
      ln += k * rn;
      ld += k * rd;
    } else {
      const i128 gap_l = p * ld - ln * q;
      const i128 gap_r = rn * q - p * rd;
      const i128 k = std::min((gap_r - 1) / gap_l, (n - rd) / ld);
      rn += k * ln;
      rd += k * ld;
    }
  }
  return {Fraction::from_reduced(static_cast<std::int64_t>(ln), static_cast<std::int64_t>(ld)),
          Fraction::from_reduced(static_cast<std::int64_t>(rn), static_cast<std::int64_t>(rd))};
}

Neighbors farey_neighbors(std::int64_t order, const Fraction& x) {
  check_order(order);
  check_unit_interval(x, "fraction");
  if (x.den() > order) throw DomainError(x.to_string() + " is not in F_" + std::to_string(order));
  if (order == 1) {
    if (x == Fraction::zero()) return {std::nullopt, Fraction::one()};
    return {Fraction::zero(), std::nullopt};
  }
  if (x == Fraction::zero()) return {std::nullopt, Fraction::from_reduced(1, order)};
  if (x == Fraction::one()) return {Fraction::from_reduced(order - 1, order), std::nullopt};

  const auto [l, r] = stern_brocot_parents(x);
  const std::int64_t kl = (order - l.den()) / x.den();
  const std::int64_t kr = (order - r.den()) / x.den();
  return {Fraction::from_reduced(l.num() + kl * x.num(), l.den() + kl * x.den()),
          Fraction::from_reduced(r.num() + kr * x.num(), r.den() + kr * x.den())};
}

std::int64_t estimated_window_size(std::int64_t order, const Fraction& lo, const Fraction& hi) {
  const long double width = std::max(0.0L, hi.to_long_double() - lo.to_long_double());
  const long double n = static_cast<long double>(order);
  return static_cast<std::int64_t>(kFareyDensity * width * n * n + n + 2);
}

namespace detail {

WindowStart window_start(std::int64_t order, const Fraction& lo, const Fraction& hi) {
  check_order(order);
  check_unit_interval(lo, "window bound");
  check_unit_interval(hi, "window bound");
  if (hi < lo) throw DomainError("window bounds reversed: " + lo.to_string() + " > " + hi.to_string());
  const Fraction first = bracket(order, lo).above;
  if (first > hi) return {};
  if (first == Fraction::one()) return {first, std::nullopt};
  return {first, farey_neighbors(order, first).right};
}

}  // namespace detail

FareyWindow enumerate_window(std::int64_t order, const Fraction& lo, const Fraction& hi,
                             std::int64_t element_budget) {
  check_order(order);
  if (hi < lo) throw DomainError("window bounds reversed: " + lo.to_string() + " > " + hi.to_string());
  const std::int64_t estimate = estimated_window_size(order, lo, hi);
  if (estimate > element_budget) {
    throw BudgetError("window of F_" + std::to_string(order) + " over [" + lo.to_string() + ", " +
                      hi.to_string() + "] holds about " + std::to_string(estimate) + " fractions, budget is " +
                      std::to_string(element_budget) + "; use the streaming interface");
  }
  FareyWindow window{order, lo, hi, {}};
  window.fractions.reserve(static_cast<std::size_t>(estimate));
  for_each_in_window(order, lo, hi, [&](const Fraction& f) { window.fractions.push_back(f); });
  return window;
}

std::string_view to_string(RankMethod method) {
  switch (method) {
    case RankMethod::enumeration_oracle:
      return "enumeration-oracle";
    case RankMethod::moebius_rank:
      return "moebius-rank";
    case RankMethod::closed_form:
      return "closed-form";
  }
  return "unknown";
}

RankReport rank_oracle(std::int64_t order, const Fraction& x) {
  check_order(order);
  check_unit_interval(x, "ranked fraction");
  CheckedInt count{1};  // 0/1
  for (std::int64_t d = 1; d <= order; ++d) {
    const std::int64_t top = static_cast<std::int64_t>(static_cast<i128>(d) * x.num() / x.den());
    std::int64_t coprime = 0;
    for (std::int64_t h = 1; h <= top; ++h) {
      if (std::gcd(h, d) == 1) ++coprime;
    }
    count += CheckedInt{coprime};
  }
  return {order, x, count, RankMethod::enumeration_oracle};
}

RankReport rank_fast(std::int64_t order, const Fraction& x, const TotientTable& table) {
  check_order(order);
  check_unit_interval(x, "ranked fraction");
  if (order > table.limit()) {
    throw DomainError("rank_fast needs a sieve up to " + std::to_string(order) + ", table stops at " +
                      std::to_string(table.limit()));
  }
  // Signed squarefree divisors of d; at most 2^9 for d < 2^31.
  std::array<std::int64_t, 512> divisors{};
  std::array<int, 512> signs{};
  i128 count = 1;
  for (std::int64_t d = 1; d <= order; ++d) {
    const std::int64_t top = static_cast<std::int64_t>(static_cast<i128>(d) * x.num() / x.den());
    if (top == 0) continue;
    std::size_t n_div = 1;
    divisors[0] = 1;
    signs[0] = 1;
    for (std::int64_t rest = d; rest > 1;) {
      const std::int64_t p = table.smallest_prime_factor(rest);
      while (rest % p == 0) rest /= p;
      for (std::size_t j = 0; j < n_div; ++j) {
        divisors[n_div + j] = divisors[j] * p;
        signs[n_div + j] = -signs[j];
      }
      n_div *= 2;
    }
    std::int64_t coprime = 0;
    for (std::size_t j = 0; j < n_div; ++j) coprime += signs[j] * (top / divisors[j]);
    count += coprime;
  }
  return {order, x, CheckedInt::from_raw(count), RankMethod::moebius_rank};
}

RankReport rank_fast(std::int64_t order, const Fraction& x) {
  check_order(order);
  const TotientTable table = TotientTable::build(order);
  return rank_fast(order, x, table);
}

}  // namespace farey
