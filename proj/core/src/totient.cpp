#include "farey/totient.hpp"

#include <limits>
#include <string>

#include "farey/constants.hpp"
#include "farey/error.hpp"

namespace farey {

namespace {

using quad = __float128;

quad pi_squared_quad() { return static_cast<quad>(kPiSquaredHi) + static_cast<quad>(kPiSquaredLo); }

}  // namespace

TotientTable TotientTable::build(std::int64_t limit, std::int64_t max_limit) {
  if (limit < 1) throw DomainError("totient table limit must be >= 1");
  if (limit > max_limit) {
    throw BudgetError("totient table limit " + std::to_string(limit) + " exceeds budget " +
                      std::to_string(max_limit));
  }
  if (limit >= std::numeric_limits<std::int32_t>::max()) {
    throw BudgetError("totient table limit must stay below 2^31");
  }

  TotientTable t;
  t.limit_ = limit;
  const auto size = static_cast<std::size_t>(limit) + 1;
  t.phi_.assign(size, 0);
  t.spf_.assign(size, 0);
  t.phi_sum_.assign(size, 0);

  std::vector<std::int32_t> primes;
  t.phi_[1] = 1;
  t.spf_[1] = 1;
  for (std::int64_t k = 2; k <= limit; ++k) {
    if (t.spf_[k] == 0) {
      t.spf_[k] = static_cast<std::int32_t>(k);
      t.phi_[k] = static_cast<std::int32_t>(k - 1);
      primes.push_back(static_cast<std::int32_t>(k));
    }
    for (const std::int32_t p : primes) {
      const std::int64_t m = k * p;
      if (p > t.spf_[k] || m > limit) break;
      t.spf_[m] = p;
      t.phi_[m] = (p == t.spf_[k]) ? t.phi_[k] * p : t.phi_[k] * (p - 1);
    }
  }
  for (std::int64_t k = 1; k <= limit; ++k) t.phi_sum_[k] = t.phi_sum_[k - 1] + t.phi_[k];
  return t;
}

void TotientTable::check_index(std::int64_t k, std::int64_t lowest) const {
  if (k < lowest || k > limit_) {
    throw DomainError("index " + std::to_string(k) + " outside totient table [" + std::to_string(lowest) + ", " +
                      std::to_string(limit_) + "]");
  }
}

std::int64_t TotientTable::phi(std::int64_t k) const {
  check_index(k, 1);
  return phi_[k];
}

CheckedInt TotientTable::phi_sum(std::int64_t k) const {
  check_index(k, 0);
  return CheckedInt{phi_sum_[k]};
}

std::int64_t TotientTable::smallest_prime_factor(std::int64_t k) const {
  check_index(k, 1);
  return spf_[k];
}

CheckedInt farey_cardinality(std::int64_t order, const TotientTable& table) {
  if (order < 1) throw DomainError("Farey order must be >= 1");
  return CheckedInt{1} + table.phi_sum(order);
}

CheckedInt scaled_phi_ratio_sum(std::int64_t i, std::int64_t order, const TotientTable& table) {
  if (i < 1) throw DomainError("scaled_phi_ratio_sum requires i >= 1");
  if (order < 1) throw DomainError("scaled_phi_ratio_sum requires N >= 1");
  CheckedInt total;
  for (std::int64_t j = 1; j <= i; ++j) {
    if (order % j != 0) {
      throw DomainError("N = " + std::to_string(order) + " is not a multiple of lcm(2.." + std::to_string(i) +
                        "): " + std::to_string(j) + " does not divide it");
    }
    total += CheckedInt{order / j} * CheckedInt{table.phi(j)};
  }
  return total;
}

CheckedInt lcm_range(std::int64_t i) {
  if (i < 2) throw DomainError("lcm_range requires i >= 2");
  CheckedInt acc{1};
  for (std::int64_t j = 2; j <= i; ++j) {
    const CheckedInt g = gcd(acc, CheckedInt{j});
    acc = acc / g * CheckedInt{j};
  }
  return acc;
}

AsymptoticError error_terms(std::int64_t n, const TotientTable& table) {
  table.phi_sum(n);  // range check
  if (n < 1) throw DomainError("error_terms requires n >= 1");
  quad ratio_sum = 0;
  for (std::int64_t k = 1; k <= n; ++k) ratio_sum += static_cast<quad>(table.phi(k)) / static_cast<quad>(k);
  const quad pi2 = pi_squared_quad();
  const quad nq = static_cast<quad>(n);
  AsymptoticError out;
  out.n = n;
  out.e_n = static_cast<long double>(static_cast<quad>(table.phi_sum(n).raw()) - 3 * nq * nq / pi2);
  out.h_n = static_cast<long double>(ratio_sum - 6 * nq / pi2);
  return out;
}

std::vector<AsymptoticError> error_term_series(std::int64_t last, const TotientTable& table) {
  table.phi_sum(last);
  std::vector<AsymptoticError> rows;
  rows.reserve(static_cast<std::size_t>(last > 0 ? last : 0));
  const quad pi2 = pi_squared_quad();
  quad ratio_sum = 0;
  for (std::int64_t n = 1; n <= last; ++n) {
    ratio_sum += static_cast<quad>(table.phi(n)) / static_cast<quad>(n);
    const quad nq = static_cast<quad>(n);
    rows.push_back({n, static_cast<long double>(static_cast<quad>(table.phi_sum(n).raw()) - 3 * nq * nq / pi2),
                    static_cast<long double>(ratio_sum - 6 * nq / pi2)});
  }
  return rows;
}

}  // namespace farey
