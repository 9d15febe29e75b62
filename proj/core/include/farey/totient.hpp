#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "farey/checked_int.hpp"

namespace farey {

inline constexpr std::int64_t kDefaultTableLimit = 10'000'000;

// phi(k) and Phi(k) = sum_{j<=k} phi(j) for 1 <= k <= limit, plus the
// smallest prime factor of each k (used by the Moebius rank).
class TotientTable {
 public:
  // Linear sieve. Throws DomainError for limit < 1 and BudgetError when
  // limit exceeds max_limit.
  static TotientTable build(std::int64_t limit, std::int64_t max_limit = kDefaultTableLimit);

  std::int64_t limit() const { return limit_; }

  std::int64_t phi(std::int64_t k) const;
  // Phi(k); Phi(0) = 0.
  CheckedInt phi_sum(std::int64_t k) const;
  std::int64_t smallest_prime_factor(std::int64_t k) const;

  // phi(1..limit), index 0 holds phi(1).
  std::span<const std::int32_t> phi_values() const { return {phi_.data() + 1, phi_.size() - 1}; }

 private:
  void check_index(std::int64_t k, std::int64_t lowest) const;

  std::int64_t limit_ = 0;
  std::vector<std::int32_t> phi_;      // phi_[k]
  std::vector<std::int32_t> spf_;      // spf_[k], spf_[1] = 1
  std::vector<std::int64_t> phi_sum_;  // phi_sum_[k]
};

// |F_N| = 1 + Phi(N).
CheckedInt farey_cardinality(std::int64_t order, const TotientTable& table);

// sum_{j=1..i} N phi(j) / j as an exact integer. Requires j | N for every
// j <= i, i.e. N a multiple of lcm(2..i).
CheckedInt scaled_phi_ratio_sum(std::int64_t i, std::int64_t order, const TotientTable& table);

// lcm(2, 3, ..., i) for i >= 2; throws OverflowError past 127 bits.
CheckedInt lcm_range(std::int64_t i);

struct AsymptoticError {
  std::int64_t n = 0;
  long double e_n = 0;  // Phi(n) - 3 n^2 / pi^2
  long double h_n = 0;  // sum_{k<=n} phi(k)/k - 6 n / pi^2
};

AsymptoticError error_terms(std::int64_t n, const TotientTable& table);

// error_terms for every n in [1, last], computed in one pass.
std::vector<AsymptoticError> error_term_series(std::int64_t last, const TotientTable& table);

}  // namespace farey
