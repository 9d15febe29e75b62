#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "farey/checked_int.hpp"
#include "farey/mapping.hpp"
#include "farey/totient.hpp"

namespace farey {

enum class ErrorOrder { exact, quadratic_in_i, linear_in_n };

std::string_view to_string(ErrorOrder order);

// A position in F_N produced by a closed form, with the size of the error
// term that the closed form carries.
struct IndexEstimate {
  CheckedInt value;
  ErrorOrder error_order = ErrorOrder::exact;
  std::int64_t order = 0;  // N
  std::int64_t q = 0;
  std::int64_t i = 0;      // floor(N / (q eta))
  Fraction target;         // fraction whose position is estimated
};

// Position of 1/q in F_N for N = lcm(2..i_max), N/i_max <= q <= N:
// 2 + N sum_{j<=i} phi(j)/j - q Phi(i) with i = floor(N/q). Exact.
IndexEstimate exact_index_unit_fraction(std::int64_t i_max, std::int64_t q, const TotientTable& table);
IndexEstimate exact_index_unit_fraction(std::int64_t i_max, std::int64_t q);

// Position of (chi q + a)/(eta q + b) in F_N, N = eta lcm(2..i_max), eta > 1:
// base_rank + s ((N/eta) sum_{j<=i} phi(j)/j - q Phi(i)), up to O(i^2).
// base_rank is the position of the vertex itself, supplied by the caller.
IndexEstimate general_index_estimate(const VertexPair& pair, std::int64_t i_max, std::int64_t q,
                                     CheckedInt base_rank, const TotientTable& table);

// 3 N^2 / (pi^2 q)
long double asymptotic_index_zero(std::int64_t order, std::int64_t q);

// |F_N| / 2 + 3 N^2 / (4 pi^2 q)
long double asymptotic_index_half(std::int64_t order, std::int64_t q, CheckedInt cardinality);

// Up to `count` distinct q values spread log-uniformly over [N/i_max, N],
// ascending and always including both ends.
std::vector<std::int64_t> log_spaced_q(std::int64_t order, std::int64_t i_max, std::size_t count);

}  // namespace farey
