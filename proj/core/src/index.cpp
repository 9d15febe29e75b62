#include "farey/index.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "farey/constants.hpp"

namespace farey {

std::string_view to_string(ErrorOrder order) {
  switch (order) {
    case ErrorOrder::exact:
      return "exact";
    case ErrorOrder::quadratic_in_i:
      return "O(i^2)";
    case ErrorOrder::linear_in_n:
      return "O(N)";
  }
  return "unknown";
}

IndexEstimate exact_index_unit_fraction(std::int64_t i_max, std::int64_t q, const TotientTable& table) {
  if (i_max < 2) throw DomainError("i_max must be >= 2");
  const std::int64_t order = lcm_range(i_max).to_i64();
  if (q * i_max < order || q > order) {
    throw DomainError("q = " + std::to_string(q) + " outside [N/i_max, N] = [" + std::to_string(order / i_max) +
                      ", " + std::to_string(order) + "]");
  }
  const std::int64_t i = order / q;
  const CheckedInt value = CheckedInt{2} + scaled_phi_ratio_sum(i, order, table) - CheckedInt{q} * table.phi_sum(i);
  return {value, ErrorOrder::exact, order, q, i, Fraction(1, q)};
}

IndexEstimate exact_index_unit_fraction(std::int64_t i_max, std::int64_t q) {
  if (i_max < 2) throw DomainError("i_max must be >= 2");
  return exact_index_unit_fraction(i_max, q, TotientTable::build(i_max));
}

IndexEstimate general_index_estimate(const VertexPair& pair, std::int64_t i_max, std::int64_t q,
                                     CheckedInt base_rank, const TotientTable& table) {
  if (pair.eta() <= 1) throw DomainError("general_index_estimate needs eta > 1; use the exact 0/1 formula");
  if (i_max < 2) throw DomainError("i_max must be >= 2");
  const std::int64_t reduced = lcm_range(i_max).to_i64();  // N / eta
  const std::int64_t order = (CheckedInt{pair.eta()} * CheckedInt{reduced}).to_i64();
  if (q < 1 || q > reduced) {
    throw DomainError("q = " + std::to_string(q) + " outside [1, N/eta] = [1, " + std::to_string(reduced) + "]");
  }
  const std::int64_t i = reduced / q;
  if (i > i_max) {
    throw DomainError("q = " + std::to_string(q) + " gives i = " + std::to_string(i) + " > i_max = " +
                      std::to_string(i_max));
  }
  const CheckedInt step = scaled_phi_ratio_sum(i, reduced, table) - CheckedInt{q} * table.phi_sum(i);
  const CheckedInt value = base_rank + CheckedInt{pair.sign()} * step;
  return {value, ErrorOrder::quadratic_in_i, order, q, i, pair.iterated_mediant(q)};
}

long double asymptotic_index_zero(std::int64_t order, std::int64_t q) {
  if (q < 1) throw DomainError("q must be >= 1");
  const long double n = static_cast<long double>(order);
  return 3.0L * n * n / (kPiSquared * static_cast<long double>(q));
}

long double asymptotic_index_half(std::int64_t order, std::int64_t q, CheckedInt cardinality) {
  if (q < 1) throw DomainError("q must be >= 1");
  const long double n = static_cast<long double>(order);
  return cardinality.to_long_double() / 2.0L + 3.0L * n * n / (4.0L * kPiSquared * static_cast<long double>(q));
}

std::vector<std::int64_t> log_spaced_q(std::int64_t order, std::int64_t i_max, std::size_t count) {
  if (i_max < 1 || order < 1) throw DomainError("log_spaced_q needs N, i_max >= 1");
  const std::int64_t lo = (order + i_max - 1) / i_max;
  const std::int64_t hi = order;
  std::vector<std::int64_t> qs;
  if (count == 0) return qs;
  if (count == 1 || lo == hi) return {lo};
  const long double a = std::log(static_cast<long double>(lo));
  const long double b = std::log(static_cast<long double>(hi));
  for (std::size_t k = 0; k < count; ++k) {
    const long double t = static_cast<long double>(k) / static_cast<long double>(count - 1);
    auto q = static_cast<std::int64_t>(std::llround(std::exp(a + (b - a) * t)));
    qs.push_back(std::clamp(q, lo, hi));
  }
  qs.front() = lo;
  qs.back() = hi;
  std::sort(qs.begin(), qs.end());
  qs.erase(std::unique(qs.begin(), qs.end()), qs.end());
  return qs;
}

}  // namespace farey
