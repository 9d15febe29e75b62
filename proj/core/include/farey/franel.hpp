#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "farey/checked_int.hpp"
#include "farey/fraction.hpp"
#include "farey/mapping.hpp"
#include "farey/totient.hpp"

namespace farey {

using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::int64_t kDefaultTermBudget = 100'000'000;
inline constexpr std::int64_t kDefaultExactTermBudget = 10'000;
// Above this order the caller-supplied anchor rank is trusted without a
// cross-check against rank_fast.
inline constexpr std::int64_t kAnchorCheckMaxOrder = 100'000;

struct FranelOptions {
  std::int64_t term_budget = kDefaultTermBudget;
  // Sums with at most this many terms are also accumulated as exact rationals.
  std::int64_t exact_term_budget = kDefaultExactTermBudget;
  std::int64_t table_limit = kDefaultTableLimit;
};

// Neumaier-compensated running sum in extended precision.
class CompensatedSum {
 public:
  void add(long double x) {
    const long double t = sum_ + x;
    if (std::fabs(sum_) >= std::fabs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  long double value() const { return sum_ + comp_; }

 private:
  long double sum_ = 0;
  long double comp_ = 0;
};

// Sum of |F_N(j) - j/|F_N|| over a contiguous run of ranks. Each summand is
// carried as the exact quotient |num M - j den| / (den M), M = |F_N|.
struct FranelResult {
  std::int64_t order = 0;
  Fraction lo;
  Fraction hi;
  CheckedInt first_rank;  // rank of the first summed fraction
  CheckedInt last_rank;
  CheckedInt term_count;
  CheckedInt cardinality;             // |F_N|
  std::optional<Rational> sum_exact;  // present when term_count <= exact budget
  long double sum_float = 0;
  Rational max_term;  // largest summand, exact
  long double max_term_float = 0;
  CheckedInt argmax_rank;
};

FranelResult full_franel_sum(std::int64_t order, const FranelOptions& options = {});

// Streams F_N from lo (which must belong to F_N and sit at rank_of_lo) up to
// hi. rank_of_lo is cross-checked against rank_fast when N <= 10^5.
FranelResult partial_franel_sum_range(std::int64_t order, const Fraction& lo, const Fraction& hi,
                                      CheckedInt rank_of_lo, const FranelOptions& options = {});
FranelResult partial_franel_sum_range(std::int64_t order, const Fraction& lo, const Fraction& hi,
                                      CheckedInt rank_of_lo, const TotientTable& table,
                                      const FranelOptions& options = {});

// Partial sum over the section between the vertex and
// (chi q' + a)/(eta q' + b), q' = N/(eta i), N = eta lcm(2..i).
struct VertexPartialSum {
  std::int64_t i = 0;
  std::int64_t order = 0;
  FranelResult sum;
  CheckedInt vertex_rank;
  long double sum_over_log_n = 0;
  // Only for eta > 2: log(N/eta) (N/eta) (3/pi^2) |chi/eta - I_N(chi/eta)/|F_N||.
  std::optional<long double> predicted;
  std::optional<long double> measured_over_predicted;
};

VertexPartialSum vertex_partial_sum(const VertexPair& pair, std::int64_t i, const FranelOptions& options = {});

struct GrowthScan {
  std::vector<VertexPartialSum> rows;  // ascending in N
};

// One vertex_partial_sum per i; jobs run on up to `threads` threads and the
// rows are merged in i order.
GrowthScan growth_scan(const VertexPair& pair, const std::vector<std::int64_t>& i_list,
                       const FranelOptions& options = {}, unsigned threads = 1);

// Signed sum over ranks 1..I_N(1/4) of F_N(j) - I_N(1/4) / (2 |F_N|).
struct KanemitsuResult {
  std::int64_t order = 0;
  CheckedInt cutoff_rank;  // I_N(1/4)
  CheckedInt cardinality;
  std::optional<Rational> exact;
  long double value = 0;
};

KanemitsuResult kanemitsu_sum(std::int64_t order, const FranelOptions& options = {});

// Largest summand over the whole of F_N, compared with the bound 1/N.
struct DressReport {
  std::int64_t order = 0;
  Rational max_term;
  long double max_term_float = 0;
  CheckedInt argmax_rank;
  Rational rank2_term;  // |1/N - 2/|F_N||
  bool bound_ok = false;
};

DressReport dress_scan(std::int64_t order, const FranelOptions& options = {});

// dress_scan for every order in [first, last], spread over `threads` threads.
std::vector<DressReport> dress_sweep(std::int64_t first, std::int64_t last, const FranelOptions& options = {},
                                     unsigned threads = 1);

std::string to_string(const Rational& r);

}  // namespace farey
