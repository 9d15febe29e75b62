#include "farey/franel.hpp"

#include <algorithm>
#include <future>
#include <string>

#include "farey/constants.hpp"
#include "farey/sequence.hpp"

namespace farey {

namespace {

using i128 = __int128;
using boost::multiprecision::cpp_int;

cpp_int to_big(i128 v) {
  const bool negative = v < 0;
  auto mag = negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v)
                      : static_cast<unsigned __int128>(v);
  cpp_int out = static_cast<std::uint64_t>(mag >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(mag);
  return negative ? cpp_int(-out) : out;
}

Rational quotient(i128 num, i128 den) { return Rational(to_big(num), to_big(den)); }

// Per-term state of a streamed distance sum. Ranks advance by one per
// visited fraction starting from the anchor rank.
template <bool kFloat>
class DistanceScan {
 public:
  DistanceScan(i128 cardinality, i128 first_rank, bool exact)
      : cardinality_(cardinality), rank_(first_rank), exact_(exact) {
    if (exact_) exact_sum_ = Rational(0);
  }

  void operator()(const Fraction& x) {
    const i128 den = x.den();
    i128 t = static_cast<i128>(x.num()) * cardinality_ - rank_ * den;
    if (t < 0) t = -t;
    if constexpr (kFloat) float_sum_.add(static_cast<long double>(t) / static_cast<long double>(den));
    if (exact_) *exact_sum_ += quotient(t, den);
    if (best_t_ < 0 || t * best_den_ > best_t_ * den) {
      best_t_ = t;
      best_den_ = den;
      argmax_ = rank_;
    }
    ++rank_;
  }

  // Fills the sum and maximum fields of r (all summands carry a factor 1/M).
  void finish(FranelResult& r) const {
    const long double m = static_cast<long double>(cardinality_);
    r.sum_float = float_sum_.value() / m;
    if (exact_sum_) r.sum_exact = *exact_sum_ / Rational(to_big(cardinality_));
    if (best_t_ >= 0) {
      r.max_term = quotient(best_t_, best_den_ * cardinality_);
      r.max_term_float = static_cast<long double>(best_t_) / static_cast<long double>(best_den_) / m;
      r.argmax_rank = CheckedInt::from_raw(argmax_);
    }
  }

  i128 best_t() const { return best_t_; }
  i128 best_den() const { return best_den_; }
  i128 argmax() const { return argmax_; }
  i128 next_rank() const { return rank_; }

 private:
  i128 cardinality_;
  i128 rank_;
  bool exact_;
  CompensatedSum float_sum_;
  std::optional<Rational> exact_sum_;
  i128 best_t_ = -1;
  i128 best_den_ = 1;
  i128 argmax_ = 0;
};

void check_term_budget(CheckedInt terms, const FranelOptions& options, const std::string& what) {
  if (terms > CheckedInt{options.term_budget}) {
    throw BudgetError(what + " needs " + terms.to_string() + " terms, budget is " +
                      std::to_string(options.term_budget) + "; try a smaller order or i");
  }
}

FranelResult run_scan(std::int64_t order, const Fraction& lo, const Fraction& hi, CheckedInt first_rank,
                      CheckedInt expected_terms, CheckedInt cardinality, const FranelOptions& options) {
  const bool exact = expected_terms <= CheckedInt{options.exact_term_budget};
  DistanceScan<true> scan(cardinality.raw(), first_rank.raw(), exact);
  const std::int64_t visited = for_each_in_window(order, lo, hi, std::ref(scan));
  if (CheckedInt{visited} != expected_terms) {
    throw IdentityViolation("streamed " + std::to_string(visited) + " fractions where the ranks predict " +
                            expected_terms.to_string());
  }
  FranelResult r;
  r.order = order;
  r.lo = lo;
  r.hi = hi;
  r.first_rank = first_rank;
  r.last_rank = first_rank + CheckedInt{visited} - CheckedInt{1};
  r.term_count = CheckedInt{visited};
  r.cardinality = cardinality;
  scan.finish(r);
  return r;
}

}  // namespace

std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

FranelResult full_franel_sum(std::int64_t order, const FranelOptions& options) {
  check_order(order);
  const TotientTable table = TotientTable::build(order, options.table_limit);
  const CheckedInt cardinality = farey_cardinality(order, table);
  check_term_budget(cardinality, options, "Franel sum over F_" + std::to_string(order));
  return run_scan(order, Fraction::zero(), Fraction::one(), CheckedInt{1}, cardinality, cardinality, options);
}

FranelResult partial_franel_sum_range(std::int64_t order, const Fraction& lo, const Fraction& hi,
                                      CheckedInt rank_of_lo, const TotientTable& table,
                                      const FranelOptions& options) {
  check_order(order);
  if (lo.is_infinite() || lo > Fraction::one() || lo.den() > order) {
    throw DomainError("range start " + lo.to_string() + " is not in F_" + std::to_string(order));
  }
  if (hi < lo || hi > Fraction::one()) {
    throw DomainError("range end " + hi.to_string() + " must lie in [" + lo.to_string() + ", 1/1]");
  }
  if (order <= kAnchorCheckMaxOrder) {
    const CheckedInt actual = rank_fast(order, lo, table).rank;
    if (actual != rank_of_lo) {
      throw DomainError("rank " + rank_of_lo.to_string() + " given for " + lo.to_string() + " in F_" +
                        std::to_string(order) + ", actual rank is " + actual.to_string());
    }
  }
  const CheckedInt cardinality = farey_cardinality(order, table);
  const CheckedInt terms = rank_fast(order, hi, table).rank - rank_fast(order, lo, table).rank + CheckedInt{1};
  check_term_budget(terms, options, "partial Franel sum");
  return run_scan(order, lo, hi, rank_of_lo, terms, cardinality, options);
}

FranelResult partial_franel_sum_range(std::int64_t order, const Fraction& lo, const Fraction& hi,
                                      CheckedInt rank_of_lo, const FranelOptions& options) {
  check_order(order);
  const TotientTable table = TotientTable::build(order, options.table_limit);
  return partial_franel_sum_range(order, lo, hi, rank_of_lo, table, options);
}

VertexPartialSum vertex_partial_sum(const VertexPair& pair, std::int64_t i, const FranelOptions& options) {
  const CheckedInt reduced = lcm_range(i);  // N / eta
  const std::int64_t order = (CheckedInt{pair.eta()} * reduced).to_i64();
  check_order(order);
  const std::int64_t q_top = (reduced / CheckedInt{i}).to_i64();  // N / (eta i)
  const Fraction end = pair.iterated_mediant(q_top);
  const Fraction lo = std::min(pair.vertex(), end);
  const Fraction hi = std::max(pair.vertex(), end);

  const TotientTable table = TotientTable::build(order, options.table_limit);
  VertexPartialSum out;
  out.i = i;
  out.order = order;
  out.vertex_rank = rank_fast(order, pair.vertex(), table).rank;
  const CheckedInt lo_rank = lo == pair.vertex() ? out.vertex_rank : rank_fast(order, lo, table).rank;
  out.sum = partial_franel_sum_range(order, lo, hi, lo_rank, table, options);
  out.sum_over_log_n = out.sum.sum_float / std::log(static_cast<long double>(order));
  if (pair.eta() > 2) {
    const long double reduced_f = reduced.to_long_double();
    const long double offset =
        std::fabs(pair.vertex().to_long_double() -
                  out.vertex_rank.to_long_double() / out.sum.cardinality.to_long_double());
    out.predicted = std::log(reduced_f) * reduced_f * kFareyDensity * offset;
    if (*out.predicted > 0) out.measured_over_predicted = out.sum.sum_float / *out.predicted;
  }
  return out;
}

GrowthScan growth_scan(const VertexPair& pair, const std::vector<std::int64_t>& i_list,
                       const FranelOptions& options, unsigned threads) {
  std::vector<std::int64_t> sorted = i_list;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

  GrowthScan scan;
  scan.rows.resize(sorted.size());
  if (threads <= 1) {
    for (std::size_t k = 0; k < sorted.size(); ++k) scan.rows[k] = vertex_partial_sum(pair, sorted[k], options);
    return scan;
  }
  std::vector<std::future<VertexPartialSum>> jobs;
  jobs.reserve(sorted.size());
  for (const auto i : sorted) {
    jobs.push_back(std::async(std::launch::async, [&pair, &options, i] { return vertex_partial_sum(pair, i, options); }));
  }
  for (std::size_t k = 0; k < jobs.size(); ++k) scan.rows[k] = jobs[k].get();
  return scan;
}

KanemitsuResult kanemitsu_sum(std::int64_t order, const FranelOptions& options) {
  check_order(order);
  if (order < 4) throw DomainError("kanemitsu_sum requires N >= 4");
  const TotientTable table = TotientTable::build(order, options.table_limit);
  const Fraction quarter(1, 4);
  KanemitsuResult r;
  r.order = order;
  r.cardinality = farey_cardinality(order, table);
  r.cutoff_rank = rank_fast(order, quarter, table).rank;
  check_term_budget(r.cutoff_rank, options, "Kanemitsu sum");

  const bool exact = r.cutoff_rank <= CheckedInt{options.exact_term_budget};
  CompensatedSum total;
  Rational exact_total = 0;
  for_each_in_window(order, Fraction::zero(), quarter, [&](const Fraction& x) {
    total.add(static_cast<long double>(x.num()) / static_cast<long double>(x.den()));
    if (exact) exact_total += Rational(x.num(), x.den());
  });
  const i128 cut = r.cutoff_rank.raw();
  const i128 m = r.cardinality.raw();
  r.value = total.value() - static_cast<long double>(cut) * static_cast<long double>(cut) /
                                (2.0L * static_cast<long double>(m));
  if (exact) r.exact = exact_total - quotient(cut * cut, 2 * m);
  return r;
}

DressReport dress_scan(std::int64_t order, const FranelOptions& options) {
  check_order(order);
  const TotientTable table = TotientTable::build(order, options.table_limit);
  const CheckedInt cardinality = farey_cardinality(order, table);
  check_term_budget(cardinality, options, "Dress scan of F_" + std::to_string(order));
  DistanceScan<false> scan(cardinality.raw(), 1, false);
  for_each_in_window(order, Fraction::zero(), Fraction::one(), std::ref(scan));

  const i128 m = cardinality.raw();
  DressReport r;
  r.order = order;
  r.max_term = quotient(scan.best_t(), scan.best_den() * m);
  r.max_term_float = static_cast<long double>(scan.best_t()) / static_cast<long double>(scan.best_den()) /
                     static_cast<long double>(m);
  r.argmax_rank = CheckedInt::from_raw(scan.argmax());
  const i128 gap = m - 2 * static_cast<i128>(order);
  r.rank2_term = quotient(gap < 0 ? -gap : gap, static_cast<i128>(order) * m);
  // max_term <= 1/N  <=>  t N <= den M
  r.bound_ok = scan.best_t() * order <= scan.best_den() * m;
  return r;
}

std::vector<DressReport> dress_sweep(std::int64_t first, std::int64_t last, const FranelOptions& options,
                                     unsigned threads) {
  if (first < 1 || last < first) throw DomainError("dress_sweep needs 1 <= first <= last");
  const auto count = static_cast<std::size_t>(last - first + 1);
  std::vector<DressReport> reports(count);
  threads = std::max(1u, threads);
  if (threads == 1) {
    for (std::size_t k = 0; k < count; ++k) reports[k] = dress_scan(first + static_cast<std::int64_t>(k), options);
    return reports;
  }
  std::vector<std::future<void>> workers;
  for (unsigned w = 0; w < threads; ++w) {
    workers.push_back(std::async(std::launch::async, [&, w] {
      for (std::size_t k = w; k < count; k += threads) {
        reports[k] = dress_scan(first + static_cast<std::int64_t>(k), options);
      }
    }));
  }
  for (auto& w : workers) w.get();
  return reports;
}

}  // namespace farey
