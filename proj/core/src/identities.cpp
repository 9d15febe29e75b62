#include "farey/identities.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "farey/sequence.hpp"

namespace farey {

namespace {

void record(GcdSweepReport& report, const Fraction& lo, const Fraction& mid, const Fraction& hi) {
  ++report.triples;
  if (!gcd_triple(lo, mid, hi).all_equal()) {
    if (report.counterexamples++ == 0) report.first_counterexample = std::array<Fraction, 3>{lo, mid, hi};
  }
  if (are_neighbors(lo, hi)) {
    ++report.neighbor_triples;
    if (!neighbor_gcd_check(lo, mid, hi)) {
      if (report.neighbor_failures++ == 0 && !report.first_counterexample) {
        report.first_counterexample = std::array<Fraction, 3>{lo, mid, hi};
      }
    }
  }
}

}  // namespace

GcdSweepReport gcd_sweep_exhaustive(std::int64_t order) {
  const FareyWindow all = enumerate_window(order, Fraction::zero(), Fraction::one());
  const auto& f = all.fractions;
  GcdSweepReport report;
  for (std::size_t a = 0; a < f.size(); ++a) {
    for (std::size_t b = a + 1; b < f.size(); ++b) {
      for (std::size_t c = b + 1; c < f.size(); ++c) record(report, f[a], f[b], f[c]);
    }
  }
  return report;
}

GcdSweepReport gcd_sweep_random(std::int64_t count, std::int64_t max_value, std::uint64_t seed) {
  if (count < 0) throw DomainError("triple count must be nonnegative");
  if (max_value < 2) throw DomainError("max_value must be >= 2 to form distinct fractions");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> part(1, max_value);
  GcdSweepReport report;
  std::array<Fraction, 3> t;
  for (std::int64_t n = 0; n < count; ++n) {
    do {
      for (auto& x : t) x = Fraction(part(rng), part(rng));
      std::sort(t.begin(), t.end());
    } while (t[0] == t[1] || t[1] == t[2]);
    record(report, t[0], t[1], t[2]);
  }
  return report;
}

}  // namespace farey
