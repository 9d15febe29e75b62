#pragma once

#include <array>
#include <cstdint>
#include <optional>

#include "farey/fraction.hpp"

namespace farey {

// Outcome of checking the determinant-gcd identities over many triples.
struct GcdSweepReport {
  std::int64_t triples = 0;
  std::int64_t counterexamples = 0;  // triples whose three gcds differ
  // Triples whose outer fractions are neighbours, and those among them where
  // gcd(det2(hi, mid), det2(mid, lo)) != 1.
  std::int64_t neighbor_triples = 0;
  std::int64_t neighbor_failures = 0;
  std::optional<std::array<Fraction, 3>> first_counterexample;

  bool clean() const { return counterexamples == 0 && neighbor_failures == 0; }
};

// Every strictly ascending triple of F_N.
GcdSweepReport gcd_sweep_exhaustive(std::int64_t order);

// `count` random triples of distinct reduced fractions a/b with
// 1 <= a, b <= max_value, sorted ascending. Deterministic for a given seed.
GcdSweepReport gcd_sweep_random(std::int64_t count, std::int64_t max_value, std::uint64_t seed);

}  // namespace farey
