#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "farey/fraction.hpp"
#include "farey/sequence.hpp"

namespace farey {

// A Farey fraction (the vertex) together with one of its neighbours in
// F_eta, eta = vertex.den (the co-vertex). For the vertex 0/1 the co-vertex
// is always the sentinel 1/0.
class VertexPair {
 public:
  // Throws DomainError unless the pair is admissible.
  static VertexPair make(const Fraction& vertex, const Fraction& co_vertex);

  const Fraction& vertex() const { return vertex_; }
  const Fraction& co_vertex() const { return co_vertex_; }
  std::int64_t eta() const { return vertex_.den(); }
  // +1 when co_vertex > vertex, -1 otherwise.
  int sign() const { return sign_; }

  // (chi m + a) / (eta m + b): the mediant of vertex and co-vertex taken m
  // times towards the vertex.
  Fraction iterated_mediant(std::int64_t m) const;

 private:
  Fraction vertex_;
  Fraction co_vertex_;
  int sign_ = 1;
};

// The admissible co-vertices of a vertex (1/0 for 0/1, otherwise its one or
// two neighbours in F_eta).
std::vector<Fraction> co_vertex_candidates(const Fraction& vertex);

// Parameters of the bijection between F'_i and the F_N window
// [(chi q + a)/(eta q + b), (chi (q-1) + a)/(eta (q-1) + b)].
// Invariants, checked on construction: N is a multiple of eta i (i+1) and
// N/(eta (i+1)) < q <= N/(eta i).
class MapParams {
 public:
  static MapParams make(const VertexPair& pair, std::int64_t q, std::int64_t i, std::int64_t order);
  // i = floor(N / (q eta)).
  static MapParams with_derived_i(const VertexPair& pair, std::int64_t q, std::int64_t order);

  const VertexPair& pair() const { return pair_; }
  const Fraction& vertex() const { return pair_.vertex(); }
  const Fraction& co_vertex() const { return pair_.co_vertex(); }
  std::int64_t eta() const { return pair_.eta(); }
  int sign() const { return pair_.sign(); }
  std::int64_t q() const { return q_; }
  std::int64_t i() const { return i_; }
  std::int64_t order() const { return order_; }

  // True when q = N / (eta i), the top of the admissible range.
  bool q_at_top() const { return q_ * eta() * i_ == order_; }

  // (chi q + a)/(eta q + b) and (chi (q-1) + a)/(eta (q-1) + b).
  Fraction near_endpoint() const { return pair_.iterated_mediant(q_); }
  Fraction far_endpoint() const { return pair_.iterated_mediant(q_ - 1); }
  // The same two endpoints with lower() < upper() whatever the sign.
  Fraction lower() const;
  Fraction upper() const;

  // k (eta q + b) - eta h <= N: whether h/k in F_i maps into F_N.
  bool admits(const Fraction& hk) const;

 private:
  MapParams(const VertexPair& pair, std::int64_t q, std::int64_t i, std::int64_t order)
      : pair_(pair), q_(q), i_(i), order_(order) {}

  VertexPair pair_;
  std::int64_t q_;
  std::int64_t i_;
  std::int64_t order_;
};

struct FPrimeSet {
  MapParams params;
  std::vector<Fraction> members;  // ascending subset of F_i
};

FPrimeSet build_f_prime(const MapParams& params);

// h/k -> (k (chi q + a) - chi h) / (k (eta q + b) - eta h).
Fraction forward_map(const MapParams& params, const Fraction& hk);

// u/l -> (q (eta u - l chi) + u b - l a) / (eta u - l chi).
Fraction inverse_map(const MapParams& params, const Fraction& ul);

// Image of F'_i, ascending. Coincides with enumerate_window(N, lower, upper).
FareyWindow map_window(const MapParams& params);

enum class CardinalityBranch {
  equal,        // q < N/(eta i) or b = 0: |F_i| = |F'_i| = |window|
  top_of_range  // q = N/(eta i): |F_i| >= |F'_i| = |window| > |F_i| - i
};

struct CardinalityReport {
  std::int64_t f_i = 0;
  std::int64_t f_prime = 0;
  std::int64_t window = 0;
  CardinalityBranch branch = CardinalityBranch::equal;
  bool holds = false;
};

// Counts the three sets (the window by direct enumeration of F_N) and
// checks the relation for the applicable branch. Throws IdentityViolation
// when it fails.
CardinalityReport cardinality_relation(const MapParams& params);

// Every admissible (vertex, co-vertex) pair whose vertex has denominator eta.
std::vector<VertexPair> vertex_pairs_with_eta(std::int64_t eta);

// Full check of one bijection against brute-force enumeration of F_N.
struct MapVerification {
  std::int64_t f_prime_size = 0;
  bool round_trip = false;      // inverse(forward(x)) = x on F'_i and forward(inverse(y)) = y on the window
  bool window_matches = false;  // map_window equals enumerate_window(N, lower, upper)
  bool monotone = false;        // forward_map strictly monotone with direction s
  bool endpoints_adjacent = false;
  bool cardinality_holds = false;
  std::string failure;  // first failure, empty when ok()

  bool ok() const { return round_trip && window_matches && monotone && endpoints_adjacent && cardinality_holds; }
};

MapVerification verify_map(const MapParams& params);

}  // namespace farey
