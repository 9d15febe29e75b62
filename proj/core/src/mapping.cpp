#include "farey/mapping.hpp"

#include <algorithm>
#include <string>

namespace farey {

VertexPair VertexPair::make(const Fraction& vertex, const Fraction& co_vertex) {
  if (vertex.is_infinite() || vertex > Fraction::one()) {
    throw DomainError("vertex must be a fraction in [0, 1], got " + vertex.to_string());
  }
  if (vertex == Fraction::zero()) {
    if (co_vertex != Fraction::infinity()) {
      throw DomainError("the co-vertex of 0/1 is 1/0, got " + co_vertex.to_string());
    }
  } else {
    if (co_vertex.is_infinite() || co_vertex > Fraction::one() || co_vertex.den() > vertex.den()) {
      throw DomainError("co-vertex " + co_vertex.to_string() + " is not in F_" + std::to_string(vertex.den()));
    }
    if (!are_neighbors(vertex, co_vertex)) {
      throw DomainError(vertex.to_string() + " and " + co_vertex.to_string() + " are not Farey neighbours");
    }
  }
  VertexPair p;
  p.vertex_ = vertex;
  p.co_vertex_ = co_vertex;
  p.sign_ = co_vertex > vertex ? 1 : -1;
  return p;
}

Fraction VertexPair::iterated_mediant(std::int64_t m) const {
  const CheckedInt num = CheckedInt{vertex_.num()} * CheckedInt{m} + CheckedInt{co_vertex_.num()};
  const CheckedInt den = CheckedInt{vertex_.den()} * CheckedInt{m} + CheckedInt{co_vertex_.den()};
  return Fraction::from_checked(num, den);
}

std::vector<Fraction> co_vertex_candidates(const Fraction& vertex) {
  if (vertex == Fraction::zero()) return {Fraction::infinity()};
  const auto n = farey_neighbors(vertex.den(), vertex);
  std::vector<Fraction> out;
  if (n.left) out.push_back(*n.left);
  if (n.right) out.push_back(*n.right);
  return out;
}

MapParams MapParams::make(const VertexPair& pair, std::int64_t q, std::int64_t i, std::int64_t order) {
  if (i < 1) throw DomainError("i must be >= 1");
  if (q < 1) throw DomainError("q must be >= 1");
  check_order(order);
  const CheckedInt eta{pair.eta()};
  const CheckedInt period = eta * CheckedInt{i} * CheckedInt{i + 1};
  if (CheckedInt{order} % period != CheckedInt{}) {
    throw DomainError("N = " + std::to_string(order) + " is not a multiple of eta i (i+1) = " + period.to_string());
  }
  // N/(eta (i+1)) < q <= N/(eta i)
  if (!(CheckedInt{q} * eta * CheckedInt{i + 1} > CheckedInt{order} &&
        CheckedInt{q} * eta * CheckedInt{i} <= CheckedInt{order})) {
    throw DomainError("q = " + std::to_string(q) + " outside (N/(eta(i+1)), N/(eta i)] for N = " +
                      std::to_string(order) + ", eta = " + std::to_string(pair.eta()) + ", i = " + std::to_string(i));
  }
  return MapParams(pair, q, i, order);
}

MapParams MapParams::with_derived_i(const VertexPair& pair, std::int64_t q, std::int64_t order) {
  if (q < 1) throw DomainError("q must be >= 1");
  const std::int64_t i = order / (q * pair.eta());
  return make(pair, q, i, order);
}

Fraction MapParams::lower() const { return std::min(near_endpoint(), far_endpoint()); }
Fraction MapParams::upper() const { return std::max(near_endpoint(), far_endpoint()); }

bool MapParams::admits(const Fraction& hk) const {
  const CheckedInt l =
      CheckedInt{hk.den()} * (CheckedInt{eta()} * CheckedInt{q_} + CheckedInt{co_vertex().den()}) -
      CheckedInt{eta()} * CheckedInt{hk.num()};
  return l <= CheckedInt{order_};
}

FPrimeSet build_f_prime(const MapParams& params) {
  FPrimeSet set{params, {}};
  for_each_in_window(params.i(), Fraction::zero(), Fraction::one(), [&](const Fraction& hk) {
    if (params.admits(hk)) set.members.push_back(hk);
  });
  return set;
}

Fraction forward_map(const MapParams& params, const Fraction& hk) {
  if (hk > Fraction::one() || hk.den() > params.i() || !params.admits(hk)) {
    throw DomainError(hk.to_string() + " is not in F'_" + std::to_string(params.i()));
  }
  const CheckedInt h{hk.num()}, k{hk.den()};
  const CheckedInt chi{params.vertex().num()}, eta{params.eta()};
  const CheckedInt a{params.co_vertex().num()}, b{params.co_vertex().den()};
  const CheckedInt q{params.q()};
  const CheckedInt u = k * (chi * q + a) - chi * h;
  const CheckedInt l = k * (eta * q + b) - eta * h;
  if (gcd(u, l) != CheckedInt{1}) {
    throw IdentityViolation("image " + u.to_string() + "/" + l.to_string() + " of " + hk.to_string() +
                            " is not reduced");
  }
  return Fraction::from_reduced(u.to_i64(), l.to_i64());
}

Fraction inverse_map(const MapParams& params, const Fraction& ul) {
  if (ul.is_infinite() || ul.den() > params.order() || ul < params.lower() || ul > params.upper()) {
    throw DomainError(ul.to_string() + " is not in F_" + std::to_string(params.order()) + " over [" +
                      params.lower().to_string() + ", " + params.upper().to_string() + "]");
  }
  const CheckedInt u{ul.num()}, l{ul.den()};
  const CheckedInt chi{params.vertex().num()}, eta{params.eta()};
  const CheckedInt a{params.co_vertex().num()}, b{params.co_vertex().den()};
  CheckedInt den = eta * u - l * chi;
  CheckedInt num = CheckedInt{params.q()} * den + u * b - l * a;
  if (den < CheckedInt{}) {
    den = -den;
    num = -num;
  }
  if (den == CheckedInt{} || num < CheckedInt{} || gcd(num, den) != CheckedInt{1}) {
    throw IdentityViolation("preimage " + num.to_string() + "/" + den.to_string() + " of " + ul.to_string() +
                            " is not a reduced Farey fraction");
  }
  const Fraction hk = Fraction::from_reduced(num.to_i64(), den.to_i64());
  if (hk > Fraction::one() || hk.den() > params.i() || !params.admits(hk)) {
    throw IdentityViolation("preimage " + hk.to_string() + " of " + ul.to_string() + " falls outside F'_" +
                            std::to_string(params.i()));
  }
  return hk;
}

FareyWindow map_window(const MapParams& params) {
  const FPrimeSet set = build_f_prime(params);
  FareyWindow window{params.order(), params.lower(), params.upper(), {}};
  window.fractions.reserve(set.members.size());
  for (const auto& hk : set.members) window.fractions.push_back(forward_map(params, hk));
  if (params.sign() < 0) std::reverse(window.fractions.begin(), window.fractions.end());
  return window;
}

CardinalityReport cardinality_relation(const MapParams& params) {
  CardinalityReport r;
  r.f_i = for_each_in_window(params.i(), Fraction::zero(), Fraction::one(), [](const Fraction&) {});
  r.f_prime = static_cast<std::int64_t>(build_f_prime(params).members.size());
  r.window = for_each_in_window(params.order(), params.lower(), params.upper(), [](const Fraction&) {});
  const bool equal_branch = !params.q_at_top() || params.co_vertex().den() == 0;
  if (equal_branch) {
    r.branch = CardinalityBranch::equal;
    r.holds = r.f_i == r.f_prime && r.f_prime == r.window;
  } else {
    r.branch = CardinalityBranch::top_of_range;
    r.holds = r.f_i >= r.f_prime && r.f_prime == r.window && r.f_prime > r.f_i - params.i();
  }
  if (!r.holds) {
    throw IdentityViolation("cardinality relation fails: |F_i| = " + std::to_string(r.f_i) +
                            ", |F'_i| = " + std::to_string(r.f_prime) + ", |window| = " + std::to_string(r.window));
  }
  return r;
}

std::vector<VertexPair> vertex_pairs_with_eta(std::int64_t eta) {
  if (eta < 1) throw DomainError("eta must be >= 1");
  std::vector<VertexPair> pairs;
  for_each_in_window(eta, Fraction::zero(), Fraction::one(), [&](const Fraction& v) {
    if (v.den() != eta) return;
    for (const auto& c : co_vertex_candidates(v)) pairs.push_back(VertexPair::make(v, c));
  });
  return pairs;
}

MapVerification verify_map(const MapParams& params) {
  MapVerification v;
  auto fail = [&](const std::string& why) {
    if (v.failure.empty()) v.failure = why;
  };
  try {
    const FPrimeSet set = build_f_prime(params);
    v.f_prime_size = static_cast<std::int64_t>(set.members.size());

    std::vector<Fraction> images;
    images.reserve(set.members.size());
    v.round_trip = true;
    for (const auto& hk : set.members) {
      const Fraction ul = forward_map(params, hk);
      images.push_back(ul);
      if (inverse_map(params, ul) != hk) {
        v.round_trip = false;
        fail("inverse(forward(" + hk.to_string() + ")) != " + hk.to_string());
      }
    }

    v.monotone = true;
    for (std::size_t k = 1; k < images.size(); ++k) {
      const bool up = images[k - 1] < images[k];
      if (up != (params.sign() > 0) || images[k - 1] == images[k]) {
        v.monotone = false;
        fail("forward map not monotone with direction s at " + set.members[k].to_string());
      }
    }

    const FareyWindow mapped = map_window(params);
    const FareyWindow brute = enumerate_window(params.order(), params.lower(), params.upper());
    v.window_matches = mapped.fractions == brute.fractions;
    if (!v.window_matches) {
      fail("image has " + std::to_string(mapped.fractions.size()) + " fractions, window has " +
           std::to_string(brute.fractions.size()));
    }
    for (const auto& ul : brute.fractions) {
      if (forward_map(params, inverse_map(params, ul)) != ul) {
        v.round_trip = false;
        fail("forward(inverse(" + ul.to_string() + ")) != " + ul.to_string());
      }
    }

    v.endpoints_adjacent = are_neighbors(params.lower(), params.upper());
    if (!v.endpoints_adjacent) fail("interval endpoints are not Farey neighbours");

    v.cardinality_holds = cardinality_relation(params).holds;
  } catch (const IdentityViolation& e) {
    fail(e.what());
  } catch (const DomainError& e) {
    fail(e.what());
  }
  return v;
}

}  // namespace farey
