#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

#include "farey/checked_int.hpp"

namespace farey {

// Nonnegative reduced fraction num/den. The sentinel 1/0 is a valid value and
// compares greater than every finite fraction; 0/0 is rejected.
class Fraction {
 public:
  // 0/1
  constexpr Fraction() = default;

  // Reduces by gcd; throws DomainError for negative parts or 0/0.
  Fraction(std::int64_t num, std::int64_t den);

  // Narrows checked values first (OverflowError when they exceed 64 bits).
  static Fraction from_checked(CheckedInt num, CheckedInt den);

  // Caller guarantees num, den >= 0, gcd(num, den) = 1, not both zero.
  static constexpr Fraction from_reduced(std::int64_t num, std::int64_t den) {
    Fraction f;
    f.num_ = num;
    f.den_ = den;
    return f;
  }

  // Parses "num/den" (or a bare integer "n", read as n/1).
  static Fraction parse(std::string_view text);

  static constexpr Fraction zero() { return from_reduced(0, 1); }
  static constexpr Fraction one() { return from_reduced(1, 1); }
  static constexpr Fraction infinity() { return from_reduced(1, 0); }

  constexpr std::int64_t num() const { return num_; }
  constexpr std::int64_t den() const { return den_; }
  constexpr bool is_infinite() const { return den_ == 0; }

  std::string to_string() const;
  long double to_long_double() const;

  friend constexpr bool operator==(const Fraction&, const Fraction&) = default;
  friend constexpr std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    const __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs <=> rhs;
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// p.num * r.den - r.num * p.den, exact.
CheckedInt det2(const Fraction& p, const Fraction& r);

// (p.num + r.num) / (p.den + r.den); requires |det2(p, r)| = 1.
Fraction mediant(const Fraction& p, const Fraction& r);

// h/k -> h/(h+k). Order preserving and leaves every pairwise det2 unchanged.
Fraction shear(const Fraction& p);

struct GcdTriple {
  CheckedInt g1;  // gcd(det2(hi, mid), det2(hi, lo))
  CheckedInt g2;  // gcd(det2(hi, mid), det2(mid, lo))
  CheckedInt g3;  // gcd(det2(hi, lo), det2(mid, lo))

  bool all_equal() const { return g1 == g2 && g2 == g3; }
  friend bool operator==(const GcdTriple&, const GcdTriple&) = default;
};

// The three pairwise gcds of the determinants formed by lo < mid < hi.
// For reduced fractions they always coincide.
GcdTriple gcd_triple(const Fraction& lo, const Fraction& mid, const Fraction& hi);

// lo, hi neighbours (|det2| = 1) and lo < mid < hi: whether
// gcd(det2(hi, mid), det2(mid, lo)) = 1, which must always be the case.
bool neighbor_gcd_check(const Fraction& lo, const Fraction& mid, const Fraction& hi);

inline bool are_neighbors(const Fraction& p, const Fraction& r) { return abs(det2(p, r)) == CheckedInt{1}; }

}  // namespace farey

template <>
struct std::hash<farey::Fraction> {
  std::size_t operator()(const farey::Fraction& f) const noexcept {
    return std::hash<std::int64_t>{}(f.num()) * 1000003u ^ std::hash<std::int64_t>{}(f.den());
  }
};
