#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "farey/error.hpp"

namespace farey {

// Signed 128-bit integer whose arithmetic throws OverflowError instead of
// wrapping. Used for every quantity that scales like N^2 or worse.
class CheckedInt {
 public:
  using rep = __int128;

  constexpr CheckedInt() = default;
  constexpr CheckedInt(std::int64_t v) : v_(v) {}  // NOLINT(implicit)
  constexpr CheckedInt(int v) : v_(v) {}           // NOLINT(implicit)
  constexpr CheckedInt(std::uint64_t v) : v_(static_cast<rep>(v)) {}  // NOLINT(implicit)

  static constexpr CheckedInt from_raw(rep v) {
    CheckedInt r;
    r.v_ = v;
    return r;
  }

  constexpr rep raw() const { return v_; }

  // Narrowing conversion; throws when the value does not fit.
  std::int64_t to_i64() const {
    if (v_ > std::numeric_limits<std::int64_t>::max() ||
        v_ < std::numeric_limits<std::int64_t>::min()) {
      throw OverflowError("value " + to_string() + " does not fit in 64 bits");
    }
    return static_cast<std::int64_t>(v_);
  }

  long double to_long_double() const { return static_cast<long double>(v_); }
  double to_double() const { return static_cast<double>(v_); }

  friend CheckedInt operator+(CheckedInt a, CheckedInt b) {
    rep r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw OverflowError("128-bit addition overflow");
    return from_raw(r);
  }
  friend CheckedInt operator-(CheckedInt a, CheckedInt b) {
    rep r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw OverflowError("128-bit subtraction overflow");
    return from_raw(r);
  }
  friend CheckedInt operator*(CheckedInt a, CheckedInt b) {
    rep r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw OverflowError("128-bit multiplication overflow");
    return from_raw(r);
  }
  // Truncating division, as for built-in integers.
  friend CheckedInt operator/(CheckedInt a, CheckedInt b) {
    if (b.v_ == 0) throw DomainError("division by zero");
    if (a.v_ == min_rep() && b.v_ == -1) throw OverflowError("128-bit division overflow");
    return from_raw(a.v_ / b.v_);
  }
  friend CheckedInt operator%(CheckedInt a, CheckedInt b) {
    if (b.v_ == 0) throw DomainError("modulo by zero");
    if (b.v_ == -1) return CheckedInt{};
    return from_raw(a.v_ % b.v_);
  }
  CheckedInt operator-() const { return CheckedInt{} - *this; }

  CheckedInt& operator+=(CheckedInt o) { return *this = *this + o; }
  CheckedInt& operator-=(CheckedInt o) { return *this = *this - o; }
  CheckedInt& operator*=(CheckedInt o) { return *this = *this * o; }
  CheckedInt& operator/=(CheckedInt o) { return *this = *this / o; }

  friend constexpr bool operator==(CheckedInt a, CheckedInt b) { return a.v_ == b.v_; }
  friend constexpr std::strong_ordering operator<=>(CheckedInt a, CheckedInt b) {
    return a.v_ <=> b.v_;
  }

  std::string to_string() const;

  friend std::ostream& operator<<(std::ostream& os, CheckedInt v) { return os << v.to_string(); }

 private:
  static constexpr rep min_rep() { return static_cast<rep>(static_cast<unsigned __int128>(1) << 127); }

  rep v_ = 0;
};

CheckedInt abs(CheckedInt v);

// gcd(x, 0) = |x|; the result is always nonnegative.
CheckedInt gcd(CheckedInt a, CheckedInt b);

// Floor division for a positive divisor.
CheckedInt floor_div(CheckedInt a, CheckedInt b);

// Parses an optionally signed decimal integer; throws DomainError on junk.
CheckedInt parse_checked_int(const std::string& text);

}  // namespace farey
