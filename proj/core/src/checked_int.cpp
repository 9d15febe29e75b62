#include "farey/checked_int.hpp"

#include <algorithm>

namespace farey {

std::string CheckedInt::to_string() const {
  if (v_ == 0) return "0";
  const bool negative = v_ < 0;
  // Work in unsigned space so that the minimum value prints correctly.
  unsigned __int128 mag = negative ? static_cast<unsigned __int128>(0) - static_cast<unsigned __int128>(v_)
                                   : static_cast<unsigned __int128>(v_);
  std::string out;
  while (mag != 0) {
    out.push_back(static_cast<char>('0' + static_cast<int>(mag % 10)));
    mag /= 10;
  }
  if (negative) out.push_back('-');
  std::reverse(out.begin(), out.end());
  return out;
}

CheckedInt abs(CheckedInt v) { return v < CheckedInt{} ? -v : v; }

CheckedInt gcd(CheckedInt a, CheckedInt b) {
  a = abs(a);
  b = abs(b);
  auto x = a.raw();
  auto y = b.raw();
  while (y != 0) {
    auto t = x % y;
    x = y;
    y = t;
  }
  return CheckedInt::from_raw(x);
}

CheckedInt floor_div(CheckedInt a, CheckedInt b) {
  if (b <= CheckedInt{}) throw DomainError("floor_div requires a positive divisor");
  CheckedInt q = a / b;
  if (q * b > a) q -= 1;
  return q;
}

CheckedInt parse_checked_int(const std::string& text) {
  if (text.empty()) throw DomainError("empty integer literal");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw DomainError("malformed integer literal '" + text + "'");
  CheckedInt value;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw DomainError("malformed integer literal '" + text + "'");
    value = value * CheckedInt{10} + CheckedInt{c - '0'};
  }
  return negative ? -value : value;
}

}  // namespace farey
