#include "farey/fraction.hpp"

#include <charconv>
#include <numeric>

namespace farey {

Fraction::Fraction(std::int64_t num, std::int64_t den) {
  if (num < 0 || den < 0) throw DomainError("fractions must have nonnegative parts");
  if (num == 0 && den == 0) throw DomainError("0/0 is not a fraction");
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

Fraction Fraction::from_checked(CheckedInt num, CheckedInt den) {
  return Fraction(num.to_i64(), den.to_i64());
}

namespace {

std::int64_t parse_part(std::string_view part, std::string_view whole) {
  std::int64_t value = 0;
  const auto* first = part.data();
  const auto* last = part.data() + part.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (part.empty() || ec != std::errc{} || ptr != last) {
    throw DomainError("malformed fraction '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Fraction Fraction::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_part(text, text), 1);
  return Fraction(parse_part(text.substr(0, slash), text), parse_part(text.substr(slash + 1), text));
}

std::string Fraction::to_string() const { return std::to_string(num_) + "/" + std::to_string(den_); }

long double Fraction::to_long_double() const {
  return static_cast<long double>(num_) / static_cast<long double>(den_);
}

CheckedInt det2(const Fraction& p, const Fraction& r) {
  return CheckedInt{p.num()} * CheckedInt{r.den()} - CheckedInt{r.num()} * CheckedInt{p.den()};
}

Fraction mediant(const Fraction& p, const Fraction& r) {
  if (!are_neighbors(p, r)) {
    throw DomainError("mediant of " + p.to_string() + " and " + r.to_string() + " requires Farey neighbours");
  }
  const CheckedInt num = CheckedInt{p.num()} + CheckedInt{r.num()};
  const CheckedInt den = CheckedInt{p.den()} + CheckedInt{r.den()};
  return Fraction::from_reduced(num.to_i64(), den.to_i64());
}

Fraction shear(const Fraction& p) {
  if (p.is_infinite()) throw DomainError("shear is undefined at 1/0");
  const CheckedInt den = CheckedInt{p.num()} + CheckedInt{p.den()};
  return Fraction::from_reduced(p.num(), den.to_i64());
}

GcdTriple gcd_triple(const Fraction& lo, const Fraction& mid, const Fraction& hi) {
  if (!(lo < mid && mid < hi)) {
    throw DomainError("gcd_triple requires lo < mid < hi, got " + lo.to_string() + ", " + mid.to_string() + ", " +
                      hi.to_string());
  }
  const CheckedInt hm = det2(hi, mid);
  const CheckedInt hl = det2(hi, lo);
  const CheckedInt ml = det2(mid, lo);
  return GcdTriple{gcd(hm, hl), gcd(hm, ml), gcd(hl, ml)};
}

bool neighbor_gcd_check(const Fraction& lo, const Fraction& mid, const Fraction& hi) {
  if (!are_neighbors(hi, lo)) {
    throw DomainError(lo.to_string() + " and " + hi.to_string() + " are not Farey neighbours");
  }
  if (!(lo < mid && mid < hi)) throw DomainError("neighbor_gcd_check requires lo < mid < hi");
  return gcd(det2(hi, mid), det2(mid, lo)) == CheckedInt{1};
}

}  // namespace farey
