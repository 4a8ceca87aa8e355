#include "knotforge/rational.hpp"

#include <numeric>
#include <ostream>

#include "knotforge/error.hpp"

namespace knotforge {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw Error(Errc::Overflow, "zero denominator");
  if (den < 0) {
    num = checked::neg(num);
    den = checked::neg(den);
  }
  const std::int64_t g = std::gcd(num, den);
  num_ = num / g;
  den_ = den / g;
}

std::int64_t Rational::floor() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ < 0) --q;
  return q;
}

std::int64_t Rational::ceil() const {
  std::int64_t q = num_ / den_;
  if (num_ % den_ != 0 && num_ > 0) ++q;
  return q;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num_) * b.den_;
  const __int128 r = static_cast<__int128>(b.num_) * a.den_;
  return l <=> r;
}

Rational operator+(const Rational& a, const Rational& b) {
  return {checked::add(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)), checked::mul(a.den_, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) {
  return {checked::sub(checked::mul(a.num_, b.den_), checked::mul(b.num_, a.den_)), checked::mul(a.den_, b.den_)};
}

Rational operator*(const Rational& a, const Rational& b) {
  return {checked::mul(a.num_, b.num_), checked::mul(a.den_, b.den_)};
}

std::string Rational::str() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace knotforge
