#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace knotforge {

// Exact fraction num/den in lowest terms with den > 0. Overflow raises
// Errc::Overflow like the rest of the integer arithmetic.
class Rational {
 public:
  Rational(std::int64_t num = 0, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  // floor / ceil towards -inf / +inf
  std::int64_t floor() const;
  std::int64_t ceil() const;
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);

  // "7" or "7/2"
  std::string str() const;

 private:
  std::int64_t num_;
  std::int64_t den_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace knotforge
