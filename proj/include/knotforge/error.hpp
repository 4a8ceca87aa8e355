#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace knotforge {

enum class Errc {
  NonPrimitive,
  ZeroClass,
  Overflow,
  ShapeMismatch,
  IncompatibleDecomposition,
  TrivialBand,
  MissingPrecondition,
  InvalidGenus,
  BadChi,
  BadGenus,
  MalformedMap,
  LimitExceeded,
  MalformedSample,
  NonPrimitiveBase,
  PreconditionUnmet,
  Inconsistent,
  Parse,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

namespace checked {

// All curve and bound arithmetic runs through these; any result outside
// int64 raises Errc::Overflow instead of wrapping.
inline std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer addition");
  return r;
}

inline std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer subtraction");
  return r;
}

inline std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(Errc::Overflow, "integer multiplication");
  return r;
}

inline std::int64_t neg(std::int64_t a) { return sub(0, a); }

inline std::int64_t abs(std::int64_t a) { return a < 0 ? neg(a) : a; }

// |a*d - b*c| evaluated in 128 bits, then range-checked.
inline std::int64_t abs_det(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  __int128 v = static_cast<__int128>(a) * d - static_cast<__int128>(b) * c;
  if (v < 0) v = -v;
  if (v > INT64_MAX) throw Error(Errc::Overflow, "determinant");
  return static_cast<std::int64_t>(v);
}

}  // namespace checked
}  // namespace knotforge
