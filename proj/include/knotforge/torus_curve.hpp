#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace knotforge {

// Essential simple closed curve on the once-punctured torus, stored as an
// unoriented primitive slope (p, q) in the basis (mu, lambda).
// Normal form: p > 0, or p == 0 and q == 1.
class TorusCurve {
 public:
  // Throws Errc::ZeroClass / Errc::NonPrimitive.
  static TorusCurve normalize(std::int64_t p, std::int64_t q);

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  friend auto operator<=>(const TorusCurve&, const TorusCurve&) = default;

  std::string str() const;

 private:
  TorusCurve(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
  std::int64_t p_;
  std::int64_t q_;
};

std::ostream& operator<<(std::ostream& os, const TorusCurve& c);

// Parses "p,q" (whitespace tolerated). Throws Errc::Parse or normalize errors.
TorusCurve parse_curve(const std::string& text);

namespace curves {

inline const TorusCurve mu = TorusCurve::normalize(1, 0);
inline const TorusCurve lambda = TorusCurve::normalize(0, 1);
inline const TorusCurve nu = TorusCurve::normalize(1, 1);

// Normal forms of {lambda, mu, nu, lambda - mu, lambda + nu, mu + nu}: the
// curves whose knots can be separated from the pants P by a disk meeting P
// in fewer than three arcs.
const std::array<TorusCurve, 6>& exceptional_set();

}  // namespace curves

// Geometric intersection number |a.p * b.q - a.q * b.p| on the punctured torus.
std::int64_t intersection(const TorusCurve& a, const TorusCurve& b);

// n twists of kappa along alpha:
//   normalize(r + n*D*t, s + n*D*v),  D = intersection(kappa, alpha),
// with kappa = (r, s) and alpha = (t, v) both taken in normal form.
// For n >= 0 this composes additively; negative n is not the inverse twist
// once the intermediate result changes sign under normalization.
TorusCurve dehn_twist(const TorusCurve& kappa, const TorusCurve& alpha, std::int64_t n);

bool is_exceptional(const TorusCurve& tau);

struct ProductDiskCounts {
  std::int64_t d_mu;
  std::int64_t d_lambda;
  std::int64_t d_nu;
  friend bool operator==(const ProductDiskCounts&, const ProductDiskCounts&) = default;
};

// Intersections of K(tau) with the product disks D_mu, D_lambda, D_nu of T x I.
ProductDiskCounts product_disk_intersections(const TorusCurve& tau);

}  // namespace knotforge
