#include "knotforge/torus_curve.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "knotforge/error.hpp"

namespace knotforge {

TorusCurve TorusCurve::normalize(std::int64_t p, std::int64_t q) {
  if (p == 0 && q == 0) throw Error(Errc::ZeroClass, "(0,0) is not a curve");
  if (p == INT64_MIN || q == INT64_MIN) throw Error(Errc::Overflow, "coordinate out of range");
  if (std::gcd(p, q) != 1) {
    std::ostringstream os;
    os << "(" << p << "," << q << ") has gcd " << std::gcd(p, q);
    throw Error(Errc::NonPrimitive, os.str());
  }
  if (p < 0 || (p == 0 && q < 0)) return TorusCurve(-p, -q);
  return TorusCurve(p, q);
}

std::string TorusCurve::str() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const TorusCurve& c) {
  return os << "(" << c.p() << "," << c.q() << ")";
}

TorusCurve parse_curve(const std::string& text) {
  std::string s = text;
  std::replace(s.begin(), s.end(), ',', ' ');
  std::replace(s.begin(), s.end(), '(', ' ');
  std::replace(s.begin(), s.end(), ')', ' ');
  std::istringstream in(s);
  std::int64_t p = 0;
  std::int64_t q = 0;
  std::string rest;
  if (!(in >> p >> q) || (in >> rest)) throw Error(Errc::Parse, "expected 'p,q' but got '" + text + "'");
  return TorusCurve::normalize(p, q);
}

namespace curves {

const std::array<TorusCurve, 6>& exceptional_set() {
  static const std::array<TorusCurve, 6> set = {
      TorusCurve::normalize(0, 1),  TorusCurve::normalize(1, 0), TorusCurve::normalize(1, 1),
      TorusCurve::normalize(1, -1), TorusCurve::normalize(1, 2), TorusCurve::normalize(2, 1),
  };
  return set;
}

}  // namespace curves

std::int64_t intersection(const TorusCurve& a, const TorusCurve& b) {
  return checked::abs_det(a.p(), a.q(), b.p(), b.q());
}

TorusCurve dehn_twist(const TorusCurve& kappa, const TorusCurve& alpha, std::int64_t n) {
  const std::int64_t shift = checked::mul(n, intersection(kappa, alpha));
  return TorusCurve::normalize(checked::add(kappa.p(), checked::mul(shift, alpha.p())),
                               checked::add(kappa.q(), checked::mul(shift, alpha.q())));
}

bool is_exceptional(const TorusCurve& tau) {
  const auto& set = curves::exceptional_set();
  return std::find(set.begin(), set.end(), tau) != set.end();
}

ProductDiskCounts product_disk_intersections(const TorusCurve& tau) {
  return {intersection(tau, curves::mu), intersection(tau, curves::lambda), intersection(tau, curves::nu)};
}

}  // namespace knotforge
