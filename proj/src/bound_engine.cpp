#include "knotforge/bound_engine.hpp"

#include <algorithm>

#include "knotforge/error.hpp"

namespace knotforge::bounds {

namespace {

using checked::add;
using checked::mul;
using checked::sub;

std::int64_t require_negative(std::int64_t chi_Q) {
  if (chi_Q >= 0) throw Error(Errc::BadChi, "chi(Q) must be negative, got " + std::to_string(chi_Q));
  return checked::neg(chi_Q);
}

// ceil(a / b) for a >= 0, b > 0
std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a / b + (a % b != 0); }

}  // namespace

void validate(const CatchingStats& s) {
  if (s.f_L < 1) throw Error(Errc::PreconditionUnmet, "f_L must be at least 1");
  for (std::int64_t v : {s.f_K, s.f_M, s.Delta_K, s.Delta_L, s.Delta_M})
    if (v < 0) throw Error(Errc::PreconditionUnmet, "boundary counts and distances are nonnegative");
}

std::int64_t threshold_expression(std::int64_t fpK, std::int64_t fpM, std::int64_t DpK, std::int64_t f_M,
                                  std::int64_t chi_F_hat, std::int64_t chi_Q) {
  const std::int64_t q = std::max<std::int64_t>(mul(-6, chi_Q), 2);
  const std::int64_t inner = add(sub(add(mul(fpK, DpK), f_M), chi_F_hat), 2);
  return mul(mul(mul(6, fpM), q), inner);
}

std::int64_t threshold(const CatchingStats& s) {
  validate(s);
  return threshold_expression(std::max<std::int64_t>(s.f_K, 1), std::max<std::int64_t>(s.f_M, 1),
                              std::max<std::int64_t>(s.Delta_K, 1), s.f_M, s.chi_F_hat, s.chi_Q);
}

std::int64_t parallelism_class_bound(std::int64_t chi_Q) { return std::max<std::int64_t>(mul(-3, chi_Q), 1); }

std::int64_t parallel_edges_threshold(std::int64_t V, std::int64_t chi_S) {
  if (V < 1) throw Error(Errc::PreconditionUnmet, "graph needs at least one vertex");
  return mul(mul(3, V), std::max<std::int64_t>(sub(1, chi_S), 1));
}

std::int64_t catching_chi(const CatchingRecipe& r) {
  if (r.tube_pairs < 0 || r.punctures < 0) throw Error(Errc::PreconditionUnmet, "negative tube/puncture count");
  return sub(sub(r.base_chi, mul(2, r.tube_pairs)), r.punctures);
}

namespace recipes {

CatchingRecipe gamma_disk() { return {"gamma-disk", 1, 3, 1, 0}; }

CatchingRecipe nu_case(const TorusCurve& kappa) {
  return {"nu-pants", -1, 0, add(1, intersection(kappa, curves::nu)), 0};
}

CatchingRecipe genus2_banded(const TorusCurve& alpha, std::optional<std::int64_t> kappa_punctures,
                             HandlebodyType type) {
  if (alpha == curves::mu || alpha == curves::lambda || alpha == curves::nu)
    throw Error(Errc::PreconditionUnmet, "banded genus-2 surface needs alpha outside {mu, lambda, nu}");
  if (!kappa_punctures)
    throw Error(Errc::PreconditionUnmet, "banded genus-2 surface needs the count of K(kappa) punctures");
  if (*kappa_punctures < 0) throw Error(Errc::PreconditionUnmet, "negative puncture count");
  // Each of L_+ and L_- meets it in `geometric` points; tubing a pair costs 2
  // and leaving a puncture costs 1, so chi drops by `geometric` whatever the
  // algebraic count is. Recorded as punctures with no tubes.
  const std::int64_t geometric = add(intersection(alpha, curves::mu), intersection(alpha, curves::lambda));
  return {"genus2-banded", -3, 0, add(mul(2, geometric), *kappa_punctures), band_copies(type, true, 1)};
}

std::int64_t band_copies(HandlebodyType type, bool banded, std::int64_t i) {
  if (banded) return type == HandlebodyType::H ? 4 : 8;
  return mul(type == HandlebodyType::H ? 32 : 64, checked::abs(i));
}

}  // namespace recipes

std::int64_t disk_hitting_lower_bound(std::int64_t i, std::int64_t chi_Q) {
  const std::int64_t c = require_negative(chi_Q);
  return std::max<std::int64_t>(ceil_div(checked::abs(i), mul(36, c)) - 1, 0);
}

std::int64_t annulus_hitting_lower_bound(std::int64_t i, std::int64_t chi_Q) {
  const std::int64_t c = require_negative(chi_Q);
  return std::max<std::int64_t>(ceil_div(checked::abs(i), mul(72, c)) - 2, 0);
}

Rational bridge_lower_bound(std::int64_t n, std::int64_t chi_Q, std::int64_t g) {
  const std::int64_t c = require_negative(chi_Q);
  if (g < 2) throw Error(Errc::BadGenus, "bridge bound needs g >= 2, got " + std::to_string(g));
  // (|n| - 72 c g) / (72 c)
  const Rational value(sub(checked::abs(n), mul(mul(72, c), g)), mul(72, c));
  return std::max(value, Rational(0));
}

std::int64_t n_strong(std::int64_t chi_Q_nu) {
  const std::int64_t c = require_negative(chi_Q_nu);
  return std::max(mul(mul(4, 36), c), mul(mul(3, 72), c));
}

}  // namespace knotforge::bounds
