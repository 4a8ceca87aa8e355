#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "knotforge/bound_engine.hpp"
#include "knotforge/rational.hpp"
#include "knotforge/torus_curve.hpp"

namespace knotforge::catalog {

using Family = bounds::HandlebodyType;

// The knot K(tau(kappa, alpha, n), g, family, i).
struct KnotSpec {
  int g = 2;
  Family family = Family::H;
  TorusCurve kappa = curves::lambda;
  TorusCurve alpha = curves::nu;
  std::int64_t n = 0;
  std::int64_t i = 0;
};

// Throws Errc::BadGenus (g < 2) or Errc::PreconditionUnmet (kappa == alpha).
void check_spec(const KnotSpec& spec);

// ((n+1) r - n s, n r - (n-1) s), the Seifert pair of the alpha = nu twist of
// kappa = (r, s). Throws Errc::NonPrimitiveBase unless gcd(|r|, |s|) = 1.
std::pair<std::int64_t, std::int64_t> seifert_invariants(std::int64_t r, std::int64_t s, std::int64_t n);

// |p| + |q|: maxima of a standard bridge presentation of tau in P x I. Not a
// certified bound.
std::int64_t bridge_upper_heuristic(const TorusCurve& tau);

// A value or the reason it is not certified; rendered "n/a(reason)".
template <class T>
struct Certified {
  std::optional<T> value;
  std::string reason;

  static Certified na(std::string why) { return {std::nullopt, std::move(why)}; }
  bool has_value() const { return value.has_value(); }
};

struct ExteriorFlags {
  bool irreducible = false;
  bool boundary_irreducible = false;
  bool atoroidal = false;
  bool anannular = false;
  bool all() const { return irreducible && boundary_irreducible && atoroidal && anannular; }
  friend bool operator==(const ExteriorFlags&, const ExteriorFlags&) = default;
};

// Catching-surface Euler characteristics. `hit` feeds the hitting-number
// bounds, `nu` the strong-type threshold, `bridge` the bridge bound; when
// `bridge` is empty and alpha = nu it comes from the nu-case recipe.
struct ChiInputs {
  std::int64_t hit = bounds::recipes::GAMMA_DISK;
  std::int64_t nu = bounds::recipes::GAMMA_DISK;
  std::optional<std::int64_t> bridge;
};

struct Certificate {
  KnotSpec spec;
  TorusCurve tau = curves::lambda;
  bool exceptional = false;
  std::optional<std::pair<std::int64_t, std::int64_t>> seifert;
  std::string surgery;
  bool strong = false;
  Certified<std::int64_t> hbar_D_lower;
  Certified<std::int64_t> hbar_A_lower;
  Certified<Rational> bridge_lower;
  bool bridge_i_uniform = true;
  std::int64_t bridge_upper_heuristic = 0;
  ExteriorFlags exterior;
  bool unique_surgery = false;
  std::int64_t chi_bridge = 0;  // 0 when no bridge chi was available
};

// Throws Errc::BadChi for a non-negative chi, the check_spec errors, and
// Errc::Inconsistent if the certified bridge bound exceeds the heuristic
// upper bound.
Certificate build_certificate(const KnotSpec& spec, const ChiInputs& chi = {});
Certificate build_certificate(const KnotSpec& spec, std::int64_t chi_Q_bridge, std::int64_t chi_Q_nu);

// Inclusive lo..hi in steps of `step` (> 0); empty when lo > hi.
struct IntRange {
  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::int64_t step = 1;
  std::vector<std::int64_t> values() const;
};

// "a", "a:b" or "a:b:step". Throws Errc::Parse.
IntRange parse_range(const std::string& text);

// Upper bound on hbar_D at one index, e.g. from an explicit disk; rows whose
// certified lower bound exceeds it are certified distinct from that knot.
struct HittingWitness {
  std::int64_t i = 0;
  std::int64_t hbar_D_upper = 0;
};

struct FamilyRequest {
  int g = 2;
  Family family = Family::H;
  TorusCurve kappa = curves::lambda;
  TorusCurve alpha = curves::nu;
  IntRange n_range;
  IntRange i_range;
  ChiInputs chi;
  std::optional<HittingWitness> witness;
  int threads = 1;
};

struct Row {
  KnotSpec spec;
  std::optional<Certificate> cert;
  std::string error;  // set iff cert is empty
  Certified<bool> distinct_from_witness;
};

struct Catalog {
  FamilyRequest request;
  std::vector<Row> rows;  // sorted by (n, i)
  std::string distinctness;  // family-level statement
  bool ok() const;           // no row errored
};

Catalog generate_family(const FamilyRequest& request);

// Versioned output; identical catalogs give byte-identical text.
std::string to_csv(const Catalog& catalog);
std::string to_text(const Catalog& catalog);

std::string to_string(Family f);
Family parse_family(const std::string& text);  // "H" or "S"; throws Errc::Parse

}  // namespace knotforge::catalog
