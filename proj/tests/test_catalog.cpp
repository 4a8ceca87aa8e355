#include <numeric>

#include "doctest.h"
#include "knotforge/error.hpp"
#include "knotforge/knot_catalog.hpp"

using namespace knotforge;
using namespace knotforge::catalog;

namespace {

TorusCurve tc(std::int64_t p, std::int64_t q) { return TorusCurve::normalize(p, q); }

KnotSpec spec(int g, Family f, TorusCurve kappa, TorusCurve alpha, std::int64_t n, std::int64_t i) {
  return {g, f, kappa, alpha, n, i};
}

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error thrown");
  return Errc::Parse;
}

}  // namespace

TEST_CASE("seifert invariants") {
  CHECK(seifert_invariants(2, 1, 1) == std::pair<std::int64_t, std::int64_t>{3, 2});
  CHECK(seifert_invariants(1, 0, 0) == std::pair<std::int64_t, std::int64_t>{1, 0});
  CHECK(seifert_invariants(3, 2, 2) == std::pair<std::int64_t, std::int64_t>{5, 4});
  CHECK(code_of([] { seifert_invariants(4, 2, 1); }) == Errc::NonPrimitiveBase);
}

TEST_CASE("seifert invariants stay coprime") {
  for (std::int64_t r = -30; r <= 30; ++r)
    for (std::int64_t s = -30; s <= 30; ++s) {
      if (std::gcd(r, s) != 1) continue;
      for (std::int64_t n = -30; n <= 30; ++n) {
        const auto [p, q] = seifert_invariants(r, s, n);
        REQUIRE(std::gcd(p, q) == 1);
      }
    }
}

TEST_CASE("bridge upper heuristic") {
  CHECK(bridge_upper_heuristic(tc(1, 1)) == 2);
  CHECK(bridge_upper_heuristic(tc(1, 0)) == 1);
  CHECK(bridge_upper_heuristic(tc(5, 3)) == 8);
  CHECK(bridge_upper_heuristic(tc(5, -3)) == 8);
}

TEST_CASE("certificate examples") {
  for (std::int64_t n : {1, 5, 40}) {
    const auto c = build_certificate(spec(2, Family::H, curves::lambda, curves::nu, n, 0));
    CHECK(c.tau == tc(n, n + 1));
  }
  const auto zero = build_certificate(spec(2, Family::H, tc(2, 1), curves::nu, 0, 5000));
  CHECK(zero.tau == tc(2, 1));
  CHECK((!zero.bridge_lower.has_value() || *zero.bridge_lower.value == Rational(0)));

  const auto s = build_certificate(spec(2, Family::S, tc(2, 1), curves::nu, 1, 2000));
  CHECK(s.tau == tc(3, 2));
  REQUIRE(s.seifert.has_value());
  CHECK(*s.seifert == std::pair<std::int64_t, std::int64_t>{3, 2});
  CHECK(*s.seifert == seifert_invariants(2, 1, 1));
  CHECK(s.strong);
  CHECK_FALSE(s.exceptional);
  CHECK(s.exterior.all());
  CHECK(s.unique_surgery);
  CHECK(s.hbar_D_lower.value == 9);   // ceil(2000/216) - 1
  CHECK(s.hbar_A_lower.value == 3);   // ceil(2000/432) - 2
  CHECK(s.chi_bridge == -3);          // nu case: pants, 1 + 1 punctures

  const auto weak = build_certificate(spec(2, Family::H, tc(2, 1), curves::nu, 1, 1296));
  CHECK_FALSE(weak.strong);
  CHECK_FALSE(weak.bridge_lower.has_value());
  CHECK_FALSE(weak.exterior.irreducible);
  CHECK_FALSE(weak.unique_surgery);
  CHECK_FALSE(weak.seifert.has_value());
}

TEST_CASE("certificate field rules") {
  // exceptional tau: strong, but not anannular
  const auto ex = build_certificate(spec(2, Family::H, curves::mu, curves::lambda, 1, 5000));
  CHECK(ex.tau == curves::nu);
  CHECK(ex.exceptional);
  CHECK(ex.strong);
  CHECK_FALSE(ex.exterior.anannular);
  CHECK_FALSE(ex.unique_surgery);
  CHECK_FALSE(ex.bridge_lower.has_value());  // alpha = lambda
  CHECK(ex.bridge_lower.reason.find("alpha") != std::string::npos);

  // tau in {mu, lambda}: no hitting bounds
  const auto flat = build_certificate(spec(2, Family::H, curves::mu, curves::nu, 0, 5000));
  CHECK_FALSE(flat.hbar_D_lower.has_value());
  CHECK_FALSE(flat.hbar_A_lower.has_value());

  // alpha outside {mu, lambda, nu} with no bridge chi supplied
  const auto other = build_certificate(spec(3, Family::H, curves::lambda, tc(2, 1), 3, 5000));
  CHECK_FALSE(other.bridge_lower.has_value());
  CHECK_FALSE(other.bridge_i_uniform);
  ChiInputs chi;
  chi.bridge = -20;
  const auto supplied = build_certificate(spec(3, Family::H, curves::lambda, tc(2, 1), 3, 5000), chi);
  REQUIRE(supplied.bridge_lower.has_value());
  CHECK(*supplied.bridge_lower.value == Rational(0));

  CHECK(code_of([] { build_certificate(spec(1, Family::H, curves::lambda, curves::nu, 1, 1)); }) == Errc::BadGenus);
  CHECK(code_of([] { build_certificate(spec(2, Family::H, curves::nu, curves::nu, 1, 1)); }) ==
        Errc::PreconditionUnmet);
  CHECK(code_of([] { build_certificate(spec(2, Family::H, curves::lambda, curves::nu, 1, 1), -6, 0); }) ==
        Errc::BadChi);
  CHECK(code_of([] { build_certificate(spec(2, Family::H, curves::lambda, curves::nu, 1, 1), 0, -6); }) ==
        Errc::BadChi);
  // a negative twist that unwinds a long kappa down to mu: |p| + |q| = 1 but
  // the |n|-driven lower bound is 71/27, so the guard rejects the row
  CHECK(code_of([] { build_certificate(spec(2, Family::H, tc(1001, 1000), curves::nu, -1000, 5000)); }) ==
        Errc::Inconsistent);
}

TEST_CASE("structural invariants over a KnotSpec grid") {
  int checked = 0;
  for (std::int64_t r = 0; r <= 4; ++r)
    for (std::int64_t s = -4; s <= 4; ++s)
      for (std::int64_t t = 0; t <= 3; ++t)
        for (std::int64_t v = -3; v <= 3; ++v) {
          if (std::gcd(r, s) != 1 || std::gcd(t, v) != 1 || (r == 0 && s != 1) || (t == 0 && v != 1)) continue;
          if (tc(r, s) == tc(t, v)) continue;
          for (std::int64_t n : {-3, 0, 2, 7})
            for (std::int64_t i : {0, 1296, 1297, -40000})
              for (Family f : {Family::H, Family::S}) {
                const auto c = build_certificate(spec(2, f, tc(r, s), tc(t, v), n, i));
                ++checked;
                REQUIRE(c.seifert.has_value() == (f == Family::S));
                if (c.seifert) REQUIRE(std::gcd(c.seifert->first, c.seifert->second) == 1);
                if (c.exterior.all()) REQUIRE((c.strong && !c.exceptional));
                REQUIRE(c.unique_surgery == c.exterior.all());
                if (c.bridge_lower.value) REQUIRE(*c.bridge_lower.value <= Rational(c.bridge_upper_heuristic));
                REQUIRE(c.tau == dehn_twist(tc(r, s), tc(t, v), n));
              }
        }
  CHECK(checked > 1000);
}

TEST_CASE("ranges") {
  CHECK(parse_range("5").values() == std::vector<std::int64_t>{5});
  CHECK(parse_range("1:4").values() == std::vector<std::int64_t>{1, 2, 3, 4});
  CHECK(parse_range("-4:4:4").values() == std::vector<std::int64_t>{-4, 0, 4});
  CHECK(parse_range("4:1").values().empty());
  for (const char* bad : {"", "a", "1:", "1:2:0", "1:2:3:4", "1::2", "1.5"})
    CHECK(code_of([&] { parse_range(bad); }) == Errc::Parse);
  CHECK(code_of([] { IntRange{0, INT64_MAX, 1}.values(); }) == Errc::LimitExceeded);
}

TEST_CASE("family rows match the twist family") {
  for (std::int64_t k = 1; k <= 4; ++k) {
    FamilyRequest req;
    req.kappa = curves::lambda;
    req.alpha = tc(1, k);
    req.n_range = {1, 12, 1};
    req.i_range = {0, 0, 1};
    const auto cat = generate_family(req);
    REQUIRE(cat.rows.size() == 12);
    for (const auto& row : cat.rows) {
      REQUIRE(row.cert);
      CHECK(row.cert->tau == tc(row.spec.n, k * row.spec.n + 1));
      CHECK(row.cert->tau == dehn_twist(curves::lambda, tc(1, k), row.spec.n));
    }
  }
}

TEST_CASE("family catalog ordering, distinctness and witness") {
  FamilyRequest req;
  req.kappa = tc(2, 1);
  req.alpha = curves::nu;
  req.n_range = {4752, 4754, 1};
  req.i_range = {2000, 12000, 5000};
  req.chi.bridge = -6;
  req.witness = HittingWitness{2000, 20};
  const auto cat = generate_family(req);
  CHECK(cat.ok());
  REQUIRE(cat.rows.size() == 9);
  for (std::size_t k = 1; k < cat.rows.size(); ++k)
    CHECK(std::pair(cat.rows[k - 1].spec.n, cat.rows[k - 1].spec.i) < std::pair(cat.rows[k].spec.n, cat.rows[k].spec.i));
  CHECK(cat.distinctness == "hbar_D lower bound unbounded in |i|");
  for (const auto& row : cat.rows) {
    CHECK(*row.cert->bridge_lower.value >= Rational(5));
    if (row.spec.i == 2000)
      CHECK(row.distinct_from_witness.reason == "witness index");
    else
      CHECK(row.distinct_from_witness.value == true);  // lower bounds 32 and 55 exceed 20
  }
  req.witness = HittingWitness{2000, 40};
  const auto strict = generate_family(req);
  CHECK_FALSE(strict.rows[1].distinct_from_witness.has_value());  // i = 7000: 32 <= 40
  CHECK(strict.rows[2].distinct_from_witness.value == true);      // i = 12000: 55 > 40
}

TEST_CASE("empty and errored catalogs") {
  FamilyRequest req;
  req.kappa = tc(2, 1);
  req.n_range = {1, 3, 1};
  req.i_range = {5, 4, 1};
  const auto empty = generate_family(req);
  CHECK(empty.rows.empty());
  CHECK(empty.ok());
  CHECK(empty.distinctness == "n/a(empty catalog)");

  req.i_range = {2000, 2000, 1};
  req.n_range = {1, INT64_MAX / 2, INT64_MAX / 2 - 1};  // the second twist overflows
  const auto cat = generate_family(req);
  REQUIRE(cat.rows.size() == 2);
  CHECK(cat.rows[0].cert.has_value());
  CHECK_FALSE(cat.rows[1].cert.has_value());
  CHECK(cat.rows[1].error.find("Overflow") != std::string::npos);
  CHECK_FALSE(cat.ok());
  const auto csv = to_csv(cat);
  CHECK(csv.find("n/a(error)") != std::string::npos);

  FamilyRequest flat;
  flat.kappa = curves::mu;
  flat.alpha = curves::lambda;
  flat.n_range = {0, 2, 1};
  flat.i_range = {1, 1, 1};
  CHECK(generate_family(flat).distinctness.rfind("n/a(", 0) == 0);
}

TEST_CASE("catalog output is deterministic across thread counts") {
  FamilyRequest req;
  req.family = Family::S;
  req.kappa = tc(3, 1);
  req.alpha = curves::nu;
  req.n_range = {0, 60, 3};
  req.i_range = {-3000, 3000, 250};
  const auto one = generate_family(req);
  req.threads = 4;
  const auto four = generate_family(req);
  CHECK(to_csv(one) == to_csv(four));
  CHECK(to_csv(four) == to_csv(generate_family(req)));
  CHECK(to_text(four) == to_text(generate_family(req)));
}

TEST_CASE("csv and text layout") {
  FamilyRequest req;
  req.family = Family::S;
  req.kappa = tc(2, 1);
  req.n_range = {1, 1, 1};
  req.i_range = {2000, 2000, 1};
  const auto cat = generate_family(req);
  const auto csv = to_csv(cat);
  CHECK(csv.rfind("# knotforge-catalog v1 format=csv\n# request ", 0) == 0);
  CHECK(csv.find("\ng,type,kappa,alpha,n,i,tau,exceptional,seifert,surgery,strong,hbar_D_lower,hbar_A_lower,"
                 "bridge_lower,bridge_uniformity,bridge_upper_heuristic,irreducible,boundary_irreducible,atoroidal,"
                 "anannular,unique_surgery,distinct_from_witness,error\n") != std::string::npos);
  CHECK(csv.find("\"(3,2)\"") != std::string::npos);
  CHECK(csv.find("5 (heuristic)") != std::string::npos);
  CHECK(csv.find(",,") == std::string::npos);  // never blank
  const auto txt = to_text(cat);
  CHECK(txt.rfind("# knotforge-catalog v1 format=txt\n", 0) == 0);
  CHECK(txt.find("row n=1 i=2000\n") != std::string::npos);
  CHECK(txt.find("  seifert = (3,2)\n") != std::string::npos);
  CHECK(parse_family("S") == Family::S);
  CHECK(code_of([] { parse_family("X"); }) == Errc::Parse);
}
