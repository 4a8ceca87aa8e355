#include <sstream>

#include "doctest.h"
#include "knotforge/bound_engine.hpp"
#include "knotforge/error.hpp"
#include "knotforge/rational.hpp"

using namespace knotforge;
using namespace knotforge::bounds;

namespace {

CatchingStats stats(std::int64_t chi_Q, std::int64_t f_K, std::int64_t f_M, std::int64_t chi_F_hat,
                    std::int64_t Delta_K) {
  CatchingStats s;
  s.chi_Q = chi_Q;
  s.f_K = f_K;
  s.f_M = f_M;
  s.chi_F_hat = chi_F_hat;
  s.Delta_K = Delta_K;
  return s;
}

// Smallest integer h >= 0 with |i| / (36 c) - 1 <= h, found by scanning.
std::int64_t scan_disk(std::int64_t i, std::int64_t c) {
  std::int64_t h = 0;
  while (Rational(i < 0 ? -i : i, 36 * c) - Rational(1) > Rational(h)) ++h;
  return h;
}

std::int64_t scan_annulus(std::int64_t i, std::int64_t c) {
  std::int64_t h = 0;
  while (Rational(i < 0 ? -i : i, 72 * c) - Rational(2) > Rational(h)) ++h;
  return h;
}

}  // namespace

TEST_CASE("threshold examples") {
  CHECK(threshold(stats(-6, 0, 1, 2, 0)) == 432);
  CHECK(threshold(stats(0, 0, 1, 2, 0)) == 24);
  CHECK(threshold(stats(-6, 5, 2, 2, 0)) == 3024);
  CHECK(threshold_expression(5, 2, 1, 2, 2, -6) == 3024);
}

TEST_CASE("threshold is monotone in its arguments") {
  for (std::int64_t chi = -4; chi <= 1; ++chi)
    for (std::int64_t fK = 0; fK <= 4; ++fK)
      for (std::int64_t fM = 0; fM <= 4; ++fM)
        for (std::int64_t chiF = -4; chiF <= 2; ++chiF)
          for (std::int64_t DK = 0; DK <= 4; ++DK) {
            const auto base = threshold(stats(chi, fK, fM, chiF, DK));
            REQUIRE(threshold(stats(chi, fK + 1, fM, chiF, DK)) >= base);
            REQUIRE(threshold(stats(chi, fK, fM + 1, chiF, DK)) >= base);
            REQUIRE(threshold(stats(chi, fK, fM, chiF - 1, DK)) >= base);
            REQUIRE(threshold(stats(chi, fK, fM, chiF, DK + 1)) >= base);
            if (chi <= 0) REQUIRE(threshold(stats(chi - 1, fK, fM, chiF, DK)) >= base);
          }
}

TEST_CASE("threshold preconditions") {
  auto s = stats(-6, 0, 1, 2, 0);
  s.f_L = 0;
  CHECK_THROWS_AS(threshold(s), Error);
  s = stats(-6, -1, 1, 2, 0);
  CHECK_THROWS_AS(threshold(s), Error);
  s = stats(-6, 0, 1, 2, 0);
  s.Delta_L = -3;
  try {
    validate(s);
    FAIL("expected PreconditionUnmet");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::PreconditionUnmet);
  }
  CHECK_THROWS_AS(threshold(stats(INT64_MIN / 2, 0, 1, 2, 0)), Error);
}

TEST_CASE("class bound and parallel-edge thresholds") {
  CHECK(parallelism_class_bound(-6) == 18);
  CHECK(parallelism_class_bound(0) == 1);
  CHECK(parallelism_class_bound(1) == 1);
  CHECK(parallel_edges_threshold(1, 2) == 3);
  CHECK(parallel_edges_threshold(2, 0) == 6);
  CHECK(parallel_edges_threshold(1, -2) == 9);
  CHECK_THROWS_AS(parallel_edges_threshold(0, 2), Error);
}

TEST_CASE("catching surfaces") {
  CHECK(catching_chi(recipes::gamma_disk()) == -6);
  CHECK(catching_chi(recipes::gamma_disk()) == recipes::GAMMA_DISK);
  CHECK(catching_chi({"disk", 1, 0, 0, 0}) == 1);
  for (const auto& kappa : {curves::lambda, curves::mu, TorusCurve::normalize(2, 1), TorusCurve::normalize(5, -3)}) {
    const std::int64_t k = intersection(kappa, curves::nu);
    CHECK(catching_chi(recipes::nu_case(kappa)) == -2 - k);
  }
  CHECK(catching_chi(recipes::nu_case(TorusCurve::normalize(2, 1))) == -3);
  CHECK_THROWS_AS(catching_chi({"bad", 1, -1, 0, 0}), Error);

  // banded genus-2 surface: alpha = (2,1) meets mu once and lambda twice
  const auto banded = recipes::genus2_banded(TorusCurve::normalize(2, 1), 4);
  CHECK(catching_chi(banded) == -3 - 2 * 3 - 4);
  CHECK(banded.band_copies_per_twist == 4);
  CHECK(recipes::genus2_banded(TorusCurve::normalize(2, 1), 0, HandlebodyType::S).band_copies_per_twist == 8);
  CHECK_THROWS_AS(recipes::genus2_banded(TorusCurve::normalize(2, 1), std::nullopt), Error);
  CHECK_THROWS_AS(recipes::genus2_banded(curves::nu, 1), Error);
  CHECK(recipes::band_copies(HandlebodyType::H, false, -3) == 96);
  CHECK(recipes::band_copies(HandlebodyType::S, false, 2) == 128);
}

TEST_CASE("hitting bound examples") {
  CHECK(disk_hitting_lower_bound(1000, -6) == 4);
  CHECK(disk_hitting_lower_bound(0, -3) == 0);
  CHECK(disk_hitting_lower_bound(216, -6) == 0);
  CHECK(disk_hitting_lower_bound(-1000, -6) == 4);
  CHECK(annulus_hitting_lower_bound(2000, -6) == 3);
  CHECK(annulus_hitting_lower_bound(0, -6) == 0);
  CHECK(annulus_hitting_lower_bound(432, -6) == 0);
  CHECK_THROWS_AS(disk_hitting_lower_bound(5, 0), Error);
  CHECK_THROWS_AS(annulus_hitting_lower_bound(5, 2), Error);
  try {
    disk_hitting_lower_bound(5, 1);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::BadChi);
  }
}

TEST_CASE("hitting bounds agree with an exact-fraction scan") {
  for (std::int64_t c = 1; c <= 7; ++c)
    for (std::int64_t i = -3000; i <= 3000; i += 7) {
      REQUIRE(disk_hitting_lower_bound(i, -c) == scan_disk(i, c));
      REQUIRE(annulus_hitting_lower_bound(i, -c) == scan_annulus(i, c));
    }
}

TEST_CASE("hitting bounds are monotone in |i| and unbounded") {
  std::int64_t prev_d = 0, prev_a = 0;
  for (std::int64_t i = 0; i <= 20000; ++i) {
    const auto d = disk_hitting_lower_bound(i, -6), a = annulus_hitting_lower_bound(i, -6);
    REQUIRE(d >= prev_d);
    REQUIRE(a >= prev_a);
    prev_d = d;
    prev_a = a;
  }
  CHECK(prev_d > 50);
  CHECK(disk_hitting_lower_bound(1'000'000'000, -6) > 4'000'000);
}

TEST_CASE("bridge bound") {
  CHECK(bridge_lower_bound(1296, -6, 2) == Rational(1));
  CHECK(bridge_lower_bound(0, -6, 2) == Rational(0));
  CHECK(bridge_lower_bound(4320, -6, 2) == Rational(8));
  CHECK(bridge_lower_bound(-4320, -6, 2) == Rational(8));
  CHECK(bridge_lower_bound(800, -6, 2) == Rational(0));
  CHECK(bridge_lower_bound(1000, -6, 2) == Rational(17, 54));
  CHECK(bridge_lower_bound(1300, -6, 2) == Rational(1300 - 864, 432));
  CHECK_THROWS_AS(bridge_lower_bound(100, -6, 1), Error);
  CHECK_THROWS_AS(bridge_lower_bound(100, 0, 2), Error);
  // inversion: bridge >= N once |n| >= 2 (N + g) 36 |chi|
  for (std::int64_t N = 1; N <= 10; ++N)
    for (std::int64_t g = 2; g <= 4; ++g) {
      const std::int64_t n0 = 2 * (N + g) * 36 * 6;
      CHECK(bridge_lower_bound(n0, -6, g) == Rational(N));
      CHECK(bridge_lower_bound(n0 - 1, -6, g) < Rational(N));
    }
}

TEST_CASE("n_strong matches the scan oracle") {
  auto scan = [](std::int64_t c) {
    // smallest T such that every |i| > T has |i|/(36c) - 1 > 3 and |i|/(72c) - 2 > 1
    std::int64_t t = 0;
    for (std::int64_t i = 1; i <= 10000 * c; ++i) {
      const bool ok = Rational(i, 36 * c) - Rational(1) > Rational(3) && Rational(i, 72 * c) - Rational(2) > Rational(1);
      if (!ok) t = i;
    }
    return t;
  };
  CHECK(n_strong(-6) == 1296);
  CHECK(n_strong(-1) == 216);
  CHECK(n_strong(-3) == 648);
  for (std::int64_t c = 1; c <= 8; ++c) CHECK(n_strong(-c) == scan(c));
  CHECK_THROWS_AS(n_strong(0), Error);
}

TEST_CASE("rational arithmetic") {
  const Rational a(6, -4);
  CHECK(a.num() == -3);
  CHECK(a.den() == 2);
  CHECK(a.floor() == -2);
  CHECK(a.ceil() == -1);
  CHECK(a.str() == "-3/2");
  CHECK(Rational(8, 4).str() == "2");
  CHECK(a + Rational(3, 2) == Rational(0));
  CHECK(a * Rational(2, 3) == Rational(-1));
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
  std::ostringstream os;
  os << Rational(7, 2);
  CHECK(os.str() == "7/2");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  CHECK_THROWS_AS(Rational(INT64_MAX) + Rational(1), Error);
}
