#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "knotforge/rational.hpp"
#include "knotforge/torus_curve.hpp"

namespace knotforge::bounds {

// Boundary/Euler-characteristic bookkeeping of a catching surface Q against
// an essential surface F. Primed quantities (max(x, 1)) are derived on use.
struct CatchingStats {
  std::int64_t chi_Q = -1;
  std::int64_t f_K = 0;
  std::int64_t f_L = 1;
  std::int64_t f_M = 1;
  std::int64_t chi_F_hat = 2;
  std::int64_t Delta_K = 0;
  std::int64_t Delta_L = 0;
  std::int64_t Delta_M = 0;
};

// Throws Errc::PreconditionUnmet unless f_L >= 1 and all counts are >= 0.
void validate(const CatchingStats& stats);

// 6 * fpM * max(-6 chi_Q, 2) * (fpK * DpK + f_M - chi_F_hat + 2), with the
// primed arguments taken as given. Exposed so that callers can invert the
// expression in f'_K directly.
std::int64_t threshold_expression(std::int64_t fpK, std::int64_t fpM, std::int64_t DpK, std::int64_t f_M,
                                  std::int64_t chi_F_hat, std::int64_t chi_Q);

// threshold_expression on the primed stats. Delta_L above this value forces
// a Moebius band or spanning annulus.
std::int64_t threshold(const CatchingStats& stats);

// max(-3 chi_Q, 1): bound on parallelism classes of nontrivial edges.
std::int64_t parallelism_class_bound(std::int64_t chi_Q);

// 3 V max(1 - chi_S, 1). A monogon-free graph with more edges (or at least
// this many, when chi_S > 0 or S has boundary) has parallel edges.
std::int64_t parallel_edges_threshold(std::int64_t V, std::int64_t chi_S);

struct CatchingRecipe {
  std::string name;
  std::int64_t base_chi = 1;
  std::int64_t tube_pairs = 0;
  std::int64_t punctures = 0;
  // Copies of the separating product disk per unit twist (0 if not used);
  // bookkeeping for algebraic-intersection checks only, never enters chi.
  std::int64_t band_copies_per_twist = 0;
};

std::int64_t catching_chi(const CatchingRecipe& recipe);

enum class HandlebodyType { H, S };

namespace recipes {

inline constexpr std::int64_t GAMMA_DISK = -6;

// Disk meeting gamma_g seven times, once algebraically: 3 tubes, 1 puncture.
CatchingRecipe gamma_disk();

// alpha = nu: pair of pants, one puncture from L_-, one per point of K(kappa)
// meeting D_nu.
CatchingRecipe nu_case(const TorusCurve& kappa);

// g = 2, alpha not in {mu, lambda, nu}: disk plus four bands (chi -3); each of
// L_+ and L_- meets it Delta(alpha, mu) + Delta(alpha, lambda) times, paired
// off by tubes down to the algebraic count. The number of points of K(kappa)
// on the surface is not determined by the slopes alone, so it is a required
// input (Errc::PreconditionUnmet when absent).
CatchingRecipe genus2_banded(const TorusCurve& alpha, std::optional<std::int64_t> kappa_punctures,
                             HandlebodyType type = HandlebodyType::H);

// t = 32i (H) or 64i (S) for the disk D, t = 4 (H) or 8 (S) for the genus-2
// banded surface.
std::int64_t band_copies(HandlebodyType type, bool genus2_banded, std::int64_t i);

}  // namespace recipes

// max(ceil(|i| / (36 |chi_Q|)) - 1, 0). Throws Errc::BadChi if chi_Q >= 0.
std::int64_t disk_hitting_lower_bound(std::int64_t i, std::int64_t chi_Q);

// max(ceil(|i| / (72 |chi_Q|)) - 2, 0). Throws Errc::BadChi if chi_Q >= 0.
std::int64_t annulus_hitting_lower_bound(std::int64_t i, std::int64_t chi_Q);

// max((|n| / (36 |chi_Q|) - 2g) / 2, 0). Throws BadChi / BadGenus (g < 2).
Rational bridge_lower_bound(std::int64_t n, std::int64_t chi_Q, std::int64_t g);

// 216 |chi_Q|: |i| above it gives hbar_D > 3 and hbar_A > 1.
std::int64_t n_strong(std::int64_t chi_Q_nu);

}  // namespace knotforge::bounds
