// knotforge command line: curve arithmetic, bound formulas, plumbing traces,
// family catalogs and the graph-claim verifier.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "knotforge/bound_engine.hpp"
#include "knotforge/error.hpp"
#include "knotforge/graph_verifier.hpp"
#include "knotforge/knot_catalog.hpp"
#include "knotforge/map_enumerator.hpp"
#include "knotforge/pants_complex.hpp"
#include "knotforge/plumbing.hpp"
#include "knotforge/torus_curve.hpp"

namespace kf = knotforge;

namespace {

struct TwistArgs {
  std::string kappa = "0,1";
  std::string alpha = "1,1";
  std::int64_t n = 1;
};

int run_twist(const TwistArgs& a) {
  const auto kappa = kf::parse_curve(a.kappa);
  const auto alpha = kf::parse_curve(a.alpha);
  const auto tau = kf::dehn_twist(kappa, alpha, a.n);
  const auto d = kf::product_disk_intersections(tau);
  std::cout << "tau = " << tau << "\n"
            << "distance(kappa, alpha) = " << kf::intersection(kappa, alpha) << "\n"
            << "distance(tau, kappa) = " << kf::intersection(tau, kappa) << "\n"
            << "distance(tau, alpha) = " << kf::intersection(tau, alpha) << "\n"
            << "exceptional = " << (kf::is_exceptional(tau) ? "yes" : "no") << "\n"
            << "product disks (mu, lambda, nu) = " << d.d_mu << " " << d.d_lambda << " " << d.d_nu << "\n";
  return 0;
}

struct BoundsArgs {
  std::int64_t chi = kf::bounds::recipes::GAMMA_DISK;
  std::optional<std::int64_t> i, n;
  std::int64_t genus = 2;
  std::optional<std::string> recipe;
  std::optional<std::int64_t> kappa_punctures;
  std::string type = "H";
  // threshold inputs
  bool threshold = false;
  kf::bounds::CatchingStats stats;
};

int run_bounds(BoundsArgs a) {
  namespace b = kf::bounds;
  if (a.recipe) {
    b::CatchingRecipe r;
    const std::string& name = *a.recipe;
    if (name == "gamma-disk") {
      r = b::recipes::gamma_disk();
    } else if (name.rfind("nu:", 0) == 0) {
      r = b::recipes::nu_case(kf::parse_curve(name.substr(3)));
    } else if (name.rfind("banded:", 0) == 0) {
      r = b::recipes::genus2_banded(kf::parse_curve(name.substr(7)), a.kappa_punctures,
                                    kf::catalog::parse_family(a.type));
    } else {
      throw kf::Error(kf::Errc::Parse, "recipe must be gamma-disk, nu:r,s or banded:t,v");
    }
    a.chi = b::catching_chi(r);
    std::cout << "recipe = " << r.name << " base " << r.base_chi << " tubes " << r.tube_pairs << " punctures "
              << r.punctures << "\n";
  }
  std::cout << "chi(Q) = " << a.chi << "\n"
            << "parallelism class bound = " << b::parallelism_class_bound(a.chi) << "\n";
  if (a.threshold) {
    a.stats.chi_Q = a.chi;
    std::cout << "threshold = " << b::threshold(a.stats) << "\n";
  }
  if (a.chi < 0) {
    std::cout << "n_strong = " << b::n_strong(a.chi) << "\n";
    if (a.i)
      std::cout << "disk hitting lower bound = " << b::disk_hitting_lower_bound(*a.i, a.chi) << "\n"
                << "annulus hitting lower bound = " << b::annulus_hitting_lower_bound(*a.i, a.chi) << "\n";
    if (a.n) std::cout << "bridge lower bound = " << b::bridge_lower_bound(*a.n, a.chi, a.genus) << "\n";
  } else if (a.i || a.n) {
    throw kf::Error(kf::Errc::BadChi, "hitting and bridge bounds need chi(Q) < 0");
  }
  return 0;
}

struct PlumbArgs {
  std::optional<int> eta, gamma;
  std::optional<std::string> replay;
  bool seams = false;
};

int run_plumb(const PlumbArgs& a) {
  namespace p = kf::plumbing;
  if (a.seams) {
    const auto& g = kf::pants::gamma2();
    std::cout << kf::pants::write_seams(g.curve, g.pd) << "# seamed level " << g.cert.level << "\n";
    return 0;
  }
  p::MarkedPair pair;
  if (a.replay) {
    std::ifstream in(*a.replay);
    if (!in) throw kf::Error(kf::Errc::Parse, "cannot read " + *a.replay);
    std::stringstream ss;
    ss << in.rdbuf();
    pair = p::replay(ss.str());
  } else if (a.eta) {
    pair = p::eta(*a.eta);
  } else if (a.gamma) {
    pair = p::gamma(*a.gamma);
  } else {
    throw kf::Error(kf::Errc::MissingPrecondition, "give --eta G, --gamma G or --replay FILE");
  }
  std::cout << p::serialize(pair) << "# genus " << pair.genus << " components " << pair.components << " flags "
            << p::describe(pair.flags) << "\n";
  return 0;
}

struct FamilyArgs {
  int genus = 2;
  std::string type = "H";
  std::string kappa = "2,1";
  std::string alpha = "1,1";
  std::string n_range = "0";
  std::string i_range = "0";
  std::optional<std::int64_t> chi_bridge;
  std::int64_t chi_nu = kf::bounds::recipes::GAMMA_DISK;
  std::int64_t chi_hit = kf::bounds::recipes::GAMMA_DISK;
  std::optional<std::string> witness;
  std::string format = "csv";
  std::optional<std::string> out;
  int threads = 1;
};

int run_family(const FamilyArgs& a) {
  namespace c = kf::catalog;
  c::FamilyRequest r;
  r.g = a.genus;
  r.family = c::parse_family(a.type);
  r.kappa = kf::parse_curve(a.kappa);
  r.alpha = kf::parse_curve(a.alpha);
  r.n_range = c::parse_range(a.n_range);
  r.i_range = c::parse_range(a.i_range);
  r.chi.bridge = a.chi_bridge;
  r.chi.nu = a.chi_nu;
  r.chi.hit = a.chi_hit;
  r.threads = a.threads;
  if (a.witness) {
    const auto range = c::parse_range(*a.witness);  // "i:upper"
    r.witness = c::HittingWitness{range.lo, range.hi};
  }
  const auto cat = c::generate_family(r);
  const std::string text = a.format == "txt" ? c::to_text(cat) : c::to_csv(cat);
  if (a.out) {
    std::ofstream f(*a.out, std::ios::binary);
    if (!f) throw kf::Error(kf::Errc::Parse, "cannot write " + *a.out);
    f << text;
  } else {
    std::cout << text;
  }
  std::size_t failed = 0;
  for (const auto& row : cat.rows) failed += !row.cert;
  if (failed) std::cerr << failed << " of " << cat.rows.size() << " rows errored\n";
  return cat.ok() ? 0 : 1;
}

struct VerifyArgs {
  kf::graphs::ParallelPOptions p;
  int class_budget = 8;
  bool skip_class = false;
  bool census = false;
  bool monogon_free = true;
};

int run_verify(VerifyArgs a) {
  namespace g = kf::graphs;
  if (a.census) {
    std::cout << "# map census v1 (" << (a.monogon_free ? "monogon-free" : "all") << ")\nV E maps\n";
    for (int v = 1; v <= a.p.v_max; ++v)
      for (int e = 1; e <= a.p.e_budget; ++e) {
        if (e < v - 1) continue;
        g::EnumerationOptions o;
        o.vertices = v;
        o.edges = e;
        o.monogon_free = a.monogon_free;
        o.limits = a.p.limits;
        g::MapEnumerator en(o);
        std::cout << v << " " << e << " " << en.for_each([](const g::MapView&) {}) << "\n";
      }
    return 0;
  }
  const auto report = g::verify_parallelP(a.p);
  std::cout << report.text();
  bool ok = report.ok();
  if (!a.skip_class) {
    g::ClassBoundOptions c;
    c.e_budget = a.class_budget;
    c.threads = a.p.threads;
    const auto cb = g::verify_parallel_class_bound(c);
    std::cout << cb.text();
    ok = ok && cb.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knotforge: curves, bounds, plumbing and certified knot catalogs"};
  app.set_config("--config", "", "key = value file with defaults; [section] per subcommand, flags override");
  app.require_subcommand(1);

  TwistArgs twist;
  auto* t = app.add_subcommand("twist", "Dehn twist of kappa along alpha, with distances");
  t->add_option("--kappa", twist.kappa, "curve p,q")->capture_default_str();
  t->add_option("--alpha", twist.alpha, "curve p,q")->capture_default_str();
  t->add_option("-n,--n", twist.n, "number of twists")->capture_default_str();
  t->configurable();

  BoundsArgs bounds;
  auto* b = app.add_subcommand("bounds", "bound formulas for a catching surface");
  b->add_option("--chi", bounds.chi, "chi(Q)")->capture_default_str();
  b->add_option("--recipe", bounds.recipe, "gamma-disk | nu:r,s | banded:t,v (overrides --chi)");
  b->add_option("--kappa-punctures", bounds.kappa_punctures, "K(kappa) punctures for the banded recipe");
  b->add_option("--type", bounds.type, "H or S")->capture_default_str();
  b->add_option("-i,--i", bounds.i, "twist index i");
  b->add_option("-n,--n", bounds.n, "annulus twist count n");
  b->add_option("--genus", bounds.genus, "genus for the bridge bound")->capture_default_str();
  b->add_flag("--threshold", bounds.threshold, "also evaluate the essential-surface threshold");
  b->add_option("--f-K", bounds.stats.f_K)->capture_default_str();
  b->add_option("--f-L", bounds.stats.f_L)->capture_default_str();
  b->add_option("--f-M", bounds.stats.f_M)->capture_default_str();
  b->add_option("--chi-F-hat", bounds.stats.chi_F_hat)->capture_default_str();
  b->add_option("--Delta-K", bounds.stats.Delta_K)->capture_default_str();
  b->add_option("--Delta-L", bounds.stats.Delta_L)->capture_default_str();
  b->add_option("--Delta-M", bounds.stats.Delta_M)->capture_default_str();
  b->configurable();

  PlumbArgs plumb;
  auto* p = app.add_subcommand("plumb", "eta_g / gamma_g construction traces");
  auto* eta = p->add_option("--eta", plumb.eta, "build eta_g");
  auto* gam = p->add_option("--gamma", plumb.gamma, "build gamma_g");
  auto* rep = p->add_option("--replay", plumb.replay, "replay a lineage file");
  auto* seams = p->add_flag("--seams", plumb.seams, "print the built-in genus-2 seam data");
  eta->excludes(gam)->excludes(rep)->excludes(seams);
  gam->excludes(rep)->excludes(seams);
  rep->excludes(seams);
  p->configurable();

  FamilyArgs family;
  auto* f = app.add_subcommand("family", "certified catalog of K(tau(kappa,alpha,n), g, *, i)");
  f->add_option("--genus", family.genus, "g >= 2")->capture_default_str();
  f->add_option("--type", family.type, "H or S")->capture_default_str();
  f->add_option("--kappa", family.kappa, "curve r,s")->capture_default_str();
  f->add_option("--alpha", family.alpha, "curve t,v")->capture_default_str();
  f->add_option("--n-range", family.n_range, "a, a:b or a:b:step")->capture_default_str();
  f->add_option("--i-range", family.i_range, "a, a:b or a:b:step")->capture_default_str();
  f->add_option("--chi-bridge", family.chi_bridge, "chi(Q) for the bridge bound (default: nu recipe when alpha = nu)");
  f->add_option("--chi-nu", family.chi_nu, "chi(Q) for N_strong")->capture_default_str();
  f->add_option("--chi-hit", family.chi_hit, "chi(Q) for the hitting bounds")->capture_default_str();
  f->add_option("--witness", family.witness, "i:upper, an upper bound on hbar_D at index i");
  f->add_option("--format", family.format, "csv or txt")->check(CLI::IsMember({"csv", "txt"}))->capture_default_str();
  f->add_option("--out", family.out, "output file (default stdout)");
  f->add_option("--threads", family.threads, "worker threads")->check(CLI::Range(1, 256))->capture_default_str();
  f->configurable();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-graphs", "exhaustive check of the parallel-edge and arc-class claims");
  v->add_option("--v-max", verify.p.v_max)->check(CLI::Range(1, 3))->capture_default_str();
  v->add_option("--e-budget", verify.p.e_budget)->check(CLI::Range(1, 12))->capture_default_str();
  v->add_option("--chi-min", verify.p.chi_min)->capture_default_str();
  v->add_option("--bordered-e-budget", verify.p.bordered_e_budget)->capture_default_str();
  v->add_flag("!--no-bordered", verify.p.bordered, "skip the marked-face pass");
  v->add_option("--threads", verify.p.threads)->check(CLI::Range(1, 256))->capture_default_str();
  v->add_option("--witnesses", verify.p.witness_cap, "tightness witnesses to list")->capture_default_str();
  v->add_option("--class-e-budget", verify.class_budget, "edge budget of the arc-class check")->capture_default_str();
  v->add_flag("--skip-class-bound", verify.skip_class);
  v->add_flag("--census", verify.census, "only count maps per (V, E)");
  v->add_flag("--monogon-free,!--with-monogons", verify.monogon_free, "monogon filter for --census");
  v->configurable();

  CLI11_PARSE(app, argc, argv);
  try {
    if (*t) return run_twist(twist);
    if (*b) return run_bounds(bounds);
    if (*p) return run_plumb(plumb);
    if (*f) return run_family(family);
    if (*v) return run_verify(verify);
  } catch (const kf::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
