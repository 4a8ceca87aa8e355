#include "knotforge/knot_catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <thread>

#include "knotforge/error.hpp"

namespace knotforge::catalog {

namespace {

bool mu_or_lambda(const TorusCurve& c) { return c == curves::mu || c == curves::lambda; }

void require_negative(std::int64_t chi, const char* what) {
  if (chi >= 0) throw Error(Errc::BadChi, std::string(what) + " must be negative, got " + std::to_string(chi));
}

constexpr __int128 kMaxRangeSize = 10'000'000;

std::string na(const std::string& reason) { return "n/a(" + reason + ")"; }

template <class T>
std::string render(const Certified<T>& c) {
  if (!c.value) return na(c.reason);
  if constexpr (std::is_same_v<T, bool>)
    return *c.value ? "yes" : "no";
  else if constexpr (std::is_same_v<T, Rational>)
    return c.value->str();
  else
    return std::to_string(*c.value);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string range_str(const IntRange& r) {
  return std::to_string(r.lo) + ":" + std::to_string(r.hi) + ":" + std::to_string(r.step);
}

std::string request_line(const FamilyRequest& r) {
  std::ostringstream os;
  os << "g=" << r.g << " type=" << to_string(r.family) << " kappa=" << r.kappa << " alpha=" << r.alpha
     << " n=" << range_str(r.n_range) << " i=" << range_str(r.i_range) << " chi_hit=" << r.chi.hit
     << " chi_nu=" << r.chi.nu << " chi_bridge=" << (r.chi.bridge ? std::to_string(*r.chi.bridge) : "auto");
  if (r.witness) os << " witness=" << r.witness->i << ":" << r.witness->hbar_D_upper;
  return os.str();
}

// Column name and rendered value for one row; errored rows render every
// certificate field as n/a(error).
std::vector<std::pair<std::string, std::string>> fields(const Row& row) {
  const KnotSpec& s = row.spec;
  std::vector<std::pair<std::string, std::string>> f{
      {"g", std::to_string(s.g)},         {"type", to_string(s.family)}, {"kappa", s.kappa.str()},
      {"alpha", s.alpha.str()},           {"n", std::to_string(s.n)},    {"i", std::to_string(s.i)},
  };
  static const char* cert_cols[] = {"tau",
                                    "exceptional",
                                    "seifert",
                                    "surgery",
                                    "strong",
                                    "hbar_D_lower",
                                    "hbar_A_lower",
                                    "bridge_lower",
                                    "bridge_uniformity",
                                    "bridge_upper_heuristic",
                                    "irreducible",
                                    "boundary_irreducible",
                                    "atoroidal",
                                    "anannular",
                                    "unique_surgery",
                                    "distinct_from_witness"};
  if (!row.cert) {
    for (const char* c : cert_cols) f.push_back({c, na("error")});
    f.push_back({"error", row.error});
    return f;
  }
  const Certificate& c = *row.cert;
  std::string seifert = na("handlebody type");
  if (c.seifert) seifert = "(" + std::to_string(c.seifert->first) + "," + std::to_string(c.seifert->second) + ")";
  const std::vector<std::string> values{c.tau.str(),
                                        yes_no(c.exceptional),
                                        seifert,
                                        c.surgery,
                                        yes_no(c.strong),
                                        render(c.hbar_D_lower),
                                        render(c.hbar_A_lower),
                                        render(c.bridge_lower),
                                        c.bridge_lower.value ? (c.bridge_i_uniform ? "i-uniform" : "not-i-uniform")
                                                             : na("no bridge bound"),
                                        std::to_string(c.bridge_upper_heuristic) + " (heuristic)",
                                        yes_no(c.exterior.irreducible),
                                        yes_no(c.exterior.boundary_irreducible),
                                        yes_no(c.exterior.atoroidal),
                                        yes_no(c.exterior.anannular),
                                        yes_no(c.unique_surgery),
                                        render(row.distinct_from_witness)};
  for (std::size_t k = 0; k < values.size(); ++k) f.push_back({cert_cols[k], values[k]});
  f.push_back({"error", "none"});
  return f;
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

}  // namespace

void check_spec(const KnotSpec& spec) {
  if (spec.g < 2) throw Error(Errc::BadGenus, "family needs g >= 2, got " + std::to_string(spec.g));
  if (spec.kappa == spec.alpha) throw Error(Errc::PreconditionUnmet, "kappa and alpha must differ");
}

std::pair<std::int64_t, std::int64_t> seifert_invariants(std::int64_t r, std::int64_t s, std::int64_t n) {
  if (std::gcd(checked::abs(r), checked::abs(s)) != 1)
    throw Error(Errc::NonPrimitiveBase, "(" + std::to_string(r) + "," + std::to_string(s) + ") is not primitive");
  using namespace checked;
  return {sub(mul(add(n, 1), r), mul(n, s)), sub(mul(n, r), mul(sub(n, 1), s))};
}

std::int64_t bridge_upper_heuristic(const TorusCurve& tau) {
  return checked::add(checked::abs(tau.p()), checked::abs(tau.q()));
}

Certificate build_certificate(const KnotSpec& spec, const ChiInputs& chi) {
  check_spec(spec);
  require_negative(chi.hit, "hitting chi");
  require_negative(chi.nu, "nu chi");
  if (chi.bridge) require_negative(*chi.bridge, "bridge chi");

  Certificate c;
  c.spec = spec;
  c.tau = dehn_twist(spec.kappa, spec.alpha, spec.n);
  c.exceptional = is_exceptional(c.tau);
  if (spec.family == Family::S) {
    c.seifert = {c.tau.p(), c.tau.q()};
    c.surgery = "D(" + std::to_string(c.tau.p()) + "," + std::to_string(c.tau.q()) + ")-Seifert + " +
                std::to_string(spec.g - 1) + " 1-handles";
  } else {
    c.surgery = "handlebody";
  }
  c.strong = checked::abs(spec.i) > bounds::n_strong(chi.nu);

  if (mu_or_lambda(c.tau)) {
    c.hbar_D_lower = Certified<std::int64_t>::na("tau parallel to mu or lambda");
    c.hbar_A_lower = Certified<std::int64_t>::na("tau parallel to mu or lambda");
  } else {
    c.hbar_D_lower.value = bounds::disk_hitting_lower_bound(spec.i, chi.hit);
    c.hbar_A_lower.value = bounds::annulus_hitting_lower_bound(spec.i, chi.hit);
  }

  std::optional<std::int64_t> chi_bridge = chi.bridge;
  if (!chi_bridge && spec.alpha == curves::nu)
    chi_bridge = bounds::catching_chi(bounds::recipes::nu_case(spec.kappa));
  c.chi_bridge = chi_bridge.value_or(0);
  c.bridge_i_uniform = spec.g == 2 || spec.alpha == curves::nu;
  if (!c.strong)
    c.bridge_lower = Certified<Rational>::na("|i| <= N_strong");
  else if (mu_or_lambda(spec.alpha))
    c.bridge_lower = Certified<Rational>::na("alpha parallel to mu or lambda");
  else if (!chi_bridge)
    c.bridge_lower = Certified<Rational>::na("no bridge chi for this alpha");
  else
    c.bridge_lower.value = bounds::bridge_lower_bound(spec.n, *chi_bridge, spec.g);

  c.bridge_upper_heuristic = bridge_upper_heuristic(c.tau);
  if (c.bridge_lower.value && *c.bridge_lower.value > Rational(c.bridge_upper_heuristic))
    throw Error(Errc::Inconsistent, "bridge lower bound " + c.bridge_lower.value->str() +
                                        " exceeds the presentation bound " + std::to_string(c.bridge_upper_heuristic));

  const bool small_slope = mu_or_lambda(c.tau) || c.tau == curves::nu;
  c.exterior.irreducible = c.strong;
  c.exterior.atoroidal = c.strong;
  c.exterior.boundary_irreducible = c.strong && !small_slope;
  c.exterior.anannular = c.strong && !c.exceptional;
  c.unique_surgery = c.exterior.all();
  return c;
}

Certificate build_certificate(const KnotSpec& spec, std::int64_t chi_Q_bridge, std::int64_t chi_Q_nu) {
  ChiInputs chi;
  chi.bridge = chi_Q_bridge;
  chi.nu = chi_Q_nu;
  return build_certificate(spec, chi);
}

std::vector<std::int64_t> IntRange::values() const {
  if (step <= 0) throw Error(Errc::Parse, "range step must be positive");
  if (lo > hi) return {};
  const __int128 count = (static_cast<__int128>(hi) - lo) / step + 1;
  if (count > kMaxRangeSize) throw Error(Errc::LimitExceeded, "range has more than 10^7 values");
  std::vector<std::int64_t> out;
  for (__int128 k = 0; k < count; ++k) out.push_back(static_cast<std::int64_t>(lo + k * step));
  return out;
}

IntRange parse_range(const std::string& text) {
  std::vector<std::int64_t> parts;
  std::istringstream in(text);
  for (std::string tok; std::getline(in, tok, ':');) {
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
      v = std::stoll(tok, &used);
    } catch (const std::exception&) {
      used = std::string::npos;
    }
    if (used != tok.size()) throw Error(Errc::Parse, "bad range '" + text + "'");
    parts.push_back(v);
  }
  if (parts.empty() || parts.size() > 3 || text.back() == ':') throw Error(Errc::Parse, "bad range '" + text + "'");
  IntRange r{parts[0], parts.size() > 1 ? parts[1] : parts[0], parts.size() > 2 ? parts[2] : 1};
  if (r.step <= 0) throw Error(Errc::Parse, "range step must be positive in '" + text + "'");
  return r;
}

bool Catalog::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.cert.has_value(); });
}

Catalog generate_family(const FamilyRequest& req) {
  Catalog cat;
  cat.request = req;
  for (std::int64_t n : req.n_range.values())
    for (std::int64_t i : req.i_range.values())
      cat.rows.emplace_back().spec = {req.g, req.family, req.kappa, req.alpha, n, i};

  auto fill = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      Row& row = cat.rows[k];
      try {
        row.cert.emplace(build_certificate(row.spec, req.chi));
      } catch (const Error& e) {
        row.error = e.what();
        continue;
      }
      if (!req.witness)
        row.distinct_from_witness = Certified<bool>::na("no witness");
      else if (row.spec.i == req.witness->i)
        row.distinct_from_witness = Certified<bool>::na("witness index");
      else if (!row.cert->hbar_D_lower.value || *row.cert->hbar_D_lower.value <= req.witness->hbar_D_upper)
        row.distinct_from_witness = Certified<bool>::na("lower bound does not exceed witness");
      else
        row.distinct_from_witness.value = true;
    }
  };
  const std::size_t threads = std::clamp<std::size_t>(req.threads, 1, std::max<std::size_t>(cat.rows.size(), 1));
  if (threads == 1) {
    fill(0, cat.rows.size());
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (cat.rows.size() + threads - 1) / threads;
    for (std::size_t t = 0; t < threads; ++t)
      pool.emplace_back(fill, std::min(t * chunk, cat.rows.size()), std::min((t + 1) * chunk, cat.rows.size()));
  }

  if (cat.rows.empty())
    cat.distinctness = na("empty catalog");
  else if (mu_or_lambda(req.alpha))
    cat.distinctness = na("alpha parallel to mu or lambda");
  else if (std::any_of(cat.rows.begin(), cat.rows.end(),
                       [](const Row& r) { return r.cert && mu_or_lambda(r.cert->tau); }))
    cat.distinctness = na("some tau parallel to mu or lambda");
  else
    cat.distinctness = "hbar_D lower bound unbounded in |i|";
  return cat;
}

std::string to_csv(const Catalog& cat) {
  std::ostringstream out;
  out << "# knotforge-catalog v1 format=csv\n# request " << request_line(cat.request) << "\n";
  const auto columns = fields(Row{});
  for (std::size_t k = 0; k < columns.size(); ++k) out << (k ? "," : "") << columns[k].first;
  out << "\n";
  for (const Row& row : cat.rows) {
    const auto f = fields(row);
    for (std::size_t k = 0; k < f.size(); ++k) out << (k ? "," : "") << csv_escape(f[k].second);
    out << "\n";
  }
  out << "# distinctness: " << cat.distinctness << "\n";
  return out.str();
}

std::string to_text(const Catalog& cat) {
  std::ostringstream out;
  out << "# knotforge-catalog v1 format=txt\nrequest " << request_line(cat.request) << "\n";
  for (const Row& row : cat.rows) {
    out << "row n=" << row.spec.n << " i=" << row.spec.i << "\n";
    for (const auto& [key, value] : fields(row))
      if (key != "n" && key != "i") out << "  " << key << " = " << value << "\n";
  }
  out << "distinctness: " << cat.distinctness << "\n";
  return out.str();
}

std::string to_string(Family f) { return f == Family::H ? "H" : "S"; }

Family parse_family(const std::string& text) {
  if (text == "H") return Family::H;
  if (text == "S") return Family::S;
  throw Error(Errc::Parse, "family must be H or S, got '" + text + "'");
}

}  // namespace knotforge::catalog
