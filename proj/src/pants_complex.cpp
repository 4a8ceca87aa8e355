#include "knotforge/pants_complex.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>

#include "knotforge/error.hpp"

namespace knotforge::pants {

namespace {

// Seam classes touching each side, and the one avoiding it.
constexpr std::array<std::array<int, 2>, 3> kTouching{{{0, 2}, {0, 1}, {1, 2}}};
constexpr std::array<int, 3> kAvoiding{1, 2, 0};

void check_shape(const SeamedCurve& c, const PantsDecomposition& pd) {
  check_decomposition(pd);
  if (c.pants.size() != pd.pants.size())
    throw Error(Errc::ShapeMismatch, "curve has " + std::to_string(c.pants.size()) + " pants records, decomposition " +
                                         std::to_string(pd.pants.size()));
  if (c.closed.size() != pd.cuffs.size())
    throw Error(Errc::ShapeMismatch, "curve has " + std::to_string(c.closed.size()) + " cuff records, decomposition " +
                                         std::to_string(pd.cuffs.size()));
}

bool realizable(const PantsArcs& a) {
  for (int k = 0; k < 3; ++k)
    if (a.seams[k] < 0 || a.waves[k] < 0) return false;
  for (int k = 0; k < 3; ++k) {
    if (a.waves[k] == 0) continue;
    // A wave at side k separates the other two sides: it crosses the seam
    // joining them and any wave at another side.
    if (a.seams[kAvoiding[k]] != 0) return false;
    for (int j = 0; j < 3; ++j)
      if (j != k && a.waves[j] != 0) return false;
  }
  return true;
}

// Endpoint count of every cuff side, summed per cuff; -1 marks a mismatch.
std::vector<std::vector<std::int64_t>> side_counts(const SeamedCurve& c, const PantsDecomposition& pd) {
  std::vector<std::vector<std::int64_t>> per_cuff(pd.cuffs.size());
  for (std::size_t p = 0; p < pd.pants.size(); ++p)
    for (int k = 0; k < 3; ++k) per_cuff[pd.pants[p].cuffs[k]].push_back(endpoints(c.pants[p], k));
  return per_cuff;
}

[[noreturn]] void parse_error(int line, const std::string& what) {
  throw Error(Errc::Parse, "line " + std::to_string(line) + ": " + what);
}

std::int64_t parse_count(const std::string& tok, int line) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size() || v < 0) parse_error(line, "bad count '" + tok + "'");
  return v;
}

}  // namespace

void check_decomposition(const PantsDecomposition& pd) {
  if (pd.genus < 2) throw Error(Errc::ShapeMismatch, "pants decomposition needs genus >= 2");
  const auto g = static_cast<std::size_t>(pd.genus);
  if (pd.cuffs.size() != 3 * g - 3) throw Error(Errc::ShapeMismatch, "expected 3g-3 cuffs");
  if (pd.pants.size() != 2 * g - 2) throw Error(Errc::ShapeMismatch, "expected 2g-2 pants");
  std::vector<int> sides(pd.cuffs.size(), 0);
  for (const auto& p : pd.pants)
    for (int c : p.cuffs) {
      if (c < 0 || static_cast<std::size_t>(c) >= pd.cuffs.size())
        throw Error(Errc::ShapeMismatch, "pants " + p.id + " names an unknown cuff");
      ++sides[c];
    }
  for (std::size_t c = 0; c < sides.size(); ++c)
    if (sides[c] != 2) throw Error(Errc::ShapeMismatch, "cuff " + pd.cuffs[c] + " does not have exactly two sides");
}

SeamedCurve empty_curve(const PantsDecomposition& pd) {
  return {std::vector<PantsArcs>(pd.pants.size()), std::vector<std::int64_t>(pd.cuffs.size(), 0)};
}

std::int64_t endpoints(const PantsArcs& a, int side) {
  const auto [s, t] = kTouching[side];
  return checked::add(checked::add(a.seams[s], a.seams[t]), checked::mul(2, a.waves[side]));
}

bool validate(const SeamedCurve& curve, const PantsDecomposition& pd) {
  check_shape(curve, pd);
  if (!std::all_of(curve.pants.begin(), curve.pants.end(), realizable)) return false;
  if (std::any_of(curve.closed.begin(), curve.closed.end(), [](std::int64_t v) { return v < 0; })) return false;
  for (const auto& counts : side_counts(curve, pd))
    if (counts[0] != counts[1]) return false;
  return true;
}

std::int64_t seamed_level(const SeamedCurve& curve, const PantsDecomposition& pd) {
  if (!pd.compatible) throw Error(Errc::IncompatibleDecomposition, "cuffs are not known to bound disks");
  if (!validate(curve, pd)) throw Error(Errc::PreconditionUnmet, "curve fails matching or realizability");
  std::int64_t level = INT64_MAX;
  for (const auto& a : curve.pants) {
    if (a.waves != std::array<std::int64_t, 3>{}) return 0;
    level = std::min({level, a.seams[0], a.seams[1], a.seams[2]});
  }
  for (std::int64_t c : curve.closed)
    if (c != 0) return 0;
  return level;
}

SeamedCurve disjoint_union(const SeamedCurve& a, const SeamedCurve& b) {
  if (a.pants.size() != b.pants.size() || a.closed.size() != b.closed.size())
    throw Error(Errc::ShapeMismatch, "curves live on different decompositions");
  SeamedCurve out = a;
  for (std::size_t p = 0; p < a.pants.size(); ++p)
    for (int k = 0; k < 3; ++k) {
      out.pants[p].seams[k] = checked::add(out.pants[p].seams[k], b.pants[p].seams[k]);
      out.pants[p].waves[k] = checked::add(out.pants[p].waves[k], b.pants[p].waves[k]);
    }
  for (std::size_t c = 0; c < a.closed.size(); ++c) out.closed[c] = checked::add(out.closed[c], b.closed[c]);
  return out;
}

std::optional<int> odd_cuff(const SeamedCurve& curve, const PantsDecomposition& pd) {
  check_shape(curve, pd);
  const auto counts = side_counts(curve, pd);
  for (std::size_t c = 0; c < counts.size(); ++c)
    if (counts[c][0] % 2 != 0) return static_cast<int>(c);
  return std::nullopt;
}

const char* to_string(Method m) {
  switch (m) {
    case Method::Seamed: return "seamed";
    case Method::Promoted: return "promoted";
    case Method::Plumbed: return "plumbed";
    case Method::HittingBound: return "hitting-bound";
  }
  return "?";
}

BustingCertificate promote(const BustingCertificate& cert, int genus) {
  if (genus < 2 || cert.level != 1) return cert;
  BustingCertificate out = cert;
  out.level = 2;
  out.method = Method::Promoted;
  out.notes.push_back("disk-busting in genus " + std::to_string(genus) + " implies 2-disk-busting");
  return out;
}

namespace {

constexpr const char* kGamma2Seams =
#include "gamma2_seams.inc"
    ;

Gamma2 load_gamma2() {
  auto doc = parse_seams(kGamma2Seams);
  if (!validate(doc.curve, doc.pd)) throw Error(Errc::Inconsistent, "built-in gamma_2 data does not validate");
  Gamma2 out{doc.curve, doc.pd, {}};
  out.cert.level = seamed_level(doc.curve, doc.pd);
  out.cert.method = Method::Seamed;
  out.cert.annulus_busting = true;
  out.cert.notes = {"level from seam counts", "annulus-busting carried as an axiom"};
  return out;
}

}  // namespace

const Gamma2& gamma2() {
  static const Gamma2 g = load_gamma2();
  return g;
}

SeamDocument parse_seams(const std::string& text) {
  SeamDocument doc;
  auto& pd = doc.pd;
  std::map<std::string, int> cuff_index, pants_index;
  std::vector<std::pair<int, std::vector<std::string>>> arcs, closed;
  bool header = false, have_genus = false;

  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    if (!header) {
      if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (raw.rfind("# seamed-curve v1", 0) != 0) parse_error(line, "missing '# seamed-curve v1' header");
      header = true;
      continue;
    }
    std::istringstream ls(raw.substr(0, raw.find('#')));
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    const std::string& key = tok[0];
    if (key == "genus") {
      if (tok.size() != 2) parse_error(line, "genus takes one value");
      pd.genus = static_cast<int>(parse_count(tok[1], line));
      have_genus = true;
    } else if (key == "compatible") {
      if (tok.size() != 2 || (tok[1] != "true" && tok[1] != "false")) parse_error(line, "compatible takes true|false");
      pd.compatible = tok[1] == "true";
    } else if (key == "cuff") {
      if (tok.size() != 2) parse_error(line, "cuff takes one name");
      if (!cuff_index.emplace(tok[1], static_cast<int>(pd.cuffs.size())).second)
        parse_error(line, "duplicate cuff " + tok[1]);
      pd.cuffs.push_back(tok[1]);
    } else if (key == "pants") {
      if (tok.size() != 5) parse_error(line, "pants takes a name and three cuffs");
      Pants p{tok[1], {}};
      for (int k = 0; k < 3; ++k) {
        auto it = cuff_index.find(tok[2 + k]);
        if (it == cuff_index.end()) parse_error(line, "unknown cuff " + tok[2 + k]);
        p.cuffs[k] = it->second;
      }
      if (!pants_index.emplace(tok[1], static_cast<int>(pd.pants.size())).second)
        parse_error(line, "duplicate pants " + tok[1]);
      pd.pants.push_back(p);
    } else if (key == "arcs") {
      if (tok.size() != 10 || tok[2] != "seams" || tok[6] != "waves")
        parse_error(line, "expected: arcs ID seams a b c waves x y z");
      arcs.push_back({line, tok});
    } else if (key == "closed") {
      if (tok.size() != 3) parse_error(line, "expected: closed CUFF COUNT");
      closed.push_back({line, tok});
    } else {
      parse_error(line, "unknown record '" + key + "'");
    }
  }
  if (!header) parse_error(line, "empty document");
  if (!have_genus) parse_error(line, "missing genus");

  doc.curve = empty_curve(pd);
  std::vector<char> seen(pd.pants.size(), 0);
  for (const auto& [ln, tok] : arcs) {
    auto it = pants_index.find(tok[1]);
    if (it == pants_index.end()) parse_error(ln, "unknown pants " + tok[1]);
    if (seen[it->second]++) parse_error(ln, "duplicate arcs record for " + tok[1]);
    auto& a = doc.curve.pants[it->second];
    for (int k = 0; k < 3; ++k) {
      a.seams[k] = parse_count(tok[3 + k], ln);
      a.waves[k] = parse_count(tok[7 + k], ln);
    }
  }
  for (const auto& [ln, tok] : closed) {
    auto it = cuff_index.find(tok[1]);
    if (it == cuff_index.end()) parse_error(ln, "unknown cuff " + tok[1]);
    doc.curve.closed[it->second] = parse_count(tok[2], ln);
  }
  return doc;
}

std::string write_seams(const SeamedCurve& curve, const PantsDecomposition& pd) {
  check_shape(curve, pd);
  std::ostringstream out;
  out << "# seamed-curve v1\n"
      << "genus " << pd.genus << "\n"
      << "compatible " << (pd.compatible ? "true" : "false") << "\n";
  for (const auto& c : pd.cuffs) out << "cuff " << c << "\n";
  for (const auto& p : pd.pants)
    out << "pants " << p.id << ' ' << pd.cuffs[p.cuffs[0]] << ' ' << pd.cuffs[p.cuffs[1]] << ' '
        << pd.cuffs[p.cuffs[2]] << "\n";
  for (std::size_t p = 0; p < pd.pants.size(); ++p) {
    const auto& a = curve.pants[p];
    out << "arcs " << pd.pants[p].id << " seams " << a.seams[0] << ' ' << a.seams[1] << ' ' << a.seams[2]
        << " waves " << a.waves[0] << ' ' << a.waves[1] << ' ' << a.waves[2] << "\n";
  }
  for (std::size_t c = 0; c < pd.cuffs.size(); ++c)
    if (curve.closed[c] != 0) out << "closed " << pd.cuffs[c] << ' ' << curve.closed[c] << "\n";
  return out.str();
}

}  // namespace knotforge::pants
