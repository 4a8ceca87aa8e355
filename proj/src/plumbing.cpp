#include "knotforge/plumbing.hpp"

#include <climits>
#include <sstream>

#include "knotforge/error.hpp"
#include "knotforge/pants_complex.hpp"

namespace knotforge::plumbing {

namespace {

std::string band_token(const PlumbingBand& b) {
  std::string t = b.nontrivial ? "nontrivial" : "trivial";
  t += ",joins=" + std::to_string(b.joins);
  if (b.dual) t += ",dual";
  return t;
}

PlumbingBand parse_band(const std::string& tok, Host host, int line) {
  PlumbingBand b;
  b.host = host;
  std::istringstream in(tok);
  std::vector<std::string> fields;
  for (std::string f; std::getline(in, f, ',');) fields.push_back(f);
  bool ok = !fields.empty() && (fields[0] == "nontrivial" || fields[0] == "trivial");
  if (ok) b.nontrivial = fields[0] == "nontrivial";
  for (std::size_t k = 1; ok && k < fields.size(); ++k) {
    if (fields[k] == "dual")
      b.dual = true;
    else if (fields[k] == "joins=1" || fields[k] == "joins=2")
      b.joins = fields[k].back() - '0';
    else
      ok = false;
  }
  if (!ok) throw Error(Errc::Parse, "line " + std::to_string(line) + ": bad band '" + tok + "'");
  return b;
}

void check_input(const MarkedPair& p, const PlumbingBand& band, const char* name) {
  if (!band.nontrivial) throw Error(Errc::TrivialBand, std::string("band on ") + name + " is trivial");
  if (!p.flags.three_disk_busting)
    throw Error(Errc::MissingPrecondition, std::string(name) + " is not certified 3-disk-busting");
  if (!p.flags.essential_components)
    throw Error(Errc::MissingPrecondition, std::string(name) + " has components not certified essential");
  if (band.joins < 1 || band.joins > 2 || band.joins > p.components)
    throw Error(Errc::MissingPrecondition, std::string("band on ") + name + " joins more components than exist");
  if (band.dual && (p.components != 1 || band.joins != 1))
    throw Error(Errc::MissingPrecondition, std::string("dual band on ") + name + " needs a connected curve");
}

// One step of the eta recursion: `eta_g` along a dual band, plumbed to the
// doubled eta_1 along a band joining its two copies.
MarkedPair double_onto(const MarkedPair& eta_g, const MarkedPair& doubled) {
  return plumb(eta_g, doubled, {Host::A, true, 1, true}, {Host::B, true, 2, false});
}

}  // namespace

MarkedPair plumb(const MarkedPair& a, const MarkedPair& b, const PlumbingBand& band_a, const PlumbingBand& band_b) {
  if (band_a.host != Host::A || band_b.host != Host::B)
    throw Error(Errc::MissingPrecondition, "bands are attached to the wrong hosts");
  check_input(a, band_a, "first pair");
  check_input(b, band_b, "second pair");

  MarkedPair out;
  if (a.genus > INT32_MAX - b.genus) throw Error(Errc::Overflow, "genus");
  out.genus = a.genus + b.genus;
  out.components = a.components + b.components - band_a.joins - band_b.joins + 1;
  out.flags.three_disk_busting = true;
  out.flags.essential_components = true;
  out.flags.annulus_busting = a.flags.annulus_busting && b.flags.annulus_busting;
  out.flags.nonseparating = out.components == 1 && (band_a.dual || band_b.dual);
  out.lineage = a.lineage;
  out.lineage.insert(out.lineage.end(), b.lineage.begin(), b.lineage.end());
  out.lineage.push_back("plumb " + band_token(band_a) + " " + band_token(band_b));
  return out;
}

namespace base {

MarkedPair eta1() {
  // An incompressible annulus in a solid torus is boundary parallel, and a
  // meridian disk meets a winding-number-3 curve at least three times.
  return {1, 1, {true, true, true, true}, {"eta1"}};
}

MarkedPair eta1_double() { return {1, 2, {true, true, false, true}, {"eta1-double"}}; }

MarkedPair gamma2() {
  const auto& g = pants::gamma2();
  MarkedPair p{2, 1, {}, {"gamma2"}};
  p.flags.three_disk_busting = g.cert.level >= 3;
  p.flags.annulus_busting = g.cert.annulus_busting;
  p.flags.essential_components = g.cert.level >= 1;
  p.flags.nonseparating = pants::odd_cuff(g.curve, g.pd).has_value();
  return p;
}

}  // namespace base

MarkedPair eta(int g) {
  if (g < 1) throw Error(Errc::InvalidGenus, "eta needs g >= 1, got " + std::to_string(g));
  MarkedPair p = base::eta1();
  for (int k = 1; k < g; ++k) p = double_onto(p, base::eta1_double());
  return p;
}

MarkedPair gamma(int g) {
  if (g < 2) throw Error(Errc::InvalidGenus, "gamma needs g >= 2, got " + std::to_string(g));
  if (g == 2) return base::gamma2();
  return plumb(eta(g - 2), base::gamma2(), {Host::A, true, 1, true}, {Host::B, true, 1, false});
}

std::string serialize(const MarkedPair& pair) {
  std::string out = "# plumbing lineage v1\n";
  for (const auto& step : pair.lineage) out += step + "\n";
  return out;
}

MarkedPair replay(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int n = 0;
  if (!std::getline(in, line) || line != "# plumbing lineage v1")
    throw Error(Errc::Parse, "line 1: missing '# plumbing lineage v1' header");
  ++n;
  std::vector<MarkedPair> stack;
  while (std::getline(in, line)) {
    ++n;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string op;
    ls >> op;
    if (op == "eta1") {
      stack.push_back(base::eta1());
    } else if (op == "eta1-double") {
      stack.push_back(base::eta1_double());
    } else if (op == "gamma2") {
      stack.push_back(base::gamma2());
    } else if (op == "plumb") {
      std::string ta, tb, extra;
      if (!(ls >> ta >> tb) || (ls >> extra))
        throw Error(Errc::Parse, "line " + std::to_string(n) + ": plumb takes two bands");
      if (stack.size() < 2) throw Error(Errc::Parse, "line " + std::to_string(n) + ": plumb needs two pairs");
      MarkedPair b = std::move(stack.back());
      stack.pop_back();
      MarkedPair a = std::move(stack.back());
      stack.pop_back();
      stack.push_back(plumb(a, b, parse_band(ta, Host::A, n), parse_band(tb, Host::B, n)));
    } else {
      throw Error(Errc::Parse, "line " + std::to_string(n) + ": unknown step '" + op + "'");
    }
  }
  if (stack.size() != 1) throw Error(Errc::Parse, "lineage leaves " + std::to_string(stack.size()) + " pairs");
  return stack.back();
}

std::string describe(const Flags& f) {
  std::string s;
  auto add = [&](bool v, const char* name) {
    if (!v) return;
    if (!s.empty()) s += ",";
    s += name;
  };
  add(f.three_disk_busting, "3-disk-busting");
  add(f.annulus_busting, "annulus-busting");
  add(f.nonseparating, "nonseparating");
  add(f.essential_components, "essential");
  return s.empty() ? "none" : s;
}

}  // namespace knotforge::plumbing
