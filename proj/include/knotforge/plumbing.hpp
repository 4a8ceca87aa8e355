#pragma once

#include <string>
#include <vector>

namespace knotforge::plumbing {

struct Flags {
  bool three_disk_busting = false;
  bool annulus_busting = false;
  bool nonseparating = false;
  bool essential_components = false;
  friend bool operator==(const Flags&, const Flags&) = default;
};

// Certificate-level (handlebody, curve system) pair. Flags are only set by the
// base cases below or by plumb(); the lineage is a postfix program that
// rebuilds the pair with replay().
struct MarkedPair {
  int genus = 1;
  int components = 1;
  Flags flags;
  std::vector<std::string> lineage;
  friend bool operator==(const MarkedPair&, const MarkedPair&) = default;
};

enum class Host { A, B };

// A band running from the host's curve system to itself. `joins` is the
// number of distinct components its two ends lie on (1 or 2). `dual` marks a
// band cut from a closed curve meeting a connected system exactly once, which
// keeps the plumbed curve non-separating.
struct PlumbingBand {
  Host host = Host::A;
  bool nontrivial = false;
  int joins = 1;
  bool dual = false;
};

// Throws Errc::TrivialBand, or Errc::MissingPrecondition when an input is not
// certified 3-disk-busting with essential components or a band does not fit
// its host.
//   genus       a.genus + b.genus
//   components  a.components + b.components - band_a.joins - band_b.joins + 1
//   3-disk-busting, essential components: always
//   annulus-busting: both inputs
//   non-separating: connected result and a dual band
MarkedPair plumb(const MarkedPair& a, const MarkedPair& b, const PlumbingBand& band_a, const PlumbingBand& band_b);

namespace base {
MarkedPair eta1();         // winding-number-3 curve on the solid torus
MarkedPair eta1_double();  // two parallel copies of it
MarkedPair gamma2();       // from the seam data of pants::gamma2()
}  // namespace base

// Throw Errc::InvalidGenus for g < 1 (eta) or g < 2 (gamma).
MarkedPair eta(int g);
MarkedPair gamma(int g);

// "# plumbing lineage v1" followed by the lineage, one step per line.
std::string serialize(const MarkedPair& pair);
// Re-executes a serialized lineage; later '#' lines are comments. Throws
// Errc::Parse for unknown steps or a malformed stack, and the plumb() errors.
MarkedPair replay(const std::string& text);

std::string describe(const Flags& f);

}  // namespace knotforge::plumbing
