#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace knotforge::pants {

// Sides of a pants are numbered 0 (x), 1 (y), 2 (z).
struct Pants {
  std::string id;
  std::array<int, 3> cuffs{};  // index into PantsDecomposition::cuffs per side
};

struct PantsDecomposition {
  int genus = 2;
  std::vector<std::string> cuffs;  // 3g - 3 names
  std::vector<Pants> pants;        // 2g - 2 records
  bool compatible = false;         // every cuff bounds a disk in the handlebody
};

// Throws Errc::ShapeMismatch unless genus >= 2, the cuff and pants counts are
// 3g-3 and 2g-2, and every cuff has exactly two pants-sides.
void check_decomposition(const PantsDecomposition& pd);

// Arcs of a multicurve in one pants: seams[0] = xy, seams[1] = yz,
// seams[2] = xz; waves[k] counts arcs with both ends on side k.
struct PantsArcs {
  std::array<std::int64_t, 3> seams{};
  std::array<std::int64_t, 3> waves{};
  friend bool operator==(const PantsArcs&, const PantsArcs&) = default;
};

struct SeamedCurve {
  std::vector<PantsArcs> pants;        // parallel to PantsDecomposition::pants
  std::vector<std::int64_t> closed;    // cuff-parallel components, per cuff
  friend bool operator==(const SeamedCurve&, const SeamedCurve&) = default;
};

SeamedCurve empty_curve(const PantsDecomposition& pd);

// Endpoints on side k of a pants: the two seam classes touching k plus twice
// its waves.
std::int64_t endpoints(const PantsArcs& a, int side);

// Cuff matching and per-pants realizability. Throws Errc::ShapeMismatch when
// the curve does not have one record per pants and per cuff.
bool validate(const SeamedCurve& curve, const PantsDecomposition& pd);

// Largest k with at least k arcs in every seam class of every pants. Zero when
// the curve has waves or cuff-parallel components, which the criterion does
// not cover. Throws Errc::IncompatibleDecomposition, Errc::ShapeMismatch, and
// Errc::PreconditionUnmet for an invalid curve.
std::int64_t seamed_level(const SeamedCurve& curve, const PantsDecomposition& pd);

// Componentwise sum of arc counts.
SeamedCurve disjoint_union(const SeamedCurve& a, const SeamedCurve& b);

// A cuff met an odd number of times certifies that the curve is
// non-separating (a separating curve has even intersection with every closed
// curve). Returns its index.
std::optional<int> odd_cuff(const SeamedCurve& curve, const PantsDecomposition& pd);

enum class Method { Seamed, Promoted, Plumbed, HittingBound };
const char* to_string(Method m);

struct BustingCertificate {
  std::int64_t level = 0;
  Method method = Method::Seamed;
  bool annulus_busting = false;
  std::vector<std::string> notes;
  friend bool operator==(const BustingCertificate&, const BustingCertificate&) = default;
};

// A 1-disk-busting curve in genus >= 2 is automatically 2-disk-busting.
BustingCertificate promote(const BustingCertificate& cert, int genus);

struct Gamma2 {
  SeamedCurve curve;
  PantsDecomposition pd;
  BustingCertificate cert;
};

// The built-in genus-2 curve, parsed from the embedded copy of
// data/gamma2.seams and validated on load.
const Gamma2& gamma2();

// Text format, one record per line, '#' starts a comment:
//   # seamed-curve v1
//   genus 2
//   compatible true
//   cuff c1
//   pants A c1 c1 c2
//   arcs A seams 4 3 3 waves 0 0 0
//   closed c1 0
// Cuffs and pants must be declared before use; missing arcs/closed records
// are zero. Throws Errc::Parse with the line number.
struct SeamDocument {
  PantsDecomposition pd;
  SeamedCurve curve;
};
SeamDocument parse_seams(const std::string& text);
std::string write_seams(const SeamedCurve& curve, const PantsDecomposition& pd);

}  // namespace knotforge::pants
