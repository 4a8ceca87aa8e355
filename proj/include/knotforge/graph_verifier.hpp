#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "knotforge/combinatorial_map.hpp"
#include "knotforge/map_enumerator.hpp"

namespace knotforge::graphs {

// Faces of a map, with some faces optionally marked as non-disk (boundary or
// puncture). Marked faces never make an edge trivial or two edges parallel.
struct FaceReport {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  int euler_characteristic = 0;
  std::vector<int> face_degrees;  // ascending
  int monogons = 0;               // unmarked faces of degree 1
  // Edge pairs (a < b) of unmarked degree-2 faces bounded by two distinct
  // edges, sorted.
  std::vector<std::array<int, 2>> bigons;
  std::vector<char> trivial;        // per edge: bounds an unmarked monogon
  std::vector<int> parallel_class;  // per edge; classes numbered by first edge
  int parallelism_classes = 0;
  int nontrivial_classes = 0;  // classes containing a nontrivial edge

  bool has_parallel_edges() const { return !bigons.empty(); }
};

// Edges are numbered as in CombinatorialMap::edge_ids, faces in the order of
// CombinatorialMap::face_cycles. Throws Errc::MalformedMap for an out of
// range marked face.
FaceReport trace_faces(const CombinatorialMap& m, std::span<const int> marked_faces = {});

// Allocation-free face tracing for enumeration loops.
class FaceTracer {
 public:
  void trace(std::span<const int> rotation, std::span<const int> involution);

  int faces() const { return static_cast<int>(start_.size()) - 1; }
  int degree(int f) const { return start_[f + 1] - start_[f]; }
  int dart(int f, int k) const { return darts_[start_[f] + k]; }
  int face_of(int d) const { return face_of_[d]; }
  // Degree-2 face bounded by two distinct edges.
  bool is_parallel_bigon(int f) const;

 private:
  std::span<const int> rotation_, involution_;
  std::vector<int> darts_, start_, face_of_;
};

// --- Check: monogon-free graphs with many edges have parallel edges ------

struct ParallelPOptions {
  int v_max = 3;
  int e_budget = 12;
  int chi_min = -2;
  // Marked-face (bordered surface / isolated vertex) pass; monogons are
  // allowed there, so it is far more expensive per edge.
  bool bordered = true;
  int bordered_e_budget = 9;
  int threads = 1;
  int witness_cap = 8;
  EnumerationLimits limits{};
};

struct ParallelPCell {
  std::string model;  // "closed", "bordered", "isolated"
  int vertices = 0;
  int edges = 0;
  int genus = 0;           // of the closed surface carrying the map
  std::uint64_t maps = 0;  // representatives examined
  std::uint64_t in_scope = 0;  // maps meeting the edge-count hypothesis
  std::uint64_t counterexamples = 0;
  std::uint64_t tight = 0;  // E equal to the threshold, no parallel edges
};

struct ParallelPReport {
  ParallelPOptions options;
  std::vector<ParallelPCell> cells;  // only cells that were enumerated
  std::vector<std::string> skipped;  // (model, V, E) ranges with no possible hypothesis
  std::vector<std::string> counterexamples;
  std::vector<std::string> witnesses;  // first witness_cap tightness witnesses
  std::uint64_t maps_examined = 0;
  std::uint64_t in_scope = 0;
  std::uint64_t counterexample_count = 0;
  std::uint64_t witness_count = 0;
  double seconds = 0;

  bool ok() const { return counterexample_count == 0; }
  std::string text() const;
};

ParallelPReport verify_parallelP(const ParallelPOptions& options);
ParallelPReport verify_parallelP(int v_max, int e_budget, int chi_min);

// --- Check: at most max(-3 chi(Q), 1) parallelism classes of arcs ---------

struct ClassBoundOptions {
  int e_budget = 8;
  int max_genus = 1;
  int max_punctures = 4;
  int chi_min = -2;
  int threads = 1;
  EnumerationLimits limits{4, 12};
};

// Surface Q of genus h with p boundary circles, collapsed to punctures. An
// arc system is a map on the closed genus-h surface whose vertices are V' <= p
// of the punctures; the other p - V' punctures sit in faces. Systems of
// pairwise non-isotopic essential arcs are exactly the maps in which every
// monogon and every bigon between distinct edges holds a spare puncture, and
// for those the number of parallelism classes is E.
struct ClassBoundRow {
  int genus = 0;
  int punctures = 0;
  int chi = 0;
  std::int64_t bound = 0;  // parallelism_class_bound(chi)
  int max_classes = 0;     // largest admissible arc system found
  std::uint64_t maps = 0;
  std::uint64_t violations = 0;
  std::string extremal;  // a map attaining max_classes
  bool attained() const { return max_classes == bound; }
};

struct ClassBoundReport {
  ClassBoundOptions options;
  std::vector<ClassBoundRow> rows;
  double seconds = 0;
  bool ok() const;
  std::string text() const;
};

ClassBoundReport verify_parallel_class_bound(const ClassBoundOptions& options);
ClassBoundReport verify_parallel_class_bound(int e_budget);

// "(0 1 2)(3 4) | 0-3 1-2 4-5": vertex rotations, then edges by dart pairs.
std::string describe(std::span<const int> rotation, std::span<const int> involution);
std::string describe(const CombinatorialMap& m);

}  // namespace knotforge::graphs
