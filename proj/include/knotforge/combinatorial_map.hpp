#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace knotforge::graphs {

// Orientable map on 2E darts: `rotation` is the counter-clockwise successor of
// a dart around its vertex, `involution` pairs the two darts of an edge.
// Faces are the cycles of d -> rotation[involution[d]].
class CombinatorialMap {
 public:
  // Throws Errc::MalformedMap unless rotation is a permutation and involution
  // a fixed-point-free involution on the same dart set.
  CombinatorialMap(std::vector<int> rotation, std::vector<int> involution);

  // Builds the rotation from explicit vertex cycles (each a ccw dart list).
  static CombinatorialMap from_vertex_cycles(const std::vector<std::vector<int>>& cycles,
                                             std::vector<int> involution);

  int darts() const noexcept { return static_cast<int>(rotation_.size()); }
  int edges() const noexcept { return darts() / 2; }
  int vertices() const;
  int faces() const;
  int euler_characteristic() const { return vertices() - edges() + faces(); }
  bool connected() const;

  int rotate(int d) const { return rotation_[d]; }
  int opposite(int d) const { return involution_[d]; }
  int face_next(int d) const { return rotation_[involution_[d]]; }

  std::span<const int> rotation() const noexcept { return rotation_; }
  std::span<const int> involution() const noexcept { return involution_; }

  std::vector<std::vector<int>> vertex_cycles() const;
  std::vector<std::vector<int>> face_cycles() const;
  // Edge index per dart; edges numbered by their smallest dart.
  std::vector<int> edge_ids() const;

  // Lexicographically least rooted_code over all root darts. Two connected
  // maps are isomorphic (orientation-preserving) iff their codes are equal.
  std::vector<int> canonical_code() const;

  friend bool operator==(const CombinatorialMap&, const CombinatorialMap&) = default;

 private:
  std::vector<int> rotation_;
  std::vector<int> involution_;
};

// Breadth-first relabelling of a connected map from `root`: darts of a vertex
// get consecutive labels in rotation order, vertices in order of discovery.
// Code: [degree of root vertex, then per label k the new label of its
// opposite dart, followed by that vertex's degree when it opens a vertex].
std::vector<int> rooted_code(std::span<const int> rotation, std::span<const int> involution, int root);

// The map whose darts are labelled in rooted_code order from `root`.
CombinatorialMap relabel_from_root(const CombinatorialMap& map, int root);

}  // namespace knotforge::graphs
