#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "knotforge/combinatorial_map.hpp"
#include "knotforge/error.hpp"

namespace knotforge::graphs {

struct EnumerationLimits {
  int max_vertices = 3;
  int max_edges = 12;
};

struct EnumerationOptions {
  int vertices = 1;
  int edges = 1;
  bool monogon_free = false;
  int max_genus = -1;  // < 0: unbounded
  int shard = 0;
  int shard_count = 1;
  EnumerationLimits limits{};
};

// Read-only view handed to visitors; arrays are only valid during the call.
struct MapView {
  std::span<const int> rotation;
  std::span<const int> involution;
  int vertices;
  int genus;

  int darts() const { return static_cast<int>(rotation.size()); }
  int edges() const { return darts() / 2; }
  int euler_characteristic() const { return 2 - 2 * genus; }
  CombinatorialMap to_map() const {
    return CombinatorialMap({rotation.begin(), rotation.end()}, {involution.begin(), involution.end()});
  }
};

// Generates one representative per orientation-preserving isomorphism class
// of connected maps with the requested vertex and edge counts.
//
// Maps are grown dart by dart in breadth-first label order from dart 0, so
// each rooted map is produced exactly once; a map is emitted only when no
// other root yields a lexicographically smaller code (orderly generation).
// Representatives are themselves in rooted_code order from dart 0.
// Genus never decreases as edges are added, which makes the genus cap a
// sound pruning rule (see recurse for the sharper bound actually used).
class MapEnumerator {
 public:
  explicit MapEnumerator(const EnumerationOptions& options);

  template <class Visitor>
  std::uint64_t for_each(Visitor&& visit) {
    emitted_ = 0;
    rooted_ = 0;
    branch_counter_ = 0;
    for (int d0 = 1; d0 <= n_; ++d0) {
      if (opt_.vertices == 1 && d0 != n_) continue;
      if (opt_.vertices > 1 && n_ - d0 < opt_.vertices - 1) continue;
      open_vertex(d0);
      recurse(visit, 0, 0, 0, d0 & 1);
      close_vertex();
    }
    return emitted_;
  }

  // Rooted maps reached by the last for_each (before isomorphism reduction,
  // within this shard).
  std::uint64_t rooted_count() const { return rooted_; }

 private:
  // Partial state: phi_ = sigma o alpha with unmatched darts fixed by alpha,
  // so its cycles are the faces of the matched submap with the free darts
  // sitting in their corners. Matching k with j composes phi_ with the
  // transposition (k j): one face splits (genus kept) or two merge (genus +1).
  // `odd` counts faces holding an odd number of free darts; such a face can
  // only become even through a merge or by attaching a vertex not yet
  // opened, which gives a lower bound for the genus of every completion.
  template <class Visitor>
  void recurse(Visitor& visit, int cursor, int depth, int genus, int odd) {
    int k = cursor;
    while (k < allocated_ && alpha_[k] >= 0) ++k;
    if (k == allocated_) {
      if (allocated_ == n_ && vcount_ == opt_.vertices) leaf(visit, genus);
      return;
    }
    const int a = mark_face(k);
    int stamp = stamp_;
    for (int j = k + 1; j < allocated_; ++j) {
      if (alpha_[j] >= 0) continue;
      if (opt_.monogon_free && (j == sigma_[k] || j == sigma_inv_[k])) continue;
      if (depth == 0 && !take_branch()) continue;
      if (stamp != stamp_) {  // deeper calls reuse the marks
        mark_face(k);
        stamp = stamp_;
      }
      const bool split = mark_[j] == stamp;
      const int b = split ? 0 : free_in_face(j);
      alpha_[k] = j;
      alpha_[j] = k;
      std::swap(phi_[k], phi_[j]);
      matched_ += 2;
      int g = genus;
      int o = odd - (a & 1);
      if (split) {
        const int c1 = free_in_face(k);
        o += (c1 & 1) + ((a - 2 - c1) & 1);
      } else {
        ++g;
        o += -(b & 1) + ((a + b - 2) & 1);
      }
      if (opt_.max_genus < 0 || completion_bound(g, o) <= opt_.max_genus) recurse(visit, k + 1, depth + 1, g, o);
      matched_ -= 2;
      std::swap(phi_[k], phi_[j]);
      alpha_[k] = alpha_[j] = -1;
    }
    if (vcount_ < opt_.vertices) {
      const int after = opt_.vertices - vcount_ - 1;
      const int room = n_ - allocated_;
      for (int d = 1; d <= room - after; ++d) {
        if (after == 0 && d != room) continue;
        if (depth == 0 && !take_branch()) continue;
        const int entry = allocated_;
        open_vertex(d);
        alpha_[k] = entry;
        alpha_[entry] = k;
        std::swap(phi_[k], phi_[entry]);
        matched_ += 2;
        const int o = odd - (a & 1) + ((a + d - 2) & 1);
        if (opt_.max_genus < 0 || completion_bound(genus, o) <= opt_.max_genus)
          recurse(visit, k + 1, depth + 1, genus, o);
        matched_ -= 2;
        std::swap(phi_[k], phi_[entry]);
        alpha_[k] = alpha_[entry] = -1;
        close_vertex();
      }
    }
  }

  int completion_bound(int genus, int odd) const {
    const int excess = odd - (opt_.vertices - vcount_);
    return genus + (excess > 0 ? (excess + 1) / 2 : 0);
  }

  // Stamps the face through d and returns its number of free darts.
  int mark_face(int d) {
    ++stamp_;
    int free_darts = 0;
    int e = d;
    do {
      mark_[e] = stamp_;
      free_darts += alpha_[e] < 0;
      e = phi_[e];
    } while (e != d);
    return free_darts;
  }

  int free_in_face(int d) const {
    int free_darts = 0;
    int e = d;
    do {
      free_darts += alpha_[e] < 0;
      e = phi_[e];
    } while (e != d);
    return free_darts;
  }

  template <class Visitor>
  void leaf(Visitor& visit, int genus) {
    ++rooted_;
    if (!is_canonical()) return;
    ++emitted_;
    visit(MapView{std::span<const int>(sigma_.data(), n_), std::span<const int>(alpha_.data(), n_), vcount_, genus});
  }

  bool take_branch() { return branch_counter_++ % static_cast<std::uint64_t>(opt_.shard_count) == static_cast<std::uint64_t>(opt_.shard); }

  void open_vertex(int degree);
  void close_vertex();
  bool is_canonical();

  EnumerationOptions opt_;
  int n_ = 0;
  std::vector<int> alpha_, sigma_, sigma_inv_, vstart_, vdeg_;
  int allocated_ = 0;
  int vcount_ = 0;
  int matched_ = 0;
  std::uint64_t branch_counter_ = 0;
  std::uint64_t emitted_ = 0;
  std::uint64_t rooted_ = 0;
  // scratch
  std::vector<int> phi_, mark_, label_, old_of_, ident_;
  int stamp_ = 0;
};

// Materialises the enumeration (intended for small parameters).
std::vector<CombinatorialMap> enumerate_maps(int vertices, int edges, bool monogon_free,
                                             const EnumerationLimits& limits = {});

}  // namespace knotforge::graphs
