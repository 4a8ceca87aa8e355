#include "knotforge/map_enumerator.hpp"

#include <string>

namespace knotforge::graphs {

MapEnumerator::MapEnumerator(const EnumerationOptions& options) : opt_(options) {
  if (opt_.vertices < 1 || opt_.edges < 1) throw Error(Errc::LimitExceeded, "need at least one vertex and one edge");
  if (opt_.vertices > opt_.limits.max_vertices || opt_.edges > opt_.limits.max_edges)
    throw Error(Errc::LimitExceeded, "V=" + std::to_string(opt_.vertices) + " E=" + std::to_string(opt_.edges) +
                                         " outside configured limits V<=" + std::to_string(opt_.limits.max_vertices) +
                                         " E<=" + std::to_string(opt_.limits.max_edges));
  if (opt_.vertices > opt_.edges + 1) throw Error(Errc::LimitExceeded, "connected maps need V <= E + 1");
  if (opt_.shard_count < 1 || opt_.shard < 0 || opt_.shard >= opt_.shard_count)
    throw Error(Errc::LimitExceeded, "invalid shard");
  n_ = 2 * opt_.edges;
  alpha_.assign(n_, -1);
  sigma_.assign(n_, -1);
  sigma_inv_.assign(n_, -1);
  vstart_.assign(opt_.vertices, 0);
  vdeg_.assign(opt_.vertices, 0);
  phi_.assign(n_, -1);
  mark_.assign(n_, 0);
  label_.assign(n_, -1);
  old_of_.assign(n_, -1);
  ident_.assign(2 * n_ + 1, 0);
}

void MapEnumerator::open_vertex(int degree) {
  const int start = allocated_;
  for (int i = 0; i < degree; ++i) {
    const int d = start + i;
    sigma_[d] = start + (i + 1) % degree;
    sigma_inv_[d] = start + (i + degree - 1) % degree;
    phi_[d] = sigma_[d];
  }
  vstart_[vcount_] = start;
  vdeg_[vcount_] = degree;
  ++vcount_;
  allocated_ += degree;
}

void MapEnumerator::close_vertex() {
  --vcount_;
  allocated_ -= vdeg_[vcount_];
}

// The current labelling is the breadth-first labelling from dart 0. Reject it
// when another root produces a lexicographically smaller code.
bool MapEnumerator::is_canonical() {
  int len = 0;
  ident_[len++] = vdeg_[0];
  for (int k = 0, v = 1; k < n_; ++k) {
    ident_[len++] = alpha_[k];
    if (v < vcount_ && alpha_[k] == vstart_[v]) ident_[len++] = vdeg_[v++];
  }
  for (int root = 1; root < n_; ++root) {
    for (int d = 0; d < n_; ++d) label_[d] = -1;
    int next = 0;
    auto open = [&](int entry) {
      int deg = 0;
      int d = entry;
      do {
        label_[d] = next;
        old_of_[next++] = d;
        d = sigma_[d];
        ++deg;
      } while (d != entry);
      return deg;
    };
    int pos = 0;
    auto cmp = [&](int value) { return value - ident_[pos++]; };
    int c = cmp(open(root));
    for (int k = 0; c == 0 && k < n_; ++k) {
      const int partner = alpha_[old_of_[k]];
      if (label_[partner] < 0) {
        const int deg = open(partner);
        c = cmp(label_[partner]);
        if (c == 0) c = cmp(deg);
      } else {
        c = cmp(label_[partner]);
      }
    }
    if (c < 0) return false;
  }
  return true;
}

std::vector<CombinatorialMap> enumerate_maps(int vertices, int edges, bool monogon_free,
                                             const EnumerationLimits& limits) {
  EnumerationOptions opt;
  opt.vertices = vertices;
  opt.edges = edges;
  opt.monogon_free = monogon_free;
  opt.limits = limits;
  MapEnumerator gen(opt);
  std::vector<CombinatorialMap> out;
  gen.for_each([&](const MapView& m) { out.push_back(m.to_map()); });
  return out;
}

}  // namespace knotforge::graphs
