#include "knotforge/combinatorial_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "knotforge/error.hpp"

namespace knotforge::graphs {

namespace {

std::vector<std::vector<int>> cycles_of(int n, auto next) {
  std::vector<std::vector<int>> out;
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    auto& cyc = out.emplace_back();
    for (int e = d; !seen[e]; e = next(e)) {
      seen[e] = 1;
      cyc.push_back(e);
    }
  }
  return out;
}

}  // namespace

CombinatorialMap::CombinatorialMap(std::vector<int> rotation, std::vector<int> involution)
    : rotation_(std::move(rotation)), involution_(std::move(involution)) {
  const int n = static_cast<int>(rotation_.size());
  if (static_cast<int>(involution_.size()) != n) throw Error(Errc::MalformedMap, "rotation/involution size mismatch");
  if (n == 0 || n % 2 != 0) throw Error(Errc::MalformedMap, "dart count must be positive and even");
  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    const int r = rotation_[d];
    if (r < 0 || r >= n || hit[r]) throw Error(Errc::MalformedMap, "rotation is not a permutation");
    hit[r] = 1;
    const int a = involution_[d];
    if (a < 0 || a >= n) throw Error(Errc::MalformedMap, "involution out of range");
    if (a == d) throw Error(Errc::MalformedMap, "involution has a fixed point at dart " + std::to_string(d));
    if (involution_[a] != d) throw Error(Errc::MalformedMap, "involution is not an involution");
  }
}

CombinatorialMap CombinatorialMap::from_vertex_cycles(const std::vector<std::vector<int>>& cycles,
                                                      std::vector<int> involution) {
  const int n = static_cast<int>(involution.size());
  std::vector<int> rotation(n, -1);
  for (const auto& cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int d = cyc[i];
      if (d < 0 || d >= n || rotation[d] != -1) throw Error(Errc::MalformedMap, "vertex cycles do not partition darts");
      rotation[d] = cyc[(i + 1) % cyc.size()];
    }
  }
  if (std::find(rotation.begin(), rotation.end(), -1) != rotation.end())
    throw Error(Errc::MalformedMap, "vertex cycles do not cover all darts");
  return CombinatorialMap(std::move(rotation), std::move(involution));
}

int CombinatorialMap::vertices() const { return static_cast<int>(vertex_cycles().size()); }

int CombinatorialMap::faces() const { return static_cast<int>(face_cycles().size()); }

std::vector<std::vector<int>> CombinatorialMap::vertex_cycles() const {
  return cycles_of(darts(), [this](int d) { return rotation_[d]; });
}

std::vector<std::vector<int>> CombinatorialMap::face_cycles() const {
  return cycles_of(darts(), [this](int d) { return face_next(d); });
}

std::vector<int> CombinatorialMap::edge_ids() const {
  std::vector<int> ids(darts(), -1);
  int next = 0;
  for (int d = 0; d < darts(); ++d) {
    if (ids[d] != -1) continue;
    ids[d] = ids[involution_[d]] = next++;
  }
  return ids;
}

bool CombinatorialMap::connected() const {
  std::vector<char> seen(darts(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    for (int e : {rotation_[d], involution_[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        ++count;
        stack.push_back(e);
      }
    }
  }
  return count == darts();
}

std::vector<int> rooted_code(std::span<const int> rotation, std::span<const int> involution, int root) {
  const int n = static_cast<int>(rotation.size());
  std::vector<int> label(n, -1);
  std::vector<int> old_of(n, -1);
  std::vector<int> code;
  code.reserve(2 * n + 1);
  int next = 0;
  auto open_vertex = [&](int entry) {
    int deg = 0;
    int d = entry;
    do {
      label[d] = next;
      old_of[next++] = d;
      d = rotation[d];
      ++deg;
    } while (d != entry);
    return deg;
  };
  code.push_back(open_vertex(root));
  for (int k = 0; k < n; ++k) {
    if (old_of[k] < 0) throw Error(Errc::MalformedMap, "map is not connected");
    const int partner = involution[old_of[k]];
    if (label[partner] < 0) {
      const int deg = open_vertex(partner);
      code.push_back(label[partner]);
      code.push_back(deg);
    } else {
      code.push_back(label[partner]);
    }
  }
  return code;
}

CombinatorialMap relabel_from_root(const CombinatorialMap& map, int root) {
  const int n = map.darts();
  std::vector<int> label(n, -1);
  std::vector<int> old_of;
  old_of.reserve(n);
  auto open_vertex = [&](int entry) {
    int d = entry;
    do {
      label[d] = static_cast<int>(old_of.size());
      old_of.push_back(d);
      d = map.rotate(d);
    } while (d != entry);
  };
  open_vertex(root);
  for (std::size_t k = 0; k < old_of.size(); ++k) {
    const int partner = map.opposite(old_of[k]);
    if (label[partner] < 0) open_vertex(partner);
  }
  if (static_cast<int>(old_of.size()) != n) throw Error(Errc::MalformedMap, "map is not connected");
  std::vector<int> rotation(n);
  std::vector<int> involution(n);
  for (int k = 0; k < n; ++k) {
    rotation[k] = label[map.rotate(old_of[k])];
    involution[k] = label[map.opposite(old_of[k])];
  }
  return CombinatorialMap(std::move(rotation), std::move(involution));
}

std::vector<int> CombinatorialMap::canonical_code() const {
  std::vector<int> best = rooted_code(rotation_, involution_, 0);
  for (int r = 1; r < darts(); ++r) {
    auto code = rooted_code(rotation_, involution_, r);
    if (code < best) best = std::move(code);
  }
  return best;
}

}  // namespace knotforge::graphs
