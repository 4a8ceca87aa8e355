#include "knotforge/parity.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "knotforge/error.hpp"

namespace knotforge::graphs {

VertexRelation relation(const LabeledVertex& a, const LabeledVertex& b) {
  if (a.torus < 0 || b.torus < 0 || a.torus != b.torus) return VertexRelation::Unrelated;
  return a.sign == b.sign ? VertexRelation::Parallel : VertexRelation::AntiParallel;
}

namespace {

void check_graph(const LabeledGraph& g, const char* name) {
  for (const auto& v : g.vertices)
    if (v.torus >= 0 && v.sign != 1 && v.sign != -1)
      throw Error(Errc::MalformedSample, std::string(name) + ": vertex sign must be +1 or -1");
  const int n = static_cast<int>(g.vertices.size());
  for (const auto& e : g.edges)
    for (int v : e)
      if (v < 0 || v >= n) throw Error(Errc::MalformedSample, std::string(name) + ": edge endpoint out of range");
}

}  // namespace

void check_well_formed(const LabeledPairSample& s) {
  check_graph(s.q, "q");
  check_graph(s.f, "f");
  const std::size_t m = s.q.edges.size();
  if (s.f.edges.size() != m || s.correspondence.size() != m)
    throw Error(Errc::MalformedSample, "edge sets are not in bijection");
  std::vector<char> hit(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    const int c = s.correspondence[e];
    if (c < 0 || static_cast<std::size_t>(c) >= m || hit[c])
      throw Error(Errc::MalformedSample, "correspondence is not a bijection");
    hit[c] = 1;
    for (int k = 0; k < 2; ++k)
      if (s.q.vertices[s.q.edges[e][k]].torus != s.f.vertices[s.f.edges[c][k]].torus)
        throw Error(Errc::MalformedSample, "arc " + std::to_string(e) + " ends on different tori in the two graphs");
  }
}

std::vector<int> parity_violations(const LabeledPairSample& s) {
  check_well_formed(s);
  std::vector<int> bad;
  for (std::size_t e = 0; e < s.q.edges.size(); ++e) {
    const auto& qe = s.q.edges[e];
    const auto& fe = s.f.edges[s.correspondence[e]];
    const VertexRelation rq = relation(s.q.vertices[qe[0]], s.q.vertices[qe[1]]);
    const VertexRelation rf = relation(s.f.vertices[fe[0]], s.f.vertices[fe[1]]);
    if (rq == VertexRelation::Unrelated) continue;  // then rf is too
    if ((rq == VertexRelation::Parallel) == (rf == VertexRelation::Parallel)) bad.push_back(static_cast<int>(e));
  }
  return bad;
}

bool validate_parity(const LabeledPairSample& s) { return parity_violations(s).empty(); }

LabeledPairSample synthetic_parity_sample(const std::vector<TorusPattern>& tori, int arcs, std::uint64_t seed,
                                          int cross_torus_share) {
  if (tori.empty() || arcs < 0) throw Error(Errc::MalformedSample, "need at least one torus");
  LabeledPairSample s;
  struct Layout {
    int f_base, q_base, e;
  };
  std::vector<Layout> layout;
  for (std::size_t t = 0; t < tori.size(); ++t) {
    const auto& tp = tori[t];
    if (tp.f_signs.empty() || tp.q_signs.empty())
      throw Error(Errc::MalformedSample, "each torus needs boundary components of both surfaces");
    const __int128 det = static_cast<__int128>(tp.slope_f.p()) * tp.slope_q.q() -
                         static_cast<__int128>(tp.slope_f.q()) * tp.slope_q.p();
    if (det == 0) throw Error(Errc::MalformedSample, "boundary slopes on a torus must intersect");
    layout.push_back({static_cast<int>(s.f.vertices.size()), static_cast<int>(s.q.vertices.size()), det > 0 ? 1 : -1});
    for (int sign : tp.f_signs) s.f.vertices.push_back({static_cast<int>(t), sign});
    for (int sign : tp.q_signs) s.q.vertices.push_back({static_cast<int>(t), sign});
  }
  check_graph(s.f, "f");
  check_graph(s.q, "q");

  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t n) { return static_cast<int>(std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)); };
  struct End {
    int t, i, j;
  };
  auto local_sign = [&](const End& x) {
    return tori[x.t].f_signs[x.i] * tori[x.t].q_signs[x.j] * layout[x.t].e;
  };
  auto random_end = [&](int t) {
    return End{t, pick(tori[t].f_signs.size()), pick(tori[t].q_signs.size())};
  };
  // Same-torus arcs need points of both local signs on that torus.
  std::vector<int> two_signed;
  for (int t = 0; t < static_cast<int>(tori.size()); ++t) {
    bool plus = false, minus = false;
    for (std::size_t i = 0; i < tori[t].f_signs.size(); ++i)
      for (std::size_t j = 0; j < tori[t].q_signs.size(); ++j)
        (local_sign({t, static_cast<int>(i), static_cast<int>(j)}) > 0 ? plus : minus) = true;
    if (plus && minus) two_signed.push_back(t);
  }
  if (two_signed.empty() && tori.size() < 2 && arcs > 0)
    throw Error(Errc::MalformedSample, "every point has the same local sign; no arc can exist");
  for (int a = 0; a < arcs; ++a) {
    const bool cross = tori.size() > 1 && (two_signed.empty() || pick(100) < cross_torus_share);
    End x{}, y{};
    if (cross) {
      const int t = pick(tori.size());
      int u = pick(tori.size() - 1);
      if (u >= t) ++u;
      x = random_end(t);
      y = random_end(u);
    } else {
      const int t = two_signed[pick(two_signed.size())];
      x = random_end(t);
      std::vector<End> options;
      for (int i = 0; i < static_cast<int>(tori[t].f_signs.size()); ++i)
        for (int j = 0; j < static_cast<int>(tori[t].q_signs.size()); ++j)
          if (local_sign({t, i, j}) == -local_sign(x)) options.push_back({t, i, j});
      y = options[pick(options.size())];
    }
    s.q.edges.push_back({layout[x.t].q_base + x.j, layout[y.t].q_base + y.j});
    s.f.edges.push_back({layout[x.t].f_base + x.i, layout[y.t].f_base + y.i});
  }
  // Shuffle the f edge order so the correspondence is not the identity.
  const std::size_t m = s.f.edges.size();
  std::vector<int> perm(m);
  for (std::size_t e = 0; e < m; ++e) perm[e] = static_cast<int>(e);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::array<int, 2>> shuffled(m);
  s.correspondence.assign(m, 0);
  for (std::size_t e = 0; e < m; ++e) {
    shuffled[perm[e]] = s.f.edges[e];
    s.correspondence[e] = perm[e];
  }
  s.f.edges = std::move(shuffled);
  return s;
}

}  // namespace knotforge::graphs
