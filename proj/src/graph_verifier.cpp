#include "knotforge/graph_verifier.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>
#include <thread>

#include "knotforge/bound_engine.hpp"
#include "knotforge/error.hpp"

namespace knotforge::graphs {

// --- faces ---------------------------------------------------------------

void FaceTracer::trace(std::span<const int> rotation, std::span<const int> involution) {
  rotation_ = rotation;
  involution_ = involution;
  const int n = static_cast<int>(rotation.size());
  darts_.resize(n);
  face_of_.assign(n, -1);
  start_.clear();
  int pos = 0;
  for (int d = 0; d < n; ++d) {
    if (face_of_[d] >= 0) continue;
    const int f = static_cast<int>(start_.size());
    start_.push_back(pos);
    for (int e = d; face_of_[e] < 0; e = rotation[involution[e]]) {
      face_of_[e] = f;
      darts_[pos++] = e;
    }
  }
  start_.push_back(pos);
}

bool FaceTracer::is_parallel_bigon(int f) const {
  if (degree(f) != 2) return false;
  const int a = dart(f, 0);
  const int b = dart(f, 1);
  return involution_[a] != b;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  void reset(int n) {
    parent.resize(n);
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

}  // namespace

FaceReport trace_faces(const CombinatorialMap& m, std::span<const int> marked_faces) {
  FaceTracer tr;
  tr.trace(m.rotation(), m.involution());
  FaceReport r;
  r.vertices = m.vertices();
  r.edges = m.edges();
  r.faces = tr.faces();
  r.euler_characteristic = r.vertices - r.edges + r.faces;
  std::vector<char> marked(r.faces, 0);
  for (int f : marked_faces) {
    if (f < 0 || f >= r.faces) throw Error(Errc::MalformedMap, "marked face " + std::to_string(f) + " out of range");
    marked[f] = 1;
  }
  const std::vector<int> edge = m.edge_ids();
  r.trivial.assign(r.edges, 0);
  UnionFind uf;
  uf.reset(r.edges);
  for (int f = 0; f < r.faces; ++f) {
    r.face_degrees.push_back(tr.degree(f));
    if (marked[f]) continue;
    if (tr.degree(f) == 1) {
      ++r.monogons;
      r.trivial[edge[tr.dart(f, 0)]] = 1;
    } else if (tr.is_parallel_bigon(f)) {
      const int a = edge[tr.dart(f, 0)];
      const int b = edge[tr.dart(f, 1)];
      r.bigons.push_back({std::min(a, b), std::max(a, b)});
      uf.unite(a, b);
    }
  }
  std::sort(r.face_degrees.begin(), r.face_degrees.end());
  std::sort(r.bigons.begin(), r.bigons.end());
  r.parallel_class.assign(r.edges, -1);
  std::vector<int> id_of_root(r.edges, -1);
  std::vector<char> has_nontrivial;
  for (int e = 0; e < r.edges; ++e) {
    const int root = uf.find(e);
    if (id_of_root[root] < 0) {
      id_of_root[root] = r.parallelism_classes++;
      has_nontrivial.push_back(0);
    }
    r.parallel_class[e] = id_of_root[root];
    if (!r.trivial[e]) has_nontrivial[r.parallel_class[e]] = 1;
  }
  r.nontrivial_classes = static_cast<int>(std::count(has_nontrivial.begin(), has_nontrivial.end(), 1));
  return r;
}

std::string describe(std::span<const int> rotation, std::span<const int> involution) {
  const int n = static_cast<int>(rotation.size());
  std::ostringstream os;
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    os << '(';
    for (int e = d; !seen[e]; e = rotation[e]) {
      if (e != d) os << ' ';
      os << e;
      seen[e] = 1;
    }
    os << ')';
  }
  os << " |";
  for (int d = 0; d < n; ++d)
    if (d < involution[d]) os << ' ' << d << '-' << involution[d];
  return os.str();
}

std::string describe(const CombinatorialMap& m) { return describe(m.rotation(), m.involution()); }

// --- sharded enumeration --------------------------------------------------

namespace {

// Runs the enumeration split into `threads` shards, one accumulator each;
// callers merge the accumulators in shard order, so results do not depend on
// scheduling.
template <class Acc, class PerMap>
std::vector<Acc> run_sharded(EnumerationOptions opt, int threads, const Acc& init, PerMap per_map) {
  threads = std::max(threads, 1);
  std::vector<Acc> acc(threads, init);
  auto work = [&](int shard) {
    EnumerationOptions o = opt;
    o.shard = shard;
    o.shard_count = threads;
    MapEnumerator gen(o);
    FaceTracer tracer;
    gen.for_each([&](const MapView& view) {
      tracer.trace(view.rotation, view.involution);
      per_map(acc[shard], view, tracer);
    });
  };
  if (threads == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < threads; ++s) pool.emplace_back(work, s);
    for (auto& t : pool) t.join();
  }
  return acc;
}

void keep_smallest(std::vector<std::string>& v, std::size_t cap) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  if (v.size() > cap) v.resize(cap);
}

int max_genus_for(int chi_min) { return chi_min > 2 ? -1 : (2 - chi_min) / 2; }

struct ParallelAcc {
  std::vector<ParallelPCell> cells;  // model-major, then genus
  std::vector<std::string> cex, wit;
};

enum Model { Closed = 0, Bordered = 1, Isolated = 2 };
const char* model_name(int m) { return m == Closed ? "closed" : m == Bordered ? "bordered" : "isolated"; }

}  // namespace

ParallelPReport verify_parallelP(const ParallelPOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  if (o.v_max < 1 || o.e_budget < 1) throw Error(Errc::LimitExceeded, "need v_max >= 1 and e_budget >= 1");
  if (o.v_max > o.limits.max_vertices || o.e_budget > o.limits.max_edges ||
      (o.bordered && o.bordered_e_budget > o.limits.max_edges))
    throw Error(Errc::LimitExceeded, "verification range exceeds configured enumeration limits");
  ParallelPReport rep;
  rep.options = o;
  const int g_cap = max_genus_for(o.chi_min);
  const std::size_t cap = static_cast<std::size_t>(std::max(o.witness_cap, 0));

  auto thr = [](int V, int chi) { return static_cast<int>(bounds::parallel_edges_threshold(V, chi)); };

  auto run = [&](int V, int E, int g_hi, bool closed_pass) {
    EnumerationOptions eo;
    eo.vertices = V;
    eo.edges = E;
    eo.monogon_free = closed_pass;
    eo.max_genus = g_hi;
    eo.limits = o.limits;
    const int G = g_hi + 1;
    ParallelAcc init;
    for (int m = 0; m < 3; ++m)
      for (int g = 0; g < G; ++g) {
        ParallelPCell c;
        c.model = model_name(m);
        c.vertices = V;
        c.edges = E;
        c.genus = g;
        init.cells.push_back(c);
      }
    auto shards = run_sharded(eo, o.threads, init, [&](ParallelAcc& acc, const MapView& view, const FaceTracer& tr) {
      const int chi_c = 2 - 2 * view.genus;
      int short_faces = 0;  // monogons and parallel bigons
      bool parallel = false;
      for (int f = 0; f < tr.faces(); ++f) {
        if (tr.degree(f) == 1) ++short_faces;
        if (tr.is_parallel_bigon(f)) {
          ++short_faces;
          parallel = true;
        }
      }
      auto note = [&](int model, bool in_scope, bool counterexample, bool tight) {
        ParallelPCell& c = acc.cells[model * G + view.genus];
        ++c.maps;
        c.in_scope += in_scope;
        if (counterexample) {
          ++c.counterexamples;
          acc.cex.push_back(std::string(model_name(model)) + " V=" + std::to_string(V) + " E=" + std::to_string(E) +
                            " g=" + std::to_string(view.genus) + " " + describe(view.rotation, view.involution));
        }
        if (tight) {
          ++c.tight;
          acc.wit.push_back(std::string(model_name(model)) + " V=" + std::to_string(V) + " E=" + std::to_string(E) +
                            " g=" + std::to_string(view.genus) + " " + describe(view.rotation, view.involution));
          if (acc.wit.size() > 4 * cap + 16) keep_smallest(acc.wit, cap);
        }
      };
      if (closed_pass) {
        const int t = thr(V, chi_c);
        const bool in_scope = chi_c > 0 ? E >= t : E > t;
        note(Closed, in_scope, in_scope && !parallel, chi_c <= 0 && E == t && !parallel);
        return;
      }
      // Marked faces: every monogon and parallel bigon becomes a non-disk
      // face, so no edge is trivial and none are parallel. Minimal marking
      // gives the smallest threshold.
      if (chi_c - 1 >= o.chi_min) {
        const int b = std::max(short_faces, 1);
        const int chi_s = chi_c - b;
        const bool in_scope = chi_s >= o.chi_min && E >= thr(V, chi_s);
        note(Bordered, in_scope, in_scope, false);
      }
      if (chi_c >= o.chi_min && V + 1 <= o.v_max) {
        const int k = std::max(short_faces, 1);  // isolated vertices, one per marked face
        bool in_scope = false;
        bool tight = false;
        if (V + k <= o.v_max) {
          const int t = thr(V + k, chi_c);
          in_scope = chi_c > 0 ? E >= t : E > t;
          tight = chi_c <= 0 && E == t;
        }
        note(Isolated, in_scope, in_scope, tight);
      }
    });
    ParallelAcc merged = init;
    for (auto& s : shards) {
      for (std::size_t i = 0; i < merged.cells.size(); ++i) {
        merged.cells[i].maps += s.cells[i].maps;
        merged.cells[i].in_scope += s.cells[i].in_scope;
        merged.cells[i].counterexamples += s.cells[i].counterexamples;
        merged.cells[i].tight += s.cells[i].tight;
      }
      merged.cex.insert(merged.cex.end(), s.cex.begin(), s.cex.end());
      keep_smallest(s.wit, cap);
      merged.wit.insert(merged.wit.end(), s.wit.begin(), s.wit.end());
    }
    for (const auto& c : merged.cells) {
      if (c.maps == 0) continue;
      rep.cells.push_back(c);
      rep.maps_examined += c.maps;
      rep.in_scope += c.in_scope;
      rep.counterexample_count += c.counterexamples;
      rep.witness_count += c.tight;
    }
    std::sort(merged.cex.begin(), merged.cex.end());
    rep.counterexamples.insert(rep.counterexamples.end(), merged.cex.begin(), merged.cex.end());
    rep.witnesses.insert(rep.witnesses.end(), merged.wit.begin(), merged.wit.end());
  };

  for (int V = 1; V <= o.v_max; ++V) {
    for (int E = std::max(1, V - 1); E <= o.e_budget; ++E) {
      // Thresholds grow with genus, so the relevant genera form a prefix.
      int g_hi = -1;
      for (int g = 0; g <= g_cap; ++g)
        if (E >= thr(V, 2 - 2 * g)) g_hi = g;
      if (g_hi < 0)
        rep.skipped.push_back("closed V=" + std::to_string(V) + " E=" + std::to_string(E));
      else
        run(V, E, g_hi, true);
    }
  }
  if (o.bordered) {
    for (int V = 1; V <= o.v_max; ++V) {
      for (int E = std::max(1, V - 1); E <= o.bordered_e_budget; ++E) {
        int g_hi = -1;
        for (int g = 0; g <= g_cap; ++g) {
          const int chi_c = 2 - 2 * g;
          if (chi_c - 1 >= o.chi_min && E >= thr(V, chi_c - 1)) g_hi = g;
          if (V + 1 <= o.v_max && E >= thr(V + 1, chi_c)) g_hi = g;
        }
        if (g_hi < 0)
          rep.skipped.push_back("marked V=" + std::to_string(V) + " E=" + std::to_string(E));
        else
          run(V, E, g_hi, false);
      }
    }
  }
  keep_smallest(rep.witnesses, cap);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ParallelPReport verify_parallelP(int v_max, int e_budget, int chi_min) {
  ParallelPOptions o;
  o.v_max = v_max;
  o.e_budget = e_budget;
  o.chi_min = chi_min;
  return verify_parallelP(o);
}

std::string ParallelPReport::text() const {
  std::ostringstream os;
  os << "# parallel-edges verification v1\n";
  os << "range: V<=" << options.v_max << " E<=" << options.e_budget << " chi>=" << options.chi_min;
  if (options.bordered) os << " marked-face E<=" << options.bordered_e_budget;
  os << "\n";
  os << "model V E genus maps in_scope counterexamples tight\n";
  for (const auto& c : cells)
    os << c.model << ' ' << c.vertices << ' ' << c.edges << ' ' << c.genus << ' ' << c.maps << ' ' << c.in_scope
       << ' ' << c.counterexamples << ' ' << c.tight << "\n";
  os << "skipped (no genus reaches the threshold): " << skipped.size() << "\n";
  os << "maps examined: " << maps_examined << "\n";
  os << "maps meeting the edge bound: " << in_scope << "\n";
  os << "counterexamples: " << counterexample_count << "\n";
  for (const auto& c : counterexamples) os << "  counterexample " << c << "\n";
  os << "tightness witnesses: " << witness_count << "\n";
  for (const auto& w : witnesses) os << "  witness " << w << "\n";
  os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

// --- parallelism classes of arcs ------------------------------------------

namespace {

struct ClassAcc {
  // indexed like the row list
  std::vector<int> best;
  std::vector<std::string> extremal;
  std::vector<std::uint64_t> maps, violations;
};

}  // namespace

bool ClassBoundReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const ClassBoundRow& r) { return r.violations == 0; });
}

ClassBoundReport verify_parallel_class_bound(const ClassBoundOptions& o) {
  const auto t0 = std::chrono::steady_clock::now();
  if (o.e_budget < 1 || o.e_budget > o.limits.max_edges)
    throw Error(Errc::LimitExceeded, "edge budget outside configured limits");
  if (o.max_punctures < 1) throw Error(Errc::LimitExceeded, "need at least one puncture");
  ClassBoundReport rep;
  rep.options = o;
  for (int h = 0; h <= o.max_genus; ++h)
    for (int p = 1; p <= o.max_punctures; ++p) {
      const int chi = 2 - 2 * h - p;
      if (chi < o.chi_min) continue;
      ClassBoundRow row;
      row.genus = h;
      row.punctures = p;
      row.chi = chi;
      row.bound = bounds::parallelism_class_bound(chi);
      rep.rows.push_back(row);
    }
  const int R = static_cast<int>(rep.rows.size());
  const int v_top = std::min(o.max_punctures, o.limits.max_vertices);
  for (int V = 1; V <= v_top; ++V) {
    for (int E = std::max(1, V - 1); E <= o.e_budget; ++E) {
      int g_hi = -1;
      for (const auto& r : rep.rows)
        if (r.punctures >= V) g_hi = std::max(g_hi, r.genus);
      if (g_hi < 0) continue;
      EnumerationOptions eo;
      eo.vertices = V;
      eo.edges = E;
      eo.max_genus = g_hi;
      eo.limits = o.limits;
      ClassAcc init{std::vector<int>(R, -1), std::vector<std::string>(R), std::vector<std::uint64_t>(R, 0),
                    std::vector<std::uint64_t>(R, 0)};
      auto shards = run_sharded(eo, o.threads, init, [&](ClassAcc& acc, const MapView& view, const FaceTracer& tr) {
        int short_faces = 0;
        for (int f = 0; f < tr.faces(); ++f) short_faces += tr.degree(f) == 1 || tr.is_parallel_bigon(f);
        for (int r = 0; r < R; ++r) {
          const ClassBoundRow& row = rep.rows[r];
          if (row.genus != view.genus || row.punctures < V) continue;
          // The p - V spare punctures must occupy every monogon and parallel
          // bigon; then no face is a disk of degree < 3 (a face traversing
          // one edge twice is fine), the arcs are essential and pairwise
          // non-isotopic, and each edge is its own class.
          if (short_faces > row.punctures - V) continue;
          const int classes = view.edges();
          ++acc.maps[r];
          if (classes > row.bound) ++acc.violations[r];
          if (classes < acc.best[r]) continue;
          const std::string desc = describe(view.rotation, view.involution);
          if (classes > acc.best[r] || desc < acc.extremal[r]) {
            acc.best[r] = classes;
            acc.extremal[r] = desc;
          }
        }
      });
      for (const auto& s : shards)
        for (int r = 0; r < R; ++r) {
          auto& row = rep.rows[r];
          row.maps += s.maps[r];
          row.violations += s.violations[r];
          if (s.best[r] < 0) continue;
          const std::string tagged = "V=" + std::to_string(V) + " E=" + std::to_string(E) + " " + s.extremal[r];
          const bool tie = s.best[r] == row.max_classes && (row.extremal.empty() || tagged < row.extremal);
          if (s.best[r] > row.max_classes || tie) {
            row.max_classes = s.best[r];
            row.extremal = tagged;
          }
        }
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

ClassBoundReport verify_parallel_class_bound(int e_budget) {
  ClassBoundOptions o;
  o.e_budget = e_budget;
  return verify_parallel_class_bound(o);
}

std::string ClassBoundReport::text() const {
  std::ostringstream os;
  os << "# arc-class bound verification v1\n";
  os << "range: genus<=" << options.max_genus << " punctures<=" << options.max_punctures
     << " chi>=" << options.chi_min << " E<=" << options.e_budget << "\n";
  os << "genus punctures chi bound max_classes attained maps violations extremal\n";
  for (const auto& r : rows)
    os << r.genus << ' ' << r.punctures << ' ' << r.chi << ' ' << r.bound << ' ' << r.max_classes << ' '
       << (r.attained() ? "yes" : "no") << ' ' << r.maps << ' ' << r.violations << ' '
       << (r.extremal.empty() ? "-" : r.extremal) << "\n";
  os << "result: " << (ok() ? "PASS" : "FAIL") << "\n";
  return os.str();
}

}  // namespace knotforge::graphs
