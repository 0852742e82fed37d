#include "z2lab/search.hpp"

#include <algorithm>
#include <atomic>
#include <climits>
#include <stdexcept>
#include <thread>
#include <vector>

namespace z2lab {

namespace {

// Shared flag/rotation machinery for both searches. Rotations are encoded as
// an explicit successor table per (edge, endpoint side) so leaf tracing stays
// allocation-free.
struct Enumerator {
  const Graph& g;
  int n, m;
  int mirror_vertex;                       // lowest id among maximum degree
  std::vector<std::vector<int>> incident;  // ascending edge ids per vertex
  std::vector<int> rot_next;               // successor edge per (edge,side)
  std::vector<int> rot_prev;
  std::vector<int> assigned_upto;  // vertices 0..k-1 assigned
  std::vector<int> suffix_deg;     // sum of degrees of vertices >= k

  explicit Enumerator(const Graph& graph) : g(graph), n(graph.num_vertices()), m(graph.num_edges()) {
    incident.resize(n);
    int maxdeg = -1;
    mirror_vertex = 0;
    for (int v = 0; v < n; ++v) {
      for (const Graph::Incidence& inc : g.incident(v)) incident[v].push_back(inc.edge);
      if (g.degree(v) > maxdeg) {
        maxdeg = g.degree(v);
        mirror_vertex = v;
      }
    }
    rot_next.assign(size_t(m) * 2, -1);
    rot_prev.assign(size_t(m) * 2, -1);
    suffix_deg.assign(n + 1, 0);
    for (int v = n - 1; v >= 0; --v) suffix_deg[v] = suffix_deg[v + 1] + g.degree(v);
  }

  int side(int e, int v) const { return g.edge(e).first == v ? 0 : 1; }

  void install_rotation(int v, const std::vector<int>& rot) {
    int d = static_cast<int>(rot.size());
    for (int i = 0; i < d; ++i) {
      int e = rot[i], f = rot[(i + 1) % d];
      rot_next[size_t(e) * 2 + side(e, v)] = f;
      rot_prev[size_t(f) * 2 + side(f, v)] = e;
    }
  }
};

// Counts closed face orbits on the 2E directed edges of an all-positive
// scheme restricted to vertices < upto; `closed_only` aborts orbits touching
// unassigned vertices. Returns -1 only on malformed data.
struct OrientableFaceCounter {
  std::vector<uint32_t> mark;
  uint32_t epoch = 0;

  int count(const Enumerator& en, int upto, int* open_flags_out = nullptr) {
    mark.assign(size_t(en.m) * 2, 0);
    ++epoch;
    int faces = 0, open = 0;
    for (int start = 0; start < 2 * en.m; ++start) {
      if (mark[start] == epoch) continue;
      int flag = start;
      bool closed = true;
      while (true) {
        mark[flag] = epoch;
        int e = flag >> 1;
        int dir = flag & 1;
        int v = dir ? en.g.edge(e).second : en.g.edge(e).first;
        if (v >= upto) {
          closed = false;
          break;
        }
        int f = en.rot_next[size_t(e) * 2 + en.side(e, v)];
        int ndir = (en.g.edge(f).first == v) ? 1 : 0;
        flag = (f << 1) | ndir;
        if (flag == start) break;
        if (mark[flag] == epoch) {
          closed = false;  // ran into a previously dead segment
          break;
        }
      }
      if (closed)
        ++faces;
      else
        ++open;
    }
    if (open_flags_out) *open_flags_out = open;
    return faces;
  }
};

// Full face count for a scheme with signatures, on the 4E flag set.
struct SignedFaceCounter {
  std::vector<uint32_t> mark;
  uint32_t epoch = 0;

  int count(const Enumerator& en, const std::vector<int8_t>& sig) {
    mark.assign(size_t(en.m) * 4, 0);
    ++epoch;
    int faces = 0;
    for (int start = 0; start < 4 * en.m; ++start) {
      if (mark[start] == epoch) continue;
      ++faces;
      int flag = start;
      do {
        int sense = flag & 1;
        int dir = (flag >> 1) & 1;
        int e = flag >> 2;
        // mirror flag consumed alongside
        int msense = sense ^ 1 ^ (sig[e] < 0 ? 1 : 0);
        mark[flag] = epoch;
        mark[(size_t(e) << 2) | ((dir ^ 1) << 1) | msense] = epoch;
        int v = dir ? en.g.edge(e).second : en.g.edge(e).first;
        int f = sense == 0 ? en.rot_next[size_t(e) * 2 + en.side(e, v)]
                           : en.rot_prev[size_t(e) * 2 + en.side(e, v)];
        int nsense = sense ^ (sig[f] < 0 ? 1 : 0);
        int ndir = (en.g.edge(f).first == v) ? 1 : 0;
        flag = (f << 2) | (ndir << 1) | nsense;
      } while (flag != start);
    }
    return faces;
  }
};

// Candidate rotations of a vertex: first incident edge pinned, tail permuted
// in lexicographic order. At the mirror vertex only tails with
// tail <= reverse(tail) survive, one scheme per global reflection pair.
std::vector<std::vector<int>> rotation_candidates(const Enumerator& en, int v, bool canonical) {
  const auto& inc = en.incident[v];
  std::vector<std::vector<int>> out;
  if (inc.size() <= 1) {
    out.push_back(inc);
    return out;
  }
  std::vector<int> tail(inc.begin() + 1, inc.end());
  std::sort(tail.begin(), tail.end());
  do {
    if (canonical) {
      std::vector<int> rev(tail.rbegin(), tail.rend());
      if (rev < tail) continue;
    }
    std::vector<int> rot;
    rot.push_back(inc[0]);
    rot.insert(rot.end(), tail.begin(), tail.end());
    out.push_back(std::move(rot));
  } while (std::next_permutation(tail.begin(), tail.end()));
  return out;
}

struct WorkerBest {
  int value = INT_MAX;
  long subtree = -1;  // enumeration index of the top-level branch
  std::vector<std::vector<int>> rotations;
  std::vector<int8_t> signature;
};

struct SearchShared {
  std::atomic<int> incumbent{INT_MAX};
  std::atomic<uint64_t> nodes{0};
  std::atomic<bool> out_of_budget{false};
  uint64_t budget;
};

void note_nodes(SearchShared& sh, uint64_t k) {
  if (sh.nodes.fetch_add(k, std::memory_order_relaxed) + k > sh.budget)
    sh.out_of_budget.store(true, std::memory_order_relaxed);
}

// Orientable search worker over one top-level rotation branch.
struct OrientableWorker {
  Enumerator& en;
  SearchShared& sh;
  WorkerBest best;
  OrientableFaceCounter counter;
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<std::vector<int>>> cands;  // per vertex

  void dfs(int depth, long subtree) {
    if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
    if (depth == en.n) {
      note_nodes(sh, 1);
      int faces = counter.count(en, en.n);
      int chi = en.n - en.m + faces;
      int genus = (2 - chi) / 2;
      if (genus < best.value) {
        best.value = genus;
        best.subtree = subtree;
        best.rotations = chosen;
        int cur = sh.incumbent.load(std::memory_order_relaxed);
        while (genus < cur && !sh.incumbent.compare_exchange_weak(cur, genus)) {
        }
      }
      return;
    }
    // Bound: every still-open face must consume a corner at an unassigned
    // vertex, so F <= closed + remaining degree sum.
    int inc = std::min(best.value, sh.incumbent.load(std::memory_order_relaxed));
    if (inc < INT_MAX) {
      int needed = en.m - en.n + 4 - 2 * inc;  // faces needed to beat incumbent
      if (needed > en.suffix_deg[depth]) {
        note_nodes(sh, 1);
        int closed = counter.count(en, depth);
        if (closed + en.suffix_deg[depth] < needed) return;
      }
    }
    for (const auto& rot : cands[depth]) {
      en.install_rotation(depth, rot);
      chosen[depth] = rot;
      dfs(depth + 1, subtree);
      if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
    }
  }
};

// Euler-genus search worker: rotations enumerated the same way, then every
// cotree signature pattern is traced at the leaf.
struct EulerWorker {
  Enumerator& en;
  SearchShared& sh;
  const std::vector<int>& cotree;
  WorkerBest best;
  SignedFaceCounter counter;
  std::vector<std::vector<int>> chosen;
  std::vector<std::vector<std::vector<int>>> cands;
  std::vector<int8_t> sig;

  void dfs(int depth, long subtree) {
    if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
    if (depth == en.n) {
      uint64_t leaves = uint64_t(1) << cotree.size();
      note_nodes(sh, leaves);
      for (uint64_t mask = 0; mask < leaves; ++mask) {
        std::fill(sig.begin(), sig.end(), int8_t(1));
        for (size_t b = 0; b < cotree.size(); ++b)
          if ((mask >> b) & 1) sig[cotree[b]] = -1;
        int faces = counter.count(en, sig);
        int eg = 2 - en.n + en.m - faces;
        if (eg < best.value) {
          best.value = eg;
          best.subtree = subtree;
          best.rotations = chosen;
          best.signature = sig;
          int cur = sh.incumbent.load(std::memory_order_relaxed);
          while (eg < cur && !sh.incumbent.compare_exchange_weak(cur, eg)) {
          }
        }
        if (eg == 0) break;  // nothing beats the sphere
      }
      return;
    }
    for (const auto& rot : cands[depth]) {
      en.install_rotation(depth, rot);
      chosen[depth] = rot;
      dfs(depth + 1, subtree);
      if (sh.out_of_budget.load(std::memory_order_relaxed)) return;
    }
  }
};

EmbeddingScheme make_scheme(const Graph& g, const std::vector<std::vector<int>>& rotations,
                            const std::vector<int8_t>& signature) {
  EmbeddingScheme s;
  s.g = g;
  s.rotation = rotations;
  s.signature = signature.empty() ? std::vector<int8_t>(g.num_edges(), 1) : signature;
  return s;
}

template <typename MakeWorker>
SearchResult run_search(const Graph& g, const SearchOptions& opt, MakeWorker make_worker) {
  if (!g.is_connected()) throw std::invalid_argument("genus search: graph must be connected");

  Enumerator base(g);
  std::vector<std::vector<std::vector<int>>> cands(base.n);
  for (int v = 0; v < base.n; ++v)
    cands[v] = rotation_candidates(base, v, v == base.mirror_vertex);

  SearchShared sh;
  sh.budget = opt.budget;

  // Top-level branches: the first vertex with more than one candidate.
  int split_vertex = 0;
  while (split_vertex < base.n && cands[split_vertex].size() <= 1) ++split_vertex;

  int jobs = std::max(1, opt.jobs);
  long branches = split_vertex < base.n ? static_cast<long>(cands[split_vertex].size()) : 1;
  jobs = static_cast<int>(std::min<long>(jobs, branches));

  std::vector<WorkerBest> results(jobs);
  auto run_worker = [&](int wid) {
    Enumerator en(g);  // private successor tables
    auto w = make_worker(en, sh);
    w.cands = cands;
    w.chosen.assign(en.n, {});
    for (int v = 0; v < split_vertex; ++v) {
      en.install_rotation(v, cands[v].empty() ? std::vector<int>{} : cands[v][0]);
      if (!cands[v].empty()) w.chosen[v] = cands[v][0];
    }
    if (split_vertex >= en.n) {
      w.dfs(en.n, 0);
    } else {
      for (long b = wid; b < branches; b += jobs) {
        en.install_rotation(split_vertex, cands[split_vertex][b]);
        w.chosen[split_vertex] = cands[split_vertex][b];
        w.dfs(split_vertex + 1, b);
        if (sh.out_of_budget.load(std::memory_order_relaxed)) break;
      }
    }
    results[wid] = std::move(w.best);
  };

  if (jobs == 1) {
    run_worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int wid = 0; wid < jobs; ++wid) threads.emplace_back(run_worker, wid);
    for (auto& t : threads) t.join();
  }

  const WorkerBest* winner = nullptr;
  for (const auto& r : results) {
    if (r.value == INT_MAX) continue;
    if (!winner || r.value < winner->value ||
        (r.value == winner->value && r.subtree < winner->subtree))
      winner = &r;
  }
  SearchResult res;
  res.nodes = sh.nodes.load();
  res.exact = !sh.out_of_budget.load();
  if (winner) {
    res.value = winner->value;
    res.witness = make_scheme(g, winner->rotations, winner->signature);
  }
  return res;
}

}  // namespace

SearchResult min_genus_search(const Graph& g, const SearchOptions& opt) {
  if (g.num_edges() == 0) {
    SearchResult r;
    r.value = 0;
    r.exact = true;
    r.witness = EmbeddingScheme::with_default_rotation(g);
    if (!g.is_connected()) throw std::invalid_argument("genus search: graph must be connected");
    return r;
  }
  return run_search(g, opt, [](Enumerator& en, SearchShared& sh) {
    return OrientableWorker{en, sh};
  });
}

SearchResult min_euler_genus_search(const Graph& g, const SearchOptions& opt) {
  if (g.num_edges() == 0) {
    SearchResult r;
    r.value = 0;
    r.exact = true;
    r.witness = EmbeddingScheme::with_default_rotation(g);
    if (!g.is_connected()) throw std::invalid_argument("genus search: graph must be connected");
    return r;
  }
  SpanningForest f = spanning_forest(g);
  std::vector<int> cotree;
  for (int e = 0; e < g.num_edges(); ++e)
    if (!f.contains_edge(e)) cotree.push_back(e);
  if (cotree.size() > 24)
    throw std::invalid_argument("min_euler_genus_search: cotree too large for signature sweep");
  return run_search(g, opt, [&cotree, &g](Enumerator& en, SearchShared& sh) {
    EulerWorker w{en, sh, cotree};
    w.sig.assign(g.num_edges(), 1);
    return w;
  });
}

}  // namespace z2lab
