#include "z2lab/families.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace z2lab {

KuratowskiKind kuratowski_kind_from_char(char c) {
  switch (c) {
    case 'a': return KuratowskiKind::A;
    case 'b': return KuratowskiKind::B;
    case 'c': return KuratowskiKind::C;
    case 'd': return KuratowskiKind::D;
    case 'e': return KuratowskiKind::E;
    case 'f': return KuratowskiKind::F;
    case 'g': return KuratowskiKind::G;
    case 'h': return KuratowskiKind::H;
    default: throw std::invalid_argument("kuratowski kind must be one of a..h");
  }
}

Graph gen_complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph gen_complete_bipartite(int a, int b) {
  Graph g(a + b);
  for (int u = 0; u < a; ++u)
    for (int v = 0; v < b; ++v) g.add_edge(u, a + v);
  return g;
}

Graph gen_cycle(int n) {
  Graph g(n);
  for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph gen_k5() {
  Graph g = gen_complete(5);
  for (int v = 0; v < 5; ++v) g.set_label(v, "v" + std::to_string(v));
  return g;
}

Graph gen_k33() {
  // Parts {a,b,c} and {u0,u1,u2}; edges grouped by u_i.
  Graph g(6);
  const char* part1[] = {"a", "b", "c"};
  for (int i = 0; i < 3; ++i) g.set_label(i, part1[i]);
  for (int i = 0; i < 3; ++i) g.set_label(3 + i, "u" + std::to_string(i));
  for (int i = 0; i < 3; ++i)
    for (int p = 0; p < 3; ++p) g.add_edge(p, 3 + i);
  return g;
}

namespace {

std::string copy_label(const std::string& base, int copy) {
  return base + ":" + std::to_string(copy);
}

// t disjoint copies of `h`, optionally gluing the listed vertices of h into
// shared vertices placed first (with the given labels).
Graph disjoint_copies(const Graph& h, int t, const std::vector<int>& shared,
                      const std::vector<std::string>& shared_labels) {
  int n = h.num_vertices();
  int priv = n - static_cast<int>(shared.size());
  Graph g(static_cast<int>(shared.size()) + priv * t);
  std::vector<int> shared_slot(n, -1);
  for (size_t i = 0; i < shared.size(); ++i) {
    shared_slot[shared[i]] = static_cast<int>(i);
    g.set_label(static_cast<int>(i), shared_labels[i]);
  }
  auto id_of = [&](int copy, int v) {
    if (shared_slot[v] >= 0) return shared_slot[v];
    int rank = 0;
    for (int u = 0; u < v; ++u)
      if (shared_slot[u] < 0) ++rank;
    return static_cast<int>(shared.size()) + copy * priv + rank;
  };
  for (int copy = 0; copy < t; ++copy) {
    for (int v = 0; v < n; ++v)
      if (shared_slot[v] < 0) {
        std::string base = h.label(v).empty() ? "v" + std::to_string(v) : h.label(v);
        g.set_label(id_of(copy, v), copy_label(base, copy));
      }
    for (int e = 0; e < h.num_edges(); ++e) {
      auto [u, v] = h.edge(e);
      g.add_edge(id_of(copy, u), id_of(copy, v));
    }
  }
  return g;
}

}  // namespace

Amalgamation gen_amalgamation(const Graph& h, int x, int y, int t) {
  if (t < 1) throw std::invalid_argument("gen_amalgamation: t must be >= 1");
  if (x == y) throw std::invalid_argument("gen_amalgamation: x and y must be distinct");
  if (h.find_edge(x, y)) throw std::invalid_argument("gen_amalgamation: x and y must be nonadjacent");
  Amalgamation am;
  am.graph = disjoint_copies(h, t, {x, y}, {"x", "y"});
  am.x = 0;
  am.y = 1;
  am.t = t;
  am.copy_of.assign(am.graph.num_vertices(), -1);
  int priv = h.num_vertices() - 2;
  am.vertex_map.assign(t, std::vector<int>(h.num_vertices(), -1));
  for (int copy = 0; copy < t; ++copy) {
    am.vertex_map[copy][x] = 0;
    am.vertex_map[copy][y] = 1;
    int rank = 0;
    for (int v = 0; v < h.num_vertices(); ++v) {
      if (v == x || v == y) continue;
      int id = 2 + copy * priv + rank++;
      am.vertex_map[copy][v] = id;
      am.copy_of[id] = copy;
    }
  }
  return am;
}

Graph gen_kuratowski(KuratowskiKind kind, int t) {
  if (t < 1) throw std::invalid_argument("gen_kuratowski: t must be >= 1");
  switch (kind) {
    case KuratowskiKind::A: {
      Graph g(3 + t);
      g.set_label(0, "a");
      g.set_label(1, "b");
      g.set_label(2, "c");
      for (int i = 0; i < t; ++i) g.set_label(3 + i, "u" + std::to_string(i));
      for (int i = 0; i < t; ++i)
        for (int p = 0; p < 3; ++p) g.add_edge(p, 3 + i);
      return g;
    }
    case KuratowskiKind::B:
      return disjoint_copies(gen_k5(), t, {}, {});
    case KuratowskiKind::C:
      return disjoint_copies(gen_k33(), t, {}, {});
    case KuratowskiKind::D:
      return disjoint_copies(gen_k5(), t, {0}, {"x"});
    case KuratowskiKind::E:
      return disjoint_copies(gen_k33(), t, {0}, {"x"});
    case KuratowskiKind::F: {
      // t copies of K5 sharing an (adjacent) pair; the shared edge is kept once.
      Graph k5e = gen_k5();
      Graph h(5);
      for (int v = 0; v < 5; ++v) h.set_label(v, k5e.label(v));
      for (int e = 0; e < k5e.num_edges(); ++e) {
        auto [u, v] = k5e.edge(e);
        if (!(u == 0 && v == 1)) h.add_edge(u, v);
      }
      Graph g = gen_amalgamation(h, 0, 1, t).graph;
      g.add_edge(0, 1);
      return g;
    }
    case KuratowskiKind::G: {
      // t copies of K_{3,3} sharing an adjacent pair (a, u0); shared edge kept once.
      Graph k33 = gen_k33();
      Graph h(6);
      for (int v = 0; v < 6; ++v) h.set_label(v, k33.label(v));
      for (int e = 0; e < k33.num_edges(); ++e) {
        auto [u, v] = k33.edge(e);
        if (!(u == 0 && v == 3)) h.add_edge(u, v);
      }
      Graph g = gen_amalgamation(h, 0, 3, t).graph;
      g.add_edge(0, 1);
      return g;
    }
    case KuratowskiKind::H:
      return gen_amalgamation(gen_k33(), 0, 1, t).graph;
  }
  throw std::invalid_argument("gen_kuratowski: bad kind");
}

int projective_grid_vertex(int r, int s, int i, int j) {
  if (i < 1 || i > r || j < 1 || j > s)
    throw std::invalid_argument("projective_grid_vertex: out of range");
  return (i - 1) * s + (j - 1);
}

namespace {

Graph projective_grid_minus(int r, int s, const std::set<std::pair<int, int>>& removed) {
  if (r < 3 || s < 3) throw std::invalid_argument("gen_projective_grid: r,s must be >= 3");
  Graph g(r * s);
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j)
      g.set_label(projective_grid_vertex(r, s, i, j),
                  std::to_string(i) + "," + std::to_string(j));
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (!removed.count({a, b})) g.add_edge(a, b);
  };
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j < s; ++j)
      add(projective_grid_vertex(r, s, i, j), projective_grid_vertex(r, s, i, j + 1));
  for (int i = 1; i < r; ++i)
    for (int j = 1; j <= s; ++j)
      add(projective_grid_vertex(r, s, i, j), projective_grid_vertex(r, s, i + 1, j));
  for (int i = 1; i <= r; ++i)
    add(projective_grid_vertex(r, s, i, 1), projective_grid_vertex(r, s, r + 1 - i, s));
  return g;
}

}  // namespace

Graph gen_projective_grid(int r, int s) { return projective_grid_minus(r, s, {}); }

Graph gen_projective_wall(int t) {
  if (t < 3) throw std::invalid_argument("gen_projective_wall: t must be >= 3");
  int r = t;
  int s = (t % 2) ? 2 * t - 1 : 2 * t;
  std::set<std::pair<int, int>> removed;
  auto mark = [&](int i, int j) {
    if (i < 1 || i + 1 > r || j < 1 || j > s) return;
    int a = projective_grid_vertex(r, s, i, j);
    int b = projective_grid_vertex(r, s, i + 1, j);
    if (a > b) std::swap(a, b);
    removed.insert({a, b});
  };
  int jmax_even_col = (t % 2) ? t - 1 : t;  // columns 2j
  for (int i = 1; i < r; i += 2)
    for (int j = 1; j <= jmax_even_col; ++j) mark(i, 2 * j);
  for (int i = 2; i < r; i += 2)
    for (int j = 1; j <= t; ++j) mark(i, 2 * j - 1);
  return projective_grid_minus(r, s, removed);
}

Amalgamation amalgamation_from_labels(const Graph& g) {
  Amalgamation am;
  am.graph = g;
  am.x = g.vertex_by_label("x");
  am.y = g.vertex_by_label("y");
  am.copy_of.assign(g.num_vertices(), -1);
  int t = 0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (v == am.x || v == am.y) continue;
    const std::string& l = g.label(v);
    auto pos = l.rfind(':');
    if (pos == std::string::npos)
      throw std::invalid_argument("amalgamation_from_labels: vertex without copy label");
    int copy = std::stoi(l.substr(pos + 1));
    am.copy_of[v] = copy;
    t = std::max(t, copy + 1);
  }
  am.t = t;
  return am;
}

WingDecomposition wing_decomposition(const Graph& h, int x, int y, int w_override) {
  if (x == y || x < 0 || y < 0 || x >= h.num_vertices() || y >= h.num_vertices())
    throw std::invalid_argument("wing_decomposition: bad x,y");
  if (h.find_edge(x, y)) throw std::invalid_argument("wing_decomposition: x,y must be nonadjacent");

  WingDecomposition wd;
  wd.x = x;
  wd.y = y;
  wd.in_forest.assign(h.num_edges(), 0);

  // F': BFS tree of H-x-y from the lowest remaining vertex.
  std::vector<char> seen(h.num_vertices(), 0);
  seen[x] = seen[y] = 1;
  int root = -1;
  for (int v = 0; v < h.num_vertices(); ++v)
    if (!seen[v]) {
      root = v;
      break;
    }
  if (root < 0) throw std::invalid_argument("wing_decomposition: H-x-y is empty");
  std::vector<int> queue{root};
  seen[root] = 1;
  int covered = 1;
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int v = queue[qi];
    for (const Graph::Incidence& inc : h.incident(v)) {
      if (inc.to == x || inc.to == y || seen[inc.to]) continue;
      seen[inc.to] = 1;
      ++covered;
      wd.in_forest[inc.edge] = 1;
      wd.forest_edges.push_back(inc.edge);
      queue.push_back(inc.to);
    }
  }
  if (covered != h.num_vertices() - 2)
    throw std::invalid_argument("wing_decomposition: H-x-y is disconnected");

  // F = F' plus one edge attaching x; x becomes a leaf of F.
  int x_tree_edge = -1;
  for (const Graph::Incidence& inc : h.incident(x))
    if (inc.to != y) {
      x_tree_edge = inc.edge;
      break;
    }
  if (x_tree_edge < 0) throw std::invalid_argument("wing_decomposition: x has no neighbor in H-x-y");
  wd.in_forest[x_tree_edge] = 1;
  wd.forest_edges.push_back(x_tree_edge);

  // w: a neighbor of y, lowest id unless overridden.
  if (w_override >= 0) {
    if (!h.find_edge(y, w_override))
      throw std::invalid_argument("wing_decomposition: w override not adjacent to y");
    wd.w = w_override;
  } else {
    if (h.incident(y).empty()) throw std::invalid_argument("wing_decomposition: y is isolated");
    wd.w = h.incident(y).front().to;
  }
  wd.h_edge = *h.find_edge(y, wd.w);

  for (int e = 0; e < h.num_edges(); ++e) {
    if (wd.in_forest[e] || e == wd.h_edge) continue;
    if (h.edge_has_vertex(e, x))
      wd.e_edges.push_back(e);
    else if (h.edge_has_vertex(e, y))
      wd.f_edges.push_back(e);
    else
      wd.g_edges.push_back(e);
  }
  return wd;
}

int k3t_param(const Graph& g) {
  int a = g.vertex_by_label("a");
  int b = g.vertex_by_label("b");
  int c = g.vertex_by_label("c");
  int t = g.num_vertices() - 3;
  if (t < 1) throw std::invalid_argument("k3t_param: too few vertices");
  for (int i = 0; i < t; ++i) {
    int u = g.vertex_by_label("u" + std::to_string(i));
    if (!g.find_edge(a, u) || !g.find_edge(b, u) || !g.find_edge(c, u) || g.degree(u) != 3)
      throw std::invalid_argument("k3t_param: graph is not a labeled K_{3,t}");
  }
  if (g.num_edges() != 3 * t) throw std::invalid_argument("k3t_param: graph is not K_{3,t}");
  return t;
}

K3tCycles k3t_cycles(const Graph& k3t, int t) {
  if (t < 2) throw std::invalid_argument("k3t_cycles: t must be >= 2");
  if (k3t_param(k3t) != t) throw std::invalid_argument("k3t_cycles: t mismatch");
  int a = k3t.vertex_by_label("a");
  int b = k3t.vertex_by_label("b");
  int c = k3t.vertex_by_label("c");
  auto u = [&](int i) { return k3t.vertex_by_label("u" + std::to_string(i)); };
  K3tCycles out;
  out.c.resize(t);
  out.c_prime.resize(t);
  for (int i = 1; i < t; ++i) {
    CycleVec ci(k3t.num_edges()), cpi(k3t.num_edges());
    ci.edges.set(*k3t.find_edge(a, u(i)), true);
    ci.edges.set(*k3t.find_edge(u(i), b), true);
    ci.edges.set(*k3t.find_edge(b, u(0)), true);
    ci.edges.set(*k3t.find_edge(u(0), a), true);
    cpi.edges.set(*k3t.find_edge(a, u(i)), true);
    cpi.edges.set(*k3t.find_edge(u(i), c), true);
    cpi.edges.set(*k3t.find_edge(c, u(0)), true);
    cpi.edges.set(*k3t.find_edge(u(0), a), true);
    out.c[i] = ci;
    out.c_prime[i] = cpi;
  }
  return out;
}

}  // namespace z2lab
