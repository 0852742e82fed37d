#include "z2lab/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace z2lab {

int Graph::add_edge(int u, int v) {
  if (u == v) throw std::invalid_argument("Graph: loops are not allowed");
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices())
    throw std::invalid_argument("Graph: vertex id out of range");
  if (auto e = find_edge(u, v)) return *e;
  if (u > v) std::swap(u, v);
  int id = num_edges();
  edges_.emplace_back(u, v);
  auto insert_sorted = [&](int at, int to) {
    Incidence inc{to, id};
    auto& lst = adj_[at];
    auto it = std::lower_bound(lst.begin(), lst.end(), inc, [](const Incidence& a, const Incidence& b) {
      return a.to != b.to ? a.to < b.to : a.edge < b.edge;
    });
    lst.insert(it, inc);
  };
  insert_sorted(u, v);
  insert_sorted(v, u);
  return id;
}

std::optional<int> Graph::find_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return std::nullopt;
  for (const Incidence& inc : adj_[u])
    if (inc.to == v) return inc.edge;
  return std::nullopt;
}

int Graph::vertex_by_label(const std::string& label) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (labels_[v] == label) return v;
  throw std::invalid_argument("Graph: no vertex labeled '" + label + "'");
}

std::vector<int> Graph::component_ids() const {
  std::vector<int> comp(num_vertices(), -1);
  int next = 0;
  for (int s = 0; s < num_vertices(); ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = next;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const Incidence& inc : adj_[v])
        if (comp[inc.to] < 0) {
          comp[inc.to] = next;
          q.push_back(inc.to);
        }
    }
    ++next;
  }
  return comp;
}

bool Graph::is_connected() const {
  if (num_vertices() == 0) return true;
  auto comp = component_ids();
  return *std::max_element(comp.begin(), comp.end()) == 0;
}

int Graph::girth() const {
  int best = -1;
  // BFS from every vertex; first repeated touch bounds the shortest cycle through the root.
  for (int s = 0; s < num_vertices(); ++s) {
    std::vector<int> dist(num_vertices(), -1), par_edge(num_vertices(), -1);
    dist[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
      int v = q.front();
      q.pop_front();
      for (const Incidence& inc : adj_[v]) {
        if (inc.edge == par_edge[v]) continue;
        if (dist[inc.to] < 0) {
          dist[inc.to] = dist[v] + 1;
          par_edge[inc.to] = inc.edge;
          q.push_back(inc.to);
        } else {
          int len = dist[v] + dist[inc.to] + 1;
          if (best < 0 || len < best) best = len;
        }
      }
    }
  }
  return best;
}

Graph Graph::induced(const std::vector<int>& keep, std::vector<int>* old_vertex_of,
                     std::vector<int>* old_edge_of) const {
  std::vector<int> new_id(num_vertices(), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_id[keep[i]] = static_cast<int>(i);
  Graph h(static_cast<int>(keep.size()));
  if (old_vertex_of) *old_vertex_of = keep;
  if (old_edge_of) old_edge_of->clear();
  for (int e = 0; e < num_edges(); ++e) {
    auto [u, v] = edges_[e];
    if (new_id[u] >= 0 && new_id[v] >= 0) {
      h.add_edge(new_id[u], new_id[v]);
      if (old_edge_of) old_edge_of->push_back(e);
    }
  }
  for (size_t i = 0; i < keep.size(); ++i) h.set_label(static_cast<int>(i), labels_[keep[i]]);
  return h;
}

std::vector<int> CycleVec::edge_ids() const {
  std::vector<int> ids;
  for (int e = 0; e < edges.length(); ++e)
    if (edges.get(e)) ids.push_back(e);
  return ids;
}

bool is_even_subgraph(const Graph& g, const CycleVec& c) {
  std::vector<int> deg(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e)
    if (c.contains(e)) {
      ++deg[g.edge(e).first];
      ++deg[g.edge(e).second];
    }
  for (int d : deg)
    if (d % 2) return false;
  return true;
}

std::vector<int> cycle_vertices(const Graph& g, const CycleVec& c) {
  std::vector<char> seen(g.num_vertices(), 0);
  for (int e = 0; e < g.num_edges(); ++e)
    if (c.contains(e)) seen[g.edge(e).first] = seen[g.edge(e).second] = 1;
  std::vector<int> out;
  for (int v = 0; v < g.num_vertices(); ++v)
    if (seen[v]) out.push_back(v);
  return out;
}

bool cycles_vertex_disjoint(const Graph& g, const CycleVec& a, const CycleVec& b) {
  std::vector<char> in_a(g.num_vertices(), 0);
  for (int v : cycle_vertices(g, a)) in_a[v] = 1;
  for (int v : cycle_vertices(g, b))
    if (in_a[v]) return false;
  return true;
}

Graph glue_vertices(const Graph& g, int u, int v) {
  if (u < 0 || v < 0 || u >= g.num_vertices() || v >= g.num_vertices())
    throw std::invalid_argument("glue_vertices: unknown vertex id");
  if (u == v) throw std::invalid_argument("glue_vertices: vertices must be distinct");
  int n = g.num_vertices();
  std::vector<int> new_id(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x)
    if (x != u && x != v) new_id[x] = next++;
  int w = next;  // the fresh vertex
  Graph h(next + 1);
  for (int x = 0; x < n; ++x)
    if (x != u && x != v) h.set_label(new_id[x], g.label(x));
  if (!g.label(u).empty() || !g.label(v).empty())
    h.set_label(w, g.label(u) + "+" + g.label(v));
  for (int e = 0; e < g.num_edges(); ++e) {
    auto [a, b] = g.edge(e);
    int na = (a == u || a == v) ? w : new_id[a];
    int nb = (b == u || b == v) ? w : new_id[b];
    if (na == nb) continue;  // the uv edge, if present, becomes a loop: dropped
    h.add_edge(na, nb);
  }
  return h;
}

SpanningForest spanning_forest(const Graph& g, const std::vector<int>& roots) {
  SpanningForest f;
  f.num_vertices = g.num_vertices();
  f.num_edges = g.num_edges();
  f.parent_vertex.assign(g.num_vertices(), -1);
  f.parent_edge.assign(g.num_vertices(), -1);
  f.in_forest.assign(g.num_edges(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  auto grow = [&](int root) {
    if (seen[root]) return;
    seen[root] = 1;
    f.roots.push_back(root);
    std::deque<int> q{root};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      f.bfs_order.push_back(x);
      for (const Graph::Incidence& inc : g.incident(x)) {
        if (seen[inc.to]) continue;
        seen[inc.to] = 1;
        f.parent_vertex[inc.to] = x;
        f.parent_edge[inc.to] = inc.edge;
        f.in_forest[inc.edge] = 1;
        f.tree_edges.push_back(inc.edge);
        q.push_back(inc.to);
      }
    }
  };
  for (int r : roots) {
    if (r < 0 || r >= g.num_vertices()) throw std::invalid_argument("spanning_forest: bad root");
    grow(r);
  }
  for (int v = 0; v < g.num_vertices(); ++v) grow(v);
  return f;
}

SpanningForest forest_from_edges(const Graph& g, const std::vector<int>& edges) {
  std::vector<char> allowed(g.num_edges(), 0);
  for (int e : edges) allowed[e] = 1;
  SpanningForest f;
  f.num_vertices = g.num_vertices();
  f.num_edges = g.num_edges();
  f.parent_vertex.assign(g.num_vertices(), -1);
  f.parent_edge.assign(g.num_vertices(), -1);
  f.in_forest.assign(g.num_edges(), 0);
  std::vector<char> seen(g.num_vertices(), 0);
  for (int root = 0; root < g.num_vertices(); ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    f.roots.push_back(root);
    std::deque<int> q{root};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      f.bfs_order.push_back(x);
      for (const Graph::Incidence& inc : g.incident(x)) {
        if (!allowed[inc.edge]) continue;
        if (seen[inc.to]) continue;
        seen[inc.to] = 1;
        f.parent_vertex[inc.to] = x;
        f.parent_edge[inc.to] = inc.edge;
        f.in_forest[inc.edge] = 1;
        f.tree_edges.push_back(inc.edge);
        q.push_back(inc.to);
      }
    }
  }
  if (f.tree_edges.size() != edges.size())
    throw std::invalid_argument("forest_from_edges: edge set contains a cycle");
  return f;
}

bool is_two_connected(const Graph& g) {
  int n = g.num_vertices();
  if (n < 3 || !g.is_connected()) return false;
  // Articulation vertices by the usual low-link DFS.
  std::vector<int> disc(n, -1), low(n, 0);
  int timer = 0;
  bool has_cut = false;
  std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
    disc[v] = low[v] = timer++;
    int children = 0;
    for (const Graph::Incidence& inc : g.incident(v)) {
      if (inc.edge == parent_edge) continue;
      if (disc[inc.to] < 0) {
        ++children;
        dfs(inc.to, inc.edge);
        low[v] = std::min(low[v], low[inc.to]);
        if (parent_edge >= 0 && low[inc.to] >= disc[v]) has_cut = true;
      } else {
        low[v] = std::min(low[v], disc[inc.to]);
      }
    }
    if (parent_edge < 0 && children > 1) has_cut = true;
  };
  dfs(0, -1);
  return !has_cut;
}

CycleVec fundamental_cycle(const Graph& g, const SpanningForest& f, int e) {
  if (e < 0 || e >= g.num_edges()) throw std::invalid_argument("fundamental_cycle: bad edge id");
  if (f.contains_edge(e)) throw std::invalid_argument("fundamental_cycle: edge is in the forest");
  auto [u, v] = g.edge(e);
  auto depth_of = [&](int x) {
    int d = 0;
    for (int y = x; y >= 0; y = f.parent_vertex[y]) ++d;
    return d;
  };
  int du = depth_of(u), dv = depth_of(v);
  CycleVec c(g.num_edges());
  c.edges.set(e, true);
  int a = u, b = v;
  while (du > dv) {
    c.edges.flip(f.parent_edge[a]);
    a = f.parent_vertex[a];
    --du;
  }
  while (dv > du) {
    c.edges.flip(f.parent_edge[b]);
    b = f.parent_vertex[b];
    --dv;
  }
  while (a != b) {
    if (a < 0 || b < 0)
      throw std::invalid_argument("fundamental_cycle: endpoints in different components");
    c.edges.flip(f.parent_edge[a]);
    c.edges.flip(f.parent_edge[b]);
    a = f.parent_vertex[a];
    b = f.parent_vertex[b];
  }
  return c;
}

CycleVec cycle_sum(const CycleVec& c1, const CycleVec& c2) {
  if (c1.edges.length() != c2.edges.length())
    throw std::invalid_argument("cycle_sum: cycles from different graphs");
  CycleVec r = c1;
  r.edges.xor_with(c2.edges);
  return r;
}

}  // namespace z2lab
