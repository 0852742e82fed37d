#include "z2lab/parity.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>

namespace z2lab {

int PlaneParityState::pair_index(int e1, int e2) const {
  if (e1 > e2) std::swap(e1, e2);
  int m = g.num_edges();
  return e1 * m + e2;
}

bool PlaneParityState::pair_independent(int e1, int e2) const {
  return independent[pair_index(e1, e2)] != 0;
}

uint8_t PlaneParityState::get(int e1, int e2) const { return parity[pair_index(e1, e2)]; }

namespace {

bool edges_share_vertex(const Graph& g, int e1, int e2) {
  auto [a, b] = g.edge(e1);
  auto [c, d] = g.edge(e2);
  return a == c || a == d || b == c || b == d;
}

}  // namespace

PlaneParityState convex_reference(const Graph& g, const std::vector<int>& order) {
  int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n)
    throw std::invalid_argument("convex_reference: order must list every vertex");
  std::vector<int> pos(n, -1);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    if (v < 0 || v >= n || pos[v] >= 0)
      throw std::invalid_argument("convex_reference: order is not a permutation");
    pos[v] = i;
  }
  PlaneParityState st;
  st.g = g;
  st.order = order;
  int m = g.num_edges();
  st.parity.assign(size_t(m) * m, 0);
  st.independent.assign(size_t(m) * m, 0);
  auto between = [&](int a, int b, int x) {
    int ta = (x - a + n) % n, tb = (b - a + n) % n;
    return ta > 0 && ta < tb;
  };
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = e1 + 1; e2 < m; ++e2) {
      if (edges_share_vertex(g, e1, e2)) continue;
      st.independent[st.pair_index(e1, e2)] = 1;
      auto [a, b] = g.edge(e1);
      auto [c, d] = g.edge(e2);
      bool cross = between(pos[a], pos[b], pos[c]) != between(pos[a], pos[b], pos[d]);
      if (cross) st.parity[st.pair_index(e1, e2)] = 1;
    }
  return st;
}

int vertex_edge_move_flip_count(const Graph& g, int v, int f) {
  if (g.edge_has_vertex(f, v))
    throw std::invalid_argument("vertex_edge_move: v must not lie on f");
  int flips = 0;
  for (const Graph::Incidence& inc : g.incident(v))
    if (!edges_share_vertex(g, inc.edge, f)) ++flips;
  return flips;
}

PlaneParityState vertex_edge_move(const PlaneParityState& state, int v, int f) {
  if (state.g.edge_has_vertex(f, v))
    throw std::invalid_argument("vertex_edge_move: v must not lie on f");
  PlaneParityState out = state;
  for (const Graph::Incidence& inc : state.g.incident(v)) {
    if (edges_share_vertex(state.g, inc.edge, f)) continue;
    out.parity[out.pair_index(inc.edge, f)] ^= 1;
  }
  return out;
}

int independent_odd_count(const PlaneParityState& state) {
  int m = state.g.num_edges();
  int count = 0;
  for (int e1 = 0; e1 < m; ++e1)
    for (int e2 = e1 + 1; e2 < m; ++e2)
      if (state.independent[state.pair_index(e1, e2)] && state.get(e1, e2)) ++count;
  return count;
}

bool deletion_cycle_check(const Graph& g, int u, int v) {
  if (!g.find_edge(u, v)) throw std::invalid_argument("deletion_cycle_check: u,v must be adjacent");
  std::vector<int> keep;
  for (int w = 0; w < g.num_vertices(); ++w)
    if (w != u && w != v) keep.push_back(w);
  Graph h = g.induced(keep);
  if (h.num_vertices() < 3 || h.num_edges() != h.num_vertices()) return false;
  if (!h.is_connected()) return false;
  for (int w = 0; w < h.num_vertices(); ++w)
    if (h.degree(w) != 2) return false;
  return true;
}

namespace {

enum class KnownGraph { None, K5, K33 };

KnownGraph recognize(const Graph& g) {
  if (g.num_vertices() == 5 && g.num_edges() == 10) return KnownGraph::K5;
  if (g.num_vertices() == 6 && g.num_edges() == 9) {
    for (int v = 0; v < 6; ++v)
      if (g.degree(v) != 3) return KnownGraph::None;
    // 3-regular bipartite on 3+3 with 9 edges is K_{3,3}.
    std::vector<int> color(6, -1);
    std::vector<int> q{0};
    color[0] = 0;
    for (size_t qi = 0; qi < q.size(); ++qi)
      for (const Graph::Incidence& inc : g.incident(q[qi])) {
        if (color[inc.to] < 0) {
          color[inc.to] = color[q[qi]] ^ 1;
          q.push_back(inc.to);
        } else if (color[inc.to] == color[q[qi]]) {
          return KnownGraph::None;
        }
      }
    return KnownGraph::K33;
  }
  return KnownGraph::None;
}

std::vector<int> k33_alternating_order(const Graph& g) {
  std::vector<int> color(6, -1), part0, part1;
  std::vector<int> q{0};
  color[0] = 0;
  for (size_t qi = 0; qi < q.size(); ++qi)
    for (const Graph::Incidence& inc : g.incident(q[qi]))
      if (color[inc.to] < 0) {
        color[inc.to] = color[q[qi]] ^ 1;
        q.push_back(inc.to);
      }
  for (int v = 0; v < 6; ++v) (color[v] == 0 ? part0 : part1).push_back(v);
  return {part0[0], part1[0], part0[1], part1[1], part0[2], part1[2]};
}

}  // namespace

KleitmanReport verify_kleitman(const Graph& g, uint64_t seed, int random_orders) {
  KleitmanReport rep;
  KnownGraph kind = recognize(g);
  if (kind == KnownGraph::None) {
    rep.covered = false;
    rep.graph_name = "unsupported";
    return rep;
  }
  rep.covered = true;
  rep.graph_name = kind == KnownGraph::K5 ? "K5" : "K_{3,3}";

  std::vector<int> ref_order;
  if (kind == KnownGraph::K5) {
    ref_order = {0, 1, 2, 3, 4};
  } else {
    ref_order = k33_alternating_order(g);
  }
  PlaneParityState ref = convex_reference(g, ref_order);
  rep.reference_count = independent_odd_count(ref);
  rep.reference_odd = rep.reference_count % 2 == 1;

  rep.all_moves_even = true;
  for (int v = 0; v < g.num_vertices(); ++v)
    for (int f = 0; f < g.num_edges(); ++f) {
      if (g.edge_has_vertex(f, v)) continue;
      ++rep.moves_checked;
      if (vertex_edge_move_flip_count(g, v, f) % 2 != 0) rep.all_moves_even = false;
    }

  std::mt19937_64 rng(seed);
  std::vector<int> order(g.num_vertices());
  for (int i = 0; i < g.num_vertices(); ++i) order[i] = i;
  rep.random_orders_all_odd = true;
  for (int r = 0; r < random_orders; ++r) {
    std::shuffle(order.begin(), order.end(), rng);
    ++rep.random_orders_checked;
    if (independent_odd_count(convex_reference(g, order)) % 2 != 1)
      rep.random_orders_all_odd = false;
  }
  return rep;
}

std::string KleitmanReport::to_text() const {
  std::ostringstream os;
  if (!covered) {
    os << "not covered: verifier applies to K5 and K_{3,3} only\n";
    return os.str();
  }
  os << "graph: " << graph_name << "\n";
  os << "reference independent-odd count: " << reference_count << " ("
     << (reference_odd ? "odd" : "even") << ")\n";
  os << "vertex-over-edge moves checked: " << moves_checked << ", all flip evenly: "
     << (all_moves_even ? "yes" : "no") << "\n";
  os << "random reference orders checked: " << random_orders_checked
     << ", all odd: " << (random_orders_all_odd ? "yes" : "no") << "\n";
  os << "conclusion: " << (pass() ? "parity invariant odd over the move-generated class" : "FAILED")
     << "\n";
  return os.str();
}

ForestParityResult kuratowski_forest_parity(const CrosscapDrawing& d,
                                            const std::vector<int>& forest_edges,
                                            const std::vector<int>& k_edges) {
  std::vector<char> in_forest(d.g.num_edges(), 0);
  for (int e : forest_edges) {
    in_forest[e] = 1;
    if (!d.y[e].is_zero())
      throw std::invalid_argument("kuratowski_forest_parity: drawing not normalized on the forest");
  }
  // K must be a K5 or K_{3,3} subgraph.
  std::vector<char> vertex_in_k(d.g.num_vertices(), 0);
  for (int e : k_edges) {
    vertex_in_k[d.g.edge(e).first] = 1;
    vertex_in_k[d.g.edge(e).second] = 1;
  }
  std::vector<int> k_vertices;
  for (int v = 0; v < d.g.num_vertices(); ++v)
    if (vertex_in_k[v]) k_vertices.push_back(v);
  std::vector<int> old_edge_of;
  Graph k = d.g.induced(k_vertices, nullptr, &old_edge_of);
  if (static_cast<int>(k_edges.size()) != k.num_edges() || recognize(k) == KnownGraph::None)
    throw std::invalid_argument("kuratowski_forest_parity: K is not a K5/K_{3,3} subgraph");

  ForestParityResult res;
  for (size_t i = 0; i < k_edges.size(); ++i)
    for (size_t j = i + 1; j < k_edges.size(); ++j) {
      int e = k_edges[i], f = k_edges[j];
      if (in_forest[e] || in_forest[f]) continue;
      if (edges_share_vertex(d.g, e, f)) continue;
      if (class_product(d, d.y[e], d.y[f])) ++res.count;
    }
  res.pass = res.count % 2 == 1;
  return res;
}

bool xy_wing_observation_holds(const Graph& h, int x, int y) {
  for (const Graph::Incidence& inc : h.incident(x)) {
    int u = inc.to;
    if (u == y) return false;  // wings have x,y nonadjacent
    std::vector<int> keep;
    for (int v = 0; v < h.num_vertices(); ++v)
      if (v != x && v != u) keep.push_back(v);
    std::vector<int> old_of;
    Graph rest = h.induced(keep, &old_of);
    if (rest.num_vertices() < 3 || rest.num_edges() != rest.num_vertices() ||
        !rest.is_connected())
      return false;
    int ydeg = -1;
    for (int v = 0; v < rest.num_vertices(); ++v) {
      if (rest.degree(v) != 2) return false;
      if (old_of[v] == y) ydeg = rest.degree(v);
    }
    if (ydeg != 2) return false;
  }
  return true;
}

}  // namespace z2lab
