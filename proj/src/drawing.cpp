#include "z2lab/drawing.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace z2lab {

CrosscapDrawing CrosscapDrawing::zero(const Graph& g, int h) {
  CrosscapDrawing d;
  d.g = g;
  d.h = h;
  d.y.assign(g.num_edges(), BitVec(h));
  return d;
}

void CrosscapDrawing::validate() const {
  if (static_cast<int>(y.size()) != g.num_edges())
    throw std::invalid_argument("CrosscapDrawing: one y vector per edge required");
  for (const BitVec& v : y)
    if (v.length() != h) throw std::invalid_argument("CrosscapDrawing: y length != h");
  for (const auto& [key, bit] : x) {
    auto [e1, e2] = key;
    if (e1 >= e2 || e1 < 0 || e2 >= g.num_edges())
      throw std::invalid_argument("CrosscapDrawing: bad X key");
    if (bit > 1) throw std::invalid_argument("CrosscapDrawing: X entries are bits");
  }
  if (form && (form->rows() != h || form->cols() != h))
    throw std::invalid_argument("CrosscapDrawing: form must be h x h");
}

uint8_t CrosscapDrawing::x_parity(int e1, int e2) const {
  if (e1 == e2) throw std::invalid_argument("x_parity: edge pair must be distinct");
  if (e1 > e2) std::swap(e1, e2);
  auto it = x.find({e1, e2});
  return it == x.end() ? 0 : it->second;
}

void CrosscapDrawing::set_x_parity(int e1, int e2, uint8_t bit) {
  if (e1 == e2) throw std::invalid_argument("set_x_parity: edge pair must be distinct");
  if (e1 > e2) std::swap(e1, e2);
  if (bit)
    x[{e1, e2}] = 1;
  else
    x.erase({e1, e2});
}

namespace {

bool edges_independent(const Graph& g, int e1, int e2) {
  auto [a, b] = g.edge(e1);
  auto [c, d] = g.edge(e2);
  return a != c && a != d && b != c && b != d;
}

}  // namespace

bool is_independently_even(const CrosscapDrawing& d) {
  for (const auto& [key, bit] : d.x) {
    if (!bit) continue;
    if (edges_independent(d.g, key.first, key.second)) return false;
  }
  return true;
}

BitVec cycle_homology(const CrosscapDrawing& d, const CycleVec& c) {
  if (c.edges.length() != d.g.num_edges())
    throw std::invalid_argument("cycle_homology: cycle from a different graph");
  BitVec cls(d.h);
  for (int e = 0; e < d.g.num_edges(); ++e)
    if (c.contains(e)) cls.xor_with(d.y[e]);
  return cls;
}

int class_product(const CrosscapDrawing& d, const BitVec& a, const BitVec& b) {
  if (d.form) return gf2_dot(a, d.form->mul(b));
  return gf2_dot(a, b);
}

int intersection_form(const CrosscapDrawing& d, const CycleVec& c1, const CycleVec& c2) {
  return class_product(d, cycle_homology(d, c1), cycle_homology(d, c2));
}

CrosscapDrawing normalize_forest(const CrosscapDrawing& d, const SpanningForest& f) {
  if (f.num_vertices != d.g.num_vertices() || f.num_edges != d.g.num_edges())
    throw std::invalid_argument("normalize_forest: forest from a different graph");
  CrosscapDrawing out = d;
  // Parents before children: each non-root vertex clears its parent edge with
  // one vertex move; later moves happen strictly below and cannot undo it.
  for (int v : f.bfs_order) {
    int pe = f.parent_edge[v];
    if (pe < 0) continue;
    const BitVec z = out.y[pe];
    if (z.is_zero()) continue;
    for (const Graph::Incidence& inc : d.g.incident(v)) out.y[inc.edge].xor_with(z);
  }
  for (int e : f.tree_edges)
    if (!out.y[e].is_zero()) throw std::logic_error("normalize_forest: forest edge not cleared");
  return out;
}

CrosscapDrawing compress(const CrosscapDrawing& d) {
  if (!is_independently_even(d))
    throw std::invalid_argument("compress: drawing is not independently even");
  if (d.form)
    throw std::invalid_argument("compress: drawing already compressed");
  BasisMap bm = basis_map(d.y);
  CrosscapDrawing out;
  out.g = d.g;
  out.h = bm.dim;
  out.y.reserve(d.y.size());
  for (const BitVec& v : d.y) out.y.push_back(bm.coords(v));
  out.x = d.x;
  out.form = bm.gram;
  return out;
}

int orientable_to_crosscap_h(int g) {
  if (g < 0) throw std::invalid_argument("orientable_to_crosscap_h: g must be >= 0");
  return 2 * g + 1;
}

std::vector<CycleVec> enumerate_simple_cycles(const Graph& g, int max_count) {
  std::vector<CycleVec> out;
  int n = g.num_vertices();
  std::vector<char> on_path(n, 0);
  std::vector<int> path;
  std::vector<int> path_edges;
  // Canonical enumeration: the root is the smallest vertex of the cycle and
  // the second vertex is smaller than the last, so each cycle appears once.
  std::function<void(int, int)> dfs = [&](int root, int v) {
    if (static_cast<int>(out.size()) >= max_count) return;
    for (const Graph::Incidence& inc : g.incident(v)) {
      if (static_cast<int>(out.size()) >= max_count) return;
      if (inc.to == root && path.size() >= 3) {
        if (path[1] < v) {
          CycleVec c(g.num_edges());
          for (int e : path_edges) c.edges.set(e, true);
          c.edges.set(inc.edge, true);
          out.push_back(c);
        }
        continue;
      }
      if (inc.to <= root || on_path[inc.to]) continue;
      on_path[inc.to] = 1;
      path.push_back(inc.to);
      path_edges.push_back(inc.edge);
      dfs(root, inc.to);
      path.pop_back();
      path_edges.pop_back();
      on_path[inc.to] = 0;
    }
  };
  for (int root = 0; root < n && static_cast<int>(out.size()) < max_count; ++root) {
    on_path.assign(n, 0);
    on_path[root] = 1;
    path = {root};
    path_edges.clear();
    dfs(root, root);
  }
  return out;
}

ConsistencyReport homology_consistency_check(const CrosscapDrawing& d, int samples) {
  if (!is_independently_even(d))
    throw std::invalid_argument("homology_consistency_check: drawing is not independently even");
  ConsistencyReport rep;
  const int cycle_cap = std::max(64, samples);
  auto cycles = enumerate_simple_cycles(d.g, cycle_cap);
  std::vector<BitVec> classes;
  classes.reserve(cycles.size());
  for (const auto& c : cycles) classes.push_back(cycle_homology(d, c));
  for (size_t i = 0; i < cycles.size() && rep.pairs_checked < samples; ++i) {
    for (size_t j = i + 1; j < cycles.size() && rep.pairs_checked < samples; ++j) {
      if (!cycles_vertex_disjoint(d.g, cycles[i], cycles[j])) continue;
      ++rep.pairs_checked;
      int omega = class_product(d, classes[i], classes[j]);
      int xsum = 0;
      if (!d.x.empty()) {
        for (int e1 : cycles[i].edge_ids())
          for (int e2 : cycles[j].edge_ids()) xsum ^= d.x_parity(e1, e2);
      }
      if (omega != xsum) rep.violations.push_back({cycles[i], cycles[j], omega, xsum});
    }
  }
  rep.exhausted =
      rep.pairs_checked < samples && static_cast<int>(cycles.size()) < cycle_cap;
  return rep;
}

}  // namespace z2lab
