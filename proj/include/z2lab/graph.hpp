#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2lab/gf2.hpp"

namespace z2lab {

// Simple undirected graph with dense 0-based vertex and edge ids.
// Values are immutable after construction by convention; all operations
// return fresh graphs.
class Graph {
 public:
  struct Incidence {
    int to;
    int edge;
  };

  Graph() = default;
  explicit Graph(int num_vertices) : adj_(num_vertices), labels_(num_vertices) {}

  int num_vertices() const { return static_cast<int>(adj_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }

  // Adds the edge u-v and returns its id. Loops are rejected; re-adding an
  // existing edge returns the existing id (simple-graph convention).
  int add_edge(int u, int v);

  const std::pair<int, int>& edge(int e) const { return edges_[e]; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  int other_end(int e, int v) const {
    const auto& [a, b] = edges_[e];
    return v == a ? b : a;
  }
  bool edge_has_vertex(int e, int v) const {
    return edges_[e].first == v || edges_[e].second == v;
  }
  std::optional<int> find_edge(int u, int v) const;

  int degree(int v) const { return static_cast<int>(adj_[v].size()); }
  // Incidences sorted by (neighbor id, edge id); the deterministic traversal order.
  const std::vector<Incidence>& incident(int v) const { return adj_[v]; }

  void set_label(int v, const std::string& label) { labels_[v] = label; }
  const std::string& label(int v) const { return labels_[v]; }
  int vertex_by_label(const std::string& label) const;  // throws if absent

  bool is_connected() const;
  std::vector<int> component_ids() const;  // component index per vertex
  int girth() const;                       // -1 for forests

  // Subgraph induced on `keep` (ascending vertex ids). Dense re-ids; returns
  // old id per new vertex in *old_vertex_of and old edge ids in *old_edge_of.
  Graph induced(const std::vector<int>& keep, std::vector<int>* old_vertex_of = nullptr,
                std::vector<int>* old_edge_of = nullptr) const;

 private:
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<Incidence>> adj_;
  std::vector<std::string> labels_;
};

struct SpanningForest {
  int num_vertices = 0;
  int num_edges = 0;                // of the parent graph, for sanity checks
  std::vector<int> roots;           // one per component, in discovery order
  std::vector<int> parent_vertex;   // -1 at roots
  std::vector<int> parent_edge;     // -1 at roots
  std::vector<int> bfs_order;       // vertices, parents before children
  std::vector<char> in_forest;      // per edge id
  std::vector<int> tree_edges;      // edge ids, insertion order

  bool contains_edge(int e) const { return in_forest[e] != 0; }
};

// GF(2) vector in the cycle space, stored as an edge-id bitset.
struct CycleVec {
  BitVec edges;  // length = num_edges of the parent graph

  explicit CycleVec(int num_edges = 0) : edges(num_edges) {}
  bool contains(int e) const { return edges.get(e); }
  std::vector<int> edge_ids() const;
  bool empty() const { return edges.is_zero(); }
  bool operator==(const CycleVec& o) const { return edges == o.edges; }
};

// Every vertex of the induced subgraph has even degree.
bool is_even_subgraph(const Graph& g, const CycleVec& c);
std::vector<int> cycle_vertices(const Graph& g, const CycleVec& c);
bool cycles_vertex_disjoint(const Graph& g, const CycleVec& a, const CycleVec& b);

// Replaces u and v by a fresh vertex w adjacent to N(u) u N(v) \ {u,v}.
// Parallel edges merge and the edge uv (if present) is dropped. The fresh
// vertex takes the highest id; all other ids shift down to stay dense.
Graph glue_vertices(const Graph& g, int u, int v);

// Deterministic BFS forest: roots as given, then lowest uncovered ids;
// neighbors visited in ascending order.
SpanningForest spanning_forest(const Graph& g, const std::vector<int>& roots = {});

// BFS forest restricted to the given edge set; the edges must be acyclic.
SpanningForest forest_from_edges(const Graph& g, const std::vector<int>& edges);

// No articulation vertex, connected, at least 3 vertices.
bool is_two_connected(const Graph& g);

// e plus the unique forest path between its endpoints.
CycleVec fundamental_cycle(const Graph& g, const SpanningForest& f, int e);

CycleVec cycle_sum(const CycleVec& c1, const CycleVec& c2);

}  // namespace z2lab
