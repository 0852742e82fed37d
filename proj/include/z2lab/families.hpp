#pragma once

#include <map>
#include <string>
#include <vector>

#include "z2lab/graph.hpp"

namespace z2lab {

// The eight t-Kuratowski families. Types f,g,h expose the shared pair as
// labels "x","y"; type a labels the parts "a","b","c","u0".."u<t-1>".
// Copy-local vertices carry labels "<name>:<copy>".
enum class KuratowskiKind { A, B, C, D, E, F, G, H };

KuratowskiKind kuratowski_kind_from_char(char c);

Graph gen_kuratowski(KuratowskiKind kind, int t);

Graph gen_k5();
Graph gen_k33();
Graph gen_complete(int n);
Graph gen_complete_bipartite(int a, int b);
Graph gen_cycle(int n);

// Projective r x s grid: [r] x [s] grid plus the wrap edges {(i,1),(r+1-i,s)}.
// Vertex (i,j), 1-based, gets id (i-1)*s + (j-1) and label "i,j".
Graph gen_projective_grid(int r, int s);
int projective_grid_vertex(int r, int s, int i, int j);

// Projective t-wall: subgraph of the projective t x (2t-1) grid (t odd) or
// t x 2t grid (t even) with alternating vertical edges removed; max degree 3.
Graph gen_projective_wall(int t);

struct Amalgamation {
  Graph graph;
  int x = -1, y = -1;
  int t = 0;
  int copy_count() const { return t; }
  // copy index per vertex; -1 for the shared pair
  std::vector<int> copy_of;
  // (copy, original vertex id in H) -> vertex id in the amalgamation
  std::vector<std::vector<int>> vertex_map;
};

// t disjoint copies of H with all copies of x glued and all copies of y glued.
// x and y must be nonadjacent in H.
Amalgamation gen_amalgamation(const Graph& h, int x, int y, int t);

// Recovers the amalgamation structure from labels written by gen_kuratowski /
// gen_amalgamation ("x", "y", "<name>:<copy>").
Amalgamation amalgamation_from_labels(const Graph& g);

// The section-level notation around a 2-amalgamation copy: spanning tree F of
// H-y extending a spanning tree F' of H-x-y (x a leaf of F), the edge h = yw,
// and the non-tree edge lists at x (e), at y minus h (f), and inside H-x-y (g).
struct WingDecomposition {
  int x = -1, y = -1, w = -1;
  int h_edge = -1;                  // the edge yw
  std::vector<int> forest_edges;    // F, tree edges of H-y (includes F')
  std::vector<char> in_forest;      // per edge of H
  std::vector<int> e_edges;         // non-tree at x
  std::vector<int> f_edges;         // non-tree at y, excluding h
  std::vector<int> g_edges;         // non-tree inside H-x-y
};

// Deterministic: lowest-id w (overridable), BFS trees rooted at lowest ids.
WingDecomposition wing_decomposition(const Graph& h, int x, int y, int w_override = -1);

// The cycles C_i = a u_i b u_0 and C'_i = a u_i c u_0 of K_{3,t}, i in [1,t-1].
struct K3tCycles {
  std::vector<CycleVec> c;        // index 1..t-1 (index 0 unused)
  std::vector<CycleVec> c_prime;  // same indexing
};
K3tCycles k3t_cycles(const Graph& k3t, int t);

// t from a labeled K_{3,t}; throws if the labels do not match type a.
int k3t_param(const Graph& g);

}  // namespace z2lab
