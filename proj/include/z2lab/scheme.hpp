#pragma once

#include <string>
#include <vector>

#include "z2lab/graph.hpp"

namespace z2lab {

// Rotation system plus +-1 edge signatures. The rotation of a vertex is the
// clockwise cyclic order of its incident edge ids; a signature of -1 marks an
// edge passing through an odd number of crosscaps.
struct EmbeddingScheme {
  Graph g;
  std::vector<std::vector<int>> rotation;  // per vertex
  std::vector<int8_t> signature;           // per edge, +1 or -1

  static EmbeddingScheme with_default_rotation(const Graph& g);
  void validate() const;  // rotations are permutations of the incident edges
  bool all_positive() const;
  // True iff some cycle has signature product -1 (the scheme is nonorientable).
  bool has_odd_cycle() const;
};

// One boundary walk of a face. step[k] traverses edge[k] into vertex to[k];
// corner[k] is the rotation corner occupied at to[k] and corner_parity[k] the
// orientation offset relative to the start of the walk (0 = same sheet in the
// orientation double cover).
struct Face {
  std::vector<int> edge;
  std::vector<int> to;
  std::vector<int> corner;          // index into rotation[to[k]]
  std::vector<int8_t> corner_parity;
  int length() const { return static_cast<int>(edge.size()); }
  std::vector<int> vertices() const;  // sorted unique
};

struct FaceSet {
  int num_edge_sides = 0;  // 2E of the traced scheme, for staleness checks
  std::vector<Face> faces;
  int count() const { return static_cast<int>(faces.size()); }
};

FaceSet trace_faces(const EmbeddingScheme& s);

// 2 - V + E - F; rejects disconnected graphs.
int euler_genus_of_scheme(const EmbeddingScheme& s);
int euler_genus_of_scheme(const EmbeddingScheme& s, const FaceSet& fs);

// Lower bound on the Euler genus from Euler's formula and the girth;
// 0 for forests.
int euler_formula_bound(const Graph& g);

// Induced scheme on the vertices not incident to the given face. Rotations
// restrict, signatures are kept. old_vertex_of receives the surviving
// original ids in new-id order.
EmbeddingScheme delete_face_vertices(const EmbeddingScheme& s, const FaceSet& fs, int face,
                                     std::vector<int>* old_vertex_of = nullptr);

}  // namespace z2lab
