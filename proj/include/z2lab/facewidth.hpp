#pragma once

#include <vector>

#include "z2lab/scheme.hpp"

namespace z2lab {

// Vertex-face incidence graph of a traced scheme, lifted to the orientation
// double cover. Nodes [0, 2V) are vertex lifts (v, sheet), nodes [2V, 2V+2F)
// are face lifts. One radial edge per corner of the embedding and sheet.
struct RadialDoubleCover {
  int num_vertices = 0;
  int num_faces = 0;
  struct Arc {
    int to;
    int weight;  // vertices crossed when entering `to`
  };
  std::vector<std::vector<Arc>> adj;

  int vertex_node(int v, int sheet) const { return 2 * v + sheet; }
  int face_node(int f, int sheet) const { return 2 * num_vertices + 2 * f + sheet; }
};

// vertex_weight[v] = 0 marks a deleted vertex (free to cross); deleted edges
// contribute weight-0 face-to-face shortcuts.
RadialDoubleCover build_radial_double_cover(const EmbeddingScheme& s, const FaceSet& fs,
                                            const std::vector<int>& vertex_weight,
                                            const std::vector<char>& edge_deleted);

// Facewidth of a projective-plane scheme: the minimum number of vertices met
// by a noncontractible closed curve. On N_1 noncontractible curves are exactly
// the sheet-swapping walks of the double cover. Requires Euler genus 1.
int facewidth_projective(const EmbeddingScheme& s);

// Facewidth on N_1 of the induced embedding after removing all vertices
// incident to `face` — computed on the original radial structure, so it stays
// meaningful even when the reduced scheme is no longer 2-cell.
int facewidth_projective_minus_face(const EmbeddingScheme& s, const FaceSet& fs, int face);

// Shortest sheet-swapping closed-walk weight over all base nodes; INT_MAX/2
// when no such walk exists (orientable cover disconnected from its twin).
int shortest_odd_walk_weight(const RadialDoubleCover& rc);

}  // namespace z2lab
