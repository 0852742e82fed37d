#include "z2lab/facewidth.hpp"

#include <climits>
#include <deque>
#include <stdexcept>

namespace z2lab {

RadialDoubleCover build_radial_double_cover(const EmbeddingScheme& s, const FaceSet& fs,
                                            const std::vector<int>& vertex_weight,
                                            const std::vector<char>& edge_deleted) {
  RadialDoubleCover rc;
  rc.num_vertices = s.g.num_vertices();
  rc.num_faces = fs.count();
  rc.adj.assign(2 * rc.num_vertices + 2 * rc.num_faces, {});

  auto link = [&](int a, int b, int wa, int wb) {
    rc.adj[a].push_back({b, wb});
    rc.adj[b].push_back({a, wa});
  };

  // Corner occurrences, also indexed per edge for the deleted-edge shortcuts.
  // corner_at[v][i] = (face, parity) for the corner between rotation[v][i] and
  // its successor.
  std::vector<std::vector<std::pair<int, int>>> corner_at(rc.num_vertices);
  for (int v = 0; v < rc.num_vertices; ++v)
    corner_at[v].assign(s.rotation[v].size(), {-1, 0});
  for (int f = 0; f < fs.count(); ++f) {
    const Face& face = fs.faces[f];
    for (int k = 0; k < face.length(); ++k)
      corner_at[face.to[k]][face.corner[k]] = {f, face.corner_parity[k]};
  }

  for (int v = 0; v < rc.num_vertices; ++v) {
    for (size_t i = 0; i < corner_at[v].size(); ++i) {
      auto [f, rho] = corner_at[v][i];
      if (f < 0) throw std::logic_error("radial cover: unvisited corner");
      for (int sheet = 0; sheet < 2; ++sheet)
        link(rc.face_node(f, sheet), rc.vertex_node(v, sheet ^ rho), 0, vertex_weight[v]);
    }
  }

  // Crossing a deleted edge near an endpoint joins the two corners flanking
  // the edge there without touching the vertex. Both endpoints are offered:
  // for a -1 edge the two ends pair the face sides with opposite sheets.
  for (int e = 0; e < s.g.num_edges(); ++e) {
    if (!edge_deleted[e]) continue;
    for (int u : {s.g.edge(e).first, s.g.edge(e).second}) {
      int d = static_cast<int>(s.rotation[u].size());
      int pos = -1;
      for (int i = 0; i < d; ++i)
        if (s.rotation[u][i] == e) pos = i;
      auto [f1, r1] = corner_at[u][pos];
      auto [f2, r2] = corner_at[u][(pos + d - 1) % d];
      for (int sheet = 0; sheet < 2; ++sheet)
        link(rc.face_node(f1, sheet), rc.face_node(f2, sheet ^ r1 ^ r2), 0, 0);
    }
  }
  return rc;
}

int shortest_odd_walk_weight(const RadialDoubleCover& rc) {
  const int INF = INT_MAX / 2;
  int n = static_cast<int>(rc.adj.size());
  int best = INF;
  std::vector<int> dist(n);
  for (int base = 0; base < n; base += 2) {
    // 0/1 BFS from (base,+) to (base,-).
    std::fill(dist.begin(), dist.end(), INF);
    std::deque<int> dq;
    dist[base] = 0;
    dq.push_back(base);
    while (!dq.empty()) {
      int u = dq.front();
      dq.pop_front();
      for (const auto& arc : rc.adj[u]) {
        int nd = dist[u] + arc.weight;
        if (nd < dist[arc.to]) {
          dist[arc.to] = nd;
          if (arc.weight == 0)
            dq.push_front(arc.to);
          else
            dq.push_back(arc.to);
        }
      }
    }
    best = std::min(best, dist[base ^ 1]);
    if (best == 0) break;
  }
  return best;
}

namespace {

int facewidth_impl(const EmbeddingScheme& s, const FaceSet& fs,
                   const std::vector<int>& vertex_weight, const std::vector<char>& edge_deleted) {
  RadialDoubleCover rc = build_radial_double_cover(s, fs, vertex_weight, edge_deleted);
  int w = shortest_odd_walk_weight(rc);
  if (w >= INT_MAX / 2)
    throw std::logic_error("facewidth: no noncontractible walk found on N_1");
  return w;
}

}  // namespace

int facewidth_projective(const EmbeddingScheme& s) {
  FaceSet fs = trace_faces(s);
  if (euler_genus_of_scheme(s, fs) != 1)
    throw std::invalid_argument("facewidth_projective: scheme is not on the projective plane");
  std::vector<int> w(s.g.num_vertices(), 1);
  std::vector<char> del(s.g.num_edges(), 0);
  return facewidth_impl(s, fs, w, del);
}

int facewidth_projective_minus_face(const EmbeddingScheme& s, const FaceSet& fs, int face) {
  if (fs.num_edge_sides != 2 * s.g.num_edges())
    throw std::invalid_argument("facewidth_projective_minus_face: stale face set");
  if (face < 0 || face >= fs.count())
    throw std::invalid_argument("facewidth_projective_minus_face: unknown face");
  if (euler_genus_of_scheme(s, fs) != 1)
    throw std::invalid_argument("facewidth_projective_minus_face: scheme is not on N_1");
  std::vector<int> w(s.g.num_vertices(), 1);
  for (int v : fs.faces[face].vertices()) w[v] = 0;
  std::vector<char> del(s.g.num_edges(), 0);
  for (int e = 0; e < s.g.num_edges(); ++e)
    if (w[s.g.edge(e).first] == 0 || w[s.g.edge(e).second] == 0) del[e] = 1;
  return facewidth_impl(s, fs, w, del);
}

}  // namespace z2lab
