#include "z2lab/scheme.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace z2lab {

EmbeddingScheme EmbeddingScheme::with_default_rotation(const Graph& g) {
  EmbeddingScheme s;
  s.g = g;
  s.rotation.resize(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v)
    for (const Graph::Incidence& inc : g.incident(v)) s.rotation[v].push_back(inc.edge);
  s.signature.assign(g.num_edges(), 1);
  return s;
}

void EmbeddingScheme::validate() const {
  if (static_cast<int>(rotation.size()) != g.num_vertices() ||
      static_cast<int>(signature.size()) != g.num_edges())
    throw std::invalid_argument("EmbeddingScheme: sizes do not match the graph");
  for (int8_t s : signature)
    if (s != 1 && s != -1) throw std::invalid_argument("EmbeddingScheme: signature must be +-1");
  for (int v = 0; v < g.num_vertices(); ++v) {
    std::vector<int> a = rotation[v], b;
    for (const Graph::Incidence& inc : g.incident(v)) b.push_back(inc.edge);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b)
      throw std::invalid_argument("EmbeddingScheme: rotation is not a permutation of incident edges");
  }
}

bool EmbeddingScheme::all_positive() const {
  for (int8_t s : signature)
    if (s < 0) return false;
  return true;
}

bool EmbeddingScheme::has_odd_cycle() const {
  // Sign-bipartiteness test: assign vertex signs along a BFS forest; a
  // conflicting non-tree edge witnesses a signature-odd cycle.
  int n = g.num_vertices();
  std::vector<int> sign(n, 0);
  for (int s0 = 0; s0 < n; ++s0) {
    if (sign[s0]) continue;
    sign[s0] = 1;
    std::vector<int> q{s0};
    for (size_t qi = 0; qi < q.size(); ++qi) {
      int v = q[qi];
      for (const Graph::Incidence& inc : g.incident(v)) {
        int want = sign[v] * signature[inc.edge];
        if (sign[inc.to] == 0) {
          sign[inc.to] = want;
          q.push_back(inc.to);
        } else if (sign[inc.to] != want) {
          return true;
        }
      }
    }
  }
  return false;
}

std::vector<int> Face::vertices() const {
  std::vector<int> v = to;
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

namespace {

// Flags encode (edge, head endpoint, traversal sense). Sense 0 follows
// rotations clockwise; traversing a -1 edge flips it.
inline int flag_id(int edge, int dir, int sense) { return ((edge << 1) | dir) << 1 | sense; }

struct Tracer {
  const EmbeddingScheme& s;
  std::vector<std::vector<int>> pos;  // pos[v][e slot]: position of edge in rotation[v]
  std::vector<int> pos_flat;          // indexed lookup built below

  explicit Tracer(const EmbeddingScheme& sc) : s(sc) {
    pos.assign(s.g.num_vertices(), {});
    pos_flat.assign(size_t(s.g.num_edges()) * 2, -1);
    for (int v = 0; v < s.g.num_vertices(); ++v)
      for (int i = 0; i < static_cast<int>(s.rotation[v].size()); ++i) {
        int e = s.rotation[v][i];
        int side = (s.g.edge(e).first == v) ? 0 : 1;
        pos_flat[size_t(e) * 2 + side] = i;
      }
  }

  int position(int v, int e) const {
    int side = (s.g.edge(e).first == v) ? 0 : 1;
    return pos_flat[size_t(e) * 2 + side];
  }

  // One step of the face permutation. dir selects the head: 0 -> first
  // endpoint, 1 -> second.
  int next(int flag) const {
    int sense = flag & 1;
    int dir = (flag >> 1) & 1;
    int e = flag >> 2;
    int v = dir ? s.g.edge(e).second : s.g.edge(e).first;
    const auto& rot = s.rotation[v];
    int d = static_cast<int>(rot.size());
    int i = position(v, e);
    int j = sense == 0 ? (i + 1) % d : (i + d - 1) % d;
    int f = rot[j];
    int nsense = sense ^ (s.signature[f] < 0 ? 1 : 0);
    int ndir = (s.g.edge(f).first == v) ? 1 : 0;  // head is the far endpoint
    return flag_id(f, ndir, nsense);
  }

  int mirror(int flag) const {
    int sense = flag & 1;
    int dir = (flag >> 1) & 1;
    int e = flag >> 2;
    return flag_id(e, dir ^ 1, sense ^ 1 ^ (s.signature[e] < 0 ? 1 : 0));
  }
};

}  // namespace

FaceSet trace_faces(const EmbeddingScheme& s) {
  s.validate();
  Tracer tr(s);
  int nflags = s.g.num_edges() * 4;
  std::vector<int8_t> state(nflags, 0);  // 0 unseen, 1 canonical, 2 mirror
  FaceSet fs;
  fs.num_edge_sides = 2 * s.g.num_edges();
  for (int start = 0; start < nflags; ++start) {
    if (state[start]) continue;
    // Walk the orbit of `start`, marking its mirror orbit as consumed.
    Face face;
    int flag = start;
    int start_sense = start & 1;
    do {
      state[flag] = 1;
      state[tr.mirror(flag)] = 2;
      int e = flag >> 2;
      int dir = (flag >> 1) & 1;
      int sense = flag & 1;
      int v = dir ? s.g.edge(e).second : s.g.edge(e).first;
      int i = tr.position(v, e);
      int d = static_cast<int>(s.rotation[v].size());
      face.edge.push_back(e);
      face.to.push_back(v);
      face.corner.push_back(sense == 0 ? i : (i + d - 1) % d);
      face.corner_parity.push_back(static_cast<int8_t>(sense ^ start_sense));
      flag = tr.next(flag);
    } while (flag != start);
    fs.faces.push_back(std::move(face));
  }
  return fs;
}

int euler_genus_of_scheme(const EmbeddingScheme& s, const FaceSet& fs) {
  if (!s.g.is_connected())
    throw std::invalid_argument("euler_genus_of_scheme: graph must be connected");
  return 2 - s.g.num_vertices() + s.g.num_edges() - fs.count();
}

int euler_genus_of_scheme(const EmbeddingScheme& s) {
  return euler_genus_of_scheme(s, trace_faces(s));
}

int euler_formula_bound(const Graph& g) {
  int girth = g.girth();
  if (girth < 0) return 0;  // forest
  // eg >= 2 - V + E - 2E/girth, clamped at 0.
  double raw = 2.0 - g.num_vertices() + g.num_edges() - 2.0 * g.num_edges() / girth;
  int b = static_cast<int>(std::ceil(raw - 1e-9));
  return std::max(b, 0);
}

EmbeddingScheme delete_face_vertices(const EmbeddingScheme& s, const FaceSet& fs, int face,
                                     std::vector<int>* old_vertex_of) {
  if (fs.num_edge_sides != 2 * s.g.num_edges())
    throw std::invalid_argument("delete_face_vertices: face set is stale for this scheme");
  if (face < 0 || face >= fs.count())
    throw std::invalid_argument("delete_face_vertices: unknown face");
  std::vector<char> drop(s.g.num_vertices(), 0);
  for (int v : fs.faces[face].vertices()) drop[v] = 1;
  std::vector<int> keep;
  for (int v = 0; v < s.g.num_vertices(); ++v)
    if (!drop[v]) keep.push_back(v);
  std::vector<int> old_edge_of;
  EmbeddingScheme out;
  out.g = s.g.induced(keep, old_vertex_of, &old_edge_of);
  std::vector<int> new_edge_id(s.g.num_edges(), -1);
  for (size_t i = 0; i < old_edge_of.size(); ++i) new_edge_id[old_edge_of[i]] = static_cast<int>(i);
  std::vector<int> new_vertex_id(s.g.num_vertices(), -1);
  for (size_t i = 0; i < keep.size(); ++i) new_vertex_id[keep[i]] = static_cast<int>(i);
  out.rotation.resize(out.g.num_vertices());
  for (int v : keep)
    for (int e : s.rotation[v])
      if (new_edge_id[e] >= 0) out.rotation[new_vertex_id[v]].push_back(new_edge_id[e]);
  out.signature.resize(out.g.num_edges());
  for (int e = 0; e < s.g.num_edges(); ++e)
    if (new_edge_id[e] >= 0) out.signature[new_edge_id[e]] = s.signature[e];
  return out;
}

}  // namespace z2lab
