// Builds the witness corpus: embedding schemes and crosscap drawings for the
// graph families with known (Euler) genus. Every artifact is validated before
// it is written; the tool aborts on any mismatch.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <stdexcept>
#include <string>

#include "z2lab/certify.hpp"
#include "z2lab/facewidth.hpp"
#include "z2lab/families.hpp"
#include "z2lab/io.hpp"
#include "z2lab/scheme.hpp"
#include "z2lab/search.hpp"

using namespace z2lab;

namespace {

void require(bool cond, const std::string& what) {
  if (!cond) throw std::runtime_error("witness validation failed: " + what);
}

// Scheme of a subgraph of the projective r x s grid drawn as the planar grid
// in a disk with the wrap edges leaving west from column 1 and re-entering
// east at column s (signature -1). Rotations are clockwise with rows growing
// downward: north, east, south, west.
EmbeddingScheme projective_scheme(const Graph& g, int r, int s) {
  EmbeddingScheme sc;
  sc.g = g;
  sc.rotation.assign(g.num_vertices(), {});
  sc.signature.assign(g.num_edges(), 1);
  auto vid = [&](int i, int j) { return projective_grid_vertex(r, s, i, j); };
  for (int i = 1; i <= r; ++i)
    for (int j = 1; j <= s; ++j) {
      int v = vid(i, j);
      auto push = [&](int u) {
        if (auto e = g.find_edge(v, u)) sc.rotation[v].push_back(*e);
      };
      if (i > 1) push(vid(i - 1, j));  // north
      if (j < s)
        push(vid(i, j + 1));  // east
      else
        push(vid(r + 1 - i, 1));  // east: wrap back to column 1
      if (i < r) push(vid(i + 1, j));  // south
      if (j > 1)
        push(vid(i, j - 1));  // west
      else
        push(vid(r + 1 - i, s));  // west: wrap to column s
    }
  for (int i = 1; i <= r; ++i)
    if (auto e = g.find_edge(vid(i, 1), vid(r + 1 - i, s))) sc.signature[*e] = -1;
  sc.validate();
  return sc;
}

// Scheme of the 2-amalgamation of t copies of K_{3,3} on N_t: every copy is
// drawn in its own disk between the hubs x and y, with the one unavoidable
// crossing per copy (c u2 against y u1) pushed through a private crosscap.
EmbeddingScheme amalgam_k33_scheme(int t) {
  Graph g = gen_kuratowski(KuratowskiKind::H, t);
  EmbeddingScheme sc;
  sc.g = g;
  sc.rotation.assign(g.num_vertices(), {});
  sc.signature.assign(g.num_edges(), 1);
  int x = g.vertex_by_label("x");
  int y = g.vertex_by_label("y");
  auto vert = [&](const char* base, int i) {
    return g.vertex_by_label(std::string(base) + ":" + std::to_string(i));
  };
  auto eid = [&](int u, int v) {
    auto e = g.find_edge(u, v);
    if (!e) throw std::runtime_error("amalgam scheme: missing edge");
    return *e;
  };
  for (int i = 0; i < t; ++i) {
    int c = vert("c", i), u0 = vert("u0", i), u1 = vert("u1", i), u2 = vert("u2", i);
    sc.rotation[x].push_back(eid(x, u0));
    sc.rotation[x].push_back(eid(x, u1));
    sc.rotation[x].push_back(eid(x, u2));
    sc.rotation[u0] = {eid(x, u0), eid(y, u0), eid(c, u0)};
    sc.rotation[u1] = {eid(c, u1), eid(y, u1), eid(x, u1)};
    sc.rotation[u2] = {eid(c, u2), eid(y, u2), eid(x, u2)};
    sc.rotation[c] = {eid(c, u2), eid(c, u1), eid(c, u0)};
    sc.signature[eid(c, u2)] = -1;
    sc.signature[eid(y, u1)] = -1;
  }
  for (int i = t - 1; i >= 0; --i) {
    sc.rotation[y].push_back(eid(y, vert("u2", i)));
    sc.rotation[y].push_back(eid(y, vert("u1", i)));
    sc.rotation[y].push_back(eid(y, vert("u0", i)));
  }
  sc.validate();
  return sc;
}

// Crosscap datum matching amalgam_k33_scheme: copy i's crossing pair passes
// through crosscap i once each.
CrosscapDrawing amalgam_k33_drawing(int t) {
  Graph g = gen_kuratowski(KuratowskiKind::H, t);
  CrosscapDrawing d = CrosscapDrawing::zero(g, t);
  int y = g.vertex_by_label("y");
  for (int i = 0; i < t; ++i) {
    int c = g.vertex_by_label("c:" + std::to_string(i));
    int u1 = g.vertex_by_label("u1:" + std::to_string(i));
    int u2 = g.vertex_by_label("u2:" + std::to_string(i));
    d.y[*g.find_edge(c, u2)].set(i, true);
    d.y[*g.find_edge(y, u1)].set(i, true);
  }
  return d;
}

// K_{3,t} drawing with classes [C_i] = z_i, [C'_i] = z'_i realized by
// y(b u_i) = z_i and y(c u_i) = z'_i on the tree-normalized datum.
CrosscapDrawing k3t_drawing(int t, int h, const std::vector<std::string>& z,
                            const std::vector<std::string>& zp) {
  Graph g = gen_kuratowski(KuratowskiKind::A, t);
  CrosscapDrawing d = CrosscapDrawing::zero(g, h);
  int b = g.vertex_by_label("b");
  int c = g.vertex_by_label("c");
  for (int i = 1; i < t; ++i) {
    int u = g.vertex_by_label("u" + std::to_string(i));
    d.y[*g.find_edge(b, u)] = BitVec::from_string(z[i - 1]);
    d.y[*g.find_edge(c, u)] = BitVec::from_string(zp[i - 1]);
  }
  return d;
}

CrosscapDrawing k33_torus_drawing() {
  Graph g = gen_k33();
  CrosscapDrawing d = CrosscapDrawing::zero(g, 3);
  int b = g.vertex_by_label("b"), c = g.vertex_by_label("c");
  int u1 = g.vertex_by_label("u1"), u2 = g.vertex_by_label("u2");
  d.y[*g.find_edge(b, u1)] = BitVec::from_string("110");
  d.y[*g.find_edge(c, u2)] = BitVec::from_string("011");
  return d;
}

struct Emitter {
  std::filesystem::path dir;
  void scheme(const std::string& name, const EmbeddingScheme& s, int expect_eg) {
    int eg = euler_genus_of_scheme(s);
    require(eg == expect_eg, name + ": euler genus " + std::to_string(eg) + " != " +
                                 std::to_string(expect_eg));
    write_file((dir / name).string(), scheme_to_text(s));
    std::printf("  %-28s eg=%d  V=%d E=%d\n", name.c_str(), eg, s.g.num_vertices(),
                s.g.num_edges());
  }
  void drawing(const std::string& name, const CrosscapDrawing& d) {
    d.validate();
    require(is_independently_even(d), name + ": not independently even");
    write_file((dir / name).string(), drawing_to_text(d));
    std::printf("  %-28s h=%d\n", name.c_str(), d.h);
  }
};

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path dir = argc > 1 ? argv[1] : "witnesses";
  std::filesystem::create_directories(dir);
  Emitter em{dir};
  try {
    std::printf("searched witnesses:\n");
    {
      SearchResult r = min_genus_search(gen_k5());
      require(r.exact && r.value == 1, "K5 genus search");
      em.scheme("k5_torus.scheme", r.witness, 2);
    }
    {
      SearchResult r = min_genus_search(gen_k33());
      require(r.exact && r.value == 1, "K33 genus search");
      em.scheme("k33_torus.scheme", r.witness, 2);
    }
    {
      SearchResult r = min_euler_genus_search(gen_k5());
      require(r.exact && r.value == 1, "K5 euler genus search");
      em.scheme("k5_projective.scheme", r.witness, 1);
    }
    {
      Graph k33e = gen_k33();
      k33e.add_edge(0, 1);  // the nonadjacent pair a,b
      SearchResult r = min_euler_genus_search(k33e);
      require(r.exact && r.value == 1, "K33+e euler genus search");
      em.scheme("k33_plus_e_projective.scheme", r.witness, 1);
    }

    std::printf("projective grids and walls:\n");
    for (int t = 3; t <= 6; ++t) {
      Graph grid = gen_projective_grid(t, t);
      EmbeddingScheme gs = projective_scheme(grid, t, t);
      int fw = facewidth_projective(gs);
      require(fw == t, "grid" + std::to_string(t) + " facewidth " + std::to_string(fw));
      em.scheme("grid" + std::to_string(t) + ".scheme", gs, 1);

      Graph wall = gen_projective_wall(t);
      int s = (t % 2) ? 2 * t - 1 : 2 * t;
      EmbeddingScheme ws = projective_scheme(wall, t, s);
      int wfw = facewidth_projective(ws);
      require(wfw == t, "wall" + std::to_string(t) + " facewidth " + std::to_string(wfw));
      em.scheme("wall" + std::to_string(t) + ".scheme", ws, 1);
    }

    std::printf("amalgamations:\n");
    for (int t = 2; t <= 3; ++t) {
      em.scheme("amalg_k33_t" + std::to_string(t) + ".scheme", amalgam_k33_scheme(t), t);
      CrosscapDrawing d = amalgam_k33_drawing(t);
      Certificate cert = amalgam_certificate(d);
      require(cert.ok && cert.rank == t, "amalgam t=" + std::to_string(t) + " certificate");
      em.drawing("amalg_k33_t" + std::to_string(t) + ".drawing", d);
    }

    std::printf("crosscap drawings:\n");
    em.drawing("k33_torus_h3.drawing", k33_torus_drawing());
    {
      CrosscapDrawing d = k3t_drawing(4, 1, {"1", "0", "1"}, {"0", "1", "1"});
      Certificate cert = k3t_certificate(d);
      require(cert.ok && cert.rank == 1, "K_{3,4} certificate");
      em.drawing("k3t4.drawing", d);
    }
    {
      CrosscapDrawing d = k3t_drawing(5, 2, {"10", "00", "11", "10"}, {"00", "10", "10", "11"});
      Certificate cert = k3t_certificate(d);
      require(cert.ok && cert.rank == 2, "K_{3,5} certificate");
      em.drawing("k3t5.drawing", d);
    }
    {
      CrosscapDrawing d = k3t_drawing(6, 2, {"10", "00", "11", "10", "11"},
                                      {"00", "10", "10", "11", "11"});
      Certificate cert = k3t_certificate(d);
      require(cert.ok && cert.rank == 2, "K_{3,6} certificate");
      em.drawing("k3t6.drawing", d);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 1;
  }
  std::printf("corpus written to %s\n", dir.string().c_str());
  return 0;
}
