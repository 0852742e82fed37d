#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z2lab/drawing.hpp"
#include "z2lab/families.hpp"
#include "z2lab/gf2.hpp"
#include "z2lab/search.hpp"

namespace z2lab {

// A structured lower-bound report. `ok` is false when the datum violated a
// necessary condition and was flagged unrealizable instead of certified.
struct Certificate {
  std::string graph_name;
  std::string mechanism;  // k3t-rank | k3t-pigeonhole | amalgam-rank
  Gf2Matrix matrix;
  int rank = 0;
  int euler_z2_bound = 0;  // eg_0(G) >= this
  int z2_bound = 0;        // g_0(G) >= ceil(euler bound / 2)
  bool ok = false;
  std::string diagnostics;

  std::string to_text() const;
};

struct LemmaK33Check {
  int omega_c_cprime = 0;  // Omega([C_i],[C'_j])
  int omega_cprime_c = 0;  // Omega([C'_i],[C_j])
  int sum() const { return omega_c_cprime ^ omega_cprime_c; }
  bool pass() const { return sum() == 1; }
};

// Omega([C_i],[C'_j]) + Omega([C'_i],[C_j]) for a K_{3,t} drawing; != 1 flags
// the datum unrealizable.
LemmaK33Check check_lemma_k33(const CrosscapDrawing& d, int i, int j);

// The (t-1)x(t-1) matrix A_{ij} = Omega([C_i],[C'_j]); must be a tournament
// matrix for realizable data; the bound is its rank.
Certificate k3t_certificate(const CrosscapDrawing& d);

struct PigeonholeReport {
  int t = 0;
  int h = 0;
  bool contradiction = false;  // a homologically trivial K_{3,3} was found
  int idx[3] = {-1, -1, -1};   // the three indices sharing both classes
  std::vector<CycleVec> zero_generators;
  std::string message;
};

// Partitions [t-1] by [C_i], refines by [C'_i]; three indices sharing both
// classes exhibit a K_{3,3} whose cycles are all homologically zero.
PigeonholeReport k3t_pigeonhole(const CrosscapDrawing& d);

// 2-connected, x,y nonadjacent, H-x-y connected, H+xy nonplanar (by genus
// search within the budget).
bool is_xy_wing(const Graph& h, int x, int y, const SearchOptions& budget = {});

// Per-copy wing data of an amalgamation of a Kuratowski xy-wing, with the
// intrinsic fundamental cycles in ambient edge coordinates.
struct AmalgamWing {
  Amalgamation am;
  std::vector<std::vector<int>> copy_vertices;
  struct CopyData {
    std::vector<int> forest_edges;  // F^i, ambient ids
    int w = -1;
    int h_edge = -1;                // yw^i
    std::vector<int> e_edges, f_edges, g_edges;
    std::vector<CycleVec> c_e;   // C_{e_j}, inside H^i - y
    std::vector<CycleVec> c_fh;  // C_{f_j} + C_{h}, inside H^i - x
    std::vector<CycleVec> c_g;   // C_{g_j}, inside H^i - x - y
  };
  std::vector<CopyData> copies;
  // Spanning tree of the amalgam: yw^{root_copy} plus every F^i.
  std::vector<int> tree_edges(int root_copy) const;
};

AmalgamWing build_amalgam_wing(const Graph& g);

struct WingPair {
  bool ok = false;
  // true: C1 in H^i - x and C2 in H^i - y; false: C2 in H^i - x - y.
  bool in_copy_placement = true;
  CycleVec c1, c2;
  int j = -1, j_prime = -1;  // case-2 indices, lexicographic minimum
  std::string note;
};

// Finds cycles with Omega([C1],[C2]) = 1 per the two alternatives; neither
// case holding flags the datum unrealizable.
WingPair wing_cycle_pairs(const CrosscapDrawing& d, const AmalgamWing& wing, int copy);

// Per-copy pairs, copies reordered with the in-copy placement first; the
// matrix must come out unit lower triangular, giving bound rank = t.
Certificate amalgam_certificate(const CrosscapDrawing& d);
Certificate amalgam_certificate(const CrosscapDrawing& d, const AmalgamWing& wing);

struct OrthogonalityReport {
  bool hypothesis_ok = false;  // copies carry equal per-edge homology classes
  bool all_vanish = false;
  int checked = 0;
  std::vector<std::string> nonzero;  // descriptions of failing products
};

// The four vanishing families for copies with equal classes, each product
// evaluated both directly and through the disjoint-copy representative.
OrthogonalityReport orthogonality_check(const CrosscapDrawing& d, const AmalgamWing& wing,
                                        int copy_i, int copy_i2);

// Potential i(i-2k')*(w_cal + 2k) steering the surface-cutting recursion;
// w_cal stands in for the unknown wall constant.
int64_t ramsey_potential(int k_prime, int i, int k, int64_t w_cal);

}  // namespace z2lab
