#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "z2lab/drawing.hpp"
#include "z2lab/graph.hpp"

namespace z2lab {

// Crossing parities of a plane drawing, tracked on independent edge pairs
// only. Moves act on the parity quotient; no geometry is kept.
struct PlaneParityState {
  Graph g;
  std::vector<int> order;        // convex vertex order
  std::vector<uint8_t> parity;   // indexed by pair_index(e1,e2), e1 < e2
  std::vector<uint8_t> independent;

  int pair_index(int e1, int e2) const;
  bool pair_independent(int e1, int e2) const;
  uint8_t get(int e1, int e2) const;
};

// Straight-line reference drawing on a convex polygon: an independent pair
// crosses iff its endpoints interleave in the circular order.
PlaneParityState convex_reference(const Graph& g, const std::vector<int>& order);

// Pulling v across f flips the parity of (f,e) for every edge e at v that is
// independent of f.
PlaneParityState vertex_edge_move(const PlaneParityState& state, int v, int f);
int vertex_edge_move_flip_count(const Graph& g, int v, int f);

int independent_odd_count(const PlaneParityState& state);

// True iff g minus the adjacent pair u,v is a single cycle.
bool deletion_cycle_check(const Graph& g, int u, int v);

struct KleitmanReport {
  bool covered = false;  // graph recognized as K5 or K_{3,3}
  std::string graph_name;
  int reference_count = 0;
  bool reference_odd = false;
  int moves_checked = 0;
  bool all_moves_even = false;
  int random_orders_checked = 0;
  bool random_orders_all_odd = false;
  bool pass() const {
    return covered && reference_odd && all_moves_even && random_orders_all_odd;
  }
  std::string to_text() const;
};

// Checks (i) the reference count is odd, (ii) every vertex-over-edge move
// flips an even number of independent pairs, so the odd total is invariant
// over the move-generated class. Extra random orders confirm the conclusion
// does not depend on the reference order.
KleitmanReport verify_kleitman(const Graph& g, uint64_t seed = 0, int random_orders = 10);

struct ForestParityResult {
  int count = 0;
  bool pass = false;  // odd count; even certifies the datum unrealizable
};

// Counts independent pairs e,f of non-forest edges of the Kuratowski subgraph
// K with y_e . y_f = 1. Requires y = 0 on the forest.
ForestParityResult kuratowski_forest_parity(const CrosscapDrawing& d,
                                            const std::vector<int>& forest_edges,
                                            const std::vector<int>& k_edges);

// Kuratowski-xy-wing structural check: for u adjacent to x, H-x-u is a cycle
// and y meets exactly two of its edges.
bool xy_wing_observation_holds(const Graph& h, int x, int y);

}  // namespace z2lab
