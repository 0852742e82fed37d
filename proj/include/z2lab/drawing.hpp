#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "z2lab/gf2.hpp"
#include "z2lab/graph.hpp"

namespace z2lab {

// The algebraic shadow of a drawing in the plane with h crosscaps: per-edge
// crosscap-parity vectors y_e, and the sparse symmetric outside-crossing
// parity X over unordered edge pairs (absent = even). `form`, when present,
// replaces the standard scalar product after compression.
struct CrosscapDrawing {
  Graph g;
  int h = 0;
  std::vector<BitVec> y;
  std::map<std::pair<int, int>, uint8_t> x;  // keys ordered (lo, hi)
  std::optional<Gf2Matrix> form;

  static CrosscapDrawing zero(const Graph& g, int h);
  void validate() const;

  uint8_t x_parity(int e1, int e2) const;
  void set_x_parity(int e1, int e2, uint8_t bit);
};

// Every pair of independent edges has even crossing parity outside the
// crosscaps. Adjacent pairs are exempt.
bool is_independently_even(const CrosscapDrawing& d);

// XOR of y over the cycle's edges; represents [C] in H_1.
BitVec cycle_homology(const CrosscapDrawing& d, const CycleVec& c);

// Omega([C1],[C2]) as the scalar product of the classes (through `form` when
// the drawing has been compressed).
int intersection_form(const CrosscapDrawing& d, const CycleVec& c1, const CycleVec& c2);
int class_product(const CrosscapDrawing& d, const BitVec& a, const BitVec& b);

// Vertex moves along the forest from the roots down, leaving y = 0 on every
// forest edge. X is untouched and every cycle keeps its homology class.
CrosscapDrawing normalize_forest(const CrosscapDrawing& d, const SpanningForest& f);

// Lemma-4 style compression: h' = dim span{y_e}, coordinates via basis_map,
// the induced Gram matrix carried as `form`.
CrosscapDrawing compress(const CrosscapDrawing& d);

// M_g minus a point sits inside N_{2g+1}.
int orientable_to_crosscap_h(int g);

struct ConsistencyReport {
  int pairs_checked = 0;
  bool exhausted = true;  // false when the sample budget cut enumeration short
  struct Violation {
    CycleVec c1, c2;
    int form_value;
    int x_sum;
  };
  std::vector<Violation> violations;
  bool passed() const { return violations.empty(); }
};

// Enumerates vertex-disjoint cycle pairs (up to `samples` pairs) and checks
// Omega = sum of X over cross pairs; a violation certifies the datum is not
// realizable as an independently even drawing.
ConsistencyReport homology_consistency_check(const CrosscapDrawing& d, int samples = 10000);

// Simple cycles of g in a canonical order, capped at max_count.
std::vector<CycleVec> enumerate_simple_cycles(const Graph& g, int max_count);

}  // namespace z2lab
