#pragma once

#include <cstdint>
#include <optional>

#include "z2lab/scheme.hpp"

namespace z2lab {

struct SearchOptions {
  uint64_t budget = 200'000'000;  // search nodes before giving up
  int jobs = 1;
};

struct SearchResult {
  int value = -1;      // minimum genus / Euler genus found
  bool exact = false;  // false when the budget ran out first
  uint64_t nodes = 0;
  EmbeddingScheme witness;
};

// Exact minimum orientable genus over all rotation systems (signatures +1),
// with the lexicographically first witness. Rejects disconnected graphs.
SearchResult min_genus_search(const Graph& g, const SearchOptions& opt = {});

// Exact minimum Euler genus over rotation systems x cotree signature
// patterns (spanning-tree edges normalized to +1).
SearchResult min_euler_genus_search(const Graph& g, const SearchOptions& opt = {});

}  // namespace z2lab
