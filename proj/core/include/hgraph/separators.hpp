#pragma once

#include <cstdint>
#include <set>
#include <vector>

#include "hgraph/representation.hpp"

namespace hgraph {

inline constexpr int kDefaultSeparatorCap = 16;

// Minimal separators as sorted vertex-index sets. Every member has at least
// two full components (components C of G minus X with N(C) = X).
struct SeparatorSet {
  std::set<std::vector<int>> separators;
};

// True iff X has at least two full components in g.
bool is_minimal_separator(const SimpleGraph& g, const Bits& x);

// Exhaustive enumeration over all vertex subsets; the oracle side of the
// dual-route check. Throws Error(size_cap) above the cap.
SeparatorSet minimal_separators_oracle(const SimpleGraph& g, int cap = kDefaultSeparatorCap);

// A border-edge subset together with the vertex set it selects:
// V_S = {v : some edge of S has both endpoints inside M_v}.
struct BorderCandidate {
  std::vector<std::pair<int, int>> edges;  // subdivision edges, normalized pairs
  std::vector<int> base_edges;             // owning edge of H per member of `edges`
  std::vector<int> vertex_set;             // sorted vertex indices
};

// All candidate sets S ⊆ R of the two admissible shapes: at most one border
// edge per edge-path of H, or exactly two border edges on a single path.
// Includes the empty candidate.
std::vector<BorderCandidate> hgraph_separator_candidates(const HRepresentation& rep);

// Candidate vertex sets filtered by the full-component criterion; equals the
// oracle output on the intersection graph.
SeparatorSet hgraph_minimal_separators(const HRepresentation& rep,
                                       int cap = kDefaultSeparatorCap);

// (2n+1)^||H|| + ||H||*(2n)^2, saturating.
int64_t separator_count_bound(int n, int h_edges);

}  // namespace hgraph
