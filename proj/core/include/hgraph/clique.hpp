#pragma once

#include <string>
#include <vector>

#include "hgraph/representation.hpp"

namespace hgraph {

inline constexpr int kDefaultCliqueCap = 20;

struct MatchingResult {
  int size = 0;
  std::vector<std::pair<int, int>> pairs;  // (left vertex, right vertex)
};

// Hopcroft-Karp maximum matching between the two given sides. Throws
// Error(type) if the sides overlap, miss vertices of g, or an edge of g runs
// inside one side.
MatchingResult bipartite_max_matching(const SimpleGraph& g, const std::vector<int>& left,
                                      const std::vector<int>& right);

// Maximum independent set of a bipartite graph via König's theorem
// (complement of the vertex cover built from a maximum matching).
std::vector<int> bipartite_max_independent_set(const SimpleGraph& g, const std::vector<int>& left,
                                               const std::vector<int>& right);

// The cobipartite neighborhood of an e-vertex anchor: K1 holds the vertices
// whose model contains the subpath's first end node, K2 those containing the
// last end node but not the first.
struct CobipartiteSlice {
  int anchor = -1;
  int x_node = -1;  // first end of the anchor's subpath
  int y_node = -1;  // last end (may equal x_node)
  std::vector<int> k1;
  std::vector<int> k2;
};

CobipartiteSlice cobipartite_slice(const HRepresentation& rep, int anchor);

// Maximum clique among cliques containing at least one e-vertex, found by
// iterating over all e-vertex anchors and solving each cobipartite slice via
// bipartite matching. Empty when G has no e-vertex.
std::vector<int> max_clique_with_e_vertex(const HRepresentation& rep);

struct KernelOutput {
  bool yes = false;
  std::vector<std::string> certificate;  // clique vertex ids when yes
  SimpleGraph reduced;                   // e-vertex-free graph when not yes
  int size_bound = 0;                    // (k-1)|V(H)|
};

// Clique kernel: answers yes with a certificate when a large clique is found
// through an e-vertex or a branching node, otherwise returns the graph with
// all e-vertices deleted (at most (k-1)|V(H)| vertices).
KernelOutput clique_kernel(const HRepresentation& rep, int k);

struct CliqueOracleResult {
  int omega = 0;
  std::vector<int> witness;
};

// Exact maximum clique by branch and bound.
CliqueOracleResult clique_oracle(const SimpleGraph& g, int cap = kDefaultCliqueCap);

}  // namespace hgraph
