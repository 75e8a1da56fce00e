#pragma once

#include <string>
#include <vector>

#include "hgraph/representation.hpp"

namespace hgraph {

// H-representation whose base multigraph is a tree, with a designated root
// node of T. The root induces the parent-child relations on T and T'.
class TRepresentation {
 public:
  TRepresentation() = default;
  TRepresentation(HRepresentation rep, std::string root);

  const HRepresentation& rep() const { return rep_; }
  const std::string& root() const { return root_; }
  TRepresentation with_root(const std::string& root) const { return {rep_, root}; }

 private:
  HRepresentation rep_;
  std::string root_;
};

// Every model contains at most one branching node of T.
bool is_nice(const TRepresentation& t);

class NiceRep {
 public:
  NiceRep() = default;
  explicit NiceRep(TRepresentation t);
  const TRepresentation& t() const { return t_; }
  const HRepresentation& rep() const { return t_.rep(); }

 private:
  TRepresentation t_;
};

struct ChordalityResult {
  bool chordal = false;
  std::vector<int> peo;            // perfect elimination order when chordal
  std::vector<int> witness_cycle;  // chordless cycle (>= 4 vertices) otherwise
};

// Maximum-cardinality-search based perfect-elimination test. On failure the
// witness is a chordless cycle extracted from a non-clique minimal separator.
ChordalityResult check_chordal(const SimpleGraph& g);

// Clique tree of a connected chordal graph: tree nodes are the maximal
// cliques, M_v is the set of cliques containing v. Not leafage-optimal.
// Throws Error(chordality) with a witness cycle, or Error(connectivity).
TRepresentation clique_tree(const SimpleGraph& g);

// Removes every degree-two node of T; dissolved nodes become subdivision
// nodes on the merged edge and models are re-addressed. If the root is
// dissolved the result is re-rooted at the least branching node.
TRepresentation dissolve_degree_two(const TRepresentation& t);

// The (T/e)-representation: contract the edge's path to a single node z,
// delete all e-vertices, re-address the remaining models.
TRepresentation contract_tree_edge(const TRepresentation& t, const std::string& edge_id);

}  // namespace hgraph
