#pragma once

#include <map>
#include <string>
#include <vector>

#include "hgraph/errors.hpp"

namespace hgraph {

// Loopless multigraph with named nodes and named edges. Parallel edges are
// distinguished solely by edge id; endpoint pairs may repeat. Nodes and edges
// are kept sorted by name so every downstream index is format-stable.
class MultiGraph {
 public:
  struct Edge {
    std::string id;
    std::string a;
    std::string b;
  };

  void add_node(const std::string& id);
  void add_edge(const std::string& id, const std::string& a, const std::string& b);

  bool has_node(const std::string& id) const;
  int node_index(const std::string& id) const;  // -1 if absent
  int edge_index(const std::string& id) const;  // -1 if absent

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  int degree(const std::string& node) const;

  bool is_connected() const;
  // Connected, no parallel edges, |E| = |V| - 1.
  bool is_tree() const;

  static void check_id(const std::string& id);

 private:
  std::vector<std::string> nodes_;  // sorted
  std::vector<Edge> edges_;         // sorted by id
};

// Node of a subdivision: either a branching node of the base multigraph or a
// subdivision node addressed as (edge, pos), pos counted 1..sub_count from the
// lexicographically smaller declared endpoint of the edge.
struct SubdivisionNode {
  int branch = -1;  // base node index, or -1
  int edge = -1;    // base edge index, or -1
  int pos = 0;      // 1..sub_count(edge)

  bool is_branching() const { return branch >= 0; }
};

// A subdivision of a multigraph, realized as an indexed graph: branching
// nodes first (in base order), then per edge (in id order) the subdivision
// nodes in path order.
class Subdivision {
 public:
  Subdivision() = default;
  Subdivision(MultiGraph base, std::map<std::string, int> sub_count);

  const MultiGraph& base() const { return base_; }
  int sub_count(int edge_index) const { return counts_[edge_index]; }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const SubdivisionNode& node(int i) const { return nodes_[i]; }
  const std::vector<int>& neighbors(int i) const { return adj_[i]; }
  bool is_branching(int i) const { return nodes_[i].is_branching(); }

  int branch_node(const std::string& base_node_name) const;  // -1 if absent
  int subdivision_node(int edge_index, int pos) const;

  std::string node_name(int i) const;
  // Parses a branching name or "e:<edge-id>:<pos>". Returns -1 if unknown.
  int parse_node(const std::string& token) const;

  // Nodes of the path realizing the given base edge, endpoints included,
  // oriented from the lexicographically smaller declared endpoint.
  const std::vector<int>& path_nodes(int edge_index) const { return paths_[edge_index]; }
  // Same path oriented to start at the given endpoint node.
  std::vector<int> path_from(int edge_index, int endpoint_node) const;

  // Hop distances from a node; unreachable entries are -1.
  std::vector<int> distances_from(int source) const;

  // Every edge of the realized graph as a normalized (lo, hi) index pair,
  // sorted; used by the border-edge machinery.
  std::vector<std::pair<int, int>> realized_edges() const;

 private:
  MultiGraph base_;
  std::vector<int> counts_;  // aligned with base_.edges()
  std::vector<SubdivisionNode> nodes_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::vector<int>> paths_;      // per edge, lex orientation
  std::vector<int> sub_first_;               // first subdivision-node index per edge
};

}  // namespace hgraph
