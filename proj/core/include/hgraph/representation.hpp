#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hgraph/bitset.hpp"
#include "hgraph/multigraph.hpp"

namespace hgraph {

// Simple graph over named vertices; adjacency is symmetric and irreflexive.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  explicit SimpleGraph(std::vector<std::string> vertex_ids);

  int n() const { return static_cast<int>(ids_.size()); }
  int m() const;
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int v) const { return ids_[v]; }
  int index_of(const std::string& id) const;  // -1 if absent

  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return adj_[u].test(v); }
  const Bits& neighbors(int v) const { return adj_[v]; }
  Bits closed_neighborhood(int v) const;
  int degree(int v) const { return adj_[v].count(); }

  std::vector<std::pair<int, int>> edge_list() const;  // sorted (u < v)
  std::vector<std::vector<int>> components() const;
  bool is_connected() const;
  SimpleGraph induced(const std::vector<int>& vertices) const;

 private:
  std::vector<std::string> ids_;  // sorted
  std::vector<Bits> adj_;
};

// The model of a vertex: a set of subdivision nodes, expected to be nonempty
// and to induce a connected subgraph of the subdivision.
using Model = Bits;

class HRepresentation {
 public:
  HRepresentation() = default;
  HRepresentation(Subdivision subdivision,
                  std::vector<std::pair<std::string, std::vector<int>>> models);

  const Subdivision& subdivision() const { return sub_; }
  int vertex_count() const { return static_cast<int>(vertex_ids_.size()); }
  const std::vector<std::string>& vertex_ids() const { return vertex_ids_; }
  const std::string& vertex_id(int v) const { return vertex_ids_[v]; }
  int vertex_index(const std::string& id) const;
  const Model& model(int v) const { return models_[v]; }
  const std::vector<Model>& models() const { return models_; }

  // |E(H)| counting multiplicities.
  int h_edge_count() const { return sub_.base().edge_count(); }
  int h_node_count() const { return sub_.base().node_count(); }

 private:
  Subdivision sub_;
  std::vector<std::string> vertex_ids_;  // sorted
  std::vector<Model> models_;
};

struct Violation {
  std::string vertex;
  std::string message;
};

// Empty result iff every model is nonempty, uses only realized nodes, and
// induces a connected subgraph of the subdivision.
std::vector<Violation> validate_representation(const HRepresentation& rep);

// Throws Error(validation) naming the first offending vertex if rep is invalid.
void require_valid(const HRepresentation& rep);

// Vertices are the model owners; u ~ v iff u != v and the models intersect.
SimpleGraph build_intersection_graph(const HRepresentation& rep);

struct Classification {
  bool is_e_vertex = false;
  std::vector<std::string> u_set;  // branching node names, sorted (U-vertex)
  std::string edge_id;             // owning edge (e-vertex)
};

// U-vertex with U = M_v ∩ V(H) when that set is nonempty, otherwise e-vertex
// of the unique edge whose path contains the model.
Classification classify_vertex(const HRepresentation& rep, int v);

// Classification of every vertex at once (cheaper than per-vertex calls).
std::vector<Classification> classify_all(const HRepresentation& rep);

}  // namespace hgraph
