#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hgraph/representation.hpp"
#include "hgraph/tree.hpp"

namespace hgraph {

inline constexpr int kDefaultDomsetCap = 16;
inline constexpr int64_t kInfSize = int64_t{1} << 50;

// ---------------------------------------------------------------------------
// Brute-force oracles.

struct DomsetOracleResult {
  int number = 0;
  std::vector<int> witness;  // vertex indices, lexicographically least minimum set
};

// Exact domination number by subset enumeration in increasing size.
DomsetOracleResult domset_oracle(const SimpleGraph& g, int cap = kDefaultDomsetCap);

// Every minimum dominating set.
std::vector<std::vector<int>> all_minimum_dominating_sets(const SimpleGraph& g,
                                                          int cap = kDefaultDomsetCap);

// Size-bounded decision by enumerating subsets of size <= k only; usable on
// larger graphs than the full oracle.
bool has_dominating_set_at_most(const SimpleGraph& g, int k,
                                int64_t enumeration_cap = 20'000'000);

// Minimum size of a dominating set whose colored members realize exactly the
// color set C (vertex_color[v] < 0 marks uncolored vertices). kInfSize if none.
int64_t constrained_domination_minimum(const SimpleGraph& g,
                                       const std::vector<int>& vertex_color,
                                       const std::vector<int>& color_set,
                                       int cap = kDefaultDomsetCap);

// ---------------------------------------------------------------------------
// Coloring by U-sets.

struct TColoring {
  std::vector<int> color;                              // per vertex, -1 for e-vertices
  std::vector<std::vector<std::string>> color_u_sets;  // color id -> sorted U
};

// Equal colors exactly for U-vertices with equal U; e-vertices stay uncolored.
TColoring color_by_u_sets(const HRepresentation& rep);

// ---------------------------------------------------------------------------
// Dominating Set Extension (the tree DP).

struct DomsetInstance {
  NiceRep rep;                                        // r-rooted nice representation
  int64_t k = 0;                                      // budget, compared by callers
  int d = 0;                                          // per-node cap on x-vertices
  std::vector<int> color;                             // per vertex index, -1 uncolored
  std::map<std::string, std::vector<int>> color_sets; // node name -> C_x (sorted)
};

struct ExtensionResult {
  bool feasible = false;
  int64_t value = kInfSize;
  std::vector<int> witness;  // vertex indices, |witness| <= value
};

// Minimum size of a dominating set D with at most d x-vertices per node and
// C_x = c(D ∩ V_G(x)) for every x, under the extension promise. A finite
// value always comes with a reconstructible witness of at most that size;
// infeasible instances (or promise-violating ones) report kInfSize.
// Disconnected graphs are split per component and the budgets added.
ExtensionResult solve_domset_extension(const DomsetInstance& inst);

// DP tables for inspection and the soundness tests.
struct DPTables {
  std::map<std::string, std::vector<int64_t>> beta;                 // loaded nodes, index 0 = i=1
  std::map<std::string, std::vector<int64_t>> gamma;                // unloaded nodes, index = i
  std::map<std::string, std::vector<std::pair<int64_t, int>>> eta;  // node -> per child (eta, psi)
};
DPTables extension_tables(const DomsetInstance& inst);

// Reconstructs the witness set behind one finite table entry (for the
// soundness checks); nullopt when the entry is infinite.
std::optional<std::vector<int>> extension_witness_at(const DomsetInstance& inst,
                                                     const std::string& node, bool loaded, int i);

// Minimum number of e-vertices of the given tree edge dominating X; 0 for
// empty X, kInfSize when some member has no e-vertex dominator. Greedy along
// the edge ordering; exact (cross-checked against brute force in tests).
struct AlphaResult {
  int64_t value = 0;
  std::vector<int> chosen;  // e-vertex indices
};
AlphaResult alpha_e(const NiceRep& rep, const std::string& edge_id, const std::vector<int>& x_set);

// ---------------------------------------------------------------------------
// The full T-graph pipeline: dissolve, color, enumerate color sets, rules,
// contractions, extension DP.

struct DomsetSolveStats {
  int64_t color_sets_tried = 0;
  int64_t rule1_discards = 0;
  int64_t rule3_discards = 0;
  int64_t dp_runs = 0;
  int64_t finite_values = 0;
};

struct TgraphDomsetResult {
  int64_t minimum = kInfSize;
  std::vector<std::string> witness;  // vertex ids of the original graph
  DomsetSolveStats stats;
};

// Exact domination number of the intersection graph of a T-representation.
// max_leaves > 0 bounds the dissolved tree's leaf count (Error(size_cap)
// beyond it); components are solved independently and summed.
TgraphDomsetResult domination_number_tgraph(const TRepresentation& t, int max_leaves = 0);

struct DomsetDecision {
  bool yes = false;
  std::vector<std::string> witness;
  DomsetSolveStats stats;
};

// Yes iff the intersection graph has a dominating set of size at most k.
DomsetDecision solve_domset_tgraph(const TRepresentation& t, int64_t k, int max_leaves = 0);

}  // namespace hgraph
