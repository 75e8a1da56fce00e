#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "hgraph/representation.hpp"

namespace hgraph {

inline constexpr int kDefaultCutCap = 20;

// Caterpillar tree with a leaf-to-vertex bijection. Cuts are the vertex sets
// in bijection with the degree-one nodes of each rooted subtree.
struct Decomposition {
  struct TreeNode {
    std::string id;
    int parent = -1;
    std::vector<int> children;
    int leaf_vertex = -1;  // vertex index carried by this leaf, or -1
  };

  std::vector<int> order;  // v_1..v_n as vertex indices
  std::vector<TreeNode> tree;
  int root = -1;

  // Per tree node, the sorted vertex indices of its cut V_w.
  std::vector<std::vector<int>> cuts() const;
};

// Orders V(G) by non-decreasing hop distance of the models to the root
// branching node (ties by vertex id) and builds the caterpillar over that
// ordering. Root defaults to the lexicographically least branching node.
Decomposition caterpillar_decomposition(const HRepresentation& rep,
                                        const std::string& root_node = "");

// Exact maximum induced matching size of the bipartite cut graph G[X, X-bar].
// Twin vertices (equal cross-neighborhoods) are collapsed first; if more than
// `cap` cut-relevant vertices remain, throws Error(size_cap).
int cut_mim_exact(const SimpleGraph& g, const Bits& side, int cap = kDefaultCutCap);

// Number of d-neighborhood-equivalence classes of subsets of `side`.
// Exact: folds each side vertex once into the set of reachable capped
// neighborhood vectors, so no 2^|side| enumeration happens.
int64_t cut_nec(const SimpleGraph& g, const Bits& side, int d, int cap = kDefaultCutCap);

struct CutRow {
  std::string node_id;
  int cut_size = 0;
  bool verified = true;  // false when a size cap stopped the exact search
  int mim = -1;
  std::map<int, int64_t> nec_side;        // d -> nec_d(V_w)
  std::map<int, int64_t> nec_complement;  // d -> nec_d of the complement cut
  double boolw_cut = 0.0;                 // log2(nec_1(V_w))
  bool mim_ok = false;
  bool nec_ok = false;
  bool boolw_ok = false;
};

struct DecompositionReport {
  int n = 0;
  int h_edges = 0;  // ||H||
  std::vector<CutRow> rows;
  int global_mim = 0;
  double global_boolw = 0.0;
  bool mim_bound_ok = true;    // every verified cut has mim <= 2||H||
  bool nec_bound_ok = true;    // every verified cut has nec_d <= n^(d*mim)
  bool boolw_bound_ok = true;  // every verified cut has nec_1 <= n^(2||H||)
  bool all_verified = true;
};

// Per-cut metrics for every tree node, nec on both sides of each cut, plus
// global maxima and bound flags. Cuts above the cap are marked unverified
// rather than failing the whole report.
DecompositionReport decomposition_report(const HRepresentation& rep, const Decomposition& dec,
                                         const std::vector<int>& nec_ds = {1},
                                         int cap = kDefaultCutCap, int threads = 1);

// n^e saturating at INT64_MAX; the bound comparisons stay exact.
int64_t saturating_pow(int64_t base, int exponent);

}  // namespace hgraph
