#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgraph/representation.hpp"
#include "hgraph/rng.hpp"
#include "hgraph/tree.hpp"

namespace hgraph::gen {

// A graph with a k-partition into equal-size classes.
struct MulticolorInstance {
  SimpleGraph g;
  std::vector<std::vector<int>> parts;  // vertex indices per class
  int padded = 0;                       // isolated vertices added to equalize sizes
};

// Builds an instance from named classes, padding the smaller classes with
// fresh isolated vertices so every class has the same size.
MulticolorInstance make_multicolor(const SimpleGraph& g,
                                   const std::vector<std::vector<std::string>>& parts_by_id);

// Random instance: k classes of p vertices, cross-class edges drawn i.i.d.
MulticolorInstance random_multicolor(int k, int p, double edge_prob, Rng rng);

struct ReductionOutput {
  HRepresentation rep;
  int64_t target = 0;                // k' = k(k+1)/2 for IS, k for DS
  std::vector<std::string> z_names;  // selector vertices z<i>_<s>
  std::vector<std::string> r_names;  // edge vertices r<i>_<j>_<s>_<t>
  std::vector<std::string> d_names;  // attachment vertices d<i> (DS reduction)
};

// Multicolored Clique -> Independent Set on an H-graph: the instance has a
// multicolored clique iff the output graph has an independent set of size
// k(k+1)/2.
ReductionOutput reduce_mcc_to_is(const MulticolorInstance& inst);

// Multicolored Independent Set -> Dominating Set: adds d_1..d_k; the instance
// has a multicolored independent set iff the output graph has a dominating
// set of size k.
ReductionOutput reduce_mis_to_ds(const MulticolorInstance& inst);

// The theta_r graph with every edge subdivided k times, represented by
// singleton models (|G| = kr + 2).
HRepresentation theta_instance(int r, int k);

struct RandomHParams {
  int sub_min = 1;
  int sub_max = 3;
  int len_min = 1;
  int len_max = 4;
  bool nice_models = false;  // never let a model take a second branching node
};

// Seed-deterministic valid representation with n vertices; models grow as
// random connected node sets (random start plus random frontier growth).
HRepresentation random_hgraph(const MultiGraph& h, int n, uint64_t seed,
                              const RandomHParams& params = {});

// Random tree with at most max_leaves leaves: a path, or a spider with
// max_leaves legs.
MultiGraph random_tree(int max_leaves, Rng& rng);

// Connected T-graph with a tree of at most max_leaves leaves; retries derived
// seeds until the intersection graph is connected.
TRepresentation random_connected_tgraph(int n, uint64_t seed, int max_leaves = 3,
                                        const RandomHParams& params = {0, 2, 1, 4, false});

// Exhaustive checks over one-vertex-per-class tuples.
bool multicolored_clique_oracle(const MulticolorInstance& inst, int64_t cap = 1'000'000);
bool multicolored_is_oracle(const MulticolorInstance& inst, int64_t cap = 1'000'000);

// Small base multigraphs used by the corpora and the CLI generator.
MultiGraph preset_multigraph(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace hgraph::gen
