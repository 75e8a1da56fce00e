#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgraph/report.hpp"

namespace hgraph::verify {

struct Caps {
  int separator = 16;
  int domset = 16;
  int clique = 20;
  int cut = 20;
};

// The cross-check families, one per bound battery:
//   mim          caterpillar cuts satisfy mim <= 2||H||
//   boolw        nec_1 <= n^(2||H||) and nec_d <= n^(d*mim) per cut, d in {1,2}
//   separators   border-edge enumeration set-equals the oracle, count bound
//   theta        theta_r separator counts reach k^r
//   domset       pipeline minimum equals the oracle, witnesses verify
//   alpha        greedy e-vertex domination equals exhaustive search
//   contraction  constrained minima survive the A and A' batches
//   kernel       kernel preserves the clique answer within the size bound
//   reductions   construction sizes, the adjacency law, and both iffs
//   nodebudget   minimum dominating sets use at most 3|V(T)|-2 node-vertices
std::vector<std::string> family_names();

// Runs one family; count scales the corpus (instances, or pairs for alpha).
Report run_family(const std::string& family, uint64_t seed, int count, const Caps& caps,
                  int threads = 1);

// Runs the named families (or all when the list is empty) with the per-family
// default counts scaled by `count`. inject_fault appends one deliberately
// failing record so the failure path stays testable.
Report run_suite(const std::vector<std::string>& families, uint64_t seed, int count,
                 const Caps& caps, int threads = 1, bool inject_fault = false);

}  // namespace hgraph::verify
