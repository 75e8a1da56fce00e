#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hgraph/report.hpp"

namespace hgraph::cli {

// Parsed command-line request; the thin binary in tools/ maps flags onto this.
struct RunConfig {
  std::string subcommand;

  // global
  uint64_t seed = 1;
  int cap = 0;  // 0 = per-operation defaults; HGK_CAP overrides when set
  int threads = 1;
  std::string out;

  // decompose
  std::string input;
  std::string root;
  int nec_d = 1;

  // separators
  bool oracle = false;
  bool bound_check = false;

  // domset / clique
  int64_t k = 0;
  bool oracle_check = false;
  int max_leaves = 4;
  bool kernel_only = false;

  // generate
  std::string kind;  // reduction-is | reduction-ds | theta | random
  std::string h_preset = "p2";
  int n = 8;
  int r = 2;
  int subdiv = 1;
  int parts_k = 2;
  int parts_p = 2;
  double edge_prob = 0.5;
  std::string gr_input;
  std::string parts_input;
  int sub_min = 1, sub_max = 3, len_min = 1, len_max = 4;

  // verify
  std::string suite = "all";
  int count = 50;
  bool inject_fault = false;
};

struct DispatchResult {
  int exit_code = 0;  // 0 ok, 1 verification failure, 2 input error
  Report report;
};

// Runs the named subcommand. Exit code 2 covers malformed files and bad
// parameters; exit code 1 any bound or oracle mismatch.
DispatchResult dispatch(const RunConfig& config);

}  // namespace hgraph::cli
