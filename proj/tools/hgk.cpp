// hgk — command-line front end for the H-graph toolkit.

#include <CLI11.hpp>

#include "hgraph/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Exact combinatorial algorithms on H-graph representations"};
  app.require_subcommand(1);

  hgraph::cli::RunConfig config;
  auto add_globals = [&](CLI::App* cmd) {
    cmd->add_option("--seed", config.seed, "master seed");
    cmd->add_option("--cap", config.cap, "override every exhaustive-search cap");
    cmd->add_option("--threads", config.threads, "worker threads for independent instances");
    cmd->add_option("--out", config.out, "output path");
  };

  CLI::App* decompose = app.add_subcommand("decompose", "caterpillar decomposition and cut metrics");
  decompose->add_option("--input", config.input, ".hgr representation")->required();
  decompose->add_option("--root", config.root, "branching node to root the ordering at");
  decompose->add_option("--nec-d", config.nec_d, "extra neighborhood-equivalence depth");
  decompose->add_option("--report", config.out, "report path (TSV + JSON mirror)");
  add_globals(decompose);

  CLI::App* separators = app.add_subcommand("separators", "minimal separator enumeration");
  separators->add_option("--input", config.input, ".hgr or .gr input")->required();
  separators->add_flag("--oracle", config.oracle, "cross-check against the exhaustive oracle");
  separators->add_flag("--bound-check", config.bound_check, "fail when the count bound breaks");
  add_globals(separators);

  CLI::App* domset = app.add_subcommand("domset", "dominating set on T-graphs");
  domset->add_option("--input", config.input, ".hgr (tree base) or .gr (chordal)")->required();
  domset->add_option("--k", config.k, "budget")->required();
  domset->add_flag("--oracle-check", config.oracle_check, "compare with the brute-force oracle");
  domset->add_option("--max-leaves", config.max_leaves, "refuse trees with more leaves");
  add_globals(domset);

  CLI::App* clique = app.add_subcommand("clique", "clique kernelization");
  clique->add_option("--input", config.input, ".hgr representation")->required();
  clique->add_option("--k", config.k, "target clique size")->required();
  clique->add_flag("--kernel-only", config.kernel_only, "skip the standalone e-clique report");
  clique->add_flag("--oracle-check", config.oracle_check, "compare with the brute-force oracle");
  add_globals(clique);

  CLI::App* generate = app.add_subcommand("generate", "instance generators");
  generate->add_option("kind", config.kind, "reduction-is | reduction-ds | theta | random")
      ->required();
  generate->add_option("--base", config.h_preset, "base multigraph preset (random)");
  generate->add_option("--n", config.n, "vertex count (random)");
  generate->add_option("--r", config.r, "parallel edge count (theta)");
  generate->add_option("--subdiv", config.subdiv, "subdivisions per edge (theta)");
  generate->add_option("--k", config.parts_k, "class count (reductions)");
  generate->add_option("--p", config.parts_p, "class size (reductions)");
  generate->add_option("--edge-prob", config.edge_prob, "cross-class edge probability");
  generate->add_option("--gr", config.gr_input, "source graph for reductions");
  generate->add_option("--parts", config.parts_input, "parts file for reductions");
  generate->add_option("--sub-min", config.sub_min, "minimum subdivisions per edge (random)");
  generate->add_option("--sub-max", config.sub_max, "maximum subdivisions per edge (random)");
  generate->add_option("--len-min", config.len_min, "minimum model size (random)");
  generate->add_option("--len-max", config.len_max, "maximum model size (random)");
  add_globals(generate);

  CLI::App* verify = app.add_subcommand("verify", "run the cross-check corpus");
  verify->add_option("--suite", config.suite, "all or comma-separated families");
  verify->add_option("--count", config.count, "instances per family");
  verify->add_flag("--inject-fault", config.inject_fault, "append one failing record");
  add_globals(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  config.subcommand = app.get_subcommands().front()->get_name();
  return hgraph::cli::dispatch(config).exit_code;
}
