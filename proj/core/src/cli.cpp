#include "hgraph/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "hgraph/clique.hpp"
#include "hgraph/decomposition.hpp"
#include "hgraph/domset.hpp"
#include "hgraph/errors.hpp"
#include "hgraph/generators.hpp"
#include "hgraph/io.hpp"
#include "hgraph/separators.hpp"
#include "hgraph/tree.hpp"
#include "hgraph/verify.hpp"

namespace hgraph::cli {

namespace {

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct ResolvedCaps {
  verify::Caps caps;
};

ResolvedCaps resolve_caps(const RunConfig& config) {
  ResolvedCaps out;
  int override_value = config.cap;
  if (override_value == 0) {
    if (const char* env = std::getenv("HGK_CAP")) {
      try {
        override_value = std::stoi(env);
      } catch (const std::exception&) {
        throw Error(ErrorKind::parameter, "HGK_CAP is not an integer");
      }
    }
  }
  if (override_value < 0) throw Error(ErrorKind::parameter, "cap must be positive");
  if (override_value > 0) {
    out.caps.separator = override_value;
    out.caps.domset = override_value;
    out.caps.clique = override_value;
    out.caps.cut = override_value;
  }
  return out;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, "cannot write '" + path + "'");
  return out;
}

void write_report_files(const Report& report, const std::string& path) {
  if (path.empty()) {
    report.write_tsv(std::cout);
    return;
  }
  std::ofstream tsv = open_out(path);
  report.write_tsv(tsv);
  std::ofstream json = open_out(path + ".json");
  report.write_json(json);
}

// ---- decompose --------------------------------------------------------------

int run_decompose(const RunConfig& config, Report& report) {
  ResolvedCaps caps = resolve_caps(config);
  io::HgrFile file = io::read_hgr_file(config.input);
  Decomposition dec = caterpillar_decomposition(file.rep, config.root);
  std::vector<int> ds = {1};
  if (config.nec_d > 1) ds.push_back(config.nec_d);
  DecompositionReport dr =
      decomposition_report(file.rep, dec, ds, caps.caps.cut, config.threads);

  // Fixed-column table, one row per tree node, plus a global summary row.
  std::ostringstream tsv;
  nlohmann::json json = nlohmann::json::array();
  tsv << "node\tcut_size\tmim";
  for (int d : ds) tsv << "\tnec_d" << d << "\tnec_d" << d << "_comp";
  tsv << "\tboolw_cut\tbound_ok\n";
  for (const CutRow& row : dr.rows) {
    bool ok = row.mim_ok && row.nec_ok && row.boolw_ok;
    tsv << row.node_id << "\t" << row.cut_size << "\t"
        << (row.verified ? std::to_string(row.mim) : "-");
    nlohmann::json entry{{"node", row.node_id}, {"cut_size", row.cut_size}};
    if (row.verified) {
      entry["mim"] = row.mim;
      entry["boolw_cut"] = row.boolw_cut;
      entry["bound_ok"] = ok;
    }
    for (int d : ds) {
      if (row.verified) {
        tsv << "\t" << row.nec_side.at(d) << "\t" << row.nec_complement.at(d);
        entry["nec_d" + std::to_string(d)] = row.nec_side.at(d);
        entry["nec_d" + std::to_string(d) + "_comp"] = row.nec_complement.at(d);
      } else {
        tsv << "\t-\t-";
      }
    }
    if (row.verified) {
      tsv << "\t" << row.boolw_cut << "\t" << (ok ? "yes" : "NO") << "\n";
    } else {
      tsv << "\t-\tunverified\n";
      entry["bound_ok"] = "unverified";
    }
    json.push_back(entry);
    report.add({file.name + "/" + row.node_id, "cut_bounds", "-", "-", !row.verified || ok, 0.0});
  }
  tsv << "global\t" << dr.n << "\t" << dr.global_mim << "\t-";
  for (size_t i = 1; i < ds.size(); ++i) tsv << "\t-\t-";
  tsv << "\t-\t" << dr.global_boolw << "\t"
      << (dr.mim_bound_ok && dr.nec_bound_ok && dr.boolw_bound_ok ? "yes" : "NO") << "\n";

  if (config.out.empty()) {
    std::cout << tsv.str();
  } else {
    std::ofstream out = open_out(config.out);
    out << tsv.str();
    std::ofstream jout = open_out(config.out + ".json");
    jout << json.dump(2) << "\n";
  }
  report.sort_records();
  return report.failures() ? 1 : 0;
}

// ---- separators ---------------------------------------------------------------

int run_separators(const RunConfig& config) {
  ResolvedCaps caps = resolve_caps(config);
  std::ostringstream body;
  int exit_code = 0;

  if (ends_with(config.input, ".gr")) {
    SimpleGraph g = io::read_gr_file(config.input);
    SeparatorSet seps = minimal_separators_oracle(g, caps.caps.separator);
    for (const auto& sep : seps.separators) {
      for (size_t i = 0; i < sep.size(); ++i) body << (i ? " " : "") << g.id(sep[i]);
      body << "\n";
    }
    body << "count " << seps.separators.size() << "\n";
    body << "bound -\n";
  } else {
    io::HgrFile file = io::read_hgr_file(config.input);
    SimpleGraph g = build_intersection_graph(file.rep);
    SeparatorSet seps = hgraph_minimal_separators(file.rep, caps.caps.separator);
    if (config.oracle) {
      SeparatorSet slow = minimal_separators_oracle(g, caps.caps.separator);
      if (!(slow.separators == seps.separators)) exit_code = 1;
    }
    for (const auto& sep : seps.separators) {
      for (size_t i = 0; i < sep.size(); ++i) body << (i ? " " : "") << g.id(sep[i]);
      body << "\n";
    }
    body << "count " << seps.separators.size() << "\n";
    int64_t bound = separator_count_bound(g.n(), file.rep.h_edge_count());
    bool ok = static_cast<int64_t>(seps.separators.size()) <= bound;
    body << "bound " << bound << " " << (ok ? "pass" : "FAIL") << "\n";
    if (config.bound_check && !ok) exit_code = 1;
  }

  if (config.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out = open_out(config.out);
    out << body.str();
  }
  return exit_code;
}

// ---- domset -------------------------------------------------------------------

int run_domset(const RunConfig& config) {
  ResolvedCaps caps = resolve_caps(config);
  if (config.k < 1) throw Error(ErrorKind::parameter, "domset needs --k >= 1");

  TRepresentation t;
  if (ends_with(config.input, ".gr")) {
    SimpleGraph g = io::read_gr_file(config.input);
    t = clique_tree(g);
  } else {
    io::HgrFile file = io::read_hgr_file(config.input);
    const MultiGraph& base = file.rep.subdivision().base();
    if (!base.is_tree())
      throw Error(ErrorKind::type, "domset needs a T-representation; base is not a tree");
    t = TRepresentation(file.rep, base.nodes()[0]);
  }

  TgraphDomsetResult res = domination_number_tgraph(t, config.max_leaves);
  bool yes = res.minimum <= config.k;

  std::ostringstream body;
  body << "verdict " << (yes ? "yes" : "no") << "\n";
  body << "minimum " << res.minimum << "\n";
  if (yes) {
    body << "witness";
    for (const std::string& id : res.witness) body << " " << id;
    body << "\n";
  }
  body << "color-sets-tried " << res.stats.color_sets_tried << "\n";
  body << "rule1-discards " << res.stats.rule1_discards << "\n";
  body << "rule3-discards " << res.stats.rule3_discards << "\n";
  body << "dp-runs " << res.stats.dp_runs << "\n";
  body << "finite-values " << res.stats.finite_values << "\n";

  int exit_code = 0;
  if (config.oracle_check) {
    SimpleGraph g = build_intersection_graph(t.rep());
    DomsetOracleResult oracle = domset_oracle(g, caps.caps.domset);
    body << "oracle " << oracle.number << " "
         << (oracle.number == res.minimum ? "pass" : "FAIL") << "\n";
    if (oracle.number != res.minimum) exit_code = 1;
  }
  if (config.out.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out = open_out(config.out);
    out << body.str();
  }
  return exit_code;
}

// ---- clique -------------------------------------------------------------------

int run_clique(const RunConfig& config) {
  ResolvedCaps caps = resolve_caps(config);
  if (config.k < 1) throw Error(ErrorKind::parameter, "clique needs --k >= 1");
  io::HgrFile file = io::read_hgr_file(config.input);
  SimpleGraph g = build_intersection_graph(file.rep);

  std::ostringstream body;
  if (!config.kernel_only) {
    std::vector<int> via_e = max_clique_with_e_vertex(file.rep);
    body << "e-clique " << via_e.size();
    for (int v : via_e) body << " " << g.id(v);
    body << "\n";
  }

  KernelOutput kernel = clique_kernel(file.rep, static_cast<int>(config.k));
  body << "verdict " << (kernel.yes ? "yes" : "reduced") << "\n";
  if (kernel.yes) {
    body << "certificate";
    for (const std::string& id : kernel.certificate) body << " " << id;
    body << "\n";
  } else {
    body << "kernel-vertices " << kernel.reduced.n() << " bound " << kernel.size_bound << "\n";
  }

  int exit_code = 0;
  if (config.oracle_check) {
    int omega = clique_oracle(g, caps.caps.clique).omega;
    bool consistent;
    if (kernel.yes) {
      consistent = omega >= config.k;
    } else {
      int reduced_omega = clique_oracle(kernel.reduced, caps.caps.clique).omega;
      consistent = (reduced_omega >= config.k) == (omega >= config.k);
    }
    body << "oracle omega " << omega << " " << (consistent ? "pass" : "FAIL") << "\n";
    if (!consistent) exit_code = 1;
  }

  std::ostringstream kernel_gr;
  if (!kernel.yes) io::write_gr(kernel_gr, kernel.reduced);
  if (config.out.empty()) {
    std::cout << body.str();
    if (!kernel.yes) std::cout << kernel_gr.str();
  } else {
    std::ofstream out = open_out(config.out);
    out << body.str();
    if (!kernel.yes) {
      std::ofstream gr = open_out(config.out + ".gr");
      gr << kernel_gr.str();
    }
  }
  return exit_code;
}

// ---- generate -------------------------------------------------------------------

int run_generate(const RunConfig& config) {
  if (config.out.empty()) throw Error(ErrorKind::parameter, "generate needs --out");

  if (config.kind == "theta") {
    HRepresentation rep = gen::theta_instance(config.r, config.subdiv);
    io::write_hgr_file(config.out, rep, "theta" + std::to_string(config.r));
    return 0;
  }
  if (config.kind == "random") {
    gen::RandomHParams params{config.sub_min, config.sub_max, config.len_min, config.len_max,
                              false};
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph(config.h_preset), config.n,
                                             config.seed, params);
    io::write_hgr_file(config.out, rep, config.h_preset);
    return 0;
  }
  if (config.kind == "reduction-is" || config.kind == "reduction-ds") {
    gen::MulticolorInstance inst;
    if (!config.gr_input.empty()) {
      if (config.parts_input.empty())
        throw Error(ErrorKind::parameter, "reductions from .gr need --parts");
      SimpleGraph g = io::read_gr_file(config.gr_input);
      inst = gen::make_multicolor(g, io::read_parts_file(config.parts_input));
      if (inst.padded > 0)
        std::cerr << "warning: padded parts with " << inst.padded << " isolated vertices\n";
    } else {
      inst = gen::random_multicolor(config.parts_k, config.parts_p, config.edge_prob,
                                    Rng(config.seed));
    }
    gen::ReductionOutput out = config.kind == "reduction-is" ? gen::reduce_mcc_to_is(inst)
                                                             : gen::reduce_mis_to_ds(inst);
    io::write_hgr_file(config.out, out.rep, config.kind);
    std::cout << "target " << out.target << "\n";
    return 0;
  }
  throw Error(ErrorKind::parameter, "unknown generate kind '" + config.kind + "'");
}

// ---- verify -------------------------------------------------------------------

int run_verify(const RunConfig& config, Report& report) {
  ResolvedCaps caps = resolve_caps(config);
  std::vector<std::string> families;
  if (config.suite != "all") {
    std::istringstream in(config.suite);
    std::string name;
    while (std::getline(in, name, ','))
      if (!name.empty()) families.push_back(name);
  }
  report = verify::run_suite(families, config.seed, config.count, caps.caps, config.threads,
                             config.inject_fault);
  write_report_files(report, config.out);
  std::cout << "records " << report.records.size() << " failures " << report.failures()
            << " wall-ms " << static_cast<int64_t>(report.total_wall_ms()) << "\n";
  return report.failures() ? 1 : 0;
}

}  // namespace

DispatchResult dispatch(const RunConfig& config) {
  DispatchResult result;
  try {
    if (config.subcommand == "decompose") {
      result.exit_code = run_decompose(config, result.report);
    } else if (config.subcommand == "separators") {
      result.exit_code = run_separators(config);
    } else if (config.subcommand == "domset") {
      result.exit_code = run_domset(config);
    } else if (config.subcommand == "clique") {
      result.exit_code = run_clique(config);
    } else if (config.subcommand == "generate") {
      result.exit_code = run_generate(config);
    } else if (config.subcommand == "verify") {
      result.exit_code = run_verify(config, result.report);
    } else {
      std::cerr << "unknown subcommand '" << config.subcommand << "'\n";
      result.exit_code = 2;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    result.exit_code = 2;
  }
  return result;
}

}  // namespace hgraph::cli
