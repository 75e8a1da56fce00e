#include "hgraph/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "hgraph/clique.hpp"
#include "hgraph/decomposition.hpp"
#include "hgraph/domset.hpp"
#include "hgraph/errors.hpp"
#include "hgraph/generators.hpp"
#include "hgraph/rng.hpp"
#include "hgraph/separators.hpp"
#include "hgraph/tree.hpp"
#include "hgraph/util.hpp"

namespace hgraph::verify {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

struct Preset {
  const char* name;
  int h_edges;
};
constexpr Preset kRoster[] = {{"p2", 1},      {"theta2", 2},   {"p3", 2},
                              {"theta3", 3},  {"triangle", 3}, {"k13", 3}};
constexpr int kRosterSize = 6;

std::string instance_tag(const std::string& family, const Preset& preset, int index, int n) {
  return family + "/" + preset.name + "/i" + std::to_string(index) + "/n" + std::to_string(n);
}

uint64_t derive(uint64_t seed, const std::string& family, int index) {
  return Rng(seed).split(family).split(static_cast<uint64_t>(index)).next();
}

// ---- cut metric bounds ------------------------------------------------------

Report family_cuts(uint64_t seed, int count, const Caps& caps, int threads, bool boolw) {
  const std::string family = boolw ? "boolw" : "mim";
  std::vector<Record> rows_flat;
  auto one = [&](size_t idx) {
    auto start = Clock::now();
    const Preset& preset = kRoster[idx % kRosterSize];
    const int n = 4 + static_cast<int>(idx) % 11;  // 4..14
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph(preset.name), n,
                                             derive(seed, family, static_cast<int>(idx)));
    Decomposition dec = caterpillar_decomposition(rep);
    DecompositionReport report = decomposition_report(rep, dec, {1, 2}, caps.cut);
    std::string tag = instance_tag(family, preset, static_cast<int>(idx), n);
    std::vector<Record> out;
    if (!boolw) {
      out.push_back({tag, "mim_max", std::to_string(report.global_mim),
                     "<=" + std::to_string(2 * preset.h_edges),
                     report.all_verified && report.mim_bound_ok, ms_since(start)});
    } else {
      out.push_back({tag, "nec1_le_n_pow_2H", "per-cut", "n^" + std::to_string(2 * preset.h_edges),
                     report.all_verified && report.boolw_bound_ok, ms_since(start) / 2});
      out.push_back({tag, "necd_le_n_pow_dmim", "d in {1,2}", "n^(d*mim)",
                     report.all_verified && report.nec_bound_ok, ms_since(start) / 2});
    }
    return out;
  };
  auto rows = parallel_map<std::vector<Record>>(count, threads, one);
  Report report;
  for (auto& rs : rows)
    for (Record& r : rs) report.add(std::move(r));
  return report;
}

// ---- separator enumeration --------------------------------------------------

Report family_separators(uint64_t seed, int count, const Caps& caps, int threads) {
  auto one = [&](size_t idx) {
    auto start = Clock::now();
    const Preset& preset = kRoster[idx % kRosterSize];
    const int n = 4 + static_cast<int>(idx) % 9;  // 4..12
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph(preset.name), n,
                                             derive(seed, "separators", static_cast<int>(idx)));
    SimpleGraph g = build_intersection_graph(rep);
    SeparatorSet fast = hgraph_minimal_separators(rep, caps.separator);
    SeparatorSet slow = minimal_separators_oracle(g, caps.separator);
    int64_t bound = separator_count_bound(g.n(), rep.h_edge_count());
    std::string tag = instance_tag("separators", preset, static_cast<int>(idx), n);
    std::vector<Record> out;
    out.push_back({tag, "set_equals_oracle", std::to_string(fast.separators.size()),
                   "== " + std::to_string(slow.separators.size()),
                   fast.separators == slow.separators, ms_since(start)});
    out.push_back({tag, "count_bound", std::to_string(fast.separators.size()),
                   "<=" + std::to_string(bound),
                   static_cast<int64_t>(fast.separators.size()) <= bound, 0.0});
    return out;
  };
  auto rows = parallel_map<std::vector<Record>>(count, threads, one);
  Report report;
  for (auto& rs : rows)
    for (Record& r : rs) report.add(std::move(r));
  return report;
}

// ---- theta separator lower bound --------------------------------------------

Report family_theta(const Caps& caps) {
  Report report;
  const std::pair<int, int> cases[] = {{2, 2}, {3, 2}, {4, 3}};
  for (auto [r, k] : cases) {
    auto start = Clock::now();
    HRepresentation rep = gen::theta_instance(r, k);
    SimpleGraph g = build_intersection_graph(rep);
    SeparatorSet seps = minimal_separators_oracle(g, std::max(caps.separator, g.n()));
    int64_t lower = 1;
    for (int i = 0; i < r; ++i) lower *= k;
    std::string tag = "theta/r" + std::to_string(r) + "k" + std::to_string(k) + "/n" +
                      std::to_string(g.n());
    report.add({tag, "oracle_count_ge_k_pow_r", std::to_string(seps.separators.size()),
                ">=" + std::to_string(lower),
                static_cast<int64_t>(seps.separators.size()) >= lower, ms_since(start)});
  }
  return report;
}

// ---- dominating-set pipeline ------------------------------------------------

TRepresentation domset_corpus_item(uint64_t seed, int idx) {
  const int n = 4 + idx % 9;  // 4..12
  return gen::random_connected_tgraph(n, derive(seed, "domset", idx), 3);
}

Report family_domset(uint64_t seed, int count, const Caps& caps, int threads) {
  auto one = [&](size_t idx) {
    auto start = Clock::now();
    TRepresentation t = domset_corpus_item(seed, static_cast<int>(idx));
    SimpleGraph g = build_intersection_graph(t.rep());
    DomsetOracleResult oracle = domset_oracle(g, caps.domset);

    auto witness_dominates_at = [&](const std::vector<std::string>& ids, int64_t k) {
      if (static_cast<int64_t>(ids.size()) > k) return false;
      Bits covered(g.n());
      for (const std::string& id : ids) {
        int v = g.index_of(id);
        if (v < 0) return false;
        covered.set(v);
        covered |= g.neighbors(v);
      }
      return covered.count() == g.n();
    };

    // Every budget k in 1..n, verdict against the oracle, witnesses verified.
    bool verdicts_ok = true, witnesses_ok = true;
    for (int k = 1; k <= g.n(); ++k) {
      DomsetDecision decision = solve_domset_tgraph(t, k);
      verdicts_ok = verdicts_ok && decision.yes == (oracle.number <= k);
      if (decision.yes) witnesses_ok = witnesses_ok && witness_dominates_at(decision.witness, k);
    }
    TgraphDomsetResult fast = domination_number_tgraph(t);

    std::string tag =
        "domset/i" + std::to_string(idx) + "/n" + std::to_string(g.n());
    std::vector<Record> out;
    out.push_back({tag, "verdict_equals_oracle_every_k", std::to_string(fast.minimum),
                   "== " + std::to_string(oracle.number),
                   verdicts_ok && fast.minimum == oracle.number, ms_since(start)});
    out.push_back({tag, "witness_dominates_at_size", std::to_string(fast.witness.size()), "-",
                   witnesses_ok && witness_dominates_at(fast.witness, fast.minimum), 0.0});
    return out;
  };
  auto rows = parallel_map<std::vector<Record>>(count, threads, one);
  Report report;
  for (auto& rs : rows)
    for (Record& r : rs) report.add(std::move(r));
  return report;
}

// ---- e-vertex domination subroutine -----------------------------------------

Report family_alpha(uint64_t seed, int count, const Caps&) {
  Report report;
  int pairs = 0;
  for (int inst = 0; pairs < count && inst < 50 * count; ++inst) {
    TRepresentation t;
    try {
      t = gen::random_connected_tgraph(10, derive(seed, "alpha", inst), 3, {2, 4, 1, 4, true});
    } catch (const Error&) {
      continue;
    }
    NiceRep nice{t};
    const HRepresentation& rep = t.rep();
    SimpleGraph g = build_intersection_graph(rep);
    std::vector<Classification> cls = classify_all(rep);
    Rng rng = Rng(derive(seed, "alpha-x", inst));
    for (const auto& edge : rep.subdivision().base().edges()) {
      if (pairs >= count) break;
      std::vector<int> everts;
      for (int v = 0; v < rep.vertex_count(); ++v)
        if (cls[v].is_e_vertex && cls[v].edge_id == edge.id) everts.push_back(v);
      if (everts.empty() || everts.size() > 10) continue;
      int e = rep.subdivision().base().edge_index(edge.id);
      std::vector<int> u_e;
      for (int v = 0; v < rep.vertex_count(); ++v) {
        bool meets = false;
        for (int node : rep.subdivision().path_nodes(e))
          meets = meets || rep.model(v).test(node);
        if (meets) u_e.push_back(v);
      }
      for (int trial = 0; trial < 4 && pairs < count; ++trial) {
        auto start = Clock::now();
        std::vector<int> x_set;
        for (int v : u_e)
          if (rng.chance(0.4)) x_set.push_back(v);
        AlphaResult fast = alpha_e(nice, edge.id, x_set);
        // Exhaustive minimum over e-vertex subsets.
        int64_t slow = kInfSize;
        for (uint32_t mask = 0; mask < (uint32_t{1} << everts.size()); ++mask) {
          if (x_set.empty()) {
            slow = 0;
            break;
          }
          bool all = true;
          for (int w : x_set) {
            bool dom = false;
            for (size_t i = 0; i < everts.size() && !dom; ++i)
              if (mask >> i & 1) dom = everts[i] == w || g.adjacent(everts[i], w);
            all = all && dom;
            if (!all) break;
          }
          if (all) slow = std::min<int64_t>(slow, __builtin_popcount(mask));
        }
        report.add({"alpha/i" + std::to_string(inst) + "/" + edge.id + "/t" +
                        std::to_string(trial),
                    "greedy_equals_exhaustive",
                    fast.value >= kInfSize ? "inf" : std::to_string(fast.value),
                    slow >= kInfSize ? "== inf" : "== " + std::to_string(slow),
                    fast.value == slow, ms_since(start)});
        ++pairs;
      }
    }
  }
  return report;
}

// ---- contraction batches, value level ---------------------------------------

Report family_contraction(uint64_t seed, int count, const Caps& caps) {
  Report report;
  int instances = 0;
  for (int idx = 0; instances < count && idx < 50 * count; ++idx) {
    TRepresentation t;
    try {
      t = gen::random_connected_tgraph(4 + idx % 7, derive(seed, "contraction", idx), 3);
    } catch (const Error&) {
      continue;
    }
    const HRepresentation& rep = t.rep();
    const MultiGraph& tree = rep.subdivision().base();
    SimpleGraph g = build_intersection_graph(rep);
    TColoring coloring = color_by_u_sets(rep);
    std::vector<Classification> cls = classify_all(rep);
    const int ncolors = static_cast<int>(coloring.color_u_sets.size());
    if (ncolors == 0) continue;
    Rng rng = Rng(derive(seed, "contraction-c", idx));

    // Candidate color sets: the trace of one minimum dominating set plus two
    // random draws.
    std::vector<std::vector<int>> candidate_sets;
    {
      DomsetOracleResult oracle = domset_oracle(g, caps.domset);
      std::set<int> trace;
      for (int v : oracle.witness)
        if (coloring.color[v] >= 0) trace.insert(coloring.color[v]);
      candidate_sets.emplace_back(trace.begin(), trace.end());
    }
    for (int draw = 0; draw < 2; ++draw) {
      std::vector<int> c_set;
      for (int c = 0; c < ncolors; ++c)
        if (rng.chance(0.5)) c_set.push_back(c);
      candidate_sets.push_back(std::move(c_set));
    }

    bool instance_used = false;
    for (const std::vector<int>& c_set : candidate_sets) {
      std::set<int> c_lookup(c_set.begin(), c_set.end());
      std::vector<std::string> batch_a, batch_a2;
      bool a2_ok = true;
      for (const auto& edge : tree.edges()) {
        int na = rep.subdivision().branch_node(edge.a);
        int nb = rep.subdivision().branch_node(edge.b);
        bool span_c = false, span_any = false, touched_c = false;
        for (int v = 0; v < g.n(); ++v) {
          if (coloring.color[v] < 0) continue;
          bool chosen = c_lookup.count(coloring.color[v]) > 0;
          bool at_a = rep.model(v).test(na), at_b = rep.model(v).test(nb);
          if (chosen && (at_a || at_b)) touched_c = true;
          if (at_a && at_b) {
            span_any = true;
            span_c = span_c || chosen;
          }
        }
        if (span_c) batch_a.push_back(edge.id);
        if (span_any && !span_c && !touched_c) {
          batch_a2.push_back(edge.id);
          for (int v = 0; v < g.n(); ++v)
            if (cls[v].is_e_vertex && cls[v].edge_id == edge.id) a2_ok = false;
        }
      }
      auto constrained = [&](const TRepresentation& tr) {
        SimpleGraph gg = build_intersection_graph(tr.rep());
        std::vector<int> colors(gg.n(), -1);
        for (int v = 0; v < gg.n(); ++v) {
          int orig = g.index_of(gg.id(v));
          if (orig >= 0) colors[v] = coloring.color[orig];
        }
        return constrained_domination_minimum(gg, colors, c_set, caps.domset);
      };
      std::string tag = "contraction/i" + std::to_string(idx) + "/c" +
                        std::to_string(c_set.size());
      int64_t base = kInfSize + 1;  // computed lazily
      if (!batch_a.empty()) {
        auto start = Clock::now();
        base = constrained_domination_minimum(g, coloring.color, c_set, caps.domset);
        TRepresentation contracted = t;
        for (const std::string& id : batch_a) contracted = contract_tree_edge(contracted, id);
        int64_t after = constrained(contracted);
        report.add({tag, "chosen_color_batch_value_preserved",
                    after >= kInfSize ? "inf" : std::to_string(after),
                    base >= kInfSize ? "== inf" : "== " + std::to_string(base), after == base,
                    ms_since(start)});
        instance_used = true;
      }
      if (!batch_a2.empty() && a2_ok) {
        auto start = Clock::now();
        if (base > kInfSize)
          base = constrained_domination_minimum(g, coloring.color, c_set, caps.domset);
        TRepresentation contracted = t;
        for (const std::string& id : batch_a2) contracted = contract_tree_edge(contracted, id);
        int64_t after = constrained(contracted);
        report.add({tag, "unchosen_color_batch_value_preserved",
                    after >= kInfSize ? "inf" : std::to_string(after),
                    base >= kInfSize ? "== inf" : "== " + std::to_string(base), after == base,
                    ms_since(start)});
        instance_used = true;
      }
    }
    if (instance_used) ++instances;
  }
  return report;
}

// ---- clique kernel ----------------------------------------------------------

int best_clique_with_e_vertex_brute(const HRepresentation& rep, const SimpleGraph& g, int cap) {
  std::vector<Classification> cls = classify_all(rep);
  int best = 0;
  for (int u = 0; u < g.n(); ++u) {
    if (!cls[u].is_e_vertex) continue;
    // max clique containing u = 1 + omega(G[N(u)])
    std::vector<int> nb = g.neighbors(u).to_vector();
    best = std::max(best, 1 + clique_oracle(g.induced(nb), cap).omega);
  }
  return best;
}

Report family_kernel(uint64_t seed, int count, const Caps& caps, int threads) {
  auto one = [&](size_t idx) {
    auto start = Clock::now();
    const Preset& preset = kRoster[idx % kRosterSize];
    const int n = 4 + static_cast<int>(idx) % 11;  // 4..14
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph(preset.name), n,
                                             derive(seed, "kernel", static_cast<int>(idx)));
    SimpleGraph g = build_intersection_graph(rep);
    int omega = clique_oracle(g, std::max(caps.clique, g.n())).omega;
    std::string tag = instance_tag("kernel", preset, static_cast<int>(idx), n);
    std::vector<Record> out;

    std::vector<int> via_e = max_clique_with_e_vertex(rep);
    int brute = best_clique_with_e_vertex_brute(rep, g, std::max(caps.clique, g.n()));
    out.push_back({tag, "e_clique_equals_brute", std::to_string(via_e.size()),
                   "== " + std::to_string(brute), static_cast<int>(via_e.size()) == brute,
                   ms_since(start)});

    for (int k : {2, 3, 4}) {
      KernelOutput kernel = clique_kernel(rep, k);
      bool answer_ok, size_ok = true;
      if (kernel.yes) {
        answer_ok = omega >= k && static_cast<int>(kernel.certificate.size()) >= k;
      } else {
        int reduced_omega = clique_oracle(kernel.reduced, std::max(caps.clique, g.n())).omega;
        answer_ok = (reduced_omega >= k) == (omega >= k);
        size_ok = kernel.reduced.n() <= kernel.size_bound;
      }
      out.push_back({tag, "kernel_answer_preserved_k" + std::to_string(k),
                     kernel.yes ? "yes" : "reduced", "-", answer_ok, 0.0});
      out.push_back({tag, "kernel_size_bound_k" + std::to_string(k),
                     kernel.yes ? "-" : std::to_string(kernel.reduced.n()),
                     "<=" + std::to_string(kernel.size_bound), size_ok, 0.0});
    }
    return out;
  };
  auto rows = parallel_map<std::vector<Record>>(count, threads, one);
  Report report;
  for (auto& rs : rows)
    for (Record& r : rs) report.add(std::move(r));
  return report;
}

// ---- hardness reductions ----------------------------------------------------

// An independent set of size #classes picks exactly one vertex per clique
// class; depth-first with early pruning.
bool reduction_graph_has_full_is(const SimpleGraph& g,
                                 const std::vector<std::vector<int>>& classes) {
  std::vector<int> chosen;
  std::function<bool(size_t)> rec = [&](size_t cls) {
    if (cls == classes.size()) return true;
    for (int v : classes[cls]) {
      bool ok = true;
      for (int u : chosen) ok = ok && !g.adjacent(u, v);
      if (!ok) continue;
      chosen.push_back(v);
      if (rec(cls + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  return rec(0);
}

Report family_reductions(uint64_t seed, int count, const Caps&) {
  Report report;
  for (int idx = 0; idx < count; ++idx) {
    const int k = 2 + idx % 2;
    const int p = 2 + (idx / 2) % 2;
    Rng rng(derive(seed, "reductions", idx));
    gen::MulticolorInstance inst = gen::random_multicolor(k, p, 0.2 + 0.15 * (idx % 5), rng);
    std::string tag = "reductions/i" + std::to_string(idx) + "/k" + std::to_string(k) + "p" +
                      std::to_string(p);

    auto start = Clock::now();
    gen::ReductionOutput is_out = gen::reduce_mcc_to_is(inst);
    SimpleGraph gp = build_intersection_graph(is_out.rep);
    report.add({tag, "h_node_count", std::to_string(is_out.rep.h_node_count()),
                "== " + std::to_string(k * (k + 1) / 2),
                is_out.rep.h_node_count() == k * (k + 1) / 2, ms_since(start)});
    report.add({tag, "h_edge_count", std::to_string(is_out.rep.h_edge_count()),
                "== " + std::to_string(2 * k * (k - 1)),
                is_out.rep.h_edge_count() == 2 * k * (k - 1), 0.0});
    report.add({tag, "valid_representation", "-", "-",
                validate_representation(is_out.rep).empty(), 0.0});

    // Selector-vs-edge-vertex adjacency law over every defined index tuple.
    bool law = true;
    for (int i = 1; i <= k && law; ++i)
      for (int j = i + 1; j <= k && law; ++j)
        for (int s = 1; s <= p && law; ++s)
          for (int t = 1; t <= p && law; ++t) {
            int rv = gp.index_of("r" + std::to_string(i) + "_" + std::to_string(j) + "_" +
                                 std::to_string(s) + "_" + std::to_string(t));
            if (rv < 0) continue;
            for (int h = 1; h <= p && law; ++h) {
              int zi = gp.index_of("z" + std::to_string(i) + "_" + std::to_string(h));
              int zj = gp.index_of("z" + std::to_string(j) + "_" + std::to_string(h));
              law = gp.adjacent(zi, rv) == (h != s) && gp.adjacent(zj, rv) == (h != t);
            }
          }
    report.add({tag, "selector_adjacency_law", "-", "-", law, 0.0});

    // IS iff: classes are the selector groups and edge groups.
    std::vector<std::vector<int>> classes;
    for (int i = 1; i <= k; ++i) {
      std::vector<int> cls;
      for (int v = 0; v < gp.n(); ++v)
        if (gp.id(v).rfind("z" + std::to_string(i) + "_", 0) == 0) cls.push_back(v);
      classes.push_back(cls);
    }
    for (int i = 1; i <= k; ++i)
      for (int j = i + 1; j <= k; ++j) {
        std::vector<int> cls;
        std::string prefix = "r" + std::to_string(i) + "_" + std::to_string(j) + "_";
        for (int v = 0; v < gp.n(); ++v)
          if (gp.id(v).rfind(prefix, 0) == 0) cls.push_back(v);
        classes.push_back(cls);
      }
    bool mcc = gen::multicolored_clique_oracle(inst);
    bool full_is = reduction_graph_has_full_is(gp, classes);
    report.add({tag, "is_iff_multicolored_clique", full_is ? "yes" : "no",
                "== " + std::string(mcc ? "yes" : "no"), full_is == mcc, 0.0});

    gen::ReductionOutput ds_out = gen::reduce_mis_to_ds(inst);
    SimpleGraph gpp = build_intersection_graph(ds_out.rep);
    bool mis = gen::multicolored_is_oracle(inst);
    bool ds = has_dominating_set_at_most(gpp, static_cast<int>(ds_out.target));
    report.add({tag, "ds_iff_multicolored_is", ds ? "yes" : "no",
                "== " + std::string(mis ? "yes" : "no"), ds == mis, 0.0});
  }
  return report;
}

// ---- node-vertex budget of minimum dominating sets --------------------------

Report family_node_budget(uint64_t seed, int count, const Caps& caps, int threads) {
  auto one = [&](size_t idx) {
    auto start = Clock::now();
    TRepresentation t = domset_corpus_item(seed, static_cast<int>(idx));
    TRepresentation dissolved = dissolve_degree_two(t);
    SimpleGraph g = build_intersection_graph(dissolved.rep());
    std::vector<Classification> cls = classify_all(dissolved.rep());
    const int bound = 3 * dissolved.rep().subdivision().base().node_count() - 2;
    int worst = 0;
    bool pass = true;
    for (const auto& d : all_minimum_dominating_sets(g, caps.domset)) {
      int anchored = 0;
      for (int v : d) anchored += !cls[v].is_e_vertex;
      worst = std::max(worst, anchored);
      pass = pass && anchored <= bound;
    }
    Record rec{"nodebudget/i" + std::to_string(idx) + "/n" + std::to_string(g.n()),
               "node_vertices_in_min_domsets", std::to_string(worst),
               "<=" + std::to_string(bound), pass, ms_since(start)};
    return rec;
  };
  auto rows = parallel_map<Record>(count, threads, one);
  Report report;
  for (Record& r : rows) report.add(std::move(r));
  return report;
}

}  // namespace

std::vector<std::string> family_names() {
  return {"mim",   "boolw",       "separators", "theta",      "domset",
          "alpha", "contraction", "kernel",     "reductions", "nodebudget"};
}

Report run_family(const std::string& family, uint64_t seed, int count, const Caps& caps,
                  int threads) {
  if (family == "mim") return family_cuts(seed, count, caps, threads, false);
  if (family == "boolw") return family_cuts(seed, count, caps, threads, true);
  if (family == "separators") return family_separators(seed, count, caps, threads);
  if (family == "theta") return family_theta(caps);
  if (family == "domset") return family_domset(seed, count, caps, threads);
  if (family == "alpha") return family_alpha(seed, count, caps);
  if (family == "contraction") return family_contraction(seed, count, caps);
  if (family == "kernel") return family_kernel(seed, count, caps, threads);
  if (family == "reductions") return family_reductions(seed, count, caps);
  if (family == "nodebudget") return family_node_budget(seed, count, caps, threads);
  throw Error(ErrorKind::parameter, "unknown verification family '" + family + "'");
}

Report run_suite(const std::vector<std::string>& families, uint64_t seed, int count,
                 const Caps& caps, int threads, bool inject_fault) {
  std::vector<std::string> picked = families.empty() ? family_names() : families;
  Report report;
  for (const std::string& family : picked)
    report.merge(run_family(family, seed, count, caps, threads));
  if (inject_fault)
    report.add({"zz-injected/fault", "deliberate_mismatch", "0", "== 1", false, 0.0});
  report.sort_records();
  return report;
}

}  // namespace hgraph::verify
