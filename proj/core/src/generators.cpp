#include "hgraph/generators.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "hgraph/errors.hpp"

namespace hgraph::gen {

namespace {

std::string num(int v) { return std::to_string(v); }

}  // namespace

MulticolorInstance make_multicolor(const SimpleGraph& g,
                                   const std::vector<std::vector<std::string>>& parts_by_id) {
  size_t target = 0;
  for (const auto& part : parts_by_id) target = std::max(target, part.size());
  if (parts_by_id.empty() || target == 0)
    throw Error(ErrorKind::parameter, "parts must be nonempty");

  std::set<std::string> assigned;
  for (const auto& part : parts_by_id)
    for (const std::string& id : part)
      if (!assigned.insert(id).second)
        throw Error(ErrorKind::parameter, "vertex '" + id + "' appears in two parts");
  for (const std::string& id : assigned)
    if (g.index_of(id) < 0)
      throw Error(ErrorKind::parameter, "part vertex '" + id + "' is not in the graph");
  for (const std::string& id : g.ids())
    if (!assigned.count(id))
      throw Error(ErrorKind::parameter, "vertex '" + id + "' belongs to no part");

  MulticolorInstance out;
  std::vector<std::string> ids = g.ids();
  std::vector<std::vector<std::string>> parts = parts_by_id;
  int pad = 0;
  for (auto& part : parts)
    while (part.size() < target) {
      std::string fresh = "pad" + num(pad++);
      while (std::find(ids.begin(), ids.end(), fresh) != ids.end()) fresh = "pad" + num(pad++);
      ids.push_back(fresh);
      part.push_back(fresh);
    }
  out.padded = pad;
  SimpleGraph padded(ids);
  for (auto [u, v] : g.edge_list())
    padded.add_edge(padded.index_of(g.id(u)), padded.index_of(g.id(v)));
  out.g = padded;
  for (const auto& part : parts) {
    std::vector<int> indices;
    for (const std::string& id : part) indices.push_back(out.g.index_of(id));
    std::sort(indices.begin(), indices.end());
    out.parts.push_back(indices);
  }
  return out;
}

MulticolorInstance random_multicolor(int k, int p, double edge_prob, Rng rng) {
  if (k < 1 || p < 1) throw Error(ErrorKind::parameter, "k and p must be positive");
  std::vector<std::string> ids;
  for (int i = 1; i <= k; ++i)
    for (int s = 1; s <= p; ++s) ids.push_back("v" + num(i) + "_" + num(s));
  MulticolorInstance out;
  out.g = SimpleGraph(ids);
  for (int i = 1; i <= k; ++i) {
    std::vector<int> part;
    for (int s = 1; s <= p; ++s) part.push_back(out.g.index_of("v" + num(i) + "_" + num(s)));
    std::sort(part.begin(), part.end());
    out.parts.push_back(part);
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= p; ++t)
          if (rng.chance(edge_prob))
            out.g.add_edge(out.g.index_of("v" + num(i) + "_" + num(s)),
                           out.g.index_of("v" + num(j) + "_" + num(t)));
  return out;
}

namespace {

// Shared construction of H, its subdivision, and the z/r models.
struct ReductionBuild {
  Subdivision sub;
  std::vector<std::pair<std::string, std::vector<int>>> models;
  std::vector<std::string> z_names, r_names;
};

// Chain node: x- or y-chain attached to u_a for the pair {a,b}; index 0 is
// u_a and index p+1 is the pair node w.
int chain_node(const Subdivision& sub, char chain, int a, int b, int pos, int p) {
  if (pos == 0) return sub.branch_node("u" + num(a));
  if (pos == p + 1)
    return sub.branch_node("w" + num(std::min(a, b)) + "_" + num(std::max(a, b)));
  return sub.subdivision_node(
      sub.base().edge_index(std::string(1, chain) + num(a) + "_" + num(b)), pos);
}

ReductionBuild build_reduction(const MulticolorInstance& inst) {
  const int k = static_cast<int>(inst.parts.size());
  if (k < 2) throw Error(ErrorKind::parameter, "reduction needs k >= 2");
  const int p = static_cast<int>(inst.parts[0].size());
  for (const auto& part : inst.parts)
    if (static_cast<int>(part.size()) != p)
      throw Error(ErrorKind::parameter, "parts must have equal sizes");

  MultiGraph h;
  for (int i = 1; i <= k; ++i) h.add_node("u" + num(i));
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) h.add_node("w" + num(i) + "_" + num(j));
  std::map<std::string, int> counts;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      std::string w = "w" + num(i) + "_" + num(j);
      for (char chain : {'x', 'y'}) {
        std::string ei = std::string(1, chain) + num(i) + "_" + num(j);
        std::string ej = std::string(1, chain) + num(j) + "_" + num(i);
        h.add_edge(ei, "u" + num(i), w);
        h.add_edge(ej, "u" + num(j), w);
        counts[ei] = p;
        counts[ej] = p;
      }
    }

  ReductionBuild out{Subdivision(std::move(h), std::move(counts)), {}, {}, {}};
  const Subdivision& sub = out.sub;

  // Selector vertices z^i_s.
  for (int i = 1; i <= k; ++i)
    for (int s = 1; s <= p; ++s) {
      std::vector<int> nodes;
      for (int j = 1; j <= k; ++j) {
        if (j == i) continue;
        for (int pos = 0; pos <= s - 1; ++pos) nodes.push_back(chain_node(sub, 'x', i, j, pos, p));
        for (int pos = 0; pos <= p - s; ++pos) nodes.push_back(chain_node(sub, 'y', i, j, pos, p));
      }
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      std::string name = "z" + num(i) + "_" + num(s);
      out.z_names.push_back(name);
      out.models.emplace_back(name, std::move(nodes));
    }

  // Edge vertices r^{(i,j)}_{s,t} for every cross edge v^i_s v^j_t.
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      for (int s = 1; s <= p; ++s)
        for (int t = 1; t <= p; ++t) {
          if (!inst.g.adjacent(inst.parts[i - 1][s - 1], inst.parts[j - 1][t - 1])) continue;
          std::vector<int> nodes;
          for (int pos = s; pos <= p + 1; ++pos) nodes.push_back(chain_node(sub, 'x', i, j, pos, p));
          for (int pos = p - s + 1; pos <= p + 1; ++pos)
            nodes.push_back(chain_node(sub, 'y', i, j, pos, p));
          for (int pos = t; pos <= p + 1; ++pos) nodes.push_back(chain_node(sub, 'x', j, i, pos, p));
          for (int pos = p - t + 1; pos <= p + 1; ++pos)
            nodes.push_back(chain_node(sub, 'y', j, i, pos, p));
          std::sort(nodes.begin(), nodes.end());
          nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
          std::string name = "r" + num(i) + "_" + num(j) + "_" + num(s) + "_" + num(t);
          out.r_names.push_back(name);
          out.models.emplace_back(name, std::move(nodes));
        }
  return out;
}

}  // namespace

ReductionOutput reduce_mcc_to_is(const MulticolorInstance& inst) {
  ReductionBuild build = build_reduction(inst);
  const int k = static_cast<int>(inst.parts.size());
  ReductionOutput out{HRepresentation(std::move(build.sub), std::move(build.models)),
                      static_cast<int64_t>(k) * (k + 1) / 2, std::move(build.z_names),
                      std::move(build.r_names), {}};
  return out;
}

ReductionOutput reduce_mis_to_ds(const MulticolorInstance& inst) {
  ReductionBuild build = build_reduction(inst);
  const int k = static_cast<int>(inst.parts.size());
  for (int i = 1; i <= k; ++i) {
    std::string name = "d" + num(i);
    build.models.emplace_back(name, std::vector<int>{build.sub.branch_node("u" + num(i))});
  }
  ReductionOutput out{HRepresentation(std::move(build.sub), std::move(build.models)),
                      static_cast<int64_t>(k), std::move(build.z_names),
                      std::move(build.r_names), {}};
  for (int i = 1; i <= k; ++i) out.d_names.push_back("d" + num(i));
  return out;
}

HRepresentation theta_instance(int r, int k) {
  if (r < 1 || k < 1) throw Error(ErrorKind::parameter, "theta instance needs r >= 1 and k >= 1");
  // G is the theta_r graph with every edge subdivided k times. Realize it on
  // the finer (2k+1)-fold subdivision: vertex i of a chain owns the interval
  // around position 2i, consecutive intervals share exactly one node.
  MultiGraph h;
  h.add_node("a");
  h.add_node("b");
  std::map<std::string, int> counts;
  for (int e = 1; e <= r; ++e) {
    h.add_edge("m" + num(e), "a", "b");
    counts["m" + num(e)] = 2 * k + 1;
  }
  Subdivision sub(std::move(h), std::move(counts));
  std::vector<std::pair<std::string, std::vector<int>>> models;
  std::vector<int> at_a = {sub.branch_node("a")}, at_b = {sub.branch_node("b")};
  for (int e = 0; e < r; ++e) {
    at_a.push_back(sub.subdivision_node(e, 1));
    at_b.push_back(sub.subdivision_node(e, 2 * k + 1));
  }
  models.emplace_back("va", at_a);
  models.emplace_back("vb", at_b);
  for (int e = 1; e <= r; ++e)
    for (int pos = 1; pos <= k; ++pos)
      models.emplace_back("m" + num(e) + "_" + num(pos),
                          std::vector<int>{sub.subdivision_node(e - 1, 2 * pos - 1),
                                           sub.subdivision_node(e - 1, 2 * pos),
                                           sub.subdivision_node(e - 1, 2 * pos + 1)});
  return HRepresentation(std::move(sub), std::move(models));
}

HRepresentation random_hgraph(const MultiGraph& h, int n, uint64_t seed,
                              const RandomHParams& params) {
  if (n < 0) throw Error(ErrorKind::parameter, "n must be nonnegative");
  if (params.sub_min < 0 || params.sub_max < params.sub_min || params.len_min < 1 ||
      params.len_max < params.len_min)
    throw Error(ErrorKind::parameter, "bad generator parameters");
  Rng rng(seed);
  std::map<std::string, int> counts;
  for (const auto& edge : h.edges()) counts[edge.id] = rng.range(params.sub_min, params.sub_max);
  Subdivision sub(h, std::move(counts));
  if (sub.node_count() == 0 && n > 0)
    throw Error(ErrorKind::parameter, "H has no nodes to place models on");

  int width = 1;
  for (int t = n - 1; t >= 10; t /= 10) ++width;
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (int v = 0; v < n; ++v) {
    int target = rng.range(params.len_min, params.len_max);
    std::set<int> chosen = {static_cast<int>(rng.uniform(sub.node_count()))};
    auto branching_nodes = [&] {
      int count = 0;
      for (int node : chosen) count += sub.is_branching(node);
      return count;
    };
    while (static_cast<int>(chosen.size()) < target) {
      std::vector<int> frontier;
      for (int node : chosen)
        for (int nb : sub.neighbors(node)) {
          if (chosen.count(nb)) continue;
          if (params.nice_models && sub.is_branching(nb) && branching_nodes() >= 1) continue;
          frontier.push_back(nb);
        }
      std::sort(frontier.begin(), frontier.end());
      frontier.erase(std::unique(frontier.begin(), frontier.end()), frontier.end());
      if (frontier.empty()) break;
      chosen.insert(frontier[rng.uniform(frontier.size())]);
    }
    std::string label = num(v);
    while (static_cast<int>(label.size()) < width) label = "0" + label;
    models.emplace_back("v" + label, std::vector<int>(chosen.begin(), chosen.end()));
  }
  return HRepresentation(std::move(sub), std::move(models));
}

MultiGraph random_tree(int max_leaves, Rng& rng) {
  if (max_leaves < 2) throw Error(ErrorKind::parameter, "a tree edge needs two leaves");
  MultiGraph t;
  bool spider = max_leaves >= 3 && rng.chance(0.5);
  if (!spider) {
    int len = rng.range(2, 4);
    for (int i = 1; i <= len; ++i) t.add_node("t" + num(i));
    for (int i = 1; i < len; ++i) t.add_edge("f" + num(i), "t" + num(i), "t" + num(i + 1));
    return t;
  }
  t.add_node("t0");
  int next = 1;
  for (int leg = 0; leg < max_leaves; ++leg) {
    int len = rng.range(1, 2);
    std::string prev = "t0";
    for (int i = 0; i < len; ++i) {
      std::string node = "t" + num(next);
      t.add_node(node);
      t.add_edge("f" + num(next), prev, node);
      prev = node;
      ++next;
    }
  }
  return t;
}

TRepresentation random_connected_tgraph(int n, uint64_t seed, int max_leaves,
                                        const RandomHParams& params) {
  Rng shape_rng = Rng(seed).split("tree-shape");
  MultiGraph tree = random_tree(max_leaves, shape_rng);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    uint64_t derived = Rng(seed).split(attempt).next();
    HRepresentation rep = random_hgraph(tree, n, derived, params);
    SimpleGraph g = build_intersection_graph(rep);
    if (!g.is_connected()) continue;
    return TRepresentation(std::move(rep), tree.nodes()[0]);
  }
  throw Error(ErrorKind::parameter, "could not draw a connected T-graph for this seed");
}

namespace {

bool tuple_scan(const MulticolorInstance& inst, int64_t cap, bool want_clique) {
  const int k = static_cast<int>(inst.parts.size());
  const int p = static_cast<int>(inst.parts[0].size());
  int64_t total = 1;
  for (int i = 0; i < k; ++i) {
    total *= p;
    if (total > cap)
      throw Error(ErrorKind::size_cap, "tuple enumeration above cap");
  }
  std::vector<int> pick(k, 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i)
      for (int j = i + 1; j < k && ok; ++j) {
        bool adj = inst.g.adjacent(inst.parts[i][pick[i]], inst.parts[j][pick[j]]);
        ok = want_clique ? adj : !adj;
      }
    if (ok) return true;
    int pos = k - 1;
    while (pos >= 0 && pick[pos] == p - 1) pick[pos--] = 0;
    if (pos < 0) return false;
    ++pick[pos];
  }
}

}  // namespace

bool multicolored_clique_oracle(const MulticolorInstance& inst, int64_t cap) {
  return tuple_scan(inst, cap, true);
}

bool multicolored_is_oracle(const MulticolorInstance& inst, int64_t cap) {
  return tuple_scan(inst, cap, false);
}

MultiGraph preset_multigraph(const std::string& name) {
  MultiGraph h;
  if (name == "p2") {
    h.add_node("a");
    h.add_node("b");
    h.add_edge("e1", "a", "b");
  } else if (name == "p3") {
    for (const char* n : {"a", "b", "c"}) h.add_node(n);
    h.add_edge("e1", "a", "b");
    h.add_edge("e2", "b", "c");
  } else if (name == "p4") {
    for (const char* n : {"a", "b", "c", "d"}) h.add_node(n);
    h.add_edge("e1", "a", "b");
    h.add_edge("e2", "b", "c");
    h.add_edge("e3", "c", "d");
  } else if (name == "theta2" || name == "theta3" || name == "theta4") {
    h.add_node("a");
    h.add_node("b");
    int r = name.back() - '0';
    for (int e = 1; e <= r; ++e) h.add_edge("m" + num(e), "a", "b");
  } else if (name == "k13") {
    for (const char* n : {"c", "l1", "l2", "l3"}) h.add_node(n);
    h.add_edge("s1", "c", "l1");
    h.add_edge("s2", "c", "l2");
    h.add_edge("s3", "c", "l3");
  } else if (name == "triangle") {
    for (const char* n : {"a", "b", "c"}) h.add_node(n);
    h.add_edge("e1", "a", "b");
    h.add_edge("e2", "b", "c");
    h.add_edge("e3", "a", "c");
  } else {
    throw Error(ErrorKind::parameter, "unknown multigraph preset '" + name + "'");
  }
  return h;
}

std::vector<std::string> preset_names() {
  return {"p2", "p3", "p4", "theta2", "theta3", "theta4", "k13", "triangle"};
}

}  // namespace hgraph::gen
