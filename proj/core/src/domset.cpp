#include "hgraph/domset.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <queue>
#include <set>

#include "hgraph/errors.hpp"

namespace hgraph {

namespace {

int64_t sat_add(int64_t a, int64_t b) { return std::min(a + b, kInfSize); }

uint64_t next_combination(uint64_t mask) {
  uint64_t c = mask & ~(mask - 1);
  uint64_t r = mask + c;
  return (((r ^ mask) >> 2) / c) | r;
}

std::vector<uint64_t> closed_masks(const SimpleGraph& g) {
  std::vector<uint64_t> nb(g.n(), 0);
  for (int v = 0; v < g.n(); ++v) {
    nb[v] = uint64_t{1} << v;
    g.neighbors(v).for_each([&](int w) { nb[v] |= uint64_t{1} << w; });
  }
  return nb;
}

std::vector<int> mask_to_vertices(uint64_t mask) {
  std::vector<int> out;
  while (mask) {
    out.push_back(__builtin_ctzll(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

DomsetOracleResult domset_oracle(const SimpleGraph& g, int cap) {
  if (g.n() > cap)
    throw Error(ErrorKind::size_cap, "domset oracle cap " + std::to_string(cap) +
                                         " exceeded by n=" + std::to_string(g.n()));
  if (g.n() > 62) throw Error(ErrorKind::size_cap, "domset oracle supports at most 62 vertices");
  if (g.n() == 0) return {0, {}};
  const int n = g.n();
  std::vector<uint64_t> nb = closed_masks(g);
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (int size = 1; size <= n; ++size) {
    for (uint64_t mask = (uint64_t{1} << size) - 1; mask < (uint64_t{1} << n);
         mask = next_combination(mask)) {
      uint64_t cover = 0;
      for (uint64_t m = mask; m; m &= m - 1) cover |= nb[__builtin_ctzll(m)];
      if (cover == full) return {size, mask_to_vertices(mask)};
    }
  }
  return {n, mask_to_vertices(full)};  // unreachable: V(G) always dominates
}

std::vector<std::vector<int>> all_minimum_dominating_sets(const SimpleGraph& g, int cap) {
  DomsetOracleResult best = domset_oracle(g, cap);
  std::vector<std::vector<int>> out;
  if (g.n() == 0) return out;
  const int n = g.n();
  std::vector<uint64_t> nb = closed_masks(g);
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (uint64_t mask = (uint64_t{1} << best.number) - 1; mask < (uint64_t{1} << n);
       mask = next_combination(mask)) {
    uint64_t cover = 0;
    for (uint64_t m = mask; m; m &= m - 1) cover |= nb[__builtin_ctzll(m)];
    if (cover == full) out.push_back(mask_to_vertices(mask));
  }
  return out;
}

bool has_dominating_set_at_most(const SimpleGraph& g, int k, int64_t enumeration_cap) {
  const int n = g.n();
  if (n == 0) return true;
  if (n > 62)
    throw Error(ErrorKind::size_cap, "bounded domset check supports at most 62 vertices");
  int64_t total = 0, binom = 1;
  for (int i = 1; i <= std::min(k, n); ++i) {
    binom = binom * (n - i + 1) / i;
    total += binom;
    if (total > enumeration_cap)
      throw Error(ErrorKind::size_cap, "bounded domset enumeration above cap");
  }
  std::vector<uint64_t> nb = closed_masks(g);
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  for (int size = 1; size <= std::min(k, n); ++size) {
    for (uint64_t mask = (uint64_t{1} << size) - 1; mask < (uint64_t{1} << n);
         mask = next_combination(mask)) {
      uint64_t cover = 0;
      for (uint64_t m = mask; m; m &= m - 1) cover |= nb[__builtin_ctzll(m)];
      if (cover == full) return true;
    }
  }
  return false;
}

int64_t constrained_domination_minimum(const SimpleGraph& g, const std::vector<int>& vertex_color,
                                       const std::vector<int>& color_set, int cap) {
  const int n = g.n();
  if (n > cap)
    throw Error(ErrorKind::size_cap, "constrained domset oracle cap exceeded");
  if (n > 24)
    throw Error(ErrorKind::size_cap, "constrained domset oracle supports at most 24 vertices");
  // Map colors onto bit positions for exact trace comparison.
  std::vector<int> palette;
  for (int c : vertex_color)
    if (c >= 0) palette.push_back(c);
  for (int c : color_set) palette.push_back(c);
  std::sort(palette.begin(), palette.end());
  palette.erase(std::unique(palette.begin(), palette.end()), palette.end());
  if (palette.size() > 63) throw Error(ErrorKind::size_cap, "too many colors");
  auto color_bit = [&](int c) {
    return uint64_t{1} << (std::lower_bound(palette.begin(), palette.end(), c) - palette.begin());
  };
  uint64_t want = 0;
  for (int c : color_set) want |= color_bit(c);

  std::vector<uint64_t> nb = closed_masks(g);
  const uint64_t full = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  int64_t best = kInfSize;
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    if (static_cast<int64_t>(__builtin_popcountll(mask)) >= best) continue;
    uint64_t cover = 0, trace = 0;
    for (uint64_t m = mask; m; m &= m - 1) {
      int v = __builtin_ctzll(m);
      cover |= nb[v];
      if (vertex_color[v] >= 0) trace |= color_bit(vertex_color[v]);
    }
    if (cover == full && trace == want) best = __builtin_popcountll(mask);
  }
  return best;
}

TColoring color_by_u_sets(const HRepresentation& rep) {
  std::vector<Classification> cls = classify_all(rep);
  std::vector<std::vector<std::string>> u_sets;
  for (const Classification& c : cls)
    if (!c.is_e_vertex) u_sets.push_back(c.u_set);
  std::sort(u_sets.begin(), u_sets.end());
  u_sets.erase(std::unique(u_sets.begin(), u_sets.end()), u_sets.end());

  TColoring out;
  out.color_u_sets = u_sets;
  out.color.assign(rep.vertex_count(), -1);
  for (int v = 0; v < rep.vertex_count(); ++v) {
    if (cls[v].is_e_vertex) continue;
    out.color[v] = static_cast<int>(
        std::lower_bound(u_sets.begin(), u_sets.end(), cls[v].u_set) - u_sets.begin());
  }
  return out;
}

// ---------------------------------------------------------------------------
// The extension DP.

namespace {

struct EdgeData {
  std::vector<int> path;                      // T' nodes, parent first
  std::vector<std::pair<int, int>> span;      // per vertex: (first,last) path index, (-1,-1) if disjoint
  std::vector<int> everts;                    // e-vertices of this edge, sorted by the edge order
};

class ExtensionSolver {
 public:
  explicit ExtensionSolver(const DomsetInstance& inst)
      : inst_(inst), rep_(inst.rep.rep()), g_(build_intersection_graph(rep_)) {
    build();
  }

  ExtensionResult solve() {
    ExtensionResult out;
    out.value = 0;
    std::set<int> witness;
    for (const std::vector<int>& comp : g_.components()) {
      run_component(comp);
      const Run& run = runs_.back();
      int64_t value = root_value(run);
      if (value >= kInfSize) return {};
      out.value = sat_add(out.value, value);
      std::vector<int> wit = root_witness(run);
      witness.insert(wit.begin(), wit.end());
    }
    out.feasible = true;
    out.witness.assign(witness.begin(), witness.end());
    verify_witness(out);
    return out;
  }

  DPTables tables() {
    for (const std::vector<int>& comp : g_.components()) run_component(comp);
    DPTables t;
    for (int x = 0; x < node_count(); ++x) {
      const Run* owner = owner_run(x);
      if (owner == nullptr) continue;
      const std::string& name = node_name(x);
      if (owner->loaded[x])
        t.beta[name] = owner->beta[x];
      else
        t.gamma[name] = owner->gamma[x];
      if (!nodes_[x].children.empty() && !owner->loaded[x]) {
        std::vector<std::pair<int64_t, int>> row;
        for (const GammaChild& gc : owner->gamma_choice[x]) row.emplace_back(gc.eta, gc.psi);
        t.eta[name] = row;
      }
    }
    return t;
  }

  std::optional<std::vector<int>> witness_at(const std::string& node, bool loaded, int i) {
    for (const std::vector<int>& comp : g_.components()) run_component(comp);
    int x = node_index(node);
    if (x < 0) throw Error(ErrorKind::parameter, "unknown tree node '" + node + "'");
    const Run* owner = owner_run(x);
    if (owner == nullptr || owner->loaded[x] != loaded)
      throw Error(ErrorKind::parameter, "node '" + node + "' has no such table");
    if (loaded) {
      if (i < 1 || i > static_cast<int>(owner->w[x].size()))
        throw Error(ErrorKind::parameter, "beta index out of range");
      if (owner->beta[x][i - 1] >= kInfSize) return std::nullopt;
      std::vector<int> s;
      reconstruct_beta(*owner, x, i - 1, s);
      std::sort(s.begin(), s.end());
      s.erase(std::unique(s.begin(), s.end()), s.end());
      return s;
    }
    if (i < 0 || i > static_cast<int>(owner->w[x].size()))
      throw Error(ErrorKind::parameter, "gamma index out of range");
    if (owner->gamma[x][i] >= kInfSize) return std::nullopt;
    std::vector<int> s;
    reconstruct_gamma(*owner, x, s);
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

 private:
  struct TreeNode {
    std::string name;
    int branch = -1;      // T' node index
    int parent = -1;      // tree node index
    int parent_edge = -1; // base edge index
    std::vector<int> children;
  };

  struct BetaPart {
    std::vector<int> child_js;  // positions in children list; empty for pads
    int iprime = -1;            // W index (0-based)
  };
  struct BetaChoice {
    std::vector<BetaPart> parts;
    std::vector<int> pad_iprimes;
  };
  struct GammaChild {
    bool loaded = false;
    int64_t eta = kInfSize;
    int psi = 0;    // 1..p+1
    int hstar = -1; // argmin index achieving eta with the psi-augmented target
  };

  struct Run {
    Bits comp;
    std::vector<std::vector<int>> w;          // per node: W list (vertex indices, edge-ordered)
    std::vector<std::vector<int>> cx;         // per node: component C_x
    std::vector<char> loaded;
    std::vector<std::vector<int64_t>> beta;   // per node, size p
    std::vector<std::vector<int64_t>> gamma;  // per node, size p+1
    std::vector<std::vector<BetaChoice>> beta_choice;
    std::vector<std::vector<std::vector<int>>> delta_arg;  // [node][child j][iprime] -> h
    std::vector<std::vector<GammaChild>> gamma_choice;     // [node][child j]
  };

  const DomsetInstance& inst_;
  const HRepresentation& rep_;
  SimpleGraph g_;
  std::vector<TreeNode> nodes_;
  int root_ = -1;
  std::vector<int> vertex_anchor_;        // tree node or -1
  std::vector<int> vertex_edge_;          // base edge index or -1
  std::vector<EdgeData> edges_;           // indexed by tree node (its parent edge); root unused
  std::vector<std::map<Bits, AlphaResult>> alpha_memo_;
  std::vector<Run> runs_;

  int node_count() const { return static_cast<int>(nodes_.size()); }
  const std::string& node_name(int x) const { return nodes_[x].name; }
  int node_index(const std::string& name) const {
    for (int x = 0; x < node_count(); ++x)
      if (nodes_[x].name == name) return x;
    return -1;
  }

  void build() {
    const Subdivision& sub = rep_.subdivision();
    const MultiGraph& base = sub.base();
    for (const std::string& name : base.nodes())
      nodes_.push_back({name, sub.branch_node(name), -1, -1, {}});
    root_ = node_index(inst_.rep.t().root());

    // Root the base tree.
    std::vector<char> seen(node_count(), 0);
    std::queue<int> bfs;
    bfs.push(root_);
    seen[root_] = 1;
    std::vector<int> order;
    while (!bfs.empty()) {
      int x = bfs.front();
      bfs.pop();
      order.push_back(x);
      for (int e = 0; e < base.edge_count(); ++e) {
        const auto& edge = base.edges()[e];
        int other = -1;
        if (edge.a == nodes_[x].name) other = node_index(edge.b);
        if (edge.b == nodes_[x].name) other = node_index(edge.a);
        if (other < 0 || seen[other]) continue;
        seen[other] = 1;
        nodes_[other].parent = x;
        nodes_[other].parent_edge = e;
        nodes_[x].children.push_back(other);
        bfs.push(other);
      }
    }
    for (TreeNode& node : nodes_) std::sort(node.children.begin(), node.children.end());

    // Vertex classification against the tree.
    vertex_anchor_.assign(g_.n(), -1);
    vertex_edge_.assign(g_.n(), -1);
    for (int v = 0; v < g_.n(); ++v) {
      int anchor = -1, edge = -1;
      rep_.model(v).for_each([&](int node) {
        if (sub.is_branching(node)) {
          anchor = sub.node(node).branch;  // base order = tree node order
        } else if (edge < 0) {
          edge = sub.node(node).edge;
        }
      });
      vertex_anchor_[v] = anchor;
      vertex_edge_[v] = anchor < 0 ? edge : -1;
      if (anchor >= 0 && inst_.color[v] < 0)
        throw Error(ErrorKind::parameter,
                    "vertex '" + g_.id(v) + "' is a node-vertex but carries no color");
    }

    // Per parent edge: path (parent first) and model spans along it.
    edges_.resize(node_count());
    alpha_memo_.resize(node_count());
    for (int x = 0; x < node_count(); ++x) {
      if (nodes_[x].parent < 0) continue;
      EdgeData& ed = edges_[x];
      ed.path = sub.path_from(nodes_[x].parent_edge, nodes_[nodes_[x].parent].branch);
      ed.span.assign(g_.n(), {-1, -1});
      for (int pos = 0; pos < static_cast<int>(ed.path.size()); ++pos) {
        for (int v = 0; v < g_.n(); ++v) {
          if (!rep_.model(v).test(ed.path[pos])) continue;
          if (ed.span[v].first < 0) ed.span[v].first = pos;
          ed.span[v].second = pos;
        }
      }
      for (int v = 0; v < g_.n(); ++v)
        if (vertex_edge_[v] == nodes_[x].parent_edge) ed.everts.push_back(v);
      sort_by_edge_order(ed, ed.everts);
    }
  }

  // ⪯_e with (d_min, d_max, vertex id) keys; path positions are monotone in
  // the distance from the root, so positions stand in for distances.
  bool edge_less(const EdgeData& ed, int u, int v) const {
    const auto& a = ed.span[u];
    const auto& b = ed.span[v];
    if (a.first != b.first) return a.first < b.first;
    if (a.second != b.second) return a.second < b.second;
    return g_.id(u) < g_.id(v);
  }

  void sort_by_edge_order(const EdgeData& ed, std::vector<int>& vs) const {
    std::sort(vs.begin(), vs.end(), [&](int u, int v) { return edge_less(ed, u, v); });
  }

  bool dominates(int u, int v) const { return u == v || g_.adjacent(u, v); }

  AlphaResult alpha(int x, const Bits& target) {
    auto it = alpha_memo_[x].find(target);
    if (it != alpha_memo_[x].end()) return it->second;
    const EdgeData& ed = edges_[x];
    AlphaResult result;
    std::vector<int> members = target.to_vector();
    if (!members.empty()) {
      std::vector<char> covered(g_.n(), 0);
      sort_by_edge_order(ed, members);
      bool possible = true;
      for (int w : members) {
        bool ok = false;
        for (int u : ed.everts) ok = ok || dominates(u, w);
        if (!ok) {
          possible = false;
          break;
        }
      }
      if (!possible) {
        result.value = kInfSize;
      } else {
        while (true) {
          int w = -1;
          for (auto it2 = members.rbegin(); it2 != members.rend(); ++it2)
            if (!covered[*it2]) {
              w = *it2;
              break;
            }
          if (w < 0) break;
          int pick = -1;
          for (int u : ed.everts)
            if (dominates(u, w)) {
              pick = u;
              break;
            }
          result.chosen.push_back(pick);
          for (int m : members)
            if (dominates(pick, m)) covered[m] = 1;
        }
        result.value = static_cast<int64_t>(result.chosen.size());
      }
    }
    alpha_memo_[x][target] = result;
    return result;
  }

  Bits make_target(const std::vector<int>& vs) const {
    Bits b(g_.n());
    for (int v : vs) b.set(v);
    return b;
  }

  // --- per-component DP ---

  void run_component(const std::vector<int>& comp_vertices) {
    Run run;
    run.comp = Bits(g_.n());
    for (int v : comp_vertices) run.comp.set(v);
    run.w.resize(node_count());
    run.cx.resize(node_count());
    run.loaded.assign(node_count(), 0);
    run.beta.resize(node_count());
    run.gamma.resize(node_count());
    run.beta_choice.resize(node_count());
    run.delta_arg.resize(node_count());
    run.gamma_choice.resize(node_count());

    for (int x = 0; x < node_count(); ++x) {
      for (int v : comp_vertices)
        if (vertex_anchor_[v] == x) run.w[x].push_back(v);
      if (nodes_[x].parent >= 0)
        sort_by_edge_order(edges_[x], run.w[x]);
      else
        std::sort(run.w[x].begin(), run.w[x].end(),
                  [&](int a, int b) { return g_.id(a) < g_.id(b); });
      std::set<int> present;
      for (int v : run.w[x]) present.insert(inst_.color[v]);
      auto it = inst_.color_sets.find(node_name(x));
      if (it != inst_.color_sets.end())
        for (int c : it->second)
          if (present.count(c)) run.cx[x].push_back(c);
      run.loaded[x] = !run.cx[x].empty();
    }

    // children before parents
    std::vector<int> topo;
    std::function<void(int)> dfs = [&](int x) {
      for (int c : nodes_[x].children) dfs(c);
      topo.push_back(x);
    };
    dfs(root_);
    for (int x : topo) {
      if (nodes_[x].children.empty())
        leaf_tables(run, x);
      else
        inner_tables(run, x);
    }
    runs_.push_back(std::move(run));
  }

  void leaf_tables(Run& run, int x) {
    const int p = static_cast<int>(run.w[x].size());
    if (run.loaded[x]) {
      run.beta[x].assign(p, kInfSize);
      run.beta_choice[x].assign(p, {});
      for (int i = 0; i < p; ++i) {
        if (!std::binary_search(run.cx[x].begin(), run.cx[x].end(), inst_.color[run.w[x][i]]))
          continue;
        run.beta[x][i] = static_cast<int64_t>(run.cx[x].size());
        BetaChoice choice;
        choice.parts.push_back({{}, i});
        for (int c : run.cx[x]) {
          if (c == inst_.color[run.w[x][i]]) continue;
          for (int i2 = 0; i2 < p; ++i2)
            if (inst_.color[run.w[x][i2]] == c) {
              choice.pad_iprimes.push_back(i2);
              break;
            }
        }
        run.beta_choice[x][i] = std::move(choice);
      }
    } else {
      run.gamma[x].assign(p + 1, kInfSize);
      run.gamma[x][p] = 0;
    }
  }

  void inner_tables(Run& run, int x) {
    const std::vector<int>& children = nodes_[x].children;
    const int s = static_cast<int>(children.size());
    const int p = static_cast<int>(run.w[x].size());

    if (run.loaded[x]) {
      // delta_j(x, i') per child and W index.
      std::vector<std::vector<int64_t>> delta(s, std::vector<int64_t>(p, kInfSize));
      run.delta_arg[x].assign(s, std::vector<int>(p, -1));
      for (int j = 0; j < s; ++j) {
        int z = children[j];
        const EdgeData& ed = edges_[z];
        const std::vector<int>& wz = run.w[z];
        const int q = static_cast<int>(wz.size());
        for (int ip = 0; ip < p; ++ip) {
          int vi = run.w[x][ip];
          std::vector<int> base;
          for (int w : ed.everts)
            if (run.comp.test(w) && !dominates(w, vi)) base.push_back(w);
          if (run.loaded[z]) {
            for (int h = 0; h < q; ++h) {
              std::vector<int> target;
              for (int w : base)
                if (!dominates(w, wz[h])) target.push_back(w);
              int64_t val = sat_add(run.beta[z][h], alpha(z, make_target(target)).value);
              if (val < delta[j][ip]) {
                delta[j][ip] = val;
                run.delta_arg[x][j][ip] = h;
              }
            }
          } else {
            for (int h = 0; h <= q; ++h) {
              std::vector<int> target = base;
              // u_h stands in for the whole undominated prefix u_1..u_h;
              // skip it when the selected x-vertex already reaches it.
              if (h >= 1 && !dominates(wz[h - 1], vi)) target.push_back(wz[h - 1]);
              int64_t val = sat_add(run.gamma[z][h], alpha(z, make_target(target)).value);
              if (val < delta[j][ip]) {
                delta[j][ip] = val;
                run.delta_arg[x][j][ip] = h;
              }
            }
          }
        }
      }
      beta_combine(run, x, delta);
    } else {
      // eta(j) and psi(j) per child, then gamma by the suffix condition.
      run.gamma_choice[x].assign(s, {});
      int64_t eta_sum = 0;
      for (int j = 0; j < s; ++j) {
        int z = children[j];
        const EdgeData& ed = edges_[z];
        const std::vector<int>& wz = run.w[z];
        const int q = static_cast<int>(wz.size());
        GammaChild gc;
        gc.loaded = run.loaded[z];

        // W ordered along the child edge; x-vertices all contain the top
        // node, so the order is by reach toward the child.
        std::vector<int> worder = run.w[x];
        sort_by_edge_order(ed, worder);

        auto eta_for = [&](int t) {  // t = 1..p+1; suffix worder[t-1..]
          int64_t best = kInfSize;
          int arg = -1;
          std::vector<int> suffix;
          for (int r = t - 1; r < p; ++r) suffix.push_back(worder[r]);
          if (run.loaded[z]) {
            for (int h = 0; h < q; ++h) {
              std::vector<int> target;
              for (int w : ed.everts)
                if (run.comp.test(w) && !dominates(w, wz[h])) target.push_back(w);
              // Suffix members already dominated by the selected child vertex
              // need no e-vertex cover.
              for (int w : suffix)
                if (!dominates(w, wz[h])) target.push_back(w);
              int64_t val = sat_add(run.beta[z][h], alpha(z, make_target(target)).value);
              if (val < best) {
                best = val;
                arg = h;
              }
            }
          } else {
            for (int h = 0; h <= q; ++h) {
              std::vector<int> target;
              for (int w : ed.everts)
                if (run.comp.test(w)) target.push_back(w);
              for (int r = 0; r < h; ++r) target.push_back(wz[r]);
              target.insert(target.end(), suffix.begin(), suffix.end());
              int64_t val = sat_add(run.gamma[z][h], alpha(z, make_target(target)).value);
              if (val < best) {
                best = val;
                arg = h;
              }
            }
          }
          return std::pair<int64_t, int>(best, arg);
        };

        auto [eta, base_arg] = eta_for(p + 1);
        gc.eta = eta;
        gc.psi = p + 1;
        gc.hstar = base_arg;
        for (int t = 1; t <= p; ++t) {
          auto [val, arg] = eta_for(t);
          if (val == eta) {
            gc.psi = t;
            gc.hstar = arg;
            break;
          }
        }
        eta_sum = sat_add(eta_sum, gc.eta);
        run.gamma_choice[x][j] = gc;
      }

      // covered(h): some child's psi-suffix reaches W rank h.
      std::vector<char> covered(p, 0);
      for (int j = 0; j < s; ++j) {
        if (run.gamma_choice[x][j].psi > p) continue;
        int z = children[j];
        std::vector<int> worder = run.w[x];
        sort_by_edge_order(edges_[z], worder);
        for (int r = run.gamma_choice[x][j].psi - 1; r < p; ++r) {
          int idx = static_cast<int>(std::find(run.w[x].begin(), run.w[x].end(), worder[r]) -
                                     run.w[x].begin());
          covered[idx] = 1;
        }
      }
      run.gamma[x].assign(p + 1, eta_sum);
      for (int i = p - 1; i >= 0; --i) {
        if (!covered[i]) {
          for (int i2 = i; i2 >= 0; --i2) run.gamma[x][i2] = kInfSize;
          break;
        }
      }
    }
  }

  void beta_combine(Run& run, int x, const std::vector<std::vector<int64_t>>& delta) {
    const std::vector<int>& children = nodes_[x].children;
    const int s = static_cast<int>(children.size());
    const int p = static_cast<int>(run.w[x].size());
    const std::vector<int>& cx = run.cx[x];
    const int ncolors = static_cast<int>(cx.size());
    if (ncolors > 20)
      throw Error(ErrorKind::size_cap, "per-node color set too large for the combination step");
    auto color_pos = [&](int c) {
      auto it = std::lower_bound(cx.begin(), cx.end(), c);
      return it != cx.end() && *it == c ? static_cast<int>(it - cx.begin()) : -1;
    };

    // delta over child subsets.
    std::vector<std::vector<int64_t>> delta_mask(size_t{1} << s, std::vector<int64_t>(p, 0));
    for (uint32_t mask = 1; mask < (uint32_t{1} << s); ++mask) {
      int j = __builtin_ctz(mask);
      for (int ip = 0; ip < p; ++ip)
        delta_mask[mask][ip] = sat_add(delta_mask[mask & (mask - 1)][ip], delta[j][ip]);
    }
    // m[mask][color] = min over W members of that color, with the argmin.
    std::vector<std::vector<std::pair<int64_t, int>>> m(
        size_t{1} << s, std::vector<std::pair<int64_t, int>>(ncolors, {kInfSize, -1}));
    for (uint32_t mask = 0; mask < (uint32_t{1} << s); ++mask)
      for (int ip = 0; ip < p; ++ip) {
        int cpos = color_pos(inst_.color[run.w[x][ip]]);
        if (cpos < 0) continue;
        if (delta_mask[mask][ip] < m[mask][cpos].first) m[mask][cpos] = {delta_mask[mask][ip], ip};
      }
    // least W index per color, for pads.
    std::vector<int> pad_pick(ncolors, -1);
    for (int ip = p - 1; ip >= 0; --ip) {
      int cpos = color_pos(inst_.color[run.w[x][ip]]);
      if (cpos >= 0) pad_pick[cpos] = ip;
    }

    run.beta[x].assign(p, kInfSize);
    run.beta_choice[x].assign(p, {});

    // All partitions of the child set into labeled-by-color blocks plus the
    // block holding the x-vertex v_i itself; missing colors are padded with
    // one extra vertex each.
    // Recursion below grows `blocks`, so loop by index: references into the
    // vector do not survive the deeper push_back calls.
    std::vector<std::vector<int>> blocks;  // child index lists (may be empty later)
    blocks.reserve(s + 1);
    std::function<void(int)> enumerate = [&](int j) {
      if (j == s) {
        process_partition(run, x, delta_mask, m, pad_pick, blocks);
        return;
      }
      const size_t existing = blocks.size();
      for (size_t bi = 0; bi < existing; ++bi) {
        blocks[bi].push_back(j);
        enumerate(j + 1);
        blocks[bi].pop_back();
      }
      blocks.push_back({j});
      enumerate(j + 1);
      blocks.pop_back();
    };
    // block 0 always exists (holds index "0", i.e. v_i).
    blocks.push_back({});
    enumerate(0);
  }

  void process_partition(Run& run, int x, const std::vector<std::vector<int64_t>>& delta_mask,
                         const std::vector<std::vector<std::pair<int64_t, int>>>& m,
                         const std::vector<int>& pad_pick,
                         const std::vector<std::vector<int>>& blocks) {
    const int p = static_cast<int>(run.w[x].size());
    const std::vector<int>& cx = run.cx[x];
    const int ncolors = static_cast<int>(cx.size());
    const int b = static_cast<int>(blocks.size());
    if (b > inst_.d) return;

    auto block_mask = [&](const std::vector<int>& js) {
      uint32_t mask = 0;
      for (int j : js) mask |= uint32_t{1} << j;
      return mask;
    };

    // cover[mask of colors hit by blocks 1..] = (cost, parent pointers)
    struct CoverState {
      int64_t cost = kInfSize;
      int prev_mask = -1;
      int color = -1;
      int iprime = -1;
    };
    std::vector<std::vector<CoverState>> cover(b, std::vector<CoverState>(size_t{1} << ncolors));
    cover[0][0].cost = 0;
    for (int h = 1; h < b; ++h) {
      uint32_t bm = block_mask(blocks[h]);
      for (uint32_t mask = 0; mask < (uint32_t{1} << ncolors); ++mask) {
        if (cover[h - 1][mask].cost >= kInfSize) continue;
        for (int c = 0; c < ncolors; ++c) {
          if (m[bm][c].first >= kInfSize) continue;
          uint32_t nm = mask | (uint32_t{1} << c);
          int64_t cost = sat_add(cover[h - 1][mask].cost, m[bm][c].first);
          if (cost < cover[h][nm].cost) cover[h][nm] = {cost, static_cast<int>(mask), c, m[bm][c].second};
        }
      }
    }

    uint32_t b0 = block_mask(blocks[0]);
    for (int i = 0; i < p; ++i) {
      int c0 = -1;
      {
        auto it = std::lower_bound(cx.begin(), cx.end(), inst_.color[run.w[x][i]]);
        if (it == cx.end() || *it != inst_.color[run.w[x][i]]) continue;  // phi(1) must be c(v_i)
        c0 = static_cast<int>(it - cx.begin());
      }
      int64_t base0 = delta_mask[b0][i];
      if (base0 >= kInfSize) continue;
      for (uint32_t mask = 0; mask < (uint32_t{1} << ncolors); ++mask) {
        if (cover[b - 1][mask].cost >= kInfSize) continue;
        uint32_t hit = mask | (uint32_t{1} << c0);
        int missing = ncolors - __builtin_popcount(hit);
        int t = b + missing;
        if (t > inst_.d) continue;
        int64_t value = sat_add(sat_add(t, base0), cover[b - 1][mask].cost);
        if (value >= run.beta[x][i]) continue;
        run.beta[x][i] = value;
        BetaChoice choice;
        choice.parts.push_back({blocks[0], i});
        int cur = static_cast<int>(mask);
        for (int h = b - 1; h >= 1; --h) {
          const CoverState& st = cover[h][cur];
          choice.parts.push_back({blocks[h], st.iprime});
          cur = st.prev_mask;
        }
        for (int c = 0; c < ncolors; ++c)
          if (!(hit >> c & 1)) choice.pad_iprimes.push_back(pad_pick[c]);
        run.beta_choice[x][i] = std::move(choice);
      }
    }
  }

  int64_t root_value(const Run& run) const {
    if (run.loaded[root_]) {
      int64_t best = kInfSize;
      for (int64_t v : run.beta[root_]) best = std::min(best, v);
      return best;
    }
    return run.gamma[root_][0];
  }

  std::vector<int> root_witness(const Run& run) {
    std::vector<int> s;
    if (run.loaded[root_]) {
      int arg = -1;
      int64_t best = kInfSize;
      for (size_t i = 0; i < run.beta[root_].size(); ++i)
        if (run.beta[root_][i] < best) {
          best = run.beta[root_][i];
          arg = static_cast<int>(i);
        }
      if (best >= kInfSize) return s;
      reconstruct_beta(run, root_, arg, s);
    } else {
      if (run.gamma[root_][0] >= kInfSize) return s;
      reconstruct_gamma(run, root_, s);
    }
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
  }

  void reconstruct_beta(const Run& run, int x, int i, std::vector<int>& out) {
    const BetaChoice& choice = run.beta_choice[x][i];
    for (const BetaPart& part : choice.parts) {
      out.push_back(run.w[x][part.iprime]);
      for (int j : part.child_js) take_child(run, x, j, part.iprime, out);
    }
    for (int ip : choice.pad_iprimes) out.push_back(run.w[x][ip]);
  }

  // Child contribution behind delta_j(x, i').
  void take_child(const Run& run, int x, int j, int iprime, std::vector<int>& out) {
    int z = nodes_[x].children[j];
    const EdgeData& ed = edges_[z];
    const std::vector<int>& wz = run.w[z];
    int vi = run.w[x][iprime];
    int h = run.delta_arg[x][j][iprime];
    std::vector<int> base;
    for (int w : ed.everts)
      if (run.comp.test(w) && !dominates(w, vi)) base.push_back(w);
    if (run.loaded[z]) {
      std::vector<int> target;
      for (int w : base)
        if (!dominates(w, wz[h])) target.push_back(w);
      AlphaResult a = alpha(z, make_target(target));
      out.insert(out.end(), a.chosen.begin(), a.chosen.end());
      reconstruct_beta(run, z, h, out);
    } else {
      std::vector<int> target = base;
      if (h >= 1 && !dominates(wz[h - 1], vi)) target.push_back(wz[h - 1]);
      AlphaResult a = alpha(z, make_target(target));
      out.insert(out.end(), a.chosen.begin(), a.chosen.end());
      reconstruct_gamma(run, z, out);
    }
  }

  void reconstruct_gamma(const Run& run, int x, std::vector<int>& out) {
    if (nodes_[x].children.empty()) return;  // gamma leaf: empty set
    const int p = static_cast<int>(run.w[x].size());
    for (int j = 0; j < static_cast<int>(nodes_[x].children.size()); ++j) {
      const GammaChild& gc = run.gamma_choice[x][j];
      int z = nodes_[x].children[j];
      const EdgeData& ed = edges_[z];
      const std::vector<int>& wz = run.w[z];
      std::vector<int> worder = run.w[x];
      sort_by_edge_order(ed, worder);
      std::vector<int> suffix;
      for (int r = gc.psi - 1; r < p; ++r) suffix.push_back(worder[r]);
      if (gc.loaded) {
        std::vector<int> target;
        for (int w : ed.everts)
          if (run.comp.test(w) && !dominates(w, wz[gc.hstar])) target.push_back(w);
        for (int w : suffix)
          if (!dominates(w, wz[gc.hstar])) target.push_back(w);
        AlphaResult a = alpha(z, make_target(target));
        out.insert(out.end(), a.chosen.begin(), a.chosen.end());
        reconstruct_beta(run, z, gc.hstar, out);
      } else {
        std::vector<int> target;
        for (int w : ed.everts)
          if (run.comp.test(w)) target.push_back(w);
        for (int r = 0; r < gc.hstar; ++r) target.push_back(wz[r]);
        target.insert(target.end(), suffix.begin(), suffix.end());
        AlphaResult a = alpha(z, make_target(target));
        out.insert(out.end(), a.chosen.begin(), a.chosen.end());
        reconstruct_gamma(run, z, out);
      }
    }
  }

  const Run* owner_run(int x) const {
    for (const Run& run : runs_)
      if (!run.w[x].empty()) return &run;
    return runs_.empty() ? nullptr : &runs_.front();
  }

  void verify_witness(const ExtensionResult& out) const {
    if (!out.feasible) return;
    if (static_cast<int64_t>(out.witness.size()) > out.value)
      throw Error(ErrorKind::validation, "internal: witness larger than DP value");
    Bits dominated(g_.n());
    for (int v : out.witness) {
      dominated.set(v);
      dominated |= g_.neighbors(v);
    }
    for (int v = 0; v < g_.n(); ++v)
      if (!dominated.test(v))
        throw Error(ErrorKind::validation, "internal: extension witness does not dominate");
  }
};

void validate_instance(const DomsetInstance& inst) {
  if (inst.d < 1) throw Error(ErrorKind::parameter, "d must be positive");
  for (const auto& [node, cx] : inst.color_sets) {
    if (inst.rep.rep().subdivision().branch_node(node) < 0)
      throw Error(ErrorKind::parameter, "color set for unknown node '" + node + "'");
    if (!std::is_sorted(cx.begin(), cx.end()))
      throw Error(ErrorKind::parameter, "color sets must be sorted");
  }
  if (static_cast<int>(inst.color.size()) != inst.rep.rep().vertex_count())
    throw Error(ErrorKind::parameter, "coloring size mismatch");
}

// Trivial-no test: C_x must fit both d and the colors realized at x.
bool trivially_infeasible(const DomsetInstance& inst) {
  std::vector<Classification> cls = classify_all(inst.rep.rep());
  for (const auto& [node, cx] : inst.color_sets) {
    if (static_cast<int>(cx.size()) > inst.d) return true;
    std::set<int> realized;
    for (int v = 0; v < inst.rep.rep().vertex_count(); ++v)
      if (!cls[v].is_e_vertex && cls[v].u_set == std::vector<std::string>{node})
        realized.insert(inst.color[v]);
    for (int c : cx)
      if (!realized.count(c)) return true;
  }
  return false;
}

}  // namespace

ExtensionResult solve_domset_extension(const DomsetInstance& inst) {
  validate_instance(inst);
  if (trivially_infeasible(inst)) return {};
  ExtensionSolver solver(inst);
  return solver.solve();
}

DPTables extension_tables(const DomsetInstance& inst) {
  validate_instance(inst);
  ExtensionSolver solver(inst);
  return solver.tables();
}

std::optional<std::vector<int>> extension_witness_at(const DomsetInstance& inst,
                                                     const std::string& node, bool loaded, int i) {
  validate_instance(inst);
  ExtensionSolver solver(inst);
  return solver.witness_at(node, loaded, i);
}

AlphaResult alpha_e(const NiceRep& rep, const std::string& edge_id, const std::vector<int>& x_set) {
  const HRepresentation& hrep = rep.rep();
  const Subdivision& sub = hrep.subdivision();
  int e = sub.base().edge_index(edge_id);
  if (e < 0) throw Error(ErrorKind::parameter, "unknown tree edge '" + edge_id + "'");

  // Orient the path from the endpoint nearer the root.
  int root_node = sub.branch_node(rep.t().root());
  std::vector<int> dist = sub.distances_from(root_node);
  const auto& edge = sub.base().edges()[e];
  int a = sub.branch_node(edge.a), b = sub.branch_node(edge.b);
  std::vector<int> path = sub.path_from(e, dist[a] <= dist[b] ? a : b);

  SimpleGraph g = build_intersection_graph(hrep);
  std::vector<std::pair<int, int>> span(g.n(), {-1, -1});
  for (int pos = 0; pos < static_cast<int>(path.size()); ++pos)
    for (int v = 0; v < g.n(); ++v) {
      if (!hrep.model(v).test(path[pos])) continue;
      if (span[v].first < 0) span[v].first = pos;
      span[v].second = pos;
    }
  for (int v : x_set)
    if (span[v].first < 0)
      throw Error(ErrorKind::parameter,
                  "target vertex '" + g.id(v) + "' does not meet the edge path");

  std::vector<Classification> cls = classify_all(hrep);
  std::vector<int> everts;
  for (int v = 0; v < g.n(); ++v)
    if (cls[v].is_e_vertex && cls[v].edge_id == edge_id) everts.push_back(v);
  auto less = [&](int u, int v) {
    if (span[u].first != span[v].first) return span[u].first < span[v].first;
    if (span[u].second != span[v].second) return span[u].second < span[v].second;
    return g.id(u) < g.id(v);
  };
  std::sort(everts.begin(), everts.end(), less);

  AlphaResult result;
  if (x_set.empty()) return result;
  auto dominates = [&](int u, int v) { return u == v || g.adjacent(u, v); };
  std::vector<int> members = x_set;
  std::sort(members.begin(), members.end(), less);
  for (int w : members) {
    bool ok = false;
    for (int u : everts) ok = ok || dominates(u, w);
    if (!ok) {
      result.value = kInfSize;
      result.chosen.clear();
      return result;
    }
  }
  std::vector<char> covered(g.n(), 0);
  while (true) {
    int w = -1;
    for (auto it = members.rbegin(); it != members.rend(); ++it)
      if (!covered[*it]) {
        w = *it;
        break;
      }
    if (w < 0) break;
    int pick = -1;
    for (int u : everts)
      if (dominates(u, w)) {
        pick = u;
        break;
      }
    result.chosen.push_back(pick);
    for (int m : members)
      if (dominates(pick, m)) covered[m] = 1;
  }
  result.value = static_cast<int64_t>(result.chosen.size());
  return result;
}

// ---------------------------------------------------------------------------
// The leafage-parameterized pipeline: dissolve, color, scan color sets,
// apply the rules, contract, run the extension DP.

namespace {

TRepresentation filter_vertices(const TRepresentation& t, const std::vector<int>& keep) {
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (int v : keep)
    models.emplace_back(t.rep().vertex_id(v), t.rep().model(v).to_vector());
  return TRepresentation(HRepresentation(t.rep().subdivision(), std::move(models)), t.root());
}

HRepresentation drop_vertices(const HRepresentation& rep, const std::set<std::string>& gone) {
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (int v = 0; v < rep.vertex_count(); ++v)
    if (!gone.count(rep.vertex_id(v)))
      models.emplace_back(rep.vertex_id(v), rep.model(v).to_vector());
  return HRepresentation(rep.subdivision(), std::move(models));
}

int leaf_count(const MultiGraph& tree) {
  if (tree.node_count() <= 1) return tree.node_count();
  int leaves = 0;
  for (const std::string& node : tree.nodes())
    if (tree.degree(node) <= 1) ++leaves;
  return leaves;
}

struct ColorSubsets {
  std::vector<std::vector<int>> subsets;  // each sorted, sizes ascending
};

ColorSubsets enumerate_color_sets(int colors, int max_size, int64_t guard) {
  int64_t total = 1, binom = 1;
  for (int i = 1; i <= std::min(colors, max_size); ++i) {
    binom = binom * (colors - i + 1) / i;
    total += binom;
    if (total > guard)
      throw Error(ErrorKind::size_cap,
                  "color-set enumeration would need " + std::to_string(total) +
                      "+ subsets; reduce the tree's leaf count");
  }
  ColorSubsets out;
  std::vector<int> current;
  // By size: empty set first, then singletons, etc., for a deterministic scan.
  out.subsets.push_back({});
  for (int size = 1; size <= std::min(colors, max_size); ++size) {
    std::function<void(int, int)> bysize = [&](int start, int remaining) {
      if (remaining == 0) {
        out.subsets.push_back(current);
        return;
      }
      for (int c = start; c + remaining <= colors; ++c) {
        current.push_back(c);
        bysize(c + 1, remaining - 1);
        current.pop_back();
      }
    };
    bysize(0, size);
  }
  return out;
}

TgraphDomsetResult solve_connected(const TRepresentation& t, int max_leaves) {
  TgraphDomsetResult out;
  SimpleGraph g = build_intersection_graph(t.rep());
  if (g.n() == 0) {
    out.minimum = 0;
    return out;
  }

  TRepresentation t1 = dissolve_degree_two(t);
  const MultiGraph& tree = t1.rep().subdivision().base();
  const int leaves = std::max(leaf_count(tree), 1);
  if (max_leaves > 0 && leaves > max_leaves)
    throw Error(ErrorKind::size_cap, "dissolved tree has " + std::to_string(leaves) +
                                         " leaves, budget is " + std::to_string(max_leaves));
  const int tnodes = tree.node_count();
  const int d = tnodes + leaves;
  const int trace_bound = 3 * tnodes - 2;

  TColoring coloring = color_by_u_sets(t1.rep());
  const int ncolors = static_cast<int>(coloring.color_u_sets.size());
  std::map<std::string, int> color_of_id;
  for (int v = 0; v < t1.rep().vertex_count(); ++v)
    if (coloring.color[v] >= 0) color_of_id[t1.rep().vertex_id(v)] = coloring.color[v];

  // Per tree edge: spanning vertices (both endpoints in the model), colors
  // touching either endpoint, and whether the edge carries e-vertices.
  SimpleGraph g1 = build_intersection_graph(t1.rep());
  std::vector<Classification> cls = classify_all(t1.rep());
  const int edge_total = tree.edge_count();
  std::vector<std::vector<int>> spanning_vertices(edge_total);
  std::vector<std::set<int>> spanning_colors(edge_total), touching_colors(edge_total);
  std::vector<char> has_evert(edge_total, 0);
  for (int v = 0; v < t1.rep().vertex_count(); ++v) {
    if (cls[v].is_e_vertex) {
      has_evert[tree.edge_index(cls[v].edge_id)] = 1;
      continue;
    }
    const std::vector<std::string>& u = cls[v].u_set;
    for (int e = 0; e < edge_total; ++e) {
      const auto& edge = tree.edges()[e];
      bool at_a = std::binary_search(u.begin(), u.end(), edge.a);
      bool at_b = std::binary_search(u.begin(), u.end(), edge.b);
      if (at_a || at_b) touching_colors[e].insert(coloring.color[v]);
      if (at_a && at_b) {
        spanning_vertices[e].push_back(v);
        spanning_colors[e].insert(coloring.color[v]);
      }
    }
  }
  std::vector<std::vector<int>> by_color(ncolors);
  for (int v = 0; v < g1.n(); ++v)
    if (coloring.color[v] >= 0) by_color[coloring.color[v]].push_back(v);

  ColorSubsets subsets = enumerate_color_sets(ncolors, std::min(trace_bound, ncolors), 2'000'000);

  std::vector<std::string> best_witness;
  for (const std::vector<int>& c_set : subsets.subsets) {
    ++out.stats.color_sets_tried;
    std::set<int> c_lookup(c_set.begin(), c_set.end());
    auto touched_by_c = [&](int e) {
      for (int c : touching_colors[e])
        if (c_lookup.count(c)) return true;
      return false;
    };

    // Rule 1: an e-vertex on a spanned edge whose endpoints no chosen color
    // touches.
    bool rule1 = false;
    for (int e = 0; e < edge_total && !rule1; ++e)
      rule1 = has_evert[e] && !spanning_colors[e].empty() && !touched_by_c(e);
    if (rule1) {
      ++out.stats.rule1_discards;
      continue;
    }

    // Rule 2, on the uncontracted graph: a vertex of an unchosen color that
    // some whole chosen color class dominates can never help.
    std::set<std::string> deleted;
    for (int u = 0; u < g1.n(); ++u) {
      if (coloring.color[u] < 0 || c_lookup.count(coloring.color[u])) continue;
      for (int c : c_set) {
        bool all_dominate = !by_color[c].empty();
        for (int v : by_color[c]) all_dominate = all_dominate && g1.adjacent(u, v);
        if (all_dominate) {
          deleted.insert(g1.id(u));
          break;
        }
      }
    }

    // A: edges spanned by a chosen color. A': edges spanned by a surviving
    // unchosen-color vertex whose endpoints no chosen color touches.
    TRepresentation t3 =
        deleted.empty() ? t1 : TRepresentation(drop_vertices(t1.rep(), deleted), t1.root());
    for (int e = 0; e < edge_total; ++e) {
      bool in_a = false;
      for (int c : spanning_colors[e]) in_a = in_a || c_lookup.count(c);
      bool in_a_prime = false;
      if (!in_a && !touched_by_c(e))
        for (int v : spanning_vertices[e])
          in_a_prime = in_a_prime || !deleted.count(g1.id(v));
      if (in_a || in_a_prime) t3 = contract_tree_edge(t3, tree.edges()[e].id);
    }

    // Color sets per contracted node; every color of C must survive at
    // exactly one node.
    std::vector<Classification> cls3 = classify_all(t3.rep());
    std::map<std::string, std::vector<int>> color_sets;
    std::vector<int> color3(t3.rep().vertex_count(), -1);
    std::set<int> seen_colors;
    for (int v = 0; v < t3.rep().vertex_count(); ++v) {
      auto it = color_of_id.find(t3.rep().vertex_id(v));
      if (it != color_of_id.end()) color3[v] = it->second;
      if (cls3[v].is_e_vertex || color3[v] < 0 || !c_lookup.count(color3[v])) continue;
      std::vector<int>& cx = color_sets[cls3[v].u_set.front()];
      if (!std::binary_search(cx.begin(), cx.end(), color3[v]))
        cx.insert(std::upper_bound(cx.begin(), cx.end(), color3[v]), color3[v]);
      seen_colors.insert(color3[v]);
    }
    if (seen_colors.size() != c_set.size())
      throw Error(ErrorKind::validation, "internal: a chosen color vanished before the DP");

    // Rule 3.
    bool rule3 = false;
    for (const auto& [node, cx] : color_sets) rule3 = rule3 || static_cast<int>(cx.size()) > d;
    if (rule3) {
      ++out.stats.rule3_discards;
      continue;
    }

    DomsetInstance inst{NiceRep(t3), 0, d, color3, color_sets};
    ++out.stats.dp_runs;
    ExtensionResult res = solve_domset_extension(inst);
    if (!res.feasible) continue;
    ++out.stats.finite_values;
    if (res.value < out.minimum) {
      // The extension witness must dominate the original graph.
      Bits dominated(g.n());
      std::vector<std::string> ids;
      for (int v : res.witness) ids.push_back(t3.rep().vertex_id(v));
      for (const std::string& id : ids) {
        int v = g.index_of(id);
        if (v < 0) throw Error(ErrorKind::validation, "internal: witness vertex missing from G");
        dominated.set(v);
        dominated |= g.neighbors(v);
      }
      for (int v = 0; v < g.n(); ++v)
        if (!dominated.test(v))
          throw Error(ErrorKind::validation, "internal: witness fails to dominate the input");
      out.minimum = res.value;
      best_witness = std::move(ids);
    }
  }
  if (out.minimum >= kInfSize)
    throw Error(ErrorKind::validation, "internal: no color set produced a dominating set");
  out.witness = std::move(best_witness);
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

}  // namespace

TgraphDomsetResult domination_number_tgraph(const TRepresentation& t, int max_leaves) {
  require_valid(t.rep());
  SimpleGraph g = build_intersection_graph(t.rep());
  TgraphDomsetResult out;
  out.minimum = 0;
  for (const std::vector<int>& comp : g.components()) {
    TgraphDomsetResult part = solve_connected(filter_vertices(t, comp), max_leaves);
    out.minimum += part.minimum;
    out.witness.insert(out.witness.end(), part.witness.begin(), part.witness.end());
    out.stats.color_sets_tried += part.stats.color_sets_tried;
    out.stats.rule1_discards += part.stats.rule1_discards;
    out.stats.rule3_discards += part.stats.rule3_discards;
    out.stats.dp_runs += part.stats.dp_runs;
    out.stats.finite_values += part.stats.finite_values;
  }
  std::sort(out.witness.begin(), out.witness.end());
  return out;
}

DomsetDecision solve_domset_tgraph(const TRepresentation& t, int64_t k, int max_leaves) {
  if (k < 1) throw Error(ErrorKind::parameter, "k must be positive");
  TgraphDomsetResult res = domination_number_tgraph(t, max_leaves);
  DomsetDecision out;
  out.stats = res.stats;
  out.yes = res.minimum <= k;
  if (out.yes) out.witness = res.witness;
  return out;
}

}  // namespace hgraph
