#include "hgraph/clique.hpp"

#include <algorithm>
#include <functional>
#include <queue>

#include "hgraph/errors.hpp"

namespace hgraph {

namespace {

constexpr int kNil = -1;

void check_sides(const SimpleGraph& g, const std::vector<int>& left,
                 const std::vector<int>& right) {
  std::vector<int> side(g.n(), 0);
  for (int v : left) side[v] = 1;
  for (int v : right) {
    if (side[v] == 1) throw Error(ErrorKind::type, "sides overlap at '" + g.id(v) + "'");
    side[v] = 2;
  }
  for (int v = 0; v < g.n(); ++v)
    if (side[v] == 0) throw Error(ErrorKind::type, "vertex '" + g.id(v) + "' not on either side");
  for (auto [u, v] : g.edge_list())
    if (side[u] == side[v])
      throw Error(ErrorKind::type,
                  "edge inside one side: '" + g.id(u) + "' - '" + g.id(v) + "'");
}

struct HopcroftKarp {
  const std::vector<std::vector<int>>& adj;  // left index -> right indices
  int nl, nr;
  std::vector<int> match_l, match_r, layer;

  HopcroftKarp(const std::vector<std::vector<int>>& adj, int nl, int nr)
      : adj(adj), nl(nl), nr(nr), match_l(nl, kNil), match_r(nr, kNil) {}

  bool bfs() {
    std::queue<int> q;
    layer.assign(nl, -1);
    for (int u = 0; u < nl; ++u)
      if (match_l[u] == kNil) {
        layer[u] = 0;
        q.push(u);
      }
    bool reachable_free = false;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        int w = match_r[v];
        if (w == kNil)
          reachable_free = true;
        else if (layer[w] < 0) {
          layer[w] = layer[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  }

  bool dfs(int u) {
    for (int v : adj[u]) {
      int w = match_r[v];
      if (w == kNil || (layer[w] == layer[u] + 1 && dfs(w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    layer[u] = -1;
    return false;
  }

  int run() {
    int matched = 0;
    while (bfs())
      for (int u = 0; u < nl; ++u)
        if (match_l[u] == kNil && dfs(u)) ++matched;
    return matched;
  }
};

}  // namespace

MatchingResult bipartite_max_matching(const SimpleGraph& g, const std::vector<int>& left,
                                      const std::vector<int>& right) {
  check_sides(g, left, right);
  const int nl = static_cast<int>(left.size());
  const int nr = static_cast<int>(right.size());
  std::vector<int> rpos(g.n(), -1);
  for (int i = 0; i < nr; ++i) rpos[right[i]] = i;
  std::vector<std::vector<int>> adj(nl);
  for (int i = 0; i < nl; ++i)
    g.neighbors(left[i]).for_each([&](int v) {
      if (rpos[v] >= 0) adj[i].push_back(rpos[v]);
    });

  HopcroftKarp hk(adj, nl, nr);
  MatchingResult out;
  out.size = hk.run();
  for (int i = 0; i < nl; ++i)
    if (hk.match_l[i] != kNil) out.pairs.emplace_back(left[i], right[hk.match_l[i]]);
  return out;
}

std::vector<int> bipartite_max_independent_set(const SimpleGraph& g, const std::vector<int>& left,
                                               const std::vector<int>& right) {
  check_sides(g, left, right);
  const int nl = static_cast<int>(left.size());
  const int nr = static_cast<int>(right.size());
  std::vector<int> rpos(g.n(), -1);
  for (int i = 0; i < nr; ++i) rpos[right[i]] = i;
  std::vector<std::vector<int>> adj(nl);
  for (int i = 0; i < nl; ++i)
    g.neighbors(left[i]).for_each([&](int v) {
      if (rpos[v] >= 0) adj[i].push_back(rpos[v]);
    });
  HopcroftKarp hk(adj, nl, nr);
  hk.run();

  // König: alternate from free left vertices; cover = (L \ ZL) ∪ (R ∩ ZR).
  std::vector<char> zl(nl, 0), zr(nr, 0);
  std::queue<int> q;
  for (int u = 0; u < nl; ++u)
    if (hk.match_l[u] == kNil) {
      zl[u] = 1;
      q.push(u);
    }
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u]) {
      if (zr[v]) continue;
      zr[v] = 1;
      int w = hk.match_r[v];
      if (w != kNil && !zl[w]) {
        zl[w] = 1;
        q.push(w);
      }
    }
  }
  std::vector<int> out;
  for (int u = 0; u < nl; ++u)
    if (zl[u]) out.push_back(left[u]);
  for (int v = 0; v < nr; ++v)
    if (!zr[v]) out.push_back(right[v]);
  std::sort(out.begin(), out.end());
  return out;
}

CobipartiteSlice cobipartite_slice(const HRepresentation& rep, int anchor) {
  const Subdivision& sub = rep.subdivision();
  Classification cls = classify_vertex(rep, anchor);
  if (!cls.is_e_vertex)
    throw Error(ErrorKind::parameter, "anchor '" + rep.vertex_id(anchor) + "' is not an e-vertex");
  int e = sub.base().edge_index(cls.edge_id);
  const std::vector<int>& path = sub.path_nodes(e);

  CobipartiteSlice slice;
  slice.anchor = anchor;
  for (int node : path) {
    if (!rep.model(anchor).test(node)) continue;
    if (slice.x_node < 0) slice.x_node = node;
    slice.y_node = node;
  }
  for (int v = 0; v < rep.vertex_count(); ++v) {
    if (rep.model(v).test(slice.x_node))
      slice.k1.push_back(v);
    else if (rep.model(v).test(slice.y_node))
      slice.k2.push_back(v);
  }
  return slice;
}

std::vector<int> max_clique_with_e_vertex(const HRepresentation& rep) {
  require_valid(rep);
  SimpleGraph g = build_intersection_graph(rep);
  std::vector<Classification> cls = classify_all(rep);

  std::vector<int> best;
  for (int u = 0; u < rep.vertex_count(); ++u) {
    if (!cls[u].is_e_vertex) continue;
    CobipartiteSlice slice = cobipartite_slice(rep, u);
    std::vector<int> members = slice.k1;
    members.insert(members.end(), slice.k2.begin(), slice.k2.end());
    // Complement across the two cliques; an independent set there is a clique
    // of the slice graph.
    std::vector<std::string> ids;
    for (int v : members) ids.push_back(g.id(v));
    SimpleGraph comp(ids);
    for (int a : slice.k1)
      for (int b : slice.k2)
        if (!g.adjacent(a, b)) comp.add_edge(comp.index_of(g.id(a)), comp.index_of(g.id(b)));
    std::vector<int> cl, cr;
    for (int a : slice.k1) cl.push_back(comp.index_of(g.id(a)));
    for (int b : slice.k2) cr.push_back(comp.index_of(g.id(b)));
    std::vector<int> mis = bipartite_max_independent_set(comp, cl, cr);
    if (mis.size() > best.size()) {
      best.clear();
      for (int v : mis) best.push_back(g.index_of(comp.id(v)));
      std::sort(best.begin(), best.end());
    }
  }
  return best;
}

KernelOutput clique_kernel(const HRepresentation& rep, int k) {
  if (k < 1) throw Error(ErrorKind::parameter, "k must be at least 1");
  require_valid(rep);
  SimpleGraph g = build_intersection_graph(rep);
  std::vector<Classification> cls = classify_all(rep);

  KernelOutput out;
  out.size_bound = (k - 1) * rep.h_node_count();

  std::vector<int> via_e = max_clique_with_e_vertex(rep);
  if (static_cast<int>(via_e.size()) >= k) {
    out.yes = true;
    for (int v : via_e) out.certificate.push_back(g.id(v));
    return out;
  }

  std::vector<int> kept;
  for (int v = 0; v < rep.vertex_count(); ++v)
    if (!cls[v].is_e_vertex) kept.push_back(v);

  const Subdivision& sub = rep.subdivision();
  for (const std::string& node : sub.base().nodes()) {
    int idx = sub.branch_node(node);
    std::vector<int> vx;
    for (int v : kept)
      if (rep.model(v).test(idx)) vx.push_back(v);
    if (static_cast<int>(vx.size()) >= k) {
      out.yes = true;
      for (int v : vx) out.certificate.push_back(g.id(v));
      return out;
    }
  }
  out.reduced = g.induced(kept);
  return out;
}

CliqueOracleResult clique_oracle(const SimpleGraph& g, int cap) {
  if (g.n() > cap)
    throw Error(ErrorKind::size_cap, "clique oracle cap " + std::to_string(cap) +
                                         " exceeded by n=" + std::to_string(g.n()));
  if (g.n() > 64) throw Error(ErrorKind::size_cap, "clique oracle supports at most 64 vertices");
  const int n = g.n();
  std::vector<uint64_t> nb(n, 0);
  for (int v = 0; v < n; ++v)
    g.neighbors(v).for_each([&](int w) { nb[v] |= uint64_t{1} << w; });

  uint64_t best_mask = 0;
  int best = 0;
  std::function<void(uint64_t, uint64_t, int)> expand = [&](uint64_t current, uint64_t cand,
                                                            int size) {
    if (size + __builtin_popcountll(cand) <= best) return;
    if (!cand) {
      if (size > best) {
        best = size;
        best_mask = current;
      }
      return;
    }
    int v = __builtin_ctzll(cand);
    expand(current | (uint64_t{1} << v), cand & nb[v], size + 1);
    expand(current, cand & ~(uint64_t{1} << v), size);
  };
  uint64_t all = n == 64 ? ~uint64_t{0} : (uint64_t{1} << n) - 1;
  expand(0, all, 0);

  CliqueOracleResult out;
  out.omega = best;
  for (int v = 0; v < n; ++v)
    if (best_mask >> v & 1) out.witness.push_back(v);
  return out;
}

}  // namespace hgraph
