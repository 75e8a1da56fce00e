#include "hgraph/tree.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "hgraph/errors.hpp"

namespace hgraph {

TRepresentation::TRepresentation(HRepresentation rep, std::string root)
    : rep_(std::move(rep)), root_(std::move(root)) {
  if (!rep_.subdivision().base().is_tree())
    throw Error(ErrorKind::type, "base multigraph is not a tree");
  if (rep_.subdivision().branch_node(root_) < 0)
    throw Error(ErrorKind::parameter, "root '" + root_ + "' is not a node of T");
}

bool is_nice(const TRepresentation& t) {
  const HRepresentation& rep = t.rep();
  for (int v = 0; v < rep.vertex_count(); ++v) {
    int branching = 0;
    rep.model(v).for_each([&](int node) {
      if (rep.subdivision().is_branching(node)) ++branching;
    });
    if (branching > 1) return false;
  }
  return true;
}

NiceRep::NiceRep(TRepresentation t) : t_(std::move(t)) {
  if (!is_nice(t_))
    throw Error(ErrorKind::type, "representation is not nice: some model spans two nodes of T");
}

namespace {

// Chordless cycle through a non-clique minimal separator: a is adjacent to
// both u and w, the rest of the cycle runs through the full component C_b.
std::vector<int> cycle_witness(const SimpleGraph& g) {
  const int n = g.n();
  for (int a = 0; a < n; ++a) {
    Bits closed = g.closed_neighborhood(a);
    for (int b = 0; b < n; ++b) {
      if (b == a || g.adjacent(a, b) || closed.test(b)) continue;
      // Component of b in G - N[a].
      Bits comp(n);
      std::queue<int> q;
      q.push(b);
      comp.set(b);
      while (!q.empty()) {
        int v = q.front();
        q.pop();
        g.neighbors(v).for_each([&](int x) {
          if (!closed.test(x) && !comp.test(x)) {
            comp.set(x);
            q.push(x);
          }
        });
      }
      Bits sep(n);
      comp.for_each([&](int v) { sep |= g.neighbors(v); });
      sep.subtract(comp);
      // Non-clique separator -> chordless cycle.
      std::vector<int> s = sep.to_vector();
      for (size_t i = 0; i < s.size(); ++i)
        for (size_t j = i + 1; j < s.size(); ++j) {
          int u = s[i], w = s[j];
          if (g.adjacent(u, w)) continue;
          // Shortest u-w path with interior in comp.
          std::vector<int> prev(n, -2);
          std::queue<int> bfs;
          bfs.push(u);
          prev[u] = -1;
          while (!bfs.empty() && prev[w] == -2) {
            int v = bfs.front();
            bfs.pop();
            g.neighbors(v).for_each([&](int x) {
              if (prev[x] == -2 && (x == w || comp.test(x))) {
                prev[x] = v;
                bfs.push(x);
              }
            });
          }
          std::vector<int> cycle = {a};
          for (int v = w; v != -1; v = prev[v]) cycle.push_back(v);
          std::reverse(cycle.begin() + 1, cycle.end());
          return cycle;  // a, u, ..., w
        }
    }
  }
  return {};
}

}  // namespace

ChordalityResult check_chordal(const SimpleGraph& g) {
  const int n = g.n();
  ChordalityResult result;

  // Maximum cardinality search; reverse selection order is the candidate PEO.
  std::vector<int> weight(n, 0), selection;
  std::vector<char> numbered(n, 0);
  for (int step = 0; step < n; ++step) {
    int pick = -1;
    for (int v = 0; v < n; ++v)
      if (!numbered[v] && (pick < 0 || weight[v] > weight[pick])) pick = v;
    numbered[pick] = 1;
    selection.push_back(pick);
    g.neighbors(pick).for_each([&](int w) {
      if (!numbered[w]) ++weight[w];
    });
  }
  std::vector<int> peo(selection.rbegin(), selection.rend());

  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[peo[i]] = i;
  for (int i = 0; i < n; ++i) {
    std::vector<int> later;
    g.neighbors(peo[i]).for_each([&](int w) {
      if (rank[w] > i) later.push_back(w);
    });
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.adjacent(later[a], later[b])) {
          result.chordal = false;
          result.witness_cycle = cycle_witness(g);
          return result;
        }
  }
  result.chordal = true;
  result.peo = peo;
  return result;
}

TRepresentation clique_tree(const SimpleGraph& g) {
  if (!g.is_connected())
    throw Error(ErrorKind::connectivity, "clique tree needs a connected graph");
  ChordalityResult chordal = check_chordal(g);
  if (!chordal.chordal) {
    std::vector<std::string> names;
    for (int v : chordal.witness_cycle) names.push_back(g.id(v));
    throw Error(ErrorKind::chordality, "graph is not chordal (witness cycle of length " +
                                           std::to_string(names.size()) + ")",
                names);
  }

  // Candidate cliques {v} ∪ N_later(v) along the PEO, then keep the maximal ones.
  const int n = g.n();
  std::vector<int> rank(n);
  for (int i = 0; i < n; ++i) rank[chordal.peo[i]] = i;
  std::vector<Bits> candidates;
  for (int i = 0; i < n; ++i) {
    Bits c(n);
    c.set(chordal.peo[i]);
    g.neighbors(chordal.peo[i]).for_each([&](int w) {
      if (rank[w] > i) c.set(w);
    });
    candidates.push_back(c);
  }
  std::vector<Bits> maximal;
  for (const Bits& c : candidates) {
    bool dominated = false;
    for (const Bits& other : candidates)
      if (!(other == c) && other.contains(c)) {
        dominated = true;
        break;
      }
    if (!dominated && std::find(maximal.begin(), maximal.end(), c) == maximal.end())
      maximal.push_back(c);
  }
  // Canonical clique order for stable node names.
  std::vector<std::vector<int>> cliques;
  for (const Bits& c : maximal) cliques.push_back(c.to_vector());
  std::sort(cliques.begin(), cliques.end(), [&](const auto& a, const auto& b) {
    std::vector<std::string> an, bn;
    for (int v : a) an.push_back(g.id(v));
    for (int v : b) bn.push_back(g.id(v));
    std::sort(an.begin(), an.end());
    std::sort(bn.begin(), bn.end());
    return an < bn;
  });
  const int m = static_cast<int>(cliques.size());

  // Maximum-weight spanning tree of the clique graph is a clique tree.
  struct Link {
    int w, i, j;
  };
  std::vector<Link> links;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      std::vector<int> inter;
      std::set_intersection(cliques[i].begin(), cliques[i].end(), cliques[j].begin(),
                            cliques[j].end(), std::back_inserter(inter));
      if (!inter.empty()) links.push_back({static_cast<int>(inter.size()), i, j});
    }
  std::sort(links.begin(), links.end(), [](const Link& a, const Link& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<int> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  MultiGraph t;
  auto clique_name = [](int i) { return "K" + std::to_string(i); };
  for (int i = 0; i < m; ++i) t.add_node(clique_name(i));
  int edge_counter = 0;
  for (const Link& link : links) {
    if (find(link.i) == find(link.j)) continue;
    parent[find(link.i)] = find(link.j);
    t.add_edge("t" + std::to_string(edge_counter++), clique_name(link.i), clique_name(link.j));
  }

  Subdivision sub(std::move(t), {});
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (int v = 0; v < n; ++v) {
    std::vector<int> nodes;
    for (int i = 0; i < m; ++i)
      if (std::binary_search(cliques[i].begin(), cliques[i].end(), v))
        nodes.push_back(sub.branch_node(clique_name(i)));
    models.emplace_back(g.id(v), std::move(nodes));
  }
  return TRepresentation(HRepresentation(std::move(sub), std::move(models)), clique_name(0));
}

namespace {

// Rebuilds a representation under an old-node -> new-node index map;
// vertices mapped in drop are removed.
HRepresentation remap_models(const HRepresentation& old, Subdivision new_sub,
                             const std::vector<int>& node_map, const std::vector<char>& drop) {
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (int v = 0; v < old.vertex_count(); ++v) {
    if (drop[v]) continue;
    std::set<int> nodes;
    old.model(v).for_each([&](int node) { nodes.insert(node_map[node]); });
    models.emplace_back(old.vertex_id(v), std::vector<int>(nodes.begin(), nodes.end()));
  }
  return HRepresentation(std::move(new_sub), std::move(models));
}

std::string fresh_edge_id(const MultiGraph& g, std::string base) {
  while (g.edge_index(base) >= 0) base += "+";
  return base;
}

}  // namespace

TRepresentation dissolve_degree_two(const TRepresentation& t) {
  HRepresentation current = t.rep();
  std::string root = t.root();
  while (true) {
    const Subdivision& sub = current.subdivision();
    const MultiGraph& base = sub.base();
    std::string b;
    for (const std::string& node : base.nodes())
      if (base.degree(node) == 2) {
        b = node;
        break;
      }
    if (b.empty()) break;

    // The two incident edges, in id order.
    int e1 = -1, e2 = -1;
    for (int e = 0; e < base.edge_count(); ++e)
      if (base.edges()[e].a == b || base.edges()[e].b == b) (e1 < 0 ? e1 : e2) = e;
    const auto& edge1 = base.edges()[e1];
    const auto& edge2 = base.edges()[e2];
    std::string a = edge1.a == b ? edge1.b : edge1.a;
    std::string c = edge2.a == b ? edge2.b : edge2.a;

    MultiGraph merged;
    for (const std::string& node : base.nodes())
      if (node != b) merged.add_node(node);
    std::map<std::string, int> counts;
    for (int e = 0; e < base.edge_count(); ++e) {
      if (e == e1 || e == e2) continue;
      merged.add_edge(base.edges()[e].id, base.edges()[e].a, base.edges()[e].b);
      counts[base.edges()[e].id] = sub.sub_count(e);
    }
    std::string joined = fresh_edge_id(merged, edge1.id + "+" + edge2.id);
    merged.add_edge(joined, a, c);
    counts[joined] = sub.sub_count(e1) + 1 + sub.sub_count(e2);
    Subdivision new_sub(std::move(merged), std::move(counts));

    std::vector<int> node_map(sub.node_count(), -1);
    for (const std::string& node : base.nodes())
      if (node != b) node_map[sub.branch_node(node)] = new_sub.branch_node(node);
    for (int e = 0; e < base.edge_count(); ++e) {
      if (e == e1 || e == e2) continue;
      std::vector<int> old_path = sub.path_nodes(e);
      std::vector<int> new_path = new_sub.path_nodes(new_sub.base().edge_index(base.edges()[e].id));
      for (size_t i = 0; i < old_path.size(); ++i) node_map[old_path[i]] = new_path[i];
    }
    std::vector<int> old_path = sub.path_from(e1, sub.branch_node(a));
    std::vector<int> tail = sub.path_from(e2, sub.branch_node(b));
    old_path.insert(old_path.end(), tail.begin() + 1, tail.end());  // a .. b .. c
    std::vector<int> new_path =
        new_sub.path_from(new_sub.base().edge_index(joined), new_sub.branch_node(a));
    for (size_t i = 0; i < old_path.size(); ++i) node_map[old_path[i]] = new_path[i];

    HRepresentation next = remap_models(current, std::move(new_sub), node_map,
                                        std::vector<char>(current.vertex_count(), 0));
    current = std::move(next);
    if (root == b) root.clear();
  }
  if (root.empty()) root = current.subdivision().base().nodes()[0];
  return TRepresentation(std::move(current), root);
}

TRepresentation contract_tree_edge(const TRepresentation& t, const std::string& edge_id) {
  const HRepresentation& old = t.rep();
  const Subdivision& sub = old.subdivision();
  const MultiGraph& base = sub.base();
  int e = base.edge_index(edge_id);
  if (e < 0) throw Error(ErrorKind::parameter, "unknown tree edge '" + edge_id + "'");
  const std::string x = base.edges()[e].a;
  const std::string y = base.edges()[e].b;
  const std::string z = std::min(x, y);
  const std::string gone = std::max(x, y);

  MultiGraph merged;
  for (const std::string& node : base.nodes())
    if (node != gone) merged.add_node(node);
  std::map<std::string, int> counts;
  for (int f = 0; f < base.edge_count(); ++f) {
    if (f == e) continue;
    const auto& edge = base.edges()[f];
    merged.add_edge(edge.id, edge.a == gone ? z : edge.a, edge.b == gone ? z : edge.b);
    counts[edge.id] = sub.sub_count(f);
  }
  Subdivision new_sub(std::move(merged), std::move(counts));

  std::vector<int> node_map(sub.node_count(), -1);
  for (const std::string& node : base.nodes())
    node_map[sub.branch_node(node)] = new_sub.branch_node(node == gone ? z : node);
  for (int f = 0; f < base.edge_count(); ++f) {
    if (f == e) continue;
    const std::string& from = base.edges()[f].a;
    std::vector<int> old_path = sub.path_from(f, sub.branch_node(from));
    std::vector<int> new_path = new_sub.path_from(
        new_sub.base().edge_index(base.edges()[f].id),
        new_sub.branch_node(from == gone ? z : from));
    for (size_t i = 0; i < old_path.size(); ++i) node_map[old_path[i]] = new_path[i];
  }
  // Everything on the contracted path collapses to z.
  for (int node : sub.path_nodes(e)) node_map[node] = new_sub.branch_node(z);

  std::vector<char> drop(old.vertex_count(), 0);
  for (int v = 0; v < old.vertex_count(); ++v) {
    Classification c = classify_vertex(old, v);
    if (c.is_e_vertex && c.edge_id == edge_id) drop[v] = 1;
  }
  HRepresentation rep = remap_models(old, std::move(new_sub), node_map, drop);
  std::string root = (t.root() == gone) ? z : t.root();
  return TRepresentation(std::move(rep), root);
}

}  // namespace hgraph
