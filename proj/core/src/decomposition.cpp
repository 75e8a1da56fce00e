#include "hgraph/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <set>

#include "hgraph/errors.hpp"
#include "hgraph/util.hpp"

namespace hgraph {

std::vector<std::vector<int>> Decomposition::cuts() const {
  std::vector<std::vector<int>> out(tree.size());
  // Post-order accumulation of the leaf vertices under each node.
  std::function<void(int)> walk = [&](int w) {
    if (tree[w].leaf_vertex >= 0) out[w].push_back(tree[w].leaf_vertex);
    for (int c : tree[w].children) {
      walk(c);
      out[w].insert(out[w].end(), out[c].begin(), out[c].end());
    }
    std::sort(out[w].begin(), out[w].end());
  };
  walk(root);
  return out;
}

Decomposition caterpillar_decomposition(const HRepresentation& rep, const std::string& root_node) {
  require_valid(rep);
  const int n = rep.vertex_count();
  if (n < 2)
    throw Error(ErrorKind::degenerate_size,
                "caterpillar decomposition needs at least 2 vertices, got " + std::to_string(n));

  const Subdivision& sub = rep.subdivision();
  std::string root_name = root_node;
  if (root_name.empty()) {
    if (sub.base().node_count() == 0)
      throw Error(ErrorKind::parameter, "H has no branching node to root at");
    root_name = sub.base().nodes()[0];
  }
  int root_idx = sub.branch_node(root_name);
  if (root_idx < 0)
    throw Error(ErrorKind::parameter, "'" + root_name + "' is not a branching node of H");

  // Distances per component of the subdivision: the root's component comes
  // first, every other component (keyed by its least node) follows with
  // distances from that least node. Models are connected, so each one lives
  // in exactly one component; keeping components contiguous preserves the
  // bound even when H has isolated nodes or falls apart.
  std::vector<int> comp_rank(sub.node_count(), -1), dist(sub.node_count(), -1);
  {
    std::vector<int> from_root = sub.distances_from(root_idx);
    int next_rank = 1;
    for (int node = 0; node < sub.node_count(); ++node) {
      if (from_root[node] >= 0) {
        comp_rank[node] = 0;
        dist[node] = from_root[node];
      } else if (comp_rank[node] < 0) {
        std::vector<int> local = sub.distances_from(node);
        for (int other = 0; other < sub.node_count(); ++other)
          if (local[other] >= 0) {
            comp_rank[other] = next_rank;
            dist[other] = local[other];
          }
        ++next_rank;
      }
    }
  }
  struct Key {
    int comp;
    int dist;
    int vertex;
  };
  std::vector<Key> keyed;
  for (int v = 0; v < n; ++v) {
    Key key{0, std::numeric_limits<int>::max(), v};
    bool first = true;
    rep.model(v).for_each([&](int node) {
      if (first) {
        key.comp = comp_rank[node];
        first = false;
      }
      key.dist = std::min(key.dist, dist[node]);
    });
    keyed.push_back(key);
  }
  std::stable_sort(keyed.begin(), keyed.end(), [&](const Key& a, const Key& b) {
    if (a.comp != b.comp) return a.comp < b.comp;
    if (a.dist != b.dist) return a.dist < b.dist;
    return rep.vertex_id(a.vertex) < rep.vertex_id(b.vertex);
  });

  Decomposition dec;
  for (const Key& key : keyed) dec.order.push_back(key.vertex);

  auto leaf_id = [](int i) { return "y" + std::to_string(i + 1); };
  if (n == 2) {
    dec.tree.push_back({leaf_id(1), -1, {}, dec.order[1]});
    dec.tree.push_back({leaf_id(0), 0, {}, dec.order[0]});
    dec.tree[0].children = {1};
    dec.root = 0;
    return dec;
  }

  // Spine x_2..x_{n-1} rooted at x_{n-1}; y_1,y_2 hang off x_2 and
  // y_{n-1},y_n off the root, matching the construction for n >= 3.
  const int spine = n - 2;  // spine node i stores x_{i+2}
  for (int i = 0; i < spine; ++i)
    dec.tree.push_back({"x" + std::to_string(i + 2), i + 1 < spine ? i + 1 : -1, {}, -1});
  dec.root = spine - 1;
  for (int i = 1; i < spine; ++i) dec.tree[i].children.push_back(i - 1);

  auto attach_leaf = [&](int spine_node, int vertex_pos) {
    int idx = static_cast<int>(dec.tree.size());
    dec.tree.push_back({leaf_id(vertex_pos), spine_node, {}, dec.order[vertex_pos]});
    dec.tree[spine_node].children.push_back(idx);
  };
  for (int pos = 0; pos < n; ++pos)
    attach_leaf(std::clamp(pos - 1, 0, spine - 1), pos);
  return dec;
}

namespace {

struct CutView {
  std::vector<int> side_relevant;        // all side vertices with cross edges
  std::vector<int> side_reps;            // one per cross-neighborhood class
  std::vector<int> comp_reps;            // likewise on the complement side
  std::vector<int> comp_positions;       // complement vertices with cross edges
};

CutView make_cut_view(const SimpleGraph& g, const Bits& side) {
  CutView view;
  std::set<Bits> side_seen, comp_seen;
  for (int v = 0; v < g.n(); ++v) {
    Bits cross = g.neighbors(v);
    if (side.test(v)) {
      Bits outside = cross;
      outside.subtract(side);
      if (!outside.any()) continue;
      view.side_relevant.push_back(v);
      if (side_seen.insert(outside).second) view.side_reps.push_back(v);
    } else {
      cross &= side;
      if (!cross.any()) continue;
      view.comp_positions.push_back(v);
      if (comp_seen.insert(cross).second) view.comp_reps.push_back(v);
    }
  }
  return view;
}

void check_cap(const CutView& view, int cap) {
  int relevant = static_cast<int>(view.side_reps.size() + view.comp_reps.size());
  if (relevant > cap)
    throw Error(ErrorKind::size_cap, "cut has " + std::to_string(relevant) +
                                         " relevant vertices after twin reduction, cap is " +
                                         std::to_string(cap));
}

}  // namespace

int cut_mim_exact(const SimpleGraph& g, const Bits& side, int cap) {
  CutView view = make_cut_view(g, side);
  check_cap(view, cap);

  struct CutEdge {
    int a;  // side vertex
    int b;  // complement vertex
  };
  std::vector<CutEdge> edges;
  for (int a : view.side_reps)
    for (int b : view.comp_reps)
      if (g.adjacent(a, b)) edges.push_back({a, b});
  const int m = static_cast<int>(edges.size());
  if (m == 0) return 0;

  // Two cut edges are compatible iff they share no endpoint and neither
  // endpoint sees the other edge across the cut.
  std::vector<Bits> conflict(m, Bits(m));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      bool clash = edges[i].a == edges[j].a || edges[i].b == edges[j].b ||
                   g.adjacent(edges[i].a, edges[j].b) || g.adjacent(edges[j].a, edges[i].b);
      if (clash) {
        conflict[i].set(j);
        conflict[j].set(i);
      }
    }

  int best = 0;
  Bits all(m);
  for (int i = 0; i < m; ++i) all.set(i);
  std::function<void(Bits, int)> search = [&](Bits avail, int chosen) {
    if (chosen > best) best = chosen;
    if (chosen + avail.count() <= best) return;
    int pick = -1;
    avail.for_each([&](int i) {
      if (pick < 0) pick = i;
    });
    if (pick < 0) return;
    Bits with = avail;
    with.reset(pick);
    with.subtract(conflict[pick]);
    search(with, chosen + 1);
    Bits without = avail;
    without.reset(pick);
    search(without, chosen);
  };
  search(all, 0);
  return best;
}

int64_t cut_nec(const SimpleGraph& g, const Bits& side, int d, int cap) {
  if (d < 1) throw Error(ErrorKind::parameter, "nec needs d >= 1");
  CutView view = make_cut_view(g, side);
  check_cap(view, cap);

  const int positions = static_cast<int>(view.comp_positions.size());
  std::vector<std::vector<uint8_t>> classes = {std::vector<uint8_t>(positions, 0)};
  std::set<std::vector<uint8_t>> seen(classes.begin(), classes.end());

  // Fold each side vertex in exactly once: after step i the class list holds
  // precisely the capped vectors achievable by subsets of the first i
  // vertices, which keeps the count exact.
  for (int u : view.side_relevant) {
    std::vector<uint8_t> inc(positions, 0);
    for (int p = 0; p < positions; ++p)
      if (g.adjacent(u, view.comp_positions[p])) inc[p] = 1;
    size_t snapshot = classes.size();
    for (size_t c = 0; c < snapshot; ++c) {
      std::vector<uint8_t> next = classes[c];
      for (int p = 0; p < positions; ++p)
        next[p] = static_cast<uint8_t>(std::min(d, next[p] + inc[p]));
      if (seen.insert(next).second) classes.push_back(std::move(next));
    }
  }
  return static_cast<int64_t>(classes.size());
}

int64_t saturating_pow(int64_t base, int exponent) {
  int64_t out = 1;
  for (int i = 0; i < exponent; ++i) {
    if (out > std::numeric_limits<int64_t>::max() / std::max<int64_t>(base, 1))
      return std::numeric_limits<int64_t>::max();
    out *= base;
  }
  return out;
}

DecompositionReport decomposition_report(const HRepresentation& rep, const Decomposition& dec,
                                         const std::vector<int>& nec_ds, int cap, int threads) {
  SimpleGraph g = build_intersection_graph(rep);
  DecompositionReport report;
  report.n = g.n();
  report.h_edges = rep.h_edge_count();
  const int64_t n = report.n;
  const int mim_bound = 2 * report.h_edges;

  std::vector<int> ds = nec_ds;
  if (std::find(ds.begin(), ds.end(), 1) == ds.end()) ds.insert(ds.begin(), 1);
  std::sort(ds.begin(), ds.end());

  std::vector<std::vector<int>> cuts = dec.cuts();
  report.rows = parallel_map<CutRow>(cuts.size(), threads, [&](size_t w) {
    CutRow row;
    row.node_id = dec.tree[w].id;
    row.cut_size = static_cast<int>(cuts[w].size());
    Bits side(g.n());
    for (int v : cuts[w]) side.set(v);
    Bits comp(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (!side.test(v)) comp.set(v);
    try {
      row.mim = cut_mim_exact(g, side, cap);
      for (int d : ds) {
        row.nec_side[d] = cut_nec(g, side, d, cap);
        row.nec_complement[d] = cut_nec(g, comp, d, cap);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::size_cap) throw;
      row.verified = false;
      return row;
    }
    row.boolw_cut = std::log2(static_cast<double>(row.nec_side.at(1)));
    row.mim_ok = row.mim <= mim_bound;
    row.nec_ok = true;
    for (int d : ds) {
      int64_t mim_power_bound = saturating_pow(n, d * row.mim);
      int64_t h_power_bound = saturating_pow(n, d * mim_bound);
      for (int64_t value : {row.nec_side.at(d), row.nec_complement.at(d)})
        row.nec_ok = row.nec_ok && value <= mim_power_bound && value <= h_power_bound;
    }
    row.boolw_ok = row.nec_side.at(1) <= saturating_pow(n, mim_bound);
    return row;
  });

  for (const CutRow& row : report.rows) {
    if (!row.verified) {
      report.all_verified = false;
      continue;
    }
    report.global_mim = std::max(report.global_mim, row.mim);
    report.global_boolw = std::max(report.global_boolw, row.boolw_cut);
    report.mim_bound_ok = report.mim_bound_ok && row.mim_ok;
    report.nec_bound_ok = report.nec_bound_ok && row.nec_ok;
    report.boolw_bound_ok = report.boolw_bound_ok && row.boolw_ok;
  }
  return report;
}

}  // namespace hgraph
