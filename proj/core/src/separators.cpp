#include "hgraph/separators.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>

#include "hgraph/decomposition.hpp"
#include "hgraph/errors.hpp"

namespace hgraph {

bool is_minimal_separator(const SimpleGraph& g, const Bits& x) {
  int full = 0;
  Bits seen = x;
  for (int s = 0; s < g.n(); ++s) {
    if (seen.test(s)) continue;
    Bits comp(g.n());
    std::queue<int> q;
    q.push(s);
    seen.set(s);
    comp.set(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      g.neighbors(v).for_each([&](int w) {
        if (!seen.test(w)) {
          seen.set(w);
          comp.set(w);
          q.push(w);
        }
      });
    }
    Bits boundary(g.n());
    comp.for_each([&](int v) { boundary |= g.neighbors(v); });
    boundary.subtract(comp);
    if (boundary == x) ++full;
  }
  return full >= 2;
}

SeparatorSet minimal_separators_oracle(const SimpleGraph& g, int cap) {
  if (g.n() > cap)
    throw Error(ErrorKind::size_cap, "separator oracle cap " + std::to_string(cap) +
                                         " exceeded by n=" + std::to_string(g.n()));
  if (g.n() > 30)
    throw Error(ErrorKind::size_cap, "separator oracle supports at most 30 vertices");
  SeparatorSet out;
  const int n = g.n();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    Bits x(n);
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1) x.set(v);
    if (is_minimal_separator(g, x)) out.separators.insert(x.to_vector());
  }
  return out;
}

std::vector<BorderCandidate> hgraph_separator_candidates(const HRepresentation& rep) {
  require_valid(rep);
  const Subdivision& sub = rep.subdivision();
  const int n = rep.vertex_count();

  // Border edges per path, plus the vertex set selected by each edge.
  struct PathEdges {
    std::vector<std::pair<int, int>> border;  // R ∩ E(P_e)
    std::vector<Bits> selected;               // V_s for each border edge
  };
  std::vector<PathEdges> paths(sub.base().edge_count());
  for (int e = 0; e < sub.base().edge_count(); ++e) {
    const std::vector<int>& nodes = sub.path_nodes(e);
    for (size_t i = 0; i + 1 < nodes.size(); ++i) {
      auto [a, b] = std::minmax(nodes[i], nodes[i + 1]);
      bool is_border = false;
      Bits selected(n);
      for (int v = 0; v < n; ++v) {
        bool in_a = rep.model(v).test(a), in_b = rep.model(v).test(b);
        if (in_a != in_b) is_border = true;
        if (in_a && in_b) selected.set(v);
      }
      if (is_border) {
        paths[e].border.emplace_back(a, b);
        paths[e].selected.push_back(std::move(selected));
      }
    }
  }

  std::vector<BorderCandidate> out;
  auto emit = [&](std::vector<std::pair<int, int>> edges, std::vector<int> base, const Bits& vs) {
    out.push_back({std::move(edges), std::move(base), vs.to_vector()});
  };

  // Shape 1: at most one border edge per path, product over paths.
  std::vector<std::pair<int, int>> chosen;
  std::vector<int> chosen_base;
  Bits acc(n);
  std::function<void(size_t)> product = [&](size_t e) {
    if (e == paths.size()) {
      emit(chosen, chosen_base, acc);
      return;
    }
    product(e + 1);  // no edge from this path
    for (size_t i = 0; i < paths[e].border.size(); ++i) {
      chosen.push_back(paths[e].border[i]);
      chosen_base.push_back(static_cast<int>(e));
      Bits saved = acc;
      acc |= paths[e].selected[i];
      product(e + 1);
      acc = saved;
      chosen.pop_back();
      chosen_base.pop_back();
    }
  };
  product(0);

  // Shape 2: exactly two border edges on a single path.
  for (size_t e = 0; e < paths.size(); ++e) {
    const PathEdges& pe = paths[e];
    for (size_t i = 0; i < pe.border.size(); ++i)
      for (size_t j = i + 1; j < pe.border.size(); ++j) {
        Bits vs = pe.selected[i];
        vs |= pe.selected[j];
        emit({pe.border[i], pe.border[j]}, {static_cast<int>(e), static_cast<int>(e)}, vs);
      }
  }
  return out;
}

SeparatorSet hgraph_minimal_separators(const HRepresentation& rep, int cap) {
  SimpleGraph g = build_intersection_graph(rep);
  if (g.n() > cap)
    throw Error(ErrorKind::size_cap, "full-component filter cap " + std::to_string(cap) +
                                         " exceeded by n=" + std::to_string(g.n()));
  std::set<std::vector<int>> distinct;
  for (const BorderCandidate& cand : hgraph_separator_candidates(rep))
    distinct.insert(cand.vertex_set);

  SeparatorSet out;
  for (const std::vector<int>& vs : distinct) {
    Bits x(g.n());
    for (int v : vs) x.set(v);
    if (is_minimal_separator(g, x)) out.separators.insert(vs);
  }
  return out;
}

int64_t separator_count_bound(int n, int h_edges) {
  int64_t product = saturating_pow(2 * static_cast<int64_t>(n) + 1, h_edges);
  int64_t pairs = static_cast<int64_t>(h_edges) * (2 * static_cast<int64_t>(n)) *
                  (2 * static_cast<int64_t>(n));
  if (product > std::numeric_limits<int64_t>::max() - pairs)
    return std::numeric_limits<int64_t>::max();
  return product + pairs;
}

}  // namespace hgraph
