#include <doctest.h>

#include <algorithm>

#include "hgraph/decomposition.hpp"
#include "hgraph/errors.hpp"
#include "hgraph/generators.hpp"
#include "hgraph/rng.hpp"
#include "helpers.hpp"

using namespace hgraph;
using test_helpers::rep_from_hgr;

namespace {

SimpleGraph random_graph(int n, double p, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("g" + std::to_string(100 + i));
  SimpleGraph g(ids);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

// Reference search: every subset of cut edges, checked directly.
int naive_mim(const SimpleGraph& g, const Bits& side) {
  std::vector<std::pair<int, int>> cut;
  for (auto [u, v] : g.edge_list()) {
    if (side.test(u) != side.test(v)) cut.emplace_back(side.test(u) ? u : v, side.test(u) ? v : u);
  }
  REQUIRE(cut.size() <= 20);
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << cut.size()); ++mask) {
    std::vector<int> picked;
    for (size_t i = 0; i < cut.size(); ++i)
      if (mask >> i & 1) picked.push_back(static_cast<int>(i));
    bool ok = true;
    for (size_t a = 0; a < picked.size() && ok; ++a)
      for (size_t b = a + 1; b < picked.size() && ok; ++b) {
        auto [xa, ya] = cut[picked[a]];
        auto [xb, yb] = cut[picked[b]];
        ok = xa != xb && ya != yb && !g.adjacent(xa, yb) && !g.adjacent(xb, ya);
      }
    if (ok) best = std::max<int>(best, picked.size());
  }
  return best;
}

// Reference count: every subset of the side, capped neighborhood vectors.
int64_t naive_nec(const SimpleGraph& g, const Bits& side, int d) {
  std::vector<int> members, outside;
  for (int v = 0; v < g.n(); ++v) (side.test(v) ? members : outside).push_back(v);
  REQUIRE(members.size() <= 14);
  std::set<std::vector<int>> classes;
  for (uint32_t mask = 0; mask < (uint32_t{1} << members.size()); ++mask) {
    std::vector<int> vec;
    for (int w : outside) {
      int count = 0;
      for (size_t i = 0; i < members.size(); ++i)
        if ((mask >> i & 1) && g.adjacent(members[i], w)) ++count;
      vec.push_back(std::min(d, count));
    }
    classes.insert(vec);
  }
  return static_cast<int64_t>(classes.size());
}

Bits side_of(const SimpleGraph& g, std::initializer_list<const char*> ids) {
  Bits b(g.n());
  for (const char* id : ids) b.set(g.index_of(id));
  return b;
}

const char* kIntervalPath = R"(
hgraph t
node a
node b
edge e1 a b 2
vertex u a e:e1:1
vertex v e:e1:1 e:e1:2
vertex w e:e1:2 b
)";

}  // namespace

TEST_CASE("caterpillar follows the distance ordering for the interval path") {
  HRepresentation rep = rep_from_hgr(kIntervalPath);
  Decomposition dec = caterpillar_decomposition(rep, "a");
  std::vector<std::string> order;
  for (int v : dec.order) order.push_back(rep.vertex_id(v));
  CHECK(order == std::vector<std::string>{"u", "v", "w"});
  // n = 3: one internal spine node with the three leaves attached.
  CHECK(dec.tree.size() == 4);
  int internal = 0;
  for (const auto& node : dec.tree)
    if (node.leaf_vertex < 0) ++internal;
  CHECK(internal == 1);
  // Every cut is a singleton or a prefix of the ordering.
  for (const auto& cut : dec.cuts()) {
    std::vector<int> prefix(dec.order.begin(), dec.order.begin() + cut.size());
    std::sort(prefix.begin(), prefix.end());
    CHECK((cut.size() == 1 || cut == prefix));
  }
}

TEST_CASE("two-vertex decomposition has the two-node tree") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 0
vertex u a
vertex v b
)");
  Decomposition dec = caterpillar_decomposition(rep);
  CHECK(dec.tree.size() == 2);
  CHECK(dec.order.size() == 2);
}

TEST_CASE("degenerate sizes are rejected") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 0
vertex u a
)");
  CHECK_THROWS_AS(caterpillar_decomposition(rep), Error);
  try {
    caterpillar_decomposition(rep);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::degenerate_size);
  }
}

TEST_CASE("internal tree nodes have degree three") {
  for (int n : {4, 7, 10}) {
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("p3"), n, 11 + n);
    Decomposition dec = caterpillar_decomposition(rep);
    std::vector<int> degree(dec.tree.size(), 0);
    for (size_t w = 0; w < dec.tree.size(); ++w) {
      degree[w] += dec.tree[w].children.size();
      if (dec.tree[w].parent >= 0) ++degree[w];
    }
    for (size_t w = 0; w < dec.tree.size(); ++w)
      if (dec.tree[w].leaf_vertex < 0) CHECK(degree[w] == 3);
  }
}

TEST_CASE("cut mim matches the stated examples") {
  HRepresentation rep = rep_from_hgr(kIntervalPath);
  SimpleGraph g = build_intersection_graph(rep);
  CHECK(cut_mim_exact(g, Bits(g.n())) == 0);
  CHECK(cut_mim_exact(g, side_of(g, {"u"})) == 1);

  // Complete bipartite cut: any two cut edges see each other.
  SimpleGraph k33 = random_graph(6, 0.0, 0);
  Bits side(6);
  for (int u = 0; u < 3; ++u) {
    side.set(u);
    for (int v = 3; v < 6; ++v) k33.add_edge(u, v);
  }
  CHECK(cut_mim_exact(k33, side) == 1);
}

TEST_CASE("cut mim equals naive enumeration on random cuts") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    SimpleGraph g = random_graph(8, 0.35, 1000 + trial);
    Bits side(g.n());
    for (int v = 0; v < g.n(); ++v)
      if (rng.chance(0.5)) side.set(v);
    int cut_edges = 0;
    for (auto [u, v] : g.edge_list())
      if (side.test(u) != side.test(v)) ++cut_edges;
    if (cut_edges > 12) continue;
    CHECK(cut_mim_exact(g, side) == naive_mim(g, side));
  }
}

TEST_CASE("cut nec matches the stated examples and the definition") {
  HRepresentation rep = rep_from_hgr(kIntervalPath);
  SimpleGraph g = build_intersection_graph(rep);
  CHECK(cut_nec(g, Bits(g.n()), 1) == 1);
  CHECK(cut_nec(g, side_of(g, {"u"}), 1) == 2);

  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    SimpleGraph rg = random_graph(9, 0.4, 2000 + trial);
    Bits side(rg.n());
    for (int v = 0; v < rg.n(); ++v)
      if (rng.chance(0.45)) side.set(v);
    for (int d : {1, 2, 3}) CHECK(cut_nec(rg, side, d) == naive_nec(rg, side, d));
  }
}

TEST_CASE("nec for d=1 counts distinct unions of cross neighborhoods") {
  for (int trial = 0; trial < 20; ++trial) {
    SimpleGraph g = random_graph(10, 0.3, 3000 + trial);
    Bits side(g.n());
    for (int v = 0; v < g.n() / 2; ++v) side.set(v);
    std::set<std::vector<int>> unions;
    std::vector<int> members;
    for (int v = 0; v < g.n(); ++v)
      if (side.test(v)) members.push_back(v);
    for (uint32_t mask = 1; mask < (uint32_t{1} << members.size()); ++mask) {
      Bits nb(g.n());
      for (size_t i = 0; i < members.size(); ++i)
        if (mask >> i & 1) nb |= g.neighbors(members[i]);
      nb.subtract(side);
      if (nb.any()) unions.insert(nb.to_vector());
    }
    CHECK(cut_nec(g, side, 1) == 1 + static_cast<int64_t>(unions.size()));
  }
}

TEST_CASE("mim is symmetric across the cut") {
  for (int trial = 0; trial < 20; ++trial) {
    SimpleGraph g = random_graph(9, 0.4, 4000 + trial);
    Bits side(g.n()), comp(g.n());
    Rng rng(trial);
    for (int v = 0; v < g.n(); ++v) (rng.chance(0.5) ? side : comp).set(v);
    CHECK(cut_mim_exact(g, side) == cut_mim_exact(g, comp));
  }
}

TEST_CASE("size cap raises a size_cap error") {
  SimpleGraph g = random_graph(12, 0.8, 77);
  Bits side(g.n());
  for (int v = 0; v < 6; ++v) side.set(v);
  CHECK_THROWS_AS(cut_mim_exact(g, side, 3), Error);
  try {
    cut_mim_exact(g, side, 3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::size_cap);
  }
}

TEST_CASE("every prefix cut admits a small equivalent subset (sampled)") {
  for (uint64_t seed : {21u, 22u, 23u}) {
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("theta2"), 9, seed);
    SimpleGraph g = build_intersection_graph(rep);
    Decomposition dec = caterpillar_decomposition(rep);
    const int bound = 2 * rep.h_edge_count();
    Rng rng(seed);
    for (int prefix = 1; prefix <= g.n(); ++prefix) {
      Bits cut(g.n());
      for (int i = 0; i < prefix; ++i) cut.set(dec.order[i]);
      for (int sample = 0; sample < 10; ++sample) {
        std::vector<int> s;
        for (int i = 0; i < prefix; ++i)
          if (rng.chance(0.5)) s.push_back(dec.order[i]);
        Bits target(g.n());
        for (int v : s) target |= g.neighbors(v);
        target.subtract(cut);
        // Search subsets of S of size at most 2||H|| for one with the same
        // outside neighborhood.
        bool found = false;
        std::function<void(size_t, std::vector<int>&)> rec = [&](size_t idx,
                                                                 std::vector<int>& chosen) {
          if (found) return;
          Bits nb(g.n());
          for (int v : chosen) nb |= g.neighbors(v);
          nb.subtract(cut);
          if (nb == target) {
            found = true;
            return;
          }
          if (idx == s.size() || static_cast<int>(chosen.size()) == bound) return;
          chosen.push_back(s[idx]);
          rec(idx + 1, chosen);
          chosen.pop_back();
          rec(idx + 1, chosen);
        };
        std::vector<int> chosen;
        rec(0, chosen);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("decomposition report flags hold on sample corpora") {
  for (const char* preset : {"p2", "theta2", "p3"}) {
    HRepresentation rep = gen::random_hgraph(gen::preset_multigraph(preset), 8, 31);
    Decomposition dec = caterpillar_decomposition(rep);
    DecompositionReport report = decomposition_report(rep, dec, {1, 2});
    CHECK(report.all_verified);
    CHECK(report.mim_bound_ok);
    CHECK(report.nec_bound_ok);
    CHECK(report.boolw_bound_ok);
    CHECK(report.global_mim <= 2 * rep.h_edge_count());
  }
}

TEST_CASE("isolated H nodes keep their cliques contiguous in the ordering") {
  // Two cliques on isolated branching nodes plus a path component: the mim
  // bound must survive even though the isolated cliques have no edge paths.
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
node z1
node z2
edge e1 a b 1
vertex p1 a e:e1:1
vertex p2 e:e1:1 b
vertex q1 z1
vertex q2 z1
vertex q3 z1
vertex s1 z2
vertex s2 z2
vertex s3 z2
)");
  Decomposition dec = caterpillar_decomposition(rep, "a");
  SimpleGraph g = build_intersection_graph(rep);
  DecompositionReport report = decomposition_report(rep, dec, {1});
  CHECK(report.all_verified);
  CHECK(report.global_mim <= 2 * rep.h_edge_count());
  CHECK(report.mim_bound_ok);
  (void)g;
}

TEST_CASE("edgeless intersection graphs have zero mim and unit nec everywhere") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge m1 a b 1
edge m2 a b 1
edge m3 a b 1
vertex u e:m1:1
vertex v e:m2:1
vertex w e:m3:1
)");
  SimpleGraph g = build_intersection_graph(rep);
  REQUIRE(g.m() == 0);
  Decomposition dec = caterpillar_decomposition(rep);
  DecompositionReport report = decomposition_report(rep, dec, {1});
  for (const CutRow& row : report.rows) {
    CHECK(row.mim == 0);
    CHECK(row.nec_side.at(1) == 1);
  }
}

TEST_CASE("report runs identically with multiple threads") {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("theta3"), 10, 55);
  Decomposition dec = caterpillar_decomposition(rep);
  DecompositionReport a = decomposition_report(rep, dec, {1, 2}, kDefaultCutCap, 1);
  DecompositionReport b = decomposition_report(rep, dec, {1, 2}, kDefaultCutCap, 4);
  REQUIRE(a.rows.size() == b.rows.size());
  for (size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].mim == b.rows[i].mim);
    CHECK(a.rows[i].nec_side == b.rows[i].nec_side);
  }
}
