#include <doctest.h>

#include <map>

#include "hgraph/errors.hpp"
#include "hgraph/generators.hpp"
#include "hgraph/representation.hpp"
#include "helpers.hpp"

using namespace hgraph;
using test_helpers::rep_from_hgr;

TEST_CASE("subdivided edge yields a path graph") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 2
vertex u a e:e1:1
vertex v e:e1:1 e:e1:2
vertex w e:e1:2 b
)");
  SimpleGraph g = build_intersection_graph(rep);
  CHECK(g.n() == 3);
  CHECK(g.m() == 2);
  CHECK(g.adjacent(g.index_of("u"), g.index_of("v")));
  CHECK(g.adjacent(g.index_of("v"), g.index_of("w")));
  CHECK_FALSE(g.adjacent(g.index_of("u"), g.index_of("w")));
}

TEST_CASE("identical singleton models intersect") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 0
vertex u a
vertex v a
)");
  SimpleGraph g = build_intersection_graph(rep);
  CHECK(g.m() == 1);
  CHECK(g.adjacent(0, 1));
}

TEST_CASE("disjoint models on parallel edges give an edgeless graph") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge m1 a b 1
edge m2 a b 1
vertex u e:m1:1
vertex v e:m2:1
)");
  SimpleGraph g = build_intersection_graph(rep);
  CHECK(g.n() == 2);
  CHECK(g.m() == 0);
}

TEST_CASE("validation reports empty and disconnected models as data") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 1
vertex bad a b
vertex empty
vertex ok e:e1:1
)");
  std::vector<Violation> violations = validate_representation(rep);
  REQUIRE(violations.size() == 2);
  std::map<std::string, std::string> by_vertex;
  for (const Violation& v : violations) by_vertex[v.vertex] = v.message;
  CHECK(by_vertex.at("bad") == "disconnected model");
  CHECK(by_vertex.at("empty") == "empty model");

  CHECK_THROWS_AS(build_intersection_graph(rep), Error);
  try {
    build_intersection_graph(rep);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::validation);
    CHECK(std::string(e.what()).find("bad") != std::string::npos);
  }
}

TEST_CASE("all-singleton models validate cleanly") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 2
vertex u a
vertex v e:e1:2
)");
  CHECK(validate_representation(rep).empty());
}

TEST_CASE("vertex classification") {
  HRepresentation rep = rep_from_hgr(R"(
hgraph t
node a
node b
edge e1 a b 3
vertex interior e:e1:1 e:e1:2
vertex anchored a e:e1:1
vertex spanning a e:e1:1 e:e1:2 e:e1:3 b
)");
  Classification interior = classify_vertex(rep, rep.vertex_index("interior"));
  CHECK(interior.is_e_vertex);
  CHECK(interior.edge_id == "e1");

  Classification anchored = classify_vertex(rep, rep.vertex_index("anchored"));
  CHECK_FALSE(anchored.is_e_vertex);
  CHECK(anchored.u_set == std::vector<std::string>{"a"});

  Classification spanning = classify_vertex(rep, rep.vertex_index("spanning"));
  CHECK(spanning.u_set == std::vector<std::string>{"a", "b"});
}

TEST_CASE("classification partitions the vertex set on random representations") {
  for (uint64_t seed : {1u, 2u, 3u, 4u}) {
    HRepresentation rep =
        gen::random_hgraph(gen::preset_multigraph("theta3"), 10, seed);
    for (int v = 0; v < rep.vertex_count(); ++v) {
      Classification c = classify_vertex(rep, v);
      if (c.is_e_vertex) {
        CHECK(c.u_set.empty());
        CHECK_FALSE(c.edge_id.empty());
      } else {
        CHECK_FALSE(c.u_set.empty());
      }
    }
  }
}

TEST_CASE("adjacency equals model intersection and the graph is symmetric") {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("k13"), 9, 99);
  SimpleGraph g = build_intersection_graph(rep);
  for (int u = 0; u < g.n(); ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (int v = 0; v < g.n(); ++v) {
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      if (u != v) CHECK(g.adjacent(u, v) == rep.model(u).intersects(rep.model(v)));
    }
  }
}

TEST_CASE("subdividing every edge once more preserves the intersection graph") {
  HRepresentation rep = gen::random_hgraph(gen::preset_multigraph("p3"), 8, 7);
  const Subdivision& sub = rep.subdivision();

  // Lift: every edge's sub_count doubles plus one; node (e, p) maps to
  // (e, 2p), branching nodes stay, and each used edge segment gains its
  // midpoint so models remain connected.
  std::map<std::string, int> counts;
  for (int e = 0; e < sub.base().edge_count(); ++e)
    counts[sub.base().edges()[e].id] = 2 * sub.sub_count(e) + 1;
  Subdivision lifted(sub.base(), counts);

  auto lift_node = [&](int node) {
    const SubdivisionNode& n = sub.node(node);
    if (n.is_branching()) return lifted.branch_node(sub.base().nodes()[n.branch]);
    return lifted.subdivision_node(n.edge, 2 * n.pos);
  };
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (int v = 0; v < rep.vertex_count(); ++v) {
    std::set<int> nodes;
    rep.model(v).for_each([&](int node) { nodes.insert(lift_node(node)); });
    // Add midpoints of used segments.
    for (int e = 0; e < sub.base().edge_count(); ++e) {
      const std::vector<int>& path = sub.path_nodes(e);
      for (size_t i = 0; i + 1 < path.size(); ++i) {
        if (!rep.model(v).test(path[i]) || !rep.model(v).test(path[i + 1])) continue;
        int lo = lift_node(path[i]), hi = lift_node(path[i + 1]);
        const std::vector<int>& lifted_path =
            lifted.path_nodes(lifted.base().edge_index(sub.base().edges()[e].id));
        for (size_t j = 0; j + 2 < lifted_path.size(); ++j)
          if ((lifted_path[j] == lo && lifted_path[j + 2] == hi) ||
              (lifted_path[j] == hi && lifted_path[j + 2] == lo))
            nodes.insert(lifted_path[j + 1]);
      }
    }
    models.emplace_back(rep.vertex_id(v), std::vector<int>(nodes.begin(), nodes.end()));
  }
  HRepresentation lifted_rep(lifted, models);
  CHECK(validate_representation(lifted_rep).empty());

  SimpleGraph before = build_intersection_graph(rep);
  SimpleGraph after = build_intersection_graph(lifted_rep);
  REQUIRE(before.n() == after.n());
  for (int u = 0; u < before.n(); ++u)
    for (int v = u + 1; v < before.n(); ++v)
      CHECK(before.adjacent(u, v) == after.adjacent(u, v));
}
