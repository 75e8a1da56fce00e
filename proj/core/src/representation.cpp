#include "hgraph/representation.hpp"

#include <algorithm>
#include <queue>

#include "hgraph/errors.hpp"

namespace hgraph {

SimpleGraph::SimpleGraph(std::vector<std::string> vertex_ids) : ids_(std::move(vertex_ids)) {
  std::sort(ids_.begin(), ids_.end());
  if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
    throw Error(ErrorKind::validation, "duplicate vertex id");
  for (const std::string& id : ids_) MultiGraph::check_id(id);
  adj_.assign(ids_.size(), Bits(static_cast<int>(ids_.size())));
}

int SimpleGraph::m() const {
  int twice = 0;
  for (const Bits& b : adj_) twice += b.count();
  return twice / 2;
}

int SimpleGraph::index_of(const std::string& id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id) return -1;
  return static_cast<int>(it - ids_.begin());
}

void SimpleGraph::add_edge(int u, int v) {
  if (u == v) throw Error(ErrorKind::validation, "self-loop at vertex '" + ids_[u] + "'");
  adj_[u].set(v);
  adj_[v].set(u);
}

Bits SimpleGraph::closed_neighborhood(int v) const {
  Bits b = adj_[v];
  b.set(v);
  return b;
}

std::vector<std::pair<int, int>> SimpleGraph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  for (int u = 0; u < n(); ++u)
    adj_[u].for_each([&](int v) {
      if (u < v) out.emplace_back(u, v);
    });
  return out;
}

std::vector<std::vector<int>> SimpleGraph::components() const {
  std::vector<std::vector<int>> comps;
  std::vector<char> seen(n(), 0);
  for (int s = 0; s < n(); ++s) {
    if (seen[s]) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      comp.push_back(v);
      adj_[v].for_each([&](int w) {
        if (!seen[w]) {
          seen[w] = 1;
          q.push(w);
        }
      });
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool SimpleGraph::is_connected() const { return n() <= 1 || components().size() == 1; }

SimpleGraph SimpleGraph::induced(const std::vector<int>& vertices) const {
  std::vector<std::string> ids;
  ids.reserve(vertices.size());
  for (int v : vertices) ids.push_back(ids_[v]);
  SimpleGraph g(std::move(ids));
  for (size_t i = 0; i < vertices.size(); ++i)
    for (size_t j = i + 1; j < vertices.size(); ++j)
      if (adjacent(vertices[i], vertices[j]))
        g.add_edge(g.index_of(ids_[vertices[i]]), g.index_of(ids_[vertices[j]]));
  return g;
}

HRepresentation::HRepresentation(Subdivision subdivision,
                                 std::vector<std::pair<std::string, std::vector<int>>> models)
    : sub_(std::move(subdivision)) {
  std::sort(models.begin(), models.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (size_t i = 0; i + 1 < models.size(); ++i)
    if (models[i].first == models[i + 1].first)
      throw Error(ErrorKind::validation, "duplicate vertex id '" + models[i].first + "'");
  for (auto& [id, nodes] : models) {
    MultiGraph::check_id(id);
    vertex_ids_.push_back(id);
    Model m(sub_.node_count());
    for (int node : nodes) {
      if (node < 0 || node >= sub_.node_count())
        throw Error(ErrorKind::validation,
                    "model of vertex '" + id + "' references unknown node");
      m.set(node);
    }
    models_.push_back(std::move(m));
  }
}

int HRepresentation::vertex_index(const std::string& id) const {
  auto it = std::lower_bound(vertex_ids_.begin(), vertex_ids_.end(), id);
  if (it == vertex_ids_.end() || *it != id) return -1;
  return static_cast<int>(it - vertex_ids_.begin());
}

namespace {

bool model_connected(const Subdivision& sub, const Model& m) {
  int start = -1;
  m.for_each([&](int i) {
    if (start < 0) start = i;
  });
  if (start < 0) return true;
  Bits seen(sub.node_count());
  std::queue<int> q;
  q.push(start);
  seen.set(start);
  int visited = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : sub.neighbors(v))
      if (m.test(w) && !seen.test(w)) {
        seen.set(w);
        ++visited;
        q.push(w);
      }
  }
  return visited == m.count();
}

}  // namespace

std::vector<Violation> validate_representation(const HRepresentation& rep) {
  std::vector<Violation> out;
  for (int v = 0; v < rep.vertex_count(); ++v) {
    const Model& m = rep.model(v);
    if (!m.any()) {
      out.push_back({rep.vertex_id(v), "empty model"});
      continue;
    }
    if (!model_connected(rep.subdivision(), m))
      out.push_back({rep.vertex_id(v), "disconnected model"});
  }
  return out;
}

void require_valid(const HRepresentation& rep) {
  std::vector<Violation> violations = validate_representation(rep);
  if (!violations.empty())
    throw Error(ErrorKind::validation,
                "invalid representation: vertex '" + violations.front().vertex + "': " +
                    violations.front().message);
}

SimpleGraph build_intersection_graph(const HRepresentation& rep) {
  require_valid(rep);
  SimpleGraph g(rep.vertex_ids());
  for (int u = 0; u < rep.vertex_count(); ++u)
    for (int v = u + 1; v < rep.vertex_count(); ++v)
      if (rep.model(u).intersects(rep.model(v))) g.add_edge(u, v);
  return g;
}

Classification classify_vertex(const HRepresentation& rep, int v) {
  const Subdivision& sub = rep.subdivision();
  Classification c;
  rep.model(v).for_each([&](int node) {
    if (sub.is_branching(node)) c.u_set.push_back(sub.node_name(node));
  });
  if (!c.u_set.empty()) return c;  // names come out sorted: branching indices are name-ordered
  c.is_e_vertex = true;
  int edge = -1;
  rep.model(v).for_each([&](int node) {
    if (edge < 0) edge = sub.node(node).edge;
  });
  if (edge >= 0) c.edge_id = sub.base().edges()[edge].id;
  return c;
}

std::vector<Classification> classify_all(const HRepresentation& rep) {
  std::vector<Classification> out;
  out.reserve(rep.vertex_count());
  for (int v = 0; v < rep.vertex_count(); ++v) out.push_back(classify_vertex(rep, v));
  return out;
}

}  // namespace hgraph
