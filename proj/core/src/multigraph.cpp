#include "hgraph/multigraph.hpp"

#include <algorithm>
#include <cctype>
#include <queue>

namespace hgraph {

void MultiGraph::check_id(const std::string& id) {
  if (id.empty()) throw Error(ErrorKind::validation, "empty id");
  for (char c : id) {
    if (c == ':' || std::isspace(static_cast<unsigned char>(c)))
      throw Error(ErrorKind::validation, "id '" + id + "' contains ':' or whitespace");
  }
}

void MultiGraph::add_node(const std::string& id) {
  check_id(id);
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it != nodes_.end() && *it == id)
    throw Error(ErrorKind::validation, "duplicate node '" + id + "'");
  nodes_.insert(it, id);
}

void MultiGraph::add_edge(const std::string& id, const std::string& a, const std::string& b) {
  check_id(id);
  if (a == b) throw Error(ErrorKind::validation, "loop edge '" + id + "' at node '" + a + "'");
  if (!has_node(a)) throw Error(ErrorKind::validation, "edge '" + id + "' references unknown node '" + a + "'");
  if (!has_node(b)) throw Error(ErrorKind::validation, "edge '" + id + "' references unknown node '" + b + "'");
  Edge e{id, a, b};
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& x, const std::string& y) { return x.id < y; });
  if (it != edges_.end() && it->id == id)
    throw Error(ErrorKind::validation, "duplicate edge id '" + id + "'");
  edges_.insert(it, std::move(e));
}

bool MultiGraph::has_node(const std::string& id) const { return node_index(id) >= 0; }

int MultiGraph::node_index(const std::string& id) const {
  auto it = std::lower_bound(nodes_.begin(), nodes_.end(), id);
  if (it == nodes_.end() || *it != id) return -1;
  return static_cast<int>(it - nodes_.begin());
}

int MultiGraph::edge_index(const std::string& id) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                             [](const Edge& x, const std::string& y) { return x.id < y; });
  if (it == edges_.end() || it->id != id) return -1;
  return static_cast<int>(it - edges_.begin());
}

int MultiGraph::degree(const std::string& node) const {
  int d = 0;
  for (const Edge& e : edges_) d += (e.a == node) + (e.b == node);
  return d;
}

bool MultiGraph::is_connected() const {
  if (nodes_.empty()) return true;
  std::vector<std::vector<int>> adj(nodes_.size());
  for (const Edge& e : edges_) {
    int a = node_index(e.a), b = node_index(e.b);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(nodes_.size(), 0);
  std::queue<int> q;
  q.push(0);
  seen[0] = 1;
  int visited = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++visited;
        q.push(w);
      }
  }
  return visited == node_count();
}

bool MultiGraph::is_tree() const {
  if (edge_count() != node_count() - 1) return false;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const Edge& e : edges_) pairs.push_back(std::minmax(e.a, e.b));
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return false;
  return is_connected();
}

Subdivision::Subdivision(MultiGraph base, std::map<std::string, int> sub_count)
    : base_(std::move(base)) {
  counts_.assign(base_.edge_count(), 0);
  for (const auto& [id, c] : sub_count) {
    int e = base_.edge_index(id);
    if (e < 0) throw Error(ErrorKind::validation, "sub_count references unknown edge '" + id + "'");
    if (c < 0) throw Error(ErrorKind::validation, "negative sub_count on edge '" + id + "'");
    counts_[e] = c;
  }

  for (int i = 0; i < base_.node_count(); ++i) nodes_.push_back(SubdivisionNode{i, -1, 0});
  sub_first_.assign(base_.edge_count(), -1);
  for (int e = 0; e < base_.edge_count(); ++e) {
    sub_first_[e] = node_count();
    for (int p = 1; p <= counts_[e]; ++p) nodes_.push_back(SubdivisionNode{-1, e, p});
  }

  adj_.assign(node_count(), {});
  paths_.assign(base_.edge_count(), {});
  for (int e = 0; e < base_.edge_count(); ++e) {
    const auto& edge = base_.edges()[e];
    const std::string& lo = std::min(edge.a, edge.b);
    const std::string& hi = std::max(edge.a, edge.b);
    std::vector<int>& path = paths_[e];
    path.push_back(base_.node_index(lo));
    for (int p = 1; p <= counts_[e]; ++p) path.push_back(sub_first_[e] + p - 1);
    path.push_back(base_.node_index(hi));
    for (size_t i = 0; i + 1 < path.size(); ++i) {
      adj_[path[i]].push_back(path[i + 1]);
      adj_[path[i + 1]].push_back(path[i]);
    }
  }
}

int Subdivision::branch_node(const std::string& name) const { return base_.node_index(name); }

int Subdivision::subdivision_node(int edge_index, int pos) const {
  if (edge_index < 0 || edge_index >= base_.edge_count()) return -1;
  if (pos < 1 || pos > counts_[edge_index]) return -1;
  return sub_first_[edge_index] + pos - 1;
}

std::string Subdivision::node_name(int i) const {
  const SubdivisionNode& n = nodes_[i];
  if (n.is_branching()) return base_.nodes()[n.branch];
  return "e:" + base_.edges()[n.edge].id + ":" + std::to_string(n.pos);
}

int Subdivision::parse_node(const std::string& token) const {
  if (token.rfind("e:", 0) == 0) {
    size_t colon = token.rfind(':');
    if (colon == 1) return -1;
    std::string edge_id = token.substr(2, colon - 2);
    int pos = 0;
    try {
      size_t used = 0;
      pos = std::stoi(token.substr(colon + 1), &used);
      if (used != token.size() - colon - 1) return -1;
    } catch (const std::exception&) {
      return -1;
    }
    return subdivision_node(base_.edge_index(edge_id), pos);
  }
  return branch_node(token);
}

std::vector<int> Subdivision::path_from(int edge_index, int endpoint_node) const {
  std::vector<int> path = paths_[edge_index];
  if (path.front() != endpoint_node) std::reverse(path.begin(), path.end());
  if (path.front() != endpoint_node)
    throw Error(ErrorKind::parameter, "node is not an endpoint of the edge path");
  return path;
}

std::vector<int> Subdivision::distances_from(int source) const {
  std::vector<int> dist(node_count(), -1);
  std::queue<int> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : adj_[v])
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<std::pair<int, int>> Subdivision::realized_edges() const {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < base_.edge_count(); ++e) {
    const std::vector<int>& path = paths_[e];
    for (size_t i = 0; i + 1 < path.size(); ++i)
      out.push_back(std::minmax(path[i], path[i + 1]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hgraph
