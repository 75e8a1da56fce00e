#include "hgraph/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "hgraph/errors.hpp"

namespace hgraph::io {

namespace {

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream iss(line);
  std::string tok;
  while (iss >> tok) {
    if (tok[0] == '#') break;
    tokens.push_back(tok);
  }
  return tokens;
}

int parse_int(const std::string& tok, const std::string& file, int line) {
  try {
    size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError(file, line, "expected integer, got '" + tok + "'");
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::parse, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorKind::parse, "cannot write '" + path + "'");
  return out;
}

}  // namespace

HgrFile read_hgr(std::istream& in, const std::string& filename) {
  MultiGraph base;
  std::map<std::string, int> counts;
  std::string name = "hgraph";
  struct PendingVertex {
    std::string id;
    std::vector<std::string> node_tokens;
    int line;
  };
  std::vector<PendingVertex> pending;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    try {
      if (tok[0] == "hgraph") {
        if (tok.size() != 2) throw ParseError(filename, lineno, "hgraph takes one argument");
        name = tok[1];
      } else if (tok[0] == "node") {
        if (tok.size() != 2) throw ParseError(filename, lineno, "node takes one argument");
        base.add_node(tok[1]);
      } else if (tok[0] == "edge") {
        if (tok.size() != 5)
          throw ParseError(filename, lineno, "edge takes <id> <u> <v> <sub_count>");
        int c = parse_int(tok[4], filename, lineno);
        if (c < 0) throw ParseError(filename, lineno, "negative sub_count");
        base.add_edge(tok[1], tok[2], tok[3]);
        counts[tok[1]] = c;
      } else if (tok[0] == "vertex") {
        if (tok.size() < 2) throw ParseError(filename, lineno, "vertex takes <id> <node> ...");
        pending.push_back({tok[1], {tok.begin() + 2, tok.end()}, lineno});
      } else {
        throw ParseError(filename, lineno, "unknown directive '" + tok[0] + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(filename, lineno, e.what());
    }
  }

  Subdivision sub(std::move(base), std::move(counts));
  std::vector<std::pair<std::string, std::vector<int>>> models;
  for (const PendingVertex& pv : pending) {
    std::vector<int> nodes;
    for (const std::string& t : pv.node_tokens) {
      int node = sub.parse_node(t);
      if (node < 0)
        throw ParseError(filename, pv.line, "vertex '" + pv.id + "' references unknown node '" + t + "'");
      nodes.push_back(node);
    }
    models.emplace_back(pv.id, std::move(nodes));
  }
  HgrFile out;
  out.name = name;
  try {
    out.rep = HRepresentation(std::move(sub), std::move(models));
  } catch (const Error& e) {
    throw ParseError(filename, lineno, e.what());
  }
  return out;
}

HgrFile read_hgr_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_hgr(in, path);
}

void write_hgr(std::ostream& out, const HRepresentation& rep, const std::string& name) {
  const Subdivision& sub = rep.subdivision();
  out << "hgraph " << name << "\n";
  for (const std::string& n : sub.base().nodes()) out << "node " << n << "\n";
  for (int e = 0; e < sub.base().edge_count(); ++e) {
    const MultiGraph::Edge& edge = sub.base().edges()[e];
    out << "edge " << edge.id << " " << edge.a << " " << edge.b << " " << sub.sub_count(e) << "\n";
  }
  for (int v = 0; v < rep.vertex_count(); ++v) {
    out << "vertex " << rep.vertex_id(v);
    rep.model(v).for_each([&](int node) { out << " " << sub.node_name(node); });
    out << "\n";
  }
}

void write_hgr_file(const std::string& path, const HRepresentation& rep, const std::string& name) {
  std::ofstream out = open_output(path);
  write_hgr(out, rep, name);
}

SimpleGraph read_gr(std::istream& in, const std::string& filename) {
  std::string line;
  int lineno = 0;
  int n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] == "p") {
      if (n >= 0) throw ParseError(filename, lineno, "duplicate p line");
      if (tok.size() != 3) throw ParseError(filename, lineno, "p takes <n> <m>");
      n = parse_int(tok[1], filename, lineno);
      m = parse_int(tok[2], filename, lineno);
      if (n < 0 || m < 0) throw ParseError(filename, lineno, "negative size on p line");
    } else if (tok[0] == "e") {
      if (n < 0) throw ParseError(filename, lineno, "e line before p line");
      if (tok.size() != 3) throw ParseError(filename, lineno, "e takes <u> <v>");
      int u = parse_int(tok[1], filename, lineno);
      int v = parse_int(tok[2], filename, lineno);
      if (u < 1 || u > n || v < 1 || v > n)
        throw ParseError(filename, lineno, "vertex out of range on e line");
      if (u == v) throw ParseError(filename, lineno, "self-loop on e line");
      edges.emplace_back(u, v);
    } else {
      throw ParseError(filename, lineno, "unknown directive '" + tok[0] + "'");
    }
  }
  if (n < 0) throw ParseError(filename, lineno, "missing p line");
  if (static_cast<int>(edges.size()) != m)
    throw ParseError(filename, lineno,
                     "edge count mismatch: p declares " + std::to_string(m) + ", found " +
                         std::to_string(edges.size()));
  std::vector<std::string> ids;
  ids.reserve(n);
  for (int i = 1; i <= n; ++i) ids.push_back(std::to_string(i));
  SimpleGraph g(std::move(ids));
  for (auto [u, v] : edges)
    g.add_edge(g.index_of(std::to_string(u)), g.index_of(std::to_string(v)));
  return g;
}

SimpleGraph read_gr_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_gr(in, path);
}

void write_gr(std::ostream& out, const SimpleGraph& g) {
  std::vector<std::pair<int, int>> edges = g.edge_list();
  out << "p " << g.n() << " " << edges.size() << "\n";
  for (auto [u, v] : edges) out << "e " << u + 1 << " " << v + 1 << "\n";
}

void write_gr_file(const std::string& path, const SimpleGraph& g) {
  std::ofstream out = open_output(path);
  write_gr(out, g);
}

std::vector<std::vector<std::string>> read_parts(std::istream& in, const std::string& filename) {
  std::map<int, std::vector<std::string>> parts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::vector<std::string> tok = tokenize(line);
    if (tok.empty()) continue;
    if (tok[0] != "part") throw ParseError(filename, lineno, "unknown directive '" + tok[0] + "'");
    if (tok.size() < 2) throw ParseError(filename, lineno, "part takes <i> <v> ...");
    int i = parse_int(tok[1], filename, lineno);
    if (i < 1) throw ParseError(filename, lineno, "part index must be >= 1");
    auto& bucket = parts[i];
    bucket.insert(bucket.end(), tok.begin() + 2, tok.end());
  }
  if (parts.empty()) throw ParseError(filename, lineno, "no part lines");
  int expected = 1;
  std::vector<std::vector<std::string>> out;
  for (auto& [i, vs] : parts) {
    if (i != expected)
      throw ParseError(filename, 0, "part indices must be contiguous from 1, missing part " +
                                        std::to_string(expected));
    ++expected;
    out.push_back(std::move(vs));
  }
  return out;
}

std::vector<std::vector<std::string>> read_parts_file(const std::string& path) {
  std::ifstream in = open_input(path);
  return read_parts(in, path);
}

}  // namespace hgraph::io
