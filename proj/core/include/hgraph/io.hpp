#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hgraph/representation.hpp"

namespace hgraph::io {

// Line-oriented representation format. '#' starts a comment, blank lines are
// ignored. Directives:
//   hgraph <name>
//   node <id>
//   edge <edge-id> <u> <v> <sub_count>
//   vertex <vertex-id> <node> ...
// where <node> is a branching id or e:<edge-id>:<pos>.
struct HgrFile {
  std::string name;
  HRepresentation rep;
};

HgrFile read_hgr(std::istream& in, const std::string& filename);
HgrFile read_hgr_file(const std::string& path);
// Byte-deterministic: sections sorted by id, model nodes in index order.
void write_hgr(std::ostream& out, const HRepresentation& rep, const std::string& name);
void write_hgr_file(const std::string& path, const HRepresentation& rep, const std::string& name);

// Simple-graph format: "p <n> <m>" followed by "e <u> <v>" lines, vertices
// 1-based. Written edges are sorted; vertex k maps to the k-th id in sorted
// order on write and to the literal id "<k>" on read.
SimpleGraph read_gr(std::istream& in, const std::string& filename);
SimpleGraph read_gr_file(const std::string& path);
void write_gr(std::ostream& out, const SimpleGraph& g);
void write_gr_file(const std::string& path, const SimpleGraph& g);

// Vertex-class file for the multicolored problems: "part <i> <v> ..." with
// 1-based part indices over the ids of an accompanying .gr graph.
std::vector<std::vector<std::string>> read_parts(std::istream& in, const std::string& filename);
std::vector<std::vector<std::string>> read_parts_file(const std::string& path);

}  // namespace hgraph::io
