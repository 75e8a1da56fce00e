#pragma once

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hgraph/io.hpp"
#include "hgraph/representation.hpp"

namespace test_helpers {

inline hgraph::HRepresentation rep_from_hgr(const std::string& text) {
  std::istringstream in(text);
  return hgraph::io::read_hgr(in, "<inline>").rep;
}

inline hgraph::SimpleGraph graph_from_gr(const std::string& text) {
  std::istringstream in(text);
  return hgraph::io::read_gr(in, "<inline>");
}

inline std::vector<std::string> names_of(const hgraph::SimpleGraph& g,
                                         const std::vector<int>& vertices) {
  std::vector<std::string> out;
  for (int v : vertices) out.push_back(g.id(v));
  return out;
}

inline bool is_dominating(const hgraph::SimpleGraph& g, const std::vector<int>& set) {
  hgraph::Bits covered(g.n());
  for (int v : set) {
    covered.set(v);
    covered |= g.neighbors(v);
  }
  return covered.count() == g.n();
}

inline bool is_clique(const hgraph::SimpleGraph& g, const std::vector<int>& set) {
  for (size_t i = 0; i < set.size(); ++i)
    for (size_t j = i + 1; j < set.size(); ++j)
      if (!g.adjacent(set[i], set[j])) return false;
  return true;
}

}  // namespace test_helpers
