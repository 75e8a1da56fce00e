#include "hgraph/report.hpp"

#include <algorithm>
#include <ostream>

#include <json.hpp>

namespace hgraph {

void Report::sort_records() {
  std::stable_sort(records.begin(), records.end(), [](const Record& a, const Record& b) {
    if (a.instance != b.instance) return a.instance < b.instance;
    return a.metric < b.metric;
  });
}

int Report::failures() const {
  int n = 0;
  for (const Record& r : records) n += !r.pass;
  return n;
}

double Report::total_wall_ms() const {
  double total = 0;
  for (const Record& r : records) total += r.wall_ms;
  return total;
}

void Report::write_tsv(std::ostream& out) const {
  out << "instance\tmetric\tvalue\tbound\tverdict\n";
  for (const Record& r : records)
    out << r.instance << "\t" << r.metric << "\t" << r.value << "\t" << r.bound << "\t"
        << (r.pass ? "pass" : "FAIL") << "\n";
}

void Report::write_json(std::ostream& out) const {
  nlohmann::json arr = nlohmann::json::array();
  for (const Record& r : records)
    arr.push_back({{"instance", r.instance},
                   {"metric", r.metric},
                   {"value", r.value},
                   {"bound", r.bound},
                   {"verdict", r.pass ? "pass" : "FAIL"}});
  out << arr.dump(2) << "\n";
}

}  // namespace hgraph
