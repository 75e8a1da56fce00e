#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hgraph {

struct Record {
  std::string instance;
  std::string metric;
  std::string value;
  std::string bound;  // "-" when no bound applies
  bool pass = true;
  double wall_ms = 0;  // console summary only, never serialized
};

// Sorted, byte-deterministic record table. The serialized forms carry no
// timing data so identical config and seed give identical bytes.
struct Report {
  std::vector<Record> records;

  void add(Record r) { records.push_back(std::move(r)); }
  void merge(const Report& other) {
    records.insert(records.end(), other.records.begin(), other.records.end());
  }
  void sort_records();
  int failures() const;
  double total_wall_ms() const;

  void write_tsv(std::ostream& out) const;
  void write_json(std::ostream& out) const;
};

}  // namespace hgraph
