// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Every tolerance is exact; corpus sizes are pinned here.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "hgraph/report.hpp"
#include "hgraph/verify.hpp"

namespace {

using hgraph::Report;
using Clock = std::chrono::steady_clock;

struct Criterion {
  int number;
  const char* label;
  const char* family;
  int count;
  double budget_seconds;  // 0 = no stated budget
};

// Family counts follow the stated corpus sizes: 200 seeded H-graphs for the
// cut metrics, 100 for separators/domset/kernel/nodebudget, 500 (edge, X)
// for alpha, 50 instances for contractions and reductions.
constexpr Criterion kCriteria[] = {
    {1, "mim(T,delta) <= 2||H|| on every cut", "mim", 200, 120},
    {2, "nec_1 <= n^(2||H||) and nec_d <= n^(d*mim) per cut", "boolw", 200, 0},
    {3, "separator enumeration set-equals oracle within the count bound", "separators", 100, 0},
    {4, "theta_r separator counts reach k^r (incl. 81 at n=14)", "theta", 3, 30},
    {5, "domset pipeline equals oracle for every k, witnesses verify", "domset", 100, 600},
    {6, "alpha greedy equals exhaustive optimum on 500 pairs", "alpha", 500, 0},
    {7, "constrained minima survive the contraction batches", "contraction", 50, 0},
    {8, "kernel preserves omega >= k within (k-1)|V(H)| vertices", "kernel", 100, 0},
    {9, "reduction sizes, adjacency law, and both iffs", "reductions", 50, 300},
    {10, "minimum dominating sets use <= 3|V(T)|-2 node-vertices", "nodebudget", 100, 0},
};

}  // namespace

int main() {
  const uint64_t seed = 20240801;
  hgraph::verify::Caps caps;
  int total_failures = 0;

  for (const Criterion& c : kCriteria) {
    auto start = Clock::now();
    Report report = hgraph::verify::run_family(c.family, seed, c.count, caps, 4);
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    int failures = report.failures();
    total_failures += failures;
    bool in_budget = c.budget_seconds <= 0 || seconds <= c.budget_seconds;
    if (!in_budget) ++total_failures;
    std::printf("criterion %2d: %-4s %-62s [%zu records, %d failures, %.1fs%s]\n", c.number,
                failures == 0 && in_budget ? "PASS" : "FAIL", c.label, report.records.size(),
                failures, seconds, in_budget ? "" : ", OVER BUDGET");
    if (failures > 0) {
      int shown = 0;
      for (const auto& r : report.records)
        if (!r.pass && shown++ < 5)
          std::printf("    FAIL %s %s value=%s bound=%s\n", r.instance.c_str(), r.metric.c_str(),
                      r.value.c_str(), r.bound.c_str());
    }
  }
  std::printf("acceptance: %s\n", total_failures == 0 ? "PASS" : "FAIL");
  return total_failures == 0 ? 0 : 1;
}
