// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass. Bounds are the full acceptance bounds, not the quick test bounds.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "sgb/verify.hpp"

using namespace sgb;

namespace {

struct Run {
  std::string suite;
  std::uint64_t p = 2;
  unsigned max_weight = 0;
  std::uint64_t trials = 0;
  unsigned depth = 0;
};

struct Outcome {
  bool passed = true;
  std::string detail;
  double seconds = 0;
};

Outcome run_all(const std::vector<Run> &runs) {
  Outcome out;
  auto t0 = std::chrono::steady_clock::now();
  for (auto &r : runs) {
    SuiteOptions o;
    o.p = r.p;
    o.max_weight = r.max_weight;
    o.trials = r.trials;
    o.depth = r.depth;
    o.seed = 1;
    SuiteResult res = run_suite(r.suite, o);
    if (!out.detail.empty())
      out.detail += "; ";
    std::string label = r.suite;
    for (auto &[k, v] : res.parameters)
      if (k == "p")
        label += " p=" + std::to_string(v);
    out.detail += label + ": " + std::to_string(res.cases) + " cases, " +
                  std::to_string(res.counterexamples.size()) +
                  " counterexamples";
    if (!res.passed()) {
      out.passed = false;
      const auto &c = res.counterexamples.front();
      out.detail +=
          " (first: " + c.group + " " + c.subject + ": " + c.detail + ")";
    }
  }
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  return out;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    std::vector<Run> runs;
    double time_limit = 0; // seconds, 0 = none
  };
  const std::vector<Criterion> criteria = {
      {1,
       "every subgroup essential in a summand iff Ulm support in {n-1,n}",
       {{"ess-profile", 2, 7}, {"ess-profile", 3, 5}}},
      {2,
       "profile predicate matches the explicit G' + F split search",
       {{"split-profile", 2, 8}},
       1.0},
      {3,
       "heights step by one in two-level groups",
       {{"height-step", 2, 10}, {"height-step", 3, 6}}},
      {4,
       "homocyclic hull of 1000 random subgroups",
       {{"homocyclic-hull", 2, 0, 1000}}},
      {5,
       "projection of a summand, 500 random instances",
       {{"summand-projection", 2, 0, 500}}},
      {6,
       "essential by definition iff socle criterion",
       {{"essential-def", 2, 5}, {"essential-def", 3, 5}}},
      {7, "pure iff complemented up to 2^6", {{"pure-summand", 2, 6}}},
      {8, "golden classifier catalog", {{"catalog", 2}}},
      {9, "two-gap witness up to 2^10", {{"two-gap", 2, 10}}},
      {10,
       "simplify demos pass all finite checks at depth <= 4",
       {{"simplify", 2, 0, 0, 4}},
       10.0},
  };

  bool all = true;
  for (auto &c : criteria) {
    Outcome o;
    try {
      o = run_all(c.runs);
    } catch (const std::exception &e) {
      o.passed = false;
      o.detail = std::string("error: ") + e.what();
    }
    if (c.time_limit > 0 && o.seconds >= c.time_limit) {
      o.passed = false;
      o.detail += "; over the time limit";
    }
    all = all && o.passed;
    std::printf("criterion %2d %s: %s [%s] (%.2fs)\n", c.id,
                o.passed ? "PASS" : "FAIL", c.name, o.detail.c_str(),
                o.seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
