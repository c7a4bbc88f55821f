// Times each verification suite with the serial and the OpenMP kernel and
// checks that both produce the same result.
//
//   bench_kernels [--quick] [--threads N] [suite...]

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include <omp.h>

#include "sgb/verify.hpp"

using namespace sgb;

namespace {

double seconds_for(const std::string &suite, const SuiteOptions &o,
                   SuiteResult &out) {
  auto t0 = std::chrono::steady_clock::now();
  out = run_suite(suite, o);
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

} // namespace

int main(int argc, char **argv) {
  bool quick = false;
  std::vector<std::string> suites;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--quick"))
      quick = true;
    else if (!std::strcmp(argv[i], "--threads") && i + 1 < argc)
      omp_set_num_threads(std::stoi(argv[++i]));
    else
      suites.push_back(argv[i]);
  }
  if (suites.empty())
    suites = suite_names();

  std::printf("threads: %d\n", omp_get_max_threads());
  std::printf("%-14s %3s %10s %10s %10s %8s  %s\n", "suite", "p", "cases",
              "serial_s", "parallel_s", "speedup", "same");
  bool all_same = true;
  for (auto &suite : suites)
    for (std::uint64_t p : {2u, 3u}) {
      SuiteOptions o;
      o.p = p;
      if (quick) {
        o.max_weight = p == 2 ? 5 : 3;
        o.trials = 100;
        o.depth = 2;
      }
      SuiteResult s, q;
      o.kernel = Kernel::Serial;
      const double ts = seconds_for(suite, o, s);
      o.kernel = Kernel::Parallel;
      const double tp = seconds_for(suite, o, q);
      const bool same = s == q;
      all_same = all_same && same;
      std::printf("%-14s %3llu %10llu %10.3f %10.3f %8.2f  %s\n", suite.c_str(),
                  static_cast<unsigned long long>(p),
                  static_cast<unsigned long long>(s.cases), ts, tp,
                  tp > 0 ? ts / tp : 0.0, same ? "yes" : "NO");
    }
  return all_same ? 0 : 1;
}
