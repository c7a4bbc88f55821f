#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sgb/pgroup.hpp"

namespace sgb {

/// Serial loops are the reference; Parallel distributes independent cases
/// over OpenMP threads and must produce the same result.
enum class Kernel { Serial, Parallel };

struct SuiteOptions {
  std::uint64_t p = 2;
  /// Groups of order up to p^max_weight; 0 picks the suite default.
  unsigned max_weight = 0;
  std::uint64_t seed = 1;
  /// Random instances for the seeded suites; 0 picks the suite default.
  std::uint64_t trials = 0;
  /// Depth for the simplify demos; 0 picks the default (4).
  unsigned depth = 0;
  Guards guards;
  Kernel kernel = Kernel::Parallel;
};

struct Counterexample {
  std::string group;
  std::string subject;
  std::string detail;
  friend bool operator==(const Counterexample &,
                         const Counterexample &) = default;
  friend auto operator<=>(const Counterexample &,
                          const Counterexample &) = default;
};

struct SuiteResult {
  std::string suite;
  /// Effective parameters after defaults, as (name, value).
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::uint64_t groups = 0;
  std::uint64_t cases = 0;
  /// Sorted; empty iff the suite passed.
  std::vector<Counterexample> counterexamples;
  /// Observations that are recorded but not asserted.
  std::vector<std::pair<std::string, std::int64_t>> observations;
  bool passed() const { return counterexamples.empty(); }
  friend bool operator==(const SuiteResult &, const SuiteResult &) = default;
};

/// ess-profile, split-profile, height-step, homocyclic-hull,
/// summand-projection, essential-def, pure-summand, catalog, two-gap, simplify
const std::vector<std::string> &suite_names();

/// Throws BadParameters for an unknown suite or bounds outside the guards.
SuiteResult run_suite(const std::string &name, const SuiteOptions &opts);

/// Exponent multisets (non-increasing) of all p-groups of order p^w with
/// 1 <= w <= max_weight.
std::vector<std::vector<unsigned>> groups_up_to(unsigned max_weight);

/// Support of the exponent list contained in {n-1, n} for some n >= 1
/// (in exponent terms: max - min <= 1).
bool two_level_exponents(const std::vector<unsigned> &exponents);

} // namespace sgb
