#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <omp.h>

#include "sgb/error.hpp"
#include "sgb/verify.hpp"

using namespace sgb;

namespace {

SuiteOptions small(std::uint64_t p, Kernel k) {
  SuiteOptions o;
  o.p = p;
  o.kernel = k;
  o.max_weight = p == 2 ? 5 : 3;
  o.trials = 60;
  o.depth = 2;
  return o;
}

ErrorCode code_of(const std::string &suite, const SuiteOptions &o) {
  try {
    run_suite(suite, o);
  } catch (const Error &e) {
    return e.code();
  }
  return ErrorCode::SyntaxError;
}

} // namespace

TEST_CASE("serial and parallel kernels give identical results") {
  // Several threads even on a single core, so the parallel path interleaves.
  omp_set_num_threads(4);
  for (auto &name : suite_names())
    for (std::uint64_t p : {2u, 3u}) {
      CAPTURE(name);
      CAPTURE(p);
      auto s = run_suite(name, small(p, Kernel::Serial));
      auto q = run_suite(name, small(p, Kernel::Parallel));
      CHECK(s == q);
      CHECK(s.passed());
      CHECK(s.cases > 0);
    }
}

TEST_CASE("results are deterministic for a seed") {
  auto o = small(2, Kernel::Parallel);
  for (const char *name : {"homocyclic-hull", "summand-projection"}) {
    auto a = run_suite(name, o), b = run_suite(name, o);
    CHECK(a == b);
    o.seed = 99;
    auto c = run_suite(name, o);
    CHECK(c.passed());
    o.seed = 1;
  }
}

TEST_CASE("weight 1 groups are cyclic and pass trivially") {
  SuiteOptions o;
  o.max_weight = 1;
  auto r = run_suite("ess-profile", o);
  CHECK(r.passed());
  CHECK(r.groups == 1);
}

TEST_CASE("effective parameters are reported") {
  SuiteOptions o;
  o.p = 3;
  o.max_weight = 2;
  auto r = run_suite("essential-def", o);
  bool seen = false;
  for (auto &[k, v] : r.parameters)
    if (k == "max_weight") {
      seen = true;
      CHECK(v == 2);
    }
  CHECK(seen);
}

TEST_CASE("bad bounds") {
  SuiteOptions o;
  o.p = 4;
  CHECK(code_of("ess-profile", o) == ErrorCode::BadParameters);
  o.p = 2;
  o.max_weight = 41;
  CHECK(code_of("height-step", o) == ErrorCode::BadParameters);
  o.max_weight = 12;
  o.guards.max_order = 1024;
  CHECK(code_of("essential-def", o) == ErrorCode::BadParameters);
  CHECK(code_of("no-such-suite", SuiteOptions{}) == ErrorCode::BadParameters);
}

TEST_CASE("groups_up_to and two_level_exponents") {
  // partition counts 1, 2, 3, 5, 7
  CHECK(groups_up_to(5).size() == 18);
  CHECK(two_level_exponents({3, 3, 2}));
  CHECK(two_level_exponents({}));
  CHECK_FALSE(two_level_exponents({3, 1}));
}
