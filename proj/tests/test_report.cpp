#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "sgb/error.hpp"
#include "sgb/golden.hpp"
#include "sgb/report.hpp"

using namespace sgb;

namespace {

std::string deterministic_dump(const Report &r) {
  auto j = to_json(r);
  j.erase("timing");
  return j.dump();
}

std::vector<Report> samples() {
  std::vector<Report> out;
  for (auto &e : golden_catalog()) {
    auto v = classify(e.property, parse(e.expr), e.mode);
    out.push_back(classify_report(to_string(e.property), e.expr, e.mode, v));
  }
  SuiteOptions o;
  o.max_weight = 4;
  o.trials = 20;
  out.push_back(suite_report(run_suite("homocyclic-hull", o), o));
  out.push_back(suite_report(run_suite("ess-profile", o), o));
  out.push_back(demo_report(simplify_b_demo(2, 1, 2)));

  Report failing;
  failing.command = "verify";
  failing.result = "fail";
  failing.counterexamples = {{"2:[1,3]", "<(1,2)>", "detail with \"quotes\""}};
  failing.details["observations"] = {{"x", -3}};
  failing.runtime_ms = 12.5;
  out.push_back(failing);
  return out;
}

} // namespace

TEST_CASE("json round trip") {
  for (auto &r : samples()) {
    auto text = to_json(r).dump(2);
    auto back = report_from_json(nlohmann::json::parse(text));
    CHECK(back == r);
    CHECK(back.runtime_ms == r.runtime_ms);
    CHECK(to_json(back).dump(2) == text);
  }
}

TEST_CASE("reports are deterministic apart from timing") {
  auto a = samples(), b = samples();
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    b[i].runtime_ms = a[i].runtime_ms + 100;
    CHECK(a[i] == b[i]);
    CHECK(deterministic_dump(a[i]) == deterministic_dump(b[i]));
  }
}

TEST_CASE("counterexamples are non-empty iff the result is fail") {
  for (auto &r : samples())
    CHECK(r.counterexamples.empty() == (r.result != "fail"));
}

TEST_CASE("classify report carries the trail") {
  auto v = classify_sgb(parse("Z(2) + Z(2^4)^w"));
  auto r = classify_report("sgb", "Z(2) + Z(2^4)^w", Mode::Strict, v);
  CHECK(r.result == "NO");
  CHECK(r.trail.back().rule_id == "SGB-P-NO");
  CHECK(to_json(r)["inputs"]["mode"] == "strict");
  CHECK(to_text(r).find("SGB-P-NO") != std::string::npos);
}

TEST_CASE("malformed documents") {
  auto j = to_json(samples().front());
  j.erase("stats");
  try {
    report_from_json(j);
    FAIL("expected an error");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::BadParameters);
  }
}
