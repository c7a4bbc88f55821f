#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "sgb/classifier.hpp"
#include "sgb/countable.hpp"
#include "sgb/verify.hpp"

namespace sgb {

/// Output of one CLI command. Everything except `timing` is a function of
/// the inputs and the seed.
struct Report {
  std::string command;
  /// Command arguments after defaults, as a JSON object.
  nlohmann::json inputs = nlohmann::json::object();
  /// YES / NO / UNDECIDED for classify, pass / fail for verify and demo,
  /// found / none for oracles and witnesses, ok otherwise.
  std::string result;
  std::vector<RuleTrace> trail;
  /// Non-empty iff result is "fail".
  std::vector<Counterexample> counterexamples;
  std::uint64_t cases = 0;
  std::uint64_t groups = 0;
  std::uint64_t seed = 0;
  /// Command-specific data: witnesses, checks, observations, elements.
  nlohmann::json details = nlohmann::json::object();
  double runtime_ms = 0;

  /// Equality ignores runtime_ms.
  friend bool operator==(const Report &a, const Report &b) {
    return a.command == b.command && a.inputs == b.inputs &&
           a.result == b.result && a.trail == b.trail &&
           a.counterexamples == b.counterexamples && a.cases == b.cases &&
           a.groups == b.groups && a.seed == b.seed && a.details == b.details;
  }
};

nlohmann::json to_json(const Report &r);
/// Throws BadParameters on a document that does not have the report shape.
Report report_from_json(const nlohmann::json &j);

Report classify_report(const std::string &property, const std::string &text,
                       Mode mode, const Verdict &v);
Report suite_report(const SuiteResult &res, const SuiteOptions &opts);
Report demo_report(const DemoReport &demo);

/// Plain-text rendering for --format text.
std::string to_text(const Report &r);

} // namespace sgb
