#include "sgb/report.hpp"

#include <sstream>

#include "sgb/error.hpp"

namespace sgb {

using nlohmann::json;

json to_json(const Report &r) {
  json trail = json::array();
  for (auto &t : r.trail)
    trail.push_back(
        {{"rule", t.rule_id}, {"citation", t.citation}, {"note", t.note}});
  json ces = json::array();
  for (auto &c : r.counterexamples)
    ces.push_back(
        {{"group", c.group}, {"subject", c.subject}, {"detail", c.detail}});
  return json{{"command", r.command},
              {"inputs", r.inputs},
              {"result", r.result},
              {"seed", r.seed},
              {"trail", trail},
              {"counterexamples", ces},
              {"stats", {{"cases", r.cases}, {"groups", r.groups}}},
              {"details", r.details},
              {"timing", {{"runtime_ms", r.runtime_ms}}}};
}

Report report_from_json(const json &j) {
  try {
    Report r;
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.result = j.at("result").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    for (auto &t : j.at("trail"))
      r.trail.push_back({t.at("rule").get<std::string>(),
                         t.at("citation").get<std::string>(),
                         t.at("note").get<std::string>()});
    for (auto &c : j.at("counterexamples"))
      r.counterexamples.push_back({c.at("group").get<std::string>(),
                                   c.at("subject").get<std::string>(),
                                   c.at("detail").get<std::string>()});
    r.cases = j.at("stats").at("cases").get<std::uint64_t>();
    r.groups = j.at("stats").at("groups").get<std::uint64_t>();
    r.details = j.at("details");
    r.runtime_ms = j.at("timing").at("runtime_ms").get<double>();
    return r;
  } catch (const json::exception &e) {
    throw Error(ErrorCode::BadParameters,
                std::string("not a report: ") + e.what());
  }
}

Report classify_report(const std::string &property, const std::string &text,
                       Mode mode, const Verdict &v) {
  Report r;
  r.command = "classify";
  r.inputs = {
      {"expr", text}, {"property", property}, {"mode", to_string(mode)}};
  r.result = to_string(v.value);
  r.trail = v.trail;
  r.cases = 1;
  return r;
}

namespace {

const char *kernel_name(Kernel k) {
  return k == Kernel::Serial ? "serial" : "parallel";
}

} // namespace

Report suite_report(const SuiteResult &res, const SuiteOptions &opts) {
  Report r;
  r.command = "verify";
  r.inputs = {{"suite", res.suite}, {"kernel", kernel_name(opts.kernel)}};
  for (auto &[k, v] : res.parameters)
    r.inputs[k] = v;
  r.result = res.passed() ? "pass" : "fail";
  r.counterexamples = res.counterexamples;
  r.cases = res.cases;
  r.groups = res.groups;
  r.seed = opts.seed;
  json obs = json::object();
  for (auto &[k, v] : res.observations)
    obs[k] = v;
  r.details = {{"observations", obs}};
  return r;
}

Report demo_report(const DemoReport &demo) {
  Report r;
  r.command = "demo";
  r.inputs = {{"demo", demo.demo}};
  for (auto &[k, v] : demo.parameters)
    r.inputs[k] = v;
  r.result = demo.passed() ? "pass" : "fail";
  json checks = json::array();
  for (auto &c : demo.checks) {
    checks.push_back({{"name", c.name},
                      {"passed", c.passed},
                      {"cases", c.cases},
                      {"detail", c.detail}});
    r.cases += c.cases;
    if (!c.passed)
      r.counterexamples.push_back({demo.demo, c.name, c.detail});
  }
  json witnesses = json::array();
  for (auto &[k, v] : demo.witnesses)
    witnesses.push_back({{"name", k}, {"value", v}});
  r.details = {
      {"probes", demo.probes}, {"checks", checks}, {"witnesses", witnesses}};
  return r;
}

std::string to_text(const Report &r) {
  std::ostringstream out;
  out << r.command;
  for (auto &[k, v] : r.inputs.items())
    out << " " << k << "=" << (v.is_string() ? v.get<std::string>() : v.dump());
  out << "\nresult: " << r.result << "\n";
  for (auto &t : r.trail) {
    out << "  " << t.rule_id << ": " << t.citation;
    if (!t.note.empty())
      out << " (" << t.note << ")";
    out << "\n";
  }
  if (r.cases)
    out << "cases: " << r.cases << "\n";
  if (r.groups)
    out << "groups: " << r.groups << "\n";
  if (r.command == "verify")
    out << "seed: " << r.seed << "\n";
  for (auto &c : r.counterexamples)
    out << "counterexample: " << c.group << " " << c.subject << ": " << c.detail
        << "\n";
  if (r.details.contains("checks"))
    for (auto &c : r.details["checks"])
      out << "  [" << (c["passed"].get<bool>() ? "ok" : "FAILED") << "] "
          << c["name"].get<std::string>() << " (" << c["cases"] << " cases)"
          << "\n";
  if (r.details.contains("witnesses"))
    for (auto &w : r.details["witnesses"])
      out << "  " << w["name"].get<std::string>() << " = "
          << w["value"].get<std::string>() << "\n";
  if (r.details.contains("rules"))
    for (auto &ru : r.details["rules"])
      out << "  " << ru["id"].get<std::string>()
          << (ru["derived"].get<bool>() ? " [derived]" : "")
          << (ru["gap_marker"].get<bool>() ? " [gap]" : "") << ": "
          << ru["citation"].get<std::string>() << "\n";
  for (auto &[k, v] : r.details.items())
    if (k != "checks" && k != "witnesses" && k != "probes" && k != "rules")
      out << k << ": " << v.dump() << "\n";
  return out.str();
}

} // namespace sgb
