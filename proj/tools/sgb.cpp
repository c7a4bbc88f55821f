// Command-line front end: classify, verify, oracle, witness, demo,
// invariants, rules.

#include <chrono>
#include <functional>
#include <iostream>

#include <CLI11.hpp>

#include "sgb/classifier.hpp"
#include "sgb/constructions.hpp"
#include "sgb/countable.hpp"
#include "sgb/error.hpp"
#include "sgb/expr.hpp"
#include "sgb/report.hpp"
#include "sgb/verify.hpp"

using namespace sgb;
using nlohmann::json;

namespace {

constexpr int kInputError = 2;

std::string gens_string(const FinitePGroup &g, const Subgroup &h) {
  std::string s;
  for (auto &x : generators(g, h))
    s += (s.empty() ? "" : ";") + to_string(x);
  return "<" + s + ">";
}

json subgroup_json(const FinitePGroup &g, const Subgroup &h) {
  json gens = json::array();
  for (auto &x : generators(g, h))
    gens.push_back(to_string(x));
  json st = json::array();
  for (unsigned e : structure(g, h))
    st.push_back(e);
  return {{"generators", gens}, {"order", sub_order(g, h)}, {"structure", st}};
}

json sequence_json(const HeightSequence &s) {
  json gaps = json::array();
  for (auto k : s.gaps)
    gaps.push_back(k);
  return {{"heights", to_string(s)}, {"gaps", gaps}};
}

int exit_code(const Report &r) {
  if (r.result == "YES" || r.result == "pass")
    return 0;
  if (r.result == "NO" || r.result == "fail")
    return 1;
  if (r.result == "UNDECIDED")
    return 3;
  return 0;
}

struct Output {
  std::string format = "text";

  int emit(Report r, std::chrono::steady_clock::time_point start) const {
    r.runtime_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    if (format == "json")
      std::cout << to_json(r).dump(2) << "\n";
    else
      std::cout << to_text(r);
    return exit_code(r);
  }
};

void add_format(CLI::App *cmd, Output &out) {
  cmd->add_option("--format", out.format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
}

Mode parse_mode(const std::string &m) {
  return m == "extended" ? Mode::Extended : Mode::Strict;
}

Subgroup parse_subgroup(const FinitePGroup &g, const std::string &text) {
  if (text.empty())
    return zero_subgroup(g);
  return span(g, parse_elements(g, text));
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"sgb: classify abelian group expressions and run finite "
               "verification suites"};
  app.require_subcommand(1);
  Output out;
  const Guards guards = Guards::from_env();
  std::function<Report()> run;

  // classify
  std::string expr_text, property = "sgb", mode = "strict";
  auto *classify =
      app.add_subcommand("classify", "classify a group expression");
  classify->add_option("expr", expr_text, "group expression")->required();
  classify->add_option("--property", property, "sgb, ess or bassian-tf")
      ->check(CLI::IsMember({"sgb", "ess", "bassian-tf"}));
  classify->add_option("--mode", mode, "strict or extended")
      ->check(CLI::IsMember({"strict", "extended"}));
  add_format(classify, out);
  classify->callback([&] {
    run = [&] {
      auto e = parse(expr_text);
      Verdict v = property == "sgb"   ? classify_sgb(e, parse_mode(mode))
                  : property == "ess" ? classify_ess(e, parse_mode(mode))
                                      : classify_bassian_tf(e);
      return classify_report(property, expr_text, parse_mode(mode), v);
    };
  });

  // verify
  std::string suite, kernel = "parallel";
  SuiteOptions sopts;
  sopts.guards = guards;
  auto *verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--p", sopts.p, "prime");
  verify->add_option("--max-weight", sopts.max_weight,
                     "groups of order up to p^w (0: suite default)");
  verify->add_option("--seed", sopts.seed);
  verify->add_option("--trials", sopts.trials, "0: suite default");
  verify->add_option("--depth", sopts.depth, "simplify depth (0: 4)");
  verify->add_option("--kernel", kernel)
      ->check(CLI::IsMember({"serial", "parallel"}));
  add_format(verify, out);
  verify->callback([&] {
    run = [&] {
      sopts.kernel = kernel == "serial" ? Kernel::Serial : Kernel::Parallel;
      return suite_report(run_suite(suite, sopts), sopts);
    };
  });

  // oracle
  std::string oracle_kind, group_text, gens_text;
  auto *oracle = app.add_subcommand("oracle", "finite-group oracles");
  oracle->add_option("kind", oracle_kind)
      ->required()
      ->check(CLI::IsMember({"ess-summand", "max-extension", "complement"}));
  oracle->add_option("--group", group_text, "e.g. 2:[1,3]")->required();
  oracle->add_option("--gens", gens_text, "e.g. (1,2);(0,4)");
  add_format(oracle, out);
  oracle->callback([&] {
    run = [&] {
      auto g = parse_group(group_text, guards);
      auto h = parse_subgroup(g, gens_text);
      Report r;
      r.command = "oracle";
      r.inputs = {
          {"kind", oracle_kind}, {"group", g.to_string()}, {"gens", gens_text}};
      r.details["input"] = subgroup_json(g, h);
      std::optional<Subgroup> s;
      if (oracle_kind == "ess-summand")
        s = essential_summand_oracle(g, h);
      else if (oracle_kind == "max-extension")
        s = max_socle_extension(g, h);
      else
        s = find_complement(g, h, guards);
      r.result = s ? "found" : "none";
      if (s) {
        r.details["subgroup"] = subgroup_json(g, *s);
        r.details["pure"] = is_pure(g, *s);
      }
      return r;
    };
  });

  // witness
  std::string witness_kind, element_text;
  std::optional<std::size_t> wi, wj;
  auto *witness = app.add_subcommand("witness", "element witnesses");
  witness->add_option("kind", witness_kind)
      ->required()
      ->check(CLI::IsMember({"two-gap", "height"}));
  witness->add_option("--group", group_text)->required();
  witness->add_option("--element", element_text, "for height");
  witness->add_option("--i", wi, "first summand index (two-gap)");
  witness->add_option("--j", wj, "second summand index (two-gap)");
  add_format(witness, out);
  witness->callback([&] {
    run = [&] {
      auto g = parse_group(group_text, guards);
      Report r;
      r.command = "witness";
      r.inputs = {{"kind", witness_kind}, {"group", g.to_string()}};
      if (witness_kind == "height") {
        if (element_text.empty())
          throw Error(ErrorCode::BadParameters, "height needs --element");
        auto x = parse_element(g, element_text);
        r.inputs["element"] = to_string(x);
        r.result = "found";
        r.details = {{"element", to_string(x)},
                     {"height", height(g, x).to_string()},
                     {"order", g.element_order(x)},
                     {"sequence", sequence_json(height_sequence(g, x))}};
        return r;
      }
      if (wi.has_value() != wj.has_value())
        throw Error(ErrorCode::BadParameters, "give both --i and --j");
      try {
        auto w = wi ? two_gap_witness(g, *wi, *wj) : two_gap_witness(g);
        r.result = "found";
        r.details = {{"i", w.i},
                     {"j", w.j},
                     {"element", to_string(w.x)},
                     {"sequence", sequence_json(w.sequence)},
                     {"hull_exists", w.hull_exists}};
      } catch (const Error &e) {
        if (e.code() != ErrorCode::NoWitness)
          throw;
        r.result = "none";
        r.details = {{"reason", e.what()}};
      }
      return r;
    };
  });

  // demo
  std::string demo_kind;
  std::uint64_t dp = 2;
  unsigned dn = 1, dm = 3, depth = 3;
  std::vector<std::string> probes;
  std::string sa, sc, sh, sk, sn;
  auto *demo = app.add_subcommand("demo", "constructions on concrete groups");
  demo->add_option("kind", demo_kind)
      ->required()
      ->check(CLI::IsMember(
          {"simplify-a", "simplify-b", "homocyclic-hull", "project-summand"}));
  demo->add_option("--p", dp);
  demo->add_option("--n", dn);
  demo->add_option("--m", dm);
  demo->add_option("--depth", depth);
  demo->add_option("--probe", probes,
                   "element such as \"Y[0]:1 + Z[0]:1/4\" (repeatable)");
  demo->add_option("--group", group_text);
  demo->add_option("--gens", gens_text, "H for homocyclic-hull");
  demo->add_option("--a-gens", sa, "A");
  demo->add_option("--c-gens", sc, "C");
  demo->add_option("--h-gens", sh, "H");
  demo->add_option("--k-gens", sk, "K");
  demo->add_option("--n-gens", sn, "N for project-summand");
  add_format(demo, out);
  demo->callback([&] {
    run = [&]() -> Report {
      if (demo_kind == "simplify-a" || demo_kind == "simplify-b") {
        const bool a = demo_kind == "simplify-a";
        std::vector<FinSuppElement> ps;
        if (!probes.empty()) {
          auto g = a ? simplify_a_group(dp, dn, dm) : simplify_b_group(dp, dn);
          for (auto &t : probes)
            ps.push_back(g.parse(t));
        }
        return demo_report(a ? simplify_a_demo(dp, dn, dm, depth, ps, guards)
                             : simplify_b_demo(dp, dn, depth, ps, guards));
      }
      if (group_text.empty())
        throw Error(ErrorCode::BadParameters, demo_kind + " needs --group");
      auto g = parse_group(group_text, guards);
      Report r;
      r.command = "demo";
      r.inputs = {{"demo", demo_kind}, {"group", g.to_string()}};
      if (demo_kind == "homocyclic-hull") {
        auto h = parse_subgroup(g, gens_text);
        r.inputs["gens"] = gens_text;
        auto x = homocyclic_hull(g, h);
        const bool ok =
            sub_le(g, h, x) && is_essential_in(g, h, x) && is_pure(g, x);
        r.result = ok ? "pass" : "fail";
        if (!ok)
          r.counterexamples.push_back(
              {g.to_string(), gens_string(g, h), "hull postcondition failed"});
        r.details = {{"hull", subgroup_json(g, x)},
                     {"essential", is_essential_in(g, h, x)},
                     {"pure", is_pure(g, x)}};
        return r;
      }
      auto a = parse_subgroup(g, sa), c = parse_subgroup(g, sc),
           h = parse_subgroup(g, sh), k = parse_subgroup(g, sk),
           n = parse_subgroup(g, sn);
      r.inputs["a"] = sa;
      r.inputs["c"] = sc;
      r.inputs["h"] = sh;
      r.inputs["k"] = sk;
      r.inputs["n"] = sn;
      auto res = project_summand(g, a, c, h, k, n);
      r.result = "pass";
      r.details = {{"image", subgroup_json(g, res.image)},
                   {"complement_in_h", subgroup_json(g, res.complement_in_h)}};
      return r;
    };
  });

  // invariants
  auto *inv = app.add_subcommand("invariants",
                                 "canonical form, Ulm profiles and ranks");
  inv->add_option("expr", expr_text)->required();
  add_format(inv, out);
  inv->callback([&] {
    run = [&] {
      auto e = parse(expr_text);
      auto s = summary(e);
      Report r;
      r.command = "invariants";
      r.inputs = {{"expr", expr_text}};
      r.result = "ok";
      json primes = json::object();
      for (auto p : s.primes) {
        auto &prof = s.profiles.at(p);
        json f = json::object();
        for (auto &[alpha, c] : prof.f)
          f[std::to_string(alpha)] = c.to_string();
        primes[std::to_string(p)] = {
            {"ulm", f},
            {"div_rank", prof.div_rank.to_string()},
            {"p_rank", s.p_rank(p).to_string()},
            {"final_rank", s.final_rank(p).to_string()}};
      }
      json types = json::array();
      for (auto &t : s.reduced_tf_types)
        types.push_back(t.to_string());
      r.details = {{"canonical", render(e)},
                   {"primes", primes},
                   {"tf_rank", s.tf_rank().to_string()},
                   {"tf_rank_divisible", s.tf_rank_divisible.to_string()},
                   {"reduced_tf_types", types},
                   {"opaque_tf", s.has_opaque_tf}};
      return r;
    };
  });

  // rules
  auto *rules = app.add_subcommand("rules", "list classifier rules");
  add_format(rules, out);
  rules->callback([&] {
    run = [&] {
      Report r;
      r.command = "rules";
      r.result = "ok";
      json list = json::array();
      for (auto &ri : rule_table())
        list.push_back({{"id", std::string(ri.id)},
                        {"citation", std::string(ri.citation)},
                        {"derived", ri.derived},
                        {"gap_marker", ri.gap_marker}});
      r.details = {{"rules", list}};
      r.cases = list.size();
      return r;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    return app.exit(e) == 0 ? 0 : kInputError;
  }

  const auto start = std::chrono::steady_clock::now();
  try {
    return out.emit(run(), start);
  } catch (const Error &e) {
    std::cerr << "error (" << to_string(e.code()) << "): " << e.what() << "\n";
    return kInputError;
  }
}
