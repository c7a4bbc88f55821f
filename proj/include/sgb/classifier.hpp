#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sgb/expr.hpp"

namespace sgb {

enum class Answer { Yes, No, Undecided };
const char *to_string(Answer a);

/// Strict uses only published results; Extended also applies the derived
/// per-prime rules documented in docs/derived_rules.md.
enum class Mode { Strict, Extended };
const char *to_string(Mode m);

struct RuleTrace {
  std::string rule_id;
  std::string citation;
  std::string note;
  friend bool operator==(const RuleTrace &, const RuleTrace &) = default;
};

struct Verdict {
  Answer value = Answer::Undecided;
  std::vector<RuleTrace> trail;

  /// Rule that produced the final answer (last trail entry).
  const std::string &decisive_rule() const { return trail.back().rule_id; }
  friend bool operator==(const Verdict &, const Verdict &) = default;
};

struct RuleInfo {
  std::string_view id;
  std::string_view citation;
  /// Derived rule, active only in Mode::Extended.
  bool derived = false;
  /// Rules that can end a YES/NO trail; gap markers end UNDECIDED trails.
  bool gap_marker = false;
};

const std::vector<RuleInfo> &rule_table();
const RuleInfo &rule(std::string_view id);

Verdict classify_sgb(const GroupExpr &expr, Mode mode = Mode::Strict);
Verdict classify_ess(const GroupExpr &expr, Mode mode = Mode::Strict);
Verdict classify_bassian_tf(const GroupExpr &expr);

/// Smallest n >= 1 with f(α) = 0 for α < n-1 and Σ_{α>=n+1} f(α) finite,
/// for a profile with no divisible part; the shape G' ⊕ F of the p-group
/// classification where G' has Ulm support in {n-1, n} and F is finite with
/// every cyclic summand of order at least p^(n+2).
std::optional<unsigned> split_profile_n(const UlmProfile &prof);

/// Smallest n >= 1 with support(f) ⊆ {n-1, n}.
std::optional<unsigned> two_level_n(const UlmProfile &prof);

} // namespace sgb
