#pragma once

#include <string>
#include <vector>

#include "sgb/classifier.hpp"

namespace sgb {

enum class Property { Sgb, Ess, BassianTf };
const char *to_string(Property p);

/// One tabulated classification with the rule expected to decide it.
struct GoldenEntry {
  Property property;
  std::string expr;
  Mode mode;
  Answer expected;
  std::string rule;
};

const std::vector<GoldenEntry> &golden_catalog();

Verdict classify(Property property, const GroupExpr &expr, Mode mode);

} // namespace sgb
