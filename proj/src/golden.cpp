#include "sgb/golden.hpp"

namespace sgb {

const char *to_string(Property p) {
  switch (p) {
  case Property::Sgb:
    return "sgb";
  case Property::Ess:
    return "ess";
  case Property::BassianTf:
    return "bassian-tf";
  }
  return "?";
}

Verdict classify(Property property, const GroupExpr &expr, Mode mode) {
  switch (property) {
  case Property::Sgb:
    return classify_sgb(expr, mode);
  case Property::Ess:
    return classify_ess(expr, mode);
  case Property::BassianTf:
    break;
  }
  return classify_bassian_tf(expr);
}

const std::vector<GoldenEntry> &golden_catalog() {
  using enum Property;
  constexpr Mode S = Mode::Strict, E = Mode::Extended;
  constexpr Answer Y = Answer::Yes, N = Answer::No, U = Answer::Undecided;
  static const std::vector<GoldenEntry> table = {
      {Sgb, "Z(3^2)^w", S, Y, "SGB-P-PROFILE"},
      {Sgb, "Z(2) + Z(2^4)^w", S, N, "SGB-P-NO"},
      {Sgb, "Z(2^2)^w + Z(2^inf)", S, N, "SGB-P-NO"},
      {Sgb, "Z^w", S, N, "SGB-TF-NO"},
      {Sgb, "Q^w + R{2:1}^3", S, Y, "SGB-TF-DHOM"},
      {Sgb, "Z(2^2) + Q^w", S, N, "SGB-SPLIT"},
      {Sgb, "Z(2^2)^w + Z(2^3)^w + Z(2^9)^3", S, Y, "SGB-P-PROFILE"},
      {Sgb, "Z(2^2)^w + Z(3^5)", S, U, "SGB-TORSION-GAP"},
      {Sgb, "Z(2^2)^w + Z(3^5)", E, Y, "SGB-TORSION-PRIMARY"},
      {Sgb, "Q^w", S, Y, "SGB-DIV"},
      {Sgb, "Z(2^inf)^w", S, Y, "SGB-DIV"},
      {Sgb, "R{2:1}^w", S, N, "SGB-TF-NO"},
      {Ess, "Z(3^2)^5 + Z(3^3)^w", S, Y, "ESS-P-PROFILE"},
      {Ess, "Z(2) + Z(2^3)", S, N, "ESS-P-NO"},
      {Ess, "Z(2^inf)^2 + Q + R{2:1}^2", S, Y, "ESS-MIXED-HOM"},
      {Ess, "Z(2^inf) + Z(2)", S, U, "ESS-P-MIXED-GAP"},
      {BassianTf, "R{2:1}^3 + TF(2)", S, Y, "BASSIAN-TF-FINRANK"},
      {BassianTf, "Z^w", S, N, "BASSIAN-TF-INFRANK"},
      {BassianTf, "Z(2^3)", S, U, "BASSIAN-TF-SCOPE"},
  };
  return table;
}

} // namespace sgb
