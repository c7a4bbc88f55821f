#include "sgb/classifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace sgb {

const char *to_string(Answer a) {
  switch (a) {
  case Answer::Yes:
    return "YES";
  case Answer::No:
    return "NO";
  case Answer::Undecided:
    return "UNDECIDED";
  }
  return "?";
}

const char *to_string(Mode m) {
  return m == Mode::Strict ? "strict" : "extended";
}

// Citations name the published result by content. Derived rules cite the
// proof in docs/derived_rules.md instead.
const std::vector<RuleInfo> &rule_table() {
  static const std::vector<RuleInfo> table = {
      {"SGB-DIV",
       "divisible groups: every subgroup of a divisible group is essential in "
       "a summand (a divisible hull of it), so divisible groups are SGB"},
      {"SGB-TF-FINRANK", "torsion-free classification, finite rank: a "
                         "torsion-free group of finite rank is SGB"},
      {"SGB-TF-DHOM",
       "torsion-free classification, divisible plus homogeneous: D + R with D "
       "divisible and R a finite-rank homogeneous completely decomposable "
       "group is SGB"},
      {"SGB-TF-OPAQUE",
       "torsion-free classification, divisible plus homogeneous, needs R "
       "homogeneous completely decomposable; an opaque reduced summand cannot "
       "be tested",
       false, true},
      {"SGB-TF-NO",
       "torsion-free classification is exhaustive; a reduced torsion-free SGB "
       "group has finite rank (reduced torsion-free: SGB iff Bassian iff "
       "finite rank, plus summand closure)"},
      {"SGB-P-FINRANK", "p-group classification, finite rank: a p-group of "
                        "finite p-rank is SGB"},
      {"SGB-P-PROFILE",
       "p-group classification, split shape: G = G' + F with Ulm support of G' "
       "in {n-1, n} and F finite with F[p] inside p^(n+1)G[p] is SGB"},
      {"SGB-P-UNBOUNDED-NO",
       "p-group classification, necessity: the reduced part of an SGB p-group "
       "is bounded"},
      {"SGB-P-NO",
       "p-group classification is exhaustive; the failing shape contains a "
       "summand Z(p^n) + infinitely many Z(p^m) with n+2 <= m <= infinity, or "
       "infinitely many Z(p^n) + Z(p^infinity), neither of which is SGB"},
      {"SGB-TORSION-COMPONENT-NO",
       "summand closure: SGB passes to direct summands, and a primary "
       "component of a torsion group is a summand"},
      {"SGB-TORSION-GAP",
       "no published classification of multi-prime torsion SGB groups", false,
       true},
      {"SGB-TORSION-PRIMARY",
       "derived rule (docs/derived_rules.md, D1): a torsion group is SGB iff "
       "each primary component is",
       true},
      {"SGB-SPLIT",
       "splitting mixed groups: T + R is SGB iff T and R are SGB and T is "
       "divisible whenever R has infinite rank"},
      {"SGB-SPLIT-GAP",
       "splitting mixed groups: a component verdict is undecided", false, true},
      {"ESS-DIV",
       "divisible groups: every subgroup is essential in a divisible hull, "
       "which is a summand"},
      {"ESS-P-PROFILE",
       "reduced p-groups: every subgroup is essential in a summand iff the Ulm "
       "support lies in {n-1, n} for some n >= 1"},
      {"ESS-P-NO",
       "reduced p-groups: outside Ulm support {n-1, n} there are summands "
       "Z(p^n) + Z(p^m) with n+1 < m, and y + z (orders p, p^2) has a height "
       "sequence with two gaps, so <y+z> is essential in no summand"},
      {"ESS-P-MIXED-GAP",
       "p-groups with nonzero divisible and nonzero reduced parts are covered "
       "by neither the reduced p-group nor the mixed/torsion-free "
       "classification",
       false, true},
      {"ESS-TORSION-GAP",
       "no published classification for multi-prime torsion groups", false,
       true},
      {"ESS-TORSION-PRIMARY",
       "derived rule (docs/derived_rules.md, D2): in a torsion group every "
       "subgroup is essential in a summand iff this holds in each primary "
       "component",
       true},
      {"ESS-MIXED-TORSION-NO",
       "mixed groups: if every subgroup is essential in a summand, the torsion "
       "part is divisible"},
      {"ESS-MIXED-RANK-NO",
       "mixed/torsion-free groups: the property forces G = D + R with R "
       "homogeneous completely decomposable of finite rank"},
      {"ESS-MIXED-OPAQUE",
       "mixed/torsion-free groups: homogeneity of an opaque reduced summand "
       "cannot be tested",
       false, true},
      {"ESS-MIXED-HOM",
       "mixed/torsion-free groups: D + R with D divisible and R homogeneous "
       "completely decomposable of finite rank has the property"},
      {"ESS-MIXED-NO",
       "mixed/torsion-free groups: reduced rank-1 summands of inequivalent "
       "types are not homogeneous"},
      {"BASSIAN-TF-FINRANK",
       "reduced torsion-free groups: Bassian iff finite rank"},
      {"BASSIAN-TF-INFRANK",
       "reduced torsion-free groups: Bassian iff finite rank"},
      {"BASSIAN-TF-SCOPE",
       "outside reduced torsion-free inputs the Bassian characterization is "
       "not restated here",
       false, true},
  };
  return table;
}

const RuleInfo &rule(std::string_view id) {
  for (auto &r : rule_table())
    if (r.id == id)
      return r;
  throw std::out_of_range("unknown rule id " + std::string(id));
}

namespace {

RuleTrace trace(std::string_view id, std::string note = {}) {
  const RuleInfo &r = rule(id);
  return RuleTrace{std::string(r.id), std::string(r.citation), std::move(note)};
}

Verdict decide(Answer a, std::string_view id, std::string note = {}) {
  return Verdict{a, {trace(id, std::move(note))}};
}

Verdict decide_after(std::vector<RuleTrace> trail, Answer a,
                     std::string_view id, std::string note = {}) {
  trail.push_back(trace(id, std::move(note)));
  return Verdict{a, std::move(trail)};
}

/// Sub-verdict trails are kept, each note prefixed by the component name.
void append_prefixed(std::vector<RuleTrace> &trail, const Verdict &v,
                     const std::string &prefix) {
  for (auto t : v.trail) {
    t.note = prefix + (t.note.empty() ? "" : ": " + t.note);
    trail.push_back(std::move(t));
  }
}

bool all_types_equivalent(const std::vector<Characteristic> &types) {
  for (std::size_t i = 1; i < types.size(); ++i)
    if (!types_equivalent(types[0], types[i]))
      return false;
  return true;
}

std::string profile_text(const UlmProfile &prof) {
  std::string s = "f = {";
  bool first = true;
  for (auto &[alpha, m] : prof.f) {
    s += (first ? "" : ", ") + std::to_string(alpha) + ":" + m.to_string();
    first = false;
  }
  return s + "}, divisible rank " + prof.div_rank.to_string();
}

// --- SGB ------------------------------------------------------------------

Verdict sgb_torsion_free(const GroupExpr &expr) {
  StructuralSummary s = summary(expr);
  if (s.tf_rank().is_finite())
    return decide(Answer::Yes, "SGB-TF-FINRANK",
                  "rank " + s.tf_rank().to_string());
  if (s.tf_rank_reduced.is_infinite())
    return decide(Answer::No, "SGB-TF-NO",
                  "reduced torsion-free part has infinite rank");
  if (s.has_opaque_tf)
    return decide(Answer::Undecided, "SGB-TF-OPAQUE",
                  "divisible rank infinite; reduced part contains an opaque "
                  "finite-rank summand");
  if (all_types_equivalent(s.reduced_tf_types))
    return decide(Answer::Yes, "SGB-TF-DHOM",
                  "divisible rank infinite; reduced rank " +
                      s.tf_rank_reduced.to_string() + ", one type");
  return decide(Answer::No, "SGB-TF-NO",
                "divisible rank infinite and reduced rank-1 types are not all "
                "equivalent");
}

std::string p_failure_shape(const UlmProfile &prof) {
  if (prof.div_rank.is_infinite())
    return "infinitely many Z(p^inf) next to a nonzero reduced part";
  if (!prof.div_rank.is_zero())
    return "Z(p^inf) next to infinitely many cyclic summands of one order";
  // some nonzero f(a) with an infinite f(m-1), m-1 >= a+2
  for (auto &[alpha, m] : prof.f)
    for (auto &[beta, mb] : prof.f)
      if (mb.is_infinite() && beta >= alpha + 2)
        return "Z(p^" + std::to_string(alpha + 1) +
               ") next to infinitely many Z(p^" + std::to_string(beta + 1) +
               ")";
  return "unreachable";
}

Verdict sgb_primary(const GroupExpr &expr, Prime p) {
  StructuralSummary s = summary(expr);
  const UlmProfile &prof = s.profiles.at(p);
  std::string text = "p = " + std::to_string(p) + ", " + profile_text(prof);
  if (!s.bounded(p))
    return decide(Answer::No, "SGB-P-UNBOUNDED-NO", text);
  if (s.p_rank(p).is_finite())
    return decide(Answer::Yes, "SGB-P-FINRANK",
                  text + ", p-rank " + s.p_rank(p).to_string());
  if (prof.div_rank.is_zero()) {
    if (auto n = split_profile_n(prof))
      return decide(Answer::Yes, "SGB-P-PROFILE",
                    text + ", n = " + std::to_string(*n));
  }
  return decide(Answer::No, "SGB-P-NO", text + "; " + p_failure_shape(prof));
}

Verdict sgb_torsion(const GroupExpr &expr, Mode mode) {
  std::set<Prime> primes = expr.torsion_primes();
  if (primes.size() == 1)
    return sgb_primary(expr, *primes.begin());
  std::vector<RuleTrace> trail;
  bool any_undecided = false;
  for (Prime p : primes) {
    GroupExpr comp = expr.primary_component(p);
    Verdict v = comp.wholly_divisible()
                    ? decide(Answer::Yes, "SGB-DIV", "divisible component")
                    : sgb_primary(comp, p);
    append_prefixed(trail, v, "component p=" + std::to_string(p));
    if (v.value == Answer::No)
      return decide_after(std::move(trail), Answer::No,
                          "SGB-TORSION-COMPONENT-NO",
                          std::to_string(p) + "-component is not SGB");
    any_undecided |= v.value == Answer::Undecided;
  }
  if (any_undecided || mode == Mode::Strict)
    return decide_after(std::move(trail), Answer::Undecided, "SGB-TORSION-GAP",
                        "all primary components are SGB");
  return decide_after(std::move(trail), Answer::Yes, "SGB-TORSION-PRIMARY",
                      "all primary components are SGB");
}

Verdict sgb_split(const GroupExpr &expr, Mode mode) {
  GroupExpr t = expr.torsion_part();
  GroupExpr r = expr.torsion_free_part();
  Verdict vt = classify_sgb(t, mode);
  Verdict vr = classify_sgb(r, mode);
  std::vector<RuleTrace> trail;
  append_prefixed(trail, vt, "torsion part");
  append_prefixed(trail, vr, "torsion-free part");
  if (vt.value == Answer::No)
    return decide_after(std::move(trail), Answer::No, "SGB-SPLIT",
                        "torsion part is not SGB");
  if (vr.value == Answer::No)
    return decide_after(std::move(trail), Answer::No, "SGB-SPLIT",
                        "torsion-free part is not SGB");
  bool infinite_rank = summary(r).tf_rank().is_infinite();
  if (infinite_rank && !t.wholly_divisible())
    return decide_after(std::move(trail), Answer::No, "SGB-SPLIT",
                        "torsion-free rank infinite but torsion part is not "
                        "divisible");
  if (vt.value == Answer::Undecided || vr.value == Answer::Undecided)
    return decide_after(std::move(trail), Answer::Undecided, "SGB-SPLIT-GAP",
                        "a component verdict is undecided");
  return decide_after(std::move(trail), Answer::Yes, "SGB-SPLIT",
                      infinite_rank ? "both parts SGB, torsion part divisible"
                                    : "both parts SGB, finite torsion-free "
                                      "rank");
}

// --- ESS ------------------------------------------------------------------

Verdict ess_primary(const GroupExpr &expr, Prime p) {
  UlmProfile prof = ulm_profile(expr, p);
  std::string text = "p = " + std::to_string(p) + ", " + profile_text(prof);
  if (!prof.div_rank.is_zero())
    return decide(Answer::Undecided, "ESS-P-MIXED-GAP", text);
  if (auto n = two_level_n(prof))
    return decide(Answer::Yes, "ESS-P-PROFILE",
                  text + ", n = " + std::to_string(*n));
  unsigned lo = prof.f.begin()->first, hi = prof.f.rbegin()->first;
  return decide(Answer::No, "ESS-P-NO",
                text + "; summands Z(p^" + std::to_string(lo + 1) +
                    ") and Z(p^" + std::to_string(hi + 1) + ")");
}

Verdict ess_torsion(const GroupExpr &expr, Mode mode) {
  std::set<Prime> primes = expr.torsion_primes();
  if (primes.size() == 1)
    return ess_primary(expr, *primes.begin());
  if (mode == Mode::Strict)
    return decide(Answer::Undecided, "ESS-TORSION-GAP",
                  std::to_string(primes.size()) + " primes");
  std::vector<RuleTrace> trail;
  Answer combined = Answer::Yes;
  for (Prime p : primes) {
    GroupExpr comp = expr.primary_component(p);
    Verdict v = comp.wholly_divisible() ? decide(Answer::Yes, "ESS-DIV")
                                        : ess_primary(comp, p);
    append_prefixed(trail, v, "component p=" + std::to_string(p));
    if (v.value == Answer::No)
      combined = Answer::No;
    else if (v.value == Answer::Undecided && combined == Answer::Yes)
      combined = Answer::Undecided;
  }
  if (combined == Answer::Undecided)
    return decide_after(std::move(trail), Answer::Undecided, "ESS-TORSION-GAP",
                        "a primary component is undecided");
  return decide_after(std::move(trail), combined, "ESS-TORSION-PRIMARY",
                      combined == Answer::Yes
                          ? "every primary component has the property"
                          : "some primary component lacks the property");
}

Verdict ess_mixed(const GroupExpr &expr) {
  for (auto &t : expr.terms())
    if (std::holds_alternative<CyclicP>(t.atom))
      return decide(Answer::No, "ESS-MIXED-TORSION-NO",
                    "reduced torsion atom " + render(t.atom) +
                        " next to torsion-free atoms");
  StructuralSummary s = summary(expr);
  if (s.tf_rank_reduced.is_infinite())
    return decide(Answer::No, "ESS-MIXED-RANK-NO",
                  "reduced torsion-free part has infinite rank");
  if (s.has_opaque_tf)
    return decide(Answer::Undecided, "ESS-MIXED-OPAQUE",
                  "reduced part contains an opaque finite-rank summand");
  if (all_types_equivalent(s.reduced_tf_types))
    return decide(Answer::Yes, "ESS-MIXED-HOM",
                  "divisible part plus reduced rank " +
                      s.tf_rank_reduced.to_string() + " of one type");
  return decide(Answer::No, "ESS-MIXED-NO",
                "reduced rank-1 types are not all equivalent");
}

} // namespace

std::optional<unsigned> split_profile_n(const UlmProfile &prof) {
  if (!prof.div_rank.is_zero())
    return std::nullopt;
  unsigned top = prof.max_support().value_or(0) + 2;
  for (unsigned n = 1; n <= top; ++n) {
    bool low_clear = std::all_of(prof.f.begin(), prof.f.end(), [&](auto &kv) {
      return kv.first + 1 >= n || kv.second.is_zero();
    });
    if (low_clear && prof.tail(n + 1).is_finite())
      return n;
  }
  return std::nullopt;
}

std::optional<unsigned> two_level_n(const UlmProfile &prof) {
  std::vector<unsigned> support;
  for (auto &[alpha, m] : prof.f)
    if (!m.is_zero())
      support.push_back(alpha);
  if (support.empty())
    return 1u;
  if (support.back() - support.front() > 1)
    return std::nullopt;
  // support ⊆ {n-1, n} iff back <= n <= front + 1
  return std::max(1u, support.back());
}

Verdict classify_sgb(const GroupExpr &expr, Mode mode) {
  if (expr.wholly_divisible())
    return decide(Answer::Yes, "SGB-DIV",
                  expr.is_zero() ? "zero group" : "all atoms divisible");
  if (!expr.has_torsion())
    return sgb_torsion_free(expr);
  if (!expr.has_torsion_free())
    return sgb_torsion(expr, mode);
  return sgb_split(expr, mode);
}

Verdict classify_ess(const GroupExpr &expr, Mode mode) {
  if (expr.wholly_divisible())
    return decide(Answer::Yes, "ESS-DIV",
                  expr.is_zero() ? "zero group" : "all atoms divisible");
  if (!expr.has_torsion_free())
    return ess_torsion(expr, mode);
  return ess_mixed(expr);
}

Verdict classify_bassian_tf(const GroupExpr &expr) {
  if (expr.has_torsion())
    return decide(Answer::Undecided, "BASSIAN-TF-SCOPE",
                  "input has torsion atoms");
  for (auto &t : expr.terms())
    if (is_divisible(t.atom))
      return decide(Answer::Undecided, "BASSIAN-TF-SCOPE",
                    "input is not reduced");
  Cardinal r = summary(expr).tf_rank();
  if (r.is_finite())
    return decide(Answer::Yes, "BASSIAN-TF-FINRANK", "rank " + r.to_string());
  return decide(Answer::No, "BASSIAN-TF-INFRANK", "rank infinite");
}

} // namespace sgb
