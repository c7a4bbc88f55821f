#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "gen.hpp"
#include "sgb/error.hpp"
#include "sgb/expr.hpp"

using namespace sgb;

using Chi = std::map<Prime, Cardinal>;

namespace {

ErrorCode parse_error(const std::string &text) {
  try {
    parse(text);
  } catch (const Error &e) {
    return e.code();
  }
  FAIL("no error for " << text);
  return ErrorCode::SyntaxError;
}

const Cardinal w = Cardinal::omega();

} // namespace

TEST_CASE("parse builds canonical atoms") {
  GroupExpr e = parse("Z(2^3)^5 + Z(2^inf)^w + Q");
  REQUIRE(e.terms().size() == 3);
  CHECK(e.terms()[0] == Term{CyclicP{2, 3}, 5});
  CHECK(e.terms()[1] == Term{Quasicyclic{2}, w});
  CHECK(e.terms()[2] == Term{RankOne{Characteristic::rationals()}, 1});

  GroupExpr merged = parse("Z(3^2) + Z(3^2)^w");
  REQUIRE(merged.terms().size() == 1);
  CHECK(merged.terms()[0] == Term{CyclicP{3, 2}, w});

  CHECK(parse("Z(2)") == parse("Z(2^1)"));
  CHECK(parse("0").is_zero());
  CHECK(parse(" Z ( 2 ^ 3 ) ^ 2 + Q") == parse("Z(2^3)^2+Q"));
}

TEST_CASE("parse errors") {
  CHECK(parse_error("Z(6^2)") == ErrorCode::NotPrime);
  CHECK(parse_error("Z(2^0)") == ErrorCode::ZeroExponent);
  CHECK(parse_error("Z(2^3") == ErrorCode::SyntaxError);
  CHECK(parse_error("Z(2^3) +") == ErrorCode::SyntaxError);
  CHECK(parse_error("Z(2^3)^0") == ErrorCode::SyntaxError);
  CHECK(parse_error("R{2:1,2:3}") == ErrorCode::SyntaxError);
  CHECK(parse_error("TF(0)") == ErrorCode::SyntaxError);
  CHECK(parse_error("W") == ErrorCode::SyntaxError);
  try {
    parse("Z(2^3) + X");
  } catch (const ParseError &e) {
    CHECK(e.position() == 9);
  }
}

TEST_CASE("render") {
  CHECK(render(GroupExpr{}) == "0");
  CHECK(render(GroupExpr(std::vector<Term>{Term{CyclicP{2, 1}, w}})) ==
        "Z(2)^w");
  CHECK(render(GroupExpr(std::vector<Term>{
            Term{RankOne{Characteristic(Chi{{2, 1}})}, 3}})) == "R{2:1}^3");
  // rank-one atoms sort by their rendered characteristic
  CHECK(render(parse("Z + Q + R{3:inf,2:1}")) == "Q + R{2:1,3:inf} + Z");
  CHECK(render(parse("Q + TF(2) + Z(3) + Z(2^inf) + Z(2^2)")) ==
        "Z(2^2) + Z(2^inf) + Z(3) + Q + TF(2)");
}

TEST_CASE("round trip and permutation invariance on generated expressions") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto ts = gen::terms(rng, 5);
    const GroupExpr e = parse(gen::join(ts));
    CHECK(parse(render(e)) == e);
    CHECK(render(parse(render(e))) == render(e));
    std::shuffle(ts.begin(), ts.end(), rng);
    CHECK(parse(gen::join(ts)) == e);
  }
}

TEST_CASE("ulm profiles") {
  UlmProfile a = ulm_profile(parse("Z(2)^w + Z(2^4)"), 2);
  CHECK(a.f == std::map<unsigned, Cardinal>{{0, w}, {3, 1}});
  CHECK(a.div_rank.is_zero());
  UlmProfile b = ulm_profile(parse("Z(3^2)^5 + Z(3^3)^w"), 3);
  CHECK(b.f == std::map<unsigned, Cardinal>{{1, 5}, {2, w}});
  UlmProfile c = ulm_profile(parse("Q^w"), 2);
  CHECK(c.f.empty());
  CHECK(c.div_rank.is_zero());
}

TEST_CASE("ulm profile is additive over direct sums") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 1000; ++i) {
    const GroupExpr e1 = parse(gen::expr(rng)), e2 = parse(gen::expr(rng));
    for (Prime p : {2, 3, 5}) {
      const UlmProfile s = ulm_profile(e1 + e2, p), a = ulm_profile(e1, p),
                       b = ulm_profile(e2, p);
      for (unsigned alpha = 0; alpha < 6; ++alpha)
        CHECK(s.at(alpha) == a.at(alpha) + b.at(alpha));
      CHECK(s.div_rank == a.div_rank + b.div_rank);
    }
  }
}

TEST_CASE("structural summary") {
  auto s = summary(parse("Z(2^2)^w + Q"));
  CHECK(s.primes == std::set<Prime>{2});
  CHECK(s.p_rank(2) == w);
  CHECK(s.tf_rank_divisible == Cardinal(1));
  CHECK(s.tf_rank_reduced.is_zero());

  auto t = summary(parse("Z(2^inf)^3 + Z(2^5)^2"));
  CHECK(t.p_rank(2) == Cardinal(5));
  CHECK(t.bounded(2));

  auto u = summary(parse("TF(4)"));
  CHECK(u.tf_rank_reduced == Cardinal(4));
  CHECK(u.has_opaque_tf);

  // final rank = inf over n of the rank of p^n G: the reduced part is
  // bounded, so only the divisible part survives
  CHECK(summary(parse("Z(2)^w + Z(2^3)^2")).final_rank(2).is_zero());
  CHECK(summary(parse("Z(2)^3 + Z(2^3)^w")).final_rank(2).is_zero());
  CHECK(summary(parse("Z(2^inf)^2 + Z(2)^w")).final_rank(2) == Cardinal(2));
}

TEST_CASE("p-rank and boundedness on generated expressions") {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 1000; ++i) {
    const GroupExpr e = parse(gen::expr(rng));
    const auto s = summary(e);
    for (Prime p : s.primes) {
      const UlmProfile &f = s.profiles.at(p);
      Cardinal sum = f.div_rank;
      for (auto &[alpha, m] : f.f)
        sum += m;
      CHECK(s.p_rank(p) == sum);
      CHECK(s.bounded(p));
    }
  }
}

namespace {

// Definition: differences at finitely many primes, both entries finite
// there. A Q characteristic differs from any finite map at all but finitely
// many primes.
bool equivalent_by_definition(const Characteristic &a,
                              const Characteristic &b) {
  if (a.is_rationals() || b.is_rationals())
    return a.is_rationals() && b.is_rationals();
  std::set<Prime> ps;
  for (auto &[p, h] : a.entries())
    ps.insert(p);
  for (auto &[p, h] : b.entries())
    ps.insert(p);
  for (Prime p : ps)
    if (a.at(p) != b.at(p) && (a.at(p).is_infinite() || b.at(p).is_infinite()))
      return false;
  return true;
}

Characteristic random_char(std::mt19937_64 &rng) {
  if (rng() % 10 == 0)
    return Characteristic::rationals();
  std::map<Prime, Cardinal> m;
  for (Prime p : {2, 3, 5})
    switch (rng() % 4) {
    case 0:
      break;
    case 1:
      m[p] = 1;
      break;
    case 2:
      m[p] = 3;
      break;
    default:
      m[p] = w;
    }
  return Characteristic(m);
}

} // namespace

TEST_CASE("types_equivalent") {
  CHECK(types_equivalent(Characteristic(Chi{{2, 1}}),
                         Characteristic(Chi{{2, 3}})));
  CHECK_FALSE(types_equivalent(Characteristic(Chi{{2, w}}),
                               Characteristic(Chi{{2, 1}})));
  CHECK(
      types_equivalent(Characteristic(), Characteristic(Chi{{3, 2}, {5, 1}})));
  CHECK_FALSE(types_equivalent(Characteristic::rationals(), Characteristic()));

  std::mt19937_64 rng(17);
  std::vector<Characteristic> cs;
  for (int i = 0; i < 60; ++i)
    cs.push_back(random_char(rng));
  for (auto &a : cs) {
    CHECK(types_equivalent(a, a));
    for (auto &b : cs) {
      CHECK(types_equivalent(a, b) == equivalent_by_definition(a, b));
      CHECK(types_equivalent(a, b) == types_equivalent(b, a));
      for (auto &c : cs)
        if (types_equivalent(a, b) && types_equivalent(b, c))
          CHECK(types_equivalent(a, c));
    }
  }
}
