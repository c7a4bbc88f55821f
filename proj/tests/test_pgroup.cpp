#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "brute.hpp"
#include "sgb/error.hpp"
#include "sgb/pgroup.hpp"

using namespace sgb;

namespace {

Element el(std::vector<std::int64_t> c) { return Element{std::move(c)}; }

Subgroup gen(const FinitePGroup &g, std::vector<Element> xs) {
  return span(g, xs);
}

std::vector<unsigned> gaps_of(const FinitePGroup &g, const Element &x) {
  std::vector<unsigned> out;
  for (auto k : height_sequence(g, x).gaps)
    out.push_back(static_cast<unsigned>(k));
  return out;
}

} // namespace

TEST_CASE("make_group") {
  auto g = make_group(2, {1, 3});
  CHECK(g.order() == 16);
  CHECK(g.to_string() == "2:[1,3]");
  CHECK(make_group(3, {2, 2}).order() == 81);
  CHECK_THROWS_WITH_AS(make_group(2, std::vector<unsigned>(40, 1)),
                       doctest::Contains("exceeds guard"), Error);
  try {
    make_group(6, {1});
    FAIL("expected NotPrime");
  } catch (const Error &e) {
    CHECK(e.code() == ErrorCode::NotPrime);
  }
}

TEST_CASE("height and height sequences") {
  auto g = make_group(2, {1, 3});
  CHECK(height(g, el({1, 2})) == Height(0));
  CHECK(height(g, el({0, 4})) == Height(2));
  CHECK(height(g, g.zero()).is_infinite());

  auto s = height_sequence(g, el({1, 2}));
  CHECK(to_string(s) == "(0,2,inf)");
  CHECK(s.gaps.size() == 2);

  auto z8 = make_group(2, {3});
  auto t = height_sequence(z8, el({1}));
  CHECK(to_string(t) == "(0,1,2,inf)");
  CHECK(gaps_of(z8, el({1})) == std::vector<unsigned>{2});

  auto z44 = make_group(2, {2, 2});
  CHECK(to_string(height_sequence(z44, el({1, 1}))) == "(0,1,inf)");
  CHECK(gaps_of(z44, el({1, 1})) == std::vector<unsigned>{1});
}

TEST_CASE("generators of cyclic groups have exactly one gap") {
  for (std::uint64_t p : {2, 3, 5})
    for (unsigned j = 1; j <= 5; ++j) {
      auto g = make_group(p, {j});
      auto s = height_sequence(g, g.basis(0));
      CHECK(s.gaps.size() == 1);
      CHECK(s.gaps[0] == j - 1);
    }
}

TEST_CASE("height is a valuation") {
  auto g = make_group(2, {1, 2, 4});
  for (std::uint64_t i = 0; i < g.order(); ++i)
    for (std::uint64_t j = 0; j < g.order(); j += 3) {
      auto x = g.element_at(i), y = g.element_at(j);
      auto hx = height(g, x), hy = height(g, y), hs = height(g, g.add(x, y));
      CHECK(hs >= std::min(hx, hy));
      if (hx != hy)
        CHECK(hs == std::min(hx, hy));
    }
}

TEST_CASE("socle") {
  auto g = make_group(2, {2, 3});
  CHECK(socle(g) == gen(g, {el({2, 0}), el({0, 4})}));
  auto c3 = make_group(3, {1});
  CHECK(socle(c3) == whole_group(c3));
  CHECK(sub_order(make_group(2, {1, 3}), socle(make_group(2, {1, 3}))) == 4);
}

TEST_CASE("span, meet, join, contains") {
  auto g = make_group(2, {1, 3});
  auto h = gen(g, {el({1, 2})});
  CHECK(sub_order(g, h) == 4);
  CHECK(sub_order(g, gen(g, {})) == 1);
  CHECK(gen(g, {g.basis(0), g.basis(1)}) == whole_group(g));

  auto a = gen(g, {el({1, 0})});
  CHECK(is_zero(g, sub_meet(g, a, h)));
  auto j = sub_join(g, a, h);
  CHECK(sub_order(g, j) == 8);
  CHECK(sub_contains(g, j, el({0, 2})));
  CHECK(structure(g, j) == std::vector<unsigned>{2, 1});
  CHECK(sub_contains(g, socle(g), el({1, 4})));
}

TEST_CASE("lattice operations agree with element sets") {
  std::mt19937_64 rng(5);
  for (auto exps :
       std::vector<std::vector<unsigned>>{{1, 3}, {2, 2}, {1, 1, 2}}) {
    auto g = make_group(2, exps);
    std::uniform_int_distribution<std::uint64_t> pick(0, g.order() - 1);
    for (int trial = 0; trial < 40; ++trial) {
      std::vector<Element> ga{g.element_at(pick(rng))},
          gb{g.element_at(pick(rng)), g.element_at(pick(rng))};
      auto sa = brute::closure(g, ga), sb = brute::closure(g, gb);
      auto a = span(g, ga), b = span(g, gb);
      CHECK(brute::elements(g, a) == sa);
      CHECK(sub_order(g, a) == sa.size());
      CHECK(brute::elements(g, sub_meet(g, a, b)) == brute::intersect(sa, sb));
      std::vector<Element> both = ga;
      both.insert(both.end(), gb.begin(), gb.end());
      CHECK(brute::elements(g, sub_join(g, a, b)) == brute::closure(g, both));
      CHECK(sub_le(g, a, b) == (brute::intersect(sa, sb) == sa));
    }
  }
}

TEST_CASE("structure and quotient structure") {
  auto g = make_group(2, {1, 3});
  auto h = gen(g, {el({1, 2})});
  CHECK(structure(g, h) == std::vector<unsigned>{2});
  CHECK(quotient_structure(g, h) == std::vector<unsigned>{2});
  CHECK(structure(g, whole_group(g)) == std::vector<unsigned>{3, 1});
  CHECK(quotient_structure(g, whole_group(g)).empty());
}

TEST_CASE("structure matches the p^k H layer counts") {
  // number of cyclic factors of order >= p^(k+1) is log_p |p^k H : p^(k+1) H|
  for (auto exps :
       std::vector<std::vector<unsigned>>{{1, 3}, {2, 2, 1}, {3, 1, 1}}) {
    auto g = make_group(2, exps);
    for (auto &h : enumerate_subgroups(g, 100000)) {
      auto st = structure(g, h);
      for (unsigned k = 0; k <= g.max_exponent(); ++k) {
        auto big = sub_order(g, multiple_of(g, h, k));
        auto small = sub_order(g, multiple_of(g, h, k + 1));
        unsigned count = 0;
        for (auto ratio = big / small; ratio > 1; ratio /= 2)
          ++count;
        CHECK(count == std::count_if(st.begin(), st.end(),
                                     [&](unsigned d) { return d > k; }));
      }
      // G/H via element counting: |G/H| = |G| / |H|
      std::uint64_t q = 1;
      for (unsigned d : quotient_structure(g, h))
        q <<= d;
      CHECK(q * sub_order(g, h) == g.order());
    }
  }
}

TEST_CASE("cyclic_decomposition gives independent generators") {
  for (auto exps : std::vector<std::vector<unsigned>>{{1, 3}, {2, 2, 1}}) {
    auto g = make_group(2, exps);
    for (auto &h : enumerate_subgroups(g, 100000)) {
      auto xs = cyclic_decomposition(g, h);
      CHECK(span(g, xs) == h);
      std::uint64_t prod = 1;
      for (auto &x : xs)
        prod *= g.element_order(x);
      CHECK(prod == sub_order(g, h));
    }
  }
}

TEST_CASE("essential and pure") {
  auto g = make_group(2, {1, 3});
  auto h = gen(g, {el({1, 2})});
  CHECK(is_essential(g, socle(g)));
  CHECK_FALSE(is_essential(g, h));
  CHECK(is_essential(g, whole_group(g)));

  auto z4 = make_group(2, {2});
  CHECK_FALSE(is_pure(z4, gen(z4, {el({2})})));
  CHECK(is_pure(g, gen(g, {el({1, 0})})));
  CHECK_FALSE(is_pure(g, h));
}

TEST_CASE("complements") {
  auto g = make_group(2, {1, 3});
  auto a = gen(g, {el({1, 0})});
  auto c = find_complement(g, a);
  REQUIRE(c);
  CHECK(is_zero(g, sub_meet(g, a, *c)));
  CHECK(sub_join(g, a, *c) == whole_group(g));
  auto c01 = gen(g, {el({0, 1})});
  CHECK(is_zero(g, sub_meet(g, a, c01)));
  CHECK(sub_join(g, a, c01) == whole_group(g));

  auto z4 = make_group(2, {2});
  CHECK_FALSE(find_complement(z4, gen(z4, {el({2})})));

  auto g23 = make_group(2, {2, 3});
  auto h = gen(g23, {el({1, 1})});
  CHECK(is_summand(g23, h));
  auto hc = find_complement(g23, h);
  REQUIRE(hc);
  CHECK(structure(g23, *hc) == std::vector<unsigned>{2});
}

TEST_CASE("enumerate_subgroups") {
  CHECK(enumerate_subgroups(make_group(2, {1, 1}), 100).size() == 5);
  CHECK(enumerate_subgroups(make_group(3, {1}), 100).size() == 2);
  CHECK(enumerate_subgroups(make_group(2, {2}), 100).size() == 3);
  CHECK_THROWS_AS(enumerate_subgroups(make_group(2, {1, 1, 1}), 5), Error);

  for (auto [p, exps] :
       std::vector<std::pair<std::uint64_t, std::vector<unsigned>>>{
           {2, {1, 3}}, {2, {2, 2}}, {3, {1, 2}}, {2, {2, 3}}}) {
    auto g = make_group(p, exps);
    auto subs = enumerate_subgroups(g, 100000);
    std::set<brute::ElementSet> sets;
    for (auto &h : subs)
      sets.insert(brute::elements(g, h));
    CHECK(sets.size() == subs.size());
    CHECK(sets == brute::subgroups_rank2(g));
  }
}

TEST_CASE("meet and join satisfy the lattice laws") {
  auto g = make_group(2, {1, 2});
  auto subs = enumerate_subgroups(g, 1000);
  for (auto &a : subs)
    for (auto &b : subs) {
      CHECK(sub_meet(g, a, b) == sub_meet(g, b, a));
      CHECK(sub_join(g, a, b) == sub_join(g, b, a));
      CHECK(sub_meet(g, a, sub_join(g, a, b)) == a);
      CHECK(sub_join(g, a, sub_meet(g, a, b)) == a);
      for (auto &c : subs) {
        CHECK(sub_meet(g, sub_meet(g, a, b), c) ==
              sub_meet(g, a, sub_meet(g, b, c)));
        CHECK(sub_join(g, sub_join(g, a, b), c) ==
              sub_join(g, a, sub_join(g, b, c)));
      }
    }
}

TEST_CASE("essential criterion agrees with the intersection definition") {
  for (auto exps : std::vector<std::vector<unsigned>>{{1, 2}, {1, 1, 1}, {3}}) {
    auto g = make_group(2, exps);
    auto subs = enumerate_subgroups(g, 1000);
    for (auto &h : subs) {
      bool by_def = true;
      for (auto &s : subs)
        if (!is_zero(g, s) && is_zero(g, sub_meet(g, h, s)))
          by_def = false;
      CHECK(is_essential(g, h) == by_def);
    }
  }
}

TEST_CASE("pure iff a complement exists") {
  for (auto exps :
       std::vector<std::vector<unsigned>>{{1, 3}, {2, 2}, {1, 1, 2}}) {
    auto g = make_group(2, exps);
    auto subs = enumerate_subgroups(g, 1000);
    for (auto &h : subs)
      CHECK(is_pure(g, h) == find_complement(g, h, subs).has_value());
  }
}

TEST_CASE("essential_summand_oracle") {
  auto g = make_group(2, {1, 3});
  CHECK_FALSE(essential_summand_oracle(g, gen(g, {el({1, 2})})));
  auto a = gen(g, {el({1, 0})});
  CHECK(essential_summand_oracle(g, a) == a);
  auto g22 = make_group(2, {2, 2});
  CHECK(essential_summand_oracle(g22, socle(g22)) == whole_group(g22));

  // oracle output is a pure hull with the same socle
  auto g3 = make_group(2, {1, 2, 3});
  SubgroupCatalog cat(g3, 100000);
  for (std::size_t i = 0; i < cat.size(); ++i) {
    auto &h = cat.subgroups()[i];
    auto s = essential_summand_oracle(g3, h);
    auto idx = cat.essential_summand(i);
    CHECK(s.has_value() == idx.has_value());
    if (s) {
      CHECK(is_pure(g3, *s));
      CHECK(sub_le(g3, h, *s));
      CHECK(sub_le(g3, socle_of(g3, *s), h));
    }
  }
}

TEST_CASE("max_socle_extension") {
  auto g = make_group(2, {1, 3});
  auto h = gen(g, {el({1, 2})});
  CHECK(max_socle_extension(g, h) == h);
  CHECK(max_socle_extension(g, whole_group(g)) == whole_group(g));

  // on a two-level profile group every maximal extension is pure
  auto prof = make_group(2, {2, 3, 3});
  for (auto &sub : enumerate_subgroups(prof, 100000)) {
    auto b = max_socle_extension(prof, sub);
    CHECK(socle_of(prof, b) == socle_of(prof, sub));
    CHECK(is_pure(prof, b));
  }
}

TEST_CASE("literals") {
  auto g = parse_group(" 2 : [1, 3] ");
  CHECK(g == make_group(2, {1, 3}));
  CHECK(parse_element(g, "(3, -1)") == el({1, 7}));
  CHECK(parse_elements(g, "(1,2); (0,1)").size() == 2);
  CHECK_THROWS_AS(parse_element(g, "(1)"), Error);
  CHECK_THROWS_AS(parse_group("2:[1,3"), ParseError);
  CHECK_THROWS_AS(parse_group("4:[1]"), Error);
}

TEST_CASE("partitions") {
  CHECK(partitions(4).size() == 5);
  CHECK(partitions(7).size() == 15);
  CHECK(partitions(10).size() == 42);
  CHECK(partitions(0).empty());
}
