#include "sgb/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "sgb/classifier.hpp"
#include "sgb/constructions.hpp"
#include "sgb/countable.hpp"
#include "sgb/error.hpp"
#include "sgb/expr.hpp"
#include "sgb/golden.hpp"

namespace sgb {

namespace {

// Per-case output; merged in case order so the result is independent of
// scheduling.
struct Partial {
  std::uint64_t cases = 0;
  std::vector<Counterexample> found;
  std::map<std::string, std::int64_t> observed;

  void fail(std::string group, std::string subject, std::string detail) {
    found.push_back({std::move(group), std::move(subject), std::move(detail)});
  }
};

void for_each_case(std::size_t n, Kernel kernel,
                   const std::function<void(std::size_t, Partial &)> &body,
                   Partial &total) {
  std::vector<Partial> parts(n);
  if (kernel == Kernel::Parallel) {
#pragma omp parallel for schedule(dynamic)
    for (std::size_t i = 0; i < n; ++i)
      body(i, parts[i]);
  } else {
    for (std::size_t i = 0; i < n; ++i)
      body(i, parts[i]);
  }
  for (auto &part : parts) {
    total.cases += part.cases;
    for (auto &c : part.found)
      total.found.push_back(std::move(c));
    for (auto &[k, v] : part.observed)
      total.observed[k] += v;
  }
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Uniform enough for test-case generation and identical on every platform.
std::uint64_t draw(std::mt19937_64 &rng, std::uint64_t n) { return rng() % n; }

std::string gens_string(const FinitePGroup &g, const Subgroup &h) {
  std::string s = "<";
  auto gens = generators(g, h);
  for (std::size_t i = 0; i < gens.size(); ++i)
    s += (i ? ";" : "") + to_string(gens[i]);
  return s + ">";
}

// Element sets as bitsets over element_at indices.
using Bits = std::vector<std::uint64_t>;

std::uint64_t index_of(const FinitePGroup &g, const Element &x) {
  std::uint64_t idx = 0, stride = 1;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    idx += static_cast<std::uint64_t>(x.coords[i]) * stride;
    stride *= static_cast<std::uint64_t>(g.modulus(i));
  }
  return idx;
}

Bits element_bits(const FinitePGroup &g, const Subgroup &h) {
  Bits b((g.order() + 63) / 64, 0);
  for (std::uint64_t i = 0; i < g.order(); ++i)
    if (sub_contains(g, h, g.element_at(i)))
      b[i / 64] |= std::uint64_t(1) << (i % 64);
  return b;
}

std::uint64_t popcount(const Bits &b) {
  std::uint64_t n = 0;
  for (auto w : b)
    n += static_cast<std::uint64_t>(__builtin_popcountll(w));
  return n;
}

// Intersection is exactly {0} (element 0 has index 0).
bool meets_trivially(const Bits &a, const Bits &b) {
  for (std::size_t w = 0; w < a.size(); ++w) {
    std::uint64_t both = a[w] & b[w];
    if (w == 0)
      both &= ~std::uint64_t(1);
    if (both)
      return false;
  }
  return true;
}

void check_bounds(const SuiteOptions &o, unsigned weight) {
  if (!is_prime(o.p))
    throw Error(ErrorCode::BadParameters,
                std::to_string(o.p) + " is not prime");
  if (weight == 0 || weight > 40)
    throw Error(ErrorCode::BadParameters, "max weight must be in 1..40");
  std::uint64_t order = 1;
  for (unsigned k = 0; k < weight; ++k) {
    order *= o.p;
    if (order > o.guards.max_order)
      throw Error(ErrorCode::BadParameters,
                  "p^max_weight exceeds the order guard " +
                      std::to_string(o.guards.max_order));
  }
}

unsigned weight_or(const SuiteOptions &o, unsigned p2, unsigned p3,
                   unsigned other) {
  if (o.max_weight)
    return o.max_weight;
  return o.p == 2 ? p2 : o.p == 3 ? p3 : other;
}

// ---------------------------------------------------------------------------
// Every subgroup essential in a summand vs the two-level exponent predicate

void suite_ess_profile(const SuiteOptions &o, SuiteResult &res,
                       Partial &total) {
  const unsigned w = weight_or(o, 7, 5, 3);
  check_bounds(o, w);
  res.parameters = {{"p", o.p}, {"max_weight", w}};
  for (const auto &exps : groups_up_to(w)) {
    const FinitePGroup g = make_group(o.p, exps, o.guards);
    const auto subs = enumerate_subgroups(g, o.guards.max_subgroups);
    const bool profile = two_level_exponents(exps);
    Partial part;
    std::vector<char> has_hull(subs.size());
    for_each_case(
        subs.size(), o.kernel,
        [&](std::size_t i, Partial &out) {
          ++out.cases;
          const auto oracle = essential_summand_oracle(g, subs[i]);
          has_hull[i] = oracle.has_value();
          const bool fast = is_pure(g, max_socle_extension(g, subs[i]));
          if (profile && !fast)
            out.fail(g.to_string(), gens_string(g, subs[i]),
                     "maximal extension with the same socle is not pure");
          if (!profile && fast != has_hull[i])
            out.observed["fast extension disagrees with oracle"] += 1;
        },
        part);
    ++res.groups;
    total.cases += part.cases;
    for (auto &c : part.found)
      total.found.push_back(std::move(c));
    for (auto &[k, v] : part.observed)
      total.observed[k] += v;
    const auto bad = std::find(has_hull.begin(), has_hull.end(), 0);
    const bool brute = bad == has_hull.end();
    if (brute != profile)
      total.fail(g.to_string(), "all subgroups essential in a summand",
                 std::string("brute force says ") + (brute ? "yes" : "no") +
                     ", exponent predicate says " + (profile ? "yes" : "no") +
                     (brute
                          ? ""
                          : "; witness " +
                                gens_string(g, subs[bad - has_hull.begin()])));
    if (!profile)
      total.observed["groups without the property"] += 1;
  }
}

// ---------------------------------------------------------------------------
// Profile predicate vs explicit split search over {0, 1, 2, ω}^8

// Does f = g + h hold with g supported on {n-1, n}, h finite-valued and
// h(α) = 0 for α ≤ n? Each α is split independently over all pairs of
// values from {0, 1, 2, ω}.
bool split_search(const std::vector<Cardinal> &f) {
  const Cardinal values[] = {0, 1, 2, Cardinal::omega()};
  for (unsigned n = 1; n <= f.size() + 1; ++n) {
    bool ok = true;
    for (unsigned a = 0; a < f.size() && ok; ++a) {
      bool found = false;
      for (auto gv : values)
        for (auto hv : values) {
          if (gv + hv != f[a])
            continue;
          if (!gv.is_zero() && a + 1 != n && a != n)
            continue;
          if (hv.is_infinite() || (!hv.is_zero() && a <= n))
            continue;
          found = true;
        }
      ok = found;
    }
    if (ok)
      return true;
  }
  return false;
}

void suite_split_profile(const SuiteOptions &o, SuiteResult &res,
                         Partial &total) {
  const unsigned len = o.max_weight ? o.max_weight : 8;
  if (len == 0 || len > 10)
    throw Error(ErrorCode::BadParameters, "profile length must be in 1..10");
  if (!is_prime(o.p))
    throw Error(ErrorCode::BadParameters,
                std::to_string(o.p) + " is not prime");
  res.parameters = {{"p", o.p}, {"max_exponent", len}};
  const Cardinal values[] = {0, 1, 2, Cardinal::omega()};
  const std::size_t count = std::size_t(1) << (2 * len);
  res.groups = count;
  for_each_case(
      count, o.kernel,
      [&](std::size_t code, Partial &out) {
        ++out.cases;
        std::vector<Cardinal> f(len);
        UlmProfile prof;
        prof.p = o.p;
        std::string expr;
        for (unsigned a = 0; a < len; ++a) {
          f[a] = values[(code >> (2 * a)) & 3];
          if (f[a].is_zero())
            continue;
          prof.f[a] = f[a];
          expr += (expr.empty() ? "" : " + ") + std::string("Z(") +
                  std::to_string(o.p) + "^" + std::to_string(a + 1) + ")^" +
                  f[a].to_string();
        }
        if (expr.empty())
          expr = "0";
        const bool predicate = split_profile_n(prof).has_value();
        const bool search = split_search(f);
        if (predicate != search)
          out.fail(std::to_string(o.p), expr,
                   std::string("profile predicate ") +
                       (predicate ? "yes" : "no") + ", split search " +
                       (search ? "yes" : "no"));
        // The full classifier: YES iff finite p-rank or the split exists.
        const bool finite = prof.reduced_rank().is_finite();
        const Verdict v = classify_sgb(parse(expr));
        const Answer want = finite || search ? Answer::Yes : Answer::No;
        if (v.value != want)
          out.fail(std::to_string(o.p), expr,
                   std::string("classifier says ") + to_string(v.value) +
                       ", expected " + to_string(want));
      },
      total);
}

// ---------------------------------------------------------------------------
// Heights step by exactly one in two-level groups

void suite_height_step(const SuiteOptions &o, SuiteResult &res,
                       Partial &total) {
  const unsigned w = weight_or(o, 10, 6, 4);
  check_bounds(o, w);
  res.parameters = {{"p", o.p}, {"max_weight", w}};
  std::vector<std::vector<unsigned>> groups;
  for (auto &e : groups_up_to(w))
    if (two_level_exponents(e))
      groups.push_back(e);
  res.groups = groups.size();
  for_each_case(
      groups.size(), o.kernel,
      [&](std::size_t gi, Partial &out) {
        const FinitePGroup g = make_group(o.p, groups[gi], o.guards);
        // Heights from the sets p^k G, built by multiplying every element.
        std::vector<std::vector<char>> in_multiple;
        const auto p = static_cast<std::int64_t>(o.p);
        std::int64_t pk = 1;
        for (unsigned k = 0; k <= g.max_exponent(); ++k) {
          std::vector<char> mark(g.order(), 0);
          for (std::uint64_t i = 0; i < g.order(); ++i)
            mark[index_of(g, g.scale(pk, g.element_at(i)))] = 1;
          in_multiple.push_back(std::move(mark));
          pk *= p;
        }
        auto brute_height = [&](std::uint64_t idx) {
          unsigned h = 0;
          while (h + 1 < in_multiple.size() && in_multiple[h + 1][idx])
            ++h;
          return h;
        };
        for (std::uint64_t i = 1; i < g.order(); ++i) {
          const Element x = g.element_at(i);
          const Element px = g.scale(p, x);
          if (g.is_zero(px))
            continue;
          ++out.cases;
          const unsigned hx = brute_height(i),
                         hpx = brute_height(index_of(g, px));
          if (hpx != hx + 1)
            out.fail(g.to_string(), to_string(x),
                     "height " + std::to_string(hx) + " but p*x has height " +
                         std::to_string(hpx));
          if (height(g, x) != Height(hx))
            out.fail(g.to_string(), to_string(x),
                     "engine height " + height(g, x).to_string() +
                         " differs from brute force " + std::to_string(hx));
        }
      },
      total);
}

// ---------------------------------------------------------------------------
// Homocyclic hull of random subgroups

void suite_homocyclic_hull(const SuiteOptions &o, SuiteResult &res,
                           Partial &total) {
  const std::uint64_t trials = o.trials ? o.trials : 1000;
  res.parameters = {{"trials", static_cast<std::int64_t>(trials)},
                    {"seed", static_cast<std::int64_t>(o.seed)}};
  res.groups = trials;
  for_each_case(
      trials, o.kernel,
      [&](std::size_t t, Partial &out) {
        auto rng = trial_rng(o.seed, t);
        const std::uint64_t p = draw(rng, 2) ? 3 : 2;
        const unsigned n = 1 + static_cast<unsigned>(draw(rng, 3));
        const unsigned r = 1 + static_cast<unsigned>(draw(rng, 4));
        const FinitePGroup g =
            make_group(p, std::vector<unsigned>(r, n), o.guards);
        std::vector<Element> gens(draw(rng, r + 1));
        for (auto &x : gens) {
          x = g.zero();
          for (std::size_t i = 0; i < r; ++i)
            x.coords[i] = static_cast<std::int64_t>(
                draw(rng, static_cast<std::uint64_t>(g.modulus(i))));
        }
        const Subgroup h = span(g, gens);
        const Subgroup x = homocyclic_hull(g, h);
        ++out.cases;
        std::string why;
        if (!is_essential_in(g, h, x))
          why = "H is not essential in X";
        else if (!is_pure(g, x))
          why = "X is not pure";
        else
          for (unsigned d : structure(g, x))
            if (d != n)
              why = "X is not homocyclic of exponent " + std::to_string(n);
        if (!why.empty())
          out.fail(g.to_string(), "H = " + gens_string(g, h),
                   why + "; X = " + gens_string(g, x));
      },
      total);
}

// ---------------------------------------------------------------------------
// Projection of a summand onto another summand

struct GroupData {
  FinitePGroup g;
  std::vector<Subgroup> subs;
  std::vector<std::size_t> pure;
  /// complements[k] lists complements of subs[pure[k]]
  std::vector<std::vector<std::size_t>> complements;
};

GroupData group_data(const FinitePGroup &g, const Guards &guards) {
  GroupData d{g, enumerate_subgroups(g, guards.max_subgroups), {}, {}};
  std::vector<Bits> bits;
  std::vector<std::uint64_t> sizes;
  for (auto &s : d.subs) {
    bits.push_back(element_bits(g, s));
    sizes.push_back(popcount(bits.back()));
  }
  for (std::size_t i = 0; i < d.subs.size(); ++i) {
    if (!is_pure(g, d.subs[i]))
      continue;
    d.pure.push_back(i);
    std::vector<std::size_t> comp;
    for (std::size_t j = 0; j < d.subs.size(); ++j)
      if (sizes[i] * sizes[j] == g.order() && meets_trivially(bits[i], bits[j]))
        comp.push_back(j);
    d.complements.push_back(std::move(comp));
  }
  return d;
}

void suite_summand_projection(const SuiteOptions &o, SuiteResult &res,
                              Partial &total) {
  const std::uint64_t trials = o.trials ? o.trials : 500;
  res.parameters = {{"trials", static_cast<std::int64_t>(trials)},
                    {"seed", static_cast<std::int64_t>(o.seed)}};
  std::vector<GroupData> pool;
  for (auto &e : groups_up_to(5))
    if (e.size() >= 2)
      pool.push_back(group_data(make_group(2, e, o.guards), o.guards));
  for (auto &e : groups_up_to(3))
    if (e.size() >= 2)
      pool.push_back(group_data(make_group(3, e, o.guards), o.guards));
  res.groups = pool.size();
  for_each_case(
      trials, o.kernel,
      [&](std::size_t t, Partial &out) {
        auto rng = trial_rng(o.seed, t);
        const GroupData &d = pool[draw(rng, pool.size())];
        const FinitePGroup &g = d.g;
        const std::size_t ka = draw(rng, d.pure.size());
        const Subgroup &a = d.subs[d.pure[ka]];
        const Subgroup &c =
            d.subs[d.complements[ka][draw(rng, d.complements[ka].size())]];
        const Subgroup socle_a = socle_of(g, a);
        std::vector<std::size_t> hs;
        for (std::size_t k = 0; k < d.pure.size(); ++k)
          if (sub_le(g, socle_a, d.subs[d.pure[k]]))
            hs.push_back(k);
        const std::size_t kh = hs[draw(rng, hs.size())];
        const Subgroup &h = d.subs[d.pure[kh]];
        const Subgroup &k =
            d.subs[d.complements[kh][draw(rng, d.complements[kh].size())]];
        const Subgroup ah = sub_meet(g, a, h);
        std::vector<const Subgroup *> ns;
        for (auto &s : d.subs)
          if (sub_le(g, socle_a, s) && sub_le(g, s, ah))
            ns.push_back(&s);
        const Subgroup &n = *ns[draw(rng, ns.size())];

        ++out.cases;
        const std::string subject =
            "A=" + gens_string(g, a) + " C=" + gens_string(g, c) +
            " H=" + gens_string(g, h) + " K=" + gens_string(g, k) +
            " N=" + gens_string(g, n);
        try {
          const ProjectionResult r = project_summand(g, a, c, h, k, n);
          // Re-check the four conclusions here, independently of the op.
          std::string why;
          if (!is_zero(g, sub_meet(g, a, k)) ||
              sub_order(g, r.image) != sub_order(g, a))
            why = "not injective on A";
          else if (!is_direct_decomposition(g, r.image, c))
            why = "G is not pi(A) + C";
          else if (!sub_le(g, r.image, h) || !is_pure(g, r.image))
            why = "pi(A) is not a summand of H";
          else
            for (std::uint64_t i = 0; i < g.order(); ++i) {
              const Element x = g.element_at(i);
              if (sub_contains(g, n, x) && project_element(g, h, k, x) != x) {
                why = "pi moves " + to_string(x);
                break;
              }
            }
          if (!why.empty())
            out.fail(g.to_string(), subject, why);
        } catch (const Error &e) {
          out.fail(g.to_string(), subject, e.what());
        }
      },
      total);
}

// ---------------------------------------------------------------------------
// Exhaustive finite-group comparisons

void suite_essential_def(const SuiteOptions &o, SuiteResult &res,
                         Partial &total) {
  const unsigned w = o.max_weight ? o.max_weight : 5;
  check_bounds(o, w);
  res.parameters = {{"p", o.p}, {"max_weight", w}};
  for (const auto &exps : groups_up_to(w)) {
    const FinitePGroup g = make_group(o.p, exps, o.guards);
    const auto subs = enumerate_subgroups(g, o.guards.max_subgroups);
    std::vector<Bits> bits;
    for (auto &s : subs)
      bits.push_back(element_bits(g, s));
    ++res.groups;
    for_each_case(
        subs.size(), o.kernel,
        [&](std::size_t i, Partial &out) {
          ++out.cases;
          bool by_definition = true;
          for (std::size_t j = 1; j < subs.size() && by_definition; ++j)
            by_definition = !meets_trivially(bits[i], bits[j]);
          if (by_definition != is_essential(g, subs[i]))
            out.fail(g.to_string(), gens_string(g, subs[i]),
                     std::string("definition says ") +
                         (by_definition ? "essential" : "not essential") +
                         ", socle criterion disagrees");
        },
        total);
  }
}

void suite_pure_summand(const SuiteOptions &o, SuiteResult &res,
                        Partial &total) {
  const unsigned w = o.max_weight ? o.max_weight : 6;
  check_bounds(o, w);
  res.parameters = {{"p", o.p}, {"max_weight", w}};
  for (const auto &exps : groups_up_to(w)) {
    const FinitePGroup g = make_group(o.p, exps, o.guards);
    const auto subs = enumerate_subgroups(g, o.guards.max_subgroups);
    std::vector<Bits> bits;
    std::vector<std::uint64_t> sizes;
    for (auto &s : subs) {
      bits.push_back(element_bits(g, s));
      sizes.push_back(popcount(bits.back()));
    }
    ++res.groups;
    for_each_case(
        subs.size(), o.kernel,
        [&](std::size_t i, Partial &out) {
          ++out.cases;
          bool has_complement = false;
          for (std::size_t j = 0; j < subs.size() && !has_complement; ++j)
            has_complement = sizes[i] * sizes[j] == g.order() &&
                             meets_trivially(bits[i], bits[j]);
          if (has_complement != is_pure(g, subs[i]))
            out.fail(g.to_string(), gens_string(g, subs[i]),
                     std::string("complement ") +
                         (has_complement ? "exists" : "does not exist") +
                         " but purity test disagrees");
        },
        total);
  }
}

// ---------------------------------------------------------------------------

void suite_catalog(const SuiteOptions &o, SuiteResult &res, Partial &total) {
  (void)o;
  const auto &cat = golden_catalog();
  res.groups = cat.size();
  for (const auto &e : cat) {
    ++total.cases;
    const Verdict v = classify(e.property, parse(e.expr), e.mode);
    if (v.value != e.expected || v.decisive_rule() != e.rule)
      total.fail(std::string(to_string(e.property)) + "/" + to_string(e.mode),
                 e.expr,
                 std::string("got ") + to_string(v.value) + " by " +
                     v.decisive_rule() + ", expected " + to_string(e.expected) +
                     " by " + e.rule);
  }
}

void suite_two_gap(const SuiteOptions &o, SuiteResult &res, Partial &total) {
  const unsigned w = weight_or(o, 10, 6, 4);
  check_bounds(o, w);
  res.parameters = {{"p", o.p}, {"max_weight", w}};
  const auto groups = groups_up_to(w);
  res.groups = groups.size();
  for_each_case(
      groups.size(), o.kernel,
      [&](std::size_t gi, Partial &out) {
        const FinitePGroup g = make_group(o.p, groups[gi], o.guards);
        ++out.cases;
        const bool profile = two_level_exponents(groups[gi]);
        try {
          const TwoGapWitness wit = two_gap_witness(g);
          if (profile) {
            out.fail(g.to_string(), to_string(wit.x),
                     "witness returned for a two-level group");
            return;
          }
          const std::vector<Height> want = {Height(g.exponents()[wit.i] - 1),
                                            Height(g.exponents()[wit.j] - 1),
                                            Height::infinity()};
          if (wit.sequence.heights != want || wit.sequence.gaps.size() != 2)
            out.fail(g.to_string(), to_string(wit.x),
                     "height sequence " + to_string(wit.sequence));
          if (wit.hull_exists)
            out.fail(g.to_string(), to_string(wit.x),
                     "cyclic subgroup is essential in a summand");
          out.observed["witnesses"] += 1;
        } catch (const Error &e) {
          if (e.code() != ErrorCode::NoWitness || !profile)
            out.fail(g.to_string(), "two-gap witness", e.what());
        }
      },
      total);
}

void suite_simplify(const SuiteOptions &o, SuiteResult &res, Partial &total) {
  const unsigned depth = o.depth ? o.depth : 4;
  if (depth > 8)
    throw Error(ErrorCode::BadParameters, "depth must be at most 8");
  if (!is_prime(o.p))
    throw Error(ErrorCode::BadParameters,
                std::to_string(o.p) + " is not prime");
  res.parameters = {{"p", o.p}, {"n", 1}, {"m", 3}, {"max_depth", depth}};
  for (unsigned d = 1; d <= depth; ++d) {
    for (const DemoReport &rep : {simplify_a_demo(o.p, 1, 3, d, {}, o.guards),
                                  simplify_b_demo(o.p, 1, d, {}, o.guards)}) {
      ++res.groups;
      for (const auto &c : rep.checks) {
        total.cases += c.cases;
        if (!c.passed)
          total.fail(rep.demo + " depth " + std::to_string(d), c.name,
                     c.detail);
      }
    }
  }
}

using SuiteFn = void (*)(const SuiteOptions &, SuiteResult &, Partial &);

const std::map<std::string, SuiteFn> &suites() {
  static const std::map<std::string, SuiteFn> table = {
      {"ess-profile", suite_ess_profile},
      {"split-profile", suite_split_profile},
      {"height-step", suite_height_step},
      {"homocyclic-hull", suite_homocyclic_hull},
      {"summand-projection", suite_summand_projection},
      {"essential-def", suite_essential_def},
      {"pure-summand", suite_pure_summand},
      {"catalog", suite_catalog},
      {"two-gap", suite_two_gap},
      {"simplify", suite_simplify},
  };
  return table;
}

} // namespace

const std::vector<std::string> &suite_names() {
  static const std::vector<std::string> names = {"ess-profile",
                                                 "split-profile",
                                                 "height-step",
                                                 "homocyclic-hull",
                                                 "summand-projection",
                                                 "essential-def",
                                                 "pure-summand",
                                                 "catalog",
                                                 "two-gap",
                                                 "simplify"};
  return names;
}

SuiteResult run_suite(const std::string &name, const SuiteOptions &opts) {
  auto it = suites().find(name);
  if (it == suites().end())
    throw Error(ErrorCode::BadParameters, "unknown suite '" + name + "'");
  SuiteResult res;
  res.suite = name;
  Partial total;
  it->second(opts, res, total);
  res.cases = total.cases;
  res.counterexamples = std::move(total.found);
  std::sort(res.counterexamples.begin(), res.counterexamples.end());
  res.counterexamples.erase(
      std::unique(res.counterexamples.begin(), res.counterexamples.end()),
      res.counterexamples.end());
  res.observations.assign(total.observed.begin(), total.observed.end());
  return res;
}

std::vector<std::vector<unsigned>> groups_up_to(unsigned max_weight) {
  std::vector<std::vector<unsigned>> out;
  for (unsigned w = 1; w <= max_weight; ++w)
    for (auto &part : partitions(w))
      out.push_back(part);
  return out;
}

bool two_level_exponents(const std::vector<unsigned> &e) {
  if (e.empty())
    return true;
  auto [lo, hi] = std::minmax_element(e.begin(), e.end());
  return *hi - *lo <= 1;
}

} // namespace sgb
