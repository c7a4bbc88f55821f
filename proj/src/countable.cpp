#include "sgb/countable.hpp"

#include <algorithm>
#include <functional>
#include <regex>

#include "sgb/error.hpp"
#include "sgb/expr.hpp"

namespace sgb {

namespace {

std::int64_t power(std::uint64_t p, unsigned k) {
  std::int64_t r = 1;
  for (unsigned t = 0; t < k; ++t)
    r *= static_cast<std::int64_t>(p);
  return r;
}

} // namespace

CountablePGroup::CountablePGroup(std::uint64_t p, std::vector<Schema> schemas)
    : p_(p), schemas_(std::move(schemas)) {
  for (auto &s : schemas_)
    if (s.kind == Schema::Kind::Cyclic && s.exponent == 0)
      throw Error(ErrorCode::BadParameters, "schema exponent must be >= 1");
}

void CountablePGroup::check_slot(std::size_t schema,
                                 std::uint64_t index) const {
  if (schema >= schemas_.size())
    throw Error(ErrorCode::BadParameters, "no such schema");
  if (schemas_[schema].size && index >= *schemas_[schema].size)
    throw Error(ErrorCode::BadParameters,
                "index out of range for " + schemas_[schema].name);
}

void CountablePGroup::set_coord(FinSuppElement &x, std::size_t schema,
                                std::uint64_t index, std::int64_t num,
                                unsigned den_exp) const {
  check_slot(schema, index);
  const auto key = std::make_pair(schema, index);
  const auto p = static_cast<std::int64_t>(p_);
  if (schemas_[schema].kind == Schema::Kind::Cyclic) {
    num = mod_floor(num, power(p_, schemas_[schema].exponent));
    den_exp = 0;
  } else {
    num = mod_floor(num, power(p_, den_exp));
    while (den_exp > 0 && num % p == 0) {
      num /= p;
      --den_exp;
    }
  }
  if (num == 0)
    x.support.erase(key);
  else
    x.support[key] = Coord{num, den_exp};
}

FinSuppElement CountablePGroup::cyclic(std::size_t schema, std::uint64_t index,
                                       std::int64_t a) const {
  check_slot(schema, index);
  if (schemas_[schema].kind != Schema::Kind::Cyclic)
    throw Error(ErrorCode::BadParameters, "schema is not cyclic");
  FinSuppElement x;
  set_coord(x, schema, index, a, 0);
  return x;
}

FinSuppElement CountablePGroup::rational(std::size_t schema,
                                         std::uint64_t index, std::int64_t a,
                                         unsigned k) const {
  check_slot(schema, index);
  if (schemas_[schema].kind != Schema::Kind::Quasicyclic)
    throw Error(ErrorCode::BadParameters, "schema is not quasicyclic");
  FinSuppElement x;
  set_coord(x, schema, index, a, k);
  return x;
}

FinSuppElement CountablePGroup::add(const FinSuppElement &a,
                                    const FinSuppElement &b) const {
  FinSuppElement x = a;
  for (auto &[key, cb] : b.support) {
    auto it = x.support.find(key);
    if (it == x.support.end()) {
      x.support.emplace(key, cb);
      continue;
    }
    const Coord ca = it->second;
    const unsigned k = std::max(ca.den_exp, cb.den_exp);
    const std::int64_t num =
        ca.num * power(p_, k - ca.den_exp) + cb.num * power(p_, k - cb.den_exp);
    set_coord(x, key.first, key.second, num, k);
  }
  return x;
}

FinSuppElement CountablePGroup::scale(std::int64_t k,
                                      const FinSuppElement &a) const {
  FinSuppElement x;
  for (auto &[key, c] : a.support) {
    const std::int64_t mod = schemas_[key.first].kind == Schema::Kind::Cyclic
                                 ? power(p_, schemas_[key.first].exponent)
                                 : power(p_, c.den_exp);
    set_coord(x, key.first, key.second, mod_floor(k, mod) * c.num, c.den_exp);
  }
  return x;
}

FinSuppElement CountablePGroup::negate(const FinSuppElement &a) const {
  return scale(-1, a);
}

std::uint64_t CountablePGroup::order(const FinSuppElement &a) const {
  std::uint64_t ord = 1;
  for (auto &[key, c] : a.support) {
    unsigned e = c.den_exp;
    if (schemas_[key.first].kind == Schema::Kind::Cyclic) {
      e = schemas_[key.first].exponent;
      for (std::int64_t v = c.num; v % static_cast<std::int64_t>(p_) == 0;
           v /= static_cast<std::int64_t>(p_))
        --e;
    }
    ord = std::max(ord, static_cast<std::uint64_t>(power(p_, e)));
  }
  return ord;
}

std::string CountablePGroup::to_string(const FinSuppElement &a) const {
  if (a.support.empty())
    return "0";
  std::string out;
  for (auto &[key, c] : a.support) {
    if (!out.empty())
      out += " + ";
    out += schemas_[key.first].name + "[" + std::to_string(key.second) +
           "]:" + std::to_string(c.num);
    if (schemas_[key.first].kind == Schema::Kind::Quasicyclic)
      out += "/" + std::to_string(power(p_, c.den_exp));
  }
  return out;
}

FinSuppElement CountablePGroup::parse(const std::string &text) const {
  static const std::regex zero(R"(\s*0\s*)");
  static const std::regex term(
      R"(\s*([A-Za-z]\w*)\[(\d+)\]:(-?\d+)(?:/(\d+))?\s*(\+|$))");
  FinSuppElement x;
  if (std::regex_match(text, zero))
    return x;
  auto bad = [&](const std::string &why) {
    return Error(ErrorCode::SyntaxError, "element '" + text + "': " + why);
  };
  auto pos = text.cbegin();
  std::smatch m;
  bool more = true;
  while (more) {
    if (!std::regex_search(pos, text.cend(), m, term,
                           std::regex_constants::match_continuous))
      throw bad("expected NAME[index]:num or NAME[index]:num/den");
    std::size_t schema = schemas_.size();
    for (std::size_t i = 0; i < schemas_.size(); ++i)
      if (schemas_[i].name == m[1].str())
        schema = i;
    if (schema == schemas_.size())
      throw bad("no schema named " + m[1].str());
    unsigned den_exp = 0;
    if (m[4].matched) {
      std::uint64_t den = std::stoull(m[4].str());
      while (den > 1 && den % p_ == 0) {
        den /= p_;
        ++den_exp;
      }
      if (den != 1)
        throw bad("denominator is not a power of " + std::to_string(p_));
      if (schemas_[schema].kind == Schema::Kind::Cyclic)
        throw bad("fraction in a cyclic schema");
    }
    FinSuppElement t;
    set_coord(t, schema, std::stoull(m[2].str()), std::stoll(m[3].str()),
              den_exp);
    x = add(x, t);
    more = m[5].str() == "+";
    pos = m[0].second;
  }
  if (pos != text.cend())
    throw bad("trailing input");
  return x;
}

GenMap::GenMap(const CountablePGroup &source, const CountablePGroup &target,
               std::vector<MapRule> rules)
    : source_(&source), target_(&target), rules_(std::move(rules)) {
  if (rules_.size() != source.schemas().size())
    throw Error(ErrorCode::BadParameters, "one map rule per source schema");
  for (std::size_t s = 0; s < rules_.size(); ++s) {
    const MapRule &r = rules_[s];
    if (r.kind == MapRule::Kind::Zero)
      continue;
    if (r.target >= target.schemas().size() ||
        source.schemas()[s].kind != target.schemas()[r.target].kind)
      throw Error(ErrorCode::BadParameters, "map rule changes schema kind");
    if (r.kind == MapRule::Kind::DivideIndex &&
        source.schemas()[s].kind != Schema::Kind::Quasicyclic)
      throw Error(ErrorCode::BadParameters,
                  "divide-index rule needs a quasicyclic schema");
  }
}

FinSuppElement GenMap::operator()(const FinSuppElement &x) const {
  FinSuppElement out;
  for (auto &[key, c] : x.support) {
    const MapRule &r = rules_[key.first];
    FinSuppElement img;
    switch (r.kind) {
    case MapRule::Kind::Zero:
      continue;
    case MapRule::Kind::Embed: {
      const std::int64_t idx =
          r.fixed_index ? static_cast<std::int64_t>(*r.fixed_index)
                        : static_cast<std::int64_t>(key.second) + r.offset;
      if (idx < 0)
        throw Error(ErrorCode::BadParameters, "shift leaves the index set");
      target_->set_coord(img, r.target, static_cast<std::uint64_t>(idx),
                         c.num * r.multiplier, c.den_exp);
      break;
    }
    case MapRule::Kind::DivideIndex:
      target_->set_coord(img, r.target, key.second, c.num, c.den_exp + 1);
      break;
    }
    out = target_->add(out, img);
  }
  return out;
}

std::set<FinSuppElement> finite_span(const CountablePGroup &g,
                                     const std::vector<FinSuppElement> &gens,
                                     std::uint64_t limit) {
  std::set<FinSuppElement> elems{g.zero()};
  for (const auto &x : gens) {
    if (elems.count(x))
      continue;
    std::set<FinSuppElement> next;
    const std::uint64_t ord = g.order(x);
    for (const auto &e : elems) {
      FinSuppElement y = e;
      for (std::uint64_t k = 0; k < ord; ++k) {
        next.insert(y);
        y = g.add(y, x);
      }
      if (next.size() > limit)
        throw Error(ErrorCode::TooLarge, "probe subgroup exceeds " +
                                             std::to_string(limit) +
                                             " elements");
    }
    elems = std::move(next);
  }
  return elems;
}

bool DemoReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const DemoCheck &c) { return c.passed; });
}

// ---------------------------------------------------------------------------
// Demos

namespace {

enum : std::size_t { kY = 0, kZ = 1 };

struct Tally {
  DemoCheck check;
  void expect(bool ok, const std::string &failure) {
    ++check.cases;
    if (!ok && check.passed) {
      check.passed = false;
      check.detail = failure;
    }
  }
};

DemoCheck single(std::string name, bool ok, std::string detail) {
  return DemoCheck{std::move(name), ok, 1, std::move(detail)};
}

void add_common_checks(DemoReport &rep, const CountablePGroup &g,
                       const GenMap &phi, const std::set<FinSuppElement> &n,
                       const std::vector<FinSuppElement> &probes,
                       const std::set<FinSuppElement> &sub,
                       const std::string &sub_name) {
  auto in_n = [&](const FinSuppElement &v) { return n.count(v) > 0; };
  auto differ = [&](const FinSuppElement &a, const FinSuppElement &b) {
    return g.add(a, g.negate(b));
  };

  Tally wd{{"well-defined mod N on probes", true, 0, ""}};
  for (auto &x : probes)
    wd.expect(in_n(phi(g.scale(static_cast<std::int64_t>(g.order(x)), x))) &&
                  in_n(g.scale(static_cast<std::int64_t>(g.order(x)), phi(x))),
              "order of " + g.to_string(x) + " does not kill its image");
  rep.checks.push_back(wd.check);

  Tally add{{"additive mod N on " + sub_name, true, 0, ""}};
  for (auto &s : sub)
    for (auto &x : probes)
      add.expect(in_n(differ(phi(g.add(s, x)), g.add(phi(s), phi(x)))),
                 "phi(" + g.to_string(s) + " + " + g.to_string(x) +
                     ") differs from the sum of images");
  rep.checks.push_back(add.check);

  Tally ker{{"kernel trivial on " + sub_name, true, 0, ""}};
  for (auto &s : sub)
    if (!g.is_zero(s))
      ker.expect(!in_n(phi(s)), "phi(" + g.to_string(s) + ") lies in N");
  rep.checks.push_back(ker.check);
}

std::set<FinSuppElement> span_limited(const CountablePGroup &g,
                                      const std::vector<FinSuppElement> &gens,
                                      const Guards &guards) {
  return finite_span(g, gens, guards.max_order);
}

} // namespace

CountablePGroup simplify_a_group(std::uint64_t p, unsigned n, unsigned m) {
  return CountablePGroup(p,
                         {Schema{"Y", Schema::Kind::Cyclic, n, 1},
                          Schema{"Z", Schema::Kind::Cyclic, m, std::nullopt}});
}

CountablePGroup simplify_b_group(std::uint64_t p, unsigned n) {
  return CountablePGroup(p, {Schema{"Y", Schema::Kind::Cyclic, n, std::nullopt},
                             Schema{"Z", Schema::Kind::Quasicyclic, 0, 1}});
}

DemoReport simplify_a_demo(std::uint64_t p, unsigned n, unsigned m,
                           unsigned depth,
                           const std::vector<FinSuppElement> &probes_in,
                           const Guards &guards) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1 || n + 2 > m)
    throw Error(ErrorCode::BadParameters,
                "simplify-a needs 1 <= n and n + 2 <= m");
  if (depth < 1)
    throw Error(ErrorCode::BadParameters, "depth must be >= 1");
  const CountablePGroup g = simplify_a_group(p, n, m);
  DemoReport rep;
  rep.demo = "simplify-a";
  rep.parameters = {{"p", static_cast<std::int64_t>(p)},
                    {"n", n},
                    {"m", m},
                    {"depth", depth}};

  const auto y = g.cyclic(kY, 0, power(p, n - 1));
  const auto z = g.cyclic(kZ, 0, power(p, m - 2));
  const auto x = g.add(y, z);
  const auto n_elems = span_limited(g, {x}, guards);
  // τ: Y → Z_2 (copy 1), σ: Z ≅ Z' (copies 2, 3, ...)
  const GenMap phi(
      g, g, {MapRule::embed(kZ, 1, power(p, m - n)), MapRule::shift(kZ, 2)});

  std::vector<FinSuppElement> probes = probes_in;
  if (probes.empty()) {
    probes.push_back(g.cyclic(kY, 0));
    for (unsigned k = 0; k < depth; ++k)
      probes.push_back(g.cyclic(kZ, k));
  }
  for (auto &pr : probes)
    rep.probes.push_back(g.to_string(pr));
  rep.witnesses = {{"y", g.to_string(y)},
                   {"z", g.to_string(z)},
                   {"x", g.to_string(x)},
                   {"phi(x)", g.to_string(phi(x))}};

  rep.checks.push_back(single("N nonzero", n_elems.size() == p * p,
                              "|N| = " + std::to_string(n_elems.size())));

  const auto sub = span_limited(g, probes, guards);
  add_common_checks(rep, g, phi, n_elems, probes, sub,
                    "probe subgroup (" + std::to_string(sub.size()) +
                        " elements)");
  rep.checks.push_back(single("phi(x) nonzero mod N", !n_elems.count(phi(x)),
                              "phi(x) = " + g.to_string(phi(x))));

  // The two-gap argument inside the finite summand Y ⊕ Z_1.
  const FinitePGroup fin = make_group(p, {n, m}, guards);
  Element fx = fin.zero();
  fx.coords[0] = power(p, n - 1);
  fx.coords[1] = power(p, m - 2);
  const HeightSequence seq = height_sequence(fin, fx);
  rep.witnesses.emplace_back("height sequence of x", to_string(seq));
  rep.checks.push_back(single("x has two gaps", seq.gaps.size() == 2,
                              "sequence " + to_string(seq)));
  const bool hull = essential_summand_oracle(fin, cyclic(fin, fx)).has_value();
  rep.checks.push_back(
      single("<x> essential in no summand of " + fin.to_string(), !hull,
             hull ? "oracle found a summand" : "oracle returned none"));
  return rep;
}

DemoReport simplify_b_demo(std::uint64_t p, unsigned n, unsigned depth,
                           const std::vector<FinSuppElement> &probes_in,
                           const Guards &guards) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (n < 1)
    throw Error(ErrorCode::BadParameters, "simplify-b needs n >= 1");
  if (depth < 1)
    throw Error(ErrorCode::BadParameters, "depth must be >= 1");
  const CountablePGroup g = simplify_b_group(p, n);
  DemoReport rep;
  rep.demo = "simplify-b";
  rep.parameters = {
      {"p", static_cast<std::int64_t>(p)}, {"n", n}, {"depth", depth}};

  const auto y = g.cyclic(kY, 0, power(p, n - 1));
  const auto z = g.rational(kZ, 0, 1, 2);
  const auto x = g.add(y, z);
  const auto n_elems = span_limited(g, {x}, guards);
  // τ: Y ≅ Y_1 (copies 1, 2, ...), σ: Z → (Y_2 ⊕ Z)/N
  const GenMap phi(g, g, {MapRule::shift(kY, 1), MapRule::divide_index(kZ)});
  auto in_n = [&](const FinSuppElement &v) { return n_elems.count(v) > 0; };

  std::vector<FinSuppElement> probes = probes_in;
  if (probes.empty()) {
    for (unsigned k = 0; k < depth; ++k)
      probes.push_back(g.cyclic(kY, k));
    probes.push_back(g.rational(kZ, 0, 1, depth));
  }
  for (auto &pr : probes)
    rep.probes.push_back(g.to_string(pr));
  const auto pz = g.rational(kZ, 0, 1, 1);
  rep.witnesses = {{"y", g.to_string(y)},
                   {"z", g.to_string(z)},
                   {"x", g.to_string(x)},
                   {"sigma(1/p)", g.to_string(phi(pz))}};

  rep.checks.push_back(single("N nonzero", n_elems.size() == p * p,
                              "|N| = " + std::to_string(n_elems.size())));
  rep.checks.push_back(single("p*z lies in N", in_n(pz), g.to_string(pz)));

  // σ alone on Z(p^∞)[p^depth]: discrepancies lie in ⟨1/p⟩ ⊆ N, and σ(a)
  // in N forces a = 0.
  std::vector<FinSuppElement> zt;
  for (std::int64_t a = 0; a < power(p, depth); ++a)
    zt.push_back(g.rational(kZ, 0, a, depth));
  const auto socle_z = finite_span(g, {pz}, guards.max_order);
  Tally disc{
      {"sigma discrepancy in <1/p> on Z[p^" + std::to_string(depth) + "]", true,
       0, ""}};
  for (auto &a : zt)
    for (auto &b : zt) {
      const auto d = g.add(g.add(phi(a), phi(b)), g.negate(phi(g.add(a, b))));
      disc.expect(socle_z.count(d) && in_n(d),
                  "sigma(" + g.to_string(a) + ") + sigma(" + g.to_string(b) +
                      ") - sigma(sum) = " + g.to_string(d));
    }
  rep.checks.push_back(disc.check);
  Tally inj{{"sigma injective mod N on Z[p^" + std::to_string(depth) + "]",
             true, 0, ""}};
  for (auto &a : zt)
    if (!g.is_zero(a))
      inj.expect(!in_n(phi(a)), "sigma(" + g.to_string(a) + ") lies in N");
  rep.checks.push_back(inj.check);
  rep.checks.push_back(single("sigma(1/p) nonzero mod N", !in_n(phi(pz)),
                              "sigma(1/p) = " + g.to_string(phi(pz))));

  const auto sub = span_limited(g, probes, guards);
  for (unsigned d = 1; d <= depth; ++d) {
    std::set<FinSuppElement> torsion;
    const auto pd = power(p, d);
    for (auto &s : sub)
      if (g.is_zero(g.scale(pd, s)))
        torsion.insert(s);
    const std::string name = "p^" + std::to_string(d) +
                             "-torsion of probe subgroup (" +
                             std::to_string(torsion.size()) + " elements)";
    DemoReport part;
    add_common_checks(part, g, phi, n_elems, probes, torsion, name);
    for (auto &c : part.checks)
      if (c.name.rfind("well-defined", 0) != 0 || d == 1)
        rep.checks.push_back(c);
  }
  return rep;
}

} // namespace sgb
