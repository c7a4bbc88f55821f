#include "sgb/pgroup.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <set>
#include <sstream>
#include <unordered_set>

#include "sgb/error.hpp"
#include "sgb/expr.hpp"

namespace sgb {

Guards Guards::from_env() {
  Guards g;
  if (const char *v = std::getenv("SGB_MAX_ORDER"))
    g.max_order = std::strtoull(v, nullptr, 10);
  if (const char *v = std::getenv("SGB_MAX_SUBGROUPS"))
    g.max_subgroups = std::strtoull(v, nullptr, 10);
  return g;
}

// ---------------------------------------------------------------------------
// FinitePGroup

FinitePGroup make_group(std::uint64_t p, std::vector<unsigned> exponents,
                        const Guards &guards) {
  if (!is_prime(p))
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  FinitePGroup g;
  g.p_ = p;
  g.order_ = 1;
  for (unsigned e : exponents) {
    if (e == 0)
      throw Error(ErrorCode::BadParameters, "exponents must be >= 1");
    std::int64_t m = 1;
    for (unsigned k = 0; k < e; ++k) {
      m *= static_cast<std::int64_t>(p);
      g.order_ *= p;
      if (g.order_ > guards.max_order)
        throw Error(ErrorCode::TooLarge, "group order exceeds guard " +
                                             std::to_string(guards.max_order));
    }
    g.moduli_.push_back(m);
    g.max_exponent_ = std::max(g.max_exponent_, e);
  }
  g.exponents_ = std::move(exponents);
  g.lattice_modulus_ = 1;
  for (unsigned k = 0; k < g.max_exponent_; ++k)
    g.lattice_modulus_ *= static_cast<std::int64_t>(p);
  g.relations_ = IntMatrix::diagonal(g.moduli_);
  if (g.rank() == 0)
    g.relations_ = IntMatrix(0, 0);
  return g;
}

Element FinitePGroup::basis(std::size_t i) const {
  Element x = zero();
  x.coords[i] = 1 % moduli_[i];
  return x;
}

Element FinitePGroup::element_at(std::uint64_t index) const {
  Element x = zero();
  for (std::size_t i = 0; i < rank(); ++i) {
    auto m = static_cast<std::uint64_t>(moduli_[i]);
    x.coords[i] = static_cast<std::int64_t>(index % m);
    index /= m;
  }
  return x;
}

Element FinitePGroup::reduce(Element x) const {
  for (std::size_t i = 0; i < rank(); ++i)
    x.coords[i] = mod_floor(x.coords[i], moduli_[i]);
  return x;
}

Element FinitePGroup::add(const Element &a, const Element &b) const {
  Element x = a;
  for (std::size_t i = 0; i < rank(); ++i)
    x.coords[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
  return x;
}

Element FinitePGroup::scale(std::int64_t k, const Element &a) const {
  Element x = a;
  for (std::size_t i = 0; i < rank(); ++i)
    x.coords[i] = mod_floor(mod_floor(k, moduli_[i]) * a.coords[i], moduli_[i]);
  return x;
}

bool FinitePGroup::is_zero(const Element &x) const {
  return std::all_of(x.coords.begin(), x.coords.end(),
                     [](std::int64_t c) { return c == 0; });
}

bool FinitePGroup::contains(const Element &x) const {
  if (x.coords.size() != rank())
    return false;
  for (std::size_t i = 0; i < rank(); ++i)
    if (x.coords[i] < 0 || x.coords[i] >= moduli_[i])
      return false;
  return true;
}

std::uint64_t FinitePGroup::element_order(const Element &x) const {
  std::uint64_t ord = 1;
  Element y = x;
  while (!is_zero(y)) {
    y = scale(static_cast<std::int64_t>(p_), y);
    ord *= p_;
  }
  return ord;
}

std::string FinitePGroup::to_string() const {
  std::string s = std::to_string(p_) + ":[";
  for (std::size_t i = 0; i < rank(); ++i)
    s += (i ? "," : "") + std::to_string(exponents_[i]);
  return s + "]";
}

// ---------------------------------------------------------------------------
// Heights

namespace {
unsigned valuation(std::int64_t v, std::uint64_t p) {
  unsigned k = 0;
  auto pp = static_cast<std::int64_t>(p);
  while (v % pp == 0) {
    v /= pp;
    ++k;
  }
  return k;
}
} // namespace

Height height(const FinitePGroup &g, const Element &x) {
  Height h = Height::infinity();
  for (std::size_t i = 0; i < g.rank(); ++i) {
    std::int64_t c = mod_floor(x.coords[i], g.modulus(i));
    if (c != 0)
      h = std::min(h, Height(valuation(c, g.p())));
  }
  return h;
}

HeightSequence height_sequence(const FinitePGroup &g, const Element &x) {
  HeightSequence s;
  Element y = g.reduce(x);
  while (!g.is_zero(y)) {
    s.heights.push_back(height(g, y));
    y = g.scale(static_cast<std::int64_t>(g.p()), y);
  }
  s.heights.push_back(Height::infinity());
  for (std::size_t k = 0; k + 1 < s.heights.size(); ++k) {
    const Height next = s.heights[k + 1];
    if (next.is_infinite() || next.value() > s.heights[k].value() + 1)
      s.gaps.push_back(k);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Subgroup lattice

namespace {

Subgroup from_generators(const FinitePGroup &g, IntMatrix gens) {
  gens.append_rows(g.relations());
  if (g.rank() == 0)
    return Subgroup{};
  return Subgroup{hnf_mod(gens, g.lattice_modulus())};
}

bool lift_in(const Subgroup &h, const Element &x) {
  return in_lattice(h.basis, x.coords);
}

} // namespace

Subgroup zero_subgroup(const FinitePGroup &g) {
  return from_generators(g, IntMatrix(0, g.rank()));
}

Subgroup whole_group(const FinitePGroup &g) {
  return Subgroup{IntMatrix::identity(g.rank())};
}

Subgroup span(const FinitePGroup &g, std::span<const Element> gens) {
  IntMatrix m(0, g.rank());
  for (auto &x : gens)
    m.append_row(x.coords);
  return from_generators(g, std::move(m));
}

Subgroup cyclic(const FinitePGroup &g, const Element &x) {
  return span(g, std::span<const Element>(&x, 1));
}

Subgroup socle(const FinitePGroup &g) {
  std::vector<std::int64_t> d(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i)
    d[i] = g.modulus(i) / static_cast<std::int64_t>(g.p());
  return Subgroup{IntMatrix::diagonal(d)};
}

Subgroup multiple_of_group(const FinitePGroup &g, unsigned k) {
  std::vector<std::int64_t> d(g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    d[i] = 1;
    for (unsigned t = 0; t < std::min(k, g.exponents()[i]); ++t)
      d[i] *= static_cast<std::int64_t>(g.p());
  }
  return Subgroup{IntMatrix::diagonal(d)};
}

Subgroup sub_join(const FinitePGroup &g, const Subgroup &a, const Subgroup &b) {
  IntMatrix m = a.basis;
  m.append_rows(b.basis);
  return from_generators(g, std::move(m));
}

// Zassenhaus: the rows of HNF[[A, A], [B, 0]] with zero left half span
// (0, A ∩ B).
Subgroup sub_meet(const FinitePGroup &g, const Subgroup &a, const Subgroup &b) {
  const std::size_t r = g.rank();
  if (r == 0)
    return Subgroup{};
  IntMatrix m(2 * r, 2 * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k) {
      m(i, k) = a.basis(i, k);
      m(i, r + k) = a.basis(i, k);
      m(r + i, k) = b.basis(i, k);
    }
  IntMatrix h = hnf_mod(m, g.lattice_modulus());
  IntMatrix block(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t k = 0; k < r; ++k)
      block(i, k) = h(r + i, r + k);
  return Subgroup{hnf_mod(block, g.lattice_modulus())};
}

bool sub_contains(const FinitePGroup &g, const Subgroup &h, const Element &x) {
  return g.rank() == 0 || lift_in(h, x);
}

bool sub_le(const FinitePGroup &g, const Subgroup &a, const Subgroup &b) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    if (!in_lattice(b.basis, a.basis.row(i)))
      return false;
  return true;
}

Subgroup socle_of(const FinitePGroup &g, const Subgroup &h) {
  return sub_meet(g, h, socle(g));
}

Subgroup multiple_of(const FinitePGroup &g, const Subgroup &h, unsigned k) {
  std::int64_t pk = 1;
  for (unsigned t = 0; t < k; ++t)
    pk *= static_cast<std::int64_t>(g.p());
  IntMatrix m = h.basis;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      m(i, j) = mod_floor(m(i, j) * pk, g.lattice_modulus());
  return from_generators(g, std::move(m));
}

std::uint64_t sub_order(const FinitePGroup &g, const Subgroup &h) {
  if (g.rank() == 0)
    return 1;
  return g.order() / static_cast<std::uint64_t>(triangular_det(h.basis));
}

bool is_zero(const FinitePGroup &g, const Subgroup &h) {
  return sub_order(g, h) == 1;
}

std::vector<Element> generators(const FinitePGroup &g, const Subgroup &h) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < h.basis.rows(); ++i) {
    auto row = h.basis.row(i);
    Element x = g.reduce(Element{{row.begin(), row.end()}});
    if (!g.is_zero(x))
      out.push_back(std::move(x));
  }
  return out;
}

namespace {

// L expressed in the coordinates of H's basis; Z^r / rowspace ≅ H.
IntMatrix relations_in_basis(const FinitePGroup &g, const Subgroup &h) {
  IntMatrix c(g.rank(), g.rank());
  for (std::size_t i = 0; i < g.rank(); ++i) {
    auto coords = lattice_coordinates(h.basis, g.relations().row(i));
    for (std::size_t k = 0; k < g.rank(); ++k)
      c(i, k) = coords[k];
  }
  return c;
}

std::vector<unsigned> exponents_of(const std::vector<std::int64_t> &diag,
                                   std::uint64_t p) {
  std::vector<unsigned> out;
  for (std::int64_t d : diag)
    if (d > 1)
      out.push_back(valuation(d, p));
  std::sort(out.rbegin(), out.rend());
  return out;
}

} // namespace

std::vector<Element> cyclic_decomposition(const FinitePGroup &g,
                                          const Subgroup &h) {
  if (g.rank() == 0)
    return {};
  SmithForm snf = smith_form(relations_in_basis(g, h));
  std::vector<std::pair<std::int64_t, Element>> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) {
    if (snf.diagonal[i] == 1)
      continue;
    Element x = g.zero();
    for (std::size_t k = 0; k < g.rank(); ++k) {
      std::int64_t s = 0;
      for (std::size_t t = 0; t < g.rank(); ++t)
        s = mod_floor(s + mod_floor(snf.v_inverse(i, t), g.modulus(k)) *
                              h.basis(t, k),
                      g.modulus(k));
      x.coords[k] = s;
    }
    gens.emplace_back(snf.diagonal[i], std::move(x));
  }
  std::stable_sort(gens.begin(), gens.end(),
                   [](auto &a, auto &b) { return a.first > b.first; });
  std::vector<Element> out;
  for (auto &[d, x] : gens)
    out.push_back(std::move(x));
  return out;
}

std::vector<unsigned> structure(const FinitePGroup &g, const Subgroup &h) {
  if (g.rank() == 0)
    return {};
  return exponents_of(smith_form(relations_in_basis(g, h)).diagonal, g.p());
}

std::vector<unsigned> quotient_structure(const FinitePGroup &g,
                                         const Subgroup &h) {
  if (g.rank() == 0)
    return {};
  return exponents_of(smith_form(h.basis).diagonal, g.p());
}

bool is_essential(const FinitePGroup &g, const Subgroup &h) {
  return sub_le(g, socle(g), h);
}

bool is_essential_in(const FinitePGroup &g, const Subgroup &h,
                     const Subgroup &s) {
  return sub_le(g, h, s) && sub_le(g, socle_of(g, s), h);
}

bool is_pure(const FinitePGroup &g, const Subgroup &h) {
  for (unsigned k = 1; k < g.max_exponent(); ++k)
    if (sub_meet(g, h, multiple_of_group(g, k)) != multiple_of(g, h, k))
      return false;
  return true;
}

bool is_summand(const FinitePGroup &g, const Subgroup &h) {
  return is_pure(g, h);
}

std::optional<Subgroup> find_complement(const FinitePGroup &g,
                                        const Subgroup &h,
                                        std::span<const Subgroup> all) {
  const std::uint64_t want = g.order() / sub_order(g, h);
  const Subgroup zero = zero_subgroup(g), whole = whole_group(g);
  for (auto &c : all) {
    if (sub_order(g, c) != want)
      continue;
    if (sub_meet(g, h, c) == zero && sub_join(g, h, c) == whole)
      return c;
  }
  return std::nullopt;
}

std::optional<Subgroup> find_complement(const FinitePGroup &g,
                                        const Subgroup &h,
                                        const Guards &guards) {
  std::vector<Subgroup> all;
  try {
    all = enumerate_subgroups(g, guards.max_subgroups);
  } catch (const Error &e) {
    if (e.code() != ErrorCode::TooMany)
      throw;
    throw Error(ErrorCode::TooLarge,
                std::string("complement search: ") + e.what());
  }
  return find_complement(g, h, all);
}

namespace {

struct SubgroupHash {
  std::size_t operator()(const Subgroup &s) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : s.basis.data())
      h = (h ^ static_cast<std::uint64_t>(v)) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

} // namespace

std::vector<Subgroup> enumerate_subgroups(const FinitePGroup &g,
                                          std::uint64_t limit) {
  // Distinct cyclic subgroups, each with one generator.
  std::vector<std::pair<Element, Subgroup>> cyclics;
  {
    std::unordered_set<Subgroup, SubgroupHash> seen;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
      Element x = g.element_at(i);
      Subgroup c = cyclic(g, x);
      if (seen.insert(c).second)
        cyclics.emplace_back(std::move(x), std::move(c));
    }
  }
  const auto p = static_cast<std::int64_t>(g.p());

  // Every K ⊋ H has an intermediate H + ⟨x⟩ of index p over H, so growing
  // one layer at a time with px ∈ H reaches every subgroup.
  std::vector<Subgroup> out{zero_subgroup(g)};
  std::vector<Subgroup> layer = out;
  while (!layer.empty()) {
    std::unordered_set<Subgroup, SubgroupHash> next;
    for (auto &h : layer) {
      for (auto &[x, c] : cyclics) {
        if (sub_contains(g, h, x) || !sub_contains(g, h, g.scale(p, x)))
          continue;
        next.insert(
            Subgroup{hnf_insert(h.basis, x.coords, g.lattice_modulus())});
      }
      if (out.size() + next.size() > limit)
        throw Error(ErrorCode::TooMany,
                    "more than " + std::to_string(limit) + " subgroups");
    }
    layer.assign(next.begin(), next.end());
    std::sort(layer.begin(), layer.end());
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

std::optional<Subgroup> essential_summand_oracle(const FinitePGroup &g,
                                                 const Subgroup &h) {
  const Subgroup target = socle_of(g, h);
  const auto p = static_cast<std::int64_t>(g.p());
  std::set<Subgroup> seen{h};
  std::deque<Subgroup> queue{h};
  while (!queue.empty()) {
    Subgroup s = std::move(queue.front());
    queue.pop_front();
    if (is_pure(g, s))
      return s;
    for (std::uint64_t i = 1; i < g.order(); ++i) {
      Element x = g.element_at(i);
      if (sub_contains(g, s, x) || !sub_contains(g, s, g.scale(p, x)))
        continue;
      Subgroup k{hnf_insert(s.basis, x.coords, g.lattice_modulus())};
      if (socle_of(g, k) != target || !seen.insert(k).second)
        continue;
      queue.push_back(std::move(k));
    }
  }
  return std::nullopt;
}

Subgroup max_socle_extension(const FinitePGroup &g, const Subgroup &h) {
  // Rejections are permanent: if B + ⟨x⟩ gains socle, so does B' + ⟨x⟩ for
  // every B' ⊇ B. One pass therefore reaches a maximal B.
  const Subgroup target = socle_of(g, h);
  const auto p = static_cast<std::int64_t>(g.p());
  Subgroup b = h;
  Subgroup pb = multiple_of(g, b, 1);
  for (std::uint64_t i = 1; i < g.order(); ++i) {
    Element x = g.element_at(i);
    if (sub_contains(g, b, x))
      continue;
    // y = p^{d-1}x with p^d x the first multiple in B. If py ∈ pB, say
    // py = pb', then y - b' is a new socle element, so skip the full test.
    Element y = x;
    for (Element py = g.scale(p, y); !sub_contains(g, b, py);
         py = g.scale(p, y))
      y = py;
    if (sub_contains(g, pb, g.scale(p, y)))
      continue;
    Subgroup k{hnf_insert(b.basis, x.coords, g.lattice_modulus())};
    if (socle_of(g, k) == target) {
      b = std::move(k);
      pb = multiple_of(g, b, 1);
    }
  }
  return b;
}

// ---------------------------------------------------------------------------
// SubgroupCatalog

SubgroupCatalog::SubgroupCatalog(const FinitePGroup &g, std::uint64_t limit)
    : group_(g), subgroups_(enumerate_subgroups(g, limit)) {
  socles_.reserve(subgroups_.size());
  pure_.reserve(subgroups_.size());
  for (std::size_t i = 0; i < subgroups_.size(); ++i) {
    socles_.push_back(socle_of(g, subgroups_[i]));
    pure_.push_back(is_pure(g, subgroups_[i]));
    index_.emplace(subgroups_[i], i);
    if (pure_.back())
      pure_by_socle_[socles_.back()].push_back(i);
  }
}

std::size_t SubgroupCatalog::index_of(const Subgroup &h) const {
  return index_.at(h);
}

std::optional<std::size_t>
SubgroupCatalog::essential_summand(std::size_t h) const {
  auto it = pure_by_socle_.find(socles_[h]);
  if (it == pure_by_socle_.end())
    return std::nullopt;
  for (std::size_t s : it->second)
    if (sub_le(group_, subgroups_[h], subgroups_[s]))
      return s;
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Literals

namespace {

class Cursor {
public:
  explicit Cursor(const std::string &s) : s_(s) {}
  void skip_ws() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_])))
      ++i_;
  }
  bool accept(char c) {
    skip_ws();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c))
      throw ParseError(ErrorCode::SyntaxError, i_,
                       std::string("expected '") + c + "'");
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = i_;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+'))
      ++i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_])))
      ++i_;
    if (i_ == start || (i_ == start + 1 &&
                        !std::isdigit(static_cast<unsigned char>(s_[start]))))
      throw ParseError(ErrorCode::SyntaxError, start, "expected an integer");
    if (i_ - start > 12)
      throw ParseError(ErrorCode::SyntaxError, start, "integer too large");
    return std::stoll(s_.substr(start, i_ - start));
  }
  void finish() {
    skip_ws();
    if (i_ != s_.size())
      throw ParseError(ErrorCode::SyntaxError, i_, "trailing input");
  }

private:
  const std::string &s_;
  std::size_t i_ = 0;
};

} // namespace

FinitePGroup parse_group(const std::string &text, const Guards &guards) {
  Cursor c(text);
  std::int64_t p = c.integer();
  c.expect(':');
  c.expect('[');
  std::vector<unsigned> exps;
  if (!c.accept(']')) {
    do {
      std::int64_t e = c.integer();
      if (e < 0)
        throw Error(ErrorCode::BadParameters, "negative exponent");
      exps.push_back(static_cast<unsigned>(e));
    } while (c.accept(','));
    c.expect(']');
  }
  c.finish();
  if (p < 2)
    throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  return make_group(static_cast<std::uint64_t>(p), std::move(exps), guards);
}

Element parse_element(const FinitePGroup &g, const std::string &text) {
  Cursor c(text);
  c.expect('(');
  Element x;
  if (!c.accept(')')) {
    do
      x.coords.push_back(c.integer());
    while (c.accept(','));
    c.expect(')');
  }
  c.finish();
  if (x.coords.size() != g.rank())
    throw Error(ErrorCode::BadParameters,
                "element " + text + " has " + std::to_string(x.coords.size()) +
                    " coordinates, group has rank " + std::to_string(g.rank()));
  return g.reduce(std::move(x));
}

std::vector<Element> parse_elements(const FinitePGroup &g,
                                    const std::string &text) {
  std::vector<Element> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    if (part.find_first_not_of(" \t") == std::string::npos)
      continue;
    out.push_back(parse_element(g, part));
  }
  return out;
}

std::string to_string(const Element &x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.coords.size(); ++i)
    s += (i ? "," : "") + std::to_string(x.coords[i]);
  return s + ")";
}

std::string to_string(const HeightSequence &s) {
  std::string out = "(";
  for (std::size_t i = 0; i < s.heights.size(); ++i)
    out += (i ? "," : "") + s.heights[i].to_string();
  return out + ")";
}

std::vector<std::vector<unsigned>> partitions(unsigned weight) {
  std::vector<std::vector<unsigned>> out;
  std::vector<unsigned> current;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned left,
                                                    unsigned max_part) {
    if (left == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(left, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(left - part, part);
      current.pop_back();
    }
  };
  if (weight > 0)
    rec(weight, weight);
  return out;
}

} // namespace sgb
