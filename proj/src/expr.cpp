#include "sgb/expr.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <sstream>

#include "sgb/error.hpp"

namespace sgb {

const char *to_string(ErrorCode code) {
  switch (code) {
  case ErrorCode::SyntaxError:
    return "SyntaxError";
  case ErrorCode::NotPrime:
    return "NotPrime";
  case ErrorCode::ZeroExponent:
    return "ZeroExponent";
  case ErrorCode::TooLarge:
    return "TooLarge";
  case ErrorCode::TooMany:
    return "TooMany";
  case ErrorCode::NoWitness:
    return "NoWitness";
  case ErrorCode::PreconditionFailed:
    return "PreconditionFailed";
  case ErrorCode::BadParameters:
    return "BadParameters";
  }
  return "Unknown";
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Characteristic

Characteristic::Characteristic(std::map<Prime, Cardinal> entries) {
  for (auto &[p, h] : entries)
    if (!h.is_zero())
      entries_.emplace(p, h);
}

Characteristic Characteristic::rationals() {
  Characteristic c;
  c.all_infinite_ = true;
  return c;
}

Cardinal Characteristic::at(Prime p) const {
  if (all_infinite_)
    return Cardinal::omega();
  auto it = entries_.find(p);
  return it == entries_.end() ? Cardinal(0) : it->second;
}

std::string Characteristic::to_string() const {
  if (all_infinite_)
    return "Q";
  if (entries_.empty())
    return "Z";
  std::string out = "R{";
  bool first = true;
  for (auto &[p, h] : entries_) {
    if (!first)
      out += ",";
    first = false;
    out += std::to_string(p) + ":" +
           (h.is_infinite() ? std::string("inf") : std::to_string(h.value()));
  }
  return out + "}";
}

bool types_equivalent(const Characteristic &a, const Characteristic &b) {
  if (a.is_rationals() || b.is_rationals())
    return a.is_rationals() == b.is_rationals();
  std::set<Prime> keys;
  for (auto &[p, h] : a.entries())
    keys.insert(p);
  for (auto &[p, h] : b.entries())
    keys.insert(p);
  for (Prime p : keys) {
    Cardinal x = a.at(p), y = b.at(p);
    if (x != y && (x.is_infinite() || y.is_infinite()))
      return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Atoms

bool is_torsion(const Atom &a) {
  return std::holds_alternative<CyclicP>(a) ||
         std::holds_alternative<Quasicyclic>(a);
}

bool is_divisible(const Atom &a) {
  if (std::holds_alternative<Quasicyclic>(a))
    return true;
  if (auto *r = std::get_if<RankOne>(&a))
    return r->type.is_rationals();
  return false;
}

std::string render(const Atom &a) {
  if (auto *c = std::get_if<CyclicP>(&a)) {
    if (c->exponent == 1)
      return "Z(" + std::to_string(c->p) + ")";
    return "Z(" + std::to_string(c->p) + "^" + std::to_string(c->exponent) +
           ")";
  }
  if (auto *q = std::get_if<Quasicyclic>(&a))
    return "Z(" + std::to_string(q->p) + "^inf)";
  if (auto *r = std::get_if<RankOne>(&a))
    return r->type.to_string();
  return "TF(" + std::to_string(std::get<OpaqueTF>(a).rank) + ")";
}

namespace {

// torsion (p, kind, e) < RankOne (by text) < opaque (by rank)
struct AtomKey {
  int group;
  Prime p = 0;
  int kind = 0;
  unsigned number = 0;
  std::string text;
  auto operator<=>(const AtomKey &) const = default;
};

AtomKey key_of(const Atom &a) {
  if (auto *c = std::get_if<CyclicP>(&a))
    return {0, c->p, 0, c->exponent, {}};
  if (auto *q = std::get_if<Quasicyclic>(&a))
    return {0, q->p, 1, 0, {}};
  if (auto *r = std::get_if<RankOne>(&a))
    return {1, 0, 0, 0, r->type.to_string()};
  return {2, 0, 0, std::get<OpaqueTF>(a).rank, {}};
}

} // namespace

bool atom_less(const Atom &a, const Atom &b) { return key_of(a) < key_of(b); }

// ---------------------------------------------------------------------------
// GroupExpr

GroupExpr::GroupExpr(std::vector<Term> terms) {
  std::stable_sort(
      terms.begin(), terms.end(),
      [](const Term &a, const Term &b) { return atom_less(a.atom, b.atom); });
  for (auto &t : terms) {
    if (t.multiplicity.is_zero())
      continue;
    if (!terms_.empty() && terms_.back().atom == t.atom)
      terms_.back().multiplicity += t.multiplicity;
    else
      terms_.push_back(std::move(t));
  }
}

GroupExpr operator+(const GroupExpr &a, const GroupExpr &b) {
  std::vector<Term> all = a.terms_;
  all.insert(all.end(), b.terms_.begin(), b.terms_.end());
  return GroupExpr(std::move(all));
}

namespace {
template <class Pred> GroupExpr filter(const GroupExpr &e, Pred pred) {
  std::vector<Term> out;
  for (auto &t : e.terms())
    if (pred(t.atom))
      out.push_back(t);
  return GroupExpr(std::move(out));
}

Prime prime_of(const Atom &a) {
  if (auto *c = std::get_if<CyclicP>(&a))
    return c->p;
  return std::get<Quasicyclic>(a).p;
}
} // namespace

GroupExpr GroupExpr::torsion_part() const {
  return filter(*this, [](const Atom &a) { return is_torsion(a); });
}

GroupExpr GroupExpr::torsion_free_part() const {
  return filter(*this, [](const Atom &a) { return !is_torsion(a); });
}

GroupExpr GroupExpr::primary_component(Prime p) const {
  return filter(
      *this, [p](const Atom &a) { return is_torsion(a) && prime_of(a) == p; });
}

bool GroupExpr::has_torsion() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term &t) { return is_torsion(t.atom); });
}

bool GroupExpr::has_torsion_free() const {
  return std::any_of(terms_.begin(), terms_.end(),
                     [](const Term &t) { return !is_torsion(t.atom); });
}

bool GroupExpr::wholly_divisible() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const Term &t) { return is_divisible(t.atom); });
}

std::set<Prime> GroupExpr::torsion_primes() const {
  std::set<Prime> out;
  for (auto &t : terms_)
    if (is_torsion(t.atom))
      out.insert(prime_of(t.atom));
  return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupExpr parse_expr() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      if (!at_end())
        fail(ErrorCode::SyntaxError, "unexpected input after \"0\"");
      return GroupExpr();
    }
    std::vector<Term> terms;
    terms.push_back(parse_term());
    skip_ws();
    while (!at_end()) {
      expect('+');
      terms.push_back(parse_term());
      skip_ws();
    }
    return GroupExpr(std::move(terms));
  }

private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(ErrorCode code, const std::string &msg) const {
    throw ParseError(code, pos_, msg);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (peek() != c)
      fail(ErrorCode::SyntaxError, std::string("expected '") + c + "'");
    ++pos_;
  }

  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }

  std::uint64_t parse_nat() {
    skip_ws();
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail(ErrorCode::SyntaxError, "expected a natural number");
    std::uint64_t value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      auto digit = static_cast<std::uint64_t>(peek() - '0');
      if (value > (std::numeric_limits<std::uint32_t>::max() - digit) / 10)
        fail(ErrorCode::SyntaxError, "number too large");
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  Prime parse_prime() {
    skip_ws();
    std::size_t at = pos_;
    std::uint64_t p = parse_nat();
    if (!is_prime(p))
      throw ParseError(ErrorCode::NotPrime, at,
                       std::to_string(p) + " is not prime");
    return p;
  }

  // nat | "inf"; nullopt means inf
  std::optional<std::uint64_t> parse_nat_or_inf() {
    if (accept("inf"))
      return std::nullopt;
    return parse_nat();
  }

  Term parse_term() {
    Atom atom = parse_atom();
    Cardinal mult(1);
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      if (accept("w")) {
        mult = Cardinal::omega();
      } else {
        std::size_t at = pos_;
        std::uint64_t n = parse_nat();
        if (n == 0)
          throw ParseError(ErrorCode::SyntaxError, at,
                           "multiplicity must be at least 1");
        mult = Cardinal(n);
      }
    }
    return Term{std::move(atom), mult};
  }

  Atom parse_atom() {
    skip_ws();
    if (accept("TF")) {
      expect('(');
      skip_ws();
      std::size_t at = pos_;
      std::uint64_t r = parse_nat();
      if (r == 0)
        throw ParseError(ErrorCode::SyntaxError, at, "rank must be at least 1");
      expect(')');
      return OpaqueTF{static_cast<unsigned>(r)};
    }
    if (accept("Q"))
      return RankOne{Characteristic::rationals()};
    if (accept("R")) {
      expect('{');
      std::map<Prime, Cardinal> entries;
      skip_ws();
      if (peek() != '}') {
        do {
          skip_ws();
          std::size_t at = pos_;
          Prime p = parse_prime();
          if (entries.count(p))
            throw ParseError(ErrorCode::SyntaxError, at,
                             "prime " + std::to_string(p) + " listed twice");
          expect(':');
          auto h = parse_nat_or_inf();
          entries.emplace(p, h ? Cardinal(*h) : Cardinal::omega());
          skip_ws();
        } while (peek() == ',' && (++pos_, true));
      }
      expect('}');
      return RankOne{Characteristic(std::move(entries))};
    }
    if (accept("Z")) {
      skip_ws();
      if (peek() != '(')
        return RankOne{Characteristic::integers()};
      ++pos_;
      Prime p = parse_prime();
      skip_ws();
      if (peek() == ')') {
        ++pos_;
        return CyclicP{p, 1};
      }
      expect('^');
      skip_ws();
      std::size_t at = pos_;
      auto e = parse_nat_or_inf();
      expect(')');
      if (!e)
        return Quasicyclic{p};
      if (*e == 0)
        throw ParseError(ErrorCode::ZeroExponent, at, "exponent must be >= 1");
      return CyclicP{p, static_cast<unsigned>(*e)};
    }
    fail(ErrorCode::SyntaxError, "expected an atom");
  }
};

} // namespace

GroupExpr parse(std::string_view text) { return Parser(text).parse_expr(); }

std::string render(const GroupExpr &expr) {
  if (expr.is_zero())
    return "0";
  std::string out;
  for (auto &t : expr.terms()) {
    if (!out.empty())
      out += " + ";
    out += render(t.atom);
    if (t.multiplicity != Cardinal(1))
      out += "^" + t.multiplicity.to_string();
  }
  return out;
}

// ---------------------------------------------------------------------------
// Invariants

Cardinal UlmProfile::at(unsigned alpha) const {
  auto it = f.find(alpha);
  return it == f.end() ? Cardinal(0) : it->second;
}

Cardinal UlmProfile::reduced_rank() const { return tail(0); }

Cardinal UlmProfile::tail(unsigned alpha) const {
  Cardinal sum(0);
  for (auto it = f.lower_bound(alpha); it != f.end(); ++it)
    sum += it->second;
  return sum;
}

std::optional<unsigned> UlmProfile::max_support() const {
  if (f.empty())
    return std::nullopt;
  return f.rbegin()->first;
}

UlmProfile ulm_profile(const GroupExpr &expr, Prime p) {
  UlmProfile prof;
  prof.p = p;
  for (auto &t : expr.terms()) {
    if (auto *c = std::get_if<CyclicP>(&t.atom); c && c->p == p)
      prof.f[c->exponent - 1] += t.multiplicity;
    else if (auto *q = std::get_if<Quasicyclic>(&t.atom); q && q->p == p)
      prof.div_rank += t.multiplicity;
  }
  return prof;
}

Cardinal StructuralSummary::p_rank(Prime p) const {
  auto it = profiles.find(p);
  if (it == profiles.end())
    return Cardinal(0);
  return it->second.div_rank + it->second.reduced_rank();
}

bool StructuralSummary::bounded(Prime) const {
  // f has finite support, so the reduced p-part has exponent p^(max α + 1).
  return true;
}

Cardinal StructuralSummary::final_rank(Prime p) const {
  auto it = profiles.find(p);
  if (it == profiles.end())
    return Cardinal(0);
  const UlmProfile &prof = it->second;
  unsigned last = prof.max_support().value_or(0) + 1;
  Cardinal best = prof.div_rank + prof.tail(0);
  for (unsigned k = 1; k <= last; ++k)
    best = std::min(best, prof.div_rank + prof.tail(k));
  return best;
}

StructuralSummary summary(const GroupExpr &expr) {
  StructuralSummary s;
  s.primes = expr.torsion_primes();
  for (Prime p : s.primes)
    s.profiles.emplace(p, ulm_profile(expr, p));
  for (auto &t : expr.terms()) {
    if (auto *r = std::get_if<RankOne>(&t.atom)) {
      if (r->type.is_rationals()) {
        s.tf_rank_divisible += t.multiplicity;
      } else {
        s.tf_rank_reduced += t.multiplicity;
        s.reduced_tf_types.push_back(r->type);
      }
    } else if (auto *o = std::get_if<OpaqueTF>(&t.atom)) {
      s.tf_rank_reduced += Cardinal(o->rank) * t.multiplicity;
      s.has_opaque_tf = true;
    }
  }
  return s;
}

} // namespace sgb
