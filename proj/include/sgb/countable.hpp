#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sgb/pgroup.hpp"

namespace sgb {

/// One family of direct summands: copies of Z(p^e) or of Z(p^∞), indexed by
/// 0..size-1, or by all naturals when size is empty.
struct Schema {
  enum class Kind { Cyclic, Quasicyclic };
  std::string name;
  Kind kind = Kind::Cyclic;
  unsigned exponent = 1; // Cyclic only
  std::optional<std::uint64_t> size;
};

/// A coordinate: the integer num mod p^e for cyclic schemas, the rational
/// num / p^den_exp mod 1 in lowest terms for quasicyclic ones.
struct Coord {
  std::int64_t num = 0;
  unsigned den_exp = 0;
  friend bool operator==(const Coord &, const Coord &) = default;
  friend auto operator<=>(const Coord &, const Coord &) = default;
};

/// Finite-support element; zero coordinates are never stored.
struct FinSuppElement {
  std::map<std::pair<std::size_t, std::uint64_t>, Coord> support;
  friend bool operator==(const FinSuppElement &,
                         const FinSuppElement &) = default;
  friend auto operator<=>(const FinSuppElement &,
                          const FinSuppElement &) = default;
};

/// Direct sum of the schemas, possibly with countably many summands.
class CountablePGroup {
public:
  CountablePGroup(std::uint64_t p, std::vector<Schema> schemas);

  std::uint64_t p() const { return p_; }
  const std::vector<Schema> &schemas() const { return schemas_; }

  FinSuppElement zero() const { return {}; }
  /// a·(generator of copy `index` of a cyclic schema)
  FinSuppElement cyclic(std::size_t schema, std::uint64_t index,
                        std::int64_t a = 1) const;
  /// a / p^k in copy `index` of a quasicyclic schema
  FinSuppElement rational(std::size_t schema, std::uint64_t index,
                          std::int64_t a, unsigned k) const;

  FinSuppElement add(const FinSuppElement &a, const FinSuppElement &b) const;
  FinSuppElement negate(const FinSuppElement &a) const;
  FinSuppElement scale(std::int64_t k, const FinSuppElement &a) const;
  bool is_zero(const FinSuppElement &a) const { return a.support.empty(); }
  std::uint64_t order(const FinSuppElement &a) const;

  /// e.g. "Y[0]:1 + Z[3]:1/4", or "0"
  std::string to_string(const FinSuppElement &a) const;
  /// Inverse of to_string; repeated slots are added. Throws SyntaxError.
  FinSuppElement parse(const std::string &text) const;

  /// Put one coordinate of `schema` into lowest terms (or drop it when 0).
  void set_coord(FinSuppElement &x, std::size_t schema, std::uint64_t index,
                 std::int64_t num, unsigned den_exp) const;

private:
  void check_slot(std::size_t schema, std::uint64_t index) const;
  std::uint64_t p_;
  std::vector<Schema> schemas_;
};

/// Image rule for the generators of one source schema.
struct MapRule {
  enum class Kind {
    Zero,
    /// copy i ↦ multiplier·(copy i + offset, or copy fixed_index) of target
    Embed,
    /// quasicyclic a/p^k ↦ a/p^{k+1} (representative 0 ≤ a < p^k), same
    /// index in the target
    DivideIndex,
  };
  Kind kind = Kind::Zero;
  std::size_t target = 0;
  std::int64_t offset = 0;
  std::optional<std::uint64_t> fixed_index;
  std::int64_t multiplier = 1;

  static MapRule zero() { return {}; }
  static MapRule identity(std::size_t schema) {
    return {Kind::Embed, schema, 0, std::nullopt, 1};
  }
  static MapRule shift(std::size_t target, std::int64_t k) {
    return {Kind::Embed, target, k, std::nullopt, 1};
  }
  static MapRule embed(std::size_t target, std::uint64_t index,
                       std::int64_t multiplier) {
    return {Kind::Embed, target, 0, index, multiplier};
  }
  static MapRule divide_index(std::size_t target) {
    return {Kind::DivideIndex, target, 0, std::nullopt, 1};
  }
};

/// Map between countable groups given by one rule per source schema and
/// extended coordinatewise.
class GenMap {
public:
  GenMap(const CountablePGroup &source, const CountablePGroup &target,
         std::vector<MapRule> rules);
  FinSuppElement operator()(const FinSuppElement &x) const;

private:
  const CountablePGroup *source_, *target_;
  std::vector<MapRule> rules_;
};

/// All elements of the subgroup generated by finitely many torsion
/// elements. Throws TooLarge beyond `limit` elements.
std::set<FinSuppElement> finite_span(const CountablePGroup &g,
                                     const std::vector<FinSuppElement> &gens,
                                     std::uint64_t limit);

struct DemoCheck {
  std::string name;
  bool passed = true;
  std::uint64_t cases = 0;
  std::string detail;
};

struct DemoReport {
  std::string demo;
  std::vector<std::pair<std::string, std::int64_t>> parameters;
  std::vector<std::string> probes;
  std::vector<DemoCheck> checks;
  /// Named elements of the construction (x, N, sample images).
  std::vector<std::pair<std::string, std::string>> witnesses;
  bool passed() const;
};

/// G = Z(p^n) ⊕ ⊕_ω Z(p^m) with n + 2 ≤ m, N = ⟨y + z⟩ for y of order p in
/// Y and z of order p^2 in the first Z copy, and φ = (τ, σ) into the copies
/// 1, 2, 3, ... with τ(1_Y) = p^{m-n}·e_1 and σ(e_k) = e_{k+2}.
/// Empty probes: 1_Y and e_0..e_{depth-1}. Throws BadParameters.
DemoReport simplify_a_demo(std::uint64_t p, unsigned n, unsigned m,
                           unsigned depth,
                           const std::vector<FinSuppElement> &probes = {},
                           const Guards &guards = Guards{});

/// G = ⊕_ω Z(p^n) ⊕ Z(p^∞), N = ⟨y + z⟩ with y of order p in copy 0 and
/// z = 1/p^2, τ(e_k) = e_{k+1}, σ(a/p^k) = a/p^{k+1} read modulo N.
/// Empty probes: e_0..e_{depth-1} and 1/p^depth. Throws BadParameters.
DemoReport simplify_b_demo(std::uint64_t p, unsigned n, unsigned depth,
                           const std::vector<FinSuppElement> &probes = {},
                           const Guards &guards = Guards{});

/// The model groups of the two demos, for building probes.
CountablePGroup simplify_a_group(std::uint64_t p, unsigned n, unsigned m);
CountablePGroup simplify_b_group(std::uint64_t p, unsigned n);

} // namespace sgb
