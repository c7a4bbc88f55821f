#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sgb/intmat.hpp"

namespace sgb {

/// Desk-scale limits. Environment variables SGB_MAX_ORDER and
/// SGB_MAX_SUBGROUPS override the defaults.
struct Guards {
  std::uint64_t max_order = std::uint64_t(1) << 20;
  std::uint64_t max_subgroups = 1'000'000;

  static Guards from_env();
};

/// Height of an element: a natural number or ∞ (for 0).
class Height {
public:
  constexpr Height() = default;
  constexpr explicit Height(unsigned v) : value_(static_cast<int>(v)) {}
  static constexpr Height infinity() {
    Height h;
    h.value_ = kInf;
    return h;
  }
  constexpr bool is_infinite() const { return value_ == kInf; }
  constexpr unsigned value() const { return static_cast<unsigned>(value_); }
  friend constexpr auto operator<=>(Height, Height) = default;
  std::string to_string() const {
    return is_infinite() ? "inf" : std::to_string(value_);
  }

private:
  static constexpr int kInf = 1 << 30;
  int value_ = 0;
};

struct HeightSequence {
  /// heights of x, px, p^2x, ... ending with the first ∞
  std::vector<Height> heights;
  /// positions k with heights[k+1] > heights[k] + 1 (the jump to ∞ counts)
  std::vector<std::size_t> gaps;
};

struct Element {
  std::vector<std::int64_t> coords;
  friend bool operator==(const Element &, const Element &) = default;
  friend auto operator<=>(const Element &, const Element &) = default;
};

/// ⊕ Z(p^{e_i}), modelled as Z^r / L with L = diag(p^{e_1}, ..., p^{e_r}).
/// Exponents keep the order they were given in; coordinate i lives in
/// Z(p^{e_i}).
class FinitePGroup {
public:
  std::uint64_t p() const { return p_; }
  const std::vector<unsigned> &exponents() const { return exponents_; }
  std::size_t rank() const { return exponents_.size(); }
  std::uint64_t order() const { return order_; }
  unsigned max_exponent() const { return max_exponent_; }
  std::int64_t modulus(std::size_t i) const { return moduli_[i]; }
  /// p^{max exponent}; every subgroup lattice contains this multiple of Z^r.
  std::int64_t lattice_modulus() const { return lattice_modulus_; }
  const IntMatrix &relations() const { return relations_; }

  Element zero() const { return Element{std::vector<std::int64_t>(rank(), 0)}; }
  Element basis(std::size_t i) const;
  /// Element number `index` in enumeration order (coordinate 0 fastest).
  Element element_at(std::uint64_t index) const;
  Element reduce(Element x) const;
  Element add(const Element &a, const Element &b) const;
  Element scale(std::int64_t k, const Element &a) const;
  bool is_zero(const Element &x) const;
  bool contains(const Element &x) const;
  std::uint64_t element_order(const Element &x) const;

  /// "p:[e1,e2,...]"
  std::string to_string() const;
  friend bool operator==(const FinitePGroup &a, const FinitePGroup &b) {
    return a.p_ == b.p_ && a.exponents_ == b.exponents_;
  }

private:
  friend FinitePGroup make_group(std::uint64_t, std::vector<unsigned>,
                                 const Guards &);
  std::uint64_t p_ = 2;
  std::vector<unsigned> exponents_;
  std::vector<std::int64_t> moduli_;
  std::uint64_t order_ = 1;
  unsigned max_exponent_ = 0;
  std::int64_t lattice_modulus_ = 1;
  IntMatrix relations_;
};

/// Throws NotPrime, BadParameters (exponent 0) or TooLarge.
FinitePGroup make_group(std::uint64_t p, std::vector<unsigned> exponents,
                        const Guards &guards = Guards{});

/// A subgroup as the lattice M with L ⊆ M ⊆ Z^r, in Hermite normal form;
/// equal subgroups have equal bases.
struct Subgroup {
  IntMatrix basis;
  friend bool operator==(const Subgroup &, const Subgroup &) = default;
  friend auto operator<=>(const Subgroup &a, const Subgroup &b) {
    return a.basis <=> b.basis;
  }
};

Height height(const FinitePGroup &g, const Element &x);
HeightSequence height_sequence(const FinitePGroup &g, const Element &x);

Subgroup zero_subgroup(const FinitePGroup &g);
Subgroup whole_group(const FinitePGroup &g);
Subgroup span(const FinitePGroup &g, std::span<const Element> gens);
Subgroup cyclic(const FinitePGroup &g, const Element &x);
/// G[p], generated by p^{e_i - 1}·b_i.
Subgroup socle(const FinitePGroup &g);
/// p^k G
Subgroup multiple_of_group(const FinitePGroup &g, unsigned k);

Subgroup sub_meet(const FinitePGroup &g, const Subgroup &a, const Subgroup &b);
Subgroup sub_join(const FinitePGroup &g, const Subgroup &a, const Subgroup &b);
bool sub_contains(const FinitePGroup &g, const Subgroup &h, const Element &x);
/// a ⊆ b
bool sub_le(const FinitePGroup &g, const Subgroup &a, const Subgroup &b);
/// H[p]
Subgroup socle_of(const FinitePGroup &g, const Subgroup &h);
/// p^k H
Subgroup multiple_of(const FinitePGroup &g, const Subgroup &h, unsigned k);

std::uint64_t sub_order(const FinitePGroup &g, const Subgroup &h);
bool is_zero(const FinitePGroup &g, const Subgroup &h);
/// Generators read off the basis rows (not independent in general).
std::vector<Element> generators(const FinitePGroup &g, const Subgroup &h);
/// Independent generators x_1..x_k with H = ⊕⟨x_i⟩, orders non-increasing.
std::vector<Element> cyclic_decomposition(const FinitePGroup &g,
                                          const Subgroup &h);

/// Exponents d_i (non-increasing) with H ≅ ⊕ Z(p^{d_i}).
std::vector<unsigned> structure(const FinitePGroup &g, const Subgroup &h);
/// Exponents of G/H.
std::vector<unsigned> quotient_structure(const FinitePGroup &g,
                                         const Subgroup &h);

/// H essential in G, by the socle criterion G[p] ⊆ H.
bool is_essential(const FinitePGroup &g, const Subgroup &h);
/// H essential in S: H ⊆ S and S[p] ⊆ H.
bool is_essential_in(const FinitePGroup &g, const Subgroup &h,
                     const Subgroup &s);
/// H ∩ p^kG = p^kH for every k up to the exponent of G.
bool is_pure(const FinitePGroup &g, const Subgroup &h);
/// Bounded groups: summand iff pure.
bool is_summand(const FinitePGroup &g, const Subgroup &h);
/// C with H ∩ C = 0 and H + C = G: brute-force search over all subgroups.
/// Throws TooLarge when the enumeration exceeds the guard.
std::optional<Subgroup> find_complement(const FinitePGroup &g,
                                        const Subgroup &h,
                                        const Guards &guards = Guards{});
std::optional<Subgroup> find_complement(const FinitePGroup &g,
                                        const Subgroup &h,
                                        std::span<const Subgroup> all);

/// Every subgroup exactly once, sorted by (order, basis). Throws TooMany
/// beyond `limit`.
std::vector<Subgroup> enumerate_subgroups(const FinitePGroup &g,
                                          std::uint64_t limit);

/// Some pure S with H ⊆ S and S[p] = H[p], found by a breadth-first search
/// over the socle-preserving extensions of H; nullopt if none is pure.
std::optional<Subgroup> essential_summand_oracle(const FinitePGroup &g,
                                                 const Subgroup &h);

/// Greedy scan in element order: adds x whenever the socle is unchanged.
/// The result is maximal among supergroups B ⊇ H with B[p] = H[p].
Subgroup max_socle_extension(const FinitePGroup &g, const Subgroup &h);

/// Precomputed subgroup lattice of one group, for exhaustive sweeps:
/// socles and purity of every subgroup, and pure subgroups indexed by socle.
class SubgroupCatalog {
public:
  SubgroupCatalog(const FinitePGroup &g, std::uint64_t limit);

  const FinitePGroup &group() const { return group_; }
  const std::vector<Subgroup> &subgroups() const { return subgroups_; }
  std::size_t size() const { return subgroups_.size(); }
  bool pure(std::size_t i) const { return pure_[i]; }
  const Subgroup &socle_at(std::size_t i) const { return socles_[i]; }
  std::size_t index_of(const Subgroup &h) const;

  /// Index of the first pure S with H ⊆ S and S[p] = H[p].
  std::optional<std::size_t> essential_summand(std::size_t h) const;

private:
  FinitePGroup group_;
  std::vector<Subgroup> subgroups_;
  std::vector<Subgroup> socles_;
  std::vector<bool> pure_;
  std::map<Subgroup, std::size_t> index_;
  std::map<Subgroup, std::vector<std::size_t>> pure_by_socle_;
};

/// "p:[e1,e2,...]"
FinitePGroup parse_group(const std::string &text,
                         const Guards &guards = Guards{});
/// "(a1,...,ar)", coordinates reduced into the group.
Element parse_element(const FinitePGroup &g, const std::string &text);
/// Elements separated by ";".
std::vector<Element> parse_elements(const FinitePGroup &g,
                                    const std::string &text);
std::string to_string(const Element &x);
std::string to_string(const HeightSequence &s);

/// All exponent partitions of `weight` (parts non-increasing).
std::vector<std::vector<unsigned>> partitions(unsigned weight);

} // namespace sgb
