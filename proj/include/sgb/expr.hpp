#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sgb/cardinal.hpp"

namespace sgb {

using Prime = std::uint64_t;

bool is_prime(std::uint64_t n);

/// Type of a rank-1 torsion-free group: prime -> p-height (natural or ∞),
/// zero at every unlisted prime. The all-∞ characteristic (the type of Q)
/// is not a finite map and is carried by a dedicated flag.
class Characteristic {
public:
  Characteristic() = default;
  /// Zero entries are dropped; an ∞ entry is stored as Cardinal::omega().
  explicit Characteristic(std::map<Prime, Cardinal> entries);

  static Characteristic rationals();
  static Characteristic integers() { return Characteristic(); }

  bool is_rationals() const { return all_infinite_; }
  bool is_integers() const { return !all_infinite_ && entries_.empty(); }
  const std::map<Prime, Cardinal> &entries() const { return entries_; }
  Cardinal at(Prime p) const;

  /// "Q", "Z" or "R{2:1,3:inf}".
  std::string to_string() const;

  friend bool operator==(const Characteristic &,
                         const Characteristic &) = default;
  friend auto operator<=>(const Characteristic &a, const Characteristic &b) {
    return a.to_string() <=> b.to_string();
  }

private:
  bool all_infinite_ = false;
  std::map<Prime, Cardinal> entries_;
};

/// Two characteristics define the same type iff they differ at finitely
/// many primes and only where both entries are finite.
bool types_equivalent(const Characteristic &a, const Characteristic &b);

struct CyclicP {
  Prime p;
  unsigned exponent;
  friend bool operator==(const CyclicP &, const CyclicP &) = default;
};
struct Quasicyclic {
  Prime p;
  friend bool operator==(const Quasicyclic &, const Quasicyclic &) = default;
};
struct RankOne {
  Characteristic type;
  friend bool operator==(const RankOne &, const RankOne &) = default;
};
/// Reduced torsion-free group of known finite rank and unknown structure.
struct OpaqueTF {
  unsigned rank;
  friend bool operator==(const OpaqueTF &, const OpaqueTF &) = default;
};

using Atom = std::variant<CyclicP, Quasicyclic, RankOne, OpaqueTF>;

bool is_torsion(const Atom &a);
bool is_divisible(const Atom &a);
std::string render(const Atom &a);
/// Total order used for canonical form.
bool atom_less(const Atom &a, const Atom &b);

struct Term {
  Atom atom;
  Cardinal multiplicity;
  friend bool operator==(const Term &, const Term &) = default;
};

/// Direct sum of atoms with multiplicities, kept in canonical form: sorted
/// by atom_less with equal atoms merged. The empty sum is the zero group.
class GroupExpr {
public:
  GroupExpr() = default;
  explicit GroupExpr(std::vector<Term> terms);

  const std::vector<Term> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Direct sum of two expressions.
  friend GroupExpr operator+(const GroupExpr &a, const GroupExpr &b);
  friend bool operator==(const GroupExpr &, const GroupExpr &) = default;

  /// Sub-expressions by kind of atom.
  GroupExpr torsion_part() const;
  GroupExpr torsion_free_part() const;
  GroupExpr primary_component(Prime p) const;

  bool has_torsion() const;
  bool has_torsion_free() const;
  bool wholly_divisible() const;
  std::set<Prime> torsion_primes() const;

private:
  std::vector<Term> terms_;
};

GroupExpr parse(std::string_view text);
std::string render(const GroupExpr &expr);

/// f(α) = multiplicity of Z(p^(α+1)) summands; div_rank counts Z(p^∞).
struct UlmProfile {
  Prime p = 2;
  std::map<unsigned, Cardinal> f;
  Cardinal div_rank;

  Cardinal at(unsigned alpha) const;
  Cardinal reduced_rank() const;
  /// Sum of f(β) over β >= alpha.
  Cardinal tail(unsigned alpha) const;
  std::optional<unsigned> max_support() const;
  friend bool operator==(const UlmProfile &, const UlmProfile &) = default;
};

UlmProfile ulm_profile(const GroupExpr &expr, Prime p);

struct StructuralSummary {
  std::set<Prime> primes;
  std::map<Prime, UlmProfile> profiles;
  Cardinal tf_rank_reduced;
  Cardinal tf_rank_divisible;
  std::vector<Characteristic> reduced_tf_types;
  bool has_opaque_tf = false;

  Cardinal p_rank(Prime p) const;
  /// Always true: every expressible reduced p-part is a finite sum of
  /// bounded atoms.
  bool bounded(Prime p) const;
  Cardinal final_rank(Prime p) const;
  Cardinal tf_rank() const { return tf_rank_reduced + tf_rank_divisible; }
};

StructuralSummary summary(const GroupExpr &expr);

} // namespace sgb
