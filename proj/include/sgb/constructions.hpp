#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "sgb/pgroup.hpp"

namespace sgb {

/// For G homocyclic of exponent n: a summand X ≅ ⊕ Z(p^n) of G containing H
/// with X[p] = H[p]. Each generator x_i of a cyclic decomposition of H is
/// p^{m_i}·y_i for some y_i of order p^n, and X = ⊕⟨y_i⟩.
/// Throws PreconditionFailed if the exponents of G differ.
Subgroup homocyclic_hull(const FinitePGroup &g, const Subgroup &h);

struct TwoGapWitness {
  std::size_t i = 0, j = 0;
  Element x;
  HeightSequence sequence;
  /// Whether some summand S has ⟨x⟩ essential in it (expected: false).
  bool hull_exists = false;
};

/// x = p^{e_i-1}·b_i + p^{e_j-2}·b_j for exponents with e_i + 1 < e_j.
/// Throws NoWitness if the pair does not satisfy that.
TwoGapWitness two_gap_witness(const FinitePGroup &g, std::size_t i,
                              std::size_t j);
/// Same, for the first pair (i, j) in index order whose exponents qualify.
TwoGapWitness two_gap_witness(const FinitePGroup &g);

/// Image of x under the projection onto H along K (G = H ⊕ K assumed).
Element project_element(const FinitePGroup &g, const Subgroup &h,
                        const Subgroup &k, const Element &x);

struct ProjectionResult {
  Subgroup image;
  /// Complement of the image inside H (H ∩ C).
  Subgroup complement_in_h;
};

/// Given G = A ⊕ C = H ⊕ K and N ⊆ A ∩ H with N essential in A, returns
/// π(A) for the projection π onto H along K, and checks that π is injective
/// on A, G = π(A) ⊕ C, π(A) is a summand of H and π fixes N.
/// Throws PreconditionFailed naming the first violated hypothesis, or
/// naming a failed postcondition.
ProjectionResult project_summand(const FinitePGroup &g, const Subgroup &a,
                                 const Subgroup &c, const Subgroup &h,
                                 const Subgroup &k, const Subgroup &n);

/// G = A ⊕ C.
bool is_direct_decomposition(const FinitePGroup &g, const Subgroup &a,
                             const Subgroup &c);

} // namespace sgb
