#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace sgb {

/// Small dense integer matrix, row-major. Rows are lattice generators.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix diagonal(std::span<const std::int64_t> d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t &operator()(std::size_t i, std::size_t j) {
    return data_[i * cols_ + j];
  }
  std::int64_t operator()(std::size_t i, std::size_t j) const {
    return data_[i * cols_ + j];
  }
  std::span<std::int64_t> row(std::size_t i) {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const std::int64_t> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  void append_row(std::span<const std::int64_t> r);
  /// Stack `other` below this matrix (same column count).
  void append_rows(const IntMatrix &other);

  IntMatrix transposed() const;
  const std::vector<std::int64_t> &data() const { return data_; }

  friend bool operator==(const IntMatrix &, const IntMatrix &) = default;
  friend auto operator<=>(const IntMatrix &a, const IntMatrix &b) {
    return a.data_ <=> b.data_;
  }

private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::int64_t> data_;
};

/// Floor-style modulus with result in [0, m).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

/// Hermite normal form of the lattice spanned by the rows of `gens` together
/// with modulus·Z^n. Result is n×n, upper triangular, positive pivots each
/// dividing `modulus`, and entries above a pivot reduced into [0, pivot).
/// Entries never exceed the modulus, so arithmetic stays in 64 bits for
/// modulus < 2^31.
IntMatrix hnf_mod(const IntMatrix &gens, std::int64_t modulus);

/// HNF of the lattice of `hnf` (itself an hnf_mod result for the same
/// modulus) extended by v.
IntMatrix hnf_insert(const IntMatrix &hnf, std::span<const std::int64_t> v,
                     std::int64_t modulus);

/// Reduce v against an HNF basis; returns true iff v lies in the lattice.
bool in_lattice(const IntMatrix &hnf, std::span<const std::int64_t> v);

/// Coordinates c with c·basis = v for a nonsingular upper-triangular basis;
/// throws std::domain_error if v is not in the lattice.
std::vector<std::int64_t> lattice_coordinates(const IntMatrix &basis,
                                              std::span<const std::int64_t> v);

/// Product of the diagonal of a triangular matrix.
std::int64_t triangular_det(const IntMatrix &m);

struct SmithForm {
  /// Invariant factors d_1 | d_2 | ... (absolute values, square input).
  std::vector<std::int64_t> diagonal;
  /// V^{-1} where U·A·V = diag; row i of V^{-1} maps to the i-th cyclic
  /// generator of Z^n / rowspace(A).
  IntMatrix v_inverse;
};

/// Smith normal form of a square nonsingular integer matrix by elementary
/// row/column operations; overflow throws std::overflow_error.
SmithForm smith_form(const IntMatrix &a);

} // namespace sgb
