#include "sgb/intmat.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <tuple>
#include <utility>

namespace sgb {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::diagonal(std::span<const std::int64_t> d) {
  IntMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i)
    m(i, i) = d[i];
  return m;
}

void IntMatrix::append_row(std::span<const std::int64_t> r) {
  if (rows_ == 0 && cols_ == 0)
    cols_ = r.size();
  if (r.size() != cols_)
    throw std::invalid_argument("append_row: column count mismatch");
  data_.insert(data_.end(), r.begin(), r.end());
  ++rows_;
}

void IntMatrix::append_rows(const IntMatrix &other) {
  for (std::size_t i = 0; i < other.rows(); ++i)
    append_row(other.row(i));
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

namespace {

// g = x*a + y*b, g = gcd(a, b) >= 0
std::tuple<std::int64_t, std::int64_t, std::int64_t> ext_gcd(std::int64_t a,
                                                             std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::make_pair(r, old_r - q * r);
    std::tie(old_s, s) = std::make_pair(s, old_s - q * s);
    std::tie(old_t, t) = std::make_pair(t, old_t - q * t);
  }
  if (old_r < 0)
    return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("integer matrix entry overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    throw std::overflow_error("integer matrix entry overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("integer matrix entry overflow");
  return r;
}

} // namespace

namespace {

// Eliminate row r into the upper-triangular pivot rows of h (each pivot row
// j has zeros before column j). All entries right of a pivot stay in
// [0, modulus).
void eliminate_into(IntMatrix &h, std::int64_t *r, std::int64_t modulus) {
  const std::size_t n = h.cols();
  for (std::size_t j = 0; j < n; ++j) {
    if (r[j] == 0)
      continue;
    std::int64_t *piv = h.row(j).data();
    const std::int64_t a = piv[j], b = r[j];
    auto [g, x, y] = ext_gcd(a, b);
    const std::int64_t ag = a / g, bg = b / g;
    piv[j] = g;
    r[j] = 0;
    for (std::size_t k = j + 1; k < n; ++k) {
      const std::int64_t pk = piv[k], rk = r[k];
      piv[k] = mod_floor(x * pk + y * rk, modulus);
      r[k] = mod_floor(bg * pk - ag * rk, modulus);
    }
  }
}

// Entries above each pivot into [0, pivot); later columns are kept below
// the modulus and fixed when their own pivot is processed.
void reduce_above_pivots(IntMatrix &h, std::int64_t modulus) {
  const std::size_t n = h.cols();
  for (std::size_t j = 1; j < n; ++j) {
    const std::int64_t d = h(j, j);
    for (std::size_t i = 0; i < j; ++i) {
      const std::int64_t q = (h(i, j) - mod_floor(h(i, j), d)) / d;
      if (q == 0)
        continue;
      h(i, j) -= q * d;
      for (std::size_t k = j + 1; k < n; ++k)
        h(i, k) = mod_floor(h(i, k) - q * h(j, k), modulus);
    }
  }
}

} // namespace

IntMatrix hnf_mod(const IntMatrix &gens, std::int64_t modulus) {
  if (modulus <= 0)
    throw std::invalid_argument("hnf_mod: modulus must be positive");
  const std::size_t n = gens.cols();
  // modulus·e_j lies in the lattice, so the pivots start from modulus·I.
  IntMatrix h(n, n);
  for (std::size_t j = 0; j < n; ++j)
    h(j, j) = modulus;
  std::vector<std::int64_t> r(n);
  for (std::size_t i = 0; i < gens.rows(); ++i) {
    for (std::size_t k = 0; k < n; ++k)
      r[k] = mod_floor(gens(i, k), modulus);
    eliminate_into(h, r.data(), modulus);
  }
  reduce_above_pivots(h, modulus);
  return h;
}

IntMatrix hnf_insert(const IntMatrix &hnf, std::span<const std::int64_t> v,
                     std::int64_t modulus) {
  IntMatrix h = hnf;
  std::vector<std::int64_t> r(v.size());
  for (std::size_t k = 0; k < v.size(); ++k)
    r[k] = mod_floor(v[k], modulus);
  eliminate_into(h, r.data(), modulus);
  reduce_above_pivots(h, modulus);
  return h;
}

std::int64_t triangular_det(const IntMatrix &m) {
  std::int64_t d = 1;
  for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
    d = checked_mul(d, m(i, i));
  return d;
}

bool in_lattice(const IntMatrix &hnf, std::span<const std::int64_t> v) {
  const std::size_t n = hnf.cols();
  // The lattice contains det·Z^n, so work modulo det.
  const std::int64_t det = triangular_det(hnf);
  std::int64_t small[16];
  std::vector<std::int64_t> big;
  std::int64_t *w = small;
  if (n > 16) {
    big.resize(n);
    w = big.data();
  }
  for (std::size_t k = 0; k < n; ++k)
    w[k] = mod_floor(v[k], det);
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] == 0)
      continue;
    const std::int64_t d = hnf(j, j);
    if (w[j] % d != 0)
      return false;
    const std::int64_t q = w[j] / d;
    for (std::size_t k = j; k < n; ++k)
      w[k] = mod_floor(w[k] - q * hnf(j, k), det);
  }
  return true;
}

std::vector<std::int64_t> lattice_coordinates(const IntMatrix &basis,
                                              std::span<const std::int64_t> v) {
  const std::size_t n = basis.cols();
  std::vector<std::int64_t> w(v.begin(), v.end()), c(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    const std::int64_t d = basis(j, j);
    if (w[j] % d != 0)
      throw std::domain_error("lattice_coordinates: vector not in lattice");
    c[j] = w[j] / d;
    for (std::size_t k = j; k < n; ++k)
      w[k] = checked_sub(w[k], checked_mul(c[j], basis(j, k)));
  }
  return c;
}

SmithForm smith_form(const IntMatrix &input) {
  const std::size_t n = input.rows();
  if (input.cols() != n)
    throw std::invalid_argument("smith_form: matrix must be square");
  IntMatrix a = input;
  IntMatrix vinv = IntMatrix::identity(n);

  auto swap_rows = [&](IntMatrix &m, std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t k = 0; k < m.cols(); ++k)
        std::swap(m(i, k), m(j, k));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j)
      return;
    for (std::size_t k = 0; k < n; ++k)
      std::swap(a(k, i), a(k, j));
    swap_rows(vinv, i, j);
  };
  // row_i -= q·row_t of a (left multiplication, not tracked)
  auto row_sub = [&](std::size_t i, std::size_t t, std::int64_t q) {
    for (std::size_t k = 0; k < n; ++k)
      a(i, k) = checked_sub(a(i, k), checked_mul(q, a(t, k)));
  };
  // col_j -= q·col_t of a; V^{-1} gets row_t += q·row_j
  auto col_sub = [&](std::size_t j, std::size_t t, std::int64_t q) {
    for (std::size_t k = 0; k < n; ++k)
      a(k, j) = checked_sub(a(k, j), checked_mul(q, a(k, t)));
    for (std::size_t k = 0; k < n; ++k)
      vinv(t, k) = checked_add(vinv(t, k), checked_mul(q, vinv(j, k)));
  };

  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      std::size_t bi = n, bj = n;
      for (std::size_t i = t; i < n; ++i)
        for (std::size_t j = t; j < n; ++j)
          if (a(i, j) != 0 &&
              (bi == n || std::llabs(a(i, j)) < std::llabs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == n)
        throw std::domain_error("smith_form: matrix is singular");
      swap_rows(a, t, bi);
      swap_cols(t, bj);

      bool clean = true;
      for (std::size_t i = t + 1; i < n; ++i)
        if (a(i, t) != 0) {
          row_sub(i, t, a(i, t) / a(t, t));
          clean &= a(i, t) == 0;
        }
      for (std::size_t j = t + 1; j < n; ++j)
        if (a(t, j) != 0) {
          col_sub(j, t, a(t, j) / a(t, t));
          clean &= a(t, j) == 0;
        }
      if (!clean)
        continue;
      // divisibility of the remaining block by the pivot
      bool divides = true;
      for (std::size_t i = t + 1; i < n && divides; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (a(i, j) % a(t, t) != 0) {
            for (std::size_t k = 0; k < n; ++k)
              a(t, k) = checked_add(a(t, k), a(i, k));
            divides = false;
            break;
          }
      if (divides)
        break;
    }
  }

  SmithForm out;
  out.diagonal.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    out.diagonal[i] = std::llabs(a(i, i));
  out.v_inverse = std::move(vinv);
  return out;
}

} // namespace sgb
