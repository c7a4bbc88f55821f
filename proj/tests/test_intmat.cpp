#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "sgb/intmat.hpp"

using namespace sgb;

namespace {

// Lattice points of rows(m) + mod·Z^n inside the box [0, mod)^n, by closure.
std::set<std::vector<std::int64_t>> box_points(const IntMatrix &m,
                                               std::int64_t mod) {
  const std::size_t n = m.cols();
  std::set<std::vector<std::int64_t>> pts{std::vector<std::int64_t>(n, 0)};
  std::vector<std::vector<std::int64_t>> frontier{
      std::vector<std::int64_t>(n, 0)};
  while (!frontier.empty()) {
    std::vector<std::vector<std::int64_t>> next;
    for (auto &v : frontier)
      for (std::size_t i = 0; i < m.rows(); ++i) {
        auto w = v;
        for (std::size_t k = 0; k < n; ++k)
          w[k] = mod_floor(w[k] + m(i, k), mod);
        if (pts.insert(w).second)
          next.push_back(w);
      }
    frontier = std::move(next);
  }
  return pts;
}

IntMatrix random_matrix(std::mt19937_64 &rng, std::size_t rows,
                        std::size_t cols, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> d(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j)
      m(i, j) = d(rng);
  return m;
}

bool is_hnf(const IntMatrix &h) {
  for (std::size_t i = 0; i < h.rows(); ++i) {
    if (h(i, i) <= 0)
      return false;
    for (std::size_t j = 0; j < i; ++j)
      if (h(i, j) != 0)
        return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, i) < 0 || h(k, i) >= h(i, i))
        return false;
  }
  return true;
}

} // namespace

TEST_CASE("hnf_mod of a diagonal lattice is itself") {
  std::vector<std::int64_t> d{2, 8};
  IntMatrix m = IntMatrix::diagonal(d);
  CHECK(hnf_mod(m, 8) == m);
}

TEST_CASE("hnf_mod spans the same lattice as its generators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::int64_t mod = trial % 2 ? 8 : 9;
    const std::size_t n = 1 + trial % 3;
    IntMatrix g = random_matrix(rng, 1 + trial % 4, n, 20);
    IntMatrix h = hnf_mod(g, mod);
    REQUIRE(is_hnf(h));
    CHECK(box_points(h, mod) == box_points(g, mod));
    // canonical: permuting and re-adding the generators changes nothing
    IntMatrix g2 = h;
    g2.append_rows(g);
    CHECK(hnf_mod(g2, mod) == h);
  }
}

TEST_CASE("in_lattice agrees with enumeration") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMatrix h = hnf_mod(random_matrix(rng, 2, 2, 9), 8);
    auto pts = box_points(h, 8);
    for (std::int64_t a = 0; a < 8; ++a)
      for (std::int64_t b = 0; b < 8; ++b) {
        std::vector<std::int64_t> v{a, b};
        CHECK(in_lattice(h, v) == (pts.count(v) > 0));
      }
  }
}

TEST_CASE("lattice_coordinates inverts the row combination") {
  IntMatrix b(2, 2);
  b(0, 0) = 2;
  b(0, 1) = 1;
  b(1, 1) = 4;
  std::vector<std::int64_t> v{6, 11};
  auto c = lattice_coordinates(b, v);
  CHECK(c == std::vector<std::int64_t>{3, 2});
  std::vector<std::int64_t> bad{1, 0};
  CHECK_THROWS_AS(lattice_coordinates(b, bad), std::domain_error);
}

TEST_CASE("smith_form invariant factors and generators") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 3;
    IntMatrix a = random_matrix(rng, n, n, 6);
    SmithForm s;
    try {
      s = smith_form(a);
    } catch (const std::domain_error &) {
      continue; // singular draw
    }
    std::int64_t prod = 1;
    for (std::size_t i = 0; i < n; ++i) {
      if (i + 1 < n && s.diagonal[i] != 0)
        CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
      prod *= s.diagonal[i];
    }
    // |Z^n / rowspace(A)| = |det A|: count points in the box [0, prod)^n
    if (prod <= 12 && n <= 2) {
      auto pts = box_points(a, prod);
      std::int64_t box = 1;
      for (std::size_t i = 0; i < n; ++i)
        box *= prod;
      CHECK(static_cast<std::int64_t>(pts.size()) * prod == box);
    }
    // d_i · (row i of V^{-1}) lies in rowspace(A)
    IntMatrix h = hnf_mod(a, prod);
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::int64_t> v(n);
      for (std::size_t k = 0; k < n; ++k)
        v[k] = s.diagonal[i] * s.v_inverse(i, k);
      CHECK(in_lattice(h, v));
    }
  }
}

TEST_CASE("smith_form of diag(4, 6) is diag(2, 12)") {
  std::vector<std::int64_t> d{4, 6};
  CHECK(smith_form(IntMatrix::diagonal(d)).diagonal ==
        std::vector<std::int64_t>{2, 12});
}
