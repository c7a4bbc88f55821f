#include "sgb/constructions.hpp"

#include "sgb/error.hpp"

namespace sgb {

namespace {

std::int64_t power(std::uint64_t p, unsigned k) {
  std::int64_t r = 1;
  for (unsigned t = 0; t < k; ++t)
    r *= static_cast<std::int64_t>(p);
  return r;
}

unsigned order_exponent(const FinitePGroup &g, const Element &x) {
  unsigned e = 0;
  for (std::uint64_t o = g.element_order(x); o > 1; o /= g.p())
    ++e;
  return e;
}

[[noreturn]] void precondition(const std::string &what) {
  throw Error(ErrorCode::PreconditionFailed, what);
}

} // namespace

Subgroup homocyclic_hull(const FinitePGroup &g, const Subgroup &h) {
  const unsigned n = g.max_exponent();
  for (unsigned e : g.exponents())
    if (e != n)
      precondition("homocyclic_hull: G is not homocyclic");
  std::vector<Element> lifts;
  for (const Element &x : cyclic_decomposition(g, h)) {
    // In a homocyclic group every coordinate of x is divisible by
    // p^{n - d}, where p^d is the order of x.
    const std::int64_t q = power(g.p(), n - order_exponent(g, x));
    Element y = x;
    for (auto &c : y.coords)
      c /= q;
    lifts.push_back(std::move(y));
  }
  return span(g, lifts);
}

TwoGapWitness two_gap_witness(const FinitePGroup &g, std::size_t i,
                              std::size_t j) {
  if (i >= g.rank() || j >= g.rank() || i == j)
    throw Error(ErrorCode::BadParameters, "two_gap_witness: bad indices");
  const unsigned ei = g.exponents()[i], ej = g.exponents()[j];
  if (ei + 1 >= ej)
    throw Error(ErrorCode::NoWitness,
                "two_gap_witness: need e_i + 1 < e_j, got " +
                    std::to_string(ei) + " and " + std::to_string(ej));
  TwoGapWitness w;
  w.i = i;
  w.j = j;
  w.x = g.zero();
  w.x.coords[i] = power(g.p(), ei - 1);
  w.x.coords[j] = power(g.p(), ej - 2);
  w.sequence = height_sequence(g, w.x);
  w.hull_exists = essential_summand_oracle(g, cyclic(g, w.x)).has_value();
  return w;
}

TwoGapWitness two_gap_witness(const FinitePGroup &g) {
  for (std::size_t i = 0; i < g.rank(); ++i)
    for (std::size_t j = 0; j < g.rank(); ++j)
      if (g.exponents()[i] + 1 < g.exponents()[j])
        return two_gap_witness(g, i, j);
  throw Error(ErrorCode::NoWitness,
              "no exponents e_i, e_j with e_i + 1 < e_j in " + g.to_string());
}

bool is_direct_decomposition(const FinitePGroup &g, const Subgroup &a,
                             const Subgroup &c) {
  return is_zero(g, sub_meet(g, a, c)) && sub_join(g, a, c) == whole_group(g);
}

// The rows of HNF[[H, H], [K, 0], [L, 0], [0, L]] reduce (x, 0) to
// (0, -π(x)): subtracting (h + k + l, h + l') leaves x - h - k - l = 0 on
// the left, so h = π(x) modulo L.
Element project_element(const FinitePGroup &g, const Subgroup &h,
                        const Subgroup &k, const Element &x) {
  const std::size_t r = g.rank();
  if (r == 0)
    return x;
  IntMatrix m(0, 2 * r);
  std::vector<std::int64_t> row(2 * r);
  for (std::size_t i = 0; i < r; ++i) {
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t t = 0; t < r; ++t)
      row[t] = row[r + t] = h.basis(i, t);
    m.append_row(row);
    std::fill(row.begin(), row.end(), 0);
    for (std::size_t t = 0; t < r; ++t)
      row[t] = k.basis(i, t);
    m.append_row(row);
    std::fill(row.begin(), row.end(), 0);
    row[r + i] = g.modulus(i);
    m.append_row(row);
  }
  const std::int64_t d = g.lattice_modulus();
  IntMatrix b = hnf_mod(m, d);
  std::vector<std::int64_t> w(2 * r, 0);
  for (std::size_t t = 0; t < r; ++t)
    w[t] = x.coords[t];
  for (std::size_t j = 0; j < r; ++j) {
    if (w[j] == 0)
      continue;
    if (w[j] % b(j, j) != 0)
      precondition("project_element: G is not H + K");
    const std::int64_t q = w[j] / b(j, j);
    for (std::size_t t = j; t < 2 * r; ++t)
      w[t] = mod_floor(w[t] - q * b(j, t), d);
  }
  Element out = g.zero();
  for (std::size_t t = 0; t < r; ++t)
    out.coords[t] = -w[r + t];
  return g.reduce(std::move(out));
}

ProjectionResult project_summand(const FinitePGroup &g, const Subgroup &a,
                                 const Subgroup &c, const Subgroup &h,
                                 const Subgroup &k, const Subgroup &n) {
  if (!is_direct_decomposition(g, a, c))
    precondition("project_summand: G is not A (+) C");
  if (!is_direct_decomposition(g, h, k))
    precondition("project_summand: G is not H (+) K");
  if (!is_essential_in(g, n, a))
    precondition("project_summand: N is not essential in A");
  if (!sub_le(g, n, h))
    precondition("project_summand: N is not contained in H");

  std::vector<Element> images;
  for (const Element &x : generators(g, a))
    images.push_back(project_element(g, h, k, x));
  ProjectionResult out;
  out.image = span(g, images);
  out.complement_in_h = sub_meet(g, h, c);

  // π(A) = (A + K) ∩ H, computed independently.
  if (out.image != sub_meet(g, sub_join(g, a, k), h))
    precondition("project_summand: image disagrees with (A + K) meet H");
  if (!is_zero(g, sub_meet(g, a, k)) ||
      sub_order(g, out.image) != sub_order(g, a))
    precondition("project_summand: projection is not injective on A");
  if (!is_direct_decomposition(g, out.image, c))
    precondition("project_summand: G is not pi(A) (+) C");
  if (!is_zero(g, sub_meet(g, out.image, out.complement_in_h)) ||
      sub_join(g, out.image, out.complement_in_h) != h)
    precondition("project_summand: pi(A) is not a summand of H");
  for (const Element &x : generators(g, n))
    if (project_element(g, h, k, x) != x)
      precondition("project_summand: pi moves an element of N");
  return out;
}

} // namespace sgb
