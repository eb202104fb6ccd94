#include "conjucyclic/cyclic.hpp"

#include <algorithm>
#include <string>

#include "conjucyclic/errors.hpp"

namespace conjucyclic {

Vector sigma_shift(std::span<const Element> v) { return sigma_shift(v, 1); }

Vector sigma_shift(std::span<const Element> v, std::size_t times) {
  Vector out(v.begin(), v.end());
  if (out.empty()) return out;
  std::rotate(out.rbegin(), out.rbegin() + static_cast<std::ptrdiff_t>(times % out.size()),
              out.rend());
  return out;
}

Vector tau_transform(const FieldTower& t, std::span<const Element> v) {
  if (v.size() % 2 != 0) throw Error(ErrorCode::odd_length, "tau needs an even length");
  const std::size_t n = v.size() / 2;
  Vector out(v.size());
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = t.neg(v[n + i]);
    out[n + i] = v[i];
  }
  return out;
}

Vector coefficient_vector(const Polynomial& f, std::size_t length) {
  if (f.degree() >= static_cast<std::ptrdiff_t>(length)) {
    throw Error(ErrorCode::invalid_argument, "polynomial does not fit in length " +
                                                 std::to_string(length));
  }
  Vector out(length, kZero);
  std::copy(f.coeffs().begin(), f.coeffs().end(), out.begin());
  return out;
}

CyclicCode make_cyclic_code(TowerPtr tower, std::size_t n, const Polynomial& g) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
  const FieldTower& t = *tower;
  if (g.is_zero()) throw Error(ErrorCode::not_a_divisor, "zero generator polynomial");
  for (const Element c : g.coeffs()) {
    if (!t.valid(c) || !t.in_subfield(c)) {
      throw Error(ErrorCode::invalid_argument, "generator coefficients must lie in GF(q)");
    }
  }
  CyclicCode c;
  c.tower = std::move(tower);
  c.n = n;
  c.g = poly::make_monic(t, g);
  auto [h, rem] = poly::divmod(t, poly::x_pow_minus_one(t, 2 * n), c.g);
  if (!rem.is_zero()) throw Error(ErrorCode::not_a_divisor, "g(x) does not divide x^2n - 1");
  c.h = std::move(h);
  c.h_star = reciprocal_h_star(t, c.h);
  return c;
}

namespace {

Matrix shifted_rows(const Vector& first, std::size_t count) {
  Matrix rows;
  rows.reserve(count);
  Vector row = first;
  for (std::size_t i = 0; i < count; ++i) {
    rows.push_back(row);
    row = sigma_shift(row);
  }
  return rows;
}

}  // namespace

Matrix generator_matrix(const CyclicCode& c) {
  if (c.dimension() == 0) return {};
  return shifted_rows(coefficient_vector(c.g, c.length()), c.dimension());
}

Matrix euclidean_dual_matrix(const CyclicCode& c) {
  if (c.k() == 0) return {};
  return shifted_rows(coefficient_vector(c.h_star, c.length()), c.k());
}

Matrix symplectic_dual_matrix(const CyclicCode& c) {
  Matrix rows = euclidean_dual_matrix(c);
  for (auto& row : rows) row = tau_transform(*c.tower, row);
  return rows;
}

Element euclidean_inner(const FieldTower& t, std::span<const Element> u,
                        std::span<const Element> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::length_mismatch, "inner product lengths differ");
  Element acc = kZero;
  for (std::size_t i = 0; i < u.size(); ++i) acc = t.add(acc, t.mul(u[i], v[i]));
  return acc;
}

Element symplectic_inner(const FieldTower& t, std::span<const Element> u,
                         std::span<const Element> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::length_mismatch, "inner product lengths differ");
  if (u.size() % 2 != 0) throw Error(ErrorCode::odd_length, "symplectic form needs even length");
  const std::size_t m = u.size() / 2;
  Element acc = kZero;
  for (std::size_t i = 0; i < m; ++i) {
    acc = t.add(acc, t.sub(t.mul(u[i], v[m + i]), t.mul(u[m + i], v[i])));
  }
  return acc;
}

std::size_t hamming_weight(std::span<const Element> v) noexcept {
  return static_cast<std::size_t>(
      std::count_if(v.begin(), v.end(), [](Element e) { return !e.is_zero(); }));
}

std::size_t symplectic_weight(std::span<const Element> v) {
  if (v.size() % 2 != 0) throw Error(ErrorCode::odd_length, "symplectic weight needs even length");
  const std::size_t m = v.size() / 2;
  std::size_t w = 0;
  for (std::size_t j = 0; j < m; ++j) {
    if (!v[j].is_zero() || !v[m + j].is_zero()) ++w;
  }
  return w;
}

}  // namespace conjucyclic
