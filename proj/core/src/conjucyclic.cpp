#include "conjucyclic/conjucyclic.hpp"

#include <algorithm>

#include "conjucyclic/errors.hpp"

namespace conjucyclic {

TracePair phi(const FieldTower& t, Element a) noexcept {
  const Element b = t.beta();
  return {t.trace(t.mul(b, a)), t.trace(t.mul(t.conj(b), a))};
}

std::pair<Element, Element> phi_inverse_constants(const FieldTower& t) {
  const Element b = t.beta();
  const Element denom_inv = t.inv(t.sub(b, t.exp(2ULL * t.q() - 1)));
  return {denom_inv, t.mul(t.exp(t.q() - 1), denom_inv)};
}

Element phi_inv(const FieldTower& t, TracePair pair) {
  const auto [c1, c2] = phi_inverse_constants(t);
  return t.sub(t.mul(c1, pair.first), t.mul(c2, pair.second));
}

Vector psi_map(const FieldTower& t, std::span<const Element> v) {
  const std::size_t n = v.size();
  Vector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto [first, second] = phi(t, v[i]);
    out[i] = first;
    out[n + i] = second;
  }
  return out;
}

Vector psi_inv(const FieldTower& t, std::span<const Element> v) {
  if (v.size() % 2 != 0) throw Error(ErrorCode::odd_length, "Psi^-1 needs an even length");
  const std::size_t n = v.size() / 2;
  const auto [c1, c2] = phi_inverse_constants(t);
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = t.sub(t.mul(c1, v[i]), t.mul(c2, v[n + i]));
  return out;
}

Vector conj_shift(const FieldTower& t, std::span<const Element> v) {
  Vector out(v.size());
  if (v.empty()) return out;
  out[0] = t.conj(v.back());
  std::copy(v.begin(), v.end() - 1, out.begin() + 1);
  return out;
}

Vector conj_shift(const FieldTower& t, std::span<const Element> v, std::size_t times) {
  Vector out(v.begin(), v.end());
  for (std::size_t i = 0; i < times; ++i) out = conj_shift(t, out);
  return out;
}

ConjucyclicCode build_conjucyclic_code(TowerPtr tower, std::size_t n, const Polynomial& g) {
  ConjucyclicCode c;
  c.cyclic = make_cyclic_code(tower, n, g);
  c.tower = std::move(tower);
  c.n = n;
  const FieldTower& t = *c.tower;
  const std::size_t rows = c.cyclic.dimension();
  if (rows == 0) return c;
  Vector row = psi_inv(t, coefficient_vector(c.cyclic.g, 2 * n));
  c.gen_matrix.reserve(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    c.gen_matrix.push_back(row);
    row = conj_shift(t, row);
  }
  return c;
}

Element alternating_scalar(const FieldTower& t) noexcept {
  const Element b2 = t.mul(t.beta(), t.beta());
  return t.sub(b2, t.conj(b2));
}

Element alternating_inner(const FieldTower& t, std::span<const Element> u,
                          std::span<const Element> v) {
  if (u.size() != v.size()) throw Error(ErrorCode::length_mismatch, "inner product lengths differ");
  Element acc = kZero;
  for (std::size_t i = 0; i < u.size(); ++i) {
    acc = t.add(acc, t.sub(t.mul(u[i], t.conj(v[i])), t.mul(t.conj(u[i]), v[i])));
  }
  return t.mul(alternating_scalar(t), acc);
}

Matrix alternating_dual_matrix(const ConjucyclicCode& c) {
  Matrix rows = symplectic_dual_matrix(c.cyclic);
  for (auto& row : rows) row = psi_inv(*c.tower, row);
  return rows;
}

Matrix alternating_dual_matrix_char2(const ConjucyclicCode& c) {
  const FieldTower& t = *c.tower;
  if (t.p() != 2) throw Error(ErrorCode::wrong_characteristic, "requires characteristic 2");
  const std::size_t k = c.cyclic.k();
  if (k == 0) return {};
  const Vector v_he = tau_transform(t, coefficient_vector(c.cyclic.h_star, 2 * c.n));
  Vector row = psi_inv(t, v_he);
  Matrix rows;
  rows.reserve(k);
  for (std::size_t i = 0; i < k; ++i) {
    rows.push_back(row);
    row = conj_shift(t, row);
  }
  return rows;
}

Matrix h_subcode(const ConjucyclicCode& c) {
  const FieldTower& t = *c.tower;
  const std::size_t n = c.n;
  const Matrix g = generator_matrix(c.cyclic);
  // Messages a with (aG)_i = (aG)_{n+i} for every i < n.
  Matrix diff;
  diff.reserve(g.size());
  for (const auto& row : g) {
    Vector d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = t.sub(row[i], row[n + i]);
    diff.push_back(std::move(d));
  }
  Matrix basis;
  for (const auto& a : linalg::left_kernel(t, diff, n)) {
    basis.push_back(psi_inv(t, linalg::combine(t, a, g, 2 * n)));
  }
  return basis;
}

Matrix trace_dual(const ConjucyclicCode& c) {
  const FieldTower& t = *c.tower;
  if (t.p() != 2) throw Error(ErrorCode::wrong_characteristic, "trace dual requires characteristic 2");
  Matrix rows = alternating_dual_matrix(c);
  for (auto& row : rows) {
    for (auto& e : row) e = t.conj(e);
  }
  return rows;
}

Vector fq_coordinates(const FieldTower& t, std::span<const Element> v) {
  const std::size_t n = v.size();
  const Element b = t.beta();
  const Element denom_inv = t.inv(t.sub(b, t.conj(b)));
  Vector out(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Element coeff_b = t.mul(t.sub(v[i], t.conj(v[i])), denom_inv);
    out[i] = t.sub(v[i], t.mul(coeff_b, b));
    out[n + i] = coeff_b;
  }
  return out;
}

namespace additive {
namespace {

Matrix coordinates(const FieldTower& t, const Matrix& rows, std::size_t n) {
  Matrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    if (row.size() != n) throw Error(ErrorCode::length_mismatch, "row has the wrong length");
    out.push_back(fq_coordinates(t, row));
  }
  return out;
}

}  // namespace

std::size_t rank(const FieldTower& t, const Matrix& rows, std::size_t n) {
  return linalg::rank(t, coordinates(t, rows, n), 2 * n);
}

bool span_contains(const FieldTower& t, const Matrix& rows, const Vector& v, std::size_t n) {
  return linalg::span_contains(t, coordinates(t, rows, n), coordinates(t, {v}, n).front(), 2 * n);
}

bool span_includes(const FieldTower& t, const Matrix& big, const Matrix& small, std::size_t n) {
  return linalg::span_includes(t, coordinates(t, big, n), coordinates(t, small, n), 2 * n);
}

bool spans_equal(const FieldTower& t, const Matrix& a, const Matrix& b, std::size_t n) {
  return linalg::spans_equal(t, coordinates(t, a, n), coordinates(t, b, n), 2 * n);
}

}  // namespace additive

bool is_conjucyclic(const FieldTower& t, const Matrix& rows) {
  if (rows.empty()) return true;
  const std::size_t n = rows.front().size();
  Matrix shifted;
  shifted.reserve(rows.size());
  for (const auto& row : rows) shifted.push_back(conj_shift(t, row));
  return additive::span_includes(t, rows, shifted, n);
}

}  // namespace conjucyclic
