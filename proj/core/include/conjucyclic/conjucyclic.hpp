#pragma once

#include <cstddef>
#include <span>

#include "conjucyclic/cyclic.hpp"
#include "conjucyclic/field.hpp"
#include "conjucyclic/linalg.hpp"
#include "conjucyclic/poly.hpp"

namespace conjucyclic {

struct TracePair {
  Element first;   // Tr(beta * a)
  Element second;  // Tr(beta^q * a)
  friend bool operator==(const TracePair&, const TracePair&) = default;
};

/// a -> (Tr(beta a), Tr(beta^q a)), a GF(q)-linear bijection GF(q^2) -> GF(q)^2.
[[nodiscard]] TracePair phi(const FieldTower& t, Element a) noexcept;

/// a = Tr(beta a) / (beta - beta^{2q-1}) - beta^{q-1} Tr(beta^q a) / (beta - beta^{2q-1}).
[[nodiscard]] Element phi_inv(const FieldTower& t, TracePair pair);

/// The two constants of phi_inv: 1/(beta - beta^{2q-1}) and beta^{q-1}/(beta - beta^{2q-1}).
[[nodiscard]] std::pair<Element, Element> phi_inverse_constants(const FieldTower& t);

/// (Tr(beta a_0), ..., Tr(beta a_{n-1}), Tr(beta^q a_0), ..., Tr(beta^q a_{n-1})).
[[nodiscard]] Vector psi_map(const FieldTower& t, std::span<const Element> v);
/// Throws Error(odd_length).
[[nodiscard]] Vector psi_inv(const FieldTower& t, std::span<const Element> v);

/// T(c) = (conj(c_{n-1}), c_0, ..., c_{n-2}).
[[nodiscard]] Vector conj_shift(const FieldTower& t, std::span<const Element> v);
[[nodiscard]] Vector conj_shift(const FieldTower& t, std::span<const Element> v, std::size_t times);

/// GF(q)-linear conjucyclic code Psi^{-1}(<g(x)>) of length n over GF(q^2).
struct ConjucyclicCode {
  TowerPtr tower;
  std::size_t n = 0;
  CyclicCode cyclic;  // its image under Psi
  Matrix gen_matrix;  // rows W_g, T(W_g), ..., T^{2n-k-1}(W_g)

  [[nodiscard]] const Polynomial& g() const noexcept { return cyclic.g; }
  /// log_q |C| = 2n - deg g.
  [[nodiscard]] std::size_t card_log_q() const noexcept { return cyclic.dimension(); }
};

/// Throws Error(not_a_divisor).
[[nodiscard]] ConjucyclicCode build_conjucyclic_code(TowerPtr tower, std::size_t n,
                                                     const Polynomial& g);

/// beta^2 - beta^{2q}, the leading scalar of the alternating form.
[[nodiscard]] Element alternating_scalar(const FieldTower& t) noexcept;

/// (beta^2 - beta^{2q}) sum_{i<n} (u_i conj(v_i) - conj(u_i) v_i); equals the
/// symplectic product of the Psi images.
[[nodiscard]] Element alternating_inner(const FieldTower& t, std::span<const Element> u,
                                        std::span<const Element> v);

/// Rows Psi^{-1}(tau(sigma^i(V_{h*}))), i < deg g.
[[nodiscard]] Matrix alternating_dual_matrix(const ConjucyclicCode& c);

/// Characteristic 2 only: rows T^i(W_{h^e}) with V_{h^e} = tau(V_{h*}).
/// Throws Error(wrong_characteristic).
[[nodiscard]] Matrix alternating_dual_matrix_char2(const ConjucyclicCode& c);

/// GF(q)-basis of the largest q-ary cyclic code inside C.  Every entry lies in GF(q).
[[nodiscard]] Matrix h_subcode(const ConjucyclicCode& c);

/// Characteristic 2 only: basis of C^Tr = { v : Tr(<u, v>_e) = 0 for all u in C },
/// obtained by applying x -> x^q entrywise to the alternating dual basis.
[[nodiscard]] Matrix trace_dual(const ConjucyclicCode& c);

/// Coordinates over the GF(q)-basis {1, beta}: (a_0..a_{n-1}, b_0..b_{n-1})
/// with v_i = a_i + b_i beta.
[[nodiscard]] Vector fq_coordinates(const FieldTower& t, std::span<const Element> v);

namespace additive {

[[nodiscard]] std::size_t rank(const FieldTower& t, const Matrix& rows, std::size_t n);
[[nodiscard]] bool span_contains(const FieldTower& t, const Matrix& rows, const Vector& v,
                                 std::size_t n);
[[nodiscard]] bool span_includes(const FieldTower& t, const Matrix& big, const Matrix& small,
                                 std::size_t n);
[[nodiscard]] bool spans_equal(const FieldTower& t, const Matrix& a, const Matrix& b,
                               std::size_t n);

}  // namespace additive

/// T(r) lies in the GF(q)-span of `rows` for every row r.
[[nodiscard]] bool is_conjucyclic(const FieldTower& t, const Matrix& rows);

}  // namespace conjucyclic
