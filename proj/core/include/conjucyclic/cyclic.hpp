#pragma once

#include <cstddef>
#include <span>

#include "conjucyclic/field.hpp"
#include "conjucyclic/linalg.hpp"
#include "conjucyclic/poly.hpp"

namespace conjucyclic {

/// Right cyclic shift: (c_{N-1}, c_0, ..., c_{N-2}).
[[nodiscard]] Vector sigma_shift(std::span<const Element> v);
[[nodiscard]] Vector sigma_shift(std::span<const Element> v, std::size_t times);

/// v * [[0, I], [-I, 0]] = (-v_n, ..., -v_{2n-1}, v_0, ..., v_{n-1}).
/// Throws Error(odd_length).
[[nodiscard]] Vector tau_transform(const FieldTower& t, std::span<const Element> v);

/// (f_0, ..., f_{length-1}); throws Error(invalid_argument) if deg f >= length.
[[nodiscard]] Vector coefficient_vector(const Polynomial& f, std::size_t length);

/// The q-ary cyclic code <g(x)> of length 2n.
struct CyclicCode {
  TowerPtr tower;
  std::size_t n = 0;
  Polynomial g;
  Polynomial h;       // (x^{2n} - 1) / g
  Polynomial h_star;  // monic reciprocal of h

  [[nodiscard]] std::size_t length() const noexcept { return 2 * n; }
  /// k = deg g.
  [[nodiscard]] std::size_t k() const noexcept { return static_cast<std::size_t>(g.degree()); }
  [[nodiscard]] std::size_t dimension() const noexcept { return length() - k(); }
};

/// Normalises g to monic; throws Error(not_a_divisor) unless g | x^{2n} - 1.
[[nodiscard]] CyclicCode make_cyclic_code(TowerPtr tower, std::size_t n, const Polynomial& g);

/// Rows sigma^i(V_g), i < 2n - k.  Empty for the zero code.
[[nodiscard]] Matrix generator_matrix(const CyclicCode& c);
/// Rows sigma^i(V_{h*}), i < k.  Empty when g = 1.
[[nodiscard]] Matrix euclidean_dual_matrix(const CyclicCode& c);
/// Rows tau(sigma^i(V_{h*})), i < k.
[[nodiscard]] Matrix symplectic_dual_matrix(const CyclicCode& c);

[[nodiscard]] Element euclidean_inner(const FieldTower& t, std::span<const Element> u,
                                      std::span<const Element> v);
/// sum_{i<m} (u_i v_{m+i} - u_{m+i} v_i) for vectors of length 2m.
[[nodiscard]] Element symplectic_inner(const FieldTower& t, std::span<const Element> u,
                                       std::span<const Element> v);

[[nodiscard]] std::size_t hamming_weight(std::span<const Element> v) noexcept;
/// Number of j < m with (v_j, v_{m+j}) != (0, 0).  Throws Error(odd_length).
[[nodiscard]] std::size_t symplectic_weight(std::span<const Element> v);

}  // namespace conjucyclic
