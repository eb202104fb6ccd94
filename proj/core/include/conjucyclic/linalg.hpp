#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "conjucyclic/field.hpp"

namespace conjucyclic {

using Vector = std::vector<Element>;
using Matrix = std::vector<Vector>;

/// Incremental Gaussian elimination over GF(q).  Rows are kept in
/// semi-echelon form: each stored row has a unit pivot that is zero in every
/// row inserted after it.  Entries must lie in GF(q).
class RowEchelon {
 public:
  RowEchelon(const FieldTower& t, std::size_t width) : t_(&t), width_(width) {}

  /// Returns true when `v` was independent of the rows seen so far.
  bool insert(Vector v);
  [[nodiscard]] bool contains(Vector v) const;
  [[nodiscard]] std::size_t rank() const noexcept { return rows_.size(); }
  [[nodiscard]] std::size_t width() const noexcept { return width_; }
  [[nodiscard]] const Matrix& rows() const noexcept { return rows_; }

 private:
  void reduce(Vector& v) const;

  const FieldTower* t_;
  std::size_t width_;
  Matrix rows_;
  std::vector<std::size_t> pivots_;
};

namespace linalg {

[[nodiscard]] std::size_t rank(const FieldTower& t, const Matrix& m, std::size_t width);
[[nodiscard]] bool span_contains(const FieldTower& t, const Matrix& basis, const Vector& v,
                                 std::size_t width);
/// span(small) is a subspace of span(big).
[[nodiscard]] bool span_includes(const FieldTower& t, const Matrix& big, const Matrix& small,
                                 std::size_t width);
[[nodiscard]] bool spans_equal(const FieldTower& t, const Matrix& a, const Matrix& b,
                               std::size_t width);
/// Basis of { a : sum_i a_i m_i = 0 }.
[[nodiscard]] Matrix left_kernel(const FieldTower& t, const Matrix& m, std::size_t width);
/// sum_i coeffs_i * rows_i.
[[nodiscard]] Vector combine(const FieldTower& t, std::span<const Element> coeffs, const Matrix& rows,
                             std::size_t width);

}  // namespace linalg
}  // namespace conjucyclic
