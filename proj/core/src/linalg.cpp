#include "conjucyclic/linalg.hpp"

#include <algorithm>

#include "conjucyclic/errors.hpp"

namespace conjucyclic {

void RowEchelon::reduce(Vector& v) const {
  if (v.size() != width_) throw Error(ErrorCode::length_mismatch, "row has the wrong width");
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const Element c = v[pivots_[r]];
    if (c.is_zero()) continue;
    const Vector& row = rows_[r];
    for (std::size_t j = 0; j < width_; ++j) {
      if (!row[j].is_zero()) v[j] = t_->sub(v[j], t_->mul(c, row[j]));
    }
  }
}

bool RowEchelon::insert(Vector v) {
  reduce(v);
  const auto it = std::find_if(v.begin(), v.end(), [](Element e) { return !e.is_zero(); });
  if (it == v.end()) return false;
  const Element scale = t_->inv(*it);
  for (auto& e : v) e = t_->mul(e, scale);
  pivots_.push_back(static_cast<std::size_t>(it - v.begin()));
  rows_.push_back(std::move(v));
  return true;
}

bool RowEchelon::contains(Vector v) const {
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](Element e) { return e.is_zero(); });
}

namespace linalg {

std::size_t rank(const FieldTower& t, const Matrix& m, std::size_t width) {
  RowEchelon e(t, width);
  for (const auto& row : m) e.insert(row);
  return e.rank();
}

bool span_contains(const FieldTower& t, const Matrix& basis, const Vector& v, std::size_t width) {
  RowEchelon e(t, width);
  for (const auto& row : basis) e.insert(row);
  return e.contains(v);
}

bool span_includes(const FieldTower& t, const Matrix& big, const Matrix& small, std::size_t width) {
  RowEchelon e(t, width);
  for (const auto& row : big) e.insert(row);
  return std::all_of(small.begin(), small.end(), [&](const Vector& v) { return e.contains(v); });
}

bool spans_equal(const FieldTower& t, const Matrix& a, const Matrix& b, std::size_t width) {
  return span_includes(t, a, b, width) && span_includes(t, b, a, width);
}

Matrix left_kernel(const FieldTower& t, const Matrix& m, std::size_t width) {
  const std::size_t k = m.size();
  // Rows [m_i | e_i]; pivots are only taken inside the first `width` columns.
  Matrix basis;
  std::vector<std::size_t> pivots;
  Matrix kernel;
  for (std::size_t i = 0; i < k; ++i) {
    if (m[i].size() != width) throw Error(ErrorCode::length_mismatch, "row has the wrong width");
    Vector v(width + k, kZero);
    std::copy(m[i].begin(), m[i].end(), v.begin());
    v[width + i] = kOne;
    for (std::size_t r = 0; r < basis.size(); ++r) {
      const Element c = v[pivots[r]];
      if (c.is_zero()) continue;
      for (std::size_t j = 0; j < v.size(); ++j) {
        if (!basis[r][j].is_zero()) v[j] = t.sub(v[j], t.mul(c, basis[r][j]));
      }
    }
    const auto end = v.begin() + static_cast<std::ptrdiff_t>(width);
    const auto it = std::find_if(v.begin(), end, [](Element e) { return !e.is_zero(); });
    if (it == end) {
      kernel.emplace_back(end, v.end());
      continue;
    }
    const Element scale = t.inv(*it);
    for (auto& e : v) e = t.mul(e, scale);
    pivots.push_back(static_cast<std::size_t>(it - v.begin()));
    basis.push_back(std::move(v));
  }
  return kernel;
}

Vector combine(const FieldTower& t, std::span<const Element> coeffs, const Matrix& rows,
               std::size_t width) {
  if (coeffs.size() != rows.size()) throw Error(ErrorCode::length_mismatch, "coefficient count");
  Vector out(width, kZero);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    for (std::size_t j = 0; j < width; ++j) out[j] = t.add(out[j], t.mul(coeffs[i], rows[i][j]));
  }
  return out;
}

}  // namespace linalg
}  // namespace conjucyclic
