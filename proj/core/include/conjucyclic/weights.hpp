#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "conjucyclic/conjucyclic.hpp"

namespace conjucyclic {

/// counts[w] = number of codewords of Hamming weight w, w = 0..n.
struct WeightDistribution {
  std::vector<std::uint64_t> counts;

  [[nodiscard]] std::uint64_t total() const noexcept;
  /// Smallest w > 0 with counts[w] > 0.
  [[nodiscard]] std::optional<std::size_t> min_weight() const noexcept;

  friend bool operator==(const WeightDistribution&, const WeightDistribution&) = default;
};

struct EnumerationOptions {
  unsigned workers = 1;
  std::uint64_t budget = std::uint64_t{1} << 28;  // maximum number of codewords
};

/// Exhaustive Hamming-weight histogram of the GF(q)-span of `basis` (rows in
/// GF(q^2)^n, GF(q)-independent).  Codewords are visited in p-ary Gray-code
/// order over a GF(p)-basis, so each step adds one basis vector; the message
/// space is split on its leading digits across workers and the per-worker
/// histograms are summed.  Throws Error(budget_exceeded).
[[nodiscard]] WeightDistribution additive_weight_distribution(const FieldTower& t,
                                                              const Matrix& basis, std::size_t n,
                                                              const EnumerationOptions& options = {});

[[nodiscard]] WeightDistribution weight_distribution(const ConjucyclicCode& c,
                                                     const EnumerationOptions& options = {});

/// Minimum nonzero Hamming weight; stops early once a weight-1 word appears.
/// Throws Error(zero_code) for the zero code.
[[nodiscard]] std::size_t min_weight(const ConjucyclicCode& c, const EnumerationOptions& options = {});

}  // namespace conjucyclic
