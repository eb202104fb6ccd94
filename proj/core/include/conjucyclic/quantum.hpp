#pragma once

#include <cstddef>
#include <cstdint>

#include "conjucyclic/conjucyclic.hpp"
#include "conjucyclic/weights.hpp"

namespace conjucyclic {

/// Parameters [[n, k - n, >= d]]_q of the pure stabilizer code obtained from an
/// alternating dual-containing code with |C| = q^k.
struct StabilizerParams {
  std::size_t n = 0;
  std::int64_t k_logical = 0;
  std::size_t d_lower = 0;
  std::uint32_t q = 0;
  bool pure = true;

  friend bool operator==(const StabilizerParams&, const StabilizerParams&) = default;
};

/// C^{perp_a} inside C.  Decided on both sides of Psi (the alternating dual in
/// GF(q^2)^n and the symplectic dual of the cyclic image); a disagreement
/// raises std::logic_error.
[[nodiscard]] bool is_alternating_dual_containing(const ConjucyclicCode& c);

/// Throws Error(not_dual_containing).
[[nodiscard]] StabilizerParams stabilizer_params(const ConjucyclicCode& c,
                                                 const EnumerationOptions& options = {});

}  // namespace conjucyclic
