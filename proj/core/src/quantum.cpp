#include "conjucyclic/quantum.hpp"

#include <stdexcept>

#include "conjucyclic/errors.hpp"

namespace conjucyclic {

bool is_alternating_dual_containing(const ConjucyclicCode& c) {
  const FieldTower& t = *c.tower;
  const bool alternating =
      additive::span_includes(t, c.gen_matrix, alternating_dual_matrix(c), c.n);
  const bool symplectic = linalg::span_includes(t, generator_matrix(c.cyclic),
                                                symplectic_dual_matrix(c.cyclic), 2 * c.n);
  if (alternating != symplectic) {
    throw std::logic_error("alternating and symplectic dual-containment disagree");
  }
  return alternating;
}

StabilizerParams stabilizer_params(const ConjucyclicCode& c, const EnumerationOptions& options) {
  if (!is_alternating_dual_containing(c)) {
    throw Error(ErrorCode::not_dual_containing, "C^perp_a is not contained in C");
  }
  StabilizerParams out;
  out.n = c.n;
  out.k_logical = static_cast<std::int64_t>(c.card_log_q()) - static_cast<std::int64_t>(c.n);
  out.d_lower = min_weight(c, options);
  out.q = c.tower->q();
  return out;
}

}  // namespace conjucyclic
