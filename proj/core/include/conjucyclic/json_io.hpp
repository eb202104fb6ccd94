#pragma once

#include <nlohmann/json.hpp>

#include "conjucyclic/conjucyclic.hpp"
#include "conjucyclic/field.hpp"
#include "conjucyclic/poly.hpp"
#include "conjucyclic/quantum.hpp"
#include "conjucyclic/weights.hpp"

// JSON encodings used on the command line and by downstream tooling.  Field
// elements are always their integer codes.
namespace conjucyclic {

void to_json(nlohmann::json& j, const Element& e);
void from_json(const nlohmann::json& j, Element& e);

namespace json_io {

/// {p, m, modulus: [c_0..c_2m]}
[[nodiscard]] nlohmann::json tower_to_json(const FieldTower& t);
[[nodiscard]] TowerPtr tower_from_json(const nlohmann::json& j);

/// [codes], low degree first.
[[nodiscard]] nlohmann::json polynomial_to_json(const Polynomial& f);
[[nodiscard]] Polynomial polynomial_from_json(const nlohmann::json& j);

/// {n0, ell, t, multiplicity, factors: [[codes]...]}
[[nodiscard]] nlohmann::json factorization_to_json(const Factorization& f);
[[nodiscard]] Factorization factorization_from_json(const nlohmann::json& j);

/// [[codes]...]
[[nodiscard]] nlohmann::json matrix_to_json(const Matrix& m);
[[nodiscard]] Matrix matrix_from_json(const nlohmann::json& j);

/// {q, n, g, genMatrix, dualMatrix}
[[nodiscard]] nlohmann::json code_to_json(const ConjucyclicCode& c);
/// Rebuilds the code from (q, n, g) and checks the stored matrices against it.
[[nodiscard]] ConjucyclicCode code_from_json(const nlohmann::json& j, TowerPtr tower = nullptr);

/// {counts, card: "q^k", minWeight}; minWeight is null for the zero code.
[[nodiscard]] nlohmann::json distribution_to_json(const WeightDistribution& d, std::uint32_t q,
                                                  std::size_t log_q_card);
[[nodiscard]] WeightDistribution distribution_from_json(const nlohmann::json& j);

/// {n, k, d, q, pure}
[[nodiscard]] nlohmann::json stabilizer_to_json(const StabilizerParams& s);
[[nodiscard]] StabilizerParams stabilizer_from_json(const nlohmann::json& j);

}  // namespace json_io
}  // namespace conjucyclic
