#include "conjucyclic/json_io.hpp"

#include <string>

#include "conjucyclic/errors.hpp"

namespace conjucyclic {

void to_json(nlohmann::json& j, const Element& e) { j = e.code; }
void from_json(const nlohmann::json& j, Element& e) { e.code = j.get<std::uint32_t>(); }

namespace json_io {

using nlohmann::json;

json tower_to_json(const FieldTower& t) {
  return {{"p", t.p()}, {"m", t.m()}, {"modulus", t.modulus()}};
}

TowerPtr tower_from_json(const json& j) {
  return std::make_shared<const FieldTower>(j.at("p").get<std::uint32_t>(),
                                            j.at("m").get<std::uint32_t>(),
                                            j.at("modulus").get<std::vector<std::uint32_t>>());
}

json polynomial_to_json(const Polynomial& f) { return f.coeffs(); }

Polynomial polynomial_from_json(const json& j) { return Polynomial(j.get<std::vector<Element>>()); }

json factorization_to_json(const Factorization& f) {
  json factors = json::array();
  for (const auto& g : f.base) factors.push_back(polynomial_to_json(g));
  return {{"n0", f.n0},
          {"ell", f.ell},
          {"t", f.t()},
          {"multiplicity", f.multiplicity},
          {"factors", std::move(factors)}};
}

Factorization factorization_from_json(const json& j) {
  Factorization f;
  f.n0 = j.at("n0").get<std::uint64_t>();
  f.ell = j.at("ell").get<std::uint32_t>();
  f.multiplicity = j.at("multiplicity").get<std::uint64_t>();
  for (const auto& g : j.at("factors")) f.base.push_back(polynomial_from_json(g));
  if (j.at("t").get<std::size_t>() != f.base.size()) {
    throw Error(ErrorCode::invalid_argument, "factorization JSON: t does not match factor count");
  }
  f.n = static_cast<std::size_t>(f.multiplicity * f.n0 / 2);
  return f;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back(row);
  return rows;
}

Matrix matrix_from_json(const json& j) {
  Matrix m;
  for (const auto& row : j) m.push_back(row.get<Vector>());
  return m;
}

json code_to_json(const ConjucyclicCode& c) {
  return {{"q", c.tower->q()},
          {"n", c.n},
          {"g", polynomial_to_json(c.g())},
          {"genMatrix", matrix_to_json(c.gen_matrix)},
          {"dualMatrix", matrix_to_json(alternating_dual_matrix(c))}};
}

ConjucyclicCode code_from_json(const json& j, TowerPtr tower) {
  const auto q = j.at("q").get<std::uint64_t>();
  if (!tower) {
    const auto [p, m] = split_prime_power(q);
    tower = build_tower(p, m);
  } else if (tower->q() != q) {
    throw Error(ErrorCode::invalid_argument, "code JSON q does not match the tower");
  }
  auto code = build_conjucyclic_code(tower, j.at("n").get<std::size_t>(),
                                     polynomial_from_json(j.at("g")));
  if (j.contains("genMatrix") && matrix_from_json(j.at("genMatrix")) != code.gen_matrix) {
    throw Error(ErrorCode::invalid_argument, "code JSON genMatrix does not match g");
  }
  if (j.contains("dualMatrix") && matrix_from_json(j.at("dualMatrix")) != alternating_dual_matrix(code)) {
    throw Error(ErrorCode::invalid_argument, "code JSON dualMatrix does not match g");
  }
  return code;
}

json distribution_to_json(const WeightDistribution& d, std::uint32_t q, std::size_t log_q_card) {
  json out = {{"counts", d.counts},
              {"card", std::to_string(q) + "^" + std::to_string(log_q_card)}};
  if (auto w = d.min_weight()) {
    out["minWeight"] = *w;
  } else {
    out["minWeight"] = nullptr;
  }
  return out;
}

WeightDistribution distribution_from_json(const json& j) {
  WeightDistribution d;
  d.counts = j.at("counts").get<std::vector<std::uint64_t>>();
  return d;
}

json stabilizer_to_json(const StabilizerParams& s) {
  return {{"n", s.n}, {"k", s.k_logical}, {"d", s.d_lower}, {"q", s.q}, {"pure", s.pure}};
}

StabilizerParams stabilizer_from_json(const json& j) {
  StabilizerParams s;
  s.n = j.at("n").get<std::size_t>();
  s.k_logical = j.at("k").get<std::int64_t>();
  s.d_lower = j.at("d").get<std::size_t>();
  s.q = j.at("q").get<std::uint32_t>();
  s.pure = j.at("pure").get<bool>();
  return s;
}

}  // namespace json_io
}  // namespace conjucyclic
