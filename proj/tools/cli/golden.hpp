#pragma once

#include <string>
#include <vector>

#include "conjucyclic/field.hpp"
#include "conjucyclic/linalg.hpp"
#include "conjucyclic/poly.hpp"

// Published worked examples, transcribed token by token ("b7" = beta^7,
// small integers are prime-field elements).  Everything here is read under
// the Conway towers built by build_tower().
namespace conjucyclic::golden {

using Rows = std::vector<std::vector<std::string>>;

/// Parses a table of tokens into field elements.
[[nodiscard]] Matrix parse_rows(const FieldTower& t, const Rows& rows);
[[nodiscard]] Polynomial parse_poly(const FieldTower& t, const std::vector<std::string>& coeffs);

struct PhiEntry {
  std::string element;
  unsigned first;
  unsigned second;
};

// GF(9): the trace map a -> (Tr(beta a), Tr(beta^3 a)) on all nine elements,
// and the two constants of its inverse.
[[nodiscard]] const std::vector<PhiEntry>& phi_table_f9();
inline const std::string kPhiConstantFirst = "b3";   // 1 / (beta - beta^5)
inline const std::string kPhiConstantSecond = "b5";  // beta^2 / (beta - beta^5)

// GF(9), n = 3: three generators, the 27 codewords they span, the 27 ternary
// images, and the 9 words of the largest cyclic subcode.
[[nodiscard]] const Rows& small_code_generators();
[[nodiscard]] const Rows& small_code_words();
[[nodiscard]] const Rows& small_code_images();
[[nodiscard]] const Rows& small_code_cyclic_part();

// q = 3, n = 11.
[[nodiscard]] const Rows& ternary11_factors();
[[nodiscard]] const std::vector<std::string>& ternary11_g();
[[nodiscard]] const std::vector<std::string>& ternary11_w_g();
[[nodiscard]] const Rows& ternary11_generator();
[[nodiscard]] const Rows& ternary11_dual();
inline constexpr unsigned kTernary11MinWeight = 5;

// q = 4, n = 11.  Factor coefficients are written over GF(16) with
// omega = beta^5.
[[nodiscard]] const Rows& quaternary11_factors();
inline constexpr unsigned kQuaternary11FactorMultiplicity = 2;
[[nodiscard]] const std::vector<std::string>& quaternary11_g();
[[nodiscard]] const Rows& quaternary11_generator();
[[nodiscard]] const Rows& quaternary11_dual();
[[nodiscard]] const std::vector<unsigned long long>& quaternary11_distribution();  // A_0..A_11

}  // namespace conjucyclic::golden
