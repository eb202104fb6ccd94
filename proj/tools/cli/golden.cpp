#include "golden.hpp"

namespace conjucyclic::golden {

Matrix parse_rows(const FieldTower& t, const Rows& rows) {
  Matrix out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    Vector v;
    v.reserve(row.size());
    for (const auto& token : row) v.push_back(t.parse(token));
    out.push_back(std::move(v));
  }
  return out;
}

Polynomial parse_poly(const FieldTower& t, const std::vector<std::string>& coeffs) {
  std::vector<Element> c;
  c.reserve(coeffs.size());
  for (const auto& token : coeffs) c.push_back(t.parse(token));
  return Polynomial(std::move(c));
}

const std::vector<PhiEntry>& phi_table_f9() {
  static const std::vector<PhiEntry> table = {
      {"0", 0, 0},  {"1", 1, 1},  {"b1", 0, 1}, {"b2", 1, 2}, {"b3", 1, 0},
      {"b4", 2, 2}, {"b5", 0, 2}, {"b6", 2, 1}, {"b7", 2, 0},
  };
  return table;
}

const Rows& small_code_generators() {
  static const Rows rows = {{"2", "1", "0"}, {"0", "2", "1"}, {"b2", "b6", "b2"}};
  return rows;
}

const Rows& small_code_words() {
  static const Rows rows = {
      {"0", "0", "0"},    {"b1", "b3", "b1"}, {"b3", "b1", "b3"}, {"1", "2", "0"},
      {"b2", "b5", "b1"}, {"b6", "b7", "b3"}, {"0", "1", "2"},    {"b1", "b6", "b7"},
      {"b3", "b2", "b5"}, {"2", "0", "1"},    {"b7", "b3", "b2"}, {"b5", "b1", "b6"},
      {"0", "2", "1"},    {"b1", "b5", "b2"}, {"b3", "b7", "b6"}, {"2", "1", "0"},
      {"b7", "b6", "b1"}, {"b5", "b2", "b3"}, {"1", "0", "2"},    {"b2", "b3", "b7"},
      {"b6", "b1", "b5"}, {"2", "2", "2"},    {"b7", "b5", "b7"}, {"b5", "b7", "b5"},
      {"1", "1", "1"},    {"b2", "b6", "b2"}, {"b6", "b2", "b6"},
  };
  return rows;
}

const Rows& small_code_images() {
  static const Rows rows = {
      {"0", "0", "0", "0", "0", "0"}, {"0", "1", "0", "1", "0", "1"}, {"1", "0", "1", "0", "1", "0"},
      {"0", "1", "2", "0", "1", "2"}, {"0", "2", "2", "1", "1", "0"}, {"1", "1", "0", "0", "2", "2"},
      {"0", "2", "1", "0", "2", "1"}, {"0", "0", "1", "1", "2", "2"}, {"1", "2", "2", "0", "0", "1"},
      {"1", "0", "2", "1", "0", "2"}, {"1", "1", "2", "2", "0", "0"}, {"2", "0", "0", "1", "1", "2"},
      {"1", "1", "1", "1", "1", "1"}, {"1", "2", "1", "2", "1", "2"}, {"2", "1", "2", "1", "2", "1"},
      {"1", "2", "0", "1", "2", "0"}, {"1", "0", "0", "2", "2", "1"}, {"2", "2", "1", "1", "0", "0"},
      {"2", "0", "1", "2", "0", "1"}, {"2", "1", "1", "0", "0", "2"}, {"0", "0", "2", "2", "1", "1"},
      {"2", "1", "0", "2", "1", "0"}, {"2", "2", "0", "0", "1", "1"}, {"0", "1", "1", "2", "2", "0"},
      {"2", "2", "2", "2", "2", "2"}, {"2", "0", "2", "0", "2", "0"}, {"0", "2", "0", "2", "0", "2"},
  };
  return rows;
}

const Rows& small_code_cyclic_part() {
  static const Rows rows = {
      {"0", "0", "0"}, {"0", "1", "2"}, {"0", "2", "1"}, {"1", "0", "2"}, {"1", "1", "1"},
      {"1", "2", "0"}, {"2", "0", "1"}, {"2", "1", "0"}, {"2", "2", "2"},
  };
  return rows;
}

const Rows& ternary11_factors() {
  static const Rows rows = {
      {"1", "1"},
      {"2", "1"},
      {"2", "2", "1", "2", "0", "1"},
      {"1", "2", "2", "2", "0", "1"},
      {"1", "0", "2", "2", "2", "1"},
      {"2", "0", "1", "2", "1", "1"},
  };
  return rows;
}

const std::vector<std::string>& ternary11_g() {
  static const std::vector<std::string> g = {"2", "1", "2", "2", "1", "2", "2", "2", "1", "1", "1"};
  return g;
}

const std::vector<std::string>& ternary11_w_g() {
  static const std::vector<std::string> w = {"b7", "b3", "b7", "b7", "b3", "b7",
                                             "b7", "b7", "b3", "b3", "b3"};
  return w;
}

const Rows& ternary11_generator() {
  static const Rows rows = {
      {"b7", "b3", "b7", "b7", "b3", "b7", "b7", "b7", "b3", "b3", "b3"},
      {"b1", "b7", "b3", "b7", "b7", "b3", "b7", "b7", "b7", "b3", "b3"},
      {"b1", "b1", "b7", "b3", "b7", "b7", "b3", "b7", "b7", "b7", "b3"},
      {"b1", "b1", "b1", "b7", "b3", "b7", "b7", "b3", "b7", "b7", "b7"},
      {"b5", "b1", "b1", "b1", "b7", "b3", "b7", "b7", "b3", "b7", "b7"},
      {"b5", "b5", "b1", "b1", "b1", "b7", "b3", "b7", "b7", "b3", "b7"},
      {"b5", "b5", "b5", "b1", "b1", "b1", "b7", "b3", "b7", "b7", "b3"},
      {"b1", "b5", "b5", "b5", "b1", "b1", "b1", "b7", "b3", "b7", "b7"},
      {"b5", "b1", "b5", "b5", "b5", "b1", "b1", "b1", "b7", "b3", "b7"},
      {"b5", "b5", "b1", "b5", "b5", "b5", "b1", "b1", "b1", "b7", "b3"},
      {"b1", "b5", "b5", "b1", "b5", "b5", "b5", "b1", "b1", "b1", "b7"},
      {"b5", "b1", "b5", "b5", "b1", "b5", "b5", "b5", "b1", "b1", "b1"},
  };
  return rows;
}

const Rows& ternary11_dual() {
  static const Rows rows = {
      {"b6", "2", "0", "b5", "b1", "0", "b5", "0", "b1", "b1", "0"},
      {"0", "b6", "2", "0", "b5", "b1", "0", "b5", "0", "b1", "b1"},
      {"b7", "0", "b6", "2", "0", "b5", "b1", "0", "b5", "0", "b1"},
      {"b7", "b7", "0", "b6", "2", "0", "b5", "b1", "0", "b5", "0"},
      {"0", "b7", "b7", "0", "b6", "2", "0", "b5", "b1", "0", "b5"},
      {"b3", "0", "b7", "b7", "0", "b6", "2", "0", "b5", "b1", "0"},
      {"0", "b3", "0", "b7", "b7", "0", "b6", "2", "0", "b5", "b1"},
      {"b7", "0", "b3", "0", "b7", "b7", "0", "b6", "2", "0", "b5"},
      {"b3", "b7", "0", "b3", "0", "b7", "b7", "0", "b6", "2", "0"},
      {"0", "b3", "b7", "0", "b3", "0", "b7", "b7", "0", "b6", "2"},
  };
  return rows;
}

const Rows& quaternary11_factors() {
  static const Rows rows = {
      {"1", "1"},
      {"1", "b10", "1", "1", "b5", "1"},
      {"1", "b5", "1", "1", "b10", "1"},
  };
  return rows;
}

const std::vector<std::string>& quaternary11_g() {
  static const std::vector<std::string> g = {"1", "0", "b5", "0", "1", "0", "1", "0", "b10", "0", "1"};
  return g;
}

const Rows& quaternary11_generator() {
  static const Rows rows = {
      {"b1", "0", "b6", "0", "b1", "0", "b1", "0", "b11", "0", "b1"},
      {"b4", "b1", "0", "b6", "0", "b1", "0", "b1", "0", "b11", "0"},
      {"0", "b4", "b1", "0", "b6", "0", "b1", "0", "b1", "0", "b11"},
      {"b14", "0", "b4", "b1", "0", "b6", "0", "b1", "0", "b1", "0"},
      {"0", "b14", "0", "b4", "b1", "0", "b6", "0", "b1", "0", "b1"},
      {"b4", "0", "b14", "0", "b4", "b1", "0", "b6", "0", "b1", "0"},
      {"0", "b4", "0", "b14", "0", "b4", "b1", "0", "b6", "0", "b1"},
      {"b4", "0", "b4", "0", "b14", "0", "b4", "b1", "0", "b6", "0"},
      {"0", "b4", "0", "b4", "0", "b14", "0", "b4", "b1", "0", "b6"},
      {"b9", "0", "b4", "0", "b4", "0", "b14", "0", "b4", "b1", "0"},
      {"0", "b9", "0", "b4", "0", "b4", "0", "b14", "0", "b4", "b1"},
      {"b4", "0", "b9", "0", "b4", "0", "b4", "0", "b14", "0", "b4"},
  };
  return rows;
}

const Rows& quaternary11_dual() {
  static const Rows rows = {
      {"b4", "b1", "b14", "0", "b14", "0", "0", "0", "b9", "0", "b9"},
      {"b6", "b4", "b1", "b14", "0", "b14", "0", "0", "0", "b9", "0"},
      {"0", "b6", "b4", "b1", "b14", "0", "b14", "0", "0", "0", "b9"},
      {"b6", "0", "b6", "b4", "b1", "b14", "0", "b14", "0", "0", "0"},
      {"0", "b6", "0", "b6", "b4", "b1", "b14", "0", "b14", "0", "0"},
      {"0", "0", "b6", "0", "b6", "b4", "b1", "b14", "0", "b14", "0"},
      {"0", "0", "0", "b6", "0", "b6", "b4", "b1", "b14", "0", "b14"},
      {"b11", "0", "0", "0", "b6", "0", "b6", "b4", "b1", "b14", "0"},
      {"0", "b11", "0", "0", "0", "b6", "0", "b6", "b4", "b1", "b14"},
      {"b11", "0", "b11", "0", "0", "0", "b6", "0", "b6", "b4", "b1"},
  };
  return rows;
}

const std::vector<unsigned long long>& quaternary11_distribution() {
  static const std::vector<unsigned long long> counts = {
      1, 0, 0, 0, 0, 825, 1980, 61875, 391875, 2025375, 6045600, 8249685};
  return counts;
}

}  // namespace conjucyclic::golden
