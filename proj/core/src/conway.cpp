#include <cstdlib>
#include <fstream>
#include <map>
#include <string>
#include <utility>

#include <nlohmann/json.hpp>

#include "conjucyclic/errors.hpp"
#include "conjucyclic/field.hpp"

namespace conjucyclic {
namespace {

using Key = std::pair<std::uint32_t, std::uint32_t>;

const std::map<Key, std::vector<std::uint32_t>>& builtin_table() {
  // Coefficients low degree first.
  static const std::map<Key, std::vector<std::uint32_t>> table = {
      {{2, 2}, {1, 1, 1}},
      {{2, 4}, {1, 1, 0, 0, 1}},
      {{2, 6}, {1, 1, 0, 1, 1, 0, 1}},
      {{2, 8}, {1, 0, 1, 1, 1, 0, 0, 0, 1}},
      {{3, 2}, {2, 2, 1}},
      {{3, 4}, {2, 0, 0, 2, 1}},
      {{5, 2}, {2, 4, 1}},
      {{7, 2}, {3, 6, 1}},
  };
  return table;
}

std::optional<std::vector<std::uint32_t>> from_override(std::uint32_t p, std::uint32_t degree) {
  const char* path = std::getenv("CONJUCYCLIC_CONWAY_TABLE");
  if (path == nullptr || *path == '\0') return std::nullopt;
  std::ifstream in(path);
  if (!in) {
    throw Error(ErrorCode::invalid_argument,
                std::string("cannot open CONJUCYCLIC_CONWAY_TABLE file ") + path);
  }
  nlohmann::json table;
  try {
    in >> table;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::invalid_argument, std::string("malformed Conway table: ") + e.what());
  }
  std::uint64_t order = 1;
  for (std::uint32_t i = 0; i < degree; ++i) order *= p;
  // Keys may be written either as "p^d" or as the field order.
  for (const auto& key : {std::to_string(p) + "^" + std::to_string(degree), std::to_string(order)}) {
    if (auto it = table.find(key); it != table.end()) {
      auto coeffs = it->get<std::vector<std::uint32_t>>();
      if (coeffs.size() != degree + 1 || coeffs.back() != 1) {
        throw Error(ErrorCode::invalid_modulus, "override for " + key + " is not monic of degree " +
                                                    std::to_string(degree));
      }
      return coeffs;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p, std::uint32_t degree) {
  if (auto over = from_override(p, degree)) return over;
  const auto& table = builtin_table();
  if (auto it = table.find({p, degree}); it != table.end()) return it->second;
  return std::nullopt;
}

}  // namespace conjucyclic
