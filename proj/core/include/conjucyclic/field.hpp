#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace conjucyclic {

/// An element of GF(q^2), stored as the base-p digits (little-endian) of its
/// coefficient vector over GF(p).  The integer code is also the wire format.
/// Elements of the subfield GF(q) use the same encoding.
struct Element {
  std::uint32_t code = 0;

  constexpr auto operator<=>(const Element&) const = default;
  [[nodiscard]] constexpr bool is_zero() const noexcept { return code == 0; }
};

inline constexpr Element kZero{0};
inline constexpr Element kOne{1};

/// The tower GF(p) < GF(q) < GF(q^2), q = p^m, realised once as GF(q^2) with a
/// primitive element beta (the residue class of the modulus variable).
/// GF(q) is the fixed field of x -> x^q.  Immutable after construction.
class FieldTower {
 public:
  /// `modulus` is the monic degree-2m polynomial over GF(p), low degree
  /// first.  Throws Error(invalid_modulus) if it is not primitive.
  FieldTower(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  [[nodiscard]] std::uint32_t p() const noexcept { return p_; }
  [[nodiscard]] std::uint32_t m() const noexcept { return m_; }
  [[nodiscard]] std::uint32_t q() const noexcept { return q_; }
  /// |GF(q^2)| = q^2.
  [[nodiscard]] std::uint32_t size() const noexcept { return size_; }
  [[nodiscard]] const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  [[nodiscard]] Element beta() const noexcept { return Element{exp_[1]}; }
  [[nodiscard]] bool valid(Element a) const noexcept { return a.code < size_; }

  [[nodiscard]] Element add(Element a, Element b) const noexcept;
  [[nodiscard]] Element sub(Element a, Element b) const noexcept;
  [[nodiscard]] Element neg(Element a) const noexcept { return Element{neg_[a.code]}; }
  [[nodiscard]] Element mul(Element a, Element b) const noexcept;
  /// Throws std::domain_error on a zero divisor.
  [[nodiscard]] Element inv(Element a) const;
  [[nodiscard]] Element div(Element a, Element b) const;
  [[nodiscard]] Element pow(Element a, std::uint64_t e) const noexcept;

  /// x -> x^q.
  [[nodiscard]] Element conj(Element a) const noexcept;
  /// x + x^q, always in GF(q).
  [[nodiscard]] Element trace(Element a) const noexcept { return add(a, conj(a)); }
  [[nodiscard]] bool in_subfield(Element a) const noexcept { return conj(a) == a; }

  /// beta^k for any k (reduced mod q^2 - 1).
  [[nodiscard]] Element exp(std::uint64_t k) const noexcept { return Element{exp_[k % (size_ - 1)]}; }
  /// Discrete log base beta; nullopt for zero.
  [[nodiscard]] std::optional<std::uint32_t> log(Element a) const noexcept;

  /// The image of the integer k in the prime field.
  [[nodiscard]] Element from_int(std::int64_t k) const noexcept;
  /// beta^(q+1), a generator of GF(q)^*.
  [[nodiscard]] Element subfield_generator() const noexcept { return exp(q_ + 1); }
  /// All q elements of GF(q), sorted by code.
  [[nodiscard]] const std::vector<Element>& subfield_elements() const noexcept { return subfield_; }

  /// "0", the integer for prime-field elements, else "b<k>" for beta^k.
  [[nodiscard]] std::string format(Element a) const;
  /// Inverse of format(); also accepts a bare integer code prefixed with '#'.
  [[nodiscard]] Element parse(const std::string& text) const;

 private:
  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::uint32_t size_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> exp_;  // exp_[k] = code of beta^k, k < size-1
  std::vector<std::uint32_t> log_;  // log_[code], log_[0] unused
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> digit_weight_;  // p^i
  std::vector<std::uint16_t> add_table_;     // only for small odd-characteristic fields
  std::vector<Element> subfield_;
};

using TowerPtr = std::shared_ptr<const FieldTower>;

/// Largest supported q^2.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 24;

[[nodiscard]] bool is_prime(std::uint64_t n) noexcept;

/// Builds GF(p^m) < GF(p^{2m}).  The modulus is the Conway polynomial when the
/// table has one, otherwise the smallest primitive polynomial (coefficient
/// tuples compared low degree first).
[[nodiscard]] TowerPtr build_tower(std::uint32_t p, std::uint32_t m);

/// Splits a prime power into (p, m); throws Error(not_prime) otherwise.
[[nodiscard]] std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q);

/// Conway polynomial of GF(p^degree), low degree first, if known.  Consults
/// the JSON file named by CONJUCYCLIC_CONWAY_TABLE before the built-in table.
[[nodiscard]] std::optional<std::vector<std::uint32_t>> conway_polynomial(std::uint32_t p,
                                                                         std::uint32_t degree);

/// Whether the monic `poly` over GF(p) has x as a generator of the unit group
/// of GF(p)[x]/(poly), i.e. is primitive.
[[nodiscard]] bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> poly);

[[nodiscard]] std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p,
                                                                       std::uint32_t degree);

}  // namespace conjucyclic
