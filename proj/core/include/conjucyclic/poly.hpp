#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <utility>
#include <vector>

#include "conjucyclic/field.hpp"

namespace conjucyclic {

/// Dense polynomial over GF(q), low degree first, no trailing zeros.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Element> coeffs);

  static Polynomial constant(Element c) { return Polynomial({c}); }
  static Polynomial monomial(Element c, std::size_t degree);

  [[nodiscard]] const std::vector<Element>& coeffs() const noexcept { return coeffs_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] std::ptrdiff_t degree() const noexcept {
    return static_cast<std::ptrdiff_t>(coeffs_.size()) - 1;
  }
  [[nodiscard]] Element lead() const noexcept { return coeffs_.empty() ? kZero : coeffs_.back(); }
  [[nodiscard]] Element operator[](std::size_t i) const noexcept {
    return i < coeffs_.size() ? coeffs_[i] : kZero;
  }
  [[nodiscard]] bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == kOne; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;
  /// Degree first, then coefficient codes low degree first.
  friend bool operator<(const Polynomial& a, const Polynomial& b);

 private:
  std::vector<Element> coeffs_;
};

namespace poly {

[[nodiscard]] Polynomial add(const FieldTower& t, const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial sub(const FieldTower& t, const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial mul(const FieldTower& t, const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial scale(const FieldTower& t, const Polynomial& a, Element c);

struct DivMod {
  Polynomial quotient;
  Polynomial remainder;
};

/// Throws Error(division_by_zero_polynomial).
[[nodiscard]] DivMod divmod(const FieldTower& t, const Polynomial& a, const Polynomial& b);
[[nodiscard]] Polynomial mod(const FieldTower& t, const Polynomial& a, const Polynomial& b);
/// Monic gcd; gcd(0, 0) = 0.
[[nodiscard]] Polynomial gcd(const FieldTower& t, Polynomial a, Polynomial b);
[[nodiscard]] Element evaluate(const FieldTower& t, const Polynomial& f, Element x);
[[nodiscard]] Polynomial make_monic(const FieldTower& t, const Polynomial& a);
[[nodiscard]] Polynomial pow(const FieldTower& t, const Polynomial& a, std::uint64_t e);
[[nodiscard]] Polynomial pow_mod(const FieldTower& t, const Polynomial& base, std::uint64_t e,
                                 const Polynomial& modulus);

/// x^N - 1.
[[nodiscard]] Polynomial x_pow_minus_one(const FieldTower& t, std::size_t degree);

/// Irreducibility over GF(q): root absence for degree <= 3, otherwise
/// gcd(x^{q^i} - x mod f, f) = 1 for 1 <= i < deg f.
[[nodiscard]] bool is_irreducible(const FieldTower& t, const Polynomial& f);

}  // namespace poly

/// Monic reciprocal x^{deg h} h(1/x) / h(0)-normalised.  Throws
/// Error(zero_constant_term) when h(0) = 0.
[[nodiscard]] Polynomial reciprocal_h_star(const FieldTower& t, const Polynomial& h);

/// x^{2n} - 1 = (g_1 ... g_t)^{p^ell} with 2n = p^ell * n0, gcd(n0, p) = 1.
struct Factorization {
  std::size_t n = 0;  // half the code length
  std::vector<Polynomial> base;  // distinct monic irreducibles, canonical order
  std::uint64_t multiplicity = 1;  // p^ell
  std::uint64_t n0 = 1;
  std::uint32_t ell = 0;

  [[nodiscard]] std::size_t t() const noexcept { return base.size(); }
  [[nodiscard]] std::vector<std::size_t> degrees() const;
  /// (p^ell + 1)^t; throws Error(too_large) past 2^64.
  [[nodiscard]] std::uint64_t divisor_count() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Factors x^{2n} - 1 through q-cyclotomic cosets modulo n0 and a root of
/// unity in the smallest extension GF(q^s) with n0 | q^s - 1 (q^s <= 2^32).
[[nodiscard]] Factorization factor_x2n_minus_1(const FieldTower& t, std::size_t n);

/// Exponent tuple (s_1, ..., s_t), 0 <= s_i <= p^ell.
struct DivisorIndex {
  std::vector<std::uint32_t> exponents;
  friend bool operator==(const DivisorIndex&, const DivisorIndex&) = default;
};

/// Throws Error(invalid_argument) for a tuple of the wrong shape.
[[nodiscard]] Polynomial expand_divisor(const FieldTower& t, const Factorization& f,
                                        const DivisorIndex& index);

/// Recovers the exponent tuple of a monic divisor; throws Error(not_a_divisor).
[[nodiscard]] DivisorIndex divisor_index_of(const FieldTower& t, const Factorization& f,
                                            const Polynomial& g);

/// Lazy odometer over all divisors in lexicographic order of exponent tuples
/// (last exponent varies fastest).  Single pass; cheap to re-create.
class DivisorRange {
 public:
  using value_type = std::pair<DivisorIndex, Polynomial>;

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = DivisorRange::value_type;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_; }

   private:
    friend class DivisorRange;
    iterator(const FieldTower* t, const Factorization* f);
    void refresh();

    const FieldTower* tower_ = nullptr;
    const Factorization* factorization_ = nullptr;
    value_type current_;
    bool done_ = true;
  };

  DivisorRange(const FieldTower& t, const Factorization& f) : tower_(&t), factorization_(&f) {}

  [[nodiscard]] iterator begin() const { return iterator(tower_, factorization_); }
  [[nodiscard]] iterator end() const { return {}; }

 private:
  const FieldTower* tower_;
  const Factorization* factorization_;
};

[[nodiscard]] inline DivisorRange enumerate_divisors(const FieldTower& t, const Factorization& f) {
  return DivisorRange(t, f);
}

}  // namespace conjucyclic
