#include "conjucyclic/field.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "conjucyclic/errors.hpp"
#include "number_theory.hpp"

namespace conjucyclic {
namespace {

// Dense polynomials over GF(p) reduced modulo a monic `mod`, used only to vet
// candidate moduli before any tables exist.
using Digits = std::vector<std::uint32_t>;

Digits mulmod(const Digits& a, const Digits& b, std::span<const std::uint32_t> mod,
              std::uint32_t p) {
  const std::size_t d = mod.size() - 1;
  std::vector<std::uint64_t> prod(2 * d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{a[i]} * b[j]) % p;
  }
  for (std::size_t k = 2 * d - 1; k >= d; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (std::size_t i = 0; i < d; ++i) {
      prod[k - d + i] = (prod[k - d + i] + (p - c) * mod[i]) % p;
    }
  }
  Digits out(d);
  for (std::size_t i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
  return out;
}

Digits x_power(std::uint64_t e, std::span<const std::uint32_t> mod, std::uint32_t p) {
  const std::size_t d = mod.size() - 1;
  Digits result(d, 0);
  result[0] = 1;
  Digits base(d, 0);
  if (d == 1) {
    base[0] = (p - mod[0]) % p;  // x = -c0 mod (x + c0)
  } else {
    base[1] = 1;
  }
  while (e > 0) {
    if (e & 1U) result = mulmod(result, base, mod, p);
    base = mulmod(base, base, mod, p);
    e >>= 1U;
  }
  return result;
}

bool is_one(const Digits& v) {
  if (v.empty() || v[0] != 1) return false;
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (v[i] != 0) return false;
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::pair<std::uint32_t, std::uint32_t> split_prime_power(std::uint64_t q) {
  if (q < 2) throw Error(ErrorCode::not_prime, "q = " + std::to_string(q) + " is not a prime power");
  const auto primes = detail::prime_divisors(q);
  if (primes.size() != 1) {
    throw Error(ErrorCode::not_prime, "q = " + std::to_string(q) + " is not a prime power");
  }
  std::uint32_t m = 0;
  for (std::uint64_t r = q; r > 1; r /= primes[0]) ++m;
  return {static_cast<std::uint32_t>(primes[0]), m};
}

bool is_primitive_polynomial(std::uint32_t p, std::span<const std::uint32_t> poly) {
  if (poly.size() < 2 || poly.back() != 1 || poly[0] % p == 0) return false;
  const std::size_t d = poly.size() - 1;
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < d; ++i) order *= p;
  order -= 1;
  if (!is_one(x_power(order, poly, p))) return false;
  for (const auto r : detail::prime_divisors(order)) {
    if (is_one(x_power(order / r, poly, p))) return false;
  }
  return true;
}

std::vector<std::uint32_t> smallest_primitive_polynomial(std::uint32_t p, std::uint32_t degree) {
  // Odometer over (c0, ..., c_{d-1}) with c0 the most significant digit.
  std::vector<std::uint32_t> poly(degree + 1, 0);
  poly[degree] = 1;
  while (true) {
    if (is_primitive_polynomial(p, poly)) return poly;
    std::size_t i = degree;
    while (i > 0) {
      --i;
      if (++poly[i] < p) break;
      poly[i] = 0;
      if (i == 0) {
        throw Error(ErrorCode::no_primitive_polynomial,
                    "no primitive polynomial of degree " + std::to_string(degree));
      }
    }
  }
}

FieldTower::FieldTower(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), modulus_(std::move(modulus)) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::invalid_argument, "extension degree must be positive");
  std::uint64_t q = 1;
  if (!detail::checked_pow(p, m, std::uint64_t{1} << 12, q) || q * q > kMaxFieldSize) {
    throw Error(ErrorCode::too_large, "p^(2m) exceeds 2^24");
  }
  q_ = static_cast<std::uint32_t>(q);
  size_ = q_ * q_;
  const std::uint32_t degree = 2 * m;
  if (modulus_.size() != degree + 1) {
    throw Error(ErrorCode::invalid_modulus, "modulus must have degree 2m");
  }
  for (auto c : modulus_) {
    if (c >= p) throw Error(ErrorCode::invalid_modulus, "modulus coefficient out of range");
  }
  if (!is_primitive_polynomial(p, modulus_)) {
    throw Error(ErrorCode::invalid_modulus, "modulus is not primitive over GF(p)");
  }

  digit_weight_.resize(degree);
  for (std::uint32_t i = 0, w = 1; i < degree; ++i, w *= p) digit_weight_[i] = w;

  exp_.resize(size_ - 1);
  log_.assign(size_, 0);
  std::vector<std::uint32_t> state(degree, 0);
  state[0] = 1;
  for (std::uint32_t k = 0; k + 1 < size_; ++k) {
    std::uint32_t code = 0;
    for (std::uint32_t i = 0; i < degree; ++i) code += state[i] * digit_weight_[i];
    exp_[k] = code;
    log_[code] = k;
    // state *= x
    const std::uint32_t top = state[degree - 1];
    for (std::uint32_t i = degree - 1; i > 0; --i) state[i] = state[i - 1];
    state[0] = 0;
    if (top != 0) {
      for (std::uint32_t i = 0; i < degree; ++i) {
        state[i] = (state[i] + (p - top) * modulus_[i]) % p;
      }
    }
  }

  neg_.resize(size_);
  for (std::uint32_t c = 0; c < size_; ++c) {
    std::uint32_t out = 0;
    for (std::uint32_t i = 0; i < degree; ++i) {
      const std::uint32_t digit = (c / digit_weight_[i]) % p;
      out += ((p - digit) % p) * digit_weight_[i];
    }
    neg_[c] = out;
  }

  if (p != 2 && size_ <= 1024) {
    add_table_.resize(std::size_t{size_} * size_);
    for (std::uint32_t a = 0; a < size_; ++a) {
      for (std::uint32_t b = 0; b < size_; ++b) {
        std::uint32_t out = 0;
        for (std::uint32_t i = 0; i < degree; ++i) {
          const std::uint32_t da = (a / digit_weight_[i]) % p;
          const std::uint32_t db = (b / digit_weight_[i]) % p;
          out += ((da + db) % p) * digit_weight_[i];
        }
        add_table_[std::size_t{a} * size_ + b] = static_cast<std::uint16_t>(out);
      }
    }
  }

  subfield_.push_back(kZero);
  const Element gen = subfield_generator();
  Element x = kOne;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    subfield_.push_back(x);
    x = mul(x, gen);
  }
  std::sort(subfield_.begin(), subfield_.end());
}

Element FieldTower::add(Element a, Element b) const noexcept {
  if (p_ == 2) return Element{a.code ^ b.code};
  if (!add_table_.empty()) return Element{add_table_[std::size_t{a.code} * size_ + b.code]};
  std::uint32_t out = 0;
  std::uint32_t x = a.code;
  std::uint32_t y = b.code;
  for (std::size_t i = 0; i < digit_weight_.size(); ++i) {
    out += ((x % p_ + y % p_) % p_) * digit_weight_[i];
    x /= p_;
    y /= p_;
  }
  return Element{out};
}

Element FieldTower::sub(Element a, Element b) const noexcept { return add(a, neg(b)); }

Element FieldTower::mul(Element a, Element b) const noexcept {
  if (a.code == 0 || b.code == 0) return kZero;
  std::uint32_t k = log_[a.code] + log_[b.code];
  if (k >= size_ - 1) k -= size_ - 1;
  return Element{exp_[k]};
}

Element FieldTower::inv(Element a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  const std::uint32_t k = log_[a.code];
  return Element{exp_[k == 0 ? 0 : size_ - 1 - k]};
}

Element FieldTower::div(Element a, Element b) const { return mul(a, inv(b)); }

Element FieldTower::pow(Element a, std::uint64_t e) const noexcept {
  if (e == 0) return kOne;
  if (a.code == 0) return kZero;
  const std::uint64_t n = size_ - 1;
  return Element{exp_[(std::uint64_t{log_[a.code]} * (e % n)) % n]};
}

Element FieldTower::conj(Element a) const noexcept {
  if (a.code == 0) return kZero;
  const std::uint64_t n = size_ - 1;
  return Element{exp_[(std::uint64_t{log_[a.code]} * q_) % n]};
}

std::optional<std::uint32_t> FieldTower::log(Element a) const noexcept {
  if (a.code == 0 || a.code >= size_) return std::nullopt;
  return log_[a.code];
}

Element FieldTower::from_int(std::int64_t k) const noexcept {
  const auto p = static_cast<std::int64_t>(p_);
  return Element{static_cast<std::uint32_t>(((k % p) + p) % p)};
}

std::string FieldTower::format(Element a) const {
  if (a.code < p_) return std::to_string(a.code);
  return "b" + std::to_string(log_[a.code]);
}

Element FieldTower::parse(const std::string& text) const {
  auto number = [&](std::string_view digits) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty()) {
      throw Error(ErrorCode::invalid_argument, "cannot parse field element '" + text + "'");
    }
    return value;
  };
  if (!text.empty() && (text[0] == 'b' || text[0] == 'B')) {
    return exp(number(std::string_view(text).substr(1)));
  }
  if (!text.empty() && text[0] == '#') {
    const auto code = number(std::string_view(text).substr(1));
    if (code >= size_) throw Error(ErrorCode::invalid_argument, "element code out of range: " + text);
    return Element{static_cast<std::uint32_t>(code)};
  }
  const auto value = number(text);
  if (value >= p_) {
    throw Error(ErrorCode::invalid_argument, "'" + text + "' is not a prime-field element");
  }
  return Element{static_cast<std::uint32_t>(value)};
}

TowerPtr build_tower(std::uint32_t p, std::uint32_t m) {
  if (!is_prime(p)) throw Error(ErrorCode::not_prime, std::to_string(p) + " is not prime");
  if (m == 0) throw Error(ErrorCode::invalid_argument, "extension degree must be positive");
  std::uint64_t size = 0;
  if (!detail::checked_pow(p, 2ULL * m, kMaxFieldSize, size)) {
    throw Error(ErrorCode::too_large, "p^(2m) exceeds 2^24");
  }
  auto modulus = conway_polynomial(p, 2 * m);
  if (!modulus) modulus = smallest_primitive_polynomial(p, 2 * m);
  return std::make_shared<const FieldTower>(p, m, std::move(*modulus));
}

}  // namespace conjucyclic
