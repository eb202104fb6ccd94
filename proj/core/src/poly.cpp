#include "conjucyclic/poly.hpp"

#include <algorithm>
#include <string>

#include "conjucyclic/errors.hpp"
#include "number_theory.hpp"

namespace conjucyclic {

Polynomial::Polynomial(std::vector<Element> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::monomial(Element c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, kZero);
  coeffs[degree] = c;
  return Polynomial(std::move(coeffs));
}

bool operator<(const Polynomial& a, const Polynomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return a.coeffs_ < b.coeffs_;
}

namespace poly {

Polynomial add(const FieldTower& t, const Polynomial& a, const Polynomial& b) {
  std::vector<Element> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t.add(a[i], b[i]);
  return Polynomial(std::move(out));
}

Polynomial sub(const FieldTower& t, const Polynomial& a, const Polynomial& b) {
  std::vector<Element> out(std::max(a.coeffs().size(), b.coeffs().size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t.sub(a[i], b[i]);
  return Polynomial(std::move(out));
}

Polynomial mul(const FieldTower& t, const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  const auto& x = a.coeffs();
  const auto& y = b.coeffs();
  std::vector<Element> out(x.size() + y.size() - 1, kZero);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < y.size(); ++j) out[i + j] = t.add(out[i + j], t.mul(x[i], y[j]));
  }
  return Polynomial(std::move(out));
}

Polynomial scale(const FieldTower& t, const Polynomial& a, Element c) {
  std::vector<Element> out(a.coeffs().size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = t.mul(a[i], c);
  return Polynomial(std::move(out));
}

DivMod divmod(const FieldTower& t, const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::division_by_zero_polynomial, "divisor is zero");
  if (a.degree() < b.degree()) return {Polynomial{}, a};
  std::vector<Element> rem = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t db = d.size() - 1;
  const Element lead_inv = t.inv(b.lead());
  std::vector<Element> quot(rem.size() - db, kZero);
  for (std::size_t k = rem.size(); k-- > db;) {
    const Element c = t.mul(rem[k], lead_inv);
    quot[k - db] = c;
    if (c.is_zero()) continue;
    for (std::size_t i = 0; i <= db; ++i) rem[k - db + i] = t.sub(rem[k - db + i], t.mul(c, d[i]));
  }
  rem.resize(db);
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial mod(const FieldTower& t, const Polynomial& a, const Polynomial& b) {
  return divmod(t, a, b).remainder;
}

Polynomial make_monic(const FieldTower& t, const Polynomial& a) {
  if (a.is_zero() || a.is_monic()) return a;
  return scale(t, a, t.inv(a.lead()));
}

Polynomial gcd(const FieldTower& t, Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = mod(t, a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(t, a);
}

Element evaluate(const FieldTower& t, const Polynomial& f, Element x) {
  Element acc = kZero;
  const auto& c = f.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) acc = t.add(t.mul(acc, x), c[i]);
  return acc;
}

Polynomial pow(const FieldTower& t, const Polynomial& a, std::uint64_t e) {
  Polynomial result = Polynomial::constant(kOne);
  Polynomial base = a;
  while (e > 0) {
    if (e & 1U) result = mul(t, result, base);
    e >>= 1U;
    if (e > 0) base = mul(t, base, base);
  }
  return result;
}

Polynomial pow_mod(const FieldTower& t, const Polynomial& base, std::uint64_t e,
                   const Polynomial& modulus) {
  Polynomial result = mod(t, Polynomial::constant(kOne), modulus);
  Polynomial b = mod(t, base, modulus);
  while (e > 0) {
    if (e & 1U) result = mod(t, mul(t, result, b), modulus);
    e >>= 1U;
    if (e > 0) b = mod(t, mul(t, b, b), modulus);
  }
  return result;
}

Polynomial x_pow_minus_one(const FieldTower& t, std::size_t degree) {
  std::vector<Element> c(degree + 1, kZero);
  c[0] = t.neg(kOne);
  c[degree] = t.add(c[degree], kOne);
  return Polynomial(std::move(c));
}

bool is_irreducible(const FieldTower& t, const Polynomial& f) {
  const auto d = f.degree();
  if (d <= 0) return false;
  if (d == 1) return true;
  if (d <= 3) {
    for (const Element x : t.subfield_elements()) {
      if (evaluate(t, f, x).is_zero()) return false;
    }
    return true;
  }
  const Polynomial x = Polynomial::monomial(kOne, 1);
  Polynomial frob = x;
  for (std::ptrdiff_t i = 1; i < d; ++i) {
    frob = pow_mod(t, frob, t.q(), f);
    if (gcd(t, sub(t, frob, x), f).degree() != 0) return false;
  }
  return true;
}

}  // namespace poly

Polynomial reciprocal_h_star(const FieldTower& t, const Polynomial& h) {
  if (h.is_zero() || h[0].is_zero()) {
    throw Error(ErrorCode::zero_constant_term, "reciprocal needs a nonzero constant term");
  }
  std::vector<Element> rev(h.coeffs().rbegin(), h.coeffs().rend());
  return poly::make_monic(t, Polynomial(std::move(rev)));
}

namespace {

// GF(q^s) = GF(q)[y]/(r(y)); elements are length-s coefficient vectors.
class Extension {
 public:
  Extension(const FieldTower& t, Polynomial r) : t_(t), r_(std::move(r)) {}

  [[nodiscard]] std::size_t degree() const { return static_cast<std::size_t>(r_.degree()); }

  [[nodiscard]] std::vector<Element> one() const {
    std::vector<Element> v(degree(), kZero);
    v[0] = kOne;
    return v;
  }

  [[nodiscard]] std::vector<Element> mul(const std::vector<Element>& a,
                                         const std::vector<Element>& b) const {
    const std::size_t s = degree();
    std::vector<Element> prod(2 * s - 1, kZero);
    for (std::size_t i = 0; i < s; ++i) {
      if (a[i].is_zero()) continue;
      for (std::size_t j = 0; j < s; ++j) prod[i + j] = t_.add(prod[i + j], t_.mul(a[i], b[j]));
    }
    const auto& rc = r_.coeffs();
    for (std::size_t k = prod.size(); k-- > s;) {
      const Element c = prod[k];
      if (c.is_zero()) continue;
      prod[k] = kZero;
      for (std::size_t i = 0; i < s; ++i) prod[k - s + i] = t_.sub(prod[k - s + i], t_.mul(c, rc[i]));
    }
    prod.resize(s);
    return prod;
  }

  [[nodiscard]] std::vector<Element> pow(std::vector<Element> base, std::uint64_t e) const {
    std::vector<Element> result = one();
    while (e > 0) {
      if (e & 1U) result = mul(result, base);
      e >>= 1U;
      if (e > 0) base = mul(base, base);
    }
    return result;
  }

  [[nodiscard]] std::vector<Element> add(const std::vector<Element>& a,
                                         const std::vector<Element>& b) const {
    std::vector<Element> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = t_.add(a[i], b[i]);
    return out;
  }

  [[nodiscard]] std::vector<Element> neg(const std::vector<Element>& a) const {
    std::vector<Element> out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) out[i] = t_.neg(a[i]);
    return out;
  }

 private:
  const FieldTower& t_;
  Polynomial r_;
};

// Smallest monic irreducible of degree s over GF(q), coefficient tuples
// enumerated low degree first.
Polynomial smallest_irreducible(const FieldTower& t, std::size_t s) {
  if (s == 1) return Polynomial::monomial(kOne, 1);
  const auto& elems = t.subfield_elements();
  std::vector<std::size_t> idx(s, 0);
  while (true) {
    std::vector<Element> c(s + 1);
    for (std::size_t i = 0; i < s; ++i) c[i] = elems[idx[i]];
    c[s] = kOne;
    Polynomial f(std::move(c));
    if (poly::is_irreducible(t, f)) return f;
    std::size_t i = 0;
    while (i < s && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == s) throw Error(ErrorCode::invalid_argument, "no irreducible polynomial found");
  }
}

bool is_one(const std::vector<Element>& v) {
  if (v[0] != kOne) return false;
  return std::all_of(v.begin() + 1, v.end(), [](Element e) { return e.is_zero(); });
}

// Element of exact order n0 in the extension.
std::vector<Element> root_of_unity(const FieldTower& t, const Extension& ext, std::uint64_t ext_size,
                                   std::uint64_t n0) {
  const auto primes = detail::prime_divisors(n0);
  const auto& elems = t.subfield_elements();
  const std::size_t s = ext.degree();
  std::vector<std::size_t> idx(s, 0);
  idx[0] = 1;
  while (true) {
    std::vector<Element> z(s);
    for (std::size_t i = 0; i < s; ++i) z[i] = elems[idx[i]];
    auto gamma = ext.pow(z, (ext_size - 1) / n0);
    const bool exact = std::none_of(primes.begin(), primes.end(),
                                    [&](std::uint64_t r) { return is_one(ext.pow(gamma, n0 / r)); });
    if (exact) return gamma;
    std::size_t i = 0;
    while (i < s && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == s) throw Error(ErrorCode::invalid_argument, "no root of unity of the requested order");
  }
}

}  // namespace

std::vector<std::size_t> Factorization::degrees() const {
  std::vector<std::size_t> out;
  out.reserve(base.size());
  for (const auto& g : base) out.push_back(static_cast<std::size_t>(g.degree()));
  return out;
}

std::uint64_t Factorization::divisor_count() const {
  std::uint64_t count = 0;
  if (!detail::checked_pow(multiplicity + 1, base.size(), ~std::uint64_t{0}, count)) {
    throw Error(ErrorCode::too_large, "divisor count overflows 64 bits");
  }
  return count;
}

Factorization factor_x2n_minus_1(const FieldTower& t, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::invalid_argument, "n must be positive");
  Factorization f;
  f.n = n;
  std::uint64_t n0 = 2 * static_cast<std::uint64_t>(n);
  while (n0 % t.p() == 0) {
    n0 /= t.p();
    f.multiplicity *= t.p();
    ++f.ell;
  }
  f.n0 = n0;

  const std::uint64_t s = detail::multiplicative_order(t.q(), n0);
  std::uint64_t ext_size = 0;
  if (!detail::checked_pow(t.q(), s, std::uint64_t{1} << 32, ext_size)) {
    throw Error(ErrorCode::too_large, "splitting field of x^n0 - 1 exceeds 2^32 elements");
  }
  const Extension ext(t, smallest_irreducible(t, s));
  const auto gamma = root_of_unity(t, ext, ext_size, n0);

  std::vector<bool> seen(n0, false);
  for (std::uint64_t a = 0; a < n0; ++a) {
    if (seen[a]) continue;
    // Product of (x - gamma^j) over the coset, coefficients in the extension.
    std::vector<std::vector<Element>> acc{ext.one()};
    std::uint64_t j = a;
    do {
      seen[j] = true;
      const auto root = ext.neg(ext.pow(gamma, j));
      std::vector<std::vector<Element>> next(acc.size() + 1, std::vector<Element>(s, kZero));
      for (std::size_t i = 0; i < acc.size(); ++i) {
        next[i + 1] = ext.add(next[i + 1], acc[i]);
        next[i] = ext.add(next[i], ext.mul(acc[i], root));
      }
      acc = std::move(next);
      j = (j * t.q()) % n0;
    } while (j != a);

    std::vector<Element> coeffs;
    coeffs.reserve(acc.size());
    for (const auto& c : acc) {
      if (!std::all_of(c.begin() + 1, c.end(), [](Element e) { return e.is_zero(); })) {
        throw Error(ErrorCode::invalid_argument, "coset product left the base field");
      }
      coeffs.push_back(c[0]);
    }
    f.base.emplace_back(std::move(coeffs));
  }
  std::sort(f.base.begin(), f.base.end());
  return f;
}

Polynomial expand_divisor(const FieldTower& t, const Factorization& f, const DivisorIndex& index) {
  if (index.exponents.size() != f.t()) {
    throw Error(ErrorCode::invalid_argument, "expected " + std::to_string(f.t()) + " exponents");
  }
  Polynomial g = Polynomial::constant(kOne);
  for (std::size_t i = 0; i < f.t(); ++i) {
    if (index.exponents[i] > f.multiplicity) {
      throw Error(ErrorCode::invalid_argument,
                  "exponent exceeds multiplicity " + std::to_string(f.multiplicity));
    }
    g = poly::mul(t, g, poly::pow(t, f.base[i], index.exponents[i]));
  }
  return g;
}

DivisorIndex divisor_index_of(const FieldTower& t, const Factorization& f, const Polynomial& g) {
  if (g.is_zero()) throw Error(ErrorCode::not_a_divisor, "zero polynomial");
  Polynomial rest = poly::make_monic(t, g);
  DivisorIndex index;
  for (const auto& factor : f.base) {
    std::uint32_t s = 0;
    while (rest.degree() >= factor.degree()) {
      auto [quot, rem] = poly::divmod(t, rest, factor);
      if (!rem.is_zero()) break;
      rest = std::move(quot);
      ++s;
    }
    index.exponents.push_back(s);
  }
  const bool ok = rest.degree() == 0 &&
                  std::all_of(index.exponents.begin(), index.exponents.end(),
                              [&](std::uint32_t s) { return s <= f.multiplicity; });
  if (!ok) throw Error(ErrorCode::not_a_divisor, "polynomial does not divide x^2n - 1");
  return index;
}

DivisorRange::iterator::iterator(const FieldTower* t, const Factorization* f)
    : tower_(t), factorization_(f), done_(false) {
  current_.first.exponents.assign(f->t(), 0);
  refresh();
}

void DivisorRange::iterator::refresh() {
  current_.second = expand_divisor(*tower_, *factorization_, current_.first);
}

DivisorRange::iterator& DivisorRange::iterator::operator++() {
  auto& e = current_.first.exponents;
  std::size_t i = e.size();
  while (i > 0) {
    --i;
    if (++e[i] <= factorization_->multiplicity) {
      refresh();
      return *this;
    }
    e[i] = 0;
  }
  done_ = true;
  return *this;
}

}  // namespace conjucyclic
