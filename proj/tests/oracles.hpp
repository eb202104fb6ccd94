#pragma once

// Brute-force reference implementations.  None of these touch the library's
// log tables, Gray walk or elimination code; they are slow on purpose and only
// meant for tiny parameters.

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "conjucyclic/conjucyclic.hpp"
#include "conjucyclic/field.hpp"
#include "conjucyclic/poly.hpp"

namespace oracle {

using conjucyclic::Element;
using conjucyclic::FieldTower;
using conjucyclic::Matrix;
using conjucyclic::Polynomial;
using conjucyclic::Vector;
using CodeSet = std::set<Vector>;

// GF(p^d) as digit vectors reduced schoolbook-style modulo the tower's modulus.
class NaiveField {
 public:
  explicit NaiveField(const FieldTower& t) : p_(t.p()), mod_(t.modulus()) {}

  [[nodiscard]] std::size_t degree() const { return mod_.size() - 1; }

  [[nodiscard]] std::vector<std::uint32_t> digits(Element a) const {
    std::vector<std::uint32_t> d(degree());
    std::uint32_t c = a.code;
    for (auto& x : d) {
      x = c % p_;
      c /= p_;
    }
    return d;
  }

  [[nodiscard]] Element pack(const std::vector<std::uint32_t>& d) const {
    std::uint32_t c = 0;
    for (std::size_t i = d.size(); i-- > 0;) c = c * p_ + d[i];
    return Element{c};
  }

  [[nodiscard]] Element add(Element a, Element b) const {
    auto x = digits(a);
    const auto y = digits(b);
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = (x[i] + y[i]) % p_;
    return pack(x);
  }

  [[nodiscard]] Element mul(Element a, Element b) const {
    const auto x = digits(a);
    const auto y = digits(b);
    const std::size_t d = degree();
    std::vector<std::uint64_t> prod(2 * d, 0);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) prod[i + j] = (prod[i + j] + std::uint64_t{x[i]} * y[j]) % p_;
    }
    for (std::size_t k = 2 * d - 1; k >= d; --k) {
      const auto c = prod[k];
      prod[k] = 0;
      for (std::size_t i = 0; i < d; ++i) prod[k - d + i] = (prod[k - d + i] + (p_ - c) * mod_[i]) % p_;
    }
    std::vector<std::uint32_t> out(d);
    for (std::size_t i = 0; i < d; ++i) out[i] = static_cast<std::uint32_t>(prod[i]);
    return pack(out);
  }

  [[nodiscard]] Element pow(Element a, std::uint64_t e) const {
    Element r{1};
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }

 private:
  std::uint32_t p_;
  std::vector<std::uint32_t> mod_;
};

// Every vector of GF(q)^len (entries from the subfield), in odometer order.
inline std::vector<Vector> all_fq_vectors(const FieldTower& t, std::size_t len) {
  const auto& s = t.subfield_elements();
  std::vector<Vector> out;
  std::vector<std::size_t> idx(len, 0);
  for (;;) {
    Vector v(len);
    for (std::size_t i = 0; i < len; ++i) v[i] = s[idx[i]];
    out.push_back(std::move(v));
    std::size_t i = 0;
    while (i < len && ++idx[i] == s.size()) idx[i++] = 0;
    if (i == len) break;
  }
  return out;
}

// Every vector of GF(q^2)^len.
inline std::vector<Vector> all_vectors(const FieldTower& t, std::size_t len) {
  std::vector<Vector> out;
  Vector v(len, Element{0});
  for (;;) {
    out.push_back(v);
    std::size_t i = 0;
    while (i < len && ++v[i].code == t.size()) v[i++].code = 0;
    if (i == len) break;
  }
  return out;
}

inline Vector lin_comb(const FieldTower& t, const Vector& coeffs, const Matrix& rows, std::size_t width) {
  Vector out(width, Element{0});
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t i = 0; i < width; ++i) out[i] = t.add(out[i], t.mul(coeffs[r], rows[r][i]));
  }
  return out;
}

// GF(q)-span by enumerating all coefficient tuples.
inline CodeSet brute_span(const FieldTower& t, const Matrix& rows, std::size_t width) {
  CodeSet out;
  for (const auto& c : all_fq_vectors(t, rows.size())) out.insert(lin_comb(t, c, rows, width));
  return out;
}

// <g(x)> in GF(q)[x]/(x^N - 1): every product m(x) g(x) with deg m < N - deg g.
inline CodeSet brute_cyclic(const FieldTower& t, const Polynomial& g, std::size_t N) {
  CodeSet out;
  const std::size_t k = N - static_cast<std::size_t>(g.degree());
  for (const auto& m : all_fq_vectors(t, k)) {
    Vector w(N, Element{0});
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < g.coeffs().size(); ++j) w[i + j] = t.add(w[i + j], t.mul(m[i], g[j]));
    }
    out.insert(std::move(w));
  }
  return out;
}

inline std::size_t weight(const Vector& v) {
  std::size_t w = 0;
  for (const auto e : v) w += e.is_zero() ? 0 : 1;
  return w;
}

inline std::size_t symp_weight(const Vector& v) {
  const std::size_t m = v.size() / 2;
  std::size_t w = 0;
  for (std::size_t j = 0; j < m; ++j) w += (v[j].is_zero() && v[m + j].is_zero()) ? 0 : 1;
  return w;
}

inline std::vector<std::uint64_t> distribution(const CodeSet& code, std::size_t n) {
  std::vector<std::uint64_t> counts(n + 1, 0);
  for (const auto& c : code) ++counts[weight(c)];
  return counts;
}

// Tr(<u, v>_e) with Tr(x) = x + x^q computed by repeated multiplication.
inline Element trace_euclid(const FieldTower& t, const Vector& u, const Vector& v) {
  Element s{0};
  for (std::size_t i = 0; i < u.size(); ++i) s = t.add(s, t.mul(u[i], v[i]));
  Element conj{1};
  for (std::uint32_t i = 0; i < t.q(); ++i) conj = t.mul(conj, s);
  return t.add(s, conj);
}

// Visits every v in GF(q^2)^n with Tr(<r, v>_e) = 0 for each row r, by
// depth-first search over coordinates with running per-row partial traces.
template <class Visit>
void for_each_trace_orthogonal(const FieldTower& t, const Matrix& rows, std::size_t n, Visit visit) {
  // table[r][i][x] = Tr(rows[r][i] * x)
  std::vector<std::vector<std::vector<Element>>> table(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    table[r].resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::uint32_t x = 0; x < t.size(); ++x) {
        table[r][i].push_back(trace_euclid(t, {rows[r][i]}, {Element{x}}));
      }
    }
  }
  Vector v(n);
  std::vector<std::vector<Element>> partial(n + 1, std::vector<Element>(rows.size(), Element{0}));
  auto dfs = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      for (const auto e : partial[n]) {
        if (!e.is_zero()) return;
      }
      visit(v);
      return;
    }
    for (std::uint32_t x = 0; x < t.size(); ++x) {
      v[i] = Element{x};
      for (std::size_t r = 0; r < rows.size(); ++r) partial[i + 1][r] = t.add(partial[i][r], table[r][i][x]);
      self(self, i + 1);
    }
  };
  dfs(dfs, 0);
}

inline CodeSet brute_trace_dual(const FieldTower& t, const Matrix& rows, std::size_t n) {
  CodeSet out;
  for_each_trace_orthogonal(t, rows, n, [&](const Vector& v) { out.insert(v); });
  return out;
}

inline std::uint64_t brute_trace_dual_size(const FieldTower& t, const Matrix& rows, std::size_t n) {
  std::uint64_t count = 0;
  for_each_trace_orthogonal(t, rows, n, [&](const Vector&) { ++count; });
  return count;
}

// No monic factor of degree 1..deg/2 over GF(q), by trial division.
inline bool trial_irreducible(const FieldTower& t, const Polynomial& f) {
  const auto d = f.degree();
  if (d < 1) return false;
  for (std::ptrdiff_t k = 1; 2 * k <= d; ++k) {
    for (auto low : all_fq_vectors(t, static_cast<std::size_t>(k))) {
      low.push_back(Element{1});
      if (conjucyclic::poly::mod(t, f, Polynomial(low)).is_zero()) return false;
    }
  }
  return true;
}

inline Element random_element(const FieldTower& t, std::mt19937_64& rng) {
  return Element{static_cast<std::uint32_t>(rng() % t.size())};
}

inline Element random_scalar(const FieldTower& t, std::mt19937_64& rng) {
  const auto& s = t.subfield_elements();
  return s[rng() % s.size()];
}

inline Vector random_vector(const FieldTower& t, std::size_t len, std::mt19937_64& rng) {
  Vector v(len);
  for (auto& e : v) e = random_element(t, rng);
  return v;
}

inline Vector random_fq_vector(const FieldTower& t, std::size_t len, std::mt19937_64& rng) {
  Vector v(len);
  for (auto& e : v) e = random_scalar(t, rng);
  return v;
}

inline conjucyclic::DivisorIndex random_divisor(const conjucyclic::Factorization& f, std::mt19937_64& rng) {
  conjucyclic::DivisorIndex d;
  for (std::size_t i = 0; i < f.t(); ++i) {
    d.exponents.push_back(static_cast<std::uint32_t>(rng() % (f.multiplicity + 1)));
  }
  return d;
}

}  // namespace oracle
