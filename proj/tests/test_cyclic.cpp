#include <doctest.h>

#include "conjucyclic/cyclic.hpp"
#include "conjucyclic/errors.hpp"
#include "oracles.hpp"

using namespace conjucyclic;

namespace {

std::vector<std::pair<std::uint32_t, std::uint32_t>> towers() { return {{2, 1}, {3, 1}, {2, 2}}; }

// Every vector of GF(q)^N orthogonal to all of `code` under `form`.
template <class Form>
oracle::CodeSet brute_dual(const FieldTower& t, const oracle::CodeSet& code, std::size_t N, Form form) {
  oracle::CodeSet out;
  for (const auto& v : oracle::all_fq_vectors(t, N)) {
    bool ok = true;
    for (const auto& c : code) ok = ok && form(t, c, v).is_zero();
    if (ok) out.insert(v);
  }
  return out;
}

}  // namespace

TEST_CASE("shifts and tau") {
  const auto t = build_tower(3, 1);
  const Vector v = {Element{1}, Element{2}, Element{0}, Element{1}};
  CHECK(sigma_shift(v) == Vector{Element{1}, Element{1}, Element{2}, Element{0}});
  CHECK(sigma_shift(v, 4) == v);
  CHECK(tau_transform(*t, v) == Vector{Element{0}, Element{2}, Element{1}, Element{2}});
  CHECK_THROWS_AS((void)tau_transform(*t, Vector{kOne}), Error);
  CHECK(hamming_weight(v) == 3);
  CHECK(symplectic_weight(v) == 2);
  CHECK_THROWS_AS((void)symplectic_weight(Vector{kOne}), Error);
  CHECK(coefficient_vector(Polynomial({kOne, kOne}), 4) == Vector{kOne, kOne, kZero, kZero});
  CHECK_THROWS_AS((void)coefficient_vector(Polynomial({kOne, kOne}), 1), Error);
}

TEST_CASE("generator and dual matrices against brute-force cyclic codes") {
  for (const auto& [p, m] : towers()) {
    const auto t = build_tower(p, m);
    for (std::size_t n = 1; n <= (t->q() == 4 ? 2U : 3U); ++n) {
      const auto f = factor_x2n_minus_1(*t, n);
      for (const auto& [index, g] : enumerate_divisors(*t, f)) {
        const auto c = make_cyclic_code(t, n, g);
        const std::size_t N = 2 * n;
        const auto code = oracle::brute_cyclic(*t, g, N);
        CHECK(oracle::brute_span(*t, generator_matrix(c), N) == code);
        CHECK(generator_matrix(c).size() == c.dimension());
        CHECK(oracle::brute_span(*t, euclidean_dual_matrix(c), N) ==
              brute_dual(*t, code, N, [](const FieldTower& tt, const Vector& a, const Vector& b) {
                return euclidean_inner(tt, a, b);
              }));
        CHECK(oracle::brute_span(*t, symplectic_dual_matrix(c), N) ==
              brute_dual(*t, code, N, [](const FieldTower& tt, const Vector& a, const Vector& b) {
                return symplectic_inner(tt, a, b);
              }));
        CHECK(poly::mul(*t, c.g, c.h) == poly::x_pow_minus_one(*t, N));
      }
    }
  }
}

TEST_CASE("cyclic code construction errors and normalisation") {
  const auto t = build_tower(3, 1);
  // 2 + 2x = 2(1 + x) divides x^4 - 1 and is normalised to 1 + x.
  const auto c = make_cyclic_code(t, 2, Polynomial({Element{2}, Element{2}}));
  CHECK(c.g == Polynomial({kOne, kOne}));
  try {
    (void)make_cyclic_code(t, 2, Polynomial({kOne, kZero, kZero, kOne}));
    FAIL("expected not_a_divisor");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::not_a_divisor);
  }
  CHECK_THROWS_AS((void)make_cyclic_code(t, 2, Polynomial({t->beta(), kOne})), Error);
  const auto zero = make_cyclic_code(t, 2, poly::x_pow_minus_one(*t, 4));
  CHECK(generator_matrix(zero).empty());
  CHECK(zero.dimension() == 0);
  const auto full = make_cyclic_code(t, 2, Polynomial::constant(kOne));
  CHECK(euclidean_dual_matrix(full).empty());
}
