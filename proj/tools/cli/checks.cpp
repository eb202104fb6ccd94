#include <algorithm>
#include <set>
#include <sstream>

#include "commands.hpp"
#include "conjucyclic/errors.hpp"
#include "conjucyclic/quantum.hpp"
#include "golden.hpp"

namespace conjucyclic::cli {
namespace {

using CodeSet = std::set<Vector>;

// Every GF(q)-combination of `rows`; only for tiny codes.
CodeSet span_of(const FieldTower& t, const Matrix& rows, std::size_t width) {
  CodeSet out;
  const auto& scalars = t.subfield_elements();
  std::vector<std::size_t> digits(rows.size(), 0);
  for (;;) {
    std::vector<Element> coeffs(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) coeffs[i] = scalars[digits[i]];
    out.insert(linalg::combine(t, coeffs, rows, width));
    std::size_t i = 0;
    while (i < digits.size() && ++digits[i] == scalars.size()) digits[i++] = 0;
    if (i == digits.size()) break;
  }
  return out;
}

CodeSet as_set(const Matrix& rows) { return CodeSet(rows.begin(), rows.end()); }

std::set<Polynomial> factor_set(const Factorization& f) {
  return std::set<Polynomial>(f.base.begin(), f.base.end());
}

std::set<Polynomial> golden_factor_set(const FieldTower& t, const golden::Rows& rows) {
  std::set<Polynomial> out;
  for (const auto& r : rows) out.insert(golden::parse_poly(t, r));
  return out;
}

// The monic generator of the cyclic code spanned by `words` (length 2n).
Polynomial generator_of(const FieldTower& t, const Matrix& words, std::size_t n) {
  Polynomial g = poly::x_pow_minus_one(t, 2 * n);
  for (const auto& w : words) g = poly::gcd(t, g, Polynomial(w));
  return g;
}

class Recorder {
 public:
  void add(std::string name, bool passed, std::string detail = {}) {
    results_.push_back({std::move(name), passed, std::move(detail)});
  }

  // Runs `body`; a thrown error counts as a failure of `name`.
  template <class F>
  void guard(const std::string& name, F body) {
    try {
      body();
    } catch (const std::exception& e) {
      add(name, false, std::string("error: ") + e.what());
    }
  }

  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::vector<CheckResult> results_;
};

std::string counts_text(const std::vector<std::uint64_t>& counts) {
  std::ostringstream s;
  for (std::size_t i = 0; i < counts.size(); ++i) s << (i ? "," : "") << counts[i];
  return s.str();
}

void check_phi(Recorder& r) {
  r.guard("phi table over GF(9)", [&] {
    const auto t = build_tower(3, 1);
    bool ok = true;
    std::string bad;
    for (const auto& e : golden::phi_table_f9()) {
      const auto got = phi(*t, t->parse(e.element));
      if (got.first != Element{e.first} || got.second != Element{e.second}) {
        ok = false;
        bad += " " + e.element;
      }
    }
    r.add("phi table over GF(9)", ok, ok ? "9 entries" : "mismatch at" + bad);
  });
  r.guard("phi inverse constants over GF(9)", [&] {
    const auto t = build_tower(3, 1);
    const auto [c1, c2] = phi_inverse_constants(*t);
    const bool ok = c1 == t->parse(golden::kPhiConstantFirst) &&
                    c2 == t->parse(golden::kPhiConstantSecond);
    r.add("phi inverse constants over GF(9)", ok, t->format(c1) + ", " + t->format(c2));
  });
}

void check_small_code(Recorder& r) {
  const auto t = build_tower(3, 1);
  const std::size_t n = 3;
  const Matrix gens = golden::parse_rows(*t, golden::small_code_generators());
  const CodeSet words = span_of(*t, gens, n);

  r.add("small code: span of generators", words == as_set(golden::parse_rows(*t, golden::small_code_words())),
        std::to_string(words.size()) + " codewords");

  CodeSet images;
  for (const auto& w : words) images.insert(psi_map(*t, w));
  const CodeSet expected_images = as_set(golden::parse_rows(*t, golden::small_code_images()));
  r.add("small code: Psi images", images == expected_images,
        std::to_string(images.size()) + " ternary words");

  bool closed = true;
  for (const auto& d : images) closed = closed && images.contains(sigma_shift(d));
  r.add("small code: images closed under cyclic shift", closed);

  r.guard("small code: largest cyclic subcode", [&] {
    const Matrix image_rows(images.begin(), images.end());
    const auto code = build_conjucyclic_code(t, n, generator_of(*t, image_rows, n));
    const bool same_code = span_of(*t, code.gen_matrix, n) == words;
    const CodeSet h = span_of(*t, h_subcode(code), n);
    const bool ok = same_code && h == as_set(golden::parse_rows(*t, golden::small_code_cyclic_part()));
    r.add("small code: largest cyclic subcode", ok, std::to_string(h.size()) + " words");
  });
}

void check_char2_examples(Recorder& r) {
  r.guard("q=4 <x+1>: cyclic subcode is GF(q)^n", [&] {
    const auto t = build_tower(2, 2);
    const std::size_t n = 3;
    const auto code = build_conjucyclic_code(t, n, Polynomial({kOne, kOne}));
    const Matrix h = h_subcode(code);
    bool in_fq = true;
    for (const auto& row : h) {
      for (const auto e : row) in_fq = in_fq && t->in_subfield(e);
    }
    Vector v(2 * n, kZero);
    v[0] = kOne;
    v[n] = kOne;
    Vector expected(n, kZero);
    expected[0] = t->inv(t->trace(t->beta()));
    const bool ok = in_fq && h.size() == n && psi_inv(*t, v) == expected;
    r.add("q=4 <x+1>: cyclic subcode is GF(q)^n", ok, "rank " + std::to_string(h.size()));
  });

  for (const auto& [p, m, n] : {std::tuple{3U, 1U, std::size_t{2}}, std::tuple{2U, 2U, std::size_t{3}}}) {
    const std::string name = "q=" + std::to_string(p == 3 ? 3 : 4) + " all-ones code equals its cyclic subcode";
    r.guard(name, [&, p = p, m = m, n = n] {
      const auto t = build_tower(p, m);
      const auto g = poly::divmod(*t, poly::x_pow_minus_one(*t, 2 * n),
                                  Polynomial({t->neg(kOne), kOne}))
                         .quotient;
      const auto code = build_conjucyclic_code(t, n, g);
      CodeSet expected;
      const Element unit = t->inv(t->trace(t->beta()));
      for (const auto gamma : t->subfield_elements()) expected.insert(Vector(n, t->mul(gamma, unit)));
      const bool ok = span_of(*t, code.gen_matrix, n) == expected &&
                      span_of(*t, h_subcode(code), n) == expected;
      r.add(name, ok);
    });
  }
}

void check_ternary11(Recorder& r, const EnumerationOptions& options) {
  const auto t = build_tower(3, 1);
  const std::size_t n = 11;
  const auto f = factor_x2n_minus_1(*t, n);
  r.add("q=3 n=11: factors of x^22-1",
        factor_set(f) == golden_factor_set(*t, golden::ternary11_factors()) && f.multiplicity == 1,
        std::to_string(f.t()) + " irreducibles");
  r.add("q=3 n=11: divisor count", f.divisor_count() == 64, std::to_string(f.divisor_count()));

  r.guard("q=3 n=11: generator matrix", [&] {
    const auto code = build_conjucyclic_code(t, n, golden::parse_poly(*t, golden::ternary11_g()));
    const Vector w_g = golden::parse_rows(*t, {golden::ternary11_w_g()}).front();
    const bool ok = !code.gen_matrix.empty() && code.gen_matrix.front() == w_g &&
                    code.gen_matrix == golden::parse_rows(*t, golden::ternary11_generator());
    r.add("q=3 n=11: generator matrix", ok,
          std::to_string(code.gen_matrix.size()) + "x" + std::to_string(n));
    r.add("q=3 n=11: alternating dual matrix",
          alternating_dual_matrix(code) == golden::parse_rows(*t, golden::ternary11_dual()));
    r.add("q=3 n=11: |C| = 3^12", code.card_log_q() == 12);
    const auto dist = weight_distribution(code, options);
    const bool dist_ok = dist.total() == 531441 && dist.counts[5] > 0 &&
                         dist.min_weight() == golden::kTernary11MinWeight;
    r.add("q=3 n=11: minimum weight 5", dist_ok, "A = " + counts_text(dist.counts));
  });
}

void check_quaternary11(Recorder& r, const EnumerationOptions& options) {
  const auto t = build_tower(2, 2);
  const std::size_t n = 11;
  const auto f = factor_x2n_minus_1(*t, n);
  r.add("q=4 n=11: factors of x^22-1",
        factor_set(f) == golden_factor_set(*t, golden::quaternary11_factors()) &&
            f.multiplicity == golden::kQuaternary11FactorMultiplicity,
        std::to_string(f.t()) + " irreducibles, each squared");
  r.add("q=4 n=11: divisor count", f.divisor_count() == 27, std::to_string(f.divisor_count()));

  r.guard("q=4 n=11: generator matrix", [&] {
    const auto g = golden::parse_poly(*t, golden::quaternary11_g());
    const auto square = poly::pow(*t, golden::parse_poly(*t, golden::quaternary11_factors()[1]), 2);
    const auto code = build_conjucyclic_code(t, n, g);
    r.add("q=4 n=11: g is a squared factor", g == square);
    r.add("q=4 n=11: generator matrix",
          code.gen_matrix == golden::parse_rows(*t, golden::quaternary11_generator()),
          std::to_string(code.gen_matrix.size()) + "x" + std::to_string(n));
    const Matrix dual = alternating_dual_matrix_char2(code);
    r.add("q=4 n=11: alternating dual matrix",
          dual == golden::parse_rows(*t, golden::quaternary11_dual()) &&
              additive::spans_equal(*t, dual, alternating_dual_matrix(code), n));
    r.add("q=4 n=11: alternating dual is conjucyclic", is_conjucyclic(*t, dual));

    const auto dist = weight_distribution(code, options);
    const auto& expected = golden::quaternary11_distribution();
    const bool dist_ok = std::equal(dist.counts.begin(), dist.counts.end(), expected.begin(), expected.end());
    r.add("q=4 n=11: weight distribution", dist_ok, "A = " + counts_text(dist.counts));

    const bool containing = is_alternating_dual_containing(code);
    r.add("q=4 n=11: dual-containing", containing);
    if (containing) {
      const auto s = stabilizer_params(code, options);
      const bool ok = s.n == 11 && s.k_logical == 1 && s.d_lower == 5 && s.q == 4 && s.pure;
      r.add("q=4 n=11: stabilizer [[11,1,5]]_4", ok,
            "[[" + std::to_string(s.n) + "," + std::to_string(s.k_logical) + "," +
                std::to_string(s.d_lower) + "]]_" + std::to_string(s.q));
    }
  });
}

}  // namespace

std::vector<CheckResult> run_paper_checks(const EnumerationOptions& options) {
  Recorder r;
  check_phi(r);
  r.guard("small code", [&] { check_small_code(r); });
  check_char2_examples(r);
  r.guard("q=3 n=11", [&] { check_ternary11(r, options); });
  r.guard("q=4 n=11", [&] { check_quaternary11(r, options); });
  return r.take();
}

}  // namespace conjucyclic::cli
