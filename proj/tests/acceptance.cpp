// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails or overruns its time limit.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "conjucyclic/errors.hpp"
#include "conjucyclic/quantum.hpp"
#include "conjucyclic/weights.hpp"
#include "golden.hpp"
#include "oracles.hpp"

using namespace conjucyclic;

namespace {

// Every tolerance lives here.
constexpr double kFactorLimit = 1.0;
constexpr double kDivisorLimit = 1.0;
constexpr double kSmallCodeLimit = 1.0;
constexpr double kTernaryLimit = 5.0;
constexpr double kQuaternarySingleLimit = 60.0;
constexpr double kQuaternaryFourLimit = 15.0;
constexpr double kPropertyLimit = 120.0;
constexpr int kPropertyCases = 1000;
constexpr std::uint64_t kPropertySeed = 0x5eed2024;
constexpr std::uint64_t kTraceDualMaxCard = 256;  // 4^4

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + std::string("failed: ") + what;
    }
  }
};

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::set<Polynomial> golden_factors(const FieldTower& t, const golden::Rows& rows) {
  std::set<Polynomial> out;
  for (const auto& r : rows) out.insert(golden::parse_poly(t, r));
  return out;
}

oracle::CodeSet rows_set(const FieldTower& t, const golden::Rows& rows) {
  const auto m = golden::parse_rows(t, rows);
  return oracle::CodeSet(m.begin(), m.end());
}

// 1
Outcome factorization_golden() {
  Outcome o;
  const auto t3 = build_tower(3, 1);
  const auto f3 = factor_x2n_minus_1(*t3, 11);
  o.require(std::set<Polynomial>(f3.base.begin(), f3.base.end()) ==
                    golden_factors(*t3, golden::ternary11_factors()) &&
                f3.multiplicity == 1,
            "q=3 factor set");
  const auto t4 = build_tower(2, 2);
  const auto f4 = factor_x2n_minus_1(*t4, 11);
  o.require(std::set<Polynomial>(f4.base.begin(), f4.base.end()) ==
                    golden_factors(*t4, golden::quaternary11_factors()) &&
                f4.multiplicity == 2,
            "q=4 factor set");
  o.detail = o.passed ? "q=3: 6 factors; q=4: 3 factors squared" : o.detail;
  return o;
}

// 2
Outcome divisor_counts() {
  Outcome o;
  const auto t3 = build_tower(3, 1);
  const auto t4 = build_tower(2, 2);
  const auto c3 = factor_x2n_minus_1(*t3, 11).divisor_count();
  const auto c4 = factor_x2n_minus_1(*t4, 11).divisor_count();
  o.require(c3 == 64, "q=3 count " + std::to_string(c3));
  o.require(c4 == 27, "q=4 count " + std::to_string(c4));
  if (o.passed) o.detail = "64 and 27";
  return o;
}

// 3
Outcome phi_table() {
  Outcome o;
  const auto t = build_tower(3, 1);
  for (const auto& e : golden::phi_table_f9()) {
    const auto got = phi(*t, t->parse(e.element));
    o.require(got.first == Element{e.first} && got.second == Element{e.second}, "phi(" + e.element + ")");
  }
  const auto [c1, c2] = phi_inverse_constants(*t);
  o.require(c1 == t->parse(golden::kPhiConstantFirst), "1/(b-b^5)");
  o.require(c2 == t->parse(golden::kPhiConstantSecond), "b^2/(b-b^5)");
  if (o.passed) o.detail = "9 entries, constants b3 and b5";
  return o;
}

// 4
Outcome small_code() {
  Outcome o;
  const auto t = build_tower(3, 1);
  const std::size_t n = 3;
  const auto words = oracle::brute_span(*t, golden::parse_rows(*t, golden::small_code_generators()), n);
  o.require(words.size() == 27 && words == rows_set(*t, golden::small_code_words()), "codeword list");
  oracle::CodeSet images;
  for (const auto& w : words) images.insert(psi_map(*t, w));
  o.require(images == rows_set(*t, golden::small_code_images()), "Psi images");
  bool closed = true;
  for (const auto& d : images) closed = closed && images.contains(sigma_shift(d));
  o.require(closed, "closure under sigma");
  // Recover g from the images, then ask the library for the cyclic subcode.
  Polynomial g = poly::x_pow_minus_one(*t, 2 * n);
  for (const auto& d : images) g = poly::gcd(*t, g, Polynomial(d));
  const auto code = build_conjucyclic_code(t, n, g);
  o.require(oracle::brute_span(*t, code.gen_matrix, n) == words, "code rebuilt from g");
  o.require(oracle::brute_span(*t, h_subcode(code), n) == rows_set(*t, golden::small_code_cyclic_part()),
            "largest cyclic subcode");
  if (o.passed) o.detail = "27 codewords, 27 images, 9 cyclic words";
  return o;
}

// 5
Outcome ternary11() {
  Outcome o;
  const auto t = build_tower(3, 1);
  const auto code = build_conjucyclic_code(t, 11, golden::parse_poly(*t, golden::ternary11_g()));
  o.require(code.gen_matrix == golden::parse_rows(*t, golden::ternary11_generator()), "G entries");
  o.require(alternating_dual_matrix(code) == golden::parse_rows(*t, golden::ternary11_dual()), "H_a entries");
  o.require(code.card_log_q() == 12, "|C| = 3^12");
  const auto dist = weight_distribution(code, {1, EnumerationOptions{}.budget});
  o.require(dist.total() == 531441, "distribution sum");
  o.require(dist.counts[5] > 0 && dist.min_weight() == 5, "minimum weight 5");
  if (o.passed) o.detail = "12x11 and 10x11 exact, 531441 words, d = 5";
  return o;
}

// 6
Outcome quaternary11() {
  Outcome o;
  const auto t = build_tower(2, 2);
  const auto code = build_conjucyclic_code(t, 11, golden::parse_poly(*t, golden::quaternary11_g()));
  const auto& expected = golden::quaternary11_distribution();
  const std::vector<std::uint64_t> want(expected.begin(), expected.end());

  auto start = Clock::now();
  const auto single = weight_distribution(code, {1, EnumerationOptions{}.budget});
  const double t1 = seconds_since(start);
  start = Clock::now();
  const auto four = weight_distribution(code, {4, EnumerationOptions{}.budget});
  const double t4 = seconds_since(start);

  o.require(single.counts == want, "distribution (1 worker)");
  o.require(four.counts == want, "distribution (4 workers)");
  o.require(single.total() == 16777216, "sum 4^12");
  o.require(min_weight(code) == 5, "minimum weight 5");
  o.require(t1 < kQuaternarySingleLimit, "single-core time");
  o.require(t4 < kQuaternaryFourLimit, "4-worker time");
  const bool containing = is_alternating_dual_containing(code);
  o.require(containing, "dual-containing");
  if (containing) {
    o.require(stabilizer_params(code, {4, EnumerationOptions{}.budget}) == StabilizerParams{11, 1, 5, 4, true},
              "[[11,1,5]]_4");
  }
  char buf[160];
  std::snprintf(buf, sizeof buf, "1 worker %.2f s (limit %.0f s), 4 workers %.2f s (limit %.0f s)", t1,
                kQuaternarySingleLimit, t4, kQuaternaryFourLimit);
  o.detail = o.passed ? std::string(buf) : o.detail + "; " + buf;
  return o;
}

// 7
struct Sample {
  TowerPtr tower;
  std::size_t n;
};

Outcome property_suites() {
  Outcome o;
  std::mt19937_64 rng(kPropertySeed);
  const std::vector<TowerPtr> towers = {build_tower(2, 1), build_tower(3, 1), build_tower(2, 2), build_tower(5, 1)};
  const std::vector<TowerPtr> char2 = {towers[0], towers[2]};
  auto pick = [&](const std::vector<TowerPtr>& from) {
    return Sample{from[rng() % from.size()], 1 + static_cast<std::size_t>(rng() % 6)};
  };
  auto random_code = [&](const Sample& s) {
    const auto f = factor_x2n_minus_1(*s.tower, s.n);
    return build_conjucyclic_code(s.tower, s.n, expand_divisor(*s.tower, f, oracle::random_divisor(f, rng)));
  };

  int bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto s = pick(towers);
    const auto v = oracle::random_vector(*s.tower, s.n, rng);
    bad += psi_map(*s.tower, conj_shift(*s.tower, v)) != sigma_shift(psi_map(*s.tower, v));
  }
  o.require(bad == 0, "Psi T = sigma Psi");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto s = pick(towers);
    const auto& t = *s.tower;
    const auto u = oracle::random_vector(t, s.n, rng);
    const auto v = oracle::random_vector(t, s.n, rng);
    bad += alternating_inner(t, u, v) != symplectic_inner(t, psi_map(t, u), psi_map(t, v));
  }
  o.require(bad == 0, "alternating = symplectic");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto& t = *towers[rng() % towers.size()];
    const auto a = oracle::random_element(t, rng);
    bad += phi_inv(t, phi(t, a)) != a;
  }
  o.require(bad == 0, "phi_inv phi = id");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto s = pick(towers);
    const auto code = random_code(s);
    const auto coeffs = oracle::random_fq_vector(*s.tower, code.gen_matrix.size(), rng);
    const auto c = oracle::lin_comb(*s.tower, coeffs, code.gen_matrix, s.n);
    bad += hamming_weight(c) != symplectic_weight(psi_map(*s.tower, c));
  }
  o.require(bad == 0, "w_h = w_s");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto s = pick(towers);
    const auto& t = *s.tower;
    const auto code = random_code(s);
    Matrix pulled;
    for (const auto& row : symplectic_dual_matrix(code.cyclic)) pulled.push_back(psi_inv(t, row));
    const auto h = alternating_dual_matrix(code);
    bool ok = additive::span_includes(t, h, pulled, s.n) && additive::span_includes(t, pulled, h, s.n);
    ok = ok && additive::rank(t, h, s.n) + code.gen_matrix.size() == 2 * s.n;
    for (const auto& r : h) {
      for (const auto& g : code.gen_matrix) ok = ok && alternating_inner(t, g, r).is_zero();
    }
    bad += !ok;
  }
  o.require(bad == 0, "span(H_a) = Psi^-1(span(H_s))");

  bad = 0;
  for (int i = 0; i < kPropertyCases; ++i) {
    const auto s = pick(char2);
    const auto code = random_code(s);
    const auto shift_form = alternating_dual_matrix_char2(code);
    bad += !(shift_form == alternating_dual_matrix(code) && is_conjucyclic(*s.tower, shift_form));
  }
  o.require(bad == 0, "char 2 dual matrices");

  int checked = 0;
  bad = 0;
  for (const auto& tower : char2) {
    const auto& t = *tower;
    for (std::size_t n = 1; n <= 6; ++n) {
      const auto f = factor_x2n_minus_1(t, n);
      for (const auto& [index, g] : enumerate_divisors(t, f)) {
        const auto code = build_conjucyclic_code(tower, n, g);
        if (ipow(t.q(), code.card_log_q()) > kTraceDualMaxCard) continue;
        ++checked;
        // Both sides are groups: basis rows inside the brute-force set plus
        // equal sizes gives equality.
        const auto basis = trace_dual(code);
        bool ok = oracle::brute_trace_dual_size(t, code.gen_matrix, n) ==
                  ipow(t.q(), additive::rank(t, basis, n));
        for (const auto& b : basis) {
          for (const auto& g : code.gen_matrix) ok = ok && oracle::trace_euclid(t, g, b).is_zero();
        }
        bad += !ok;
      }
    }
  }
  o.require(bad == 0, "trace dual vs brute force");
  if (o.passed) {
    o.detail = "6 suites x " + std::to_string(kPropertyCases) + " cases (seed " + std::to_string(kPropertySeed) +
               "), trace dual on " + std::to_string(checked) + " codes";
  }
  return o;
}

// 8
Outcome oracle_equivalence() {
  Outcome o;
  int codes = 0;
  for (const auto& tower : {build_tower(2, 1), build_tower(3, 1)}) {
    const auto& t = *tower;
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto f = factor_x2n_minus_1(t, n);
      for (const auto& [index, g] : enumerate_divisors(t, f)) {
        ++codes;
        const auto code = build_conjucyclic_code(tower, n, g);
        oracle::CodeSet pulled;
        for (const auto& d : oracle::brute_cyclic(t, g, 2 * n)) pulled.insert(psi_inv(t, d));
        o.require(oracle::brute_span(t, code.gen_matrix, n) == pulled,
                  "q=" + std::to_string(t.q()) + " n=" + std::to_string(n));
      }
    }
  }
  if (o.passed) o.detail = std::to_string(codes) + " divisors";
  return o;
}

struct Criterion {
  int id;
  const char* name;
  std::function<Outcome()> run;
  double limit;  // seconds; 0 = none
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "factorization golden sets", factorization_golden, kFactorLimit},
      {2, "divisor counts", divisor_counts, kDivisorLimit},
      {3, "phi table over GF(9)", phi_table, 0},
      {4, "small GF(9) code, images and cyclic subcode", small_code, kSmallCodeLimit},
      {5, "q=3 n=11 matrices and minimum weight", ternary11, kTernaryLimit},
      {6, "q=4 n=11 distribution and stabilizer", quaternary11, 0},
      {7, "property suites", property_suites, kPropertyLimit},
      {8, "oracle equivalence for q in {2,3}, n <= 3", oracle_equivalence, 0},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double elapsed = seconds_since(start);
    if (c.limit > 0 && elapsed >= c.limit) o.require(false, "time limit");
    char timing[64];
    if (c.limit > 0) {
      std::snprintf(timing, sizeof timing, "%.3f s, limit %.0f s", elapsed, c.limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.3f s", elapsed);
    }
    std::printf("%s  criterion %d: %s  [%s] (%s)\n", o.passed ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                timing);
    std::fflush(stdout);
    failures += o.passed ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
