#include <doctest.h>

#include <random>

#include "conjucyclic/linalg.hpp"
#include "oracles.hpp"

using namespace conjucyclic;

TEST_CASE("rank equals log_q of the brute-force span size") {
  std::mt19937_64 rng(21);
  for (const auto& [p, m] : {std::pair{2U, 1U}, {3U, 1U}, {2U, 2U}, {5U, 1U}}) {
    const auto t = build_tower(p, m);
    for (int trial = 0; trial < 100; ++trial) {
      const std::size_t width = 1 + rng() % 4;
      Matrix rows;
      for (std::size_t r = 0, k = rng() % 4; r < k; ++r) rows.push_back(oracle::random_fq_vector(*t, width, rng));
      if (trial % 3 == 0 && !rows.empty()) rows.push_back(oracle::lin_comb(*t, Vector(rows.size(), kOne), rows, width));
      const auto span = oracle::brute_span(*t, rows, width);
      std::size_t size = 1;
      const auto r = linalg::rank(*t, rows, width);
      for (std::size_t i = 0; i < r; ++i) size *= t->q();
      CHECK(span.size() == size);
      const auto probe = oracle::random_fq_vector(*t, width, rng);
      CHECK(linalg::span_contains(*t, rows, probe, width) == span.contains(probe));
    }
  }
}

TEST_CASE("left kernel is exactly the relation space") {
  std::mt19937_64 rng(22);
  const auto t = build_tower(3, 1);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t width = 1 + rng() % 4;
    Matrix rows;
    for (std::size_t r = 0, k = 1 + rng() % 5; r < k; ++r) rows.push_back(oracle::random_fq_vector(*t, width, rng));
    const auto kernel = linalg::left_kernel(*t, rows, width);
    CHECK(kernel.size() + linalg::rank(*t, rows, width) == rows.size());
    for (const auto& a : kernel) {
      const auto combo = linalg::combine(*t, a, rows, width);
      CHECK(combo == Vector(width, kZero));
    }
    std::size_t relations = 0;
    for (const auto& a : oracle::all_fq_vectors(*t, rows.size())) {
      if (oracle::lin_comb(*t, a, rows, width) == Vector(width, kZero)) {
        ++relations;
        CHECK(linalg::span_contains(*t, kernel, a, rows.size()));
      }
    }
    std::size_t expected = 1;
    for (std::size_t i = 0; i < kernel.size(); ++i) expected *= t->q();
    CHECK(relations == expected);
  }
}

TEST_CASE("span inclusion and equality") {
  const auto t = build_tower(2, 1);
  const Matrix a = {{kOne, kZero, kOne}, {kZero, kOne, kOne}};
  const Matrix b = {{kOne, kOne, kZero}, {kOne, kZero, kOne}};
  const Matrix c = {{kOne, kOne, kOne}};
  CHECK(linalg::spans_equal(*t, a, b, 3));
  CHECK(linalg::span_includes(*t, a, {{kOne, kOne, kZero}}, 3));
  CHECK_FALSE(linalg::span_includes(*t, a, c, 3));
  CHECK(linalg::span_includes(*t, a, {}, 3));
  RowEchelon e(*t, 3);
  CHECK(e.insert(a[0]));
  CHECK_FALSE(e.insert(a[0]));
  CHECK(e.insert(c[0]));
  CHECK(e.rank() == 2);
  CHECK(e.contains(b[0]) == false);
}
