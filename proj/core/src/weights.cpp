#include "conjucyclic/weights.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <string>
#include <thread>

#include "conjucyclic/errors.hpp"
#include "number_theory.hpp"

namespace conjucyclic {

std::uint64_t WeightDistribution::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto c : counts) sum += c;
  return sum;
}

std::optional<std::size_t> WeightDistribution::min_weight() const noexcept {
  for (std::size_t w = 1; w < counts.size(); ++w) {
    if (counts[w] != 0) return w;
  }
  return std::nullopt;
}

namespace {

struct Plan {
  std::uint32_t p = 2;
  std::size_t n = 0;
  std::size_t digits = 0;       // D: GF(p)-dimension of the code
  std::size_t free_digits = 0;  // low digits walked inside one chunk
  std::uint64_t chunk_size = 1;
  std::uint64_t chunks = 1;
  std::vector<std::vector<std::uint32_t>> basis;  // GF(p)-basis, element codes
};

// One chunk: fixed leading digits, Gray walk over the low `free_digits`.
template <class Add>
void walk_chunk(const Plan& plan, std::uint64_t chunk, Add add,
                std::vector<std::uint64_t>& hist, const std::atomic<bool>* stop,
                std::atomic<bool>* found_one) {
  const std::uint32_t p = plan.p;
  const std::size_t n = plan.n;
  // Base-p digits of the first index, then its Gray image g_k = b_k - b_{k+1}.
  std::vector<std::uint32_t> digits(plan.digits + 1, 0);
  std::uint64_t index = chunk * plan.chunk_size;
  for (std::size_t k = 0; k < plan.digits; ++k) {
    digits[k] = static_cast<std::uint32_t>(index % p);
    index /= p;
  }
  std::vector<std::uint32_t> word(n, 0);
  for (std::size_t k = 0; k < plan.digits; ++k) {
    const std::uint32_t g = (digits[k] + p - digits[k + 1]) % p;
    for (std::uint32_t r = 0; r < g; ++r) {
      for (std::size_t i = 0; i < n; ++i) word[i] = add(word[i], plan.basis[k][i]);
    }
  }

  for (std::uint64_t step = 0;; ++step) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < n; ++i) w += word[i] != 0 ? 1 : 0;
    ++hist[w];
    if (found_one != nullptr && w == 1) {
      found_one->store(true, std::memory_order_relaxed);
      return;
    }
    if (step + 1 == plan.chunk_size) break;
    if (stop != nullptr && (step & 0xFFFU) == 0 && stop->load(std::memory_order_relaxed)) return;
    // The Gray digit that moves is the one the base-p counter carries into.
    std::size_t j = 0;
    while (digits[j] == p - 1) digits[j++] = 0;
    ++digits[j];
    const auto& row = plan.basis[j];
    for (std::size_t i = 0; i < n; ++i) word[i] = add(word[i], row[i]);
  }
}

WeightDistribution run(const FieldTower& t, const Matrix& basis, std::size_t n,
                       const EnumerationOptions& options, bool stop_on_weight_one) {
  for (const auto& row : basis) {
    if (row.size() != n) throw Error(ErrorCode::length_mismatch, "basis row has the wrong length");
  }
  if (additive::rank(t, basis, n) != basis.size()) {
    throw Error(ErrorCode::invalid_argument, "basis rows are not GF(q)-independent");
  }
  Plan plan;
  plan.p = t.p();
  plan.n = n;
  plan.digits = basis.size() * t.m();
  std::uint64_t total = 0;
  if (!detail::checked_pow(t.p(), plan.digits, options.budget, total)) {
    throw Error(ErrorCode::budget_exceeded,
                std::to_string(t.q()) + "^" + std::to_string(basis.size()) +
                    " codewords exceed the enumeration budget of " + std::to_string(options.budget));
  }
  // GF(p)-basis: zeta^j * row, zeta generating GF(q).
  const Element zeta = t.subfield_generator();
  for (const auto& row : basis) {
    Element scale = kOne;
    for (std::uint32_t j = 0; j < t.m(); ++j) {
      std::vector<std::uint32_t> scaled(n);
      for (std::size_t i = 0; i < n; ++i) scaled[i] = t.mul(scale, row[i]).code;
      plan.basis.push_back(std::move(scaled));
      scale = t.mul(scale, zeta);
    }
  }

  const unsigned workers = std::max(1U, options.workers);
  std::size_t fixed = 0;
  std::uint64_t chunks = 1;
  while (fixed < plan.digits && chunks < 8ULL * workers) {
    chunks *= plan.p;
    ++fixed;
  }
  plan.free_digits = plan.digits - fixed;
  plan.chunks = chunks;
  plan.chunk_size = total / chunks;

  WeightDistribution out;
  out.counts.assign(n + 1, 0);
  std::mutex merge;
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> found_one{false};
  auto worker = [&] {
    std::vector<std::uint64_t> hist(n + 1, 0);
    auto* flag = stop_on_weight_one ? &found_one : nullptr;
    for (std::uint64_t c = next++; c < plan.chunks; c = next++) {
      if (flag != nullptr && flag->load(std::memory_order_relaxed)) break;
      if (plan.p == 2) {
        walk_chunk(plan, c, [](std::uint32_t a, std::uint32_t b) { return a ^ b; }, hist, flag,
                   flag);
      } else {
        walk_chunk(
            plan, c,
            [&t](std::uint32_t a, std::uint32_t b) { return t.add(Element{a}, Element{b}).code; },
            hist, flag, flag);
      }
    }
    std::lock_guard lock(merge);
    for (std::size_t w = 0; w <= n; ++w) out.counts[w] += hist[w];
  };

  const unsigned spawned = static_cast<unsigned>(std::min<std::uint64_t>(workers, plan.chunks));
  if (spawned <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(spawned);
    for (unsigned i = 0; i < spawned; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  return out;
}

}  // namespace

WeightDistribution additive_weight_distribution(const FieldTower& t, const Matrix& basis,
                                                std::size_t n, const EnumerationOptions& options) {
  return run(t, basis, n, options, false);
}

WeightDistribution weight_distribution(const ConjucyclicCode& c, const EnumerationOptions& options) {
  return run(*c.tower, c.gen_matrix, c.n, options, false);
}

std::size_t min_weight(const ConjucyclicCode& c, const EnumerationOptions& options) {
  if (c.gen_matrix.empty()) throw Error(ErrorCode::zero_code, "the zero code has no minimum weight");
  const auto dist = run(*c.tower, c.gen_matrix, c.n, options, true);
  return *dist.min_weight();
}

}  // namespace conjucyclic
