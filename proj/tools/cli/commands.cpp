#include "commands.hpp"

#include <chrono>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "conjucyclic/errors.hpp"
#include "conjucyclic/json_io.hpp"
#include "conjucyclic/quantum.hpp"

namespace conjucyclic::cli {
namespace {

using nlohmann::json;

TowerPtr tower_for(const RunConfig& cfg) {
  if (cfg.q < 2) throw Error(ErrorCode::not_prime, "--q must be a prime power");
  if (cfg.n == 0) throw Error(ErrorCode::invalid_argument, "--n must be positive");
  const auto [p, m] = split_prime_power(cfg.q);
  return build_tower(p, m);
}

EnumerationOptions options_of(const RunConfig& cfg) {
  return EnumerationOptions{cfg.workers, cfg.budget};
}

// Coefficient tokens are element codes ("6") or beta powers ("b5").
Polynomial parse_g(const FieldTower& t, const std::vector<std::string>& tokens) {
  std::vector<Element> c;
  c.reserve(tokens.size());
  for (const auto& token : tokens) {
    const bool power = !token.empty() && (token[0] == 'b' || token[0] == 'B');
    c.push_back(t.parse(power ? token : "#" + token));
  }
  return Polynomial(std::move(c));
}

std::string row_text(const FieldTower& t, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ' ';
    s += t.format(v[i]);
  }
  return s;
}

std::string poly_text(const FieldTower& t, const Polynomial& f) {
  if (f.is_zero()) return "0";
  std::string s;
  for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
    const Element c = f[i];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    const bool bare = i > 0 && c == kOne;
    if (!bare) s += t.format(c);
    if (i > 0) {
      if (!bare) s += '*';
      s += i == 1 ? std::string("x") : "x^" + std::to_string(i);
    }
  }
  return s;
}

void print_matrix(std::ostream& out, const FieldTower& t, const std::string& title, const Matrix& m,
                  std::size_t width) {
  out << title << " (" << m.size() << "x" << width << ")";
  if (m.empty()) {
    out << ": empty\n";
    return;
  }
  out << ":\n";
  for (const auto& row : m) out << "  " << row_text(t, row) << '\n';
}

std::string exps_text(const DivisorIndex& d) {
  std::string s = "(";
  for (std::size_t i = 0; i < d.exponents.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(d.exponents[i]);
  }
  return s + ")";
}

std::string card_text(const FieldTower& t, std::size_t log_q) {
  return std::to_string(t.q()) + "^" + std::to_string(log_q);
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

// Runs `body`, translating library errors into exit statuses.
template <class F>
int guarded(Streams io, F body) {
  try {
    return body();
  } catch (const Error& e) {
    io.err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    io.err << "error: " << e.what() << '\n';
    return kFailure;
  }
}

}  // namespace

int exit_code_for(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::not_prime:
    case ErrorCode::too_large:
    case ErrorCode::invalid_argument:
    case ErrorCode::odd_length:
    case ErrorCode::length_mismatch:
      return kUsage;
    case ErrorCode::not_a_divisor:
      return kNotADivisor;
    case ErrorCode::budget_exceeded:
      return kBudgetExceeded;
    case ErrorCode::not_dual_containing:
      return kNotDualContaining;
    default:
      return kFailure;
  }
}

ConjucyclicCode resolve_code(const RunConfig& cfg) {
  const auto tower = tower_for(cfg);
  if (cfg.g_codes && cfg.exps) {
    throw Error(ErrorCode::invalid_argument, "give either --g or --exps, not both");
  }
  Polynomial g = Polynomial::constant(kOne);
  if (cfg.g_codes) {
    g = parse_g(*tower, *cfg.g_codes);
  } else if (cfg.exps) {
    const auto f = factor_x2n_minus_1(*tower, cfg.n);
    g = expand_divisor(*tower, f, DivisorIndex{*cfg.exps});
  }
  return build_conjucyclic_code(tower, cfg.n, g);
}

int cmd_factor(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto t = tower_for(cfg);
    const auto f = factor_x2n_minus_1(*t, cfg.n);
    if (cfg.format == Format::json) {
      json j = json_io::factorization_to_json(f);
      j["q"] = cfg.q;
      j["n"] = cfg.n;
      j["divisors"] = f.divisor_count();
      write_json(io.out, j);
      return kOk;
    }
    io.out << "x^" << 2 * cfg.n << " - 1 over GF(" << cfg.q << "): n0 = " << f.n0
           << ", ell = " << f.ell << ", multiplicity " << f.multiplicity << '\n';
    io.out << "factors (" << f.t() << "):\n";
    for (std::size_t i = 0; i < f.t(); ++i) {
      io.out << "  g" << i + 1 << " = " << poly_text(*t, f.base[i]);
      if (f.multiplicity > 1) io.out << "  (^" << f.multiplicity << ")";
      io.out << '\n';
    }
    io.out << "divisors: " << f.divisor_count() << '\n';
    return kOk;
  });
}

int cmd_enumerate(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto t = tower_for(cfg);
    const auto f = factor_x2n_minus_1(*t, cfg.n);
    if (f.divisor_count() > cfg.budget) {
      throw Error(ErrorCode::budget_exceeded,
                  std::to_string(f.divisor_count()) + " divisors exceed the budget");
    }
    json list = json::array();
    for (const auto& [index, g] : enumerate_divisors(*t, f)) {
      const std::size_t log_q = 2 * cfg.n - static_cast<std::size_t>(g.degree());
      if (cfg.format == Format::json) {
        list.push_back({{"exps", index.exponents},
                        {"g", json_io::polynomial_to_json(g)},
                        {"card", card_text(*t, log_q)}});
      } else {
        io.out << exps_text(index) << "  |C| = " << card_text(*t, log_q) << "  g = " << poly_text(*t, g)
               << '\n';
      }
    }
    if (cfg.format == Format::json) write_json(io.out, list);
    return kOk;
  });
}

int cmd_code(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto code = resolve_code(cfg);
    const auto& t = *code.tower;
    const Matrix h = h_subcode(code);
    if (cfg.format == Format::json) {
      json j = json_io::code_to_json(code);
      j["card"] = card_text(t, code.card_log_q());
      j["cyclicSubcode"] = json_io::matrix_to_json(h);
      write_json(io.out, j);
      return kOk;
    }
    io.out << "q = " << t.q() << ", n = " << code.n << '\n';
    io.out << "g = " << poly_text(t, code.g()) << '\n';
    io.out << "h = " << poly_text(t, code.cyclic.h) << '\n';
    io.out << "h* = " << poly_text(t, code.cyclic.h_star) << '\n';
    io.out << "|C| = " << card_text(t, code.card_log_q()) << '\n';
    if (code.gen_matrix.empty()) io.out << "zero code\n";
    print_matrix(io.out, t, "G", code.gen_matrix, code.n);
    print_matrix(io.out, t, "H_a", alternating_dual_matrix(code), code.n);
    print_matrix(io.out, t, "largest cyclic subcode", h, code.n);
    return kOk;
  });
}

int cmd_weights(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto code = resolve_code(cfg);
    const auto start = std::chrono::steady_clock::now();
    const auto dist = weight_distribution(code, options_of(cfg));
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    if (cfg.format == Format::json) {
      json j = json_io::distribution_to_json(dist, code.tower->q(), code.card_log_q());
      if (cfg.timing) j["elapsedMs"] = ms;
      write_json(io.out, j);
      return kOk;
    }
    io.out << "|C| = " << card_text(*code.tower, code.card_log_q()) << '\n';
    for (std::size_t w = 0; w < dist.counts.size(); ++w) {
      if (dist.counts[w] != 0) io.out << "A" << w << " = " << dist.counts[w] << '\n';
    }
    if (auto d = dist.min_weight()) {
      io.out << "minimum weight: " << *d << '\n';
    } else {
      io.out << "minimum weight: none (zero code)\n";
    }
    if (cfg.timing) io.out << "elapsed: " << ms << " ms\n";
    return kOk;
  });
}

int cmd_dual(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto code = resolve_code(cfg);
    const auto& t = *code.tower;
    const Matrix dual = alternating_dual_matrix(code);
    const bool containing = is_alternating_dual_containing(code);
    const bool char2 = t.p() == 2;
    if (cfg.format == Format::json) {
      json j = {{"dualMatrix", json_io::matrix_to_json(dual)},
                {"dualContaining", containing},
                {"dualIsConjucyclic", is_conjucyclic(t, dual)}};
      if (char2) {
        j["dualMatrixShift"] = json_io::matrix_to_json(alternating_dual_matrix_char2(code));
        j["traceDual"] = json_io::matrix_to_json(trace_dual(code));
      }
      write_json(io.out, j);
      return kOk;
    }
    print_matrix(io.out, t, "H_a", dual, code.n);
    if (char2) {
      print_matrix(io.out, t, "H_a (shift form)", alternating_dual_matrix_char2(code), code.n);
      print_matrix(io.out, t, "trace dual", trace_dual(code), code.n);
    }
    io.out << "dual is conjucyclic: " << (is_conjucyclic(t, dual) ? "yes" : "no") << '\n';
    io.out << "dual-containing: " << (containing ? "yes" : "no") << '\n';
    return kOk;
  });
}

int cmd_quantum(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto code = resolve_code(cfg);
    const auto s = stabilizer_params(code, options_of(cfg));
    if (cfg.format == Format::json) {
      write_json(io.out, json_io::stabilizer_to_json(s));
      return kOk;
    }
    io.out << "[[" << s.n << ", " << s.k_logical << ", >=" << s.d_lower << "]]_" << s.q
           << (s.pure ? " pure" : "") << '\n';
    return kOk;
  });
}

int cmd_verify_paper(const RunConfig& cfg, Streams io) {
  return guarded(io, [&] {
    const auto results = run_paper_checks(options_of(cfg));
    bool all = true;
    json list = json::array();
    for (const auto& r : results) {
      all = all && r.passed;
      if (cfg.format == Format::json) {
        list.push_back({{"check", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      } else {
        io.out << (r.passed ? "PASS  " : "FAIL  ") << r.name;
        if (!r.detail.empty()) io.out << "  [" << r.detail << "]";
        io.out << '\n';
      }
    }
    if (cfg.format == Format::json) write_json(io.out, list);
    return all ? kOk : kCheckFailed;
  });
}

}  // namespace conjucyclic::cli
