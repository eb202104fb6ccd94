#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

namespace {

using namespace conjucyclic::cli;

void add_code_flags(CLI::App& sub, RunConfig& cfg, bool needs_g) {
  sub.add_option("--q", cfg.q, "field size of the q-ary side (prime power)")->required();
  sub.add_option("--n", cfg.n, "code length over GF(q^2)")->required();
  if (!needs_g) return;
  auto* g = sub.add_option("--g", cfg.g_codes,
                           "generator polynomial, low degree first; element codes or b<k>")
                ->delimiter(',');
  auto* e = sub.add_option("--exps", cfg.exps, "exponent tuple over the canonical factors")
                ->delimiter(',');
  g->excludes(e);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Additive conjucyclic codes over GF(q^2)"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  std::string format = "text";
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--workers", cfg.workers, "enumeration threads")->check(CLI::Range(1U, 1024U));
  app.add_option("--budget", cfg.budget, "maximum number of codewords (or divisors) to enumerate")
      ->check(CLI::PositiveNumber);
  bool no_timing = false;
  app.add_flag("--no-timing", no_timing, "omit elapsed time from weight reports");

  std::map<CLI::App*, int (*)(const RunConfig&, Streams)> commands;
  auto* factor = app.add_subcommand("factor", "factor x^{2n} - 1 over GF(q)");
  add_code_flags(*factor, cfg, false);
  commands[factor] = cmd_factor;
  auto* enumerate = app.add_subcommand("enumerate", "list every divisor g and its code size");
  add_code_flags(*enumerate, cfg, false);
  commands[enumerate] = cmd_enumerate;
  auto* code = app.add_subcommand("code", "generator, alternating dual and cyclic subcode matrices");
  add_code_flags(*code, cfg, true);
  commands[code] = cmd_code;
  auto* weights = app.add_subcommand("weights", "exhaustive Hamming weight distribution");
  add_code_flags(*weights, cfg, true);
  commands[weights] = cmd_weights;
  auto* dual = app.add_subcommand("dual", "alternating and trace duals, dual containment");
  add_code_flags(*dual, cfg, true);
  commands[dual] = cmd_dual;
  auto* quantum = app.add_subcommand("quantum", "stabilizer code parameters");
  add_code_flags(*quantum, cfg, true);
  commands[quantum] = cmd_quantum;
  auto* verify = app.add_subcommand("verify-paper", "check the published worked examples");
  commands[verify] = cmd_verify_paper;

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }
  cfg.format = format == "json" ? Format::json : Format::text;
  cfg.timing = !no_timing;

  for (const auto& [sub, run] : commands) {
    if (sub->parsed()) return run(cfg, Streams{std::cout, std::cerr});
  }
  return kUsage;
}
