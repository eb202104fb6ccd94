#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "conjucyclic/conjucyclic.hpp"
#include "conjucyclic/errors.hpp"
#include "conjucyclic/weights.hpp"

namespace conjucyclic::cli {

enum class Format { text, json };

// Process exit statuses.
enum ExitCode : int {
  kOk = 0,
  kCheckFailed = 1,
  kUsage = 2,
  kNotADivisor = 3,
  kBudgetExceeded = 4,
  kNotDualContaining = 5,
  kFailure = 6,
};

struct RunConfig {
  std::uint64_t q = 0;
  std::size_t n = 0;
  // At most one of these is set; neither means g = 1.
  std::optional<std::vector<std::string>> g_codes;
  std::optional<std::vector<std::uint32_t>> exps;
  Format format = Format::text;
  unsigned workers = 1;
  std::uint64_t budget = EnumerationOptions{}.budget;
  bool timing = true;  // weights: emit elapsedMs
};

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

// Each command validates its inputs, writes its report and returns an
// ExitCode; library errors are reported on `err`, never thrown.
int cmd_factor(const RunConfig& cfg, Streams io);
int cmd_enumerate(const RunConfig& cfg, Streams io);
int cmd_code(const RunConfig& cfg, Streams io);
int cmd_weights(const RunConfig& cfg, Streams io);
int cmd_dual(const RunConfig& cfg, Streams io);
int cmd_quantum(const RunConfig& cfg, Streams io);
int cmd_verify_paper(const RunConfig& cfg, Streams io);

/// Exit status for a library error code.
[[nodiscard]] int exit_code_for(ErrorCode code) noexcept;

/// The tower and code selected by q, n and g/exps.  Throws conjucyclic::Error.
[[nodiscard]] ConjucyclicCode resolve_code(const RunConfig& cfg);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Golden checks against the published worked examples.
[[nodiscard]] std::vector<CheckResult> run_paper_checks(const EnumerationOptions& options);

}  // namespace conjucyclic::cli
