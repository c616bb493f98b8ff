#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fibcong/report.hpp"
#include "fibcong/verify.hpp"

namespace fibcong::cli {

/// Bad flags, unknown ids, inconsistent ranges: exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// --help was requested; carries the text to print (exit code 0).
struct HelpRequested : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CliConfig {
  enum class Cmd { Sweep, Check, Conjecture, Lemma, Seq, Selftest };

  Cmd cmd = Cmd::Sweep;
  std::vector<verify::CheckId> checks;
  std::int64_t min = 3;
  std::int64_t max = 100;
  std::optional<std::int64_t> n;
  std::optional<std::int64_t> a;
  std::optional<std::int64_t> m;
  std::optional<std::int64_t> b;
  unsigned jobs = 1;
  report::Format format = report::Format::Text;
  std::string out;  // empty = stdout
  std::vector<std::string> seq_families;
};

/// Expand a comma-separated list of check ids and family names
/// ("thm1.3,T11a,lem2.5") into ids, deduplicated, in declaration order.
/// "all" covers every range-sweepable check; the pair-parameter checks
/// (C41S, C43S, C42) must be named explicitly or run via `conjecture`.
std::vector<verify::CheckId> expand_checks(const std::string& list);

/// argv without the program name.  Throws UsageError / HelpRequested.
CliConfig parse_args(const std::vector<std::string>& args);

/// Exit-code rule: 1 when any FAIL, 0 when no FAIL and at least one
/// non-SKIP check ran, 2 otherwise (nothing was actually verified).
int exit_code_for(const verify::SweepReport& report);

/// Execute a validated config, writing the report to `out` (or the path in
/// config.out) and diagnostics to `err`.  Returns the process exit code.
int run(const CliConfig& config, std::ostream& out, std::ostream& err);

}  // namespace fibcong::cli
