#include "fibcong/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "fibcong/binom.hpp"
#include "fibcong/selftest.hpp"
#include "fibcong/sequences.hpp"

namespace fibcong::cli {

using verify::CheckId;
using verify::ParamKind;

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

const std::vector<CheckId>& sweepable_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (CheckId id : verify::all_check_ids()) {
      auto kind = verify::param_kind(id);
      if (kind == ParamKind::Prime || kind == ParamKind::Index) v.push_back(id);
    }
    return v;
  }();
  return ids;
}

std::vector<CheckId> ids_of_family(const std::string& family) {
  std::vector<CheckId> out;
  for (CheckId id : verify::all_check_ids()) {
    if (verify::family_of(id) == family) out.push_back(id);
  }
  return out;
}

}  // namespace

std::vector<CheckId> expand_checks(const std::string& list) {
  std::set<int> seen;
  std::stringstream ss(list);
  std::string token;
  bool any_token = false;
  while (std::getline(ss, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    any_token = true;
    std::string key = lower(token);

    std::vector<CheckId> expanded;
    if (key == "all") {
      expanded = sweepable_ids();
    } else if (key == "theorems") {
      for (auto fam : {"thm1.1", "thm1.2", "thm1.3", "thm1.4"}) {
        auto ids = ids_of_family(fam);
        expanded.insert(expanded.end(), ids.begin(), ids.end());
      }
    } else if (key == "lemmas") {
      for (auto fam : {"lem2.1", "lem2.2", "lem2.5", "lem2.7"}) {
        auto ids = ids_of_family(fam);
        expanded.insert(expanded.end(), ids.begin(), ids.end());
      }
    } else if (auto id = verify::check_id_from_string(key)) {
      expanded.push_back(*id);
    } else {
      expanded = ids_of_family(key);
      if (expanded.empty()) {
        throw UsageError("--checks: unknown check id or family '" + token + "'");
      }
    }
    for (CheckId id : expanded) seen.insert(static_cast<int>(id));
  }
  if (!any_token) throw UsageError("--checks: empty check set");
  std::vector<CheckId> out;
  for (int id : seen) out.push_back(static_cast<CheckId>(id));
  return out;
}

namespace {

CheckId conjecture_id(const std::string& name) {
  std::string key = lower(name);
  if (key.rfind("conj", 0) == 0) key = key.substr(4);
  static const std::vector<std::pair<std::string, CheckId>> table = {
      {"4.1", CheckId::C41},  {"4.1s", CheckId::C41S}, {"4.2", CheckId::C42},
      {"4.3", CheckId::C43},  {"4.3s", CheckId::C43S}, {"4.4", CheckId::C44},
      {"4.5", CheckId::C45},  {"4.6", CheckId::C46},
  };
  for (const auto& [k, v] : table) {
    if (key == k) return v;
  }
  if (auto id = verify::check_id_from_string(key)) {
    if (std::string_view(verify::family_of(*id)).substr(0, 4) == "conj") return *id;
  }
  throw UsageError("conjecture --id: unknown conjecture '" + name + "'");
}

const std::vector<std::string>& seq_family_names() {
  static const std::vector<std::string> names = {
      "fib", "lucas", "s", "t", "pell", "pellq",
      "u55", "v55", "u42", "v42", "binom"};
  return names;
}

}  // namespace

CliConfig parse_args(const std::vector<std::string>& args) {
  CliConfig config;
  config.jobs = std::max(1u, std::thread::hardware_concurrency());

  CLI::App app{"fibcong: exact congruence checks for central-binomial sums "
               "weighted by Fibonacci/Lucas-type sequences"};
  app.require_subcommand(1);

  std::string checks_str, format_str = "text", id_str, families_str;

  auto add_io = [&](CLI::App* cmd) {
    cmd->add_option("--format", format_str, "text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    cmd->add_option("--out", config.out, "output path (default: stdout)");
  };
  auto add_range = [&](CLI::App* cmd) {
    cmd->add_option("--min", config.min, "range lower bound");
    cmd->add_option("--max", config.max, "range upper bound");
  };

  CLI::App* sweep = app.add_subcommand(
      "sweep", "run checks over every prime/index in a range");
  sweep->add_option("--checks", checks_str,
                    "comma list of ids or families (default: all sweepable)");
  add_range(sweep);
  sweep->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_io(sweep);

  CLI::App* check = app.add_subcommand("check", "run checks at a single parameter");
  check->add_option("--checks", checks_str, "comma list of ids or families")->required();
  check->add_option("--n", config.n, "the parameter (prime or index)")->required();
  add_io(check);

  CLI::App* conj = app.add_subcommand("conjecture", "run one conjecture instance");
  conj->add_option("--id", id_str, "4.1, 4.1s, 4.2, 4.3, 4.3s, 4.4, 4.5 or 4.6")->required();
  conj->add_option("--n", config.n, "index or prime (4.1, 4.3, 4.4, 4.5, 4.6)");
  conj->add_option("--a", config.a, "power parameter a (4.1s, 4.2, 4.3s)");
  conj->add_option("--m", config.m, "multiplier m (4.2)");
  conj->add_option("--b", config.b, "modulus exponent b (4.1s, 4.3s)");
  add_io(conj);

  CLI::App* lemma = app.add_subcommand("lemma", "sweep the lemma identities");
  lemma->add_option("--checks", checks_str, "subset of lem2.1, lem2.2, lem2.5, lem2.7");
  add_range(lemma);
  lemma->add_option("--jobs", config.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_io(lemma);

  CLI::App* seq = app.add_subcommand("seq", "print exact sequence/binomial tables");
  seq->add_option("--checks", families_str,
                  "comma list of: fib, lucas, s, t, pell, pellq, u55, v55, u42, v42, binom");
  add_range(seq);
  add_io(seq);

  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the built-in known-answer suite");
  add_io(selftest);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    std::ostringstream os;
    os << app.help();
    throw HelpRequested(os.str());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.format = report::format_from_string(format_str);

  if (sweep->parsed()) {
    config.cmd = CliConfig::Cmd::Sweep;
    config.checks = checks_str.empty() ? sweepable_ids() : expand_checks(checks_str);
  } else if (check->parsed()) {
    config.cmd = CliConfig::Cmd::Check;
    config.checks = expand_checks(checks_str);
  } else if (conj->parsed()) {
    config.cmd = CliConfig::Cmd::Conjecture;
    config.checks = {conjecture_id(id_str)};
  } else if (lemma->parsed()) {
    config.cmd = CliConfig::Cmd::Lemma;
    config.checks = checks_str.empty()
                        ? std::vector<CheckId>{CheckId::L21, CheckId::L22,
                                               CheckId::L25, CheckId::L27}
                        : expand_checks(checks_str);
    for (CheckId id : config.checks) {
      if (verify::family_of(id).substr(0, 3) != "lem") {
        throw UsageError("lemma: '" + std::string(verify::to_string(id)) +
                         "' is not a lemma check");
      }
    }
  } else if (seq->parsed()) {
    config.cmd = CliConfig::Cmd::Seq;
    config.min = seq->count("--min") ? config.min : 0;
    std::stringstream ss(families_str.empty() ? "fib" : families_str);
    std::string token;
    while (std::getline(ss, token, ',')) {
      if (token.empty()) continue;
      std::string key = lower(token);
      const auto& known = seq_family_names();
      if (std::find(known.begin(), known.end(), key) == known.end()) {
        throw UsageError("seq: unknown family '" + token + "'");
      }
      config.seq_families.push_back(key);
    }
    if (config.seq_families.empty()) throw UsageError("seq: empty family list");
  } else {
    config.cmd = CliConfig::Cmd::Selftest;
  }

  // Range/parameter validation before any computation starts.
  bool uses_range = config.cmd == CliConfig::Cmd::Sweep ||
                    config.cmd == CliConfig::Cmd::Lemma ||
                    config.cmd == CliConfig::Cmd::Seq;
  if (uses_range) {
    if (config.min > config.max) {
      throw UsageError("--min must not exceed --max (got " + std::to_string(config.min) +
                       " > " + std::to_string(config.max) + ")");
    }
    if (config.min < 0) throw UsageError("--min must be nonnegative");
  }
  if (config.checks.empty() && config.cmd != CliConfig::Cmd::Seq &&
      config.cmd != CliConfig::Cmd::Selftest) {
    throw UsageError("empty check set");
  }
  if (config.cmd == CliConfig::Cmd::Sweep || config.cmd == CliConfig::Cmd::Lemma) {
    for (CheckId id : config.checks) {
      auto kind = verify::param_kind(id);
      if (kind != ParamKind::Prime && kind != ParamKind::Index) {
        throw UsageError(std::string(verify::to_string(id)) +
                         " takes explicit parameters; use the conjecture subcommand");
      }
    }
  }
  if (config.cmd == CliConfig::Cmd::Check) {
    if (!config.n) throw UsageError("check: --n is required");
    for (CheckId id : config.checks) {
      auto kind = verify::param_kind(id);
      if (kind == ParamKind::PairAM || kind == ParamKind::PairAB) {
        throw UsageError(std::string(verify::to_string(id)) +
                         " takes explicit parameters; use the conjecture subcommand");
      }
      if (kind == ParamKind::Prime &&
          (*config.n < 2 || !modmath::is_prime(static_cast<std::uint64_t>(*config.n)))) {
        throw UsageError("check: " + std::string(verify::to_string(id)) +
                         " needs a prime --n, got " + std::to_string(*config.n));
      }
      if (kind == ParamKind::Index && !verify::applicable(id, {*config.n, 0})) {
        throw UsageError("check: --n out of range for " +
                         std::string(verify::to_string(id)));
      }
    }
  }
  if (config.cmd == CliConfig::Cmd::Conjecture) {
    CheckId id = config.checks.front();
    auto need = [&](const std::optional<std::int64_t>& v, const char* flag) {
      if (!v) {
        throw UsageError("conjecture " + std::string(verify::to_string(id)) +
                         ": missing " + flag);
      }
      if (*v < 0) throw UsageError(std::string(flag) + " must be nonnegative");
    };
    switch (verify::param_kind(id)) {
      case ParamKind::Index:
        need(config.n, "--n");
        if (*config.n < 1) throw UsageError("conjecture: --n must be >= 1");
        break;
      case ParamKind::Prime:
        need(config.n, "--n");
        if (!modmath::is_prime(static_cast<std::uint64_t>(*config.n))) {
          throw UsageError("conjecture: --n must be prime for " +
                           std::string(verify::to_string(id)));
        }
        break;
      case ParamKind::PairAM:
        need(config.a, "--a");
        need(config.m, "--m");
        if (*config.a < 1) throw UsageError("conjecture: --a must be >= 1");
        break;
      case ParamKind::PairAB:
        need(config.a, "--a");
        need(config.b, "--b");
        if (!verify::applicable(id, {*config.a, *config.b})) {
          throw UsageError("conjecture: (--a, --b) violates the stability hypothesis of " +
                           std::string(verify::to_string(id)));
        }
        break;
    }
  }
  return config;
}

int exit_code_for(const verify::SweepReport& report) {
  if (report.fail > 0) return 1;
  if (report.pass == 0) return 2;
  return 0;
}

namespace {

int finish(const verify::SweepReport& report, const CliConfig& config,
           std::ostream& out, std::ostream& err) {
  std::string text = report::emit(report, config.format);
  if (config.out.empty()) {
    out << text;
  } else {
    std::ofstream file(config.out);
    if (!file) throw UsageError("cannot write output path: " + config.out);
    file << text;
    if (!file.good()) throw UsageError("write failed: " + config.out);
  }
  err << "ran " << report.results.size() << " checks in " << report.wall_seconds
      << "s: " << report.pass << " pass, " << report.fail << " fail, "
      << report.skip << " skip\n";
  int code = exit_code_for(report);
  if (code == 2) err << "no applicable check ran in the given range\n";
  return code;
}

verify::SweepReport singles_report(std::vector<verify::CheckResult> results,
                                   std::int64_t lo, std::int64_t hi) {
  verify::SweepReport report;
  report.lo = lo;
  report.hi = hi;
  report.results = std::move(results);
  for (const auto& r : report.results) {
    switch (r.status) {
      case verify::Status::Pass: ++report.pass; break;
      case verify::Status::Fail: ++report.fail; break;
      case verify::Status::Skip: ++report.skip; break;
    }
  }
  return report;
}

int run_seq(const CliConfig& config, std::ostream& out, std::ostream& err) {
  using sequences::SeqParams;
  struct Family {
    std::string name;
    std::function<mpz_class(std::uint64_t)> value;
  };
  auto u_of = [](SeqParams s) {
    return [s](std::uint64_t n) { return sequences::seq_u_exact(s, n); };
  };
  auto v_of = [](SeqParams s) {
    return [s](std::uint64_t n) { return sequences::seq_v_exact(s, n); };
  };
  std::vector<Family> families;
  for (const std::string& name : config.seq_families) {
    if (name == "fib") families.push_back({name, u_of(sequences::kFibonacci)});
    else if (name == "lucas") families.push_back({name, v_of(sequences::kFibonacci)});
    else if (name == "s") families.push_back({name, u_of(sequences::kST)});
    else if (name == "t") families.push_back({name, v_of(sequences::kST)});
    else if (name == "pell") families.push_back({name, u_of(sequences::kPell)});
    else if (name == "pellq") families.push_back({name, v_of(sequences::kPell)});
    else if (name == "u55") families.push_back({name, u_of(sequences::kU55)});
    else if (name == "v55") families.push_back({name, v_of(sequences::kU55)});
    else if (name == "u42") families.push_back({name, u_of(sequences::kU42)});
    else if (name == "v42") families.push_back({name, v_of(sequences::kU42)});
    else if (name == "binom") {
      families.push_back({name, [](std::uint64_t n) {
        return binom::binom_exact(2 * n, n);
      }});
    }
  }

  std::ostringstream body;
  auto lo = static_cast<std::uint64_t>(config.min);
  auto hi = static_cast<std::uint64_t>(config.max);
  if (config.format == report::Format::Json) {
    body << "{\n  \"version\": \"1\",\n  \"tables\": [\n";
    for (std::size_t f = 0; f < families.size(); ++f) {
      body << "    {\"family\": \"" << families[f].name << "\", \"values\": [";
      for (std::uint64_t n = lo; n <= hi; ++n) {
        if (n > lo) body << ", ";
        body << "\"" << families[f].value(n).get_str() << "\"";
      }
      body << "]}" << (f + 1 < families.size() ? "," : "") << "\n";
    }
    body << "  ]\n}\n";
  } else if (config.format == report::Format::Csv) {
    body << "family,n,value\n";
    for (const auto& fam : families) {
      for (std::uint64_t n = lo; n <= hi; ++n) {
        body << fam.name << "," << n << "," << fam.value(n).get_str() << "\n";
      }
    }
  } else {
    for (const auto& fam : families) {
      body << fam.name << ":";
      for (std::uint64_t n = lo; n <= hi; ++n) body << " " << fam.value(n).get_str();
      body << "\n";
    }
  }

  if (config.out.empty()) {
    out << body.str();
  } else {
    std::ofstream file(config.out);
    if (!file) throw UsageError("cannot write output path: " + config.out);
    file << body.str();
  }
  (void)err;
  return 0;
}

int run_selftest(const CliConfig& config, std::ostream& out, std::ostream& err) {
  auto cases = selftest::run();
  std::size_t failures = 0;
  for (const auto& c : cases) {
    if (!c.pass) {
      ++failures;
      out << "FAIL " << c.name << ": " << c.detail << "\n";
    } else if (config.format == report::Format::Text) {
      out << "PASS " << c.name << "\n";
    }
  }
  err << cases.size() << " known-answer cases, " << failures << " failed\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int run(const CliConfig& config, std::ostream& out, std::ostream& err) {
  switch (config.cmd) {
    case CliConfig::Cmd::Sweep:
    case CliConfig::Cmd::Lemma: {
      auto report = verify::sweep(config.checks, config.min, config.max, config.jobs);
      return finish(report, config, out, err);
    }
    case CliConfig::Cmd::Check: {
      std::vector<verify::CheckResult> results;
      for (CheckId id : config.checks) {
        results.push_back(verify::run_check(id, {*config.n, 0}));
      }
      return finish(singles_report(std::move(results), *config.n, *config.n),
                    config, out, err);
    }
    case CliConfig::Cmd::Conjecture: {
      CheckId id = config.checks.front();
      verify::Param param;
      switch (verify::param_kind(id)) {
        case ParamKind::Prime:
        case ParamKind::Index:
          param = {*config.n, 0};
          break;
        case ParamKind::PairAM:
          param = {*config.a, *config.m};
          break;
        case ParamKind::PairAB:
          param = {*config.a, *config.b};
          break;
      }
      std::vector<verify::CheckResult> results{verify::run_check(id, param)};
      return finish(singles_report(std::move(results), param.first, param.first),
                    config, out, err);
    }
    case CliConfig::Cmd::Seq:
      return run_seq(config, out, err);
    case CliConfig::Cmd::Selftest:
      return run_selftest(config, out, err);
  }
  throw std::logic_error("run: bad command");
}

}  // namespace fibcong::cli
