// Acceptance suite: runs every gate criterion at full scale and prints one
// PASS/FAIL line per criterion.  Exit code 0 only when all criteria hold.

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "fibcong/binom.hpp"
#include "fibcong/cli.hpp"
#include "fibcong/modmath.hpp"
#include "fibcong/qpoly.hpp"
#include "fibcong/quadring.hpp"
#include "fibcong/report.hpp"
#include "fibcong/selftest.hpp"
#include "fibcong/sequences.hpp"
#include "fibcong/verify.hpp"

using namespace fibcong;
using modmath::Modulus;
using modmath::Residue;
using verify::CheckId;
using verify::Status;

namespace {

int g_failures = 0;

void report_line(int criterion, const std::string& name, bool pass,
                 const std::string& detail) {
  std::printf("criterion %d %-4s %s (%s)\n", criterion, pass ? "PASS" : "FAIL",
              name.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++g_failures;
}

unsigned workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string counts(const verify::SweepReport& r) {
  std::ostringstream os;
  os << r.pass << " pass, " << r.fail << " fail, " << r.skip << " skip, "
     << r.wall_seconds << "s";
  return os.str();
}

bool all_applicable_pass(const verify::SweepReport& r) {
  if (r.fail != 0) return false;
  for (const auto& res : r.results) {
    bool should_run = verify::applicable(res.id, res.param);
    if (should_run && res.status != Status::Pass) return false;
    if (!should_run && res.status != Status::Skip) return false;
  }
  return true;
}

void criterion1_theorem_sweeps() {
  auto ids = cli::expand_checks("theorems");
  auto r = verify::sweep(ids, 3, 10000, workers());
  report_line(1, "theorems 1.1-1.4, 16 congruences, primes in [3,10000], mod p^2",
              all_applicable_pass(r) && r.pass > 0, counts(r));
}

void criterion2_remark_sweeps() {
  auto r = verify::sweep({CheckId::REM1, CheckId::REM2}, 3, 10000, workers());
  report_line(2, "remark congruences REM1/REM2, primes in [3,10000], mod p",
              all_applicable_pass(r) && r.pass > 0, counts(r));
}

void criterion3_lemma_suite() {
  auto l21 = verify::sweep({CheckId::L21}, 2, 500, workers());
  auto l25 = verify::sweep({CheckId::L25}, 2, 2000, workers());
  auto l27 = verify::sweep({CheckId::L27}, 2, 500, workers());
  auto l22 = verify::sweep({CheckId::L22}, 0, 200, workers());
  bool pass = all_applicable_pass(l21) && all_applicable_pass(l25) &&
              all_applicable_pass(l27) && all_applicable_pass(l22) &&
              l22.skip == 0;
  report_line(3, "lemma suite: L21 p<=500 (14 alphas), L25 p<=2000, L27 p<=500, L22 n<=200",
              pass,
              counts(l21) + " | " + counts(l25) + " | " + counts(l27) + " | " + counts(l22));
}

void criterion4_known_answers() {
  auto cases = selftest::run();
  std::size_t failed = 0;
  std::string first;
  for (const auto& c : cases) {
    if (!c.pass) {
      if (failed == 0) first = c.name + ": " + c.detail;
      ++failed;
    }
  }
  report_line(4, "known-answer suite (every hand-derived example)", failed == 0,
              std::to_string(cases.size()) + " cases" +
                  (failed ? ", first failure " + first : ""));
}

void criterion5_conjecture_sweeps() {
  auto start = std::chrono::steady_clock::now();
  bool pass = true;
  std::string detail;

  auto c41 = verify::sweep({CheckId::C41, CheckId::C43}, 1, 3000, workers());
  pass = pass && all_applicable_pass(c41) && c41.skip == 0;
  detail += "C41+C43 n<=3000: " + counts(c41);

  for (auto [a, b] : std::vector<std::pair<unsigned, unsigned>>{
           {1, 1}, {2, 1}, {2, 2}, {3, 2}, {3, 3}}) {
    auto r = verify::run_conj41_stability(a, b);
    if (r.status != Status::Pass) {
      pass = false;
      detail += " C41S(a=" + std::to_string(a) + ",b=" + std::to_string(b) + ") FAIL";
    }
  }
  for (unsigned a = 1; a <= 7; ++a) {
    auto r = verify::run_conj43_stability(a, a + 1);
    if (r.status != Status::Pass) {
      pass = false;
      detail += " C43S(a=" + std::to_string(a) + ") FAIL";
    }
  }
  for (unsigned a = 1; a <= 2; ++a) {
    for (std::uint64_t m = 1; m <= 3; ++m) {
      auto r = verify::run_conj42(a, m);
      if (r.status != Status::Pass) {
        pass = false;
        detail += " C42(a=" + std::to_string(a) + ",m=" + std::to_string(m) + ") FAIL";
      }
    }
  }
  auto c44 = verify::sweep({CheckId::C44}, 5, 2000, workers());
  auto c4546 = verify::sweep({CheckId::C45, CheckId::C46}, 2, 2000, workers());
  pass = pass && all_applicable_pass(c44) && all_applicable_pass(c4546);
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  detail += "; C44: " + counts(c44) + "; C45/C46: " + counts(c4546) +
            "; total " + std::to_string(secs) + "s";
  report_line(5, "conjecture sweeps (C41/C43 n<=3000, C41S, C42 {1,2}x{1,2,3}, C43S a<=7, C44-46 p<=2000)",
              pass, detail);
}

void criterion6_property_suites() {
  bool pass = true;
  std::string detail;

  // binomial-table oracle + Legendre valuation (k <= 2000)
  for (auto [p, a] : std::vector<std::pair<std::uint64_t, unsigned>>{
           {2, 19}, {3, 12}, {5, 8}, {7, 7}, {13, 2}, {997, 2}}) {
    Modulus mod = Modulus::make(p, a);
    auto table = binom::central_binomials(mod, 2000);
    mpz_class exact = 1;
    for (std::size_t k = 0; k <= 2000 && pass; ++k) {
      if (k > 0) {
        exact *= 2 * (2 * k - 1);
        mpz_divexact_ui(exact.get_mpz_t(), exact.get_mpz_t(), k);
      }
      if (binom::residue_of(table[k]).value() != mpz_fdiv_ui(exact.get_mpz_t(), mod.m)) {
        pass = false;
        detail += "table/exact mismatch p=" + std::to_string(p) + " k=" + std::to_string(k);
      }
      unsigned legendre = 0;
      for (std::uint64_t pj = p; pj <= 2 * k; pj *= p) {
        legendre += static_cast<unsigned>(2 * k / pj - 2 * (k / pj));
        if (pj > (2 * k) / p) break;
      }
      if (table[k].exponent != legendre) {
        pass = false;
        detail += "valuation mismatch p=" + std::to_string(p) + " k=" + std::to_string(k);
      }
    }
  }

  // golden power law t^n = F_{n-1} + F_n t, n <= 2000
  {
    Modulus m = Modulus::make(9973, 2);
    auto ring = quadring::golden_ring(m);
    auto fib = sequences::seq_table_mod(sequences::kFibonacci, 2002, m);
    auto t = quadring::QuadElement::gen(ring);
    auto power = t;
    for (std::uint64_t n = 1; n <= 2000 && pass; ++n) {
      if (!(power == quadring::QuadElement(fib.u[n - 1], fib.u[n], ring))) {
        pass = false;
        detail += "golden power law fails at n=" + std::to_string(n);
      }
      power = power * t;
    }
  }

  // Gaussian-binomial symmetry/degree/q=1, n <= 40
  for (int n = 0; n <= 40 && pass; ++n) {
    for (int k = 0; k <= n && pass; ++k) {
      auto g = qpoly::gaussian_binomial(n, k);
      if (!(g == qpoly::gaussian_binomial(n, n - k)) ||
          g.degree() != static_cast<std::int64_t>(k) * (n - k) ||
          g.eval_one() != binom::binom_exact(n, k)) {
        pass = false;
        detail += "gaussian property fails at (" + std::to_string(n) + "," + std::to_string(k) + ")";
      }
    }
  }

  // closed forms, all four families, n <= 400
  for (std::uint64_t n = 0; n <= 400 && pass; ++n) {
    for (auto fam : {sequences::ClosedForm::U55, sequences::ClosedForm::V55,
                     sequences::ClosedForm::U42, sequences::ClosedForm::V42}) {
      if (!sequences::closed_form_check(fam, n)) {
        pass = false;
        detail += "closed form fails at n=" + std::to_string(n);
      }
    }
  }

  // classical F_p == (p/5), F_{p-(p/5)} == 0 (mod p), p <= 10^4
  for (std::uint64_t p : modmath::primes_in(3, 10000)) {
    if (p == 5) continue;
    Modulus mp = Modulus::make(p, 1);
    int j5 = modmath::jacobi(static_cast<std::int64_t>(p), 5);
    bool a = sequences::lucas_u_mod(sequences::kFibonacci, p, mp) ==
             Residue::from_int(j5, mp);
    bool b = sequences::lucas_u_mod(sequences::kFibonacci,
                                    j5 == 1 ? p - 1 : p + 1, mp).value() == 0;
    if (!a || !b) {
      pass = false;
      detail += "classical Fibonacci congruence fails at p=" + std::to_string(p);
      break;
    }
  }

  report_line(6, "property suites (binomial oracle k<=2000, Legendre valuation, golden power law, Gaussian binomials, closed forms, F_p classics)",
              pass, pass ? "all properties hold" : detail);
}

void criterion7_harness_integrity() {
  bool pass = true;
  std::string detail;

  const std::vector<std::pair<CheckId, verify::Param>> smallest{
      {CheckId::T11a, {3, 0}},  {CheckId::T11b, {3, 0}},  {CheckId::T11c, {3, 0}},
      {CheckId::T11d, {3, 0}},  {CheckId::T12a, {3, 0}},  {CheckId::T12b, {3, 0}},
      {CheckId::T12c, {3, 0}},  {CheckId::T12d, {3, 0}},  {CheckId::T13a, {5, 0}},
      {CheckId::T13b, {5, 0}},  {CheckId::T13c, {5, 0}},  {CheckId::T13d, {5, 0}},
      {CheckId::T14a, {3, 0}},  {CheckId::T14b, {3, 0}},  {CheckId::T14c, {3, 0}},
      {CheckId::T14d, {3, 0}},  {CheckId::REM1, {3, 0}},  {CheckId::REM2, {3, 0}},
      {CheckId::L21, {2, 0}},   {CheckId::L22, {0, 0}},   {CheckId::L25, {3, 0}},
      {CheckId::L27, {3, 0}},   {CheckId::C41, {1, 0}},   {CheckId::C41S, {1, 1}},
      {CheckId::C42, {1, 1}},   {CheckId::C43, {1, 0}},   {CheckId::C43S, {1, 1}},
      {CheckId::C44, {5, 0}},   {CheckId::C45, {11, 0}},  {CheckId::C46, {7, 0}},
  };
  if (smallest.size() != static_cast<std::size_t>(verify::kNumCheckIds)) {
    pass = false;
    detail += "id coverage incomplete;";
  }
  for (const auto& [id, param] : smallest) {
    auto clean = verify::run_check(id, param);
    auto mutated = verify::run_check(id, param, verify::CheckOptions{true});
    if (clean.status != Status::Pass || mutated.status != Status::Fail) {
      pass = false;
      detail += std::string(" mutation not detected for ") + std::string(verify::to_string(id));
    }
  }

  std::vector<CheckId> mix{CheckId::T11a, CheckId::T12d, CheckId::T14c,
                           CheckId::REM1, CheckId::L25, CheckId::C44,
                           CheckId::C41, CheckId::L22};
  auto r1 = verify::sweep(mix, 2, 250, 1);
  auto r8 = verify::sweep(mix, 2, 250, 8);
  for (auto fmt : {report::Format::Text, report::Format::Json, report::Format::Csv}) {
    if (report::emit(r1, fmt) != report::emit(r8, fmt)) {
      pass = false;
      detail += " worker-count dependence in serialized report";
      break;
    }
  }

  report_line(7, "harness integrity (LHS+1 flips every check; byte-identical reports for 1 vs 8 workers)",
              pass, pass ? "mutation detected for all 30 ids; reports identical" : detail);
}

}  // namespace

int main() {
  auto start = std::chrono::steady_clock::now();
  criterion1_theorem_sweeps();
  criterion2_remark_sweeps();
  criterion3_lemma_suite();
  criterion4_known_answers();
  criterion5_conjecture_sweeps();
  criterion6_property_suites();
  criterion7_harness_integrity();
  double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("acceptance: %s (%d criterion failures, %.1fs)\n",
              g_failures == 0 ? "PASS" : "FAIL", g_failures, secs);
  return g_failures == 0 ? 0 : 1;
}
