#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <charconv>
#include <map>

#include "fibcong/binom.hpp"
#include "fibcong/modmath.hpp"
#include "fibcong/report.hpp"
#include "fibcong/sequences.hpp"
#include "fibcong/verify.hpp"

using namespace fibcong;
using binom::BigInt;
using modmath::Modulus;
using modmath::Residue;
using verify::CheckId;
using verify::CheckOptions;
using verify::CheckResult;
using verify::Param;
using verify::Status;

namespace {

std::uint64_t as_u64(const std::string& s) {
  std::uint64_t v = 0;
  auto [p, err] = std::from_chars(s.data(), s.data() + s.size(), v);
  REQUIRE(err == std::errc{});
  REQUIRE(p == s.data() + s.size());
  return v;
}

// Exact-rational oracle for a theorem LHS: numerator
//   sum_k w(k) C(2k,k) base^(T-1-k)
// reduced mod p^2, then divided by base^(T-1).  Entirely independent of
// the modular tables used by run_prime_check.
std::uint64_t exact_theorem_lhs(CheckId id, std::uint64_t p) {
  using sequences::seq_u_exact;
  using sequences::seq_v_exact;
  const bool half = id == CheckId::T11c || id == CheckId::T11d ||
                    id == CheckId::T12c || id == CheckId::T12d ||
                    id == CheckId::T13c || id == CheckId::T13d ||
                    id == CheckId::T14c || id == CheckId::T14d;
  const std::uint64_t terms = half ? (p - 1) / 2 + 1 : p;
  std::uint64_t base = 1;
  switch (id) {
    case CheckId::T12a: case CheckId::T12b: base = 5; break;
    case CheckId::T14a: case CheckId::T14b: base = 2; break;
    default: base = half ? 16 : 1;
  }
  auto weight = [&](std::uint64_t k) -> BigInt {
    switch (id) {
      case CheckId::T11a: return seq_u_exact(sequences::kFibonacci, 2 * k);
      case CheckId::T11b: return seq_u_exact(sequences::kFibonacci, 2 * k + 1);
      case CheckId::T11c: return seq_u_exact(sequences::kFibonacci, 2 * k);
      case CheckId::T11d: return seq_u_exact(sequences::kFibonacci, 2 * k + 1);
      case CheckId::T12a: return seq_u_exact(sequences::kU55, k);
      case CheckId::T12b: return seq_u_exact(sequences::kU55, k + 1);
      case CheckId::T12c: return seq_u_exact(sequences::kU55, k);
      case CheckId::T12d: return seq_v_exact(sequences::kU55, k);
      case CheckId::T13a: return seq_u_exact(sequences::kST, k);
      case CheckId::T13b: return seq_u_exact(sequences::kST, k + 1);
      case CheckId::T13c: return seq_u_exact(sequences::kST, k);
      case CheckId::T13d: return seq_v_exact(sequences::kST, k);
      case CheckId::T14a: return seq_u_exact(sequences::kU42, k);
      case CheckId::T14b: return seq_u_exact(sequences::kU42, k + 1);
      case CheckId::T14c: return seq_u_exact(sequences::kU42, k);
      case CheckId::T14d: return seq_v_exact(sequences::kU42, k);
      default: throw std::logic_error("not a theorem id");
    }
  };
  BigInt acc = 0;
  for (std::uint64_t k = 0; k < terms; ++k) {
    BigInt term = weight(k) * binom::binom_exact(2 * k, k);
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), base, terms - 1 - k);
    acc += term * scale;
  }
  Modulus m2 = Modulus::make(p, 2);
  Residue value(mpz_fdiv_ui(acc.get_mpz_t(), m2.m), m2);
  Residue inv_base = Residue(base, m2).inverse().pow(terms - 1);
  return (value * inv_base).value();
}

const std::vector<CheckId>& theorem_ids() {
  static const std::vector<CheckId> ids{
      CheckId::T11a, CheckId::T11b, CheckId::T11c, CheckId::T11d,
      CheckId::T12a, CheckId::T12b, CheckId::T12c, CheckId::T12d,
      CheckId::T13a, CheckId::T13b, CheckId::T13c, CheckId::T13d,
      CheckId::T14a, CheckId::T14b, CheckId::T14c, CheckId::T14d};
  return ids;
}

}  // namespace

TEST_CASE("known answers from hand derivations") {
  CheckResult r = verify::run_prime_check(CheckId::T11a, 7);
  CHECK(r.status == Status::Pass);
  CHECK(r.lhs == "47");  // -2 mod 49
  CHECK(r.modulus == "49");
  CHECK(verify::run_prime_check(CheckId::T11a, 5).status == Status::Skip);

  CheckResult t13 = verify::run_prime_check(CheckId::T13a, 5);
  CHECK(t13.status == Status::Pass);
  CHECK(t13.lhs == "21");  // 4246 == -4 (mod 25)

  CheckResult t12b = verify::run_prime_check(CheckId::T12b, 3);
  CHECK(t12b.status == Status::Pass);
  CHECK(t12b.lhs == "6");

  CheckResult t14b = verify::run_prime_check(CheckId::T14b, 3);
  CHECK(t14b.status == Status::Pass);
  CHECK(t14b.lhs == "8");  // 26 == -1 (mod 9)

  CheckResult rem1 = verify::run_prime_check(CheckId::REM1, 3);
  CHECK(rem1.status == Status::Pass);
  CHECK(rem1.lhs == "1");  // 13 == -2 == 1 (mod 3)

  CHECK(verify::run_lemma_check(CheckId::L25, 7).status == Status::Pass);
  CHECK(verify::run_lemma_check(CheckId::L25, 11).status == Status::Pass);
  CHECK(verify::run_lemma_check(CheckId::L27, 5).status == Status::Pass);
  CHECK(verify::run_l22(2).status == Status::Pass);

  CheckResult c44 = verify::run_conj44(5);
  CHECK(c44.status == Status::Pass);
  CHECK(c44.lhs == "45");
  CHECK(c44.modulus == "125");
  CHECK(verify::run_conj45(5).status == Status::Skip);
  CHECK(verify::run_conj45(11).status == Status::Pass);
  CHECK(verify::run_conj46(7).status == Status::Pass);
  CHECK(verify::run_conj46(3).status == Status::Skip);

  CheckResult c41 = verify::run_conj41(1);
  CHECK(c41.status == Status::Pass);
  CHECK(c41.lhs == "4");
  CHECK(verify::run_conj41(2).lhs == "1");
  CHECK(verify::run_conj41(5).lhs == "6");
  CHECK(verify::run_conj43(1).lhs == "7");
  CHECK(verify::run_conj43(2).lhs == "1");

  CHECK(verify::run_conj41_stability(1, 1).status == Status::Pass);
  CHECK(verify::run_conj42(1, 1).status == Status::Pass);
  CHECK(verify::run_conj42(1, 0).status == Status::Pass);  // empty sum
}

TEST_CASE("modular route equals the exact-rational route for p <= 50") {
  for (std::uint64_t p : modmath::primes_in(3, 50)) {
    for (CheckId id : theorem_ids()) {
      if (!verify::applicable(id, Param{static_cast<std::int64_t>(p), 0})) continue;
      CheckResult r = verify::run_prime_check(id, p);
      REQUIRE(r.status == Status::Pass);
      REQUIRE(as_u64(r.lhs) == exact_theorem_lhs(id, p));
    }
  }
}

TEST_CASE("remark sums equal their exact integer oracles for p <= 50") {
  for (std::uint64_t p : modmath::primes_in(3, 50)) {
    if (p == 5) continue;
    for (CheckId id : {CheckId::REM1, CheckId::REM2}) {
      BigInt acc = 0;
      for (std::uint64_t k = 0; k < p; ++k) {
        if (k == 0) continue;  // binom(0,1) = 0
        std::uint64_t fi = id == CheckId::REM1 ? 2 * k : 2 * k + 1;
        BigInt b = binom::binom_exact(2 * k, k) * BigInt(k);
        mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
        acc += sequences::seq_u_exact(sequences::kFibonacci, fi) * b;
      }
      CheckResult r = verify::run_prime_check(id, p);
      REQUIRE(r.status == Status::Pass);
      REQUIRE(as_u64(r.lhs) == mpz_fdiv_ui(acc.get_mpz_t(), p));
    }
  }
}

TEST_CASE("SKIP happens exactly on hypothesis-excluded parameters over [3,1000]") {
  std::vector<CheckId> prime_ids;
  for (CheckId id : verify::all_check_ids()) {
    if (verify::param_kind(id) == verify::ParamKind::Prime) prime_ids.push_back(id);
  }
  for (std::uint64_t p : modmath::primes_in(3, 1000)) {
    auto results = verify::run_prime_checks(prime_ids, p);
    for (const auto& r : results) {
      bool should_run = verify::applicable(r.id, r.param);
      REQUIRE((r.status == Status::Skip) == !should_run);
      if (should_run) REQUIRE(r.status == Status::Pass);
    }
  }
}

TEST_CASE("mutation sanity: LHS+1 flips PASS to FAIL at the smallest parameter") {
  CheckOptions perturb{true};
  const std::map<CheckId, Param> smallest{
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
  REQUIRE(smallest.size() == static_cast<std::size_t>(verify::kNumCheckIds));
  for (const auto& [id, param] : smallest) {
    CheckResult clean = verify::run_check(id, param);
    REQUIRE(clean.status == Status::Pass);
    CheckResult mutated = verify::run_check(id, param, perturb);
    REQUIRE(mutated.status == Status::Fail);
  }
}

TEST_CASE("sweep is deterministic across worker counts") {
  std::vector<CheckId> ids{CheckId::T11a, CheckId::T13d, CheckId::REM2,
                           CheckId::L25, CheckId::C44, CheckId::C41,
                           CheckId::L22};
  auto r1 = verify::sweep(ids, 3, 120, 1);
  auto r8 = verify::sweep(ids, 3, 120, 8);
  for (auto fmt : {report::Format::Text, report::Format::Json, report::Format::Csv}) {
    REQUIRE(report::emit(r1, fmt) == report::emit(r8, fmt));
  }
  CHECK(r1.fail == 0);
  CHECK(r1.pass > 0);
}

TEST_CASE("sweep rejects pair-parameter checks and bad ranges") {
  CHECK_THROWS_AS(verify::sweep({CheckId::C42}, 1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify::sweep({CheckId::C41S}, 1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify::sweep({}, 1, 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify::sweep({CheckId::T11a}, 10, 3, 1), std::invalid_argument);
  CHECK_THROWS_AS(verify::sweep({CheckId::T11a}, 3, 10, 0), std::invalid_argument);
}

TEST_CASE("sweep orders failures first, then by parameter") {
  // No true failures exist, so check ordering on a clean run instead:
  auto r = verify::sweep({CheckId::T11a, CheckId::T11b}, 3, 60, 4);
  REQUIRE(r.results.size() >= 2);
  for (std::size_t i = 1; i < r.results.size(); ++i) {
    const auto& a = r.results[i - 1];
    const auto& b = r.results[i];
    bool fa = a.status == Status::Fail, fb = b.status == Status::Fail;
    REQUIRE(fa >= fb);  // fails lead
    if (fa == fb) {
      REQUIRE(a.param <= b.param);
      if (a.param == b.param) REQUIRE(static_cast<int>(a.id) < static_cast<int>(b.id));
    }
  }
  CHECK(r.pass + r.fail + r.skip == r.results.size());
}

TEST_CASE("stability checks validate their hypotheses") {
  CHECK_THROWS_AS(verify::run_conj41_stability(1, 2), std::invalid_argument);
  CHECK_THROWS_AS(verify::run_conj41_stability(1, 0), std::invalid_argument);
  CHECK(verify::run_conj43_stability(1, 2).status == Status::Pass);  // a >= b-1
  CHECK_THROWS_AS(verify::run_conj43_stability(1, 3), std::invalid_argument);
  CHECK_THROWS_AS(verify::run_conj41(0), std::invalid_argument);
  CHECK_THROWS_AS(verify::run_prime_check(CheckId::T11a, 9), std::invalid_argument);
  CHECK_THROWS_AS(verify::run_prime_check(CheckId::C41, 7), std::invalid_argument);
}

TEST_CASE("quotient checks never hit the noncoprime-denominator branch, n <= 400") {
  for (std::uint64_t n = 1; n <= 400; ++n) {
    CheckResult a = verify::run_conj41(n);
    REQUIRE(a.status == Status::Pass);
    CheckResult b = verify::run_conj43(n);
    REQUIRE(b.status == Status::Pass);
  }
}

TEST_CASE("check id registry") {
  CHECK(verify::to_string(CheckId::T13b) == "T13b");
  CHECK(verify::check_id_from_string("t13b") == CheckId::T13b);
  CHECK(verify::check_id_from_string("REM1") == CheckId::REM1);
  CHECK_FALSE(verify::check_id_from_string("T99x").has_value());
  CHECK(verify::family_of(CheckId::T12c) == "thm1.2");
  CHECK(verify::family_of(CheckId::C43S) == "conj4.3s");
  CHECK(verify::param_kind(CheckId::C42) == verify::ParamKind::PairAM);
  CHECK(verify::param_kind(CheckId::L22) == verify::ParamKind::Index);
  CHECK(verify::all_check_ids().size() == static_cast<std::size_t>(verify::kNumCheckIds));
  for (CheckId id : verify::all_check_ids()) {
    CHECK_FALSE(verify::describe(id).empty());
    CHECK(verify::check_id_from_string(verify::to_string(id)) == id);
  }
  CHECK(verify::param_to_string(CheckId::C42, {1, 3}) == "a=1,m=3");
  CHECK(verify::param_to_string(CheckId::C41S, {2, 1}) == "a=2,b=1");
  CHECK(verify::param_to_string(CheckId::T11a, {7, 0}) == "7");
}

TEST_CASE("lemma sweeps pass over their acceptance ranges (small slice)") {
  auto r = verify::sweep({CheckId::L21, CheckId::L25, CheckId::L27}, 2, 120, 2);
  CHECK(r.fail == 0);
  auto l22 = verify::sweep({CheckId::L22}, 0, 60, 2);
  CHECK(l22.fail == 0);
  CHECK(l22.skip == 0);
}
