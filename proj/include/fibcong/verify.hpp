#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "fibcong/modmath.hpp"

namespace fibcong::verify {

using BigInt = mpz_class;

/// One id per verified congruence.  T* are the sixteen theorem-family
/// congruences mod p^2, REM* the two supplementary sums mod p, L* the
/// lemma identities, C4* the conjecture checks.
enum class CheckId {
  T11a, T11b, T11c, T11d,
  T12a, T12b, T12c, T12d,
  T13a, T13b, T13c, T13d,
  T14a, T14b, T14c, T14d,
  REM1, REM2,
  L21, L22, L25, L27,
  C41, C41S, C42, C43, C43S, C44, C45, C46,
};

inline constexpr int kNumCheckIds = 30;

/// All ids in declaration order.
const std::vector<CheckId>& all_check_ids();

enum class Status { Pass, Fail, Skip };

std::string_view to_string(CheckId id);
std::string_view to_string(Status s);
std::optional<CheckId> check_id_from_string(std::string_view name);

/// Family key used by the CLI grammar: "thm1.1".."thm1.4", "rem",
/// "lem2.1".."lem2.7", "conj4.1".."conj4.6" (+"conj4.1s"/"conj4.3s").
std::string_view family_of(CheckId id);

/// The verified statement, spelled out.
std::string_view describe(CheckId id);

enum class ParamKind {
  Prime,   // one prime p
  Index,   // one integer n
  PairAM,  // (a, m) - C42
  PairAB,  // (a, b) - stability checks
};

ParamKind param_kind(CheckId id);

struct Param {
  std::int64_t first = 0;
  std::int64_t second = 0;

  friend bool operator==(const Param&, const Param&) = default;
  friend auto operator<=>(const Param&, const Param&) = default;
};

std::string param_to_string(CheckId id, Param param);

/// Whether the check's hypothesis admits the parameter (prime exclusions,
/// residue classes).  A false answer makes the check SKIP, never FAIL.
bool applicable(CheckId id, Param param);

struct CheckOptions {
  /// Harness self-test hook: add 1 to the (first) LHS before comparing,
  /// which must flip PASS to FAIL.
  bool perturb_lhs = false;
};

struct CheckResult {
  CheckId id;
  Param param;
  Status status;
  std::string lhs;      // canonical residue / digest, decimal text
  std::string rhs;
  std::string modulus;  // decimal modulus, or a polynomial description

  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

/// A reduced fraction with positive denominator.
class ExactRatio {
 public:
  ExactRatio(BigInt num, BigInt den);

  BigInt num() const { return v_.get_num(); }
  BigInt den() const { return v_.get_den(); }

  /// num * den^{-1} mod m, when gcd(den, m) = 1.
  std::optional<modmath::Residue> residue_mod(modmath::Modulus mod) const;

 private:
  mpq_class v_;
};

/// Central dispatcher; validates the parameter kind.
CheckResult run_check(CheckId id, Param param, const CheckOptions& opts = {});

// Named entry points.
CheckResult run_prime_check(CheckId id, std::uint64_t p, const CheckOptions& opts = {});
/// Several prime-parameter checks at one prime, sharing the binomial and
/// sequence tables.  Results come back in the order of `ids`.
std::vector<CheckResult> run_prime_checks(const std::vector<CheckId>& ids,
                                          std::uint64_t p,
                                          const CheckOptions& opts = {});
CheckResult run_lemma_check(CheckId id, std::uint64_t p, const CheckOptions& opts = {});
CheckResult run_l22(std::uint64_t n, const CheckOptions& opts = {});
CheckResult run_conj41(std::uint64_t n, const CheckOptions& opts = {});
CheckResult run_conj41_stability(unsigned a, unsigned b, const CheckOptions& opts = {});
CheckResult run_conj42(unsigned a, std::uint64_t m, const CheckOptions& opts = {});
CheckResult run_conj43(std::uint64_t n, const CheckOptions& opts = {});
CheckResult run_conj43_stability(unsigned a, unsigned b, const CheckOptions& opts = {});
CheckResult run_conj44(std::uint64_t p, const CheckOptions& opts = {});
CheckResult run_conj45(std::uint64_t p, const CheckOptions& opts = {});
CheckResult run_conj46(std::uint64_t p, const CheckOptions& opts = {});

struct SweepReport {
  std::vector<CheckId> ids;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  /// FAILs first (by parameter, then id), then the rest in the same order.
  std::vector<CheckResult> results;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
  /// Not serialized: reports stay byte-identical across worker counts.
  double wall_seconds = 0;
};

/// Run every requested check over [lo, hi]: prime-parameter checks at each
/// prime, index checks at each admissible integer.  Pair-parameter checks
/// (C41S, C43S, C42) take explicit parameters and are rejected here.
/// Deterministic output for any worker count.
SweepReport sweep(const std::vector<CheckId>& ids, std::int64_t lo,
                  std::int64_t hi, unsigned workers);

}  // namespace fibcong::verify
