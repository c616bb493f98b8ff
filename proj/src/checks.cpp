#include <array>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>

#include "fibcong/binom.hpp"
#include "fibcong/modmath.hpp"
#include "fibcong/qpoly.hpp"
#include "fibcong/quadring.hpp"
#include "fibcong/sequences.hpp"
#include "fibcong/verify.hpp"

namespace fibcong::verify {

using binom::PAdicScaled;
using modmath::Modulus;
using modmath::Residue;
using modmath::jacobi;
using modmath::sign_pow_floor;
using sequences::SeqParams;
using sequences::SeqTable;

namespace {

struct IdInfo {
  CheckId id;
  std::string_view name;
  std::string_view family;
  ParamKind kind;
  std::string_view statement;
};

constexpr std::array<IdInfo, kNumCheckIds> kIdTable{{
    {CheckId::T11a, "T11a", "thm1.1", ParamKind::Prime,
     "sum_{k<p} F(2k) C(2k,k) == (-1)^floor(p/5) (1-(p/5))  (mod p^2)"},
    {CheckId::T11b, "T11b", "thm1.1", ParamKind::Prime,
     "sum_{k<p} F(2k+1) C(2k,k) == (-1)^floor(p/5) (p/5)  (mod p^2)"},
    {CheckId::T11c, "T11c", "thm1.1", ParamKind::Prime,
     "sum_{k<=(p-1)/2} F(2k)/16^k C(2k,k) == (-1)^((p-1)/2+floor(p/5)) (1-(p/5))/2  (mod p^2)"},
    {CheckId::T11d, "T11d", "thm1.1", ParamKind::Prime,
     "sum_{k<=(p-1)/2} F(2k+1)/16^k C(2k,k) == (-1)^((p-1)/2+floor(p/5))  (mod p^2)"},
    {CheckId::T12a, "T12a", "thm1.2", ParamKind::Prime,
     "sum_{k<p} u_k(5,5)/5^k C(2k,k) == (-1)^floor(p/5) ((p/5)-1)  (mod p^2)"},
    {CheckId::T12b, "T12b", "thm1.2", ParamKind::Prime,
     "sum_{k<p} u_{k+1}(5,5)/5^k C(2k,k) == (-1)^floor(p/5) (2(p/5)-1)  (mod p^2)"},
    {CheckId::T12c, "T12c", "thm1.2", ParamKind::Prime,
     "sum_{k<=(p-1)/2} u_k(5,5)/16^k C(2k,k) == ((p/5)-1)/2  (mod p^2)"},
    {CheckId::T12d, "T12d", "thm1.2", ParamKind::Prime,
     "sum_{k<=(p-1)/2} v_k(5,5)/16^k C(2k,k) == (5(p/5)-1)/2  (mod p^2)"},
    {CheckId::T13a, "T13a", "thm1.3", ParamKind::Prime,
     "sum_{k<p} S_k C(2k,k) == 2((p/3)-(-1/p))  (mod p^2)"},
    {CheckId::T13b, "T13b", "thm1.3", ParamKind::Prime,
     "sum_{k<p} S_{k+1} C(2k,k) == (p/3)  (mod p^2)"},
    {CheckId::T13c, "T13c", "thm1.3", ParamKind::Prime,
     "sum_{k<=(p-1)/2} S_k/16^k C(2k,k) == ((6/p)-(2/p))/2  (mod p^2)"},
    {CheckId::T13d, "T13d", "thm1.3", ParamKind::Prime,
     "sum_{k<=(p-1)/2} T_k/16^k C(2k,k) == 3(6/p)-(2/p)  (mod p^2)"},
    {CheckId::T14a, "T14a", "thm1.4", ParamKind::Prime,
     "sum_{k<p} u_k(4,2)/2^k C(2k,k) == (-1/p)-(-2/p)  (mod p^2)"},
    {CheckId::T14b, "T14b", "thm1.4", ParamKind::Prime,
     "sum_{k<p} u_{k+1}(4,2)/2^k C(2k,k) == (-1/p)  (mod p^2)"},
    {CheckId::T14c, "T14c", "thm1.4", ParamKind::Prime,
     "sum_{k<=(p-1)/2} u_k(4,2)/16^k C(2k,k) == (-1)^floor((p-4)/8) (1-(2/p))/2  (mod p^2)"},
    {CheckId::T14d, "T14d", "thm1.4", ParamKind::Prime,
     "sum_{k<=(p-1)/2} v_k(4,2)/16^k C(2k,k) == 2 (-1)^floor(p/8) (-1/p)  (mod p^2)"},
    {CheckId::REM1, "REM1", "rem", ParamKind::Prime,
     "sum_{k<p} F(2k) C(2k,k+1) == {0,1,-2,-3} by p mod 5  (mod p)"},
    {CheckId::REM2, "REM2", "rem", ParamKind::Prime,
     "sum_{k<p} F(2k+1) C(2k,k+1) == {0,1,1,2} by p mod 5  (mod p)"},
    {CheckId::L21, "L21", "lem2.1", ParamKind::Prime,
     "sum_{k<p} C(2k,k) alpha^(p-1-k) == 2 u_p(alpha,alpha) - u_p(alpha-2,1)  (mod p^2)"},
    {CheckId::L22, "L22", "lem2.2", ParamKind::Index,
     "u_{n+1}(x,1) equals the degree-n Chebyshev-U coefficient form at x/2"},
    {CheckId::L25, "L25", "lem2.5", ParamKind::Prime,
     "2F_{p-1}-F_{2p-2}==0 and 2L_{p-1}-L_{2p-2}==2 (p==+-1 mod 10); "
     "2F_{p-2}+F_{2p-1}==-2 and 2L_{p-2}+L_{2p-1}==4 (p==+-3 mod 10)  (mod p^2)"},
    {CheckId::L27, "L27", "lem2.7", ParamKind::Prime,
     "C(n+k,2k) == C(2k,k)/(-16)^k (mod p^2) for all k<=n, n=(p-1)/2"},
    {CheckId::C41, "C41", "conj4.1", ParamKind::Index,
     "(-1)^(floor(n/5)-1) sum_{k<n} F(2k+1) C(2k,k) / ((2n+1) n^2 C(2n,n)) "
     "== {6,4,1,9,1} by n mod 5  (mod 25)"},
    {CheckId::C41S, "C41S", "conj4.1s", ParamKind::PairAB,
     "sum_{k<5^a} F(2k+1) C(2k,k) / 5^(2a) mod 5^b is the same at a and a+1"},
    {CheckId::C42, "C42", "conj4.2", ParamKind::PairAM,
     "sum_{k<5^a m} q^(-2k(k+1)) [2k,k]_q F_{2k+1}(q) == 0  (mod [5^a]_q^2)"},
    {CheckId::C43, "C43", "conj4.3", ParamKind::Index,
     "(-1)^(n-1) sum_{k<n} S_{k+1} C(2k,k) / (n^2 (n+1) C(2n,n)) "
     "== 1 (n==0,2), 4 (n==5,6), -2 otherwise, by n mod 9  (mod 9)"},
    {CheckId::C43S, "C43S", "conj4.3s", ParamKind::PairAB,
     "sum_{k<3^a} S_{k+1} C(2k,k) / 3^(2a) mod 3^b is the same at a and a+1"},
    {CheckId::C44, "C44", "conj4.4", ParamKind::Prime,
     "sum_{k<p} C(p-1,k) C(2k,k) ((-1)^k - (-3)^-k) == (p/3)(3^(p-1)-1)  (mod p^3)"},
    {CheckId::C45, "C45", "conj4.5", ParamKind::Prime,
     "sum_{k<p} C(p-1,k) C(2k,k) (-1)^k S_k == (-1)^((p-1)/2) S_{p-1}  (mod p^3), p==+-1 mod 12"},
    {CheckId::C46, "C46", "conj4.6", ParamKind::Prime,
     "sum_{k<p} C(p-1,k) C(2k,k) u_k(4,2)/(-2)^k == (-1)^((p-1)/2) u_{p-1}(4,2)  (mod p^3), p==+-1 mod 8"},
}};

const IdInfo& info(CheckId id) { return kIdTable[static_cast<std::size_t>(id)]; }

std::string residue_str(const Residue& r) { return std::to_string(r.value()); }

CheckResult skip_result(CheckId id, Param param) {
  return CheckResult{id, param, Status::Skip, "-", "-", "-"};
}

CheckResult compare_residues(CheckId id, Param param, Residue lhs, Residue rhs,
                             const CheckOptions& opts) {
  if (opts.perturb_lhs) lhs = lhs + Residue(1, lhs.modulus());
  Status st = lhs == rhs ? Status::Pass : Status::Fail;
  return CheckResult{id, param, st, residue_str(lhs), residue_str(rhs),
                     std::to_string(lhs.modulus().m)};
}

// One sub-identity of an aggregated check.
struct SubCheck {
  std::string label;
  std::string lhs;
  std::string rhs;
  bool pass;
};

CheckResult combine_subchecks(CheckId id, Param param,
                              const std::vector<SubCheck>& parts,
                              std::uint64_t modulus) {
  const SubCheck* shown = &parts.front();
  bool all_pass = true;
  for (const auto& part : parts) {
    if (!part.pass) {
      if (all_pass) shown = &part;
      all_pass = false;
    }
  }
  auto tag = [&](const std::string& side) {
    return shown->label.empty() ? side : shown->label + ": " + side;
  };
  return CheckResult{id,
                     param,
                     all_pass ? Status::Pass : Status::Fail,
                     tag(shown->lhs),
                     tag(shown->rhs),
                     std::to_string(modulus)};
}

// ---- per-prime table cache ------------------------------------------------

struct PrimeCtx {
  explicit PrimeCtx(std::uint64_t p) : p(p) {}

  std::uint64_t p;

  Modulus mod(unsigned a) {
    auto it = mods_.find(a);
    if (it == mods_.end()) it = mods_.emplace(a, Modulus::make(p, a)).first;
    return it->second;
  }

  // binom(2k,k) mod p^a for k = 0..p-1
  const std::vector<PAdicScaled>& central(unsigned a) {
    auto it = centrals_.find(a);
    if (it == centrals_.end()) {
      it = centrals_.emplace(a, binom::central_binomials(mod(a), p - 1)).first;
    }
    return it->second;
  }

  // u_k, v_k mod p^a for k = 0..2p+1
  const SeqTable& seq(SeqParams s, unsigned a) {
    auto key = std::make_tuple(s.A, s.B, a);
    auto it = seqs_.find(key);
    if (it == seqs_.end()) {
      it = seqs_.emplace(key, sequences::seq_table_mod(s, 2 * p + 2, mod(a))).first;
    }
    return it->second;
  }

 private:
  std::map<unsigned, Modulus> mods_;
  std::map<unsigned, std::vector<PAdicScaled>> centrals_;
  std::map<std::tuple<std::int64_t, std::int64_t, unsigned>, SeqTable> seqs_;
};

// sum_{k=0}^{terms-1} weight(k) * binom(2k,k) * ratio^k  (mod central's modulus)
template <typename WeightFn>
Residue weighted_central_sum(const std::vector<PAdicScaled>& central,
                             std::size_t terms, WeightFn weight,
                             std::optional<Residue> ratio) {
  Modulus mod = central.front().unit.modulus();
  Residue acc(0, mod);
  Residue power(1, mod);
  for (std::size_t k = 0; k < terms; ++k) {
    Residue term = weight(k) * binom::residue_of(central[k]);
    if (ratio) {
      term = term * power;
      power = power * *ratio;
    }
    acc = acc + term;
  }
  return acc;
}

// ---- theorem congruences mod p^2 -------------------------------------------

CheckResult theorem_check(CheckId id, PrimeCtx& ctx, const CheckOptions& opts) {
  const std::uint64_t p = ctx.p;
  const Param param{static_cast<std::int64_t>(p), 0};
  const Modulus m2 = ctx.mod(2);
  const auto& cb = ctx.central(2);
  const std::size_t full = p;
  const std::size_t half = (p - 1) / 2 + 1;
  const auto sp = static_cast<std::int64_t>(p);

  auto from_int = [&](std::int64_t v) { return Residue::from_int(v, m2); };
  auto inv = [&](std::int64_t v) { return from_int(v).inverse(); };

  Residue lhs(0, m2), rhs(0, m2);
  switch (id) {
    case CheckId::T11a: {
      const auto& fib = ctx.seq(sequences::kFibonacci, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return fib.u[2 * k]; }, {});
      rhs = from_int(sign_pow_floor(sp, 5) * (1 - jacobi(sp, 5)));
      break;
    }
    case CheckId::T11b: {
      const auto& fib = ctx.seq(sequences::kFibonacci, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return fib.u[2 * k + 1]; }, {});
      rhs = from_int(sign_pow_floor(sp, 5) * jacobi(sp, 5));
      break;
    }
    case CheckId::T11c: {
      const auto& fib = ctx.seq(sequences::kFibonacci, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return fib.u[2 * k]; }, inv(16));
      int sign = ((p - 1) / 2 + p / 5) % 2 == 0 ? 1 : -1;
      rhs = from_int(sign * (1 - jacobi(sp, 5)) / 2);
      break;
    }
    case CheckId::T11d: {
      const auto& fib = ctx.seq(sequences::kFibonacci, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return fib.u[2 * k + 1]; }, inv(16));
      rhs = from_int(((p - 1) / 2 + p / 5) % 2 == 0 ? 1 : -1);
      break;
    }
    case CheckId::T12a: {
      const auto& u55 = ctx.seq(sequences::kU55, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return u55.u[k]; }, inv(5));
      rhs = from_int(sign_pow_floor(sp, 5) * (jacobi(sp, 5) - 1));
      break;
    }
    case CheckId::T12b: {
      const auto& u55 = ctx.seq(sequences::kU55, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return u55.u[k + 1]; }, inv(5));
      rhs = from_int(sign_pow_floor(sp, 5) * (2 * jacobi(sp, 5) - 1));
      break;
    }
    case CheckId::T12c: {
      const auto& u55 = ctx.seq(sequences::kU55, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return u55.u[k]; }, inv(16));
      rhs = from_int(jacobi(sp, 5) - 1) * inv(2);
      break;
    }
    case CheckId::T12d: {
      const auto& u55 = ctx.seq(sequences::kU55, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return u55.v[k]; }, inv(16));
      rhs = from_int(5 * jacobi(sp, 5) - 1) * inv(2);
      break;
    }
    case CheckId::T13a: {
      const auto& st = ctx.seq(sequences::kST, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return st.u[k]; }, {});
      rhs = from_int(2 * (jacobi(sp, 3) - jacobi(-1, p)));
      break;
    }
    case CheckId::T13b: {
      const auto& st = ctx.seq(sequences::kST, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return st.u[k + 1]; }, {});
      rhs = from_int(jacobi(sp, 3));
      break;
    }
    case CheckId::T13c: {
      const auto& st = ctx.seq(sequences::kST, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return st.u[k]; }, inv(16));
      rhs = from_int(jacobi(6, p) - jacobi(2, p)) * inv(2);
      break;
    }
    case CheckId::T13d: {
      const auto& st = ctx.seq(sequences::kST, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return st.v[k]; }, inv(16));
      rhs = from_int(3 * jacobi(6, p) - jacobi(2, p));
      break;
    }
    case CheckId::T14a: {
      const auto& u42 = ctx.seq(sequences::kU42, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return u42.u[k]; }, inv(2));
      rhs = from_int(jacobi(-1, p) - jacobi(-2, p));
      break;
    }
    case CheckId::T14b: {
      const auto& u42 = ctx.seq(sequences::kU42, 2);
      lhs = weighted_central_sum(cb, full, [&](std::size_t k) { return u42.u[k + 1]; }, inv(2));
      rhs = from_int(jacobi(-1, p));
      break;
    }
    case CheckId::T14c: {
      const auto& u42 = ctx.seq(sequences::kU42, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return u42.u[k]; }, inv(16));
      rhs = from_int(sign_pow_floor(sp - 4, 8) * (1 - jacobi(2, p))) * inv(2);
      break;
    }
    case CheckId::T14d: {
      const auto& u42 = ctx.seq(sequences::kU42, 2);
      lhs = weighted_central_sum(cb, half, [&](std::size_t k) { return u42.v[k]; }, inv(16));
      rhs = from_int(2 * sign_pow_floor(sp, 8) * jacobi(-1, p));
      break;
    }
    default:
      throw std::logic_error("theorem_check: not a theorem id");
  }
  return compare_residues(id, param, lhs, rhs, opts);
}

// ---- Remark sums mod p ------------------------------------------------------

CheckResult remark_check(CheckId id, PrimeCtx& ctx, const CheckOptions& opts) {
  const std::uint64_t p = ctx.p;
  const Param param{static_cast<std::int64_t>(p), 0};
  const Modulus m1 = ctx.mod(1);
  const auto& cb = ctx.central(1);
  const auto& fib = ctx.seq(sequences::kFibonacci, 1);

  // binom(2k,k+1) = binom(2k,k) * k/(k+1); the k = 0 term is binom(0,1) = 0.
  Residue acc(0, m1);
  for (std::size_t k = 1; k < p; ++k) {
    Residue b = binom::residue_of(binom::padic_mul_ratio(cb[k], k, k + 1));
    Residue w = id == CheckId::REM1 ? fib.u[2 * k] : fib.u[2 * k + 1];
    acc = acc + w * b;
  }

  std::int64_t expected = 0;
  switch (p % 5) {
    case 1: expected = 0; break;
    case 4: expected = 1; break;                            // p == -1 (mod 5)
    case 3: expected = id == CheckId::REM1 ? -2 : 1; break; // p == -2 (mod 5)
    case 2: expected = id == CheckId::REM1 ? -3 : 2; break;
    default: throw std::logic_error("remark_check: p divisible by 5");
  }
  return compare_residues(id, param, acc, Residue::from_int(expected, m1), opts);
}

// ---- lemma checks -----------------------------------------------------------

CheckResult lemma21(PrimeCtx& ctx, const CheckOptions& opts) {
  const std::uint64_t p = ctx.p;
  const Param param{static_cast<std::int64_t>(p), 0};
  const Modulus m2 = ctx.mod(2);
  const auto& cb = ctx.central(2);
  quadring::QuadRing ring = quadring::golden_ring(m2);

  std::vector<std::pair<std::string, quadring::QuadElement>> alphas;
  for (int v = 0; v <= 10; ++v) {
    alphas.emplace_back("alpha=" + std::to_string(v),
                        quadring::QuadElement::from_int(v, ring));
  }
  auto t = quadring::QuadElement::gen(ring);
  auto one = quadring::QuadElement::from_int(1, ring);
  alphas.emplace_back("alpha=t", t);
  alphas.emplace_back("alpha=1-t", one - t);
  alphas.emplace_back("alpha=2t-1", t + t - one);

  std::vector<SubCheck> parts;
  bool first = true;
  for (const auto& [label, alpha] : alphas) {
    auto [lhs, rhs] = quadring::lemma21_sides(alpha, p, cb);
    if (first && opts.perturb_lhs) lhs = lhs + one;
    first = false;
    parts.push_back(SubCheck{label, lhs.to_string(), rhs.to_string(), lhs == rhs});
  }
  return combine_subchecks(CheckId::L21, param, parts, m2.m);
}

CheckResult lemma25(PrimeCtx& ctx, const CheckOptions& opts) {
  const std::uint64_t p = ctx.p;
  const Param param{static_cast<std::int64_t>(p), 0};
  const Modulus m2 = ctx.mod(2);
  const auto& fib = ctx.seq(sequences::kFibonacci, 2);
  auto from_int = [&](std::int64_t v) { return Residue::from_int(v, m2); };
  Residue two = from_int(2);

  std::vector<SubCheck> parts;
  auto add = [&](std::string label, Residue lhs, Residue rhs) {
    if (parts.empty() && opts.perturb_lhs) lhs = lhs + Residue(1, m2);
    parts.push_back(SubCheck{std::move(label), residue_str(lhs), residue_str(rhs), lhs == rhs});
  };

  std::uint64_t r = p % 10;
  if (r == 1 || r == 9) {
    add("2F(p-1)-F(2p-2)", two * fib.u[p - 1] - fib.u[2 * p - 2], from_int(0));
    add("2L(p-1)-L(2p-2)", two * fib.v[p - 1] - fib.v[2 * p - 2], from_int(2));
  } else {
    add("2F(p-2)+F(2p-1)", two * fib.u[p - 2] + fib.u[2 * p - 1], from_int(-2));
    add("2L(p-2)+L(2p-1)", two * fib.v[p - 2] + fib.v[2 * p - 1], from_int(4));
  }
  return combine_subchecks(CheckId::L25, param, parts, m2.m);
}

CheckResult lemma27(PrimeCtx& ctx, const CheckOptions& opts) {
  const std::uint64_t p = ctx.p;
  const Param param{static_cast<std::int64_t>(p), 0};
  const Modulus m2 = ctx.mod(2);
  const auto& cb = ctx.central(2);
  const std::uint64_t n = (p - 1) / 2;

  Residue inv_neg16 = -Residue(16, m2).inverse();
  Residue binom_nk(1, m2);  // binom(n+k, 2k), starting at k = 0
  Residue power(1, m2);     // (-16)^{-k}

  std::vector<SubCheck> parts;
  for (std::uint64_t k = 0; k <= n; ++k) {
    Residue lhs = binom_nk;
    if (k == 0 && opts.perturb_lhs) lhs = lhs + Residue(1, m2);
    Residue rhs = binom::residue_of(cb[k]) * power;
    parts.push_back(SubCheck{"k=" + std::to_string(k), residue_str(lhs),
                             residue_str(rhs), lhs == rhs});
    if (k < n) {
      // binom(n+k+1, 2k+2) = binom(n+k, 2k) (n+k+1)(n-k) / ((2k+2)(2k+1))
      Residue num = Residue(n + k + 1, m2) * Residue(n - k, m2);
      Residue den = Residue(2 * k + 2, m2) * Residue(2 * k + 1, m2);
      binom_nk = binom_nk * num * den.inverse();
    }
    power = power * inv_neg16;
  }
  return combine_subchecks(CheckId::L27, param, parts, m2.m);
}

std::vector<BigInt> u_poly_by_recurrence(std::uint64_t n) {
  std::vector<BigInt> prev;          // u_0 = 0
  std::vector<BigInt> cur{BigInt(1)};  // u_1 = 1
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    std::vector<BigInt> next(cur.size() + 1, BigInt(0));
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] = cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    while (!next.empty() && next.back() == 0) next.pop_back();
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::string poly_digest(const std::vector<BigInt>& coeffs) {
  std::ostringstream os;
  os << "deg=" << (static_cast<std::int64_t>(coeffs.size()) - 1) << " [";
  for (std::size_t i = 0; i < coeffs.size() && i < 8; ++i) {
    if (i > 0) os << ",";
    os << coeffs[i].get_str();
  }
  if (coeffs.size() > 8) os << ",...";
  os << "]";
  return os.str();
}

}  // namespace

CheckResult run_l22(std::uint64_t n, const CheckOptions& opts) {
  Param param{static_cast<std::int64_t>(n), 0};
  // u_{n+1}(x,1) from the explicit binomial sum vs the plain recurrence,
  // which is the Chebyshev route U_n(x/2).
  std::vector<BigInt> lhs = sequences::lucas_u_poly(n + 1);
  std::vector<BigInt> rhs = u_poly_by_recurrence(n + 1);
  if (opts.perturb_lhs) {
    if (lhs.empty()) lhs.push_back(BigInt(1));
    else lhs[0] += 1;
  }
  bool pass = lhs == rhs;
  return CheckResult{CheckId::L22, param, pass ? Status::Pass : Status::Fail,
                     poly_digest(lhs), poly_digest(rhs), "Z[x]"};
}

namespace {

CheckResult dispatch_prime_check(CheckId id, PrimeCtx& ctx, const CheckOptions& opts);

// ---- conjecture helpers ------------------------------------------------------

// sum_{k=0}^{count-1} F_{2k+1} binom(2k,k), exactly; also leaves
// binom(2*count, count) in binom_out when requested.
BigInt exact_f_sum(std::uint64_t count, BigInt* binom_out = nullptr) {
  BigInt sum = 0, f_even = 0, f_odd = 1, b = 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    sum += f_odd * b;
    // F_{2k+2}, F_{2k+3}
    f_even += f_odd;
    f_odd += f_even;
    // binom(2k+2, k+1)
    b *= 2 * (2 * k + 1);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
  }
  if (binom_out) *binom_out = b;
  return sum;
}

// sum_{k=0}^{count-1} S_{k+1} binom(2k,k), exactly.
BigInt exact_s_sum(std::uint64_t count, BigInt* binom_out = nullptr) {
  BigInt sum = 0, s_prev = 0, s_cur = 1, b = 1;
  for (std::uint64_t k = 0; k < count; ++k) {
    sum += s_cur * b;
    BigInt s_next = 4 * s_cur - s_prev;
    s_prev = std::move(s_cur);
    s_cur = std::move(s_next);
    b *= 2 * (2 * k + 1);
    mpz_divexact_ui(b.get_mpz_t(), b.get_mpz_t(), k + 1);
  }
  if (binom_out) *binom_out = b;
  return sum;
}

std::uint64_t upow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) r *= base;
  return r;
}

CheckResult stability_check(CheckId id, unsigned a, unsigned b,
                            const CheckOptions& opts) {
  const bool five = id == CheckId::C41S;
  const std::uint64_t base = five ? 5 : 3;
  Param param{static_cast<std::int64_t>(a), static_cast<std::int64_t>(b)};
  Modulus mod = Modulus::make(base, b);

  auto quotient = [&](unsigned aa) -> std::optional<BigInt> {
    BigInt sum = five ? exact_f_sum(upow(5, aa)) : exact_s_sum(upow(3, aa));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), base, 2 * aa);
    if (!mpz_divisible_p(sum.get_mpz_t(), scale.get_mpz_t())) return std::nullopt;
    BigInt q;
    mpz_divexact(q.get_mpz_t(), sum.get_mpz_t(), scale.get_mpz_t());
    return q;
  };

  auto qa = quotient(a);
  auto qa1 = quotient(a + 1);
  std::string mod_str = std::to_string(mod.m);
  if (!qa || !qa1) {
    std::string which = !qa ? std::to_string(a) : std::to_string(a + 1);
    return CheckResult{id, param, Status::Fail,
                       "sum not divisible by " + std::to_string(base) +
                           "^(2a) at a=" + which,
                       "exact divisibility", mod_str};
  }
  Residue lhs(mpz_fdiv_ui(qa->get_mpz_t(), mod.m), mod);
  Residue rhs(mpz_fdiv_ui(qa1->get_mpz_t(), mod.m), mod);
  return compare_residues(id, param, lhs, rhs, opts);
}

CheckResult quotient_table_check(CheckId id, std::uint64_t n,
                                 const CheckOptions& opts) {
  const bool five = id == CheckId::C41;
  if (n < 1) throw std::invalid_argument("conjecture quotient check: n >= 1 required");
  Param param{static_cast<std::int64_t>(n), 0};
  Modulus mod = Modulus::make(five ? 5 : 3, 2);  // 25 or 9

  BigInt binom2n;
  BigInt sum = five ? exact_f_sum(n, &binom2n) : exact_s_sum(n, &binom2n);
  BigInt den = BigInt(n) * n * binom2n;
  den *= five ? 2 * n + 1 : n + 1;
  // (-1)^(floor(n/5)-1) resp. (-1)^(n-1); floor(n/5)-1 may be negative.
  bool negate = five ? (static_cast<std::int64_t>(n / 5) - 1) % 2 != 0
                     : (n - 1) % 2 != 0;
  if (negate) sum = -sum;

  ExactRatio ratio(sum, den);
  auto lhs = ratio.residue_mod(mod);
  std::int64_t expected;
  if (five) {
    constexpr std::array<std::int64_t, 5> rows{6, 4, 1, 9, 1};
    expected = rows[n % 5];
  } else {
    std::uint64_t r = n % 9;
    expected = (r == 0 || r == 2) ? 1 : (r == 5 || r == 6) ? 4 : -2;
  }
  Residue rhs = Residue::from_int(expected, mod);
  if (!lhs) {
    // The reduced denominator shares a factor with the modulus base; a
    // reportable finding about the conjecture's phrasing, never observed.
    return CheckResult{id, param, Status::Fail,
                       "denominator not coprime to " + std::to_string(mod.p),
                       residue_str(rhs), std::to_string(mod.m)};
  }
  return compare_residues(id, param, *lhs, rhs, opts);
}

// binom(p-1, k) mod p^a for k = 0..p-1 by the ratio recurrence
// binom(p-1,k) = binom(p-1,k-1) (p-k)/k; every factor is a unit mod p^a.
std::vector<Residue> top_row_binomials(std::uint64_t p, Modulus mod) {
  std::vector<Residue> row;
  row.reserve(p);
  row.push_back(Residue(1, mod));
  for (std::uint64_t k = 1; k < p; ++k) {
    row.push_back(row.back() * Residue(p - k, mod) * Residue(k, mod).inverse());
  }
  return row;
}

CheckResult conj_mod_p3(CheckId id, PrimeCtx& ctx, const CheckOptions& opts) {
  const std::uint64_t p = ctx.p;
  const Param param{static_cast<std::int64_t>(p), 0};
  const Modulus m3 = ctx.mod(3);
  const auto& cb = ctx.central(3);
  std::vector<Residue> row = top_row_binomials(p, m3);
  auto from_int = [&](std::int64_t v) { return Residue::from_int(v, m3); };

  Residue lhs(0, m3), rhs(0, m3);
  switch (id) {
    case CheckId::C44: {
      Residue inv_neg3 = from_int(-3).inverse();
      Residue power(1, m3);
      for (std::uint64_t k = 0; k < p; ++k) {
        Residue w = from_int(k % 2 == 0 ? 1 : -1) - power;
        lhs = lhs + row[k] * binom::residue_of(cb[k]) * w;
        power = power * inv_neg3;
      }
      rhs = from_int(jacobi(static_cast<std::int64_t>(p), 3)) *
            (Residue(3, m3).pow(p - 1) - Residue(1, m3));
      break;
    }
    case CheckId::C45: {
      const auto& st = ctx.seq(sequences::kST, 3);
      for (std::uint64_t k = 0; k < p; ++k) {
        Residue term = row[k] * binom::residue_of(cb[k]) * st.u[k];
        lhs = k % 2 == 0 ? lhs + term : lhs - term;
      }
      rhs = from_int((p - 1) / 2 % 2 == 0 ? 1 : -1) * st.u[p - 1];
      break;
    }
    case CheckId::C46: {
      const auto& u42 = ctx.seq(sequences::kU42, 3);
      Residue inv_neg2 = from_int(-2).inverse();
      Residue power(1, m3);
      for (std::uint64_t k = 0; k < p; ++k) {
        lhs = lhs + row[k] * binom::residue_of(cb[k]) * u42.u[k] * power;
        power = power * inv_neg2;
      }
      rhs = from_int((p - 1) / 2 % 2 == 0 ? 1 : -1) * u42.u[p - 1];
      break;
    }
    default:
      throw std::logic_error("conj_mod_p3: bad id");
  }
  return compare_residues(id, param, lhs, rhs, opts);
}

CheckResult dispatch_prime_check(CheckId id, PrimeCtx& ctx, const CheckOptions& opts) {
  Param param{static_cast<std::int64_t>(ctx.p), 0};
  if (!applicable(id, param)) return skip_result(id, param);
  switch (id) {
    case CheckId::REM1:
    case CheckId::REM2:
      return remark_check(id, ctx, opts);
    case CheckId::L21:
      return lemma21(ctx, opts);
    case CheckId::L25:
      return lemma25(ctx, opts);
    case CheckId::L27:
      return lemma27(ctx, opts);
    case CheckId::C44:
    case CheckId::C45:
    case CheckId::C46:
      return conj_mod_p3(id, ctx, opts);
    default:
      return theorem_check(id, ctx, opts);
  }
}

}  // namespace

// ---- public surface ----------------------------------------------------------

const std::vector<CheckId>& all_check_ids() {
  static const std::vector<CheckId> ids = [] {
    std::vector<CheckId> v;
    for (const auto& e : kIdTable) v.push_back(e.id);
    return v;
  }();
  return ids;
}

std::string_view to_string(CheckId id) { return info(id).name; }

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Skip: return "SKIP";
  }
  return "?";
}

std::optional<CheckId> check_id_from_string(std::string_view name) {
  auto eq_icase = [](std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::tolower(static_cast<unsigned char>(a[i])) !=
          std::tolower(static_cast<unsigned char>(b[i]))) return false;
    }
    return true;
  };
  for (const auto& e : kIdTable) {
    if (eq_icase(e.name, name)) return e.id;
  }
  return std::nullopt;
}

std::string_view family_of(CheckId id) { return info(id).family; }

std::string_view describe(CheckId id) { return info(id).statement; }

ParamKind param_kind(CheckId id) { return info(id).kind; }

std::string param_to_string(CheckId id, Param param) {
  switch (param_kind(id)) {
    case ParamKind::Prime:
    case ParamKind::Index:
      return std::to_string(param.first);
    case ParamKind::PairAM:
      return "a=" + std::to_string(param.first) + ",m=" + std::to_string(param.second);
    case ParamKind::PairAB:
      return "a=" + std::to_string(param.first) + ",b=" + std::to_string(param.second);
  }
  return "?";
}

bool applicable(CheckId id, Param param) {
  const std::int64_t p = param.first;
  switch (id) {
    case CheckId::T11a: case CheckId::T11b: case CheckId::T11c: case CheckId::T11d:
    case CheckId::T12a: case CheckId::T12b: case CheckId::T12c: case CheckId::T12d:
    case CheckId::REM1: case CheckId::REM2:
    case CheckId::L25:
      return p != 2 && p != 5;
    case CheckId::T13a: case CheckId::T13b: case CheckId::T13c: case CheckId::T13d:
    case CheckId::C44:
      return p > 3;
    case CheckId::T14a: case CheckId::T14b: case CheckId::T14c: case CheckId::T14d:
    case CheckId::L27:
      return p != 2;
    case CheckId::L21:
      return true;
    case CheckId::C45:
      return p % 12 == 1 || p % 12 == 11;
    case CheckId::C46:
      return p % 8 == 1 || p % 8 == 7;
    case CheckId::L22:
      return p >= 0;
    case CheckId::C41: case CheckId::C43:
      return p >= 1;
    case CheckId::C41S:
      return param.first >= param.second && param.second >= 1;
    case CheckId::C43S:
      return param.first >= param.second - 1 && param.second >= 1 && param.first >= 1;
    case CheckId::C42:
      return param.first >= 1 && param.second >= 0;
  }
  return false;
}

ExactRatio::ExactRatio(BigInt num, BigInt den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("ExactRatio: zero denominator");
  v_.canonicalize();
}

std::optional<Residue> ExactRatio::residue_mod(Modulus mod) const {
  BigInt den = v_.get_den();
  // den is reduced, so gcd(den, p^a) > 1 iff p | den.
  if (mpz_divisible_ui_p(den.get_mpz_t(), mod.p)) return std::nullopt;
  std::uint64_t num_mod = mpz_fdiv_ui(v_.get_num().get_mpz_t(), mod.m);
  std::uint64_t den_mod = mpz_fdiv_ui(den.get_mpz_t(), mod.m);
  return Residue(num_mod, mod) * Residue(den_mod, mod).inverse();
}

CheckResult run_prime_check(CheckId id, std::uint64_t p, const CheckOptions& opts) {
  if (param_kind(id) != ParamKind::Prime) {
    throw std::invalid_argument("run_prime_check: not a prime-parameter check");
  }
  if (!modmath::is_prime(p)) {
    throw std::invalid_argument("run_prime_check: parameter is not prime");
  }
  PrimeCtx ctx(p);
  return dispatch_prime_check(id, ctx, opts);
}

std::vector<CheckResult> run_prime_checks(const std::vector<CheckId>& ids,
                                          std::uint64_t p,
                                          const CheckOptions& opts) {
  if (!modmath::is_prime(p)) {
    throw std::invalid_argument("run_prime_checks: parameter is not prime");
  }
  PrimeCtx ctx(p);
  std::vector<CheckResult> out;
  out.reserve(ids.size());
  for (CheckId id : ids) {
    if (param_kind(id) != ParamKind::Prime) {
      throw std::invalid_argument("run_prime_checks: not a prime-parameter check");
    }
    out.push_back(dispatch_prime_check(id, ctx, opts));
  }
  return out;
}

CheckResult run_lemma_check(CheckId id, std::uint64_t p, const CheckOptions& opts) {
  if (id != CheckId::L21 && id != CheckId::L25 && id != CheckId::L27) {
    throw std::invalid_argument("run_lemma_check: expected L21, L25 or L27");
  }
  return run_prime_check(id, p, opts);
}

CheckResult run_conj41(std::uint64_t n, const CheckOptions& opts) {
  return quotient_table_check(CheckId::C41, n, opts);
}

CheckResult run_conj43(std::uint64_t n, const CheckOptions& opts) {
  return quotient_table_check(CheckId::C43, n, opts);
}

CheckResult run_conj41_stability(unsigned a, unsigned b, const CheckOptions& opts) {
  if (!(a >= b && b >= 1)) {
    throw std::invalid_argument("run_conj41_stability: need a >= b >= 1");
  }
  if (a > 8) throw std::invalid_argument("run_conj41_stability: a too large (5^(a+1) terms)");
  return stability_check(CheckId::C41S, a, b, opts);
}

CheckResult run_conj43_stability(unsigned a, unsigned b, const CheckOptions& opts) {
  if (!(a >= 1 && b >= 1 && a + 1 >= b)) {
    throw std::invalid_argument("run_conj43_stability: need a >= 1, b >= 1, a >= b-1");
  }
  if (a > 12) throw std::invalid_argument("run_conj43_stability: a too large (3^(a+1) terms)");
  return stability_check(CheckId::C43S, a, b, opts);
}

CheckResult run_conj42(unsigned a, std::uint64_t m, const CheckOptions& opts) {
  if (a < 1) throw std::invalid_argument("run_conj42: a >= 1 required");
  Param param{static_cast<std::int64_t>(a), static_cast<std::int64_t>(m)};
  qpoly::LaurentPoly sum = qpoly::conj42_sum(a, m);
  std::uint64_t five_a = upow(5, a);
  qpoly::BigPoly qa = qpoly::q_integer(five_a);
  qpoly::BigPoly divisor = qa * qa;

  qpoly::BigPoly numerator = sum.poly;
  if (opts.perturb_lhs) numerator = numerator + qpoly::BigPoly::constant(1);
  qpoly::BigPoly rem = numerator.is_zero()
                           ? qpoly::BigPoly()
                           : qpoly::poly_divrem(numerator, divisor).second;
  bool pass = rem.is_zero();
  std::string lhs = pass ? "0"
                         : "remainder deg=" + std::to_string(rem.degree()) +
                               ", c0=" + rem.coeff(0).get_str();
  std::string modulus = "[" + std::to_string(five_a) + "]_q^2";
  return CheckResult{CheckId::C42, param, pass ? Status::Pass : Status::Fail,
                     lhs, "0", modulus};
}

CheckResult run_conj44(std::uint64_t p, const CheckOptions& opts) {
  return run_prime_check(CheckId::C44, p, opts);
}
CheckResult run_conj45(std::uint64_t p, const CheckOptions& opts) {
  return run_prime_check(CheckId::C45, p, opts);
}
CheckResult run_conj46(std::uint64_t p, const CheckOptions& opts) {
  return run_prime_check(CheckId::C46, p, opts);
}

CheckResult run_check(CheckId id, Param param, const CheckOptions& opts) {
  switch (param_kind(id)) {
    case ParamKind::Prime:
      return run_prime_check(id, static_cast<std::uint64_t>(param.first), opts);
    case ParamKind::Index: {
      std::uint64_t n = static_cast<std::uint64_t>(param.first);
      if (id == CheckId::L22) return run_l22(n, opts);
      return quotient_table_check(id, n, opts);
    }
    case ParamKind::PairAM:
      return run_conj42(static_cast<unsigned>(param.first),
                        static_cast<std::uint64_t>(param.second), opts);
    case ParamKind::PairAB:
      if (id == CheckId::C41S) {
        return run_conj41_stability(static_cast<unsigned>(param.first),
                                    static_cast<unsigned>(param.second), opts);
      }
      return run_conj43_stability(static_cast<unsigned>(param.first),
                                  static_cast<unsigned>(param.second), opts);
  }
  throw std::logic_error("run_check: bad id");
}

}  // namespace fibcong::verify
