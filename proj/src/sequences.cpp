#include "fibcong/sequences.hpp"

#include <stdexcept>

#include "fibcong/binom.hpp"

namespace fibcong::sequences {

using modmath::Modulus;
using modmath::Residue;

namespace {

struct Mat2 {
  std::uint64_t a, b, c, d;  // [[a,b],[c,d]]
};

Mat2 mat_mul(const Mat2& x, const Mat2& y, std::uint64_t m) {
  using modmath::mul_mod;
  auto cell = [&](std::uint64_t p, std::uint64_t q, std::uint64_t r,
                  std::uint64_t s) {
    std::uint64_t t = mul_mod(p, q, m) + mul_mod(r, s, m);
    if (t >= m) t -= m;
    return t;
  };
  return Mat2{cell(x.a, y.a, x.b, y.c), cell(x.a, y.b, x.b, y.d),
              cell(x.c, y.a, x.d, y.c), cell(x.c, y.b, x.d, y.d)};
}

Mat2 mat_pow(Mat2 base, std::uint64_t n, std::uint64_t m) {
  Mat2 r{1 % m, 0, 0, 1 % m};
  while (n > 0) {
    if (n & 1) r = mat_mul(r, base, m);
    base = mat_mul(base, base, m);
    n >>= 1;
  }
  return r;
}

}  // namespace

Residue lucas_u_mod(SeqParams params, std::uint64_t n, Modulus mod) {
  std::uint64_t a = Residue::from_int(params.A, mod).value();
  std::uint64_t nb = Residue::from_int(-params.B, mod).value();
  Mat2 step{a, nb, 1 % mod.m, 0};
  Mat2 mn = mat_pow(step, n, mod.m);
  // [u_{n+1}, u_n]^T = step^n [1, 0]^T
  return Residue(mn.c, mod);
}

Residue lucas_v_mod(SeqParams params, std::uint64_t n, Modulus mod) {
  std::uint64_t a = Residue::from_int(params.A, mod).value();
  std::uint64_t nb = Residue::from_int(-params.B, mod).value();
  Mat2 step{a, nb, 1 % mod.m, 0};
  Mat2 mn = mat_pow(step, n, mod.m);
  Residue un(mn.c, mod), un1(mn.a, mod);
  return un1 + un1 - Residue::from_int(params.A, mod) * un;
}

SeqTable seq_table_mod(SeqParams params, std::size_t len, Modulus mod) {
  if (len < 1) throw std::invalid_argument("seq_table_mod: len >= 1 required");
  Residue a = Residue::from_int(params.A, mod);
  Residue b = Residue::from_int(params.B, mod);
  SeqTable t;
  t.u.reserve(len);
  t.v.reserve(len);
  t.u.push_back(Residue(0, mod));
  t.v.push_back(Residue(2, mod));
  if (len == 1) return t;
  t.u.push_back(Residue(1, mod));
  t.v.push_back(a);
  for (std::size_t k = 2; k < len; ++k) {
    t.u.push_back(a * t.u[k - 1] - b * t.u[k - 2]);
    t.v.push_back(a * t.v[k - 1] - b * t.v[k - 2]);
  }
  return t;
}

BigInt seq_u_exact(SeqParams params, std::uint64_t n) {
  BigInt prev = 0, cur = 1;
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    BigInt next = params.A * cur - params.B * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

BigInt seq_v_exact(SeqParams params, std::uint64_t n) {
  BigInt prev = 2, cur = params.A;
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    BigInt next = params.A * cur - params.B * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<BigInt> lucas_u_poly(std::uint64_t n) {
  if (n == 0) return {};
  std::uint64_t deg = n - 1;
  std::vector<BigInt> coeffs(deg + 1, BigInt(0));
  for (std::uint64_t k = 0; 2 * k <= deg; ++k) {
    BigInt c = binom::binom_exact(deg - k, k);
    if (k % 2 != 0) c = -c;
    coeffs[deg - 2 * k] = c;
  }
  return coeffs;
}

namespace {

BigInt pow_int(std::uint64_t base, std::uint64_t e) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return r;
}

}  // namespace

bool closed_form_check(ClosedForm family, std::uint64_t n) {
  bool even = n % 2 == 0;
  switch (family) {
    case ClosedForm::U55:
      if (even) return seq_u_exact(kU55, n) == pow_int(5, n / 2) * seq_u_exact(kFibonacci, n);
      return seq_u_exact(kU55, n) == pow_int(5, (n - 1) / 2) * seq_v_exact(kFibonacci, n);
    case ClosedForm::V55:
      if (even) return seq_v_exact(kU55, n) == pow_int(5, n / 2) * seq_v_exact(kFibonacci, n);
      return seq_v_exact(kU55, n) == pow_int(5, (n + 1) / 2) * seq_u_exact(kFibonacci, n);
    case ClosedForm::U42:
      if (even) return seq_u_exact(kU42, n) == pow_int(2, n / 2) * seq_u_exact(kPell, n);
      // odd: u_n(4,2) = 2^{(n-3)/2} Q_n; compare 2 u_n = 2^{(n-1)/2} Q_n
      return 2 * seq_u_exact(kU42, n) == pow_int(2, (n - 1) / 2) * seq_v_exact(kPell, n);
    case ClosedForm::V42:
      if (even) return seq_v_exact(kU42, n) == pow_int(2, n / 2) * seq_v_exact(kPell, n);
      return seq_v_exact(kU42, n) == pow_int(2, (n + 3) / 2) * seq_u_exact(kPell, n);
  }
  throw std::logic_error("closed_form_check: bad family");
}

}  // namespace fibcong::sequences
