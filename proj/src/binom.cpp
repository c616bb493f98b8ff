#include "fibcong/binom.hpp"

#include <stdexcept>

namespace fibcong::binom {

using modmath::Modulus;
using modmath::Residue;

Residue residue_of(const PAdicScaled& x) {
  const Modulus& mod = x.unit.modulus();
  if (x.exponent >= mod.a) return Residue(0, mod);
  std::uint64_t pe = 1;
  for (unsigned i = 0; i < x.exponent; ++i) pe *= mod.p;
  return Residue(pe, mod) * x.unit;
}

PAdicScaled padic_mul_ratio(const PAdicScaled& x, std::uint64_t num,
                            std::uint64_t den) {
  const Modulus& mod = x.unit.modulus();
  if (num == 0 || den == 0) throw std::invalid_argument("padic_mul_ratio: zero num or den");
  long e = static_cast<long>(x.exponent);
  while (num % mod.p == 0) {
    num /= mod.p;
    ++e;
  }
  while (den % mod.p == 0) {
    den /= mod.p;
    --e;
  }
  if (e < 0) throw std::invalid_argument("padic_mul_ratio: ratio is not an integer");
  Residue u = x.unit * Residue(num, mod) * Residue(den, mod).inverse();
  return PAdicScaled{static_cast<unsigned>(e), u};
}

std::vector<PAdicScaled> central_binomials(Modulus mod, std::size_t upto) {
  std::vector<PAdicScaled> table;
  table.reserve(upto + 1);
  table.push_back(PAdicScaled{0, Residue(1, mod)});
  for (std::size_t k = 0; k < upto; ++k) {
    table.push_back(padic_mul_ratio(table.back(), 2 * (2 * k + 1), k + 1));
  }
  return table;
}

namespace {

// binom(n,k) mod p for 0 <= k <= n < p.
std::uint64_t digit_binom_mod(std::uint64_t n, std::uint64_t k, std::uint64_t p) {
  if (k > n - k) k = n - k;
  std::uint64_t r = 1 % p;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = modmath::mul_mod(r, (n - k + i) % p, p);
    r = modmath::mul_mod(r, *modmath::inverse_mod(i % p, p), p);
  }
  return r;
}

}  // namespace

Residue binom_mod_p(std::uint64_t n, std::int64_t k, std::uint64_t p) {
  Modulus mod = Modulus::make(p, 1);
  if (k < 0 || static_cast<std::uint64_t>(k) > n) return Residue(0, mod);
  std::uint64_t kk = static_cast<std::uint64_t>(k), nn = n;
  std::uint64_t r = 1 % p;
  while (nn > 0 || kk > 0) {
    std::uint64_t nd = nn % p, kd = kk % p;
    if (kd > nd) return Residue(0, mod);
    r = modmath::mul_mod(r, digit_binom_mod(nd, kd, p), p);
    nn /= p;
    kk /= p;
  }
  return Residue(r, mod);
}

BigInt binom_exact(std::uint64_t n, std::uint64_t k) {
  if (k > n) throw std::invalid_argument("binom_exact: need 0 <= k <= n");
  if (k > n - k) k = n - k;
  BigInt r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), i);
  }
  return r;
}

}  // namespace fibcong::binom
