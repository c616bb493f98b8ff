#include "fibcong/modmath.hpp"

#include <numeric>

namespace fibcong::modmath {

namespace {

std::uint64_t pow_mod_u128(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = m == 1 ? 0 : 1;
  x %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, x, m);
    x = mul_mod(x, x, m);
    e >>= 1;
  }
  return r;
}

bool miller_rabin(std::uint64_t n, std::uint64_t base) {
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = pow_mod_u128(base % n, d, n);
  if (x == 1 || x == n - 1) return true;
  for (int i = 1; i < s; ++i) {
    x = mul_mod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // The first twelve primes are a complete witness set far past 2^64.
  for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull,
                             19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (!miller_rabin(n, base)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi) {
  if (lo < 1 || lo > hi) throw std::invalid_argument("primes_in: need 1 <= lo <= hi");
  std::vector<std::uint64_t> out;
  if (lo <= 2 && 2 <= hi) out.push_back(2);
  std::uint64_t n = std::max<std::uint64_t>(lo, 3);
  if (n % 2 == 0) ++n;
  for (; n <= hi; n += 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

int jacobi(std::int64_t a, std::uint64_t n) {
  if (n == 0 || n % 2 == 0) throw std::invalid_argument("jacobi: n must be odd and positive");
  int sign = 1;
  std::uint64_t aa;
  if (a < 0) {
    // (a/n) = (-1/n) * (|a|/n), with (-1/n) = (-1)^((n-1)/2).
    if (((n - 1) / 2) % 2 != 0) sign = -sign;
    aa = static_cast<std::uint64_t>(-a) % n;
  } else {
    aa = static_cast<std::uint64_t>(a) % n;
  }
  std::uint64_t num = aa, den = n;
  while (num != 0) {
    while (num % 2 == 0) {
      num /= 2;
      std::uint64_t r = den % 8;
      if (r == 3 || r == 5) sign = -sign;
    }
    std::swap(num, den);
    if (num % 4 == 3 && den % 4 == 3) sign = -sign;
    num %= den;
  }
  if (den != 1) return 0;
  return sign;
}

Modulus Modulus::make(std::uint64_t p, unsigned a) {
  if (!is_prime(p)) throw std::invalid_argument("Modulus: p is not prime");
  if (a < 1) throw std::invalid_argument("Modulus: exponent must be >= 1");
  constexpr std::uint64_t cap = 1ull << 63;
  std::uint64_t m = 1;
  for (unsigned i = 0; i < a; ++i) {
    if (m >= cap / p + 1 || m * p >= cap) throw std::overflow_error("Modulus: p^a exceeds 2^63");
    m *= p;
  }
  return Modulus{p, a, m};
}

Residue Residue::from_int(std::int64_t value, Modulus mod) {
  std::int64_t r = value % static_cast<std::int64_t>(mod.m);
  if (r < 0) r += static_cast<std::int64_t>(mod.m);
  return Residue(static_cast<std::uint64_t>(r), mod);
}

std::int64_t Residue::signed_value() const {
  if (v_ * 2 <= mod_.m) return static_cast<std::int64_t>(v_);
  return static_cast<std::int64_t>(v_) - static_cast<std::int64_t>(mod_.m);
}

void Residue::check_same(const Residue& o) const {
  if (!(mod_ == o.mod_)) throw std::invalid_argument("Residue: mixed moduli");
}

Residue Residue::operator+(const Residue& o) const {
  check_same(o);
  std::uint64_t s = v_ + o.v_;
  if (s >= mod_.m) s -= mod_.m;
  return Residue(s, mod_);
}

Residue Residue::operator-(const Residue& o) const {
  check_same(o);
  std::uint64_t s = v_ >= o.v_ ? v_ - o.v_ : v_ + mod_.m - o.v_;
  return Residue(s, mod_);
}

Residue Residue::operator*(const Residue& o) const {
  check_same(o);
  return Residue(mul_mod(v_, o.v_, mod_.m), mod_);
}

Residue Residue::operator-() const {
  return Residue(v_ == 0 ? 0 : mod_.m - v_, mod_);
}

Residue Residue::pow(std::uint64_t e) const {
  return Residue(pow_mod_u128(v_, e, mod_.m), mod_);
}

std::optional<Residue> Residue::try_inverse() const {
  auto inv = inverse_mod(v_, mod_.m);
  if (!inv) return std::nullopt;
  return Residue(*inv, mod_);
}

Residue Residue::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw std::domain_error("Residue: value not invertible (gcd > 1)");
  return *inv;
}

std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m) {
  return pow_mod_u128(x, e, m);
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t x, std::uint64_t m) {
  // Extended Euclid on (x, m); keep only the x-coefficient.  128-bit
  // coefficients: near the 2^63 modulus cap the intermediate q*t1 can
  // leave the int64 range.
  __int128 t0 = 0, t1 = 1;
  std::uint64_t r0 = m, r1 = x % m;
  while (r1 != 0) {
    std::uint64_t q = r0 / r1;
    std::uint64_t r2 = r0 - q * r1;
    __int128 t2 = t0 - static_cast<__int128>(q) * t1;
    r0 = r1; r1 = r2;
    t0 = t1; t1 = t2;
  }
  if (r0 != 1) return std::nullopt;
  if (t0 < 0) t0 += m;
  return static_cast<std::uint64_t>(t0);
}

}  // namespace fibcong::modmath
