#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace fibcong::modmath {

/// Floor division, correct for negative numerators (C++ `/` truncates).
constexpr std::int64_t floor_div(std::int64_t n, std::int64_t d) {
  std::int64_t q = n / d;
  if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
  return q;
}

/// (-1)^floor(n/d).  d > 0; n may be negative (T14c feeds floor((p-4)/8)).
constexpr int sign_pow_floor(std::int64_t n, std::int64_t d) {
  return (floor_div(n, d) % 2 != 0) ? -1 : 1;
}

/// Deterministic primality for n < 2^63 (Miller-Rabin over a witness set
/// that is exhaustive well beyond the 64-bit range).
bool is_prime(std::uint64_t n);

/// All primes in the closed interval [lo, hi], ascending.  1 <= lo <= hi.
std::vector<std::uint64_t> primes_in(std::uint64_t lo, std::uint64_t hi);

/// Jacobi symbol (a/n) for odd positive n; a arbitrary (reduced internally,
/// negative a handled via the (-1/n) factor).  0 iff gcd(a, n) > 1.
int jacobi(std::int64_t a, std::uint64_t n);

/// A prime-power modulus m = p^a.  m is capped below 2^63 so that products
/// of two residues fit in unsigned __int128.
struct Modulus {
  std::uint64_t p = 0;
  unsigned a = 0;
  std::uint64_t m = 0;

  static Modulus make(std::uint64_t p, unsigned a);

  friend bool operator==(const Modulus&, const Modulus&) = default;
};

/// An integer reduced into [0, m), closed under arithmetic mod m.
class Residue {
 public:
  Residue(std::uint64_t value, Modulus mod) : v_(value % mod.m), mod_(mod) {}

  static Residue from_int(std::int64_t value, Modulus mod);

  std::uint64_t value() const { return v_; }
  const Modulus& modulus() const { return mod_; }

  /// Representative in (-m/2, m/2], for display next to signed statements.
  std::int64_t signed_value() const;

  Residue operator+(const Residue& o) const;
  Residue operator-(const Residue& o) const;
  Residue operator*(const Residue& o) const;
  Residue operator-() const;

  Residue pow(std::uint64_t e) const;

  /// Inverse mod m, or nullopt when gcd(value, m) > 1.
  std::optional<Residue> try_inverse() const;
  /// Inverse mod m; throws std::domain_error on non-invertible input.
  Residue inverse() const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.v_ == b.v_ && a.mod_ == b.mod_;
  }

 private:
  void check_same(const Residue& o) const;

  std::uint64_t v_;
  Modulus mod_;
};

/// x^e mod m by binary exponentiation (x need not be reduced).
std::uint64_t pow_mod(std::uint64_t x, std::uint64_t e, std::uint64_t m);

/// Inverse of x mod m via extended Euclid; nullopt when gcd(x, m) > 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t x, std::uint64_t m);

inline std::uint64_t mul_mod(std::uint64_t x, std::uint64_t y, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % m);
}

}  // namespace fibcong::modmath
