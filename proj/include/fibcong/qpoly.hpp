#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace fibcong::qpoly {

using BigInt = mpz_class;

/// Dense integer polynomial in q: coeffs[i] is the coefficient of q^i,
/// no trailing zeros, zero polynomial is the empty vector.
class BigPoly {
 public:
  BigPoly() = default;
  explicit BigPoly(std::vector<BigInt> coeffs);
  static BigPoly constant(BigInt c);
  static BigPoly monomial(BigInt c, std::size_t deg);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  std::int64_t degree() const { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
  const BigInt& coeff(std::size_t i) const;
  const std::vector<BigInt>& coeffs() const { return coeffs_; }

  BigPoly operator+(const BigPoly& o) const;
  BigPoly operator-(const BigPoly& o) const;
  BigPoly operator*(const BigPoly& o) const;
  BigPoly operator-() const;

  /// this += q^shift * o
  void add_shifted(const BigPoly& o, std::size_t shift);

  BigInt eval_one() const;

  std::string to_string() const;  // "1 + 2*q + q^2"

  friend bool operator==(const BigPoly& a, const BigPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

/// Quotient and remainder of a by b with deg r < deg b.  b must have
/// leading coefficient +-1 so the division stays in Z[q].
std::pair<BigPoly, BigPoly> poly_divrem(const BigPoly& a, const BigPoly& b);

/// [n]_q = 1 + q + ... + q^{n-1};  [0]_q = 0.
BigPoly q_integer(std::uint64_t n);

/// Gaussian binomial [n k]_q by the Pascal-type recurrence
/// [n k] = [n-1 k-1] + q^k [n-1 k]; zero for k out of [0, n].
BigPoly gaussian_binomial(std::int64_t n, std::int64_t k);

/// Schur's q-Fibonacci: F_0 = 0, F_1 = 1, F_{n+1}(q) = F_n(q) + q^n F_{n-1}(q).
BigPoly schur_q_fibonacci(std::uint64_t n);

/// q^shift * poly; normalized so poly has a nonzero constant term unless
/// it is zero (the power of q moves into shift).
struct LaurentPoly {
  BigPoly poly;
  std::int64_t shift = 0;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;
};

LaurentPoly make_laurent(BigPoly poly, std::int64_t shift);

/// sum_{k=0}^{5^a m - 1} q^{-2k(k+1)} [2k k]_q F_{2k+1}(q) as a Laurent
/// polynomial, global shift -2N(N+1) with N = 5^a m - 1.  m = 0 gives 0.
LaurentPoly conj42_sum(unsigned a, std::uint64_t m);

/// Whether x == 0 modulo d in Z[q][q^{-1}].  d must have constant term
/// +-1, which makes q a unit modulo d, so the shift is discarded and the
/// question reduces to an exact polynomial remainder.
bool laurent_divisible(const LaurentPoly& x, const BigPoly& d);

}  // namespace fibcong::qpoly
