#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fibcong/modmath.hpp"

namespace fibcong::binom {

using BigInt = mpz_class;

/// An integer p^e * u with u coprime to p, u stored mod p^a.  Central
/// binomial coefficients live in this form because p | binom(2k,k) for
/// roughly half the k below p.
struct PAdicScaled {
  unsigned exponent;      // p-adic valuation
  modmath::Residue unit;  // unit cofactor mod p^a

  friend bool operator==(const PAdicScaled&, const PAdicScaled&) = default;
};

/// p^e * u reduced mod p^a; exactly 0 once e >= a.
modmath::Residue residue_of(const PAdicScaled& x);

/// Multiply by the exact integer ratio num/den, stripping all factors of p
/// from num and den before touching the unit part.  The overall value must
/// be an integer (valuations stay consistent); den's p-free part is
/// inverted mod p^a.
PAdicScaled padic_mul_ratio(const PAdicScaled& x, std::uint64_t num,
                            std::uint64_t den);

/// Table of binom(2k,k) for k = 0..upto in p^e*u form, built by the
/// p-stripped recurrence binom(2k+2,k+1) = binom(2k,k) * 2(2k+1) / (k+1).
/// Naive modular division would break whenever p divides binom(2k,k).
std::vector<PAdicScaled> central_binomials(modmath::Modulus mod,
                                           std::size_t upto);

/// binom(n,k) mod p by Lucas' theorem: the product of base-p digit
/// binomials.  0 when any digit of k exceeds the digit of n; 0 for k > n
/// or k < 0 (binom(0,1) = 0, as the k+1-shifted sums need).
modmath::Residue binom_mod_p(std::uint64_t n, std::int64_t k,
                             std::uint64_t p);

/// Exact binomial by the multiplicative formula.  0 <= k <= n.
BigInt binom_exact(std::uint64_t n, std::uint64_t k);

}  // namespace fibcong::binom
