#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "fibcong/modmath.hpp"

namespace fibcong::sequences {

using BigInt = mpz_class;

/// Parameters of the pair u_n, v_n with u_{n+1} = A u_n - B u_{n-1},
/// seeds u_0 = 0, u_1 = 1 and v_0 = 2, v_1 = A.
struct SeqParams {
  std::int64_t A;
  std::int64_t B;

  std::int64_t disc() const { return A * A - 4 * B; }

  friend bool operator==(const SeqParams&, const SeqParams&) = default;
};

// Named instances.
inline constexpr SeqParams kFibonacci{1, -1};  // u = F_n, v = L_n
inline constexpr SeqParams kST{4, 1};          // u = S_n, v = T_n
inline constexpr SeqParams kPell{2, -1};       // u = P_n, v = Q_n
inline constexpr SeqParams kU55{5, 5};
inline constexpr SeqParams kU42{4, 2};

/// u_n mod m by 2x2 matrix power of [[A,-B],[1,0]] (O(log n)).
modmath::Residue lucas_u_mod(SeqParams params, std::uint64_t n,
                             modmath::Modulus mod);
/// v_n mod m, via v_n = 2 u_{n+1} - A u_n.
modmath::Residue lucas_v_mod(SeqParams params, std::uint64_t n,
                             modmath::Modulus mod);

struct SeqTable {
  std::vector<modmath::Residue> u;
  std::vector<modmath::Residue> v;
};

/// (u_k, v_k) mod m for k = 0..len-1 by direct iteration.
SeqTable seq_table_mod(SeqParams params, std::size_t len,
                       modmath::Modulus mod);

/// Exact u_n / v_n by iteration.
BigInt seq_u_exact(SeqParams params, std::uint64_t n);
BigInt seq_v_exact(SeqParams params, std::uint64_t n);

/// Coefficients of u_n(x, 1) as a polynomial in x (index = degree), from
/// the explicit sum u_{n+1}(x,y) = sum_k binom(n-k,k) x^{n-2k} (-y)^k.
/// u_0 = 0 (empty), u_1 = 1; degree n-1 for n >= 1.
std::vector<BigInt> lucas_u_poly(std::uint64_t n);

enum class ClosedForm { U55, V55, U42, V42 };

/// Exact big-integer verification of the closed forms
///   u_n(5,5) = 5^{n/2} F_n        (n even)   5^{(n-1)/2} L_n  (n odd)
///   v_n(5,5) = 5^{n/2} L_n        (n even)   5^{(n+1)/2} F_n  (n odd)
///   u_n(4,2) = 2^{n/2} P_n        (n even)   2^{(n-3)/2} Q_n  (n odd)
///   v_n(4,2) = 2^{n/2} Q_n        (n even)   2^{(n+3)/2} P_n  (n odd)
/// The odd u42 case is compared as 2*u_n == 2^{(n-1)/2} Q_n so that n = 1
/// stays in integers.
bool closed_form_check(ClosedForm family, std::uint64_t n);

}  // namespace fibcong::sequences
