#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>

#include "fibcong/binom.hpp"
#include "fibcong/modmath.hpp"

namespace fibcong::quadring {

/// The ring Z[t]/(t^2 - c1 t - c0) with coefficients mod p^a.
struct QuadRing {
  std::int64_t c0;
  std::int64_t c1;
  modmath::Modulus mod;

  friend bool operator==(const QuadRing&, const QuadRing&) = default;
};

/// t^2 = 1 + t: t plays (1+sqrt5)/2 and 2t-1 plays sqrt5.
inline QuadRing golden_ring(modmath::Modulus mod) { return QuadRing{1, 1, mod}; }

/// x + y t with coefficients reduced mod the ring modulus.
class QuadElement {
 public:
  QuadElement(modmath::Residue x, modmath::Residue y, QuadRing ring);

  static QuadElement from_int(std::int64_t v, const QuadRing& ring);
  /// The generator t.
  static QuadElement gen(const QuadRing& ring);
  /// 2t - c1, the difference of the two roots (sqrt5 in the golden ring).
  static QuadElement root_diff(const QuadRing& ring);

  const modmath::Residue& x() const { return x_; }
  const modmath::Residue& y() const { return y_; }
  const QuadRing& ring() const { return ring_; }

  QuadElement operator+(const QuadElement& o) const;
  QuadElement operator-(const QuadElement& o) const;
  QuadElement operator*(const QuadElement& o) const;
  QuadElement operator-() const;
  QuadElement pow(std::uint64_t e) const;

  /// Image of t under t -> c1 - t (the other root); swaps alpha and beta.
  QuadElement conjugate() const;

  /// Multiply by inverse of 2 (odd p only).
  QuadElement half() const;

  std::string to_string() const;  // "x + y*t" canonical form

  friend bool operator==(const QuadElement& a, const QuadElement& b) {
    return a.ring_ == b.ring_ && a.x_ == b.x_ && a.y_ == b.y_;
  }

 private:
  void check_same(const QuadElement& o) const;

  modmath::Residue x_, y_;
  QuadRing ring_;
};

/// Both sides of the congruence
///   sum_{k=0}^{p-1} binom(2k,k) alpha^{p-1-k}  ==  2 u_p(alpha,alpha) - u_p(alpha-2,1)
/// evaluated in alpha's ring with coefficients mod p^2.  `central` must
/// hold binom(2k,k) mod p^2 up to k = p-1.  u_p is run by the Lucas
/// recurrence inside the ring.
std::pair<QuadElement, QuadElement> lemma21_sides(
    const QuadElement& alpha, std::uint64_t p,
    std::span<const binom::PAdicScaled> central);

/// The golden-ring values of (sin(n pi/5)/sin(pi/5), sin(2n pi/5)/sin(2 pi/5))
/// for n == +3 resp. -3 (mod 10):  +3 -> (t, 1-t),  -3 -> (-t, t-1).
std::pair<QuadElement, QuadElement> lemma24_constants(int residue_class,
                                                      const QuadRing& golden);

}  // namespace fibcong::quadring
