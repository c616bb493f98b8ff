#include "fibcong/quadring.hpp"

#include <stdexcept>

namespace fibcong::quadring {

using modmath::Residue;

QuadElement::QuadElement(Residue x, Residue y, QuadRing ring)
    : x_(x), y_(y), ring_(ring) {
  if (!(x.modulus() == ring.mod) || !(y.modulus() == ring.mod)) {
    throw std::invalid_argument("QuadElement: coefficient modulus differs from ring");
  }
}

QuadElement QuadElement::from_int(std::int64_t v, const QuadRing& ring) {
  return QuadElement(Residue::from_int(v, ring.mod), Residue(0, ring.mod), ring);
}

QuadElement QuadElement::gen(const QuadRing& ring) {
  return QuadElement(Residue(0, ring.mod), Residue(1, ring.mod), ring);
}

QuadElement QuadElement::root_diff(const QuadRing& ring) {
  return QuadElement(Residue::from_int(-ring.c1, ring.mod), Residue(2, ring.mod), ring);
}

void QuadElement::check_same(const QuadElement& o) const {
  if (!(ring_ == o.ring_)) throw std::invalid_argument("QuadElement: mixed rings");
}

QuadElement QuadElement::operator+(const QuadElement& o) const {
  check_same(o);
  return QuadElement(x_ + o.x_, y_ + o.y_, ring_);
}

QuadElement QuadElement::operator-(const QuadElement& o) const {
  check_same(o);
  return QuadElement(x_ - o.x_, y_ - o.y_, ring_);
}

QuadElement QuadElement::operator*(const QuadElement& o) const {
  check_same(o);
  // (x1 + y1 t)(x2 + y2 t), t^2 = c0 + c1 t
  Residue c0 = Residue::from_int(ring_.c0, ring_.mod);
  Residue c1 = Residue::from_int(ring_.c1, ring_.mod);
  Residue yy = y_ * o.y_;
  Residue x = x_ * o.x_ + yy * c0;
  Residue y = x_ * o.y_ + y_ * o.x_ + yy * c1;
  return QuadElement(x, y, ring_);
}

QuadElement QuadElement::operator-() const {
  return QuadElement(-x_, -y_, ring_);
}

QuadElement QuadElement::pow(std::uint64_t e) const {
  QuadElement r = from_int(1, ring_);
  QuadElement base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

QuadElement QuadElement::conjugate() const {
  Residue c1 = Residue::from_int(ring_.c1, ring_.mod);
  return QuadElement(x_ + y_ * c1, -y_, ring_);
}

QuadElement QuadElement::half() const {
  Residue inv2 = Residue(2, ring_.mod).inverse();
  return QuadElement(x_ * inv2, y_ * inv2, ring_);
}

std::string QuadElement::to_string() const {
  return std::to_string(x_.value()) + " + " + std::to_string(y_.value()) + "*t";
}

std::pair<QuadElement, QuadElement> lemma21_sides(
    const QuadElement& alpha, std::uint64_t p,
    std::span<const binom::PAdicScaled> central) {
  const QuadRing& ring = alpha.ring();
  if (ring.mod.p != p || ring.mod.a != 2) {
    throw std::invalid_argument("lemma21_sides: ring modulus must be p^2");
  }
  if (central.size() < p) {
    throw std::invalid_argument("lemma21_sides: central table too short");
  }

  auto scalar = [&](Residue r) {
    return QuadElement(r, Residue(0, ring.mod), ring);
  };

  // LHS = sum_{k=0}^{p-1} binom(2k,k) alpha^{p-1-k}: Horner, highest power
  // of alpha first (that is the k = 0 coefficient).
  QuadElement lhs = scalar(binom::residue_of(central[0]));
  for (std::uint64_t k = 1; k < p; ++k) {
    lhs = lhs * alpha + scalar(binom::residue_of(central[k]));
  }

  // u_p(alpha, alpha) and u_p(alpha - 2, 1) by the recurrence in the ring.
  auto lucas_u = [&](const QuadElement& a, const QuadElement& b) {
    QuadElement prev = QuadElement::from_int(0, ring);
    QuadElement cur = QuadElement::from_int(1, ring);
    for (std::uint64_t k = 1; k < p; ++k) {
      QuadElement next = a * cur - b * prev;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  QuadElement two = QuadElement::from_int(2, ring);
  QuadElement one = QuadElement::from_int(1, ring);
  QuadElement u_aa = lucas_u(alpha, alpha);
  QuadElement u_a21 = lucas_u(alpha - two, one);
  QuadElement rhs = u_aa + u_aa - u_a21;
  return {lhs, rhs};
}

std::pair<QuadElement, QuadElement> lemma24_constants(int residue_class,
                                                      const QuadRing& golden) {
  QuadElement t = QuadElement::gen(golden);
  QuadElement one = QuadElement::from_int(1, golden);
  if (residue_class == 3) return {t, one - t};
  if (residue_class == -3) return {-t, t - one};
  throw std::invalid_argument("lemma24_constants: class must be +3 or -3");
}

}  // namespace fibcong::quadring
