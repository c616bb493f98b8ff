#include "fibcong/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace fibcong::qpoly {

namespace {
const BigInt kZero = 0;
}

BigPoly::BigPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  normalize();
}

BigPoly BigPoly::constant(BigInt c) {
  std::vector<BigInt> v;
  if (c != 0) v.push_back(std::move(c));
  return BigPoly(std::move(v));
}

BigPoly BigPoly::monomial(BigInt c, std::size_t deg) {
  if (c == 0) return BigPoly();
  std::vector<BigInt> v(deg + 1, kZero);
  v[deg] = std::move(c);
  return BigPoly(std::move(v));
}

void BigPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const BigInt& BigPoly::coeff(std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

BigPoly BigPoly::operator+(const BigPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return BigPoly(std::move(v));
}

BigPoly BigPoly::operator-(const BigPoly& o) const {
  std::vector<BigInt> v(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
  return BigPoly(std::move(v));
}

BigPoly BigPoly::operator*(const BigPoly& o) const {
  if (is_zero() || o.is_zero()) return BigPoly();
  std::vector<BigInt> v(coeffs_.size() + o.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      mpz_addmul(v[i + j].get_mpz_t(), coeffs_[i].get_mpz_t(),
                 o.coeffs_[j].get_mpz_t());
    }
  }
  return BigPoly(std::move(v));
}

BigPoly BigPoly::operator-() const {
  std::vector<BigInt> v(coeffs_);
  for (auto& c : v) c = -c;
  return BigPoly(std::move(v));
}

void BigPoly::add_shifted(const BigPoly& o, std::size_t shift) {
  if (o.is_zero()) return;
  if (coeffs_.size() < o.coeffs_.size() + shift) {
    coeffs_.resize(o.coeffs_.size() + shift, kZero);
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i + shift] += o.coeffs_[i];
  normalize();
}

BigInt BigPoly::eval_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::string BigPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    BigInt abs_c = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (i == 0) {
      os << abs_c.get_str();
    } else {
      if (abs_c != 1) os << abs_c.get_str() << "*";
      os << "q";
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

std::pair<BigPoly, BigPoly> poly_divrem(const BigPoly& a, const BigPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divrem: division by zero");
  const BigInt& lead = b.coeffs().back();
  if (lead != 1 && lead != -1) {
    throw std::invalid_argument("poly_divrem: divisor leading coefficient must be +-1");
  }
  if (a.degree() < b.degree()) return {BigPoly(), a};

  std::vector<BigInt> rem(a.coeffs());
  std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<BigInt> quot(rem.size() - db, kZero);
  bool lead_neg = lead == -1;
  for (std::size_t top = rem.size(); top-- > db;) {
    if (rem[top] == 0) continue;
    BigInt factor = lead_neg ? BigInt(-rem[top]) : rem[top];
    quot[top - db] = factor;
    for (std::size_t j = 0; j <= db; ++j) {
      mpz_submul(rem[top - db + j].get_mpz_t(), factor.get_mpz_t(),
                 b.coeffs()[j].get_mpz_t());
    }
  }
  return {BigPoly(std::move(quot)), BigPoly(std::move(rem))};
}

BigPoly q_integer(std::uint64_t n) {
  return BigPoly(std::vector<BigInt>(n, BigInt(1)));
}

BigPoly gaussian_binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return BigPoly();
  // Walk Pascal rows: row[j] = [r j]_q, advanced via
  // [r j] = [r-1 j-1] + q^j [r-1 j].
  std::vector<BigPoly> row{BigPoly::constant(1)};
  for (std::int64_t r = 1; r <= n; ++r) {
    std::vector<BigPoly> next(static_cast<std::size_t>(r) + 1);
    next[0] = BigPoly::constant(1);
    for (std::int64_t j = 1; j < r; ++j) {
      BigPoly shifted = row[j - 1];
      shifted.add_shifted(row[j], static_cast<std::size_t>(j));
      next[static_cast<std::size_t>(j)] = std::move(shifted);
    }
    next[static_cast<std::size_t>(r)] = BigPoly::constant(1);
    row = std::move(next);
  }
  return row[static_cast<std::size_t>(k)];
}

BigPoly schur_q_fibonacci(std::uint64_t n) {
  BigPoly prev;                        // F_0 = 0
  BigPoly cur = BigPoly::constant(1);  // F_1 = 1
  if (n == 0) return prev;
  for (std::uint64_t k = 1; k < n; ++k) {
    // F_{k+1} = F_k + q^k F_{k-1}
    BigPoly next = cur;
    next.add_shifted(prev, k);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

LaurentPoly make_laurent(BigPoly poly, std::int64_t shift) {
  if (poly.is_zero()) return LaurentPoly{BigPoly(), 0};
  std::size_t low = 0;
  while (poly.coeff(low) == 0) ++low;
  if (low > 0) {
    std::vector<BigInt> v(poly.coeffs().begin() + static_cast<std::ptrdiff_t>(low),
                          poly.coeffs().end());
    poly = BigPoly(std::move(v));
    shift += static_cast<std::int64_t>(low);
  }
  return LaurentPoly{std::move(poly), shift};
}

LaurentPoly conj42_sum(unsigned a, std::uint64_t m) {
  if (a < 1) throw std::invalid_argument("conj42_sum: a >= 1 required");
  if (m == 0) return LaurentPoly{BigPoly(), 0};
  if (a > 8 || m > 1000) throw std::invalid_argument("conj42_sum: instance too large");

  std::uint64_t count = m;
  for (unsigned i = 0; i < a; ++i) count *= 5;  // 5^a m terms, k = 0..N
  if (count > 1000) {
    // the accumulator holds ~2N^2 big-integer coefficients and the work
    // grows like N^5; anything past N ~ 10^3 is out of desk range
    throw std::invalid_argument("conj42_sum: instance too large (5^a*m > 1000)");
  }
  std::uint64_t N = count - 1;
  std::uint64_t base_shift = 2 * N * (N + 1);

  // Accumulator for q^{2N(N+1)} * sum; term k lands at offset
  // 2N(N+1) - 2k(k+1) .. +deg of [2k k] F_{2k+1}.
  std::vector<BigInt> acc(base_shift + 1, kZero);

  // [2k k]_q via Pascal rows advanced two at a time; F_{2k+1}(q) via the
  // Schur recurrence advanced two at a time.
  std::vector<BigPoly> row{BigPoly::constant(1)};  // row 0
  auto advance_row = [](std::vector<BigPoly>& r) {
    std::size_t n = r.size();  // becoming row n
    std::vector<BigPoly> next(n + 1);
    next[0] = BigPoly::constant(1);
    for (std::size_t j = 1; j < n; ++j) {
      BigPoly s = r[j - 1];
      s.add_shifted(r[j], j);
      next[j] = std::move(s);
    }
    next[n] = BigPoly::constant(1);
    r = std::move(next);
  };

  BigPoly fib_prev;                        // F_{2k}
  BigPoly fib_cur = BigPoly::constant(1);  // F_{2k+1}
  // Seed at k = 0: F_0 = 0, F_1 = 1.
  std::uint64_t fib_index = 1;             // index of fib_cur

  for (std::uint64_t k = 0; k <= N; ++k) {
    const BigPoly& gauss = row[row.size() / 2];  // [2k k]
    std::uint64_t offset = base_shift - 2 * k * (k + 1);
    // acc += q^offset * gauss * F_{2k+1}
    const auto& g = gauss.coeffs();
    const auto& f = fib_cur.coeffs();
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == 0) continue;
      BigInt* dst = acc.data() + offset + i;
      for (std::size_t j = 0; j < f.size(); ++j) {
        mpz_addmul(dst[j].get_mpz_t(), g[i].get_mpz_t(), f[j].get_mpz_t());
      }
    }
    if (k == N) break;
    advance_row(row);
    advance_row(row);
    for (int step = 0; step < 2; ++step) {
      BigPoly next = fib_cur;
      next.add_shifted(fib_prev, fib_index);
      fib_prev = std::move(fib_cur);
      fib_cur = std::move(next);
      ++fib_index;
    }
  }

  return make_laurent(BigPoly(std::move(acc)),
                      -static_cast<std::int64_t>(base_shift));
}

bool laurent_divisible(const LaurentPoly& x, const BigPoly& d) {
  if (d.is_zero() || d.coeff(0) == 0) {
    throw std::invalid_argument("laurent_divisible: divisor needs nonzero constant term");
  }
  if (d.coeff(0) != 1 && d.coeff(0) != -1) {
    throw std::invalid_argument("laurent_divisible: divisor constant term must be +-1");
  }
  if (x.poly.is_zero()) return true;
  // q is a unit modulo d, so the shift is irrelevant.
  return poly_divrem(x.poly, d).second.is_zero();
}

}  // namespace fibcong::qpoly
