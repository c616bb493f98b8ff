#include "fibcong/selftest.hpp"

#include <sstream>

#include "fibcong/binom.hpp"
#include "fibcong/modmath.hpp"
#include "fibcong/qpoly.hpp"
#include "fibcong/quadring.hpp"
#include "fibcong/sequences.hpp"
#include "fibcong/verify.hpp"

namespace fibcong::selftest {

namespace {

using BigInt = mpz_class;
using modmath::Modulus;
using modmath::Residue;
using verify::CheckResult;
using verify::Status;

struct Runner {
  std::vector<Case> cases;

  template <typename A, typename B>
  void eq(const std::string& name, const A& actual, const B& expected) {
    std::ostringstream sa, se;
    sa << actual;
    se << expected;
    bool ok = sa.str() == se.str();
    cases.push_back(Case{name, ok, ok ? "" : "got " + sa.str() + ", want " + se.str()});
  }

  void ok(const std::string& name, bool value, const std::string& detail = "") {
    cases.push_back(Case{name, value, value ? "" : detail});
  }

  void check_status(const std::string& name, const CheckResult& r, Status want) {
    bool good = r.status == want;
    cases.push_back(Case{name, good,
                         good ? ""
                              : "status " + std::string(verify::to_string(r.status)) +
                                    " lhs=" + r.lhs + " rhs=" + r.rhs});
  }

  void check_pass(const std::string& name, const CheckResult& r) {
    check_status(name, r, Status::Pass);
  }
};

}  // namespace

std::vector<Case> run() {
  Runner t;

  // modmath
  Modulus m25 = Modulus::make(5, 2);
  Modulus m125 = Modulus::make(5, 3);
  Modulus m9 = Modulus::make(3, 2);
  t.eq("is_prime(2)", modmath::is_prime(2), true);
  t.eq("is_prime(91)", modmath::is_prime(91), false);
  t.eq("is_prime(7919)", modmath::is_prime(7919), true);
  t.eq("primes_in(1,10).size", modmath::primes_in(1, 10).size(), 4);
  t.eq("primes_in(10,20).back", modmath::primes_in(10, 20).back(), 19);
  t.eq("inv(16 mod 25)", Residue(16, m25).inverse().value(), 11);
  t.eq("inv(6 mod 25)", Residue(6, m25).inverse().value(), 21);
  t.eq("inv(1 mod 9)", Residue(1, m9).inverse().value(), 1);
  t.eq("3^4 mod 125", Residue(3, m125).pow(4).value(), 81);
  t.eq("83^2 mod 125", Residue(83, m125).pow(2).value(), 14);
  t.eq("7^0 mod 125", Residue(7, m125).pow(0).value(), 1);
  t.eq("jacobi(3/5)", modmath::jacobi(3, 5), -1);
  t.eq("jacobi(2/7)", modmath::jacobi(2, 7), 1);
  t.eq("jacobi(10/5)", modmath::jacobi(10, 5), 0);
  t.eq("sign_pow_floor(7,5)", modmath::sign_pow_floor(7, 5), -1);
  t.eq("sign_pow_floor(3,5)", modmath::sign_pow_floor(3, 5), 1);
  t.eq("sign_pow_floor(11,5)", modmath::sign_pow_floor(11, 5), 1);

  // binom
  {
    auto cb9 = binom::central_binomials(m9, 5);
    t.eq("central binom k=0 exponent", cb9[0].exponent, 0);
    t.eq("central binom k=0 unit", cb9[0].unit.value(), 1);
    t.eq("central binom(10,5)=3^2*28 exponent", cb9[5].exponent, 2);
    t.eq("central binom(10,5) unit mod 9", cb9[5].unit.value(), 1);
    t.eq("residue_of(binom(10,5)) mod 9", binom::residue_of(cb9[5]).value(), 0);
    Modulus m49 = Modulus::make(7, 2);
    auto cb49 = binom::central_binomials(m49, 3);
    t.eq("central binom(6,3) exponent", cb49[3].exponent, 0);
    t.eq("central binom(6,3) unit", cb49[3].unit.value(), 20);
    t.eq("binom(10,5) mod 3", binom::binom_mod_p(10, 5, 3).value(), 0);
    t.eq("binom(4,2) mod 5", binom::binom_mod_p(4, 2, 5).value(), 1);
    t.eq("binom(8,4) mod 7", binom::binom_mod_p(8, 4, 7).value(), 0);
    t.eq("binom_exact(4,2)", binom::binom_exact(4, 2), 6);
    t.eq("binom_exact(10,5)", binom::binom_exact(10, 5), 252);
    t.eq("binom_exact(40,20)", binom::binom_exact(40, 20), BigInt("137846528820"));
  }

  // sequences
  {
    Modulus big = Modulus::make(1000003, 1);
    t.eq("u_10(1,-1) = F_10", sequences::lucas_u_mod(sequences::kFibonacci, 10, big).value(), 55);
    t.eq("v_3(4,1) = T_3", sequences::lucas_v_mod(sequences::kST, 3, big).value(), 52);
    t.eq("u_0(4,2)", sequences::lucas_u_mod(sequences::kU42, 0, big).value(), 0);
    auto fib = sequences::seq_table_mod(sequences::kFibonacci, 6, big);
    t.ok("fib table", fib.u[5].value() == 5 && fib.u[4].value() == 3);
    auto st = sequences::seq_table_mod(sequences::kST, 5, big);
    t.eq("S table [0,1,4,15,56]", st.u[4].value(), 56);
    auto pell = sequences::seq_table_mod(sequences::kPell, 5, big);
    t.eq("Pell table [0,1,2,5,12]", pell.u[4].value(), 12);
    t.eq("F_20", sequences::seq_u_exact(sequences::kFibonacci, 20), 6765);
    t.eq("L_10", sequences::seq_v_exact(sequences::kFibonacci, 10), 123);
    t.eq("u_1 exact", sequences::seq_u_exact(sequences::kU55, 1), 1);
    auto p3 = sequences::lucas_u_poly(3);
    t.ok("u_3(x,1) = x^2 - 1", p3.size() == 3 && p3[0] == -1 && p3[1] == 0 && p3[2] == 1);
    auto p1 = sequences::lucas_u_poly(1);
    t.ok("u_1(x,1) = 1", p1.size() == 1 && p1[0] == 1);
    auto p5 = sequences::lucas_u_poly(5);
    t.ok("u_5(x,1) = x^4 - 3x^2 + 1",
         p5.size() == 5 && p5[0] == 1 && p5[2] == -3 && p5[4] == 1);
    t.ok("closed form u55 n=3", sequences::closed_form_check(sequences::ClosedForm::U55, 3));
    t.ok("closed form u42 n=2", sequences::closed_form_check(sequences::ClosedForm::U42, 2));
    t.ok("closed form u55 n=0", sequences::closed_form_check(sequences::ClosedForm::U55, 0));
  }

  // quadring
  {
    Modulus m49 = Modulus::make(7, 2);
    auto ring = quadring::golden_ring(m49);
    auto tt = quadring::QuadElement::gen(ring);
    auto one = quadring::QuadElement::from_int(1, ring);
    t.ok("t*t = 1+t", tt * tt == one + tt);
    t.ok("t^4 = 2+3t", tt.pow(4) == quadring::QuadElement(Residue(2, m49), Residue(3, m49), ring));
    t.ok("x^0 = 1", tt.pow(0) == one);
    t.ok("conj(t) = 1-t", tt.conjugate() == one - tt);
    t.ok("conj fixes integers", quadring::QuadElement::from_int(5, ring).conjugate() ==
                                    quadring::QuadElement::from_int(5, ring));
    t.ok("conj involution", (tt + tt + one).conjugate().conjugate() == tt + tt + one);
    auto [c1, c2] = quadring::lemma24_constants(3, ring);
    t.ok("lemma 2.4 class +3", c1 == tt && c2 == one - tt);
    auto [d1, d2] = quadring::lemma24_constants(-3, ring);
    t.ok("lemma 2.4 class -3", d1 == -tt && d2 == tt - one);
    // (1 + sqrt5)/2 = t with sqrt5 = 2t-1
    auto sqrt5 = quadring::QuadElement::root_diff(ring);
    t.ok("(1+sqrt5)/2 = t", (one + sqrt5).half() == tt);

    Modulus m9q = Modulus::make(3, 2);
    auto ring9 = quadring::golden_ring(m9q);
    auto cb = binom::central_binomials(m9q, 2);
    auto [l1, r1] = quadring::lemma21_sides(quadring::QuadElement::from_int(1, ring9), 3, cb);
    t.ok("lemma 2.1 p=3 alpha=1 (0==0)",
         l1 == r1 && l1 == quadring::QuadElement::from_int(0, ring9));
    auto [l2, r2] = quadring::lemma21_sides(quadring::QuadElement::from_int(2, ring9), 3, cb);
    t.ok("lemma 2.1 p=3 alpha=2 (5==5)",
         l2 == r2 && l2 == quadring::QuadElement::from_int(5, ring9));
    auto [l3, r3] = quadring::lemma21_sides(quadring::QuadElement::gen(ring9), 3, cb);
    t.ok("lemma 2.1 p=3 alpha=t", l3 == r3);
  }

  // qpoly
  {
    using qpoly::BigPoly;
    BigPoly onePlusQ(std::vector<BigInt>{1, 1});
    t.eq("(1+q)^2", (onePlusQ * onePlusQ).to_string(), "1 + 2*q + q^2");
    auto [quot, rem] = qpoly::poly_divrem(BigPoly(std::vector<BigInt>{-1, 0, 1}),
                                          BigPoly(std::vector<BigInt>{-1, 1}));
    t.ok("(q^2-1)/(q-1)", quot.to_string() == "1 + q" && rem.is_zero());
    t.ok("0 + p = p", (BigPoly() + onePlusQ) == onePlusQ);
    t.eq("[5]_q", qpoly::q_integer(5).to_string(), "1 + q + q^2 + q^3 + q^4");
    t.eq("[1]_q", qpoly::q_integer(1).to_string(), "1");
    t.ok("[0]_q = 0", qpoly::q_integer(0).is_zero());
    t.eq("[2 1]_q", qpoly::gaussian_binomial(2, 1).to_string(), "1 + q");
    t.eq("[4 2]_q", qpoly::gaussian_binomial(4, 2).to_string(),
         "1 + q + 2*q^2 + q^3 + q^4");
    t.eq("[6 3]_q at q=1", qpoly::gaussian_binomial(6, 3).eval_one(), 20);
    t.eq("F_3(q)", qpoly::schur_q_fibonacci(3).to_string(), "1 + q^2");
    t.eq("F_1(q)", qpoly::schur_q_fibonacci(1).to_string(), "1");
    t.eq("F_4(q)", qpoly::schur_q_fibonacci(4).to_string(), "1 + q^2 + q^3");
    auto s11 = qpoly::conj42_sum(1, 1);
    t.eq("conj42_sum(1,1) shift", s11.shift, -40);
    t.ok("conj42 k=0 term alone", qpoly::conj42_sum(1, 0) ==
                                     qpoly::LaurentPoly{BigPoly(), 0});
    auto five2 = qpoly::q_integer(5) * qpoly::q_integer(5);
    t.ok("conj42_sum(1,1) divisible by [5]_q^2", qpoly::laurent_divisible(s11, five2));
    auto unitShift = qpoly::make_laurent(five2, -7);
    t.ok("unit shift discarded", qpoly::laurent_divisible(unitShift, five2));
    t.ok("1 not divisible by [5]_q^2",
         !qpoly::laurent_divisible(qpoly::LaurentPoly{BigPoly::constant(1), 0}, five2));
  }

  // verify: hand-derived check instances
  {
    using verify::CheckId;
    t.check_pass("T11a p=7 (-2 mod 49)", verify::run_prime_check(CheckId::T11a, 7));
    CheckResult r = verify::run_prime_check(CheckId::T11a, 7);
    t.eq("T11a p=7 lhs", r.lhs, "47");
    // raw sum behind it: 148566 = 49*3032 - 2
    BigInt raw = 0;
    for (int k = 0; k <= 6; ++k) {
      raw += sequences::seq_u_exact(sequences::kFibonacci, 2 * k) * binom::binom_exact(2 * k, k);
    }
    t.eq("T11a p=7 raw sum", raw, 148566);
    t.check_status("T11a p=5 skips", verify::run_prime_check(CheckId::T11a, 5), Status::Skip);

    t.check_pass("T12b p=3 (6 mod 9)", verify::run_prime_check(CheckId::T12b, 3));
    t.eq("T12b p=3 lhs", verify::run_prime_check(CheckId::T12b, 3).lhs, "6");

    t.check_pass("T13a p=5 (-4 mod 25)", verify::run_prime_check(CheckId::T13a, 5));
    t.eq("T13a p=5 lhs", verify::run_prime_check(CheckId::T13a, 5).lhs, "21");
    BigInt raw13 = 0;
    for (int k = 0; k <= 4; ++k) {
      raw13 += sequences::seq_u_exact(sequences::kST, k) * binom::binom_exact(2 * k, k);
    }
    t.eq("T13a p=5 raw sum", raw13, 4246);

    t.check_pass("T14b p=3 (-1 mod 9)", verify::run_prime_check(CheckId::T14b, 3));
    t.eq("T14b p=3 lhs", verify::run_prime_check(CheckId::T14b, 3).lhs, "8");

    t.check_pass("REM1 p=3 (1 mod 3)", verify::run_prime_check(CheckId::REM1, 3));
    t.eq("REM1 p=3 lhs", verify::run_prime_check(CheckId::REM1, 3).lhs, "1");

    // L25 p=7: 2F_5 + F_13 = 243 == -2 (mod 49)
    t.check_pass("L25 p=7", verify::run_lemma_check(CheckId::L25, 7));
    t.eq("2F_5+F_13", 2 * sequences::seq_u_exact(sequences::kFibonacci, 5) +
                          sequences::seq_u_exact(sequences::kFibonacci, 13),
         243);
    t.check_pass("L25 p=11", verify::run_lemma_check(CheckId::L25, 11));
    t.check_pass("L27 p=5", verify::run_lemma_check(CheckId::L27, 5));
    t.check_pass("L21 p=3", verify::run_lemma_check(CheckId::L21, 3));
    t.check_pass("L22 n=2", verify::run_l22(2));

    CheckResult c41a = verify::run_conj41(1);
    t.check_pass("C41 n=1", c41a);
    t.eq("C41 n=1 lhs (4 mod 25)", c41a.lhs, "4");
    CheckResult c41b = verify::run_conj41(2);
    t.check_pass("C41 n=2", c41b);
    t.eq("C41 n=2 lhs (1 mod 25)", c41b.lhs, "1");
    CheckResult c41c = verify::run_conj41(5);
    t.check_pass("C41 n=5", c41c);
    t.eq("C41 n=5 lhs (6 mod 25)", c41c.lhs, "6");

    CheckResult c43a = verify::run_conj43(1);
    t.check_pass("C43 n=1", c43a);
    t.eq("C43 n=1 lhs (-2 mod 9)", c43a.lhs, "7");
    CheckResult c43b = verify::run_conj43(2);
    t.check_pass("C43 n=2", c43b);
    t.eq("C43 n=2 lhs (1 mod 9)", c43b.lhs, "1");

    // C41S divisibility seed: 1 + 4 + 30 + 260 + 2380 = 2675 = 25*107
    BigInt seed = 0;
    for (int k = 0; k < 5; ++k) {
      seed += sequences::seq_u_exact(sequences::kFibonacci, 2 * k + 1) *
              binom::binom_exact(2 * k, k);
    }
    t.eq("C41S a=1 sum", seed, 2675);
    t.eq("C41S a=1 quotient", seed / 25, 107);
    t.check_pass("C41S (1,1)", verify::run_conj41_stability(1, 1));
    t.check_pass("C43S (1,1)", verify::run_conj43_stability(1, 1));

    CheckResult c44 = verify::run_conj44(5);
    t.check_pass("C44 p=5", c44);
    t.eq("C44 p=5 lhs (45 mod 125)", c44.lhs, "45");
    t.check_status("C45 p=5 skips", verify::run_conj45(5), Status::Skip);
    t.check_pass("C46 p=7", verify::run_conj46(7));

    t.check_pass("C42 (1,1)", verify::run_conj42(1, 1));
    t.check_pass("C42 m=0 empty sum", verify::run_conj42(1, 0));
  }

  return std::move(t.cases);
}

}  // namespace fibcong::selftest
