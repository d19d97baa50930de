#include "doctest.h"

#include "kummerlab/arith.hpp"

#include <random>
#include <stdexcept>

using namespace kummerlab;

namespace {

Rational random_nonzero_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-5000, 5000), den(1, 5000);
  long n = 0;
  while (n == 0) n = num(rng);
  return Rational(Integer(n), Integer(den(rng)));
}

}  // namespace

TEST_CASE("rational parsing and canonical rendering") {
  CHECK(Rational::parse("-691/2730").str() == "-691/2730");
  CHECK(Rational::parse("4/6") == Rational(Integer(2), Integer(3)));
  CHECK(Rational::parse("12").str() == "12");
  CHECK(Rational::parse("+3/9").str() == "1/3");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  CHECK(Rational(Integer(3), Integer(-6)).str() == "-1/2");
}

TEST_CASE("val_p examples") {
  CHECK(val_p(Rational(0), 5).is_infinite());
  CHECK(val_p(Rational(Integer(1), Integer(120)), 5) == Valuation(-1));
  CHECK(val_p(Rational(12), 2) == Valuation(2));
  CHECK_THROWS_AS(val_p(Rational(12), 4), std::invalid_argument);
  CHECK(Valuation::infinity() > Valuation(1000000));
}

TEST_CASE("val_p is additive on products") {
  std::mt19937_64 rng(17);
  for (long p : {2L, 3L, 5L, 7L, 11L}) {
    for (int trial = 0; trial < 300; ++trial) {
      const Rational x = random_nonzero_rational(rng);
      const Rational y = random_nonzero_rational(rng);
      CHECK(val_p(x * y, p).value() == val_p(x, p).value() + val_p(y, p).value());
    }
  }
}

TEST_CASE("padic_reduce examples") {
  CHECK(padic_reduce(Rational(0), 5, 3).is_zero());

  const auto half = padic_reduce(Rational(Integer(1), Integer(2)), 5, 2);
  CHECK(half.shift() == 0);
  CHECK(half.unit_residue() == 13);
  CHECK(half.precision() == 2);

  const auto x = padic_reduce(Rational(Integer(31), Integer(2)), 5, 1);
  CHECK(x.shift() == 0);
  CHECK(x.unit_residue() == 3);

  const auto y = padic_reduce(Rational(Integer(7), Integer(250)), 5, 2);
  CHECK(y.shift() == -3);
  CHECK(y.str() == "5^-3 * 16 mod 5^2");  // 7/2 = 7 * 13 = 91 = 16 mod 25
}

TEST_CASE("padic_reduce respects ring operations") {
  std::mt19937_64 rng(23);
  for (long p : {3L, 5L, 7L}) {
    for (long n : {1L, 3L, 6L}) {
      for (int trial = 0; trial < 100; ++trial) {
        const Rational x = random_nonzero_rational(rng);
        const Rational y = random_nonzero_rational(rng);
        const auto rx = padic_reduce(x, p, n);
        const auto ry = padic_reduce(y, p, n);
        CHECK((rx * ry) == padic_reduce(x * y, p, n));
        // Sums lose precision when the valuations differ; compare at common precision.
        if (!(x + y).is_zero()) CHECK((rx + ry).congruent(padic_reduce(x + y, p, n)));
        CHECK(rx.inverse() == padic_reduce(Rational(1) / x, p, n));
      }
    }
  }
}

TEST_CASE("PadicApprox precision bookkeeping") {
  const auto one = PadicApprox(5, 0, 1, 4);
  const auto five_cubed = PadicApprox(5, 3, 1, 4);
  const auto sum = one + five_cubed;  // 126 known mod 5^4
  CHECK(sum.shift() == 0);
  CHECK(sum.unit_residue() == 126);
  CHECK(sum.precision() == 4);

  const auto small = PadicApprox(5, -2, 3, 2);  // 3/25 mod 5^0
  const auto s2 = one + small;
  CHECK(s2.shift() == -2);
  CHECK(s2.absolute_precision() == 0);

  const auto cancel = PadicApprox(5, 0, 7, 2) - PadicApprox(5, 0, 32, 3);
  CHECK(cancel.is_zero());

  CHECK(PadicApprox(5, 1, 10, 3).shift() == 2);  // 5 * 10 = 2 * 5^2
  CHECK(PadicApprox(5, 1, 10, 3).precision() == 2);
  CHECK(PadicApprox(5, 0, 2, 3).pow(-1).unit_residue() == 63);
  CHECK(PadicApprox(3, 2, 2, 3).to_rational() == Rational(18));
  CHECK(PadicApprox(3, -2, 2, 3).to_rational() == Rational(Integer(2), Integer(9)));
  CHECK(PadicApprox(7, 1, 3, 2).residue_mod(3) == 21);
  CHECK_THROWS_AS(PadicApprox(7, 1, 3, 2).residue_mod(4), std::domain_error);
  CHECK_THROWS_AS(PadicApprox::zero(5, 2).inverse(), std::domain_error);
}

TEST_CASE("teichmuller examples") {
  CHECK(teichmuller(1, 5, 3).unit_residue() == 1);
  CHECK(teichmuller(2, 5, 3).unit_residue() == 57);
  CHECK(teichmuller(4, 5, 2).unit_residue() == 24);
  CHECK_THROWS_AS(teichmuller(5, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(teichmuller(1, 2, 3), std::invalid_argument);
  CHECK_THROWS_AS(teichmuller(1, 9, 3), std::invalid_argument);
}

TEST_CASE("teichmuller lifts are roots of unity congruent to a") {
  for (long p : {3L, 5L, 7L, 11L}) {
    for (long n = 1; n <= 6; ++n) {
      const Integer m = ipow(p, static_cast<unsigned long>(n));
      for (long a = 1; a < p; ++a) {
        const auto w = teichmuller(a, p, n);
        CHECK(mod_pow(w.unit_residue(), Integer(p - 1), m) == 1);
        CHECK(mod(w.unit_residue(), Integer(p)) == a);
      }
    }
  }
}

TEST_CASE("hensel_unit_roots examples") {
  {
    std::vector<PadicApprox> poly{PadicApprox(5, 0, 1, 3), padic_reduce(Rational(-1), 5, 3)};
    const auto roots = hensel_unit_roots(poly, 5, 3);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].unit_residue() == 1);
  }
  {
    std::vector<PadicApprox> poly{padic_reduce(Rational(1), 5, 2), padic_reduce(Rational(-3), 5, 2),
                                  padic_reduce(Rational(5), 5, 2)};
    const auto roots = hensel_unit_roots(poly, 5, 2);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].unit_residue() == 18);
  }
  {
    // 1 - tau(11) X + 11^11 X^2 with tau(11) = 534612.
    std::vector<PadicApprox> poly{padic_reduce(Rational(1), 11, 1), padic_reduce(Rational(-534612), 11, 1),
                                  padic_reduce(Rational(ipow(11, 11)), 11, 1)};
    const auto roots = hensel_unit_roots(poly, 11, 1);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].unit_residue() == 1);
  }
  {
    // (1 - X)^2: double unit root.
    std::vector<PadicApprox> poly{padic_reduce(Rational(1), 5, 2), padic_reduce(Rational(-2), 5, 2),
                                  padic_reduce(Rational(1), 5, 2)};
    CHECK_THROWS_WITH_AS(hensel_unit_roots(poly, 5, 2), "non-simple slope-0 segment", std::domain_error);
  }
  {
    // 1 + 5X^2: no unit roots.
    std::vector<PadicApprox> poly{padic_reduce(Rational(1), 5, 2), PadicApprox::zero(5, 2),
                                  padic_reduce(Rational(5), 5, 2)};
    CHECK(hensel_unit_roots(poly, 5, 2).empty());
  }
  {
    std::vector<PadicApprox> poly{padic_reduce(Rational(2), 5, 2)};
    CHECK_THROWS_AS(hensel_unit_roots(poly, 5, 2), std::invalid_argument);
  }
}

TEST_CASE("hensel roots satisfy the polynomial and match exhaustive search mod p") {
  std::mt19937_64 rng(5);
  for (long p : {3L, 5L, 7L, 11L}) {
    const long n = 4;
    const Integer m = ipow(p, n);
    for (int trial = 0; trial < 60; ++trial) {
      // Random monic-reversed integer polynomial 1 + A1 X + A2 X^2 + A3 X^3.
      std::uniform_int_distribution<long> coef(-60, 60);
      std::vector<long> a{1, coef(rng), coef(rng), coef(rng)};
      if (a[3] % p == 0) a[3] += 1;
      auto eval_mod = [&](long x, long modulus) {
        long acc = 0;
        for (int j = 0; j <= 3; ++j) acc = ((acc * x + a[static_cast<size_t>(j)]) % modulus + modulus) % modulus;
        return acc;
      };
      auto deriv_mod = [&](long x, long modulus) {
        long acc = 0;
        for (int j = 0; j < 3; ++j) acc = ((acc * x + (3 - j) * a[static_cast<size_t>(j)]) % modulus + modulus) % modulus;
        return acc;
      };
      std::vector<long> brute;
      bool multiple = false;
      for (long r = 1; r < p; ++r) {
        if (eval_mod(r, p) == 0) {
          brute.push_back(r);
          if (deriv_mod(r, p) == 0) multiple = true;
        }
      }
      std::vector<PadicApprox> poly;
      for (long c : a) poly.push_back(padic_reduce(Rational(c), p, n));
      if (multiple) {
        CHECK_THROWS_AS(hensel_unit_roots(poly, p, n), std::domain_error);
        continue;
      }
      const auto roots = hensel_unit_roots(poly, p, n);
      REQUIRE(roots.size() == brute.size());
      for (size_t i = 0; i < roots.size(); ++i) {
        const Integer& x = roots[i].unit_residue();
        CHECK(mod(x, Integer(p)) == brute[i]);
        const Integer value = x * x * x + a[1] * x * x + a[2] * x + a[3];
        CHECK(mod(value, m) == 0);
      }
    }
  }
}

TEST_CASE("prime helpers") {
  CHECK(primes_below(20) == std::vector<long>{2, 3, 5, 7, 11, 13, 17, 19});
  CHECK(is_prime(2039));
  CHECK_FALSE(is_prime(2041));  // 13 * 157
  CHECK_THROWS_AS(require_prime(1), std::invalid_argument);
  CHECK(residue_mod(Rational(Integer(1), Integer(2)), 5, 2) == 13);
  CHECK_THROWS_AS(residue_mod(Rational(Integer(1), Integer(5)), 5, 2), std::invalid_argument);
}
