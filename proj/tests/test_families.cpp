#include "doctest.h"

#include "kummerlab/bernoulli.hpp"
#include "kummerlab/families.hpp"
#include "kummerlab/motives.hpp"
#include "kummerlab/padic_zeta.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

using namespace kummerlab;

namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

DirichletCharacter quadratic_mod(long p) {
  for (const auto& chi : characters_mod(p))
    if (chi.order() == 2) return chi;
  throw std::logic_error("no quadratic character");
}

WeightedPoint trivial_point(long k, long c, long p, const Rational& b) {
  return {{DirichletCharacter::trivial(1), {}, k}, CyclotomicNumber(regularized_zeta(k, c, p)), CyclotomicNumber(b)};
}

WeightedPoint moment_point(const DirichletCharacter& chi, long k, long c, long p, const CyclotomicNumber& b) {
  return {{chi, {}, k}, mazur_moment(chi, k, c, p), b};
}

// sigma_{k-1} with the p-part removed, straight from the definition.
Integer depleted_divisor_sum(long n, long k, long p) {
  Integer s = 0;
  for (long d = 1; d <= n; ++d)
    if (n % d == 0 && d % p != 0) s += ipow(d, static_cast<unsigned long>(k - 1));
  return s;
}

}  // namespace

TEST_CASE("generalized Kummer check examples") {
  // Fermat: x^5 = x on units, and -1 - (-781) = 780.
  std::vector<WeightedPoint> pts{trivial_point(1, 2, 5, Rational(-1)), trivial_point(5, 2, 5, Rational(1))};
  auto r = generalized_kummer_check(pts, 5, 1);
  CHECK(r.precondition_holds);
  CHECK(r.conclusion_holds);
  CHECK(r.sum == CyclotomicNumber(Rational(-780)));
  CHECK(r.attained_valuation == Valuation(1));
  CHECK(r.valuation_shift == Valuation(0));
  CHECK(r.wild_level == 0);

  // All coefficients zero.
  for (auto& wp : pts) wp.coefficient = CyclotomicNumber(Rational(0));
  r = generalized_kummer_check(pts, 5, 1);
  CHECK(r.precondition_holds);
  CHECK(r.conclusion_holds);
  CHECK(r.attained_valuation.is_infinite());

  // chi(x) x = x^3 mod 5 by Euler's criterion.
  const auto chi = quadratic_mod(5);
  std::vector<WeightedPoint> quad{moment_point(chi, 1, 2, 5, CyclotomicNumber(Rational(1))),
                                  trivial_point(3, 2, 5, Rational(-1))};
  r = generalized_kummer_check(quad, 5, 1);
  CHECK(r.wild_level == 1);
  CHECK(r.precondition_holds);
  CHECK(r.conclusion_holds);
  CHECK(r.sum == CyclotomicNumber(frac(-35, 2)));
  // Not mod 25.
  r = generalized_kummer_check(quad, 5, 2);
  CHECK_FALSE(r.precondition_holds);

  // A lone x^1 fails the precondition.
  r = generalized_kummer_check({trivial_point(1, 2, 5, Rational(1))}, 5, 1);
  CHECK_FALSE(r.precondition_holds);

  // Empty input holds vacuously.
  r = generalized_kummer_check({}, 5, 3);
  CHECK(r.precondition_holds);
  CHECK(r.conclusion_holds);

  CHECK_THROWS_AS(generalized_kummer_check({moment_point(quadratic_mod(3), 1, 2, 5, CyclotomicNumber(Rational(1)))}, 5, 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(generalized_kummer_check({trivial_point(1, 2, 5, frac(1, 5))}, 5, 1), std::invalid_argument);
}

TEST_CASE("negative exponents use the inverse") {
  // x^-1 = x^3 mod 5 on units.
  std::vector<WeightedPoint> pts{{{DirichletCharacter::trivial(1), {0}, -1}, CyclotomicNumber(Rational(5)), CyclotomicNumber(Rational(1))},
                                 {{DirichletCharacter::trivial(1), {0}, 3}, CyclotomicNumber(Rational(0)), CyclotomicNumber(Rational(-1))}};
  CHECK(generalized_kummer_check(pts, 5, 1).precondition_holds);
  CHECK_FALSE(generalized_kummer_check(pts, 5, 2).precondition_holds);
}

TEST_CASE("GL(1) combinations from Fermat-quotient identities pass") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> kdist(0, 40), shift(1, 3), num(-20, 20), den(1, 6), npairs(1, 3), pick(0, 100);
  for (long p : {3L, 5L}) {
    const auto chars = characters_mod(p);
    for (long n = 1; n <= 2; ++n) {
      const long period = (p - 1) * ipow(p, static_cast<unsigned long>(n - 1)).get_si();
      for (int trial = 0; trial < 15; ++trial) {
        std::vector<WeightedPoint> pts;
        const long pairs = npairs(rng);
        for (long j = 0; j < pairs; ++j) {
          const auto& chi = chars[static_cast<size_t>(pick(rng)) % chars.size()];
          long q = den(rng);
          while (q % p == 0) ++q;
          const CyclotomicNumber b(frac(num(rng), q));
          const long k = kdist(rng), k2 = k + period * shift(rng);
          pts.push_back(moment_point(chi, k, 2, p, b));
          pts.push_back(moment_point(chi, k2, 2, p, -b));
        }
        const auto r = generalized_kummer_check(pts, p, n);
        CHECK(r.precondition_holds);
        CHECK(r.conclusion_holds);
      }
    }
  }
}

TEST_CASE("Eisenstein q-expansion examples") {
  const auto e6 = eisenstein_qexp(6, 5, 3);
  REQUIRE(e6.coeffs.size() == 4);
  CHECK(e6.coeffs[0] == frac(781, 126));
  CHECK(e6.coeffs[1] == Rational(1));
  CHECK(e6.coeffs[2] == Rational(33));
  CHECK(e6.coeffs[3] == Rational(244));
  CHECK(eisenstein_qexp(10, 5, 1).coeffs[0] == frac(488281, 66));
  // The constant term is the depleted zeta value (1 - p^(k-1)) zeta(1-k) / 2.
  for (long k : {6L, 10L, 14L, 18L})
    CHECK(eisenstein_qexp(k, 5, 1).coeffs[0] ==
          (Rational(1) - Rational(ipow(5, static_cast<unsigned long>(k - 1)))) * zeta_neg(k - 1) / Rational(2));

  CHECK_THROWS_AS(eisenstein_qexp(8, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_qexp(5, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_qexp(2, 7, 3), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_qexp(6, 4, 3), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_qexp(6, 5, 0), std::invalid_argument);
}

TEST_CASE("Eisenstein coefficients are multiplicative divisor sums") {
  for (long p : {5L, 7L, 11L})
    for (long k : {4L, 6L, 8L, 12L}) {
      if (k % (p - 1) == 0) continue;
      const auto e = eisenstein_qexp(k, p, 120);
      for (long n = 1; n <= 120; ++n) CHECK(e.coeffs[static_cast<size_t>(n)] == Rational(depleted_divisor_sum(n, k, p)));
      for (long m = 2; m <= 120; ++m)
        for (long n = m + 1; m * n <= 120; ++n)
          if (std::gcd(m, n) == 1)
            CHECK(e.coeffs[static_cast<size_t>(m * n)] == e.coeffs[static_cast<size_t>(m)] * e.coeffs[static_cast<size_t>(n)]);
    }
}

TEST_CASE("Coleman congruence check") {
  const auto e6 = eisenstein_qexp(6, 5, 30), e10 = eisenstein_qexp(10, 5, 30);
  const auto r = coleman_congruence_check(e6, e10, 0, 30);
  CHECK(r.holds);
  CHECK(r.failing_indices.empty());
  CHECK(r.min_valuation == Valuation(1));
  CHECK(e10.coeffs[2] - e6.coeffs[2] == Rational(480));
  CHECK(e6.coeffs[0] - e10.coeffs[0] == frac(-10245310, 1386));
  CHECK(val_p(e6.coeffs[0] - e10.coeffs[0], 5) == Valuation(1));

  for (long n = 0; n <= 3; ++n) CHECK(coleman_congruence_check(e6, e6, n, 30).holds);
  CHECK(coleman_congruence_check(e6, e6, 2, 30).min_valuation.is_infinite());

  // 6 and 26 differ by 4 * 5.
  const auto e26 = eisenstein_qexp(26, 5, 30);
  const auto r2 = coleman_congruence_check(e6, e26, 1, 30);
  CHECK(r2.holds);
  CHECK(r2.min_valuation >= 2);

  CHECK_THROWS_AS(coleman_congruence_check(e6, e10, 1, 30), std::invalid_argument);
  CHECK_THROWS_AS(coleman_congruence_check(e6, eisenstein_qexp(12, 7, 30), 0, 30), std::invalid_argument);
  CHECK_THROWS_AS(coleman_congruence_check(e6, e10, 0, 31), std::invalid_argument);

  // A perturbed coefficient is reported.
  auto bad = e10;
  bad.coeffs[7] += Rational(1);
  const auto r3 = coleman_congruence_check(e6, bad, 0, 30);
  CHECK_FALSE(r3.holds);
  CHECK(r3.failing_indices == std::vector<long>{7});
  CHECK(r3.min_valuation == Valuation(0));

  auto nonintegral = e10;
  nonintegral.coeffs[3] = frac(1, 5);
  CHECK_THROWS_AS(coleman_congruence_check(e6, nonintegral, 0, 30), std::invalid_argument);
}

TEST_CASE("Eisenstein family sweeps") {
  const auto r = eisenstein_family_check(5, 2, 50, 50);
  CHECK(r.failures.empty());
  CHECK(r.pairs_checked == 66);
  CHECK(r.min_valuation_margin == Valuation(0));
  for (long branch : {2L, 4L}) {
    const auto r7 = eisenstein_family_check(7, branch, 60, 40);
    CHECK(r7.failures.empty());
    CHECK(r7.min_valuation_margin >= 0);
  }
  CHECK(eisenstein_family_check(13, 6, 80, 30).failures.empty());
  CHECK_THROWS_AS(eisenstein_family_check(5, 0, 50, 50), std::invalid_argument);
  CHECK_THROWS_AS(eisenstein_family_check(7, 3, 50, 50), std::invalid_argument);
}

TEST_CASE("Dirichlet family sweeps") {
  for (long p : {3L, 5L, 7L})
    for (long branch = 0; branch < p - 1; ++branch) {
      const auto r = dirichlet_family_check(p, branch, 2, 60);
      CHECK(r.failures.empty());
      CHECK(r.pairs_checked > 0);
      CHECK(r.min_valuation_margin >= 0);
    }
  CHECK(dirichlet_family_check(5, 1, 3, 60).failures.empty());
  CHECK_THROWS_AS(dirichlet_family_check(5, 1, 5, 60), std::invalid_argument);
}

TEST_CASE("Delta ordinarity scan") {
  CHECK(delta_ordinarity_scan(12) == std::vector<long>{2, 3, 5, 7});
  CHECK(delta_ordinarity_scan(3) == std::vector<long>{2});
  CHECK(delta_ordinarity_scan(2).empty());
  CHECK(delta_ordinarity_scan(2041) == std::vector<long>{2, 3, 5, 7});
  const auto tau = tau_table(100);
  CHECK(delta_ordinarity_scan(101, tau) == std::vector<long>{2, 3, 5, 7});
  CHECK_THROWS_AS(delta_ordinarity_scan(200, tau), std::invalid_argument);
}
