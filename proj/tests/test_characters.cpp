#include "doctest.h"

#include "kummerlab/bernoulli.hpp"
#include "kummerlab/characters.hpp"

#include <numeric>
#include <stdexcept>

using namespace kummerlab;

namespace {

Rational frac(long n, long d) { return Rational(Integer(n), Integer(d)); }

DirichletCharacter quadratic_mod(long p) {
  for (const auto& chi : characters_mod(p))
    if (chi.order() == 2) return chi;
  throw std::logic_error("no quadratic character");
}

// Distribution relation: for any multiple F of the conductor,
// B_{k,chi} = F^(k-1) sum_{a=1}^{F} chi(a) B_k(a/F), chi read periodically
// with period f.  Independent of the f-term formula in the library.
CyclotomicNumber gen_bernoulli_oracle(long k, const DirichletCharacter& chi, long multiple) {
  const DirichletCharacter psi = chi.primitive();
  const long big = psi.modulus() * multiple;
  CyclotomicNumber sum(psi.order());
  for (long a = 1; a <= big; ++a) {
    const auto e = psi.exponent_at(a);
    if (e) sum += CyclotomicNumber::root_of_unity(psi.order(), *e) * CyclotomicNumber(bernoulli_poly(k, frac(a, big)));
  }
  return sum * CyclotomicNumber(Rational(ipow(big, static_cast<unsigned long>(k - 1))));
}

}  // namespace

TEST_CASE("generators of unit groups") {
  CHECK(unit_group_generators(1).empty());
  CHECK(unit_group_generators(2).empty());
  CHECK(unit_group_generators(5) == std::vector<GeneratorImage>{{2, 4, 0}});
  CHECK(unit_group_generators(25) == std::vector<GeneratorImage>{{2, 20, 0}});
  CHECK(unit_group_generators(8) == std::vector<GeneratorImage>{{7, 2, 0}, {5, 2, 0}});
  // 15: generator 2 mod 3 lifted to 11, generator 2 mod 5 lifted to 7.
  CHECK(unit_group_generators(15) == std::vector<GeneratorImage>{{11, 2, 0}, {7, 4, 0}});
  CHECK_THROWS_AS(unit_group_generators(48), std::invalid_argument);
  CHECK_THROWS_AS(unit_group_generators(0), std::invalid_argument);
  // 3 is the least primitive root mod 7 but 3^6 != 1 mod 49 so it also works mod 49.
  CHECK(unit_group_generators(49)[0].generator == 3);
  CHECK(primitive_root(5) == 2);
  CHECK(primitive_root(7) == 3);
  CHECK(primitive_root(23) == 5);
}

TEST_CASE("character counts and orders") {
  CHECK(characters_mod(1).size() == 1);
  const auto mod5 = characters_mod(5);
  REQUIRE(mod5.size() == 4);
  CHECK(mod5[0].order() == 1);
  CHECK(mod5[1].order() == 2);
  CHECK(mod5[2].order() == 4);
  CHECK(mod5[3].order() == 4);

  const auto mod8 = characters_mod(8);
  REQUIRE(mod8.size() == 4);
  CHECK(mod8[0].is_trivial());
  for (int i = 1; i < 4; ++i) CHECK(mod8[i].order() == 2);

  for (long m = 1; m <= 40; ++m) {
    const auto chars = characters_mod(m);
    CHECK(chars.size() == euler_phi(static_cast<unsigned>(m)));
    long primitive = 0;
    for (const auto& chi : chars) primitive += chi.is_primitive();
    // Number of primitive characters is the Dirichlet convolution mu * phi.
    long expected = 0;
    for (long d = 1; d <= m; ++d) {
      if (m % d != 0) continue;
      long n = m / d, mu = 1;
      for (long q = 2; q * q <= n; ++q) {
        if (n % q != 0) continue;
        n /= q;
        mu = (n % q == 0) ? 0 : -mu;
        if (mu == 0) break;
      }
      if (mu != 0 && n > 1) mu = -mu;
      expected += mu * euler_phi(static_cast<unsigned>(d));
    }
    CHECK_MESSAGE(primitive == expected, "m = " << m);
  }
}

TEST_CASE("character values") {
  const auto chi = quadratic_mod(5);
  CHECK(chi.evaluate(2) == CyclotomicNumber(Rational(-1)));
  CHECK(chi.evaluate(4) == CyclotomicNumber(Rational(1)));
  CHECK(chi.evaluate(10).is_zero());
  CHECK(chi.evaluate(-1) == CyclotomicNumber(Rational(1)));
  CHECK(chi.is_even());

  const auto mod4 = characters_mod(4);
  CHECK_FALSE(mod4[1].is_even());
  CHECK(mod4[1].evaluate(3) == CyclotomicNumber(Rational(-1)));

  const auto quartic = characters_mod(5)[2];
  const auto i4 = quartic.evaluate(2);
  CHECK(i4 * i4 == CyclotomicNumber(Rational(-1)));
}

TEST_CASE("complete multiplicativity") {
  for (long m : {1L, 7L, 8L, 9L, 12L, 15L, 16L, 21L, 24L, 25L, 27L}) {
    for (const auto& chi : characters_mod(m)) {
      for (long a = 0; a < m; ++a)
        for (long b = 0; b < m; ++b) {
          const auto ea = chi.exponent_at(a), eb = chi.exponent_at(b), eab = chi.exponent_at(a * b);
          CHECK((ea && eb) == eab.has_value());
          if (eab) CHECK((*ea + *eb) % chi.order() == *eab);
        }
      // Orthogonality: sum over a residue system vanishes unless trivial.
      CyclotomicNumber total(chi.order());
      for (long a = 0; a < m; ++a) total += chi.evaluate(a);
      CHECK(total == CyclotomicNumber(Rational(chi.is_trivial() ? euler_phi(static_cast<unsigned>(m)) : 0)));
    }
  }
}

TEST_CASE("conductors and primitive characters") {
  CHECK(DirichletCharacter::trivial(25).conductor() == 1);
  CHECK(DirichletCharacter::trivial(25).primitive() == DirichletCharacter::trivial(1));

  const auto quad3 = quadratic_mod(3);
  bool found = false;
  for (const auto& chi : characters_mod(15)) {
    if (chi.order() == 2 && chi.conductor() == 3) {
      found = true;
      CHECK(chi.primitive() == quad3);
    }
  }
  CHECK(found);

  for (long m : {9L, 12L, 16L, 20L, 24L, 25L, 27L}) {
    for (const auto& chi : characters_mod(m)) {
      const auto psi = chi.primitive();
      CHECK(psi.is_primitive());
      CHECK(psi.modulus() == chi.conductor());
      CHECK(psi.order() == chi.order());
      for (long a = 1; a < m; ++a)
        if (std::gcd(a, m) == 1) CHECK(psi.evaluate(a) == chi.evaluate(a));
    }
  }
  // Odd characters mod 8 have conductor 4 or 8; the one trivial on 5 has conductor 4.
  long conductor4 = 0;
  for (const auto& chi : characters_mod(8)) conductor4 += chi.conductor() == 4;
  CHECK(conductor4 == 1);
}

TEST_CASE("Gauss sums") {
  const auto g5 = gauss_sum(quadratic_mod(5));
  CHECK(g5 * g5 == CyclotomicNumber(Rational(5)));
  const auto g3 = gauss_sum(quadratic_mod(3));
  CHECK(g3 * g3 == CyclotomicNumber(Rational(-3)));
  CHECK(gauss_sum(DirichletCharacter::trivial(1)) == CyclotomicNumber(Rational(1)));
  CHECK_THROWS_AS(gauss_sum(DirichletCharacter::trivial(5)), std::invalid_argument);

  for (long m = 1; m <= 25; ++m) {
    for (const auto& chi : characters_mod(m)) {
      if (!chi.is_primitive()) continue;
      const auto g = gauss_sum(chi);
      const Rational sign(chi.is_even() ? 1 : -1);
      CHECK_MESSAGE(g * gauss_sum(chi.conj()) == CyclotomicNumber(sign * Rational(m)), "m = " << m);
      CHECK(g * g.conj() == CyclotomicNumber(Rational(m)));
    }
  }
}

TEST_CASE("generalized Bernoulli numbers") {
  CHECK(gen_bernoulli(2, quadratic_mod(5)) == CyclotomicNumber(frac(4, 5)));
  CHECK(gen_bernoulli(1, characters_mod(4)[1]) == CyclotomicNumber(frac(-1, 2)));
  CHECK(gen_bernoulli(1, DirichletCharacter::trivial()) == CyclotomicNumber(frac(1, 2)));
  CHECK(gen_bernoulli(4, DirichletCharacter::trivial(7)) == CyclotomicNumber(bernoulli(4)));
  CHECK_THROWS_AS(gen_bernoulli(0, quadratic_mod(5)), std::invalid_argument);

  for (long m : {3L, 5L, 7L, 8L, 9L, 12L, 13L}) {
    for (const auto& chi : characters_mod(m))
      for (long k = 1; k <= 5; ++k)
        CHECK(gen_bernoulli(k, chi) == gen_bernoulli_oracle(k, chi, 3));
  }
}

TEST_CASE("parity vanishing of B_{k,chi}") {
  for (long m = 1; m <= 12; ++m) {
    for (const auto& chi : characters_mod(m)) {
      for (long k = 1; k <= 8; ++k) {
        if (k == 1 && chi.primitive().is_trivial()) continue;
        const bool parity_matches = chi.is_even() == (k % 2 == 0);
        if (!parity_matches) CHECK_MESSAGE(gen_bernoulli(k, chi).is_zero(), "m = " << m << ", k = " << k);
      }
    }
  }
}

TEST_CASE("L-values at non-positive integers") {
  CHECK(dirichlet_L_neg(0, characters_mod(4)[1]) == CyclotomicNumber(frac(1, 2)));
  CHECK(dirichlet_L_neg(1, quadratic_mod(5)) == CyclotomicNumber(frac(-2, 5)));
  CHECK(dirichlet_L_neg(0, DirichletCharacter::trivial(9)) == CyclotomicNumber(frac(-1, 2)));
  CHECK(dirichlet_L_neg(3, DirichletCharacter::trivial()) == CyclotomicNumber(frac(1, 120)));
  // L(0, chi) for the odd quadratic character mod 3 is h/w * 2 = 1/3.
  CHECK(dirichlet_L_neg(0, quadratic_mod(3)) == CyclotomicNumber(frac(1, 3)));
  CHECK_THROWS_AS(dirichlet_L_neg(-1, quadratic_mod(3)), std::invalid_argument);
}

TEST_CASE("p-adic divisibility of cyclotomic values") {
  const auto z = CyclotomicNumber::root_of_unity(5, 1);
  CHECK(padic_divisibility(CyclotomicNumber(Rational(5)) * (CyclotomicNumber(Rational(1)) + z), 5, 3) == 1);
  CHECK(padic_divisibility(CyclotomicNumber(5), 5, 3) == 3);
  CHECK(padic_divisibility(CyclotomicNumber(Rational(250)), 5, 2) == 2);
  CHECK_THROWS_AS(padic_divisibility(CyclotomicNumber(frac(1, 5)), 5, 2), std::invalid_argument);
}

TEST_CASE("embedding roots of unity in Z_p") {
  // zeta_4 -> omega(2) mod 25 = 2^5 mod 25.
  CHECK(embed_root_of_unity(4, 1, 5, 2).unit_residue() == 7);
  CHECK(embed_root_of_unity(2, 1, 5, 3).unit_residue() == 124);
  CHECK(embed_root_of_unity(1, 0, 7, 2).unit_residue() == 1);
  CHECK_THROWS_AS(embed_root_of_unity(3, 1, 5, 2), std::invalid_argument);
  CHECK_THROWS_AS(embed_root_of_unity(1, 0, 2, 2), std::invalid_argument);

  // Embedded character values are multiplicative and reduce to the values mod p.
  for (long p : {5L, 7L, 13L}) {
    for (const auto& chi : characters_mod(p)) {
      for (long a = 1; a < p; ++a) {
        const auto v = embed_root_of_unity(chi.order(), *chi.exponent_at(a), p, 4);
        const auto w = embed_root_of_unity(chi.order(), *chi.exponent_at(a * a), p, 4);
        CHECK(v * v == w);
      }
    }
  }
}
