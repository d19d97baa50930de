#include "doctest.h"

#include "kummerlab/bernoulli.hpp"

#include <thread>

using namespace kummerlab;

namespace {

Rational q(long n, long d) { return Rational(Integer(n), Integer(d)); }

// Distinct prime factors by trial division.
std::vector<long> prime_factors(Integer n) {
  std::vector<long> out;
  for (long d = 2; n > 1; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  return out;
}

}  // namespace

TEST_CASE("bernoulli examples") {
  CHECK(bernoulli(0) == Rational(1));
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK(bernoulli(7) == Rational(0));
  CHECK(bernoulli(6) == q(1, 42));
  CHECK(bernoulli(10) == q(5, 66));
}

TEST_CASE("cache entries satisfy the defining recurrence") {
  const auto values = [] {
    default_bernoulli_cache().ensure(40);
    return default_bernoulli_cache().snapshot();
  }();
  for (long k = 1; k <= 40; ++k) {
    Rational acc(0);
    for (long i = 0; i <= k; ++i) acc += Rational(binomial(k + 1, i)) * values[static_cast<size_t>(i)];
    CHECK(acc.is_zero());
  }
}

TEST_CASE("bernoulli_poly examples") {
  CHECK(bernoulli_poly(0, q(7, 3)) == Rational(1));
  CHECK(bernoulli_poly(2, Rational(0)) == q(1, 6));
  CHECK(bernoulli_poly(2, q(1, 2)) == q(-1, 12));
  CHECK(bernoulli_poly(1, Rational(1)) == q(1, 2));
}

TEST_CASE("power_sum examples") {
  CHECK(power_sum(1, 5) == 10);
  CHECK(power_sum(2, 4) == 14);
  CHECK(power_sum(3, 10) == 2025);
  CHECK(power_sum_formula(3, 10) == Rational(2025));
  CHECK(power_sum(0, 1) == 0);
}

TEST_CASE("power sums agree with the Bernoulli polynomial formula") {
  for (long k = 1; k <= 12; ++k)
    for (long n = 1; n <= 50; ++n) CHECK(Rational(power_sum(k, n)) == power_sum_formula(k, n));
  // For k = 0 the formula also counts the n = 0 term 0^0 = 1.
  for (long n = 1; n <= 50; ++n) CHECK(Rational(power_sum(0, n) + 1) == power_sum_formula(0, n));
}

TEST_CASE("zeta at negative integers") {
  CHECK(zeta_neg(0) == q(-1, 2));
  CHECK(zeta_neg(1) == q(-1, 12));
  CHECK(zeta_neg(3) == q(1, 120));
  CHECK(zeta_neg(2) == Rational(0));
  for (long j = 1; j <= 20; ++j) CHECK(zeta_neg(2 * j).is_zero());
}

TEST_CASE("von Staudt-Clausen denominators") {
  for (long k = 2; k <= 60; k += 2) {
    Integer expected = 1;
    for (long p = 2; p <= k + 1; ++p)
      if (is_prime(p) && k % (p - 1) == 0) expected *= p;
    CHECK(bernoulli(k).den() == expected);
    // Square-free with exactly those primes.
    auto factors = prime_factors(bernoulli(k).den());
    for (long p : factors) CHECK(k % (p - 1) == 0);
  }
}

TEST_CASE("Sylvester-Lipschitz integrality") {
  CHECK(sylvester_lipschitz_check(2, 2));
  CHECK(sylvester_lipschitz_check(3, 4));
  for (long k = 2; k <= 60; k += 2) CHECK(sylvester_lipschitz_check(1, k));
  for (long c = -3; c <= 10; ++c)
    for (long k = 2; k <= 60; k += 2) CHECK(sylvester_lipschitz_check(c, k));
  // The c^k (c^k - 1) factor is what clears the denominator.
  CHECK_FALSE((bernoulli(12) / Rational(12)).is_integer());
  CHECK_THROWS_AS(sylvester_lipschitz_check(2, 3), std::invalid_argument);
}

TEST_CASE("seed validation and concurrent reads") {
  BernoulliCache cache;
  cache.seed({Rational(1), q(-1, 2), q(1, 6)});
  CHECK(cache.size() == 3);
  CHECK_THROWS_AS(cache.seed({Rational(1), q(1, 2)}), std::invalid_argument);

  std::vector<std::thread> workers;
  std::vector<Rational> seen(8);
  for (int t = 0; t < 8; ++t)
    workers.emplace_back([&cache, &seen, t] { seen[static_cast<size_t>(t)] = cache.get(30 + 2 * t); });
  for (auto& w : workers) w.join();
  for (int t = 0; t < 8; ++t) CHECK(seen[static_cast<size_t>(t)] == bernoulli(30 + 2 * t));
}
