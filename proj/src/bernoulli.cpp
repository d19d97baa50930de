#include "kummerlab/bernoulli.hpp"

#include <mutex>
#include <stdexcept>

namespace kummerlab {

namespace {

// B_k from B_0 .. B_{k-1}; odd k >= 3 vanish.
Rational next_bernoulli(const std::vector<Rational>& known) {
  const long k = static_cast<long>(known.size());
  if (k >= 3 && k % 2 == 1) return Rational(0);
  Rational acc(0);
  Integer binom(1);  // C(k+1, i)
  for (long i = 0; i < k; ++i) {
    if (!known[static_cast<size_t>(i)].is_zero()) acc += Rational(binom) * known[static_cast<size_t>(i)];
    binom = binom * (k + 1 - i) / (i + 1);
  }
  return -acc / Rational(k + 1);
}

}  // namespace

Rational BernoulliCache::get(long k) {
  if (k < 0) throw std::invalid_argument("Bernoulli index must be >= 0");
  {
    std::shared_lock lock(mutex_);
    if (k < static_cast<long>(values_.size())) return values_[static_cast<size_t>(k)];
  }
  ensure(k);
  std::shared_lock lock(mutex_);
  return values_[static_cast<size_t>(k)];
}

void BernoulliCache::ensure(long k) {
  std::unique_lock lock(mutex_);
  while (static_cast<long>(values_.size()) <= k) values_.push_back(next_bernoulli(values_));
}

long BernoulliCache::size() const {
  std::shared_lock lock(mutex_);
  return static_cast<long>(values_.size());
}

std::vector<Rational> BernoulliCache::snapshot() const {
  std::shared_lock lock(mutex_);
  return values_;
}

void BernoulliCache::seed(std::vector<Rational> values) {
  std::vector<Rational> checked;
  checked.reserve(values.size());
  checked.emplace_back(1);
  if (values.empty() || values.front() != Rational(1)) throw std::invalid_argument("seed must start with B_0 = 1");
  for (size_t i = 1; i < values.size(); ++i) {
    if (next_bernoulli(checked) != values[i])
      throw std::invalid_argument("seed value for B_" + std::to_string(i) + " fails the recurrence");
    checked.push_back(values[i]);
  }
  std::unique_lock lock(mutex_);
  if (checked.size() > values_.size()) values_ = std::move(checked);
}

BernoulliCache& default_bernoulli_cache() {
  static BernoulliCache cache;
  return cache;
}

Rational bernoulli(long k) { return default_bernoulli_cache().get(k); }

Integer binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Rational bernoulli_poly(long k, const Rational& x) {
  if (k < 0) throw std::invalid_argument("Bernoulli polynomial index must be >= 0");
  default_bernoulli_cache().ensure(k);
  // Horner in x over the coefficients C(k, i) B_i of x^(k-i).
  Rational acc(0);
  for (long i = 0; i <= k; ++i) acc = acc * x + Rational(binomial(k, i)) * bernoulli(i);
  return acc;
}

Integer power_sum(long k, long n) {
  if (k < 0 || n < 1) throw std::invalid_argument("power_sum needs k >= 0 and n >= 1");
  Integer acc = 0;
  for (long j = 1; j < n; ++j) acc += ipow(j, static_cast<unsigned long>(k));
  return acc;
}

Rational power_sum_formula(long k, long n) {
  if (k < 0 || n < 1) throw std::invalid_argument("power_sum needs k >= 0 and n >= 1");
  return (bernoulli_poly(k + 1, Rational(n)) - bernoulli(k + 1)) / Rational(k + 1);
}

Rational zeta_neg(long k) {
  if (k < 0) throw std::invalid_argument("zeta_neg needs k >= 0");
  // -B_1 would give +1/2 under the B_1 = -1/2 convention.
  if (k == 0) return Rational(Integer(-1), Integer(2));
  return -bernoulli(k + 1) / Rational(k + 1);
}

bool sylvester_lipschitz_check(long c, long k) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("Sylvester-Lipschitz check needs even k >= 2");
  const Integer ck = ipow(Integer(c), static_cast<unsigned long>(k));
  const Rational value = Rational(Integer(ck * (ck - 1))) * bernoulli(k) / Rational(k);
  return value.is_integer();
}

}  // namespace kummerlab
