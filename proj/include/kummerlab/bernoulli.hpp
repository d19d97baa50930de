#pragma once

#include "kummerlab/arith.hpp"

#include <filesystem>
#include <shared_mutex>
#include <vector>

namespace kummerlab {

/// Memoized Bernoulli numbers with the convention B_1 = -1/2 (generating
/// function t/(e^t - 1)).  Entries are filled by the recurrence
/// sum_{i=0}^{k} C(k+1, i) B_i = 0.  Safe for concurrent readers.
class BernoulliCache {
 public:
  Rational get(long k);
  /// Computes every B_j with j <= k.
  void ensure(long k);
  /// Number of stored entries (indices 0 .. size()-1).
  long size() const;
  std::vector<Rational> snapshot() const;
  /// Installs precomputed values B_0 .. B_{n-1}; entries are verified against
  /// the recurrence and std::invalid_argument is thrown on mismatch.
  void seed(std::vector<Rational> values);

 private:
  mutable std::shared_mutex mutex_;
  std::vector<Rational> values_{Rational(1)};
};

/// Process-wide cache used by the free functions below.
BernoulliCache& default_bernoulli_cache();

Rational bernoulli(long k);
/// B_k(x) = sum_i C(k, i) B_i x^(k-i).
Rational bernoulli_poly(long k, const Rational& x);
Integer binomial(long n, long k);

/// 1^k + 2^k + ... + (n-1)^k by direct summation.
Integer power_sum(long k, long n);
/// (B_{k+1}(n) - B_{k+1}) / (k+1).
Rational power_sum_formula(long k, long n);

/// zeta(-k) = -B_{k+1}/(k+1) for k >= 1, and zeta(0) = -1/2.
Rational zeta_neg(long k);

/// Whether c^k (c^k - 1) B_k / k is an integer (k even, k >= 2).
bool sylvester_lipschitz_check(long c, long k);

}  // namespace kummerlab
