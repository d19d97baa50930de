#pragma once

#include "kummerlab/arith.hpp"

#include <vector>

namespace kummerlab {

/// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first,
/// from the Möbius product prod_{d | n} (x^d - 1)^mu(n/d).  Memoized.
const std::vector<Integer>& cyclotomic_polynomial(unsigned n);

unsigned euler_phi(unsigned n);

/// Element of Q(zeta_n) in the power basis 1, zeta, ..., zeta^(phi(n)-1),
/// reduced modulo the n-th cyclotomic polynomial.  Operands of different
/// orders are lifted to Q(zeta_lcm) before combining.
class CyclotomicNumber {
 public:
  /// Zero in Q(zeta_order).
  explicit CyclotomicNumber(unsigned order = 1);
  /// Any coefficient list in powers of zeta_order; it is reduced on construction.
  CyclotomicNumber(unsigned order, std::vector<Rational> coeffs);
  CyclotomicNumber(const Rational& r, unsigned order = 1);  // NOLINT(google-explicit-constructor)

  static CyclotomicNumber root_of_unity(unsigned order, long exponent);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Throws std::domain_error unless the value is rational.
  Rational to_rational() const;

  /// Same value in Q(zeta_m); m must be a multiple of order().
  CyclotomicNumber in_order(unsigned m) const;
  /// Complex conjugation zeta -> zeta^-1.
  CyclotomicNumber conj() const;

  /// Coefficients joined with their powers, e.g. "1/2 + 3*z^2" with z = zeta_n.
  std::string str() const;

  CyclotomicNumber operator-() const;
  friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
  friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
  CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
  CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }

  /// Value equality, independent of the order used to represent either side.
  friend bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b);

 private:
  void reduce();
  unsigned order_;
  std::vector<Rational> coeffs_;
};

/// Accumulates sum_e c_e zeta_order^e with a single reduction at the end.
class CyclotomicAccumulator {
 public:
  explicit CyclotomicAccumulator(unsigned order);
  void add(long exponent, const Rational& coefficient);
  CyclotomicNumber value() const;

 private:
  unsigned order_;
  std::vector<Rational> by_exponent_;
};

/// Coordinatewise p-adic valuation in the power basis: the minimum over
/// coordinates, infinite for zero.
Valuation coordinate_valuation(const CyclotomicNumber& x, long p);

/// Largest e <= n such that every power-basis coordinate of x lies in p^e Z.
/// Coordinates must be p-integral.
long padic_divisibility(const CyclotomicNumber& x, long p, long n);

}  // namespace kummerlab
