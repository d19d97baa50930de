#pragma once

/**
 * Exact arithmetic substrate.
 *
 * Rational is a canonical (lowest terms, positive denominator) wrapper around
 * GMP rationals.  PadicApprox is a truncated element of Q_p written as
 *
 *     p^shift * unit_residue  (mod p^(shift + precision))
 *
 * with unit_residue a unit modulo p^precision.  Exact zero is a separate
 * sentinel with infinite valuation; it is never stored as a residue class.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kummerlab {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const Integer& num, const Integer& den);

  /// Accepts "n" or "n/d" with optional sign; whitespace is not allowed.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// "num/den", or just "num" when the denominator is 1.
  std::string str() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  struct FromMpq {};
  Rational(mpq_class q, FromMpq) : q_(std::move(q)) { q_.canonicalize(); }
  mpq_class q_;
};

Rational pow(const Rational& base, long exponent);

/// p-adic valuation; infinite for zero.
class Valuation {
 public:
  constexpr explicit Valuation(long v) : value_(v), infinite_(false) {}
  static constexpr Valuation infinity() { return Valuation(); }

  constexpr bool is_infinite() const { return infinite_; }
  /// Throws std::logic_error for the infinite valuation.
  long value() const;

  std::string str() const;

  friend constexpr bool operator==(const Valuation&, const Valuation&) = default;
  friend constexpr std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
    if (a.infinite_ || b.infinite_) return a.infinite_ <=> b.infinite_;
    return a.value_ <=> b.value_;
  }
  friend constexpr bool operator>=(const Valuation& a, long b) { return a >= Valuation(b); }

 private:
  constexpr Valuation() : value_(0), infinite_(true) {}
  long value_;
  bool infinite_;
};

bool is_prime(long n);
/// Primes in [2, bound).
std::vector<long> primes_below(long bound);
/// Throws std::invalid_argument when p is not prime.
void require_prime(long p);

Integer ipow(long base, unsigned long exponent);
Integer ipow(const Integer& base, unsigned long exponent);
/// Nonnegative remainder.
Integer mod(const Integer& a, const Integer& m);
Integer mod_pow(const Integer& base, const Integer& exponent, const Integer& m);
/// Throws std::domain_error when a is not invertible modulo m.
Integer mod_inverse(const Integer& a, const Integer& m);

long val_p(const Integer& n, long p);  // n != 0
Valuation val_p(const Rational& x, long p);

/// Reduction of a p-integral rational modulo p^n.  Throws if x is not p-integral.
Integer residue_mod(const Rational& x, long p, long n);

class PadicApprox {
 public:
  /// Exact zero.
  static PadicApprox zero(long p, long precision);
  /// Normalizing constructor: factors of p in `residue` move into the shift and
  /// consume precision; a residue that vanishes modulo p^precision yields zero.
  PadicApprox(long p, long shift, const Integer& residue, long precision);
  /// Integer known modulo p^absolute_precision.
  static PadicApprox from_residue(long p, const Integer& residue, long absolute_precision);

  long prime() const { return p_; }
  bool is_zero() const { return zero_; }
  Valuation valuation() const { return zero_ ? Valuation::infinity() : Valuation(shift_); }
  long shift() const;  // throws on zero
  const Integer& unit_residue() const { return residue_; }
  long precision() const { return precision_; }
  /// shift + precision; for exact zero this is `precision`, which callers treat as a lower bound.
  long absolute_precision() const { return zero_ ? precision_ : shift_ + precision_; }

  /// Value as an integer modulo p^n; requires shift >= 0 and n <= absolute precision.
  Integer residue_mod(long n) const;
  /// Representative p^shift * unit_residue.
  Rational to_rational() const;
  PadicApprox with_precision(long precision) const;

  /// "p^shift * residue mod p^N", "0" for exact zero.
  std::string str() const;

  PadicApprox operator-() const;
  PadicApprox inverse() const;  // throws on zero
  PadicApprox pow(long exponent) const;

  friend PadicApprox operator+(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator-(const PadicApprox& a, const PadicApprox& b) { return a + (-b); }
  friend PadicApprox operator*(const PadicApprox& a, const PadicApprox& b);
  friend PadicApprox operator/(const PadicApprox& a, const PadicApprox& b) { return a * b.inverse(); }

  /// Structural equality of all fields.
  friend bool operator==(const PadicApprox&, const PadicApprox&) = default;
  /// Agreement at the smaller of the two absolute precisions.
  bool congruent(const PadicApprox& other) const;

 private:
  PadicApprox(long p, long precision);  // zero
  long p_;
  bool zero_ = false;
  long shift_ = 0;
  Integer residue_;
  long precision_;
};

/// Reduction of x into Q_p with relative precision n (the valuation is factored out first).
PadicApprox padic_reduce(const Rational& x, long p, long n);

/// Teichmüller lift of a unit residue: the (p-1)-st root of unity congruent to a mod p.
/// p = 2 is rejected.
PadicApprox teichmuller(const Integer& a, long p, long n);

/// Unit inverse roots of 1 + A_1 X + ... + A_d X^d, i.e. unit solutions of
/// sum_i A_i alpha^(d-i) = 0, lifted to precision n by Newton iteration.
/// The result is sorted by residue.  A unit root that is multiple modulo p
/// raises std::domain_error("non-simple slope-0 segment").
std::vector<PadicApprox> hensel_unit_roots(std::span<const PadicApprox> coeffs, long p, long n);

}  // namespace kummerlab
