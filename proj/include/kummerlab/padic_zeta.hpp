#pragma once

#include "kummerlab/arith.hpp"
#include "kummerlab/characters.hpp"

#include <span>
#include <vector>

namespace kummerlab {

/// (1 - p^k)(1 - c^(k+1)) zeta(-k).  Requires c > 1 and gcd(c, p) = 1.
Rational regularized_zeta(long k, long c, long p);

struct KummerReport {
  long p;
  long c;
  long m;
  bool precondition_holds;
  bool congruence_holds;
  Valuation attained_valuation;
  Rational sum;
};

/// h = alpha_0 + alpha_1 x + ... with p-integral coefficients.  The
/// precondition h(x) = 0 mod p^m is checked over every residue x mod p^m, so
/// p^m is capped at 10^7.
KummerReport kummer_check(std::span<const Rational> h, long c, long p, long m);

/// Integral of chi * x^k against the c-regularized measure:
/// (1 - psi(p) p^k)(1 - psi(c) c^(k+1)) L(-k, psi) with psi the primitive
/// character behind chi.  The conductor must be a power of p.
CyclotomicNumber mazur_moment(const DirichletCharacter& chi, long k, long c, long p);

/// Measure of a + p^r Z_p by character orthogonality over characters mod p^r.
/// Odd p only.
Rational measure_of_ball(long a, long r, long c, long p);

/// sum_{n <= degree} c_n T^n with each c_n known modulo p^precision (absolute).
class TruncatedPowerSeries {
 public:
  TruncatedPowerSeries(long p, long precision, std::vector<PadicApprox> coeffs);
  /// The constant series 1.
  static TruncatedPowerSeries one(long p, long precision, long degree = 0);

  long prime() const { return p_; }
  long precision() const { return precision_; }
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<PadicApprox>& coeffs() const { return coeffs_; }

  /// Results are truncated at the smaller degree and precision of the operands.
  friend TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  friend TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b);
  /// Coefficients agree modulo p^precision.
  bool congruent(const TruncatedPowerSeries& other) const;

  std::string str() const;

 private:
  long p_;
  long precision_;
  std::vector<PadicApprox> coeffs_;
};

/// Signed Stirling numbers of the first kind s(n, j), 0 <= j <= n <= degree:
/// x(x-1)...(x-n+1) = sum_j s(n, j) x^j.
std::vector<std::vector<Integer>> stirling_first_kind(long degree);

/// From moments m_j = int x^j dmu (j = 0..D) to f(T) = int (1+T)^x dmu, with
/// c_n = int binom(x, n) dmu = (sum_j s(n, j) m_j) / n!.  Rejects D with
/// v_p(D!) >= n, where no digits of c_D would survive.
TruncatedPowerSeries amice_transform(std::span<const PadicApprox> moments, long p, long n);

/// f((1+p)^(k-1) - 1) modulo p^n.  When the degree is too small for the
/// requested precision, std::invalid_argument names the required degree.
PadicApprox specialize(const TruncatedPowerSeries& f, long k, long p, long n);

/// Lowers the absolute precision of x to at most n.
PadicApprox truncate_absolute(const PadicApprox& x, long n);

}  // namespace kummerlab
