#pragma once

#include "kummerlab/arith.hpp"
#include "kummerlab/characters.hpp"

#include <string>
#include <vector>

namespace kummerlab {

/// chi * eta * x_p^m.  eta is an opaque weight-direction label.
struct ArithmeticPoint {
  DirichletCharacter chi;
  std::vector<long> eta;
  long m;

  friend bool operator==(const ArithmeticPoint&, const ArithmeticPoint&) = default;
};

struct WeightedPoint {
  ArithmeticPoint point;
  CyclotomicNumber value;
  CyclotomicNumber coefficient;
};

struct GeneralizedKummerReport {
  long p;
  long n;
  long wild_level;  // r: the largest v_p(conductor)
  bool precondition_holds;
  bool conclusion_holds;
  Valuation attained_valuation;  // coordinatewise, of sum b_P value_P
  Valuation valuation_shift;     // attained - n
  CyclotomicNumber sum;
};

/// Precondition: sum_P b_P chi_P(x) x^(m_P) = 0 mod p^n for every unit x
/// mod p^(n+r).  Conclusion: sum_P b_P value_P = 0 mod p^n.  Divisibility is
/// coordinatewise in the power basis.  Conductors must be powers of p.
GeneralizedKummerReport generalized_kummer_check(const std::vector<WeightedPoint>& points, long p, long n);

struct QExpansion {
  long weight;
  long p;
  std::vector<Rational> coeffs;  // a_0 .. a_B
};

/// p-stabilized Eisenstein series: a_0 = (1 - p^(k-1)) (-B_k / 2k) and
/// a_n = sum_{d | n, p !| d} d^(k-1).  Requires even k >= 4, k != 0 mod (p-1).
QExpansion eisenstein_qexp(long k, long p, long bound);

struct ColemanReport {
  long p;
  long n;
  long k1;
  long k2;
  long bound;
  bool holds;
  Valuation min_valuation;
  std::vector<long> failing_indices;
};

/// a_m(f) = a_m(g) mod p^(n+1) for 0 <= m <= bound.  Requires
/// k = k' mod (p-1) p^n and p-integral coefficients.
ColemanReport coleman_congruence_check(const QExpansion& f, const QExpansion& g, long n, long bound);

struct FamilyFailure {
  long k1;
  long k2;
  long index;  // coefficient index, or character index for the Dirichlet family
  Valuation valuation;
  long required;
};

struct FamilyReport {
  std::string family;
  long p;
  long branch;
  long pairs_checked;
  Valuation min_valuation_margin;  // min of valuation - required; infinite when every difference vanishes
  std::vector<FamilyFailure> failures;
};

/// All weights 4 <= k < k' <= kmax with k = branch mod (p-1): coefficients
/// through q^bound agree mod p^(v+1) where v = v_p(k' - k).
FamilyReport eisenstein_family_check(long p, long branch, long kmax, long bound);

/// Twisted moments int chi x^k dmu^(c) for every character mod p, compared
/// coordinatewise: 0 <= k < k' <= kmax on the branch k = branch mod (p-1)
/// agree mod p^(v+1) where v = v_p(k' - k).
FamilyReport dirichlet_family_check(long p, long branch, long c, long kmax);

/// Primes p < bound with tau(p) = 0 mod p.  `tau` must reach bound - 1.
std::vector<long> delta_ordinarity_scan(long bound, const std::vector<Integer>& tau);
std::vector<long> delta_ordinarity_scan(long bound);

}  // namespace kummerlab
