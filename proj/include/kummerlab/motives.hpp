#pragma once

#include "kummerlab/arith.hpp"
#include "kummerlab/characters.hpp"
#include "kummerlab/polygons.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace kummerlab {

/// Local polynomial 1 + A_1 X + ... + A_e X^e at p.
struct EulerFactor {
  long p;
  std::vector<Rational> coeffs;

  long degree() const { return static_cast<long>(coeffs.size()) - 1; }
  std::vector<Valuation> valuations() const;

  friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
};

struct MotiveDescriptor {
  std::string label;
  long rank = 1;
  long weight = 0;
  std::vector<HodgeNumber> hodge;
  long dplus = 0;
  std::map<long, EulerFactor> euler;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
  const EulerFactor& euler_at(long p) const;
  ConvexPolygon hodge_polygon() const;
  ConvexPolygon newton_polygon(long p) const;
  /// r(M): the minimum of the Hodge polygon.
  Rational hodge_minimum() const;

  friend bool operator==(const MotiveDescriptor&, const MotiveDescriptor&) = default;
};

enum class FactorKind { Eigenform, EllipticCurve };

/// 1 - a_p X + p^(k-1) X^2 for an eigenform of weight k, 1 - a_p X + p X^2
/// for an elliptic curve (weight is ignored).
EulerFactor euler_factor_from_ap(FactorKind kind, const Integer& ap, long p, long weight = 2);

/// tau(0..bound) with tau(0) = 0, from q * prod (1 - q^n)^24.  bound <= 20000.
std::vector<Integer> tau_table(long bound);

using Weierstrass = std::array<long, 5>;  // a1, a2, a3, a4, a6
Integer ec_discriminant(const Weierstrass& a);
/// a_p = p + 1 - #E(F_p).  Bad primes are rejected.
long count_points_ec(const Weierstrass& a, long p);

/// M(m): inverse roots alpha -> alpha p^-m, Hodge (i, j) -> (i - m, j - m).
MotiveDescriptor tate_twist(const MotiveDescriptor& m, long twist);
/// M(chi).  At primes dividing the conductor the factor becomes 1.  Elsewhere
/// A_i -> chi(p)^i A_i when chi(p) = +-1; other values of chi(p) are roots of
/// unity of valuation 0 and the factor is kept as is (valuation-level twist).
/// Odd chi exchanges d+ and d-.
MotiveDescriptor char_twist(const MotiveDescriptor& m, const DirichletCharacter& chi);
/// Inverse roots alpha -> 1/alpha.
MotiveDescriptor dual(const MotiveDescriptor& m);

struct SlopeReport {
  long p;
  ConvexPolygon newton;
  ConvexPolygon hodge;
  long dplus;
  Rational slope_invariant;
  bool admissible;
  bool ordinary;
  std::vector<Rational> root_valuations;
};

SlopeReport slope_report(const MotiveDescriptor& m, long p);

/// Inverse roots of the local factor ordered by valuation, each to relative
/// precision n.  Requires a polygon-ordinary motive with roots in Z_p.
std::vector<PadicApprox> ordered_roots(const MotiveDescriptor& m, long p, long n);

/// A_p(M(chi), s) to relative precision n.  chi must have conductor
/// prime to p or a power of p, with order dividing p - 1.
PadicApprox modified_factor(const MotiveDescriptor& m, const DirichletCharacter& chi, long s, long p, long n);

MotiveDescriptor motive_trivial(long prime_bound = 2100);
/// Delta as a weight-11 motive; `tau` must reach prime_bound - 1.
MotiveDescriptor motive_delta(const std::vector<Integer>& tau, long prime_bound = 2100);
MotiveDescriptor motive_delta(long prime_bound = 2100);
/// y^2 + y = x^3 - x^2 - 10x - 20 at good primes below prime_bound.
MotiveDescriptor motive_11a1(long prime_bound = 500);
MotiveDescriptor elliptic_motive(const std::string& label, const Weierstrass& a, long prime_bound);

std::vector<MotiveDescriptor> builtin_catalog();
/// "Q(0)" (also "trivial"), "delta", "11a1".
MotiveDescriptor builtin_motive(const std::string& name);

}  // namespace kummerlab
