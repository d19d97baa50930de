#pragma once

#include "kummerlab/arith.hpp"
#include "kummerlab/cyclotomic.hpp"

#include <optional>
#include <vector>

namespace kummerlab {

/// chi(generator) = zeta_order^exponent, where `order` is the order of the
/// generator in (Z/m)^x.
struct GeneratorImage {
  long generator;
  long order;
  long exponent;

  friend bool operator==(const GeneratorImage&, const GeneratorImage&) = default;
};

/// Generators of (Z/m)^x with their orders, in the fixed order used by
/// DirichletCharacter: odd prime-power components by ascending prime, then
/// -1 and 5 for the 2-part.  Supported moduli are prime powers and products
/// whose even part is at most 8.
std::vector<GeneratorImage> unit_group_generators(long modulus);

/// Dirichlet character modulo m, given by the images of the generators of
/// (Z/m)^x returned by unit_group_generators().
class DirichletCharacter {
 public:
  static DirichletCharacter trivial(long modulus = 1);
  /// Throws std::invalid_argument when the generators do not match
  /// unit_group_generators(modulus).
  DirichletCharacter(long modulus, std::vector<GeneratorImage> images);

  long modulus() const { return modulus_; }
  const std::vector<GeneratorImage>& generator_images() const { return images_; }
  /// Order of chi in the character group; its values lie in Q(zeta_order).
  unsigned order() const { return order_; }
  long conductor() const { return conductor_; }

  /// chi(a) = zeta_order^e; nullopt when gcd(a, m) > 1.
  std::optional<long> exponent_at(long a) const;
  CyclotomicNumber evaluate(long a) const;

  bool is_trivial() const { return order_ == 1; }
  bool is_primitive() const { return conductor_ == modulus_; }
  /// chi(-1) = +1.
  bool is_even() const;

  /// The primitive character of modulus conductor() inducing chi.
  DirichletCharacter primitive() const;
  DirichletCharacter conj() const;

  friend bool operator==(const DirichletCharacter& a, const DirichletCharacter& b) {
    return a.modulus_ == b.modulus_ && a.images_ == b.images_;
  }

 private:
  long modulus_;
  std::vector<GeneratorImage> images_;
  unsigned order_ = 1;
  long conductor_ = 1;
  // Exponent of chi(a) for 0 <= a < m, -1 for non-units.
  std::vector<long> table_;
};

/// All phi(m) characters modulo m, sorted by (order, exponents).
std::vector<DirichletCharacter> characters_mod(long modulus);

/// Gauss sum sum_{a mod m} chi(a) zeta_m^a of a primitive character.
CyclotomicNumber gauss_sum(const DirichletCharacter& chi);

/// B_{k,chi} = f^(k-1) sum_{a=1}^{f} chi(a) B_k(a/f) for the primitive
/// character of conductor f.  The trivial character gives B_k, except
/// B_{1,1} = +1/2.
CyclotomicNumber gen_bernoulli(long k, const DirichletCharacter& chi);

/// L(-k, chi) = -B_{k+1,chi}/(k+1); characters inducing the trivial one
/// route through zeta_neg.
CyclotomicNumber dirichlet_L_neg(long k, const DirichletCharacter& chi);

/// Image of zeta_order^exponent in Z_p under the embedding sending
/// zeta_{p-1} to the Teichmüller lift of the least primitive root mod p.
/// Requires order | p - 1 and p odd.
PadicApprox embed_root_of_unity(unsigned order, long exponent, long p, long n);

long primitive_root(long p);

}  // namespace kummerlab
