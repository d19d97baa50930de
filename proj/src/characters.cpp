#include "kummerlab/characters.hpp"

#include "kummerlab/bernoulli.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kummerlab {

namespace {

constexpr long kMaxModulus = 1'000'000;

struct PrimePower {
  long p;
  long e;
  long q;  // p^e
};

std::vector<PrimePower> factor(long m) {
  std::vector<PrimePower> out;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    PrimePower pp{p, 0, 1};
    while (m % p == 0) {
      m /= p;
      ++pp.e;
      pp.q *= p;
    }
    out.push_back(pp);
  }
  if (m > 1) out.push_back({m, 1, m});
  return out;
}

long powmod(long base, long exp, long m) {
  return mod_pow(Integer(base), Integer(exp), Integer(m)).get_si();
}

// x = 1 mod rest, x = g mod q.
long crt_lift(long g, long q, long rest) {
  if (rest == 1) return ((g % q) + q) % q;
  const long inv = mod_inverse(Integer(rest % q), Integer(q)).get_si();
  const long t = (((g - 1) % q + q) % q) * inv % q;
  return 1 + rest * t;
}

long smallest_primitive_root_mod_prime_power(long p, long e) {
  const long g = primitive_root(p);
  if (e == 1) return g;
  return powmod(g, p - 1, p * p) == 1 ? g + p : g;
}

}  // namespace

long primitive_root(long p) {
  require_prime(p);
  if (p == 2) return 1;
  std::vector<long> qs;
  long n = p - 1;
  for (long q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    qs.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) qs.push_back(n);
  for (long g = 2; g < p; ++g) {
    if (std::all_of(qs.begin(), qs.end(), [&](long q) { return powmod(g, (p - 1) / q, p) != 1; })) return g;
  }
  throw std::logic_error("no primitive root found");
}

std::vector<GeneratorImage> unit_group_generators(long modulus) {
  if (modulus < 1) throw std::invalid_argument("modulus must be >= 1");
  if (modulus > kMaxModulus) throw std::invalid_argument("modulus " + std::to_string(modulus) + " beyond supported range");
  const auto parts = factor(modulus);
  long two_part = 1;
  for (const auto& pp : parts)
    if (pp.p == 2) two_part = pp.q;
  if (parts.size() > 1 && two_part > 8)
    throw std::invalid_argument("unsupported modulus " + std::to_string(modulus) + ": composite with even part > 8");

  std::vector<GeneratorImage> gens;
  for (const auto& pp : parts) {
    if (pp.p == 2) continue;
    const long g = smallest_primitive_root_mod_prime_power(pp.p, pp.e);
    gens.push_back({crt_lift(g, pp.q, modulus / pp.q), pp.q / pp.p * (pp.p - 1), 0});
  }
  if (two_part >= 4) {
    gens.push_back({crt_lift(-1, two_part, modulus / two_part), 2, 0});
    if (two_part >= 8) gens.push_back({crt_lift(5, two_part, modulus / two_part), two_part / 4, 0});
  }
  return gens;
}

// ---------------------------------------------------------------- DirichletCharacter

DirichletCharacter DirichletCharacter::trivial(long modulus) {
  return DirichletCharacter(modulus, unit_group_generators(modulus));
}

DirichletCharacter::DirichletCharacter(long modulus, std::vector<GeneratorImage> images)
    : modulus_(modulus), images_(std::move(images)) {
  const auto gens = unit_group_generators(modulus);
  if (gens.size() != images_.size())
    throw std::invalid_argument("character mod " + std::to_string(modulus) + " needs " + std::to_string(gens.size()) +
                                " generator images");
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].generator != images_[i].generator || gens[i].order != images_[i].order)
      throw std::invalid_argument("generator image " + std::to_string(i) + " does not match generator " +
                                  std::to_string(gens[i].generator) + " of order " + std::to_string(gens[i].order));
    images_[i].exponent = ((images_[i].exponent % gens[i].order) + gens[i].order) % gens[i].order;
  }

  // Character order and the exponent of chi(g_i) in zeta_order.
  long order = 1;
  for (const auto& g : images_) order = std::lcm(order, g.order / std::gcd(g.exponent, g.order));
  order_ = static_cast<unsigned>(order);
  std::vector<long> step(images_.size());
  for (size_t i = 0; i < images_.size(); ++i) step[i] = images_[i].exponent * order / images_[i].order;

  // Mixed-radix walk over discrete logs.
  table_.assign(static_cast<size_t>(modulus), -1);
  std::vector<long> logs(images_.size(), 0);
  long value = 1 % modulus;
  long exponent = 0;
  while (true) {
    table_[static_cast<size_t>(value)] = exponent;
    size_t i = 0;
    for (; i < images_.size(); ++i) {
      ++logs[i];
      value = value * images_[i].generator % modulus;
      exponent = (exponent + step[i]) % order;
      if (logs[i] < images_[i].order) break;
      logs[i] = 0;  // wrapped: g^order = 1, exponent back to where it started
    }
    if (i == images_.size()) break;
  }

  // Smallest f | m such that chi is trivial on units congruent to 1 mod f.
  for (long f = 1; f <= modulus; ++f) {
    if (modulus % f != 0) continue;
    bool trivial_on_kernel = true;
    for (long t = 0; t < modulus / f && trivial_on_kernel; ++t)
      trivial_on_kernel = table_[static_cast<size_t>((1 + f * t) % modulus)] <= 0;
    if (trivial_on_kernel) {
      conductor_ = f;
      break;
    }
  }
}

std::optional<long> DirichletCharacter::exponent_at(long a) const {
  const long r = ((a % modulus_) + modulus_) % modulus_;
  const long e = table_[static_cast<size_t>(r)];
  if (e < 0) return std::nullopt;
  return e;
}

CyclotomicNumber DirichletCharacter::evaluate(long a) const {
  const auto e = exponent_at(a);
  if (!e) return CyclotomicNumber(order_);
  return CyclotomicNumber::root_of_unity(order_, *e);
}

bool DirichletCharacter::is_even() const { return exponent_at(-1).value_or(0) == 0; }

DirichletCharacter DirichletCharacter::primitive() const {
  if (is_primitive()) return *this;
  auto gens = unit_group_generators(conductor_);
  for (auto& g : gens) {
    long a = g.generator;
    while (std::gcd(a, modulus_) != 1) a += conductor_;
    const long x = *exponent_at(a);
    if ((x * g.order) % order_ != 0) throw std::logic_error("inconsistent conductor computation");
    g.exponent = x * g.order / order_;
  }
  return DirichletCharacter(conductor_, std::move(gens));
}

DirichletCharacter DirichletCharacter::conj() const {
  auto images = images_;
  for (auto& g : images) g.exponent = (g.order - g.exponent) % g.order;
  return DirichletCharacter(modulus_, std::move(images));
}

std::vector<DirichletCharacter> characters_mod(long modulus) {
  const auto gens = unit_group_generators(modulus);
  std::vector<DirichletCharacter> out;
  std::vector<GeneratorImage> images = gens;
  while (true) {
    out.emplace_back(modulus, images);
    size_t i = 0;
    for (; i < images.size(); ++i) {
      if (++images[i].exponent < images[i].order) break;
      images[i].exponent = 0;
    }
    if (i == images.size()) break;
  }
  std::stable_sort(out.begin(), out.end(), [](const DirichletCharacter& a, const DirichletCharacter& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    const auto& x = a.generator_images();
    const auto& y = b.generator_images();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end(),
                                        [](const GeneratorImage& u, const GeneratorImage& v) { return u.exponent < v.exponent; });
  });
  return out;
}

CyclotomicNumber gauss_sum(const DirichletCharacter& chi) {
  if (!chi.is_primitive())
    throw std::invalid_argument("Gauss sum needs a primitive character (conductor " + std::to_string(chi.conductor()) +
                                " < modulus " + std::to_string(chi.modulus()) + ")");
  const long m = chi.modulus();
  const long o = chi.order();
  const long field = std::lcm(o, m);
  CyclotomicAccumulator acc(static_cast<unsigned>(field));
  for (long a = 0; a < m; ++a) {
    const auto e = chi.exponent_at(a);
    if (e) acc.add(*e * (field / o) + a * (field / m), Rational(1));
  }
  return acc.value();
}

CyclotomicNumber gen_bernoulli(long k, const DirichletCharacter& chi) {
  if (k < 1) throw std::invalid_argument("generalized Bernoulli index must be >= 1");
  const DirichletCharacter psi = chi.primitive();
  const long f = psi.modulus();
  CyclotomicAccumulator acc(psi.order());
  for (long a = 1; a <= f; ++a) {
    const auto e = psi.exponent_at(a);
    if (e) acc.add(*e, bernoulli_poly(k, Rational(Integer(a), Integer(f))));
  }
  return acc.value() * CyclotomicNumber(Rational(ipow(f, static_cast<unsigned long>(k - 1))));
}

CyclotomicNumber dirichlet_L_neg(long k, const DirichletCharacter& chi) {
  if (k < 0) throw std::invalid_argument("dirichlet_L_neg needs k >= 0");
  if (chi.is_trivial()) return CyclotomicNumber(zeta_neg(k));
  return gen_bernoulli(k + 1, chi) * CyclotomicNumber(Rational(Integer(-1), Integer(k + 1)));
}

PadicApprox embed_root_of_unity(unsigned order, long exponent, long p, long n) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("root-of-unity embedding is restricted to odd primes");
  if ((p - 1) % static_cast<long>(order) != 0)
    throw std::invalid_argument("zeta_" + std::to_string(order) + " does not embed in Z_" + std::to_string(p));
  const long e = (((exponent * ((p - 1) / static_cast<long>(order))) % (p - 1)) + (p - 1)) % (p - 1);
  return teichmuller(primitive_root(p), p, n).pow(e);
}

}  // namespace kummerlab
