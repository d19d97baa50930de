#include "kummerlab/motives.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kummerlab {

namespace {

constexpr long kTauCapacity = 20000;

long legendre(long a, long p) {
  a = ((a % p) + p) % p;
  if (a == 0) return 0;
  return mod_pow(Integer(a), Integer((p - 1) / 2), Integer(p)) == 1 ? 1 : -1;
}

long positive_mod(long a, long p) { return ((a % p) + p) % p; }

PadicApprox exact_rational(const Rational& x, long p, long n) {
  if (x.is_zero()) return PadicApprox::zero(p, n);
  return padic_reduce(x, p, n);
}

}  // namespace

// ---------------------------------------------------------------- descriptors

std::vector<Valuation> EulerFactor::valuations() const {
  std::vector<Valuation> v;
  for (const auto& c : coeffs) v.push_back(val_p(c, p));
  return v;
}

void MotiveDescriptor::validate() const {
  const std::string where = "motive '" + label + "': ";
  if (rank < 1) throw std::invalid_argument(where + "rank must be >= 1");
  if (dplus < 0 || dplus > rank) throw std::invalid_argument(where + "dplus must lie in [0, rank]");
  long total = 0;
  for (const auto& h : hodge) {
    if (h.mult < 1) throw std::invalid_argument(where + "hodge multiplicities must be >= 1");
    if (h.i + h.j != weight)
      throw std::invalid_argument(where + "hodge entry (" + std::to_string(h.i) + "," + std::to_string(h.j) +
                                  ") is not of weight " + std::to_string(weight));
    total += h.mult;
    long mirror = 0, same = 0;
    for (const auto& g : hodge) {
      if (g.i == h.j && g.j == h.i) mirror += g.mult;
      if (g.i == h.i && g.j == h.j) same += g.mult;
    }
    if (mirror != same)
      throw std::invalid_argument(where + "hodge numbers are not symmetric at (" + std::to_string(h.i) + "," +
                                  std::to_string(h.j) + ")");
  }
  if (total != rank) throw std::invalid_argument(where + "hodge multiplicities sum to " + std::to_string(total) + ", not rank");
  for (const auto& [p, f] : euler) {
    if (!is_prime(p) || f.p != p) throw std::invalid_argument(where + "euler key " + std::to_string(p) + " is not a matching prime");
    if (f.coeffs.empty() || f.coeffs[0] != Rational(1))
      throw std::invalid_argument(where + "euler factor at " + std::to_string(p) + " must start with 1");
    if (f.degree() > rank) throw std::invalid_argument(where + "euler factor at " + std::to_string(p) + " exceeds rank");
  }
}

const EulerFactor& MotiveDescriptor::euler_at(long p) const {
  const auto it = euler.find(p);
  if (it == euler.end()) throw std::invalid_argument("motive '" + label + "' has no local factor at " + std::to_string(p));
  return it->second;
}

ConvexPolygon MotiveDescriptor::hodge_polygon() const { return kummerlab::hodge_polygon(hodge); }

ConvexPolygon MotiveDescriptor::newton_polygon(long p) const {
  auto v = euler_at(p).valuations();
  v.resize(static_cast<size_t>(rank + 1), Valuation::infinity());
  return kummerlab::newton_polygon(v);
}

Rational MotiveDescriptor::hodge_minimum() const { return polygon_minimum(hodge_polygon()); }

EulerFactor euler_factor_from_ap(FactorKind kind, const Integer& ap, long p, long weight) {
  require_prime(p);
  const Integer top = kind == FactorKind::Eigenform ? ipow(p, static_cast<unsigned long>(weight - 1)) : Integer(p);
  if (kind == FactorKind::Eigenform && weight < 1) throw std::invalid_argument("eigenform weight must be >= 1");
  return EulerFactor{p, {Rational(1), Rational(Integer(-ap)), Rational(top)}};
}

// ---------------------------------------------------------------- tau, point counts

std::vector<Integer> tau_table(long bound) {
  if (bound < 1) throw std::invalid_argument("tau bound must be >= 1");
  if (bound > kTauCapacity) throw std::invalid_argument("tau bound exceeds capacity " + std::to_string(kTauCapacity));
  // prod (1 - q^n) = sum_k (-1)^k q^(k(3k-1)/2), k over Z.
  const long len = bound;  // coefficients of q^0 .. q^(bound-1)
  std::vector<std::pair<long, int>> euler;
  for (long k = 0;; ++k) {
    const long e1 = k * (3 * k - 1) / 2, e2 = k * (3 * k + 1) / 2;
    if (e1 >= len) break;
    const int sign = k % 2 == 0 ? 1 : -1;
    euler.emplace_back(e1, sign);
    if (k > 0 && e2 < len) euler.emplace_back(e2, sign);
  }
  std::vector<Integer> series(static_cast<size_t>(len), 0);
  series[0] = 1;
  std::vector<Integer> next(static_cast<size_t>(len));
  for (int round = 0; round < 24; ++round) {
    for (long i = 0; i < len; ++i) {
      Integer acc = 0;
      for (const auto& [e, sign] : euler) {
        if (e > i) continue;
        if (sign > 0)
          acc += series[static_cast<size_t>(i - e)];
        else
          acc -= series[static_cast<size_t>(i - e)];
      }
      next[static_cast<size_t>(i)] = acc;
    }
    series.swap(next);
  }
  std::vector<Integer> tau(static_cast<size_t>(bound + 1), 0);
  for (long n = 1; n <= bound; ++n) tau[static_cast<size_t>(n)] = series[static_cast<size_t>(n - 1)];
  return tau;
}

Integer ec_discriminant(const Weierstrass& a) {
  const Integer a1 = a[0], a2 = a[1], a3 = a[2], a4 = a[3], a6 = a[4];
  const Integer b2 = a1 * a1 + 4 * a2;
  const Integer b4 = 2 * a4 + a1 * a3;
  const Integer b6 = a3 * a3 + 4 * a6;
  const Integer b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  return Integer(-b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6);
}

long count_points_ec(const Weierstrass& a, long p) {
  require_prime(p);
  if (mod(ec_discriminant(a), Integer(p)) == 0)
    throw std::invalid_argument("curve has bad reduction at " + std::to_string(p));
  long affine = 0;
  if (p == 2) {
    for (long x = 0; x < 2; ++x)
      for (long y = 0; y < 2; ++y) {
        const long lhs = y * y + a[0] * x * y + a[2] * y;
        const long rhs = x * x * x + a[1] * x * x + a[3] * x + a[4];
        affine += positive_mod(lhs - rhs, 2) == 0;
      }
  } else {
    // y^2 + (a1 x + a3) y - f(x) = 0 has 1 + legendre(disc) solutions.
    for (long x = 0; x < p; ++x) {
      const long b = positive_mod(a[0] * x + a[2], p);
      const long f = positive_mod(positive_mod(positive_mod(x * x, p) * x, p) + positive_mod(a[1], p) * positive_mod(x * x, p) +
                                      positive_mod(a[3], p) * x + a[4],
                                  p);
      affine += 1 + legendre(positive_mod(b * b + 4 * f, p), p);
    }
  }
  return p + 1 - (affine + 1);
}

// ---------------------------------------------------------------- operations

MotiveDescriptor tate_twist(const MotiveDescriptor& m, long twist) {
  if (twist == 0) return m;
  MotiveDescriptor out = m;
  out.label = m.label + "(" + std::to_string(twist) + ")";
  out.weight = m.weight - 2 * twist;
  for (auto& h : out.hodge) {
    h.i -= twist;
    h.j -= twist;
  }
  if (twist % 2 != 0) out.dplus = m.rank - m.dplus;
  for (auto& [p, f] : out.euler)
    for (size_t i = 0; i < f.coeffs.size(); ++i) f.coeffs[i] = f.coeffs[i] * pow(Rational(p), -twist * static_cast<long>(i));
  return out;
}

MotiveDescriptor char_twist(const MotiveDescriptor& m, const DirichletCharacter& chi) {
  if (chi.is_trivial()) return m;
  const DirichletCharacter psi = chi.primitive();
  MotiveDescriptor out = m;
  out.label = m.label + " (x) chi mod " + std::to_string(chi.modulus());
  if (!psi.is_even()) out.dplus = m.rank - m.dplus;
  for (auto& [p, f] : out.euler) {
    if (psi.modulus() % p == 0) {
      f.coeffs = {Rational(1)};
      continue;
    }
    const CyclotomicNumber value = psi.evaluate(p);
    if (!value.is_rational()) continue;
    const Rational sign = value.to_rational();
    Rational power(1);
    for (auto& c : f.coeffs) {
      c = c * power;
      power = power * sign;
    }
  }
  return out;
}

MotiveDescriptor dual(const MotiveDescriptor& m) {
  MotiveDescriptor out = m;
  out.label = m.label.ends_with("^dual") ? m.label.substr(0, m.label.size() - 5) : m.label + "^dual";
  out.weight = -m.weight;
  for (auto& h : out.hodge) {
    h.i = -h.i;
    h.j = -h.j;
  }
  for (auto& [p, f] : out.euler) {
    const Rational top = f.coeffs.back();
    if (top.is_zero()) throw std::invalid_argument("dual needs a nonzero leading coefficient at " + std::to_string(p));
    std::vector<Rational> c;
    for (long i = f.degree(); i >= 0; --i) c.push_back(f.coeffs[static_cast<size_t>(i)] / top);
    f.coeffs = std::move(c);
  }
  return out;
}

SlopeReport slope_report(const MotiveDescriptor& m, long p) {
  const ConvexPolygon newton = m.newton_polygon(p);
  const ConvexPolygon hodge = m.hodge_polygon();
  const Rational h = slope_invariant(newton, hodge, m.dplus);
  return SlopeReport{p, newton, hodge, m.dplus, h, h.is_zero(), is_polygon_ordinary(newton, hodge), newton.slope_multiset()};
}

std::vector<PadicApprox> ordered_roots(const MotiveDescriptor& m, long p, long n) {
  require_prime(p);
  const EulerFactor& f = m.euler_at(p);
  if (f.degree() != m.rank)
    throw std::domain_error("local factor of '" + m.label + "' at " + std::to_string(p) + " has deficient degree");
  const ConvexPolygon newton = m.newton_polygon(p);
  if (const auto x = first_disagreement(newton, m.hodge_polygon()))
    throw std::domain_error("motive '" + m.label + "' is not polygon-ordinary at " + std::to_string(p) +
                            ": Newton and Hodge polygons differ at abscissa " + std::to_string(*x));

  std::vector<PadicApprox> roots;
  const auto& v = newton.vertices();
  for (size_t seg = 1; seg < v.size(); ++seg) {
    const Rational slope = (v[seg].second - v[seg - 1].second) / (v[seg].first - v[seg - 1].first);
    const long length = (v[seg].first - v[seg - 1].first).num().get_si();
    const long lambda = slope.num().get_si();  // integral: the polygon equals the Hodge polygon
    // Roots of slope lambda are p^lambda times the unit roots of sum A_i p^(-lambda i) Y^i.
    std::vector<PadicApprox> scaled;
    for (size_t i = 0; i < f.coeffs.size(); ++i)
      scaled.push_back(exact_rational(f.coeffs[i] * pow(Rational(p), -lambda * static_cast<long>(i)), p, n));
    scaled[0] = PadicApprox(p, 0, 1, n);
    const auto units = hensel_unit_roots(scaled, p, n);
    if (static_cast<long>(units.size()) != length)
      throw std::domain_error("slope " + slope.str() + " segment of '" + m.label + "' at " + std::to_string(p) +
                              " has roots outside Z_p");
    for (const auto& u : units) roots.push_back(u * PadicApprox(p, lambda, 1, n));
  }
  return roots;
}

PadicApprox modified_factor(const MotiveDescriptor& m, const DirichletCharacter& chi, long s, long p, long n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("precision must be >= 1");
  const DirichletCharacter psi = chi.primitive();
  long conductor = psi.modulus();
  long r = 0;
  while (conductor % p == 0) {
    conductor /= p;
    ++r;
  }
  if (r > 0 && conductor != 1)
    throw std::invalid_argument("character conductor " + std::to_string(psi.modulus()) + " mixes p with other primes");

  // Spare digits absorb cancellation in the 1 - x factors.
  const long work = n + 20;
  const auto roots = ordered_roots(m, p, work);
  const PadicApprox one(p, 0, 1, work);
  const PadicApprox ps = PadicApprox(p, s, 1, work);
  PadicApprox value = one;

  if (r == 0) {
    const PadicApprox chi_p = embed_root_of_unity(psi.order(), *psi.exponent_at(p), p, work);
    for (long i = m.dplus; i < m.rank; ++i) value = value * (one - chi_p * roots[static_cast<size_t>(i)] / ps);
    for (long i = 0; i < m.dplus; ++i)
      value = value * (one - (chi_p * roots[static_cast<size_t>(i)]).inverse() * ps / PadicApprox(p, 1, 1, work));
  } else {
    for (long i = 0; i < m.dplus; ++i) value = value * (ps / roots[static_cast<size_t>(i)]).pow(r);
  }
  if (value.is_zero()) return PadicApprox::zero(p, n);
  return value.precision() > n ? value.with_precision(n) : value;
}

// ---------------------------------------------------------------- catalog

MotiveDescriptor motive_trivial(long prime_bound) {
  MotiveDescriptor m{"Q(0)", 1, 0, {{0, 0, 1}}, 1, {}};
  for (long p : primes_below(prime_bound)) m.euler[p] = EulerFactor{p, {Rational(1), Rational(-1)}};
  return m;
}

MotiveDescriptor motive_delta(const std::vector<Integer>& tau, long prime_bound) {
  if (static_cast<long>(tau.size()) < prime_bound)
    throw std::invalid_argument("tau table too short for prime bound " + std::to_string(prime_bound));
  MotiveDescriptor m{"delta", 2, 11, {{0, 11, 1}, {11, 0, 1}}, 1, {}};
  for (long p : primes_below(prime_bound))
    m.euler[p] = euler_factor_from_ap(FactorKind::Eigenform, tau[static_cast<size_t>(p)], p, 12);
  return m;
}

MotiveDescriptor motive_delta(long prime_bound) { return motive_delta(tau_table(std::max(prime_bound, 2L)), prime_bound); }

MotiveDescriptor elliptic_motive(const std::string& label, const Weierstrass& a, long prime_bound) {
  MotiveDescriptor m{label, 2, 1, {{0, 1, 1}, {1, 0, 1}}, 1, {}};
  const Integer disc = ec_discriminant(a);
  if (disc == 0) throw std::invalid_argument("singular Weierstrass equation");
  for (long p : primes_below(prime_bound)) {
    if (mod(disc, Integer(p)) == 0) continue;
    m.euler[p] = euler_factor_from_ap(FactorKind::EllipticCurve, Integer(count_points_ec(a, p)), p);
  }
  return m;
}

MotiveDescriptor motive_11a1(long prime_bound) { return elliptic_motive("11a1", {0, -1, 1, -10, -20}, prime_bound); }

std::vector<MotiveDescriptor> builtin_catalog() {
  static const std::vector<MotiveDescriptor> catalog{motive_trivial(), motive_delta(), motive_11a1()};
  return catalog;
}

MotiveDescriptor builtin_motive(const std::string& name) {
  if (name == "Q(0)" || name == "trivial") return builtin_catalog()[0];
  if (name == "delta") return builtin_catalog()[1];
  if (name == "11a1") return builtin_catalog()[2];
  throw std::invalid_argument("unknown builtin motive '" + name + "' (expected Q(0), delta or 11a1)");
}

}  // namespace kummerlab
