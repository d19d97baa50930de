#include "kummerlab/families.hpp"

#include "kummerlab/bernoulli.hpp"
#include "kummerlab/motives.hpp"
#include "kummerlab/padic_zeta.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kummerlab {

namespace {

long p_power_exponent(long conductor, long p) {
  long r = 0;
  while (conductor % p == 0) {
    conductor /= p;
    ++r;
  }
  if (conductor != 1) return -1;
  return r;
}

void require_p_integral(const CyclotomicNumber& x, long p, const std::string& what) {
  if (coordinate_valuation(x, p) < Valuation(0))
    throw std::invalid_argument(what + " " + x.str() + " is not p-integral");
}

Valuation min_valuation(Valuation a, Valuation b) { return a < b ? a : b; }

}  // namespace

GeneralizedKummerReport generalized_kummer_check(const std::vector<WeightedPoint>& points, long p, long n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("congruence level N must be >= 1");

  long r = 0;
  for (const auto& wp : points) {
    const long e = p_power_exponent(wp.point.chi.conductor(), p);
    if (e < 0)
      throw std::invalid_argument("mixed primes: conductor " + std::to_string(wp.point.chi.conductor()) +
                                  " is not a power of " + std::to_string(p));
    r = std::max(r, e);
    require_p_integral(wp.value, p, "value");
    require_p_integral(wp.coefficient, p, "coefficient");
  }

  GeneralizedKummerReport report{p, n, r, true, false, Valuation::infinity(), Valuation::infinity(), CyclotomicNumber()};

  const Integer level = ipow(p, static_cast<unsigned long>(n));
  const Integer modulus = ipow(p, static_cast<unsigned long>(n + r));
  if (modulus > 10'000'000) throw std::invalid_argument("p^(N+r) too large for an exhaustive precondition check");
  const long q = modulus.get_si();

  // Only x^m mod p^N matters: the coefficients are p-integral.
  for (long x = 1; x < q && report.precondition_holds; ++x) {
    if (x % p == 0) continue;
    CyclotomicNumber f;
    for (const auto& wp : points) {
      const long m = wp.point.m;
      Integer base(x);
      if (m < 0) base = mod_inverse(base, level);
      const Integer power = mod_pow(base, Integer(std::abs(m)), level);
      f += wp.coefficient * wp.point.chi.evaluate(x) * CyclotomicNumber(Rational(power));
    }
    if (padic_divisibility(f, p, n) < n) report.precondition_holds = false;
  }

  for (const auto& wp : points) report.sum += wp.coefficient * wp.value;
  report.attained_valuation = coordinate_valuation(report.sum, p);
  report.conclusion_holds = report.attained_valuation >= n;
  if (!report.attained_valuation.is_infinite())
    report.valuation_shift = Valuation(report.attained_valuation.value() - n);
  return report;
}

QExpansion eisenstein_qexp(long k, long p, long bound) {
  require_prime(p);
  if (k < 4 || k % 2 != 0) throw std::invalid_argument("Eisenstein weight must be even and >= 4");
  if (k % (p - 1) == 0)
    throw std::invalid_argument("weight " + std::to_string(k) + " = 0 mod (p-1) lies on the irregular branch: B_k/k is not " +
                                std::to_string(p) + "-integral there");
  if (bound < 1) throw std::invalid_argument("q-expansion bound must be >= 1");

  QExpansion e{k, p, std::vector<Rational>(static_cast<size_t>(bound + 1), Rational(0))};
  e.coeffs[0] = (Rational(1) - Rational(ipow(p, static_cast<unsigned long>(k - 1)))) * (-bernoulli(k) / Rational(2 * k));
  std::vector<Integer> sums(static_cast<size_t>(bound + 1), 0);
  for (long d = 1; d <= bound; ++d) {
    if (d % p == 0) continue;
    const Integer power = ipow(d, static_cast<unsigned long>(k - 1));
    for (long mult = d; mult <= bound; mult += d) sums[static_cast<size_t>(mult)] += power;
  }
  for (long i = 1; i <= bound; ++i) e.coeffs[static_cast<size_t>(i)] = Rational(sums[static_cast<size_t>(i)]);
  return e;
}

ColemanReport coleman_congruence_check(const QExpansion& f, const QExpansion& g, long n, long bound) {
  if (f.p != g.p) throw std::invalid_argument("q-expansions over different primes");
  const long p = f.p;
  require_prime(p);
  if (n < 0) throw std::invalid_argument("level n must be >= 0");
  if (bound < 0) throw std::invalid_argument("bound must be >= 0");
  if (static_cast<long>(f.coeffs.size()) <= bound || static_cast<long>(g.coeffs.size()) <= bound)
    throw std::invalid_argument("q-expansion shorter than the requested bound " + std::to_string(bound));
  const Integer period = Integer(p - 1) * ipow(p, static_cast<unsigned long>(n));
  if (mod(Integer(g.weight - f.weight), period) != 0)
    throw std::invalid_argument("weights " + std::to_string(f.weight) + " and " + std::to_string(g.weight) +
                                " are not congruent mod (p-1) p^" + std::to_string(n));

  ColemanReport report{p, n, f.weight, g.weight, bound, true, Valuation::infinity(), {}};
  for (long i = 0; i <= bound; ++i) {
    const Rational& a = f.coeffs[static_cast<size_t>(i)];
    const Rational& b = g.coeffs[static_cast<size_t>(i)];
    if (val_p(a, p) < Valuation(0) || val_p(b, p) < Valuation(0))
      throw std::invalid_argument("coefficient a_" + std::to_string(i) + " is not p-integral");
    const Valuation v = val_p(a - b, p);
    report.min_valuation = min_valuation(report.min_valuation, v);
    if (!(v >= n + 1)) {
      report.holds = false;
      report.failing_indices.push_back(i);
    }
  }
  return report;
}

FamilyReport eisenstein_family_check(long p, long branch, long kmax, long bound) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("every even weight is irregular at p = 2");
  const long b = ((branch % (p - 1)) + p - 1) % (p - 1);
  if (b % 2 != 0 || b == 0)
    throw std::invalid_argument("branch " + std::to_string(branch) + " must be even and nonzero mod (p-1)");

  std::vector<QExpansion> forms;
  for (long k = 4; k <= kmax; ++k)
    if (k % 2 == 0 && k % (p - 1) == b) forms.push_back(eisenstein_qexp(k, p, bound));

  FamilyReport report{"eisenstein", p, b, 0, Valuation::infinity(), {}};
  for (size_t i = 0; i < forms.size(); ++i)
    for (size_t j = i + 1; j < forms.size(); ++j) {
      const long k1 = forms[i].weight, k2 = forms[j].weight;
      const long required = val_p(Integer(k2 - k1), p) + 1;
      ++report.pairs_checked;
      for (long idx = 0; idx <= bound; ++idx) {
        const Valuation v = val_p(forms[i].coeffs[static_cast<size_t>(idx)] - forms[j].coeffs[static_cast<size_t>(idx)], p);
        if (v.is_infinite()) continue;
        report.min_valuation_margin = min_valuation(report.min_valuation_margin, Valuation(v.value() - required));
        if (v.value() < required) report.failures.push_back({k1, k2, idx, v, required});
      }
    }
  return report;
}

FamilyReport dirichlet_family_check(long p, long branch, long c, long kmax) {
  require_prime(p);
  if (kmax < 0) throw std::invalid_argument("kmax must be >= 0");
  const long b = ((branch % (p - 1)) + p - 1) % (p - 1);
  const auto chars = characters_mod(p);

  FamilyReport report{"dirichlet", p, b, 0, Valuation::infinity(), {}};
  std::vector<long> weights;
  for (long k = b; k <= kmax; k += p - 1) weights.push_back(k);
  for (size_t ci = 0; ci < chars.size(); ++ci) {
    std::vector<CyclotomicNumber> moments;
    for (long k : weights) moments.push_back(mazur_moment(chars[ci], k, c, p));
    for (size_t i = 0; i < weights.size(); ++i)
      for (size_t j = i + 1; j < weights.size(); ++j) {
        const long required = val_p(Integer(weights[j] - weights[i]), p) + 1;
        ++report.pairs_checked;
        const Valuation v = coordinate_valuation(moments[i] - moments[j], p);
        if (v.is_infinite()) continue;
        report.min_valuation_margin = min_valuation(report.min_valuation_margin, Valuation(v.value() - required));
        if (v.value() < required)
          report.failures.push_back({weights[i], weights[j], static_cast<long>(ci), v, required});
      }
  }
  return report;
}

std::vector<long> delta_ordinarity_scan(long bound, const std::vector<Integer>& tau) {
  if (static_cast<long>(tau.size()) < bound)
    throw std::invalid_argument("tau table does not reach " + std::to_string(bound - 1));
  std::vector<long> out;
  for (long p : primes_below(bound))
    if (mod(tau[static_cast<size_t>(p)], Integer(p)) == 0) out.push_back(p);
  return out;
}

std::vector<long> delta_ordinarity_scan(long bound) {
  return delta_ordinarity_scan(bound, tau_table(std::max(bound - 1, 1L)));
}

}  // namespace kummerlab
