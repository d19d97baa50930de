#include "kummerlab/padic_zeta.hpp"

#include "kummerlab/bernoulli.hpp"

#include <numeric>
#include <stdexcept>

namespace kummerlab {

namespace {

void require_coprime(long c, long p) {
  if (std::gcd(c, p) != 1)
    throw std::invalid_argument("c = " + std::to_string(c) + " is not prime to p = " + std::to_string(p));
}

// x * s for an exact rational s, keeping the relative precision of x.
PadicApprox scale_exact(const PadicApprox& x, const Rational& s) {
  const long p = x.prime();
  if (s.is_zero()) return PadicApprox::zero(p, x.absolute_precision());
  if (x.is_zero()) {
    const long abs_prec = x.absolute_precision() + val_p(s, p).value();
    return PadicApprox::zero(p, std::max(abs_prec, 1L));
  }
  const PadicApprox unit = padic_reduce(s, p, x.precision());
  return PadicApprox(p, x.shift() + unit.shift(), x.unit_residue() * unit.unit_residue(), x.precision());
}

long factorial_valuation(long n, long p) {
  long v = 0;
  for (long q = p; q <= n; q *= p) {
    v += n / q;
    if (q > n / p) break;
  }
  return v;
}

}  // namespace

Rational regularized_zeta(long k, long c, long p) {
  require_prime(p);
  if (k < 0) throw std::invalid_argument("regularized_zeta needs k >= 0");
  if (c <= 1) throw std::invalid_argument("regularization parameter c must be > 1");
  require_coprime(c, p);
  const Rational euler = Rational(1) - Rational(ipow(p, static_cast<unsigned long>(k)));
  const Rational smooth = Rational(1) - Rational(ipow(c, static_cast<unsigned long>(k + 1)));
  return euler * smooth * zeta_neg(k);
}

KummerReport kummer_check(std::span<const Rational> h, long c, long p, long m) {
  require_prime(p);
  if (m < 0) throw std::invalid_argument("target power m must be >= 0");
  for (size_t i = 0; i < h.size(); ++i)
    if (val_p(h[i], p) < Valuation(0))
      throw std::invalid_argument("coefficient " + std::to_string(i) + " = " + h[i].str() + " is not p-integral");

  KummerReport report{p, c, m, true, false, Valuation::infinity(), Rational(0)};

  const Integer modulus = ipow(p, static_cast<unsigned long>(m));
  if (modulus > 10'000'000) throw std::invalid_argument("p^m too large for an exhaustive precondition check");
  const long q = modulus.get_si();
  if (q > 1) {
    std::vector<long> residues;
    residues.reserve(h.size());
    for (const auto& a : h) residues.push_back(residue_mod(a, p, m).get_si());
    for (long x = 0; x < q && report.precondition_holds; ++x) {
      long value = 0;
      for (size_t i = residues.size(); i-- > 0;) value = (value * x + residues[i]) % q;
      report.precondition_holds = value == 0;
    }
  }

  for (size_t i = 0; i < h.size(); ++i)
    if (!h[i].is_zero()) report.sum += h[i] * regularized_zeta(static_cast<long>(i), c, p);
  report.attained_valuation = val_p(report.sum, p);
  report.congruence_holds = report.attained_valuation >= m;
  return report;
}

CyclotomicNumber mazur_moment(const DirichletCharacter& chi, long k, long c, long p) {
  require_prime(p);
  if (k < 0) throw std::invalid_argument("moment index k must be >= 0");
  require_coprime(c, p);
  long f = chi.conductor();
  while (f % p == 0) f /= p;
  if (f != 1)
    throw std::invalid_argument("character conductor " + std::to_string(chi.conductor()) + " is not a power of " +
                                std::to_string(p));
  const DirichletCharacter psi = chi.primitive();
  const CyclotomicNumber one(Rational(1));
  const CyclotomicNumber euler =
      psi.is_trivial() ? CyclotomicNumber(Rational(1) - Rational(ipow(p, static_cast<unsigned long>(k)))) : one;
  const CyclotomicNumber smooth =
      one - psi.evaluate(c) * CyclotomicNumber(Rational(ipow(c, static_cast<unsigned long>(k + 1))));
  return euler * smooth * dirichlet_L_neg(k, psi);
}

Rational measure_of_ball(long a, long r, long c, long p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("ball measures are restricted to odd primes");
  if (r < 1) throw std::invalid_argument("ball level r must be >= 1");
  if (std::gcd(a, p) != 1) throw std::invalid_argument("ball centre must be a unit");
  require_coprime(c, p);
  const long q = ipow(p, static_cast<unsigned long>(r)).get_si();
  CyclotomicNumber total;
  for (const auto& chi : characters_mod(q)) total += chi.conj().evaluate(a) * mazur_moment(chi, 0, c, p);
  return total.to_rational() / Rational(q / p * (p - 1));
}

// ---------------------------------------------------------------- power series

PadicApprox truncate_absolute(const PadicApprox& x, long n) {
  if (x.is_zero()) return PadicApprox::zero(x.prime(), std::min(x.precision(), n));
  if (x.shift() >= n) return PadicApprox::zero(x.prime(), n);
  if (x.absolute_precision() <= n) return x;
  return x.with_precision(n - x.shift());
}

TruncatedPowerSeries::TruncatedPowerSeries(long p, long precision, std::vector<PadicApprox> coeffs)
    : p_(p), precision_(precision), coeffs_(std::move(coeffs)) {
  require_prime(p);
  if (precision < 1) throw std::invalid_argument("series precision must be >= 1");
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least a constant term");
  for (auto& c : coeffs_) {
    if (c.prime() != p) throw std::invalid_argument("series coefficient over a different prime");
    c = truncate_absolute(c, precision);
  }
}

TruncatedPowerSeries TruncatedPowerSeries::one(long p, long precision, long degree) {
  std::vector<PadicApprox> c(static_cast<size_t>(degree + 1), PadicApprox::zero(p, precision));
  c[0] = PadicApprox::from_residue(p, 1, precision);
  return TruncatedPowerSeries(p, precision, std::move(c));
}

TruncatedPowerSeries operator+(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("power series over different primes");
  const size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<PadicApprox> c;
  for (size_t i = 0; i < len; ++i) c.push_back(a.coeffs_[i] + b.coeffs_[i]);
  return TruncatedPowerSeries(a.p_, std::min(a.precision_, b.precision_), std::move(c));
}

TruncatedPowerSeries operator*(const TruncatedPowerSeries& a, const TruncatedPowerSeries& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("power series over different primes");
  const long precision = std::min(a.precision_, b.precision_);
  const size_t len = std::min(a.coeffs_.size(), b.coeffs_.size());
  std::vector<PadicApprox> c(len, PadicApprox::zero(a.p_, precision));
  for (size_t i = 0; i < len; ++i)
    for (size_t j = 0; i + j < len; ++j) c[i + j] = c[i + j] + a.coeffs_[i] * b.coeffs_[j];
  return TruncatedPowerSeries(a.p_, precision, std::move(c));
}

bool TruncatedPowerSeries::congruent(const TruncatedPowerSeries& other) const {
  if (p_ != other.p_) return false;
  const size_t len = std::min(coeffs_.size(), other.coeffs_.size());
  for (size_t i = 0; i < len; ++i)
    if (!coeffs_[i].congruent(other.coeffs_[i])) return false;
  return true;
}

std::string TruncatedPowerSeries::str() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].to_rational().str();
    if (i == 1) out += "*T";
    if (i > 1) out += "*T^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  return out + " + O(T^" + std::to_string(coeffs_.size()) + ", " + std::to_string(p_) + "^" +
         std::to_string(precision_) + ")";
}

std::vector<std::vector<Integer>> stirling_first_kind(long degree) {
  std::vector<std::vector<Integer>> s(static_cast<size_t>(degree + 1));
  s[0] = {1};
  for (long n = 0; n < degree; ++n) {
    const auto& prev = s[static_cast<size_t>(n)];
    auto& next = s[static_cast<size_t>(n + 1)];
    next.assign(static_cast<size_t>(n + 2), 0);
    // x^(falling n+1) = x^(falling n) * (x - n)
    for (long j = 0; j <= n; ++j) {
      next[static_cast<size_t>(j + 1)] += prev[static_cast<size_t>(j)];
      next[static_cast<size_t>(j)] -= Integer(n) * prev[static_cast<size_t>(j)];
    }
  }
  return s;
}

TruncatedPowerSeries amice_transform(std::span<const PadicApprox> moments, long p, long n) {
  require_prime(p);
  if (moments.empty()) throw std::invalid_argument("amice_transform needs at least one moment");
  long available = n;
  for (const auto& m : moments) {
    if (m.prime() != p) throw std::invalid_argument("moment over a different prime");
    available = std::min(available, m.absolute_precision());
  }
  const long degree = static_cast<long>(moments.size()) - 1;
  if (factorial_valuation(degree, p) >= available)
    throw std::invalid_argument("degree " + std::to_string(degree) + " exceeds the moment precision " +
                                std::to_string(p) + "^" + std::to_string(available));

  const auto s = stirling_first_kind(degree);
  std::vector<PadicApprox> coeffs;
  Integer factorial = 1;
  for (long k = 0; k <= degree; ++k) {
    if (k > 0) factorial *= k;
    PadicApprox numerator = PadicApprox::zero(p, available);
    for (long j = 0; j <= k; ++j) {
      const Integer& sj = s[static_cast<size_t>(k)][static_cast<size_t>(j)];
      if (sj != 0) numerator = numerator + scale_exact(truncate_absolute(moments[static_cast<size_t>(j)], available), Rational(sj));
    }
    coeffs.push_back(scale_exact(numerator, Rational(Integer(1), factorial)));
  }
  return TruncatedPowerSeries(p, available, std::move(coeffs));
}

PadicApprox specialize(const TruncatedPowerSeries& f, long k, long p, long n) {
  require_prime(p);
  if (f.prime() != p) throw std::invalid_argument("series over a different prime");
  if (n < 1) throw std::invalid_argument("precision must be >= 1");
  const Rational t = pow(Rational(1 + p), k - 1) - Rational(1);
  if (t.is_zero()) return truncate_absolute(f.coeffs()[0], n);
  const long v = val_p(t, p).value();
  const long degree = f.degree();
  if ((degree + 1) * v < n) {
    const long needed = (n + v - 1) / v - 1;
    throw std::invalid_argument("series degree " + std::to_string(degree) + " is insufficient for precision " +
                                std::to_string(p) + "^" + std::to_string(n) + "; required degree " +
                                std::to_string(needed));
  }
  const PadicApprox tp = padic_reduce(t, p, n);
  PadicApprox acc = f.coeffs().back();
  for (long i = degree; i-- > 0;) acc = acc * tp + f.coeffs()[static_cast<size_t>(i)];
  return truncate_absolute(acc, n);
}

}  // namespace kummerlab
