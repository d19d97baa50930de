#include "kummerlab/arith.hpp"

#include <algorithm>
#include <stdexcept>

namespace kummerlab {

// ---------------------------------------------------------------- Rational

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    std::string_view digits = s;
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    std::string str(s);
    if (str.front() == '+') str.erase(0, 1);
    return Integer(str, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), parse_int(den_text));
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::operator-() const { return Rational(mpq_class(-q_), FromMpq{}); }

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}
Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}
Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}
Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) return pow(Rational(1) / base, -exponent);
  const auto e = static_cast<unsigned long>(exponent);
  return Rational(ipow(base.num(), e), ipow(base.den(), e));
}

// ---------------------------------------------------------------- Valuation

long Valuation::value() const {
  if (infinite_) throw std::logic_error("infinite valuation has no integer value");
  return value_;
}

std::string Valuation::str() const { return infinite_ ? "inf" : std::to_string(value_); }

// ---------------------------------------------------------------- integers

bool is_prime(long n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (long d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<long> primes_below(long bound) {
  std::vector<long> out;
  if (bound <= 2) return out;
  std::vector<bool> composite(static_cast<size_t>(bound), false);
  for (long i = 2; i < bound; ++i) {
    if (composite[static_cast<size_t>(i)]) continue;
    out.push_back(i);
    for (long j = i * i; j < bound; j += i) composite[static_cast<size_t>(j)] = true;
  }
  return out;
}

void require_prime(long p) {
  if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

Integer ipow(long base, unsigned long exponent) { return ipow(Integer(base), exponent); }

Integer ipow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer mod(const Integer& a, const Integer& m) {
  Integer r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_pow(const Integer& base, const Integer& exponent, const Integer& m) {
  if (exponent < 0) return mod_pow(mod_inverse(base, m), -exponent, m);
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exponent.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer mod_inverse(const Integer& a, const Integer& m) {
  Integer r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw std::domain_error(a.get_str() + " is not invertible modulo " + m.get_str());
  return r;
}

long val_p(const Integer& n, long p) {
  if (n == 0) throw std::invalid_argument("val_p of zero integer");
  Integer pz(p);
  Integer rest;
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), pz.get_mpz_t()));
}

Valuation val_p(const Rational& x, long p) {
  require_prime(p);
  if (x.is_zero()) return Valuation::infinity();
  return Valuation(val_p(x.num(), p) - val_p(x.den(), p));
}

Integer residue_mod(const Rational& x, long p, long n) {
  const Integer m = ipow(p, static_cast<unsigned long>(n));
  if (mpz_divisible_ui_p(x.den().get_mpz_t(), static_cast<unsigned long>(p)))
    throw std::invalid_argument(x.str() + " is not " + std::to_string(p) + "-integral");
  return mod(x.num() * mod_inverse(x.den(), m), m);
}

// ---------------------------------------------------------------- PadicApprox

namespace {

Integer prime_power(long p, long n) { return ipow(p, static_cast<unsigned long>(std::max(n, 0L))); }

}  // namespace

PadicApprox::PadicApprox(long p, long precision) : p_(p), zero_(true), precision_(precision) {}

PadicApprox PadicApprox::zero(long p, long precision) {
  require_prime(p);
  return PadicApprox(p, precision);
}

PadicApprox::PadicApprox(long p, long shift, const Integer& residue, long precision)
    : p_(p), shift_(shift), precision_(precision) {
  require_prime(p);
  if (precision < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  Integer r = mod(residue, prime_power(p, precision));
  if (r == 0) {
    zero_ = true;
    shift_ = 0;
    return;
  }
  const long v = val_p(r, p);
  if (v > 0) {
    shift_ += v;
    precision_ -= v;
    r /= prime_power(p, v);
  }
  residue_ = mod(r, prime_power(p, precision_));
}

PadicApprox PadicApprox::from_residue(long p, const Integer& residue, long absolute_precision) {
  require_prime(p);
  if (absolute_precision < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  const Integer r = mod(residue, prime_power(p, absolute_precision));
  if (r == 0) return zero(p, absolute_precision);
  return PadicApprox(p, 0, r, absolute_precision);
}

long PadicApprox::shift() const {
  if (zero_) throw std::logic_error("exact zero has no finite shift");
  return shift_;
}

Integer PadicApprox::residue_mod(long n) const {
  if (zero_) return 0;
  if (shift_ < 0) throw std::domain_error("value " + str() + " is not p-integral");
  if (n > absolute_precision())
    throw std::domain_error("requested p^" + std::to_string(n) + " beyond known precision of " + str());
  return mod(residue_ * prime_power(p_, shift_), prime_power(p_, n));
}

Rational PadicApprox::to_rational() const {
  if (zero_) return Rational(0);
  if (shift_ >= 0) return Rational(Integer(residue_ * prime_power(p_, shift_)));
  return Rational(residue_, prime_power(p_, -shift_));
}

PadicApprox PadicApprox::with_precision(long precision) const {
  if (zero_) return PadicApprox(p_, precision);
  if (precision > precision_) throw std::domain_error("cannot raise precision of " + str());
  return PadicApprox(p_, shift_, residue_, precision);
}

std::string PadicApprox::str() const {
  if (zero_) return "0";
  return std::to_string(p_) + "^" + std::to_string(shift_) + " * " + residue_.get_str() + " mod " +
         std::to_string(p_) + "^" + std::to_string(precision_);
}

PadicApprox PadicApprox::operator-() const {
  if (zero_) return *this;
  return PadicApprox(p_, shift_, -residue_, precision_);
}

PadicApprox PadicApprox::inverse() const {
  if (zero_) throw std::domain_error("inverse of p-adic zero");
  return PadicApprox(p_, -shift_, mod_inverse(residue_, prime_power(p_, precision_)), precision_);
}

PadicApprox PadicApprox::pow(long exponent) const {
  if (zero_) {
    if (exponent <= 0) throw std::domain_error("non-positive power of p-adic zero");
    return *this;
  }
  if (exponent < 0) return inverse().pow(-exponent);
  const Integer m = prime_power(p_, precision_);
  return PadicApprox(p_, shift_ * exponent, mod_pow(residue_, Integer(exponent), m), precision_);
}

PadicApprox operator+(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("p-adic operands over different primes");
  if (a.zero_) return b;
  if (b.zero_) return a;
  const long base = std::min(a.shift_, b.shift_);
  const long abs_prec = std::min(a.absolute_precision(), b.absolute_precision());
  if (abs_prec <= base) throw std::domain_error("p-adic sum has no significant digits");
  const Integer m = prime_power(a.p_, abs_prec - base);
  const Integer sum = a.residue_ * prime_power(a.p_, a.shift_ - base) + b.residue_ * prime_power(b.p_, b.shift_ - base);
  const Integer r = mod(sum, m);
  if (r == 0) return PadicApprox(a.p_, abs_prec);
  return PadicApprox(a.p_, base, r, abs_prec - base);
}

PadicApprox operator*(const PadicApprox& a, const PadicApprox& b) {
  if (a.p_ != b.p_) throw std::invalid_argument("p-adic operands over different primes");
  if (a.zero_) return a;
  if (b.zero_) return b;
  const long prec = std::min(a.precision_, b.precision_);
  return PadicApprox(a.p_, a.shift_ + b.shift_, a.residue_ * b.residue_, prec);
}

bool PadicApprox::congruent(const PadicApprox& other) const {
  if (p_ != other.p_) return false;
  const long abs_prec = std::min(absolute_precision(), other.absolute_precision());
  const long base = std::min(zero_ ? abs_prec : shift_, other.zero_ ? abs_prec : other.shift_);
  if (base >= abs_prec) return true;
  // Scale both to integers by p^-base and compare modulo p^(abs_prec - base).
  auto scaled = [&](const PadicApprox& x) -> Integer {
    if (x.zero_) return 0;
    return x.residue_ * prime_power(p_, x.shift_ - base);
  };
  const Integer m = prime_power(p_, abs_prec - base);
  return mod(scaled(*this) - scaled(other), m) == 0;
}

PadicApprox padic_reduce(const Rational& x, long p, long n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  if (x.is_zero()) return PadicApprox::zero(p, n);
  Integer num = x.num();
  Integer den = x.den();
  const long vn = val_p(num, p);
  const long vd = val_p(den, p);
  num /= prime_power(p, vn);
  den /= prime_power(p, vd);
  const Integer m = prime_power(p, n);
  return PadicApprox(p, vn - vd, mod(num * mod_inverse(den, m), m), n);
}

PadicApprox teichmuller(const Integer& a, long p, long n) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("Teichmüller lifts are restricted to odd primes");
  if (mod(a, Integer(p)) == 0) throw std::invalid_argument("Teichmüller lift of a non-unit");
  const Integer m = prime_power(p, n);
  Integer x = mod(a, m);
  // Each application of x -> x^p gains one p-adic digit.
  for (long i = 0; i < n; ++i) {
    Integer next = mod_pow(x, Integer(p), m);
    if (next == x) break;
    x = std::move(next);
  }
  return PadicApprox(p, 0, x, n);
}

std::vector<PadicApprox> hensel_unit_roots(std::span<const PadicApprox> coeffs, long p, long n) {
  require_prime(p);
  if (n < 1) throw std::invalid_argument("p-adic precision must be >= 1");
  if (coeffs.empty() || coeffs.front().is_zero() || coeffs.front().shift() != 0 ||
      coeffs.front().unit_residue() != 1)
    throw std::invalid_argument("local polynomial must have constant coefficient 1");
  for (const auto& c : coeffs)
    if (c.prime() != p) throw std::invalid_argument("coefficient over a different prime");

  // For a unit root only the terms of minimal valuation survive modulo p, so
  // divide through by p^min_val and work with integer residues.
  long min_val = 0;
  for (const auto& c : coeffs)
    if (!c.is_zero()) min_val = std::min(min_val, c.shift());
  const Integer modulus = prime_power(p, n);
  const size_t d = coeffs.size() - 1;
  // poly[j] is the coefficient of alpha^j, i.e. A_(d-j).
  std::vector<Integer> poly(d + 1);
  for (size_t i = 0; i <= d; ++i) {
    const auto& c = coeffs[i];
    if (c.is_zero()) continue;
    if (c.absolute_precision() - min_val < n)
      throw std::domain_error("coefficient " + c.str() + " too imprecise for precision " + std::to_string(n));
    poly[d - i] = mod(c.unit_residue() * prime_power(p, c.shift() - min_val), modulus);
  }

  auto eval = [&](const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (size_t j = d + 1; j-- > 0;) acc = mod(acc * x + poly[j], m);
    return acc;
  };
  auto eval_derivative = [&](const Integer& x, const Integer& m) {
    Integer acc = 0;
    for (size_t j = d; j >= 1; --j) acc = mod(acc * x + poly[j] * static_cast<long>(j), m);
    return acc;
  };

  std::vector<PadicApprox> roots;
  const Integer pz(p);
  for (long r = 1; r < p; ++r) {
    if (eval(Integer(r), pz) != 0) continue;
    if (eval_derivative(Integer(r), pz) == 0) throw std::domain_error("non-simple slope-0 segment");
    Integer x(r);
    for (long iter = 0; iter < n + 1; ++iter) {
      const Integer fx = eval(x, modulus);
      if (fx == 0) break;
      x = mod(x - fx * mod_inverse(eval_derivative(x, modulus), modulus), modulus);
    }
    roots.emplace_back(p, 0, x, n);
  }
  return roots;
}

}  // namespace kummerlab
