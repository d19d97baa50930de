#include "kummerlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace kummerlab {

namespace {

int mobius(unsigned n) {
  int result = 1;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    n /= d;
    if (n % d == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

// Multiply by (x^d - 1) in place.
void multiply_binomial(std::vector<Integer>& poly, unsigned d) {
  std::vector<Integer> out(poly.size() + d, 0);
  for (size_t i = 0; i < poly.size(); ++i) {
    out[i] -= poly[i];
    out[i + d] += poly[i];
  }
  poly = std::move(out);
}

// Exact division by (x^d - 1): q(x)(x^d - 1) = poly.
void divide_binomial(std::vector<Integer>& poly, unsigned d) {
  const size_t n = poly.size();
  std::vector<Integer> q(n - d, 0);
  std::vector<Integer> rem = poly;
  for (size_t i = n; i-- > d;) {
    q[i - d] = rem[i];
    rem[i] -= q[i - d];
    rem[i - d] += q[i - d];
  }
  for (size_t i = 0; i < d; ++i)
    if (rem[i] != 0) throw std::logic_error("inexact cyclotomic division");
  poly = std::move(q);
}

}  // namespace

unsigned euler_phi(unsigned n) {
  unsigned result = n;
  for (unsigned d = 2; d * d <= n; ++d) {
    if (n % d != 0) continue;
    while (n % d == 0) n /= d;
    result -= result / d;
  }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Integer>& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw std::invalid_argument("cyclotomic polynomial of order 0");
  static std::mutex mutex;
  static std::map<unsigned, std::vector<Integer>> memo;
  std::lock_guard lock(mutex);
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  std::vector<Integer> poly{1};
  std::vector<unsigned> denominators;
  for (unsigned d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    const int mu = mobius(n / d);
    if (mu == 1) multiply_binomial(poly, d);
    if (mu == -1) denominators.push_back(d);
  }
  for (unsigned d : denominators) divide_binomial(poly, d);
  // Sign fix: the product of (x^d - 1) factors may come out as -Phi_n.
  if (poly.back() < 0)
    for (auto& c : poly) c = -c;
  return memo.emplace(n, std::move(poly)).first->second;
}

// ---------------------------------------------------------------- CyclotomicNumber

CyclotomicNumber::CyclotomicNumber(unsigned order) : order_(order) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
  coeffs_.assign(euler_phi(order), Rational(0));
}

CyclotomicNumber::CyclotomicNumber(unsigned order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
  reduce();
}

CyclotomicNumber::CyclotomicNumber(const Rational& r, unsigned order) : CyclotomicNumber(order) {
  coeffs_[0] = r;
}

CyclotomicNumber CyclotomicNumber::root_of_unity(unsigned order, long exponent) {
  const long n = static_cast<long>(order);
  std::vector<Rational> c(order, Rational(0));
  c[static_cast<size_t>(((exponent % n) + n) % n)] = Rational(1);
  return CyclotomicNumber(order, std::move(c));
}

void CyclotomicNumber::reduce() {
  const auto& phi_poly = cyclotomic_polynomial(order_);
  const size_t deg = phi_poly.size() - 1;
  // Fold modulo x^n - 1 first; Phi_n divides it.
  if (coeffs_.size() > order_) {
    std::vector<Rational> folded(order_, Rational(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
      if (!coeffs_[i].is_zero()) folded[i % order_] += coeffs_[i];
    coeffs_ = std::move(folded);
  }
  // Phi_n is monic.
  for (size_t i = coeffs_.size(); i-- > deg;) {
    const Rational lead = coeffs_[i];
    if (lead.is_zero()) continue;
    for (size_t j = 0; j < deg; ++j)
      if (phi_poly[j] != 0) coeffs_[i - deg + j] -= lead * Rational(phi_poly[j]);
    coeffs_[i] = Rational(0);
  }
  coeffs_.resize(deg, Rational(0));
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool CyclotomicNumber::is_rational() const {
  for (size_t i = 1; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return false;
  return true;
}

Rational CyclotomicNumber::to_rational() const {
  if (!is_rational()) throw std::domain_error("cyclotomic value " + str() + " is not rational");
  return coeffs_[0];
}

CyclotomicNumber CyclotomicNumber::in_order(unsigned m) const {
  if (m % order_ != 0) throw std::invalid_argument("target order must be a multiple of the current order");
  if (m == order_) return *this;
  const unsigned step = m / order_;
  std::vector<Rational> c(static_cast<size_t>(step) * coeffs_.size(), Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i * step] = coeffs_[i];
  return CyclotomicNumber(m, std::move(c));
}

CyclotomicNumber CyclotomicNumber::conj() const {
  std::vector<Rational> c(order_, Rational(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[(order_ - i) % order_] += coeffs_[i];
  return CyclotomicNumber(order_, std::move(c));
}

std::string CyclotomicNumber::str() const {
  std::string out;
  for (size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += coeffs_[i].str();
    if (i == 1) out += "*z";
    if (i > 1) out += "*z^" + std::to_string(i);
  }
  if (out.empty()) out = "0";
  if (order_ > 2 && !is_rational()) out += " (z = zeta_" + std::to_string(order_) + ")";
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

namespace {

unsigned common_order(const CyclotomicNumber& a, const CyclotomicNumber& b) { return std::lcm(a.order(), b.order()); }

}  // namespace

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const unsigned m = common_order(a, b);
  CyclotomicNumber r = a.in_order(m);
  const CyclotomicNumber other = b.in_order(m);
  for (size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
  return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) { return a + (-b); }

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const unsigned m = common_order(a, b);
  const CyclotomicNumber x = a.in_order(m);
  const CyclotomicNumber y = b.in_order(m);
  if (x.is_rational() || y.is_rational()) {
    const Rational s = x.is_rational() ? x.coeffs_[0] : y.coeffs_[0];
    CyclotomicNumber r = x.is_rational() ? y : x;
    for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  std::vector<Rational> prod(x.coeffs_.size() + y.coeffs_.size() - 1, Rational(0));
  for (size_t i = 0; i < x.coeffs_.size(); ++i) {
    if (x.coeffs_[i].is_zero()) continue;
    for (size_t j = 0; j < y.coeffs_.size(); ++j)
      if (!y.coeffs_[j].is_zero()) prod[i + j] += x.coeffs_[i] * y.coeffs_[j];
  }
  return CyclotomicNumber(m, std::move(prod));
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  const unsigned m = common_order(a, b);
  return a.in_order(m).coeffs_ == b.in_order(m).coeffs_;
}

// ---------------------------------------------------------------- helpers

CyclotomicAccumulator::CyclotomicAccumulator(unsigned order) : order_(order), by_exponent_(order, Rational(0)) {
  if (order == 0) throw std::invalid_argument("cyclotomic order must be >= 1");
}

void CyclotomicAccumulator::add(long exponent, const Rational& coefficient) {
  const long n = static_cast<long>(order_);
  by_exponent_[static_cast<size_t>(((exponent % n) + n) % n)] += coefficient;
}

CyclotomicNumber CyclotomicAccumulator::value() const { return CyclotomicNumber(order_, by_exponent_); }

Valuation coordinate_valuation(const CyclotomicNumber& x, long p) {
  Valuation best = Valuation::infinity();
  for (const auto& c : x.coeffs()) best = std::min(best, val_p(c, p));
  return best;
}

long padic_divisibility(const CyclotomicNumber& x, long p, long n) {
  const Valuation v = coordinate_valuation(x, p);
  if (v.is_infinite()) return n;
  if (v.value() < 0) throw std::invalid_argument("cyclotomic value " + x.str() + " is not p-integral");
  return std::min(v.value(), n);
}

}  // namespace kummerlab
