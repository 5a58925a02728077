#include "l2sig/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

#include "l2sig/errors.hpp"
#include "l2sig/polynomial.hpp"

namespace l2sig {

namespace {

std::vector<Rational> reduce(unsigned e, const Polynomial& p) {
  const unsigned phi = euler_phi(e);
  Polynomial r = p.degree() >= static_cast<long>(phi) ? p % cyclotomic_polynomial(e) : p;
  std::vector<Rational> out = r.coeffs();
  out.resize(phi);
  return out;
}

std::vector<Rational> fold(unsigned e, std::span<const Rational> coeffs) {
  std::vector<Rational> folded(e);
  for (std::size_t i = 0; i < coeffs.size(); ++i) folded[i % e] += coeffs[i];
  return folded;
}

unsigned long long lcm_u(unsigned a, unsigned b) { return std::lcm<unsigned long long>(a, b); }

}  // namespace

CycNumber::CycNumber() : conductor_(1), coeffs_(1) {}

CycNumber::CycNumber(const Rational& q, unsigned conductor)
    : conductor_(conductor), coeffs_(euler_phi(conductor)) {
  if (conductor == 0) throw UsageError("conductor must be positive");
  coeffs_[0] = q;
}

CycNumber::CycNumber(unsigned conductor, std::vector<Rational> reduced)
    : conductor_(conductor), coeffs_(std::move(reduced)) {}

CycNumber CycNumber::zeta(unsigned conductor, long k) {
  if (conductor == 0) throw UsageError("conductor must be positive");
  const long e = conductor;
  const long r = ((k % e) + e) % e;
  std::vector<Rational> c(static_cast<std::size_t>(r) + 1);
  c[static_cast<std::size_t>(r)] = 1;
  return CycNumber(conductor, reduce(conductor, Polynomial(std::move(c))));
}

CycNumber CycNumber::from_powers(unsigned conductor, std::span<const Rational> coeffs) {
  if (conductor == 0) throw UsageError("conductor must be positive");
  return CycNumber(conductor, reduce(conductor, Polynomial(fold(conductor, coeffs))));
}

bool CycNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& c) { return c == 0; });
}

bool CycNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const Rational& c) { return c == 0; });
}

CycNumber CycNumber::lift(unsigned target) const {
  if (target == 0 || target % conductor_ != 0) {
    throw UsageError("cannot lift conductor " + std::to_string(conductor_) + " to " + std::to_string(target));
  }
  if (target == conductor_) return *this;
  const unsigned step = target / conductor_;
  std::vector<Rational> spread(static_cast<std::size_t>(step) * coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) spread[i * step] = coeffs_[i];
  return from_powers(target, spread);
}

void CycNumber::require_same_conductor(const CycNumber& b) const {
  if (conductor_ != b.conductor_) {
    throw UsageError("conductor mismatch: " + std::to_string(conductor_) + " vs " +
                     std::to_string(b.conductor_));
  }
}

CycNumber CycNumber::operator-() const {
  CycNumber r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycNumber& CycNumber::operator+=(const CycNumber& b) {
  require_same_conductor(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += b.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator-=(const CycNumber& b) {
  require_same_conductor(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= b.coeffs_[i];
  return *this;
}

CycNumber& CycNumber::operator*=(const CycNumber& b) {
  require_same_conductor(b);
  if (coeffs_.size() == 1) {
    coeffs_[0] *= b.coeffs_[0];
    return *this;
  }
  coeffs_ = reduce(conductor_, Polynomial(coeffs_) * Polynomial(b.coeffs_));
  return *this;
}

CycNumber& CycNumber::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  return *this;
}

bool operator==(const CycNumber& a, const CycNumber& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  const auto common = static_cast<unsigned>(lcm_u(a.conductor_, b.conductor_));
  return a.lift(common).coeffs_ == b.lift(common).coeffs_;
}

CycNumber conjugate(const CycNumber& a) {
  const unsigned e = a.conductor();
  const auto c = a.coeffs();
  std::vector<Rational> mirrored(e);
  for (std::size_t k = 0; k < c.size(); ++k) mirrored[(e - k) % e] = c[k];
  return CycNumber::from_powers(e, mirrored);
}

bool is_real(const CycNumber& a) { return conjugate(a) == a; }

ComplexInterval embed(const CycNumber& a, mpfr_prec_t bits) {
  const unsigned e = a.conductor();
  const auto c = a.coeffs();
  ComplexInterval sum{Interval(bits), Interval(bits)};
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    const Interval coeff(c[k], bits);
    const Rational turns(static_cast<long>(k), static_cast<long>(e));
    sum.re = sum.re + coeff * Interval::cos_turns(turns, bits);
    sum.im = sum.im + coeff * Interval::sin_turns(turns, bits);
  }
  return sum;
}

Sign sign(const CycNumber& a, mpfr_prec_t start_bits) {
  if (!is_real(a)) throw DomainError("sign of a non-real cyclotomic number " + to_string(a));
  if (a.is_zero()) return Sign::Zero;
  if (a.is_rational()) return sgn(a.rational_part()) > 0 ? Sign::Positive : Sign::Negative;
  if (start_bits == 0) start_bits = default_precision_bits();
  for (mpfr_prec_t bits = std::max<mpfr_prec_t>(start_bits, MPFR_PREC_MIN);; bits *= 2) {
    const Interval re = embed(a, bits).re;
    if (re.positive()) return Sign::Positive;
    if (re.negative()) return Sign::Negative;
  }
}

std::string to_string(const CycNumber& a) {
  const auto c = a.coeffs();
  const std::string z = "zeta" + std::to_string(a.conductor());
  std::string out;
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    std::string term;
    if (k == 0) {
      term = to_string(c[k]);
    } else {
      const std::string power = k == 1 ? z : z + "^" + std::to_string(k);
      if (c[k] == 1) term = power;
      else if (c[k] == -1) term = "-" + power;
      else term = to_string(c[k]) + "*" + power;
    }
    if (out.empty()) {
      out = term;
    } else if (term[0] == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out.empty() ? "0" : out;
}

}  // namespace l2sig
