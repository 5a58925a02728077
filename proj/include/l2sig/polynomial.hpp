#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "l2sig/rational.hpp"

namespace l2sig {

/// Dense univariate polynomial over Q, coefficient i multiplies x^i.
/// Trailing zero coefficients are never stored; the zero polynomial is empty.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  const Rational& leading() const { return coeffs_.back(); }

  Rational operator()(const Rational& x) const;
  int sign_at(const Rational& x) const { return sgn((*this)(x)); }

  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& a);
  Polynomial operator-() const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; divisor must be nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
Polynomial operator%(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(const Polynomial& a, const Polynomial& b);
/// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);

/// e-th cyclotomic polynomial with integer coefficients.
const Polynomial& cyclotomic_polynomial(unsigned e);
unsigned euler_phi(unsigned e);

/// Sturm chain of a squarefree polynomial.
class SturmSequence {
 public:
  explicit SturmSequence(const Polynomial& p);
  /// Number of distinct real roots in the half-open interval (a, b].
  std::size_t count_roots(const Rational& a, const Rational& b) const;

 private:
  std::size_t sign_variations(const Rational& x) const;
  std::vector<Polynomial> chain_;
};

/// Chebyshev polynomial T_m of the first kind.
Polynomial chebyshev_t(unsigned m);

}  // namespace l2sig
