#pragma once

#include <map>

#include "l2sig/dense.hpp"
#include "l2sig/interval.hpp"

namespace l2sig {

/// Laurent polynomial in one variable t with rational coefficients.
class LaurentPolynomial {
 public:
  using Terms = std::map<long, Rational>;

  LaurentPolynomial() = default;
  static LaurentPolynomial constant(const Rational& q);
  static LaurentPolynomial monomial(const Rational& q, long exponent);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(long exponent) const;
  void add_term(long exponent, const Rational& q);
  /// Largest |exponent| among the terms (0 for the zero polynomial).
  long max_abs_exponent() const;

  /// t -> t^-1
  LaurentPolynomial reflect() const;

  /// Exact value at t = zeta_k^j.
  CycNumber at_root_of_unity(unsigned k, long j) const;
  /// Exact value at the rational point t = re + i im of the unit circle, as an
  /// element of Q(zeta_4).
  CycNumber at_circle_point(const Rational& re, const Rational& im) const;
  /// Enclosure of the value at t = exp(2 pi i turns).
  ComplexInterval at_turns(const Rational& turns, mpfr_prec_t bits) const;

  LaurentPolynomial& operator+=(const LaurentPolynomial& b);
  LaurentPolynomial& operator-=(const LaurentPolynomial& b);
  friend LaurentPolynomial operator+(LaurentPolynomial a, const LaurentPolynomial& b) { return a += b; }
  friend LaurentPolynomial operator-(LaurentPolynomial a, const LaurentPolynomial& b) { return a -= b; }
  friend LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b);
  LaurentPolynomial operator-() const;
  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  Terms terms_;
};

}  // namespace l2sig

namespace Eigen {
template <>
struct NumTraits<l2sig::LaurentPolynomial> : l2sig::ExactNumTraits<l2sig::LaurentPolynomial> {};
template <>
struct NumTraits<l2sig::ComplexInterval> : l2sig::ExactNumTraits<l2sig::ComplexInterval> {};
}  // namespace Eigen

namespace l2sig {

/// Square matrix over Q[t, t^-1] with A_ij(t) = A_ji(t^-1): a hermitian form
/// over the group ring of Z.
struct LaurentHermitianForm {
  DenseMatrix<LaurentPolynomial> matrix;

  std::size_t dim() const { return static_cast<std::size_t>(matrix.rows()); }
  static LaurentHermitianForm one_by_one(LaurentPolynomial entry);
  friend bool operator==(const LaurentHermitianForm& a, const LaurentHermitianForm& b);
};

std::optional<std::pair<std::size_t, std::size_t>> validate_hermitian(const LaurentHermitianForm& form);

LaurentHermitianForm direct_sum(const LaurentHermitianForm& a, const LaurentHermitianForm& b);

/// Division-free determinant.
LaurentPolynomial determinant(const DenseMatrix<LaurentPolynomial>& m);

}  // namespace l2sig
