#pragma once

#include <span>
#include <string>
#include <vector>

#include "l2sig/interval.hpp"
#include "l2sig/rational.hpp"

namespace l2sig {

enum class Sign { Negative = -1, Zero = 0, Positive = 1 };

inline int to_int(Sign s) { return static_cast<int>(s); }

/// Element of the cyclotomic field Q(zeta_e), stored in the power basis
/// 1, zeta, ..., zeta^(phi(e)-1) modulo the e-th cyclotomic polynomial.
/// The representation is canonical, so equality is coefficient equality.
class CycNumber {
 public:
  /// Zero of conductor 1.
  CycNumber();
  explicit CycNumber(const Rational& q, unsigned conductor = 1);
  CycNumber(long q) : CycNumber(Rational(q)) {}  // NOLINT: literal convenience

  /// zeta_e^k for any integer k.
  static CycNumber zeta(unsigned conductor, long k);
  /// Builds from coefficients of 1, x, ..., x^(n-1) for arbitrary n and
  /// reduces modulo x^e - 1 and then Phi_e.
  static CycNumber from_powers(unsigned conductor, std::span<const Rational> coeffs);

  unsigned conductor() const { return conductor_; }
  std::span<const Rational> coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_rational() const;
  /// Constant coefficient; only meaningful when is_rational().
  const Rational& rational_part() const { return coeffs_.front(); }

  /// Same value viewed in Q(zeta_E); E must be a multiple of conductor().
  CycNumber lift(unsigned target_conductor) const;

  CycNumber operator-() const;
  CycNumber& operator+=(const CycNumber& b);
  CycNumber& operator-=(const CycNumber& b);
  CycNumber& operator*=(const CycNumber& b);
  CycNumber& operator*=(const Rational& s);

  friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
  friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
  friend CycNumber operator*(CycNumber a, const CycNumber& b) { return a *= b; }
  friend CycNumber operator*(const Rational& s, CycNumber a) { return a *= s; }
  /// Values are compared after lifting to a common conductor.
  friend bool operator==(const CycNumber& a, const CycNumber& b);

 private:
  CycNumber(unsigned conductor, std::vector<Rational> reduced);
  void require_same_conductor(const CycNumber& b) const;

  unsigned conductor_;
  std::vector<Rational> coeffs_;
};

/// Image under zeta -> zeta^-1 (complex conjugation).
CycNumber conjugate(const CycNumber& a);

bool is_real(const CycNumber& a);

/// Enclosure of the complex value at zeta_e = exp(2 pi i / e).
ComplexInterval embed(const CycNumber& a, mpfr_prec_t precision_bits);

/// Certified sign of a real cyclotomic number: exact zero test, then interval
/// evaluation with precision doubling from `start_bits` (0 selects
/// default_precision_bits()).
/// Throws DomainError when `a` is not real.
Sign sign(const CycNumber& a, mpfr_prec_t start_bits = 0);

/// Human readable polynomial form, e.g. "2 + zeta5 + zeta5^4".
std::string to_string(const CycNumber& a);

}  // namespace l2sig
