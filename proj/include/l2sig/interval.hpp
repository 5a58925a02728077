#pragma once

#include <mpfr.h>

#include <string>

#include "l2sig/rational.hpp"

namespace l2sig {

/// Starting precision for certified numerics: $L2SIG_PRECISION if set to a
/// positive integer, else 64. Read once per process.
mpfr_prec_t default_precision_bits();

/// Closed real interval with MPFR endpoints. Every operation rounds outward,
/// so the result always encloses the exact result of the operation applied
/// to any points of the operands.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 64);
  Interval(const Rational& q, mpfr_prec_t prec);
  Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec);
  Interval(const Interval& other);
  Interval(Interval&& other) noexcept;
  Interval& operator=(Interval other) noexcept;
  ~Interval();

  static Interval pi(mpfr_prec_t prec);
  /// cos / sin of 2*pi*turns. Exact point intervals where the value is
  /// one of 0, +-1/2, +-1.
  static Interval cos_turns(const Rational& turns, mpfr_prec_t prec);
  static Interval sin_turns(const Rational& turns, mpfr_prec_t prec);

  /// Enclosure of arccos over the interval intersected with [-1, 1].
  Interval acos() const;

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }
  Rational lower() const;
  Rational upper() const;
  Rational width() const { return upper() - lower(); }
  bool is_point() const { return mpfr_equal_p(lo_, hi_) != 0; }
  bool positive() const { return mpfr_sgn(lo_) > 0; }
  bool negative() const { return mpfr_sgn(hi_) < 0; }
  bool contains(const Rational& q) const { return lower() <= q && q <= upper(); }
  double midpoint() const;

  /// Outward-rounded scientific notation with `digits` fractional digits.
  std::string lower_string(int digits = 17) const;
  std::string upper_string(int digits = 17) const;

  friend Interval operator+(const Interval& a, const Interval& b);
  friend Interval operator-(const Interval& a, const Interval& b);
  friend Interval operator*(const Interval& a, const Interval& b);
  /// Divisor must not contain zero.
  friend Interval operator/(const Interval& a, const Interval& b);
  Interval operator-() const;

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

struct ComplexInterval {
  Interval re;
  Interval im;

  friend ComplexInterval operator+(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexInterval operator*(const ComplexInterval& a, const ComplexInterval& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
};

}  // namespace l2sig
