#pragma once

#include <optional>
#include <vector>

#include "l2sig/laurent.hpp"
#include "l2sig/polynomial.hpp"

namespace l2sig {

using IntervalMatrix = DenseMatrix<ComplexInterval>;

/// Exact evaluation at t = zeta_k^j; entries live in Q(zeta_k).
CycMatrix eval_at_root_of_unity(const LaurentHermitianForm& form, unsigned k, long j);
/// Enclosure of the matrix at t = exp(2 pi i turns).
IntervalMatrix eval_at_angle(const LaurentHermitianForm& form, const Rational& turns, mpfr_prec_t bits = 64);

/// Certified enclosure [lower, upper] of a real number.
struct RationalEnclosure {
  Rational lower;
  Rational upper;

  bool exact() const { return lower == upper; }
  Rational width() const { return upper - lower; }
  bool contains(const Rational& q) const { return lower <= q && q <= upper; }
  friend RationalEnclosure operator+(const RationalEnclosure& a, const RationalEnclosure& b) {
    return {a.lower + b.lower, a.upper + b.upper};
  }
};

/// Where the pointwise signature of a hermitian Laurent form can change on
/// the unit circle, and what it is in between.
///
/// Angles are measured in turns (fractions of 2 pi). Because the coefficients
/// are rational, F(exp(-i theta)) is the complex conjugate of F(exp(i theta)),
/// so only turns in [0, 1/2] are analysed. The zeros of det F on the upper
/// half circle are the roots in (-1, 1) of the polynomial P with
/// P(cos theta) = det F(exp(i theta)). Zeros at rational turns a/d are found
/// exactly from the cyclotomic factors Phi_d of t^D det F; every other zero is
/// an irrational turn held as a refinable isolating interval.
class CircleAnalysis {
 public:
  /// Throws DomainError when det F vanishes identically, or on non-hermitian input.
  explicit CircleAnalysis(const LaurentHermitianForm& form);

  struct Breakpoint {
    /// cos(2 pi turn) lies in (x_lower, x_upper], or equals x_upper when x_exact.
    Rational x_lower;
    Rational x_upper;
    bool x_exact = false;
    /// Set when the zero sits at a rational turn a/d.
    std::optional<Rational> turn;
    /// Signature of F at the zero itself (degenerate point, zeros dropped).
    long signature_at = 0;
    mpfr_prec_t bits = 128;
  };

  std::size_t dim() const { return dim_; }
  /// Breakpoints in increasing turn order on (0, 1/2).
  const std::vector<Breakpoint>& breakpoints() const { return breakpoints_; }
  /// arc_signatures()[i] is the signature on the open arc before breakpoint i;
  /// the last entry is the arc ending at turn 1/2.
  const std::vector<long>& arc_signatures() const { return arc_signatures_; }
  long signature_at_one() const { return sig_at_one_; }
  long signature_at_minus_one() const { return sig_at_minus_one_; }
  /// Number of zeros of det F on the whole circle (turns in [0, 1)).
  std::size_t zero_count() const;
  /// The polynomial P(x) with P(cos theta) = det F(exp(i theta)).
  const Polynomial& cosine_determinant() const { return cos_det_; }
  /// Orders d of roots of unity at which det F vanishes.
  const std::vector<unsigned>& vanishing_orders() const { return vanishing_orders_; }

  /// (1/k) sum_j sig F(zeta_k^j), exactly.
  Rational finite_quotient_sig(unsigned k) const;
  /// Enclosure of (1/2pi) int sig F(e^{i theta}) d theta with width <= tolerance.
  RationalEnclosure sig_l2(const Rational& tolerance) const;

  /// Turn enclosure of a breakpoint at its current refinement.
  static RationalEnclosure turn_enclosure(const Breakpoint& b);

 private:
  void refine(Breakpoint& b) const;

  std::size_t dim_ = 0;
  Polynomial cos_det_;
  Polynomial squarefree_;
  SturmSequence sturm_{Polynomial()};
  std::vector<unsigned> vanishing_orders_;
  std::vector<Breakpoint> breakpoints_;
  std::vector<long> arc_signatures_;
  long sig_at_one_ = 0;
  long sig_at_minus_one_ = 0;
};

/// Exact average of signatures over the k-th roots of unity, computed from
/// the circle analysis (falls back to direct evaluation when det F vanishes
/// identically).
Rational finite_quotient_sig(const LaurentHermitianForm& form, unsigned k);
/// The same average by exact evaluation at every k-th root of unity in Q(zeta_k).
Rational finite_quotient_sig_direct(const LaurentHermitianForm& form, unsigned k);

/// L2 signature for the group Z; DomainError when det F vanishes identically.
RationalEnclosure sig_l2_circle(const LaurentHermitianForm& form, const Rational& tolerance);

struct ConvergenceSample {
  unsigned k = 0;
  Rational value;
  /// max |value - x| over x in the limit enclosure.
  Rational deviation;
};

struct ConvergenceReport {
  std::vector<ConvergenceSample> samples;
  RationalEnclosure limit;
  /// Largest deviation over the final third of the schedule.
  Rational max_deviation_tail;
};

/// Schedule must be nonempty and strictly increasing (UsageError otherwise).
ConvergenceReport convergence_report(const LaurentHermitianForm& form, const std::vector<unsigned>& schedule,
                                     const Rational& tolerance);

}  // namespace l2sig
