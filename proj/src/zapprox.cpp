#include "l2sig/zapprox.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "l2sig/errors.hpp"

namespace l2sig {

CycMatrix eval_at_root_of_unity(const LaurentHermitianForm& form, unsigned k, long j) {
  CycMatrix out(form.matrix.rows(), form.matrix.cols());
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = form.matrix(r, c).at_root_of_unity(k, j);
  }
  return out;
}

IntervalMatrix eval_at_angle(const LaurentHermitianForm& form, const Rational& turns, mpfr_prec_t bits) {
  IntervalMatrix out(form.matrix.rows(), form.matrix.cols());
  for (Eigen::Index r = 0; r < out.rows(); ++r) {
    for (Eigen::Index c = 0; c < out.cols(); ++c) out(r, c) = form.matrix(r, c).at_turns(turns, bits);
  }
  return out;
}

namespace {

void require_hermitian(const LaurentHermitianForm& form) {
  if (auto bad = validate_hermitian(form)) {
    throw DomainError("Laurent form is not hermitian at (" + std::to_string(bad->first) + "," +
                      std::to_string(bad->second) + ")");
  }
}

// P(x) with P((t + 1/t)/2) = sum_m c_m t^m for a symmetric coefficient list.
Polynomial chebyshev_form(const std::vector<Rational>& symmetric_half) {
  Polynomial p = Polynomial::constant(symmetric_half.empty() ? Rational(0) : symmetric_half[0]);
  for (std::size_t m = 1; m < symmetric_half.size(); ++m) {
    if (symmetric_half[m] == 0) continue;
    p = p + Rational(2 * symmetric_half[m]) * chebyshev_t(static_cast<unsigned>(m));
  }
  return p;
}

// Minimal polynomial of cos(2 pi / d), d >= 3, from the palindromic Phi_d.
Polynomial cosine_minimal_polynomial(unsigned d) {
  const auto& phi = cyclotomic_polynomial(d);
  const auto half = static_cast<std::size_t>(phi.degree() / 2);
  std::vector<Rational> coeffs(half + 1);
  for (std::size_t j = 0; j <= half; ++j) coeffs[j] = phi.coeff(half + j);
  return chebyshev_form(coeffs).monic();
}

long signature_of(const CycMatrix& m) { return inertia(m).signature(); }

// Rational point (c, s) on the upper unit half circle with L < c < U.
std::pair<Rational, Rational> circle_point_between(const Rational& low, const Rational& high) {
  auto point = [](const Rational& u) {
    const Rational den = 1 + u * u;
    return std::pair<Rational, Rational>{(1 - u * u) / den, 2 * u / den};
  };
  Rational u_lo = 0, u_hi = 1;
  // cos decreases in u.
  while (point(u_hi).first >= high) u_lo = u_hi, u_hi *= 2;
  for (;;) {
    auto p = point(u_hi);
    if (p.first > low && p.first < high) return p;
    const Rational mid = (u_lo + u_hi) / 2;
    auto pm = point(mid);
    if (pm.first > low && pm.first < high) return pm;
    if (pm.first >= high) u_lo = mid;
    else u_hi = mid;
  }
}

long signature_at_circle_point(const LaurentHermitianForm& form, const Rational& c, const Rational& s) {
  CycMatrix m(form.matrix.rows(), form.matrix.cols());
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index q = 0; q < m.cols(); ++q) m(r, q) = form.matrix(r, q).at_circle_point(c, s);
  }
  const auto triple = inertia(m);
  if (triple.n_zero != 0) throw std::logic_error("sample point on an arc is degenerate");
  return triple.signature();
}

Integer floor_of(const Rational& q) {
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

Integer ceil_of(const Rational& q) {
  Integer f;
  mpz_cdiv_q(f.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return f;
}

}  // namespace

CircleAnalysis::CircleAnalysis(const LaurentHermitianForm& form) : dim_(form.dim()) {
  require_hermitian(form);
  const LaurentPolynomial det = determinant(form.matrix);
  if (det.is_zero()) throw DomainError("determinant vanishes identically");

  const long top = det.max_abs_exponent();
  std::vector<Rational> half(static_cast<std::size_t>(top) + 1);
  for (long m = 0; m <= top; ++m) half[static_cast<std::size_t>(m)] = det.coefficient(m);
  cos_det_ = chebyshev_form(half);

  std::vector<Rational> shifted(2 * static_cast<std::size_t>(top) + 1);
  for (auto& [m, q] : det.terms()) shifted[static_cast<std::size_t>(m + top)] = q;
  const Polynomial shifted_det(std::move(shifted));
  const auto degree = static_cast<unsigned>(shifted_det.degree());
  // phi(d) >= sqrt(d / 2), so only d <= 2 degree^2 can have Phi_d | shifted_det.
  const unsigned d_max = std::max(2u, 2 * degree * degree);
  for (unsigned d = 1; d <= d_max; ++d) {
    if (euler_phi(d) > degree) continue;
    if ((shifted_det % cyclotomic_polynomial(d)).is_zero()) vanishing_orders_.push_back(d);
  }

  squarefree_ = squarefree_part(cos_det_);
  sturm_ = SturmSequence(squarefree_);

  // Isolate the distinct roots in (-1, 1], ascending.
  std::vector<Breakpoint> roots;
  auto isolate = [&](auto&& self, const Rational& a, const Rational& b, std::size_t count) -> void {
    if (count == 0) return;
    if (count == 1) {
      Breakpoint bp{a, b, squarefree_(b) == 0, std::nullopt, 0, 128};
      if (bp.x_exact) bp.x_lower = b;
      roots.push_back(bp);
      return;
    }
    const Rational mid = (a + b) / 2;
    const std::size_t left = sturm_.count_roots(a, mid);
    self(self, a, mid, left);
    self(self, mid, b, count - left);
  };
  isolate(isolate, Rational(-1), Rational(1), sturm_.count_roots(Rational(-1), Rational(1)));
  std::erase_if(roots, [](const Breakpoint& b) { return b.x_exact && b.x_upper == 1; });

  for (unsigned d : vanishing_orders_) {
    if (d < 3) continue;
    const Polynomial psi = cosine_minimal_polynomial(d);
    const SturmSequence psi_sturm(psi);
    std::vector<Breakpoint*> matched;
    for (auto& b : roots) {
      const bool hit = b.x_exact ? psi(b.x_upper) == 0 : psi_sturm.count_roots(b.x_lower, b.x_upper) == 1;
      if (hit) matched.push_back(&b);
    }
    std::vector<unsigned> numerators;
    for (unsigned a = 1; 2 * a < d; ++a) {
      if (std::gcd(a, d) == 1) numerators.push_back(a);
    }
    if (matched.size() != numerators.size()) throw std::logic_error("cyclotomic zero count mismatch");
    // ascending x <-> descending a
    for (std::size_t i = 0; i < matched.size(); ++i) {
      const unsigned a = numerators[numerators.size() - 1 - i];
      matched[i]->turn = ratio(a, d);
      matched[i]->signature_at = signature_of(eval_at_root_of_unity(form, d, a));
    }
  }
  std::reverse(roots.begin(), roots.end());
  breakpoints_ = std::move(roots);

  sig_at_one_ = signature_of(eval_at_root_of_unity(form, 1, 0));
  sig_at_minus_one_ = signature_of(eval_at_root_of_unity(form, 2, 1));

  // One exact sample per arc. In x, arc i lies between breakpoint i (below)
  // and breakpoint i-1 (above).
  const std::size_t r = breakpoints_.size();
  for (std::size_t i = 0; i <= r; ++i) {
    for (;;) {
      Rational low = -1, high = 1;
      if (i < r) low = breakpoints_[i].x_upper;
      if (i > 0) {
        const auto& above = breakpoints_[i - 1];
        high = above.x_exact ? above.x_upper : above.x_lower;
      }
      if (low < high) {
        const auto [c, s] = circle_point_between(low, high);
        arc_signatures_.push_back(signature_at_circle_point(form, c, s));
        break;
      }
      if (i < r) refine(breakpoints_[i]);
      if (i > 0) refine(breakpoints_[i - 1]);
    }
  }

  for (auto& b : breakpoints_) {
    while (!b.turn && turn_enclosure(b).width() > Rational(1, 1) / Rational(Integer(1) << 80)) refine(b);
  }
}

std::size_t CircleAnalysis::zero_count() const {
  std::size_t n = 2 * breakpoints_.size();
  if (std::find(vanishing_orders_.begin(), vanishing_orders_.end(), 1u) != vanishing_orders_.end()) ++n;
  if (std::find(vanishing_orders_.begin(), vanishing_orders_.end(), 2u) != vanishing_orders_.end()) ++n;
  return n;
}

void CircleAnalysis::refine(Breakpoint& b) const {
  if (!b.turn) b.bits += 8;
  if (b.x_exact) return;
  const Rational mid = (b.x_lower + b.x_upper) / 2;
  if (squarefree_(mid) == 0) {
    b.x_lower = b.x_upper = mid;
    b.x_exact = true;
  } else if (sturm_.count_roots(b.x_lower, mid) == 1) {
    b.x_upper = mid;
  } else {
    b.x_lower = mid;
  }
}

RationalEnclosure CircleAnalysis::turn_enclosure(const Breakpoint& b) {
  if (b.turn) return {*b.turn, *b.turn};
  const Interval x = b.x_exact ? Interval(b.x_upper, b.bits) : Interval(b.x_lower, b.x_upper, b.bits);
  const Interval two_pi = Interval(Rational(2), b.bits) * Interval::pi(b.bits);
  const Interval t = x.acos() / two_pi;
  return {t.lower(), t.upper()};
}

Rational CircleAnalysis::finite_quotient_sig(unsigned k) const {
  if (k == 0) throw UsageError("quotient order must be positive");
  const Rational kq(k);
  // #{j >= 0 : j/k < b} and #{j >= 0 : j/k <= b} for a breakpoint.
  auto counts = [&](const Breakpoint& b) -> std::pair<Integer, Integer> {
    if (b.turn) return {ceil_of(kq * *b.turn), floor_of(kq * *b.turn) + 1};
    Breakpoint local = b;
    for (;;) {
      const auto enc = turn_enclosure(local);
      const Integer lo = floor_of(kq * enc.lower), hi = floor_of(kq * enc.upper);
      if (lo == hi) return {lo + 1, lo + 1};
      refine(local);
    }
  };

  Integer total = sig_at_one_;
  if (k % 2 == 0) total += sig_at_minus_one_;
  Integer prev_at_or_below = 1;  // j = 0
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    const auto& b = breakpoints_[i];
    const auto [below, at_or_below] = counts(b);
    total += 2 * arc_signatures_[i] * (below - prev_at_or_below);
    if (at_or_below != below) total += 2 * b.signature_at;
    prev_at_or_below = at_or_below;
  }
  const Integer below_half = (k + 1) / 2;  // j < k/2
  total += 2 * arc_signatures_.back() * (below_half - prev_at_or_below);
  return ratio(total, Integer(k));
}

RationalEnclosure CircleAnalysis::sig_l2(const Rational& tolerance) const {
  if (tolerance < 0) throw UsageError("tolerance must be nonnegative");
  std::vector<Breakpoint> local = breakpoints_;
  for (;;) {
    RationalEnclosure sum{Rational(arc_signatures_.back()), Rational(arc_signatures_.back())};
    std::size_t widest = local.size();
    Rational widest_width = 0;
    for (std::size_t i = 0; i < local.size(); ++i) {
      const long jump = arc_signatures_[i] - arc_signatures_[i + 1];
      if (jump == 0) continue;
      const auto enc = turn_enclosure(local[i]);
      const Rational a = 2 * jump * enc.lower, b = 2 * jump * enc.upper;
      sum = sum + RationalEnclosure{std::min(a, b), std::max(a, b)};
      if (abs(b - a) > widest_width) widest_width = abs(b - a), widest = i;
    }
    if (sum.width() <= tolerance || widest == local.size()) return sum;
    refine(local[widest]);
  }
}

Rational finite_quotient_sig_direct(const LaurentHermitianForm& form, unsigned k) {
  if (k == 0) throw UsageError("quotient order must be positive");
  require_hermitian(form);
  long total = 0;
  for (unsigned j = 0; j < k; ++j) total += signature_of(eval_at_root_of_unity(form, k, j));
  return ratio(total, static_cast<long>(k));
}

Rational finite_quotient_sig(const LaurentHermitianForm& form, unsigned k) {
  require_hermitian(form);
  if (determinant(form.matrix).is_zero()) return finite_quotient_sig_direct(form, k);
  return CircleAnalysis(form).finite_quotient_sig(k);
}

RationalEnclosure sig_l2_circle(const LaurentHermitianForm& form, const Rational& tolerance) {
  return CircleAnalysis(form).sig_l2(tolerance);
}

ConvergenceReport convergence_report(const LaurentHermitianForm& form, const std::vector<unsigned>& schedule,
                                     const Rational& tolerance) {
  if (schedule.empty()) throw UsageError("empty schedule");
  for (std::size_t i = 0; i < schedule.size(); ++i) {
    if (schedule[i] == 0 || (i > 0 && schedule[i] <= schedule[i - 1])) {
      throw UsageError("schedule must be positive and strictly increasing");
    }
  }
  const CircleAnalysis analysis(form);
  ConvergenceReport report;
  report.limit = analysis.sig_l2(tolerance);
  for (unsigned k : schedule) {
    ConvergenceSample s{k, analysis.finite_quotient_sig(k), 0};
    s.deviation = std::max(abs(s.value - report.limit.lower), abs(s.value - report.limit.upper));
    report.samples.push_back(std::move(s));
  }
  const std::size_t tail = (schedule.size() + 2) / 3;
  report.max_deviation_tail = 0;
  for (std::size_t i = schedule.size() - tail; i < schedule.size(); ++i) {
    report.max_deviation_tail = std::max(report.max_deviation_tail, report.samples[i].deviation);
  }
  return report;
}

}  // namespace l2sig
