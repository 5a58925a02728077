#include "l2sig/interval.hpp"

#include <algorithm>
#include <cstdlib>
#include <utility>

#include "l2sig/errors.hpp"

namespace l2sig {

mpfr_prec_t default_precision_bits() {
  static const mpfr_prec_t bits = [] {
    const char* env = std::getenv("L2SIG_PRECISION");
    if (env == nullptr) return mpfr_prec_t{64};
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < MPFR_PREC_MIN || v > (1L << 24)) return mpfr_prec_t{64};
    return static_cast<mpfr_prec_t>(v);
  }();
  return bits;
}

namespace {

// Scratch MPFR value with RAII cleanup.
struct Scratch {
  mpfr_t v;
  explicit Scratch(mpfr_prec_t prec) { mpfr_init2(v, prec); }
  ~Scratch() { mpfr_clear(v); }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;
};

Rational exact_value(const mpfr_t x) {
  Rational q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// Exact cos(2*pi*t) for t in [0,1) when it is rational, else returns false.
bool exact_cos(const Rational& t, Rational& out) {
  Rational twelve_t = t * 12;
  if (twelve_t.get_den() != 1) return false;
  switch (twelve_t.get_num().get_si()) {
    case 0: out = 1; return true;
    case 2: case 10: out = Rational(1, 2); return true;
    case 3: case 9: out = 0; return true;
    case 4: case 8: out = Rational(-1, 2); return true;
    case 6: out = -1; return true;
    default: return false;
  }
}

bool exact_sin(const Rational& t, Rational& out) {
  Rational twelve_t = t * 12;
  if (twelve_t.get_den() != 1) return false;
  switch (twelve_t.get_num().get_si()) {
    case 0: case 6: out = 0; return true;
    case 1: case 5: out = Rational(1, 2); return true;
    case 3: out = 1; return true;
    case 7: case 11: out = Rational(-1, 2); return true;
    case 9: out = -1; return true;
    default: return false;
  }
}

Rational fractional_part(const Rational& q) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rational(fl);
}

template <class Fn>
Interval trig_turns(const Rational& turns, mpfr_prec_t prec, Fn fn) {
  const mpfr_prec_t work = prec + 32;
  Scratch x(work);
  mpfr_const_pi(x.v, MPFR_RNDN);
  mpfr_mul_2ui(x.v, x.v, 1, MPFR_RNDN);
  mpfr_mul_q(x.v, x.v, turns.get_mpq_t(), MPFR_RNDN);
  // |x - 2*pi*turns| <= 8 * 2^(2-work); the derivative of sin/cos is bounded by 1.
  Scratch err(work);
  mpfr_set_ui_2exp(err.v, 1, 5 - work, MPFR_RNDU);
  Interval out(prec);
  Scratch lo(work), hi(work);
  fn(lo.v, x.v, MPFR_RNDD);
  fn(hi.v, x.v, MPFR_RNDU);
  mpfr_sub(lo.v, lo.v, err.v, MPFR_RNDD);
  mpfr_add(hi.v, hi.v, err.v, MPFR_RNDU);
  const Rational lo_q = std::max(exact_value(lo.v), Rational(-1));
  const Rational hi_q = std::min(exact_value(hi.v), Rational(1));
  return Interval(lo_q, hi_q, prec);
}

}  // namespace

Interval::Interval(mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Interval::Interval(const Rational& q, mpfr_prec_t prec) : Interval(q, q, prec) {}

Interval::Interval(const Rational& lo, const Rational& hi, mpfr_prec_t prec) {
  mpfr_init2(lo_, prec);
  mpfr_init2(hi_, prec);
  mpfr_set_q(lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, hi.get_mpq_t(), MPFR_RNDU);
}

Interval::Interval(const Interval& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Interval::Interval(Interval&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Interval& Interval::operator=(Interval other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Interval::~Interval() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Interval Interval::pi(mpfr_prec_t prec) {
  Interval r(prec);
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::cos_turns(const Rational& turns, mpfr_prec_t prec) {
  const Rational t = fractional_part(turns);
  if (Rational v; exact_cos(t, v)) return Interval(v, prec);
  return trig_turns(t, prec, [](mpfr_t r, const mpfr_t x, mpfr_rnd_t rnd) { mpfr_cos(r, x, rnd); });
}

Interval Interval::sin_turns(const Rational& turns, mpfr_prec_t prec) {
  const Rational t = fractional_part(turns);
  if (Rational v; exact_sin(t, v)) return Interval(v, prec);
  return trig_turns(t, prec, [](mpfr_t r, const mpfr_t x, mpfr_rnd_t rnd) { mpfr_sin(r, x, rnd); });
}

Interval Interval::acos() const {
  const mpfr_prec_t prec = precision();
  Interval r(prec);
  Scratch lo(prec), hi(prec);
  mpfr_set(lo.v, lo_, MPFR_RNDD);
  mpfr_set(hi.v, hi_, MPFR_RNDU);
  if (mpfr_cmp_si(lo.v, -1) < 0) mpfr_set_si(lo.v, -1, MPFR_RNDD);
  if (mpfr_cmp_si(hi.v, 1) > 0) mpfr_set_si(hi.v, 1, MPFR_RNDU);
  if (mpfr_cmp(lo.v, hi.v) > 0) throw DomainError("acos of an interval outside [-1, 1]");
  // arccos is decreasing
  mpfr_acos(r.lo_, hi.v, MPFR_RNDD);
  mpfr_acos(r.hi_, lo.v, MPFR_RNDU);
  return r;
}

Rational Interval::lower() const { return exact_value(lo_); }
Rational Interval::upper() const { return exact_value(hi_); }

double Interval::midpoint() const {
  return 0.5 * (mpfr_get_d(lo_, MPFR_RNDN) + mpfr_get_d(hi_, MPFR_RNDN));
}

namespace {

std::string format(const mpfr_t x, int digits, bool up) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, up ? "%.*RUe" : "%.*RDe", digits, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

std::string Interval::lower_string(int digits) const { return format(lo_, digits, false); }
std::string Interval::upper_string(int digits) const { return format(hi_, digits, true); }

Interval operator+(const Interval& a, const Interval& b) {
  Interval r(std::max(a.precision(), b.precision()));
  mpfr_add(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_add(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Interval Interval::operator-() const {
  Interval r(precision());
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Interval operator-(const Interval& a, const Interval& b) { return a + (-b); }

namespace {

template <class Op>
Interval corner_hull(const Interval& a, const Interval& b, const mpfr_t alo, const mpfr_t ahi,
                     const mpfr_t blo, const mpfr_t bhi, Op op) {
  const mpfr_prec_t prec = std::max(a.precision(), b.precision());
  const mpfr_srcptr xs[2] = {alo, ahi};
  const mpfr_srcptr ys[2] = {blo, bhi};
  Scratch lo(prec), hi(prec), t(prec);
  mpfr_set_inf(lo.v, 1);
  mpfr_set_inf(hi.v, -1);
  for (auto x : xs) {
    for (auto y : ys) {
      op(t.v, x, y, MPFR_RNDD);
      mpfr_min(lo.v, lo.v, t.v, MPFR_RNDD);
      op(t.v, x, y, MPFR_RNDU);
      mpfr_max(hi.v, hi.v, t.v, MPFR_RNDU);
    }
  }
  return Interval(exact_value(lo.v), exact_value(hi.v), prec);
}

}  // namespace

Interval operator*(const Interval& a, const Interval& b) {
  return corner_hull(a, b, a.lo_, a.hi_, b.lo_, b.hi_,
                     [](mpfr_t r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_mul(r, x, y, rnd); });
}

Interval operator/(const Interval& a, const Interval& b) {
  if (!b.positive() && !b.negative()) throw DomainError("interval division by an interval containing zero");
  return corner_hull(a, b, a.lo_, a.hi_, b.lo_, b.hi_,
                     [](mpfr_t r, mpfr_srcptr x, mpfr_srcptr y, mpfr_rnd_t rnd) { mpfr_div(r, x, y, rnd); });
}

}  // namespace l2sig
