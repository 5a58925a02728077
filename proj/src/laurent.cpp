#include "l2sig/laurent.hpp"

#include <bit>
#include <cstdint>
#include <cstdlib>
#include <vector>

#include "l2sig/errors.hpp"

namespace l2sig {

LaurentPolynomial LaurentPolynomial::constant(const Rational& q) { return monomial(q, 0); }

LaurentPolynomial LaurentPolynomial::monomial(const Rational& q, long exponent) {
  LaurentPolynomial p;
  p.add_term(exponent, q);
  return p;
}

Rational LaurentPolynomial::coefficient(long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void LaurentPolynomial::add_term(long exponent, const Rational& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, q);
  if (inserted) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

long LaurentPolynomial::max_abs_exponent() const {
  if (terms_.empty()) return 0;
  return std::max(std::labs(terms_.begin()->first), std::labs(terms_.rbegin()->first));
}

LaurentPolynomial LaurentPolynomial::reflect() const {
  LaurentPolynomial r;
  for (auto& [m, q] : terms_) r.terms_.emplace(-m, q);
  return r;
}

CycNumber LaurentPolynomial::at_root_of_unity(unsigned k, long j) const {
  if (k == 0) throw UsageError("root of unity of order 0");
  std::vector<Rational> powers(k);
  const long kk = k;
  for (auto& [m, q] : terms_) {
    const long e = (((j % kk) * (m % kk)) % kk + kk) % kk;
    powers[static_cast<std::size_t>(e)] += q;
  }
  return CycNumber::from_powers(k, powers);
}

CycNumber LaurentPolynomial::at_circle_point(const Rational& re, const Rational& im) const {
  // t^m = a_m + i b_m; t^-m is the conjugate.
  Rational sum_re = 0, sum_im = 0;
  Rational a = 1, b = 0;
  long m = 0;
  const long top = max_abs_exponent();
  for (; m <= top; ++m) {
    const Rational pos = coefficient(m);
    const Rational neg = m == 0 ? Rational(0) : coefficient(-m);
    sum_re += (pos + neg) * a;
    sum_im += (pos - neg) * b;
    Rational na = a * re - b * im;
    Rational nb = a * im + b * re;
    a = std::move(na);
    b = std::move(nb);
  }
  const Rational coeffs[2] = {sum_re, sum_im};
  return CycNumber::from_powers(4, coeffs);
}

ComplexInterval LaurentPolynomial::at_turns(const Rational& turns, mpfr_prec_t bits) const {
  ComplexInterval sum{Interval(bits), Interval(bits)};
  for (auto& [m, q] : terms_) {
    const Interval c(q, bits);
    const Rational arg = turns * m;
    sum.re = sum.re + c * Interval::cos_turns(arg, bits);
    sum.im = sum.im + c * Interval::sin_turns(arg, bits);
  }
  return sum;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& b) {
  for (auto& [m, q] : b.terms_) add_term(m, q);
  return *this;
}

LaurentPolynomial& LaurentPolynomial::operator-=(const LaurentPolynomial& b) {
  for (auto& [m, q] : b.terms_) add_term(m, -q);
  return *this;
}

LaurentPolynomial operator*(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  LaurentPolynomial r;
  for (auto& [m, p] : a.terms_) {
    for (auto& [n, q] : b.terms_) r.add_term(m + n, p * q);
  }
  return r;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial r = *this;
  for (auto& [m, q] : r.terms_) q = -q;
  return r;
}

LaurentHermitianForm LaurentHermitianForm::one_by_one(LaurentPolynomial entry) {
  DenseMatrix<LaurentPolynomial> m(1, 1);
  m(0, 0) = std::move(entry);
  return {std::move(m)};
}

bool operator==(const LaurentHermitianForm& a, const LaurentHermitianForm& b) {
  if (a.matrix.rows() != b.matrix.rows()) return false;
  for (Eigen::Index i = 0; i < a.matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.matrix.cols(); ++j) {
      if (!(a.matrix(i, j) == b.matrix(i, j))) return false;
    }
  }
  return true;
}

std::optional<std::pair<std::size_t, std::size_t>> validate_hermitian(const LaurentHermitianForm& form) {
  const auto& m = form.matrix;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = i; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i).reflect())) return std::pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
    }
  }
  return std::nullopt;
}

LaurentHermitianForm direct_sum(const LaurentHermitianForm& a, const LaurentHermitianForm& b) {
  const Eigen::Index n = a.matrix.rows(), m = b.matrix.rows();
  DenseMatrix<LaurentPolynomial> out(n + m, n + m);
  out.topLeftCorner(n, n) = a.matrix;
  out.bottomRightCorner(m, m) = b.matrix;
  return {std::move(out)};
}

LaurentPolynomial determinant(const DenseMatrix<LaurentPolynomial>& m) {
  const auto n = static_cast<unsigned>(m.rows());
  if (n == 0) return LaurentPolynomial::constant(1);
  if (n > 20) throw UsageError("determinant limited to dimension 20");
  // partial[mask]: signed sum over assignments of the first popcount(mask)
  // rows to the columns in mask.
  std::vector<LaurentPolynomial> partial(std::size_t{1} << n);
  partial[0] = LaurentPolynomial::constant(1);
  for (std::uint32_t mask = 0; mask + 1 < (1u << n); ++mask) {
    if (partial[mask].is_zero()) continue;
    const auto row = static_cast<Eigen::Index>(std::popcount(mask));
    for (unsigned c = 0; c < n; ++c) {
      if (mask & (1u << c)) continue;
      const auto& entry = m(row, static_cast<Eigen::Index>(c));
      if (entry.is_zero()) continue;
      const bool odd = std::popcount(mask >> (c + 1)) % 2 != 0;
      LaurentPolynomial term = partial[mask] * entry;
      if (odd) partial[mask | (1u << c)] -= term;
      else partial[mask | (1u << c)] += term;
    }
  }
  return partial[(std::size_t{1} << n) - 1];
}

}  // namespace l2sig
