#pragma once

#include <Eigen/Core>

#include <algorithm>
#include <cstddef>
#include <type_traits>
#include <vector>
#include <optional>
#include <utility>

#include "l2sig/cyclotomic.hpp"
#include "l2sig/rational.hpp"

namespace l2sig {

/// Exact scalars that are only stored and combined by hand-written loops
/// share these traits; Eigen needs them for its assignment cost model.
template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
  using Real = T;
  using NonInteger = T;
  using Literal = T;
  using Nested = T;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 1,
    AddCost = 16,
    MulCost = 64
  };
};

}  // namespace l2sig

namespace Eigen {
template <>
struct NumTraits<l2sig::Rational> : l2sig::ExactNumTraits<l2sig::Rational> {};
template <>
struct NumTraits<l2sig::CycNumber> : l2sig::ExactNumTraits<l2sig::CycNumber> {};
}  // namespace Eigen

namespace l2sig {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using RationalMatrix = DenseMatrix<Rational>;
using CycMatrix = DenseMatrix<CycNumber>;

/// Inertia (n_plus, n_minus, n_zero) of a hermitian matrix.
struct SignatureTriple {
  std::size_t n_plus = 0;
  std::size_t n_minus = 0;
  std::size_t n_zero = 0;

  long signature() const { return static_cast<long>(n_plus) - static_cast<long>(n_minus); }
  std::size_t dim() const { return n_plus + n_minus + n_zero; }
  friend bool operator==(const SignatureTriple&, const SignatureTriple&) = default;
};

/// Scalar hooks used by the congruence diagonalization.
template <class Scalar>
struct ScalarOps;

template <>
struct ScalarOps<Rational> {
  static Rational conj(const Rational& x) { return x; }
  static bool is_zero(const Rational& x) { return x == 0; }
  static Sign sign(const Rational& x) { return static_cast<Sign>(sgn(x)); }
  static void for_each_coeff(const Rational& x, auto&& fn) { fn(x); }
  static void scale(Rational& x, const Rational& s) { x *= s; }
  static Rational one_like(const Rational&) { return 1; }
};

template <>
struct ScalarOps<CycNumber> {
  static CycNumber conj(const CycNumber& x) { return conjugate(x); }
  static bool is_zero(const CycNumber& x) { return x.is_zero(); }
  static Sign sign(const CycNumber& x) { return l2sig::sign(x); }
  static void for_each_coeff(const CycNumber& x, auto&& fn) {
    for (const auto& c : x.coeffs()) fn(c);
  }
  static void scale(CycNumber& x, const Rational& s) { x *= s; }
  static CycNumber one_like(const CycNumber& x) { return CycNumber(Rational(1), x.conductor()); }
};

/// First (i, j) with A(i,j) != conj(A(j,i)), scanning rows in order.
template <class Scalar>
std::optional<std::pair<std::size_t, std::size_t>> hermitian_violation(const DenseMatrix<Scalar>& a) {
  using Ops = ScalarOps<Scalar>;
  if (a.rows() != a.cols()) return std::pair<std::size_t, std::size_t>{0, 0};
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = i; j < a.cols(); ++j) {
      if (!(a(i, j) == Ops::conj(a(j, i)))) {
        return std::pair{static_cast<std::size_t>(i), static_cast<std::size_t>(j)};
      }
    }
  }
  return std::nullopt;
}

namespace detail {

// Divides every entry of the active block by the positive rational content of
// its coefficients, leaving a primitive integral block. Inertia is unchanged.
template <class Scalar>
void make_primitive(DenseMatrix<Scalar>& a, const std::vector<Eigen::Index>& active) {
  using Ops = ScalarOps<Scalar>;
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (auto r : active) {
    for (auto s : active) {
      Ops::for_each_coeff(a(r, s), [&](const Rational& c) {
        if (c == 0) return;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
      });
    }
  }
  if (num_gcd == 0 || (num_gcd == 1 && den_lcm == 1)) return;
  const Rational factor(den_lcm, num_gcd);
  for (auto r : active) {
    for (auto s : active) Ops::scale(a(r, s), factor);
  }
}

}  // namespace detail

/// Inertia of a hermitian matrix by fraction-free hermitian congruence
/// diagonalization. The input is not checked; see hermitian_violation.
///
/// Each pivot d = a_pp != 0 replaces the remaining block by
/// sign(d) * (d * a_rs - a_rp * a_ps), which is |d| times the Schur complement
/// and therefore has the same inertia. When the remaining diagonal is zero but
/// some a_ij is not, row/column j is added into i with weight c = 1, or
/// c = a_ij when a_ij + conj(a_ij) = 0; the new diagonal entry is then
/// 2|a_ij|^2 > 0.
template <class Scalar>
SignatureTriple inertia(DenseMatrix<Scalar> a) {
  using Ops = ScalarOps<Scalar>;
  SignatureTriple out;
  std::vector<Eigen::Index> active(static_cast<std::size_t>(a.rows()));
  for (Eigen::Index i = 0; i < a.rows(); ++i) active[static_cast<std::size_t>(i)] = i;

  while (!active.empty()) {
    auto pivot_it = std::find_if(active.begin(), active.end(), [&](Eigen::Index i) { return !Ops::is_zero(a(i, i)); });
    if (pivot_it == active.end()) {
      std::optional<std::pair<Eigen::Index, Eigen::Index>> off;
      for (auto i : active) {
        for (auto j : active) {
          if (i != j && !Ops::is_zero(a(i, j))) {
            off = std::pair{i, j};
            break;
          }
        }
        if (off) break;
      }
      if (!off) {
        out.n_zero += active.size();
        break;
      }
      const auto [i, j] = *off;
      const Scalar c = Ops::is_zero(a(i, j) + a(j, i)) ? a(i, j) : Ops::one_like(a(i, j));
      const Scalar cc = Ops::conj(c);
      for (auto k : active) a(i, k) += c * a(j, k);
      for (auto k : active) a(k, i) += a(k, j) * cc;
      continue;
    }

    const Eigen::Index p = *pivot_it;
    const Scalar d = a(p, p);
    const Sign s = Ops::sign(d);
    (s == Sign::Positive ? out.n_plus : out.n_minus) += 1;
    active.erase(pivot_it);
    for (auto r : active) {
      for (auto t : active) {
        Scalar v = d * a(r, t) - a(r, p) * a(p, t);
        a(r, t) = s == Sign::Negative ? Scalar(-v) : std::move(v);
      }
    }
    detail::make_primitive(a, active);
  }
  return out;
}

}  // namespace l2sig
