#pragma once

// Random generators and floating-point oracles shared by the test binaries.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "l2sig/forms.hpp"
#include "l2sig/laurent.hpp"

namespace l2sig::testing {

using Rng = std::mt19937_64;

inline std::int64_t uniform(Rng& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// p/q with |p| <= bound and 1 <= q <= bound.
inline Rational random_rational(Rng& rng, long bound = 9) {
  Rational q(uniform(rng, -bound, bound), uniform(rng, 1, bound));
  q.canonicalize();
  return q;
}

inline Rational random_nonzero_rational(Rng& rng, long bound = 9) {
  for (;;) {
    Rational q = random_rational(rng, bound);
    if (q != 0) return q;
  }
}

inline RationalMatrix random_symmetric(Rng& rng, Eigen::Index dim, long bound = 9) {
  RationalMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i; j < dim; ++j) m(i, j) = m(j, i) = random_rational(rng, bound);
  }
  return m;
}

inline CycNumber random_cyc(Rng& rng, unsigned conductor, long bound = 5) {
  std::vector<Rational> c(conductor);
  for (auto& x : c) x = uniform(rng, 0, 2) == 0 ? random_rational(rng, bound) : Rational(0);
  return CycNumber::from_powers(conductor, c);
}

inline CycMatrix random_hermitian_cyc(Rng& rng, Eigen::Index dim, unsigned conductor, long bound = 5) {
  CycMatrix m(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const CycNumber d = random_cyc(rng, conductor, bound);
    m(i, i) = d + conjugate(d);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      m(i, j) = random_cyc(rng, conductor, bound);
      m(j, i) = conjugate(m(i, j));
    }
  }
  return m;
}

inline CycMatrix cyc_matrix(const RationalMatrix& m, unsigned conductor) {
  CycMatrix out(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(i, j) = CycNumber(m(i, j), conductor);
  }
  return out;
}

/// a * b with zeros of the right conductor, since Eigen's product would
/// accumulate into a conductor 1 zero.
inline CycMatrix multiply(const CycMatrix& a, const CycMatrix& b, unsigned conductor) {
  CycMatrix out(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < b.cols(); ++j) {
      CycNumber s(Rational(0), conductor);
      for (Eigen::Index k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

inline CycMatrix conjugate_transpose(const CycMatrix& a) {
  CycMatrix out(a.cols(), a.rows());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) out(j, i) = conjugate(a(i, j));
  }
  return out;
}

/// Upper triangular with nonzero rational diagonal times unit lower
/// triangular: always invertible.
inline CycMatrix random_invertible_cyc(Rng& rng, Eigen::Index dim, unsigned conductor) {
  CycMatrix upper(dim, dim), lower(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = 0; j < dim; ++j) {
      upper(i, j) = i == j ? CycNumber(random_nonzero_rational(rng, 4), conductor)
                   : i < j ? random_cyc(rng, conductor, 3)
                           : CycNumber(Rational(0), conductor);
      lower(i, j) = i == j ? CycNumber(Rational(1), conductor)
                   : i > j ? random_cyc(rng, conductor, 3)
                           : CycNumber(Rational(0), conductor);
    }
  }
  return multiply(upper, lower, conductor);
}

inline GroupRingElement random_ring_element(Rng& rng, const FiniteAbelianGroup& g, int max_terms = 3,
                                            long bound = 5) {
  const auto elems = g.elements();
  GroupRingElement x;
  const int terms = static_cast<int>(uniform(rng, 0, max_terms));
  for (int t = 0; t < terms; ++t) {
    x.add_term(elems[static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(elems.size()) - 1))],
               random_rational(rng, bound));
  }
  return x;
}

inline HermitianGroupForm random_form(Rng& rng, const FiniteAbelianGroup& g, Eigen::Index dim) {
  HermitianGroupForm f{g, DenseMatrix<GroupRingElement>(dim, dim)};
  for (Eigen::Index i = 0; i < dim; ++i) {
    const auto d = random_ring_element(rng, g);
    f.matrix(i, i) = d + ring_involution(g, d);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      f.matrix(i, j) = random_ring_element(rng, g);
      f.matrix(j, i) = ring_involution(g, f.matrix(i, j));
    }
  }
  return f;
}

inline LaurentPolynomial random_symmetric_laurent(Rng& rng, long max_exp) {
  LaurentPolynomial p = LaurentPolynomial::constant(random_rational(rng, 4));
  for (long m = 1; m <= max_exp; ++m) {
    const Rational c = uniform(rng, 0, 1) ? random_rational(rng, 4) : Rational(0);
    p.add_term(m, c);
    p.add_term(-m, c);
  }
  return p;
}

inline LaurentHermitianForm random_laurent_form(Rng& rng, Eigen::Index dim, long max_exp) {
  LaurentHermitianForm f{DenseMatrix<LaurentPolynomial>(dim, dim)};
  for (Eigen::Index i = 0; i < dim; ++i) {
    f.matrix(i, i) = random_symmetric_laurent(rng, max_exp);
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      LaurentPolynomial p;
      for (long m = -max_exp; m <= max_exp; ++m) {
        if (uniform(rng, 0, 2) == 0) p.add_term(m, random_rational(rng, 4));
      }
      f.matrix(i, j) = p;
      f.matrix(j, i) = p.reflect();
    }
  }
  return f;
}

// Floating oracles. These deliberately avoid the library's own embedding.

inline std::complex<double> to_complex(const CycNumber& a) {
  std::complex<double> s = 0;
  const auto c = a.coeffs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(k) / a.conductor();
    s += c[k].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return s;
}

struct OracleInertia {
  SignatureTriple triple;
  double min_abs_eigenvalue = 0;
};

inline OracleInertia classify(const Eigen::VectorXd& eig, double zero_tol) {
  OracleInertia out;
  out.min_abs_eigenvalue = eig.size() ? eig.cwiseAbs().minCoeff() : INFINITY;
  for (double e : eig) {
    if (e > zero_tol) ++out.triple.n_plus;
    else if (e < -zero_tol) ++out.triple.n_minus;
    else ++out.triple.n_zero;
  }
  return out;
}

inline OracleInertia float_inertia(const RationalMatrix& m, double zero_tol = 1e-9) {
  Eigen::MatrixXd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = m(i, j).get_d();
  }
  return classify(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(d, Eigen::EigenvaluesOnly).eigenvalues(), zero_tol);
}

inline OracleInertia float_inertia(const CycMatrix& m, double zero_tol = 1e-9) {
  Eigen::MatrixXcd d(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) d(i, j) = to_complex(m(i, j));
  }
  return classify(Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(d, Eigen::EigenvaluesOnly).eigenvalues(), zero_tol);
}

}  // namespace l2sig::testing
