// Independent reference computations for the test suite. Nothing here calls
// the recurrence-based library paths under test: orthonormal systems come
// from dense Gram/Cholesky factorizations built on direct quadrature, monic
// polynomials from classical Gram-Schmidt on monomials, and special values
// from series that converge in a few terms.
#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

#include "otp/laurent.hpp"
#include "otp/measure.hpp"
#include "otp/trig_system.hpp"

namespace oracle {

using otp::Complex;

// Direct trapezoid integration of f(theta) against the measure, long double
// accumulators, no pairwise tricks.
template <typename F>
Complex integrate(const otp::Measure& mu, F&& f) {
  long double re = 0.0L, im = 0.0L;
  int M = mu.nodes();
  for (int k = 0; k < M; ++k) {
    Complex v = f(mu.node_theta(k));
    re += static_cast<long double>(mu.w[static_cast<size_t>(k)]) * v.real();
    im += static_cast<long double>(mu.w[static_cast<size_t>(k)]) * v.imag();
  }
  re /= M;
  im /= M;
  for (const otp::Atom& a : mu.atoms) {
    Complex v = f(a.theta);
    re += static_cast<long double>(a.mass) * v.real();
    im += static_cast<long double>(a.mass) * v.imag();
  }
  return Complex(static_cast<double>(re), static_cast<double>(im));
}

inline Complex eval_laurent(const otp::LaurentPolynomial& p, double theta) {
  Complex s(0.0);
  for (int k = p.lo; k <= p.hi(); ++k) s += p.coef(k) * std::polar(1.0, k * theta);
  return s;
}

// Dense Cholesky orthonormalization of the trigonometric basis
// {1, sin, cos, sin 2., cos 2., ...} under the measure's quadrature inner
// product: G = L L^T, rows of L^{-1} give the orthonormal coefficients.
// Returns rows expressed in the same basis order.
inline std::vector<std::vector<double>> trig_orthonormal_rows(const otp::Measure& mu, int count) {
  std::vector<otp::LaurentPolynomial> u;
  for (int k = 0; k < count; ++k) u.push_back(otp::trig_basis_element(k));

  std::vector<std::vector<double>> G(static_cast<size_t>(count), std::vector<double>(static_cast<size_t>(count)));
  for (int i = 0; i < count; ++i)
    for (int j = 0; j <= i; ++j) {
      Complex v = integrate(mu, [&](double th) { return eval_laurent(u[static_cast<size_t>(i)], th) *
                                                        eval_laurent(u[static_cast<size_t>(j)], th); });
      G[static_cast<size_t>(i)][static_cast<size_t>(j)] = v.real();
      G[static_cast<size_t>(j)][static_cast<size_t>(i)] = v.real();
    }

  // Cholesky G = L L^T.
  std::vector<std::vector<double>> L(static_cast<size_t>(count), std::vector<double>(static_cast<size_t>(count), 0.0));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j <= i; ++j) {
      double s = G[static_cast<size_t>(i)][static_cast<size_t>(j)];
      for (int k = 0; k < j; ++k) s -= L[static_cast<size_t>(i)][static_cast<size_t>(k)] * L[static_cast<size_t>(j)][static_cast<size_t>(k)];
      if (i == j) {
        if (!(s > 0.0)) throw std::runtime_error("oracle Cholesky: non-positive pivot");
        L[static_cast<size_t>(i)][static_cast<size_t>(i)] = std::sqrt(s);
      } else {
        L[static_cast<size_t>(i)][static_cast<size_t>(j)] = s / L[static_cast<size_t>(j)][static_cast<size_t>(j)];
      }
    }
  }

  // Forward-substitute L X = I; row i of X holds the coefficients of the
  // i-th orthonormal element in the u basis.
  std::vector<std::vector<double>> rows(static_cast<size_t>(count), std::vector<double>(static_cast<size_t>(count), 0.0));
  for (int i = 0; i < count; ++i) {
    for (int j = 0; j < i; ++j) {
      double s = 0.0;
      for (int k = j; k < i; ++k) s += L[static_cast<size_t>(i)][static_cast<size_t>(k)] * rows[static_cast<size_t>(k)][static_cast<size_t>(j)];
      rows[static_cast<size_t>(i)][static_cast<size_t>(j)] = -s / L[static_cast<size_t>(i)][static_cast<size_t>(i)];
    }
    rows[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1.0 / L[static_cast<size_t>(i)][static_cast<size_t>(i)];
  }
  return rows;
}

inline otp::LaurentPolynomial row_to_laurent(const std::vector<double>& row) {
  otp::LaurentPolynomial f = otp::LaurentPolynomial::zero();
  for (size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0.0) f = f + row[k] * otp::trig_basis_element(static_cast<int>(k));
  return f;
}

// Classical Gram-Schmidt on monomials with the sesquilinear quadrature inner
// product; subtraction of lower-degree projections keeps the leading
// coefficient 1, so the outputs are the monic orthogonal polynomials.
inline std::vector<otp::ComplexPolynomial> monic_polynomials(const otp::Measure& mu, int N) {
  auto inner = [&](const otp::ComplexPolynomial& p, const otp::ComplexPolynomial& q) {
    return integrate(mu, [&](double th) {
      Complex z = std::polar(1.0, th);
      return std::conj(p.eval(z)) * q.eval(z);
    });
  };
  std::vector<otp::ComplexPolynomial> phi;
  std::vector<double> norm2;
  for (int n = 0; n <= N; ++n) {
    std::vector<Complex> c(static_cast<size_t>(n) + 1, Complex(0.0));
    c[static_cast<size_t>(n)] = Complex(1.0);
    otp::ComplexPolynomial p(std::move(c));
    for (int j = 0; j < n; ++j) {
      Complex coeff = inner(phi[static_cast<size_t>(j)], p) / norm2[static_cast<size_t>(j)];
      for (size_t k = 0; k < phi[static_cast<size_t>(j)].c.size(); ++k) p.c[k] -= coeff * phi[static_cast<size_t>(j)].c[k];
    }
    norm2.push_back(inner(p, p).real());
    phi.push_back(std::move(p));
  }
  return phi;
}

// Modified Bessel function of the first kind by its power series.
inline double bessel_i(int n, double x) {
  double half = 0.5 * x;
  double term = 1.0;
  for (int k = 1; k <= n; ++k) term *= half / k;
  double sum = term;  // k = 0 term: (x/2)^n / n!
  double h2 = half * half;
  for (int k = 1; k < 200; ++k) {
    term *= h2 / (k * (n + k));
    sum += term;
    if (std::abs(term) < 1e-18 * std::abs(sum)) break;
  }
  return sum;
}

// Closed forms for the weight 1 + cos(theta).
inline double cosine_alpha(int n) { return (n % 2 == 0 ? 1.0 : -1.0) / (n + 2.0); }
inline Complex cosine_schur_iterate(int n, Complex z) {
  double sgn = n % 2 == 0 ? 1.0 : -1.0;
  return sgn / (Complex(n + 2.0) + Complex(n + 1.0) * z);
}

}  // namespace oracle
