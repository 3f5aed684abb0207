// Dense polynomial and Laurent polynomial values over std::complex<double>.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "otp/errors.hpp"

namespace otp {

using Complex = std::complex<double>;

// Ordinary polynomial, coefficients ascending: c[k] multiplies z^k.
struct ComplexPolynomial {
  std::vector<Complex> c;

  ComplexPolynomial() = default;
  explicit ComplexPolynomial(std::vector<Complex> coeffs) : c(std::move(coeffs)) {}

  int degree() const { return static_cast<int>(c.size()) - 1; }

  Complex eval(Complex z) const {
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc;
  }
};

// Reversal relative to degree n: q_k = conj(p_{n-k}).
inline ComplexPolynomial reversed(const ComplexPolynomial& p, int n) {
  if (n < p.degree()) throw input_error("reversed: degree context below actual degree");
  std::vector<Complex> q(static_cast<size_t>(n) + 1, Complex(0.0));
  for (int k = 0; k <= n; ++k) {
    int src = n - k;
    if (src <= p.degree()) q[static_cast<size_t>(k)] = std::conj(p.c[static_cast<size_t>(src)]);
  }
  return ComplexPolynomial(std::move(q));
}

// Laurent polynomial: c[i] multiplies z^(lo+i).
struct LaurentPolynomial {
  int lo = 0;
  std::vector<Complex> c;

  LaurentPolynomial() = default;
  LaurentPolynomial(int low, std::vector<Complex> coeffs) : lo(low), c(std::move(coeffs)) {}

  static LaurentPolynomial zero() { return LaurentPolynomial(); }

  static LaurentPolynomial constant(Complex v) { return LaurentPolynomial(0, {v}); }

  static LaurentPolynomial monomial(int power, Complex v) { return LaurentPolynomial(power, {v}); }

  bool empty() const { return c.empty(); }
  int hi() const { return lo + static_cast<int>(c.size()) - 1; }
  int degree() const {
    if (c.empty()) return 0;
    return std::max(std::abs(lo), std::abs(hi()));
  }

  Complex coef(int power) const {
    if (c.empty() || power < lo || power > hi()) return Complex(0.0);
    return c[static_cast<size_t>(power - lo)];
  }

  Complex eval(Complex z) const {
    if (c.empty()) return Complex(0.0);
    if (lo < 0 && std::abs(z) == 0.0) throw input_error("LaurentPolynomial::eval: z = 0 with negative powers");
    Complex acc = 0.0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
    return acc * std::pow(z, Complex(lo));
  }

  LaurentPolynomial shifted(int by) const {
    LaurentPolynomial r = *this;
    r.lo += by;
    return r;
  }
};

inline LaurentPolynomial as_laurent(const ComplexPolynomial& p) { return LaurentPolynomial(0, p.c); }

inline LaurentPolynomial operator*(Complex s, const LaurentPolynomial& p) {
  LaurentPolynomial r = p;
  for (auto& x : r.c) x *= s;
  return r;
}

inline LaurentPolynomial operator+(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  if (x.empty()) return y;
  if (y.empty()) return x;
  int lo = std::min(x.lo, y.lo);
  int hi = std::max(x.hi(), y.hi());
  LaurentPolynomial r(lo, std::vector<Complex>(static_cast<size_t>(hi - lo + 1), Complex(0.0)));
  for (int k = x.lo; k <= x.hi(); ++k) r.c[static_cast<size_t>(k - lo)] += x.coef(k);
  for (int k = y.lo; k <= y.hi(); ++k) r.c[static_cast<size_t>(k - lo)] += y.coef(k);
  return r;
}

inline LaurentPolynomial operator-(const LaurentPolynomial& x, const LaurentPolynomial& y) {
  return x + (Complex(-1.0) * y);
}

// f is real-valued on |z| = 1 iff coef(-k) = conj(coef(k)) for all k.
inline double reality_defect(const LaurentPolynomial& f) {
  double worst = 0.0;
  for (int k = 0; k <= std::max(std::abs(f.lo), std::abs(f.hi())); ++k)
    worst = std::max(worst, std::abs(f.coef(-k) - std::conj(f.coef(k))));
  return worst;
}

inline bool is_real_on_circle(const LaurentPolynomial& f, double tol = 1e-12) {
  return reality_defect(f) <= tol;
}

// Extracts the plain-polynomial part; *neg_residual reports the largest
// coefficient magnitude discarded at negative powers.
inline ComplexPolynomial polynomial_part(const LaurentPolynomial& f, double* neg_residual = nullptr) {
  double worst = 0.0;
  for (int k = f.lo; k < 0; ++k) worst = std::max(worst, std::abs(f.coef(k)));
  if (neg_residual) *neg_residual = worst;
  int hi = std::max(f.hi(), 0);
  std::vector<Complex> c(static_cast<size_t>(hi) + 1, Complex(0.0));
  for (int k = 0; k <= f.hi(); ++k)
    if (k >= 0) c[static_cast<size_t>(k)] = f.coef(k);
  return ComplexPolynomial(std::move(c));
}

}  // namespace otp
