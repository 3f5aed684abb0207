// Trigonometric moment sequences and the two inner products they induce.
//
// c_n = integral of conj(tau)^n dmu, so integral of tau^m dmu = conj(c_m).
// The sesquilinear product <f,g> = integral conj(f) g dmu reduces to the
// Toeplitz form sum_{j,k} conj(f_j) g_k c_{j-k}; the real bilinear product
// <f,g> = integral f g dmu to sum_{j,k} f_j g_k m_{j+k} with m_n = conj(c_n).
#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/laurent.hpp"

namespace otp {

struct MomentSequence {
  std::vector<Complex> c;  // c[0..N]

  MomentSequence() = default;
  explicit MomentSequence(std::vector<Complex> values) : c(std::move(values)) {
    if (c.empty()) throw input_error("MomentSequence: needs at least c_0");
    if (std::abs(c[0] - 1.0) > 1e-12)
      throw input_error("MomentSequence: c_0 must be 1 (normalized measure), got " + std::to_string(std::abs(c[0])));
    for (size_t n = 1; n < c.size(); ++n)
      if (std::abs(c[n]) > 1.0 + 1e-12)
        throw input_error("MomentSequence: |c_" + std::to_string(n) + "| exceeds 1");
  }

  int order() const { return static_cast<int>(c.size()) - 1; }

  // c_{-n} = conj(c_n).
  Complex at(int n) const {
    int a = std::abs(n);
    if (a > order()) throw input_error("MomentSequence: index " + std::to_string(n) + " beyond order " + std::to_string(order()));
    Complex v = c[static_cast<size_t>(a)];
    return n >= 0 ? v : std::conj(v);
  }

  // integral of tau^n dmu.
  Complex m(int n) const { return std::conj(at(n)); }
};

namespace detail {

inline void require_order(const MomentSequence& c, int need, const char* who) {
  if (need > c.order())
    throw input_error(std::string(who) + ": moment order " + std::to_string(c.order()) +
                      " insufficient, need >= " + std::to_string(need));
}

}  // namespace detail

// <p,q> = sum_{j,k} conj(p_j) q_k c_{j-k}.
inline Complex complex_inner(const LaurentPolynomial& p, const LaurentPolynomial& q, const MomentSequence& c) {
  if (p.empty() || q.empty()) return Complex(0.0);
  int need = std::max(p.hi() - q.lo, q.hi() - p.lo);
  detail::require_order(c, need, "complex_inner");
  Complex acc = 0.0;
  for (int j = p.lo; j <= p.hi(); ++j) {
    Complex pj = std::conj(p.coef(j));
    if (pj == Complex(0.0)) continue;
    for (int k = q.lo; k <= q.hi(); ++k) acc += pj * q.coef(k) * c.at(j - k);
  }
  return acc;
}

inline Complex complex_inner(const ComplexPolynomial& p, const ComplexPolynomial& q, const MomentSequence& c) {
  return complex_inner(as_laurent(p), as_laurent(q), c);
}

// <f,g> = sum_{j,k} f_j g_k m_{j+k}; requires both arguments real on the
// circle, in which case the value is real and the rounding-level imaginary
// residue (<= 1e-12) is dropped.
inline Complex real_inner(const LaurentPolynomial& f, const LaurentPolynomial& g, const MomentSequence& c) {
  if (f.empty() || g.empty()) return Complex(0.0);
  if (!is_real_on_circle(f, 1e-10) || !is_real_on_circle(g, 1e-10))
    throw input_error("real_inner: arguments must be real-valued on the unit circle");
  int need = std::max({std::abs(f.lo + g.lo), std::abs(f.hi() + g.hi()), std::abs(f.lo + g.hi()), std::abs(f.hi() + g.lo)});
  detail::require_order(c, need, "real_inner");
  Complex acc = 0.0;
  for (int j = f.lo; j <= f.hi(); ++j) {
    Complex fj = f.coef(j);
    if (fj == Complex(0.0)) continue;
    for (int k = g.lo; k <= g.hi(); ++k) acc += fj * g.coef(k) * c.m(j + k);
  }
  if (std::abs(acc.imag()) <= 1e-12) acc = Complex(acc.real(), 0.0);
  return acc;
}

// Cholesky pivots of the Toeplitz matrix [c_{j-k}]_{j,k=0..n}. Returns the
// smallest pivot; a non-positive value certifies the moment data is not
// positive definite at order n.
inline double toeplitz_min_pivot(const MomentSequence& c, int n) {
  detail::require_order(c, n, "toeplitz_min_pivot");
  int m = n + 1;
  std::vector<std::vector<Complex>> L(static_cast<size_t>(m), std::vector<Complex>(static_cast<size_t>(m), Complex(0.0)));
  double min_pivot = std::numeric_limits<double>::infinity();
  for (int j = 0; j < m; ++j) {
    for (int k = 0; k <= j; ++k) {
      Complex s = c.at(j - k);
      for (int t = 0; t < k; ++t) s -= L[j][t] * std::conj(L[k][t]);
      if (k == j) {
        double d = s.real();
        min_pivot = std::min(min_pivot, d);
        if (d <= 0.0) return min_pivot;
        L[j][j] = std::sqrt(d);
      } else {
        L[j][k] = s / L[k][k];
      }
    }
  }
  return min_pivot;
}

inline bool toeplitz_is_positive_definite(const MomentSequence& c, int n) {
  return toeplitz_min_pivot(c, n) > 0.0;
}

}  // namespace otp
