// Truncated power series over std::complex<double>, just enough arithmetic
// for the Schur algorithm: add, subtract, multiply, divide by a series with
// nonvanishing constant term, and the shift (1/z)(...) that drops a constant
// term known to vanish.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include "otp/errors.hpp"
#include "otp/laurent.hpp"

namespace otp {

struct PowerSeries {
  std::vector<Complex> c;  // c[k] multiplies z^k; truncation order = c.size() - 1

  PowerSeries() = default;
  explicit PowerSeries(std::vector<Complex> coeffs) : c(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c.size()) - 1; }
  Complex at0() const { return c.empty() ? Complex(0.0) : c[0]; }
};

inline PowerSeries ps_add(const PowerSeries& x, const PowerSeries& y) {
  size_t n = std::min(x.c.size(), y.c.size());
  std::vector<Complex> r(n);
  for (size_t k = 0; k < n; ++k) r[k] = x.c[k] + y.c[k];
  return PowerSeries(std::move(r));
}

inline PowerSeries ps_sub(const PowerSeries& x, const PowerSeries& y) {
  size_t n = std::min(x.c.size(), y.c.size());
  std::vector<Complex> r(n);
  for (size_t k = 0; k < n; ++k) r[k] = x.c[k] - y.c[k];
  return PowerSeries(std::move(r));
}

inline PowerSeries ps_scale(Complex s, const PowerSeries& x) {
  std::vector<Complex> r = x.c;
  for (auto& v : r) v *= s;
  return PowerSeries(std::move(r));
}

inline PowerSeries ps_mul(const PowerSeries& x, const PowerSeries& y) {
  size_t n = std::min(x.c.size(), y.c.size());
  std::vector<Complex> r(n, Complex(0.0));
  for (size_t j = 0; j < n; ++j) {
    if (x.c[j] == Complex(0.0)) continue;
    for (size_t k = 0; j + k < n; ++k) r[j + k] += x.c[j] * y.c[k];
  }
  return PowerSeries(std::move(r));
}

// Long division x / y; y must have a nonzero constant term.
inline PowerSeries ps_div(const PowerSeries& x, const PowerSeries& y) {
  if (y.c.empty() || std::abs(y.c[0]) < 1e-300) throw input_error("ps_div: divisor has (near-)zero constant term");
  size_t n = std::min(x.c.size(), y.c.size());
  std::vector<Complex> q(n, Complex(0.0));
  for (size_t k = 0; k < n; ++k) {
    Complex s = x.c[k];
    for (size_t j = 0; j < k; ++j) s -= q[j] * y.c[k - j];
    q[k] = s / y.c[0];
  }
  return PowerSeries(std::move(q));
}

// (1/z) x for x with vanishing constant term; *dropped reports |x_0|, which
// measures how exactly the cancellation that justifies the shift held.
inline PowerSeries ps_shift_down(const PowerSeries& x, double* dropped = nullptr) {
  if (dropped) *dropped = x.c.empty() ? 0.0 : std::abs(x.c[0]);
  if (x.c.size() <= 1) return PowerSeries();
  return PowerSeries(std::vector<Complex>(x.c.begin() + 1, x.c.end()));
}

// z * x at the same truncation order (the top coefficient falls off).
inline PowerSeries ps_shift_up(const PowerSeries& x) {
  std::vector<Complex> r(x.c.size(), Complex(0.0));
  for (size_t k = 0; k + 1 < r.size(); ++k) r[k + 1] = x.c[k];
  return PowerSeries(std::move(r));
}

}  // namespace otp
