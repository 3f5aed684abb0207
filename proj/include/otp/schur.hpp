// Schur algorithm: from the moments, form the Caratheodory function
// F(z) = 1 + 2 sum_{n>=1} c_n z^n, pass to the Schur function
// f(z) = (1/z)(F-1)/(F+1), and iterate
//   gamma_n = f_n(0),  f_{n+1} = (1/z) (f_n - gamma_n) / (1 - conj(gamma_n) f_n).
// The parameters gamma_n coincide with the Verblunsky coefficients, and the
// closed-form expressions in terms of the trigonometric records give the
// same values again; both are exercised by the test suite.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/moments.hpp"
#include "otp/power_series.hpp"
#include "otp/trig_system.hpp"

namespace otp {

// Guard orders: each Schur step consumes one series order, so computing
// `count` parameters starts from order count + kSchurGuard.
inline constexpr int kSchurGuard = 8;
inline constexpr double kSchurBoundary = 1.0 - 1e-12;

// F = 1 + 2 sum_{n=1..M} c_n z^n.
inline PowerSeries caratheodory_series(const MomentSequence& c, int M) {
  if (M < 0) throw input_error("caratheodory_series: M must be >= 0");
  detail::require_order(c, M, "caratheodory_series");
  std::vector<Complex> F(static_cast<size_t>(M) + 1, Complex(0.0));
  F[0] = Complex(1.0);
  for (int n = 1; n <= M; ++n) F[static_cast<size_t>(n)] = 2.0 * c.at(n);
  return PowerSeries(std::move(F));
}

// f = (1/z) (F - 1) / (F + 1); F - 1 vanishes at 0 by construction.
inline PowerSeries schur_from_caratheodory(const PowerSeries& F) {
  PowerSeries one(std::vector<Complex>(F.c.size(), Complex(0.0)));
  one.c[0] = Complex(1.0);
  PowerSeries num = ps_shift_down(ps_sub(F, one));
  PowerSeries den = ps_add(F, one);
  den.c.resize(num.c.size());
  return ps_div(num, den);
}

// Runs the algorithm for `count` parameters. Stops with a degeneracy error
// when a parameter reaches the boundary of the disc (within 1e-12), which is
// what finitely supported measures produce.
inline std::vector<Complex> schur_parameters(PowerSeries f, int count) {
  if (count < 0) throw input_error("schur_parameters: count must be >= 0");
  if (f.order() < count)
    throw input_error("schur_parameters: series order " + std::to_string(f.order()) +
                      " insufficient for " + std::to_string(count) + " parameters");
  std::vector<Complex> gamma;
  gamma.reserve(static_cast<size_t>(count));
  for (int n = 0; n < count; ++n) {
    Complex g = f.at0();
    if (std::abs(g) >= kSchurBoundary)
      throw degeneracy_error("schur_parameters: |gamma_" + std::to_string(n) + "| = " + std::to_string(std::abs(g)) +
                             " at the unit-disc boundary (finitely supported measure)");
    gamma.push_back(g);
    PowerSeries num(std::vector<Complex>(f.c));
    num.c[0] -= g;  // exact cancellation of the constant term
    num = ps_shift_down(num);
    PowerSeries den = ps_scale(-std::conj(g), f);
    den.c[0] += Complex(1.0);
    den.c.resize(num.c.size());
    f = ps_div(num, den);
  }
  return gamma;
}

inline std::vector<Complex> schur_parameters_from_moments(const MomentSequence& c, int count) {
  PowerSeries F = caratheodory_series(c, count + kSchurGuard);
  return schur_parameters(schur_from_caratheodory(F), count);
}

// gamma_{2n-1} in record form: [a^2 - b^2(1-beta^2)] / S - [2 b^2 beta / S] i
// with S = a^2 + b^2 (1 + beta^2). Algebraically equal to the odd-alpha map.
inline Complex geronimus_gamma_odd(const OtpRecord& r) {
  double S = r.a * r.a + r.b * r.b * (1.0 + r.beta * r.beta);
  return Complex((r.a * r.a - r.b * r.b * (1.0 - r.beta * r.beta)) / S, -2.0 * r.b * r.b * r.beta / S);
}

// gamma_{2n-2} in projection form is the same expression as the even-alpha
// map (including the doubled n = 1 case).
inline Complex geronimus_gamma_even(int n, const OtpAux& aux_np1, double beta_n) {
  return even_alpha_from_aux(n, aux_np1, beta_n);
}

}  // namespace otp
