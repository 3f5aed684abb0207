// Monic orthogonal polynomials on the unit circle.
//
// Recurrence: Phi_{n+1}(z) = z Phi_n(z) - conj(alpha_n) Phi*_n(z), with
// Phi*_n the degree-n reversal and alpha_n the Verblunsky coefficients,
// |alpha_n| < 1. kappa_n = prod_{j<n} (1-|alpha_j|^2)^{-1/2} and
// <Phi_n,Phi_n> = kappa_n^{-2}.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/laurent.hpp"
#include "otp/moments.hpp"

namespace otp {

struct VerblunskySeq {
  std::vector<Complex> a;  // a[n] = alpha_n, n >= 0

  VerblunskySeq() = default;
  explicit VerblunskySeq(std::vector<Complex> values) : a(std::move(values)) {
    for (size_t n = 0; n < a.size(); ++n)
      if (std::abs(a[n]) >= 1.0)
        throw input_error("VerblunskySeq: |alpha_" + std::to_string(n) + "| = " + std::to_string(std::abs(a[n])) + " not inside the unit disc");
  }

  int count() const { return static_cast<int>(a.size()); }

  // Convention slot alpha_{-1} = -1 anchors the recursion theory.
  Complex alpha(int n) const {
    if (n == -1) return Complex(-1.0);
    if (n < 0 || n >= count()) throw input_error("VerblunskySeq: index " + std::to_string(n) + " out of range");
    return a[static_cast<size_t>(n)];
  }
};

struct KappaSeq {
  std::vector<double> k;  // k[n] = kappa_n, n >= 0; kappa_0 = 1

  int count() const { return static_cast<int>(k.size()); }
  double at(int n) const {
    if (n < 0 || n >= count()) throw input_error("KappaSeq: index " + std::to_string(n) + " out of range");
    return k[static_cast<size_t>(n)];
  }
};

// kappa_0..kappa_N from alpha_0..alpha_{N-1}.
inline KappaSeq kappa_seq(const VerblunskySeq& alphas, int N) {
  if (N < 0) throw input_error("kappa_seq: N must be >= 0");
  if (N > alphas.count()) throw input_error("kappa_seq: need " + std::to_string(N) + " alphas, have " + std::to_string(alphas.count()));
  KappaSeq ks;
  ks.k.resize(static_cast<size_t>(N) + 1);
  double kap = 1.0;
  ks.k[0] = kap;
  for (int n = 0; n < N; ++n) {
    kap /= std::sqrt(1.0 - std::norm(alphas.alpha(n)));
    ks.k[static_cast<size_t>(n) + 1] = kap;
  }
  return ks;
}

// Monic Phi_n by running the recurrence from Phi_0 = 1.
inline ComplexPolynomial monic_phi(const VerblunskySeq& alphas, int n) {
  if (n < 0) throw input_error("monic_phi: n must be >= 0");
  if (n > alphas.count()) throw input_error("monic_phi: need " + std::to_string(n) + " alphas, have " + std::to_string(alphas.count()));
  ComplexPolynomial phi({Complex(1.0)});
  for (int j = 0; j < n; ++j) {
    ComplexPolynomial star = reversed(phi, j);
    std::vector<Complex> next(static_cast<size_t>(j) + 2, Complex(0.0));
    Complex ca = std::conj(alphas.alpha(j));
    for (int k = 0; k <= j; ++k) {
      next[static_cast<size_t>(k) + 1] += phi.c[static_cast<size_t>(k)];
      next[static_cast<size_t>(k)] -= ca * star.c[static_cast<size_t>(k)];
    }
    phi = ComplexPolynomial(std::move(next));
  }
  return phi;
}

struct OpucLadder {
  VerblunskySeq alphas;                    // alpha_0..alpha_{N-1}
  std::vector<ComplexPolynomial> phi;      // Phi_0..Phi_N
  std::vector<ComplexPolynomial> phi_star; // Phi*_0..Phi*_N
  std::vector<double> norm2;               // <Phi_n,Phi_n>
  KappaSeq kappas;                         // kappa_0..kappa_N
};

// The full ladder determined by prescribed coefficients (normalized measure,
// so <Phi_0,Phi_0> = 1).
inline OpucLadder ladder_from_alphas(const VerblunskySeq& alphas, int N) {
  if (N < 0) throw input_error("ladder_from_alphas: N must be >= 0");
  if (N > alphas.count())
    throw input_error("ladder_from_alphas: need " + std::to_string(N) + " alphas, have " + std::to_string(alphas.count()));
  OpucLadder L;
  L.alphas = alphas;
  L.phi.push_back(ComplexPolynomial({Complex(1.0)}));
  L.phi_star.push_back(ComplexPolynomial({Complex(1.0)}));
  L.norm2.push_back(1.0);
  for (int n = 0; n < N; ++n) {
    const ComplexPolynomial& phi = L.phi.back();
    const ComplexPolynomial& star = L.phi_star.back();
    Complex abar = std::conj(alphas.alpha(n));
    std::vector<Complex> next(static_cast<size_t>(n) + 2, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
      next[static_cast<size_t>(k) + 1] += phi.c[static_cast<size_t>(k)];
      next[static_cast<size_t>(k)] -= abar * star.c[static_cast<size_t>(k)];
    }
    L.phi.push_back(ComplexPolynomial(std::move(next)));
    L.phi_star.push_back(reversed(L.phi.back(), n + 1));
    L.norm2.push_back(L.norm2.back() * (1.0 - std::norm(alphas.alpha(n))));
  }
  L.kappas = kappa_seq(alphas, N);
  return L;
}

// Runs the Szego recurrence against a moment sequence, extracting
// alpha_n = conj(<Phi*_n, z Phi_n>) / <Phi_n,Phi_n> at each step.
// Detects degenerate (finitely supported / non-PD) data through the
// norm recursion <Phi_{n+1},Phi_{n+1}> = (1-|alpha_n|^2) <Phi_n,Phi_n>.
inline OpucLadder verblunsky_from_moments(const MomentSequence& c, int N) {
  if (N < 0) throw input_error("verblunsky_from_moments: N must be >= 0");
  detail::require_order(c, N, "verblunsky_from_moments");

  OpucLadder L;
  L.phi.reserve(static_cast<size_t>(N) + 1);
  L.phi_star.reserve(static_cast<size_t>(N) + 1);
  L.phi.push_back(ComplexPolynomial({Complex(1.0)}));
  L.phi_star.push_back(ComplexPolynomial({Complex(1.0)}));
  L.norm2.push_back(c.at(0).real());

  std::vector<Complex> alphas;
  for (int n = 0; n < N; ++n) {
    double nn = L.norm2.back();
    if (!(nn > 1e-13))
      throw degeneracy_error("verblunsky_from_moments: <Phi_" + std::to_string(n) + ",Phi_" + std::to_string(n) +
                             "> = " + std::to_string(nn) + " below breakdown threshold (measure not nontrivial at this order)");
    const ComplexPolynomial& phi = L.phi.back();
    const ComplexPolynomial& star = L.phi_star.back();

    LaurentPolynomial zphi = as_laurent(phi).shifted(1);
    Complex abar = complex_inner(as_laurent(star), zphi, c) / nn;
    Complex alpha = std::conj(abar);
    if (std::abs(alpha) >= 1.0)
      throw degeneracy_error("verblunsky_from_moments: |alpha_" + std::to_string(n) + "| >= 1; moment data not positive definite");
    alphas.push_back(alpha);

    std::vector<Complex> next(static_cast<size_t>(n) + 2, Complex(0.0));
    for (int k = 0; k <= n; ++k) {
      next[static_cast<size_t>(k) + 1] += phi.c[static_cast<size_t>(k)];
      next[static_cast<size_t>(k)] -= abar * star.c[static_cast<size_t>(k)];
    }
    L.phi.push_back(ComplexPolynomial(std::move(next)));
    L.phi_star.push_back(reversed(L.phi.back(), n + 1));
    L.norm2.push_back(nn * (1.0 - std::norm(alpha)));
  }
  L.alphas = VerblunskySeq(std::move(alphas));
  L.kappas = kappa_seq(L.alphas, N);
  return L;
}

}  // namespace otp
