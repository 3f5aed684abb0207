// Orthonormal trigonometric (Laurent) polynomials sigma_n, pi_n built by
// Gram-Schmidt under the real bilinear product on the ordered basis
//   { 1, (z - z^-1)/2i, (z + z^-1)/2, ..., (z^n - z^-n)/2i, (z^n + z^-n)/2, ... }
// (sine-type before cosine-type at each level), together with the coefficient
// records (a_n, b_n, beta_n), the auxiliary projections (iota, jmath,
// varsigma, zeta), and the algebraic maps tying the system to the monic
// polynomials Phi_n and their Verblunsky coefficients.
//
// Conventions: sigma_0 = 1, pi_0 = 0, and the order-0 record is
// (a_0, b_0, beta_0) = (1, 3^{-1/2}, 0). The b_0 value is forced by
// kappa_0 = 1 through the identity 4 kappa_{2n}^2 = a_n^{-2}(1+beta_n^2)
// + b_n^{-2} at n = 0; with it, every identity below holds from n = 0
// without special cases.
#pragma once

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/laurent.hpp"
#include "otp/moments.hpp"
#include "otp/opuc.hpp"

namespace otp {

inline constexpr double kConventionB0 = 0.5773502691896257645;  // 3^{-1/2}

struct OtpRecord {
  double a = 1.0;
  double b = kConventionB0;
  double beta = 0.0;
};

// Projections of the level-n basis pair onto the level-(n-1) orthonormal
// elements, scaled by 1/a_{n-1} resp. 1/b_{n-1}; defined for n >= 1
// (jmath_1 = zeta_1 = 0 since pi_0 = 0).
struct OtpAux {
  double iota = 0.0;      // <(z^n+z^-n)/2, sigma_{n-1}> / a_{n-1}
  double jmath = 0.0;     // <(z^n+z^-n)/2, pi_{n-1}>    / b_{n-1}
  double varsigma = 0.0;  // <(z^n-z^-n)/2i, sigma_{n-1}> / a_{n-1}
  double zeta = 0.0;      // <(z^n-z^-n)/2i, pi_{n-1}>    / b_{n-1}
};

struct OtpSystem {
  int N = 0;
  std::vector<LaurentPolynomial> sigma;  // [0..N], sigma[0] = 1
  std::vector<LaurentPolynomial> pi;     // [0..N], pi[0] = 0
  std::vector<OtpRecord> rec;            // [0..N]
  std::vector<OtpAux> aux;               // [0..N], aux[0] unused; may be empty
};

// k = 0 -> 1; k = 2n-1 -> (z^n - z^-n)/2i; k = 2n -> (z^n + z^-n)/2.
inline LaurentPolynomial trig_basis_element(int k) {
  if (k < 0) throw input_error("trig_basis_element: negative index");
  if (k == 0) return LaurentPolynomial::constant(Complex(1.0));
  int n = (k + 1) / 2;
  LaurentPolynomial u(-n, std::vector<Complex>(static_cast<size_t>(2 * n) + 1, Complex(0.0)));
  if (k % 2 == 1) {  // sine-type
    u.c.front() = Complex(0.0, 0.5);   // -1/(2i) at z^-n
    u.c.back() = Complex(0.0, -0.5);   //  1/(2i) at z^n
  } else {           // cosine-type
    u.c.front() = Complex(0.5);
    u.c.back() = Complex(0.5);
  }
  return u;
}

namespace detail {

// Restores coef(-k) = conj(coef(k)) exactly (kills rounding drift so
// real_inner's reality precondition stays satisfied).
inline LaurentPolynomial symmetrized(const LaurentPolynomial& f) {
  if (f.empty()) return f;
  int d = std::max(std::abs(f.lo), std::abs(f.hi()));
  LaurentPolynomial r(-d, std::vector<Complex>(static_cast<size_t>(2 * d) + 1, Complex(0.0)));
  for (int k = 0; k <= d; ++k) {
    Complex v = 0.5 * (f.coef(k) + std::conj(f.coef(-k)));
    r.c[static_cast<size_t>(d + k)] = v;
    r.c[static_cast<size_t>(d - k)] = std::conj(v);
  }
  r.c[static_cast<size_t>(d)] = Complex(f.coef(0).real());
  return r;
}

}  // namespace detail

// Projections of the level-n basis pair per the definitions above.
inline std::vector<OtpAux> compute_aux(const OtpSystem& sys, const MomentSequence& c) {
  std::vector<OtpAux> aux(static_cast<size_t>(sys.N) + 1);
  for (int n = 1; n <= sys.N; ++n) {
    LaurentPolynomial ucos = trig_basis_element(2 * n);
    LaurentPolynomial usin = trig_basis_element(2 * n - 1);
    const OtpRecord& prev = sys.rec[static_cast<size_t>(n) - 1];
    OtpAux& A = aux[static_cast<size_t>(n)];
    A.iota = real_inner(ucos, sys.sigma[static_cast<size_t>(n) - 1], c).real() / prev.a;
    A.jmath = real_inner(ucos, sys.pi[static_cast<size_t>(n) - 1], c).real() / prev.b;
    A.varsigma = real_inner(usin, sys.sigma[static_cast<size_t>(n) - 1], c).real() / prev.a;
    A.zeta = real_inner(usin, sys.pi[static_cast<size_t>(n) - 1], c).real() / prev.b;
  }
  return aux;
}

// Modified Gram-Schmidt with one reorthogonalization pass; breakdown below
// 1e-13 on a squared norm means the measure cannot support the system at
// this order. Requires moments through order 2N.
inline OtpSystem otp_gram_schmidt(const MomentSequence& c, int N) {
  if (N < 0) throw input_error("otp_gram_schmidt: N must be >= 0");
  detail::require_order(c, 2 * N, "otp_gram_schmidt");

  OtpSystem sys;
  sys.N = N;
  sys.sigma.assign(static_cast<size_t>(N) + 1, LaurentPolynomial::zero());
  sys.pi.assign(static_cast<size_t>(N) + 1, LaurentPolynomial::zero());
  sys.rec.assign(static_cast<size_t>(N) + 1, OtpRecord{});
  sys.sigma[0] = LaurentPolynomial::constant(Complex(1.0));

  std::vector<LaurentPolynomial> ortho;  // GS order: sigma_0, pi_1, sigma_1, ...
  ortho.push_back(sys.sigma[0]);

  for (int k = 1; k <= 2 * N; ++k) {
    LaurentPolynomial v = trig_basis_element(k);
    for (int pass = 0; pass < 2; ++pass) {
      for (const LaurentPolynomial& x : ortho) {
        double t = real_inner(x, v, c).real();
        v = v - (Complex(t) * x);
      }
      v = detail::symmetrized(v);
    }
    double nn = real_inner(v, v, c).real();
    int n = (k + 1) / 2;
    if (!(nn > 1e-13))
      throw degeneracy_error(std::string("otp_gram_schmidt: ") + (k % 2 ? "sine" : "cosine") +
                             "-type element at level " + std::to_string(n) +
                             " has squared norm " + std::to_string(nn) +
                             " below breakdown threshold (measure not nontrivial at this order)");
    double norm = std::sqrt(nn);
    LaurentPolynomial x = (Complex(1.0 / norm) * v);
    ortho.push_back(x);
    if (k % 2 == 1) {
      sys.pi[static_cast<size_t>(n)] = x;
      sys.rec[static_cast<size_t>(n)].b = norm;
    } else {
      sys.sigma[static_cast<size_t>(n)] = x;
      sys.rec[static_cast<size_t>(n)].a = norm;
      sys.rec[static_cast<size_t>(n)].beta =
          real_inner(trig_basis_element(k), sys.pi[static_cast<size_t>(n)], c).real() /
          sys.rec[static_cast<size_t>(n)].b;
    }
  }
  sys.aux = compute_aux(sys, c);
  return sys;
}

// ---- record-level coefficient maps ----

// 4 kappa_{2n}^2 = a_n^{-2} (1 + beta_n^2) + b_n^{-2}  (row n).
inline double kappa2_even(const OtpRecord& r) {
  return 0.25 * ((1.0 + r.beta * r.beta) / (r.a * r.a) + 1.0 / (r.b * r.b));
}

// kappa_{2n-1}^2 = [a_n^2 + b_n^2 (1 + beta_n^2)]^{-1}  (row n, n >= 1).
inline double kappa2_odd(const OtpRecord& r) {
  return 1.0 / (r.a * r.a + r.b * r.b * (1.0 + r.beta * r.beta));
}

// kappa_0..kappa_{2N} out of records 0..N.
inline KappaSeq kappas_from_otp(const std::vector<OtpRecord>& rec) {
  if (rec.empty()) throw input_error("kappas_from_otp: need at least the order-0 record");
  KappaSeq ks;
  ks.k.assign(2 * rec.size() - 1, 0.0);
  ks.k[0] = std::sqrt(kappa2_even(rec[0]));
  for (size_t n = 1; n < rec.size(); ++n) {
    ks.k[2 * n - 1] = std::sqrt(kappa2_odd(rec[n]));
    ks.k[2 * n] = std::sqrt(kappa2_even(rec[n]));
  }
  return ks;
}

// alpha_{2n-1} out of record n (n >= 1).
inline Complex odd_alpha_from_record(const OtpRecord& r) {
  double k2 = kappa2_even(r);
  double re = 0.25 / k2 * (1.0 / (r.b * r.b) - (1.0 - r.beta * r.beta) / (r.a * r.a));
  double im = -0.5 / k2 * r.beta / (r.a * r.a);
  return Complex(re, im);
}

// alpha_{2n} out of the level-(n+1) projections and beta_n. At n = 0 the
// lower element is sigma_0 = 1 with unit leading coefficient (all higher
// cosine elements carry 1/2), which doubles both contributions:
// alpha_0 = iota_1 - i varsigma_1.
inline Complex even_alpha_from_aux(int n, const OtpAux& A, double beta_n) {
  if (n == 0) return Complex(A.iota, -A.varsigma);
  return Complex(0.5 * (A.iota - A.zeta + beta_n * A.varsigma),
                 -0.5 * (A.jmath + A.varsigma - beta_n * A.iota));
}

// alpha_0..alpha_{2N-1} from the records and auxiliary projections.
inline std::vector<Complex> alphas_from_otp(const OtpSystem& sys) {
  if (static_cast<int>(sys.aux.size()) != sys.N + 1)
    throw input_error("alphas_from_otp: auxiliary projections missing (run compute_aux)");
  std::vector<Complex> a(static_cast<size_t>(2 * sys.N), Complex(0.0));
  for (int n = 1; n <= sys.N; ++n)
    a[static_cast<size_t>(2 * n) - 1] = odd_alpha_from_record(sys.rec[static_cast<size_t>(n)]);
  for (int n = 0; n + 1 <= sys.N; ++n)
    a[static_cast<size_t>(2 * n)] =
        even_alpha_from_aux(n, sys.aux[static_cast<size_t>(n) + 1], sys.rec[static_cast<size_t>(n)].beta);
  return a;
}

// ---- mutual representation ----

// Phi_{2n-1} = z^{n-1} [a_n sigma_n + (beta_n + i) b_n pi_n]; the z^{-n}
// coefficient cancels exactly in theory, and *residual reports the largest
// leftover negative-power magnitude.
inline ComplexPolynomial opuc_odd_from_otp(const OtpSystem& sys, int n, double* residual = nullptr) {
  if (n < 1 || n > sys.N) throw input_error("opuc_odd_from_otp: level out of range");
  const OtpRecord& r = sys.rec[static_cast<size_t>(n)];
  LaurentPolynomial L = Complex(r.a) * sys.sigma[static_cast<size_t>(n)] +
                        (Complex(r.beta, 1.0) * (Complex(r.b) * sys.pi[static_cast<size_t>(n)]));
  return polynomial_part(L.shifted(n - 1), residual);
}

// Phi*_{2n} = z^n [a_n^{-1}(1 + beta_n i) sigma_n - i b_n^{-1} pi_n] / (2 kappa_{2n}^2).
inline ComplexPolynomial opuc_even_star_from_otp(const OtpSystem& sys, int n, double* residual = nullptr) {
  if (n < 1 || n > sys.N) throw input_error("opuc_even_star_from_otp: level out of range");
  const OtpRecord& r = sys.rec[static_cast<size_t>(n)];
  double k2 = kappa2_even(r);
  LaurentPolynomial L = (Complex(1.0, r.beta) * (Complex(1.0 / r.a) * sys.sigma[static_cast<size_t>(n)])) -
                        (Complex(0.0, 1.0) * (Complex(1.0 / r.b) * sys.pi[static_cast<size_t>(n)]));
  L = Complex(0.5 / k2) * L;
  return polynomial_part(L.shifted(n), residual);
}

// Record at level n from alpha_{2n-1} and kappa_{2n}^2 (solves the odd-alpha
// map; 1 - Re alpha > 0 inside the disc keeps everything positive).
inline OtpRecord record_from_alpha(Complex alpha_odd, double kappa2_2n) {
  double d = 1.0 - alpha_odd.real();
  OtpRecord r;
  r.a = 1.0 / std::sqrt(2.0 * kappa2_2n * d);
  r.beta = -alpha_odd.imag() / d;
  r.b = 1.0 / std::sqrt(2.0 * kappa2_2n * (1.0 - std::norm(alpha_odd)) / d);
  return r;
}

// sigma_n, pi_n reconstructed from the monic ladder:
//   a_n sigma_n = -(1/2) z^-n [ Lambda_n^{-1} b_n^{-2} i z Phi_{2n-1} - (1 - beta_n i) Phi*_{2n} ]
//   b_n pi_n    = -(1/2) z^-n [ Lambda_n^{-1} a_n^{-2} (1 + beta_n i) z Phi_{2n-1} - i Phi*_{2n} ]
// with Lambda_n = -2 kappa_{2n}^2 i. Needs alpha_0..alpha_{2N-1}.
inline OtpSystem otp_from_opuc(const VerblunskySeq& alphas, int N) {
  if (N < 0) throw input_error("otp_from_opuc: N must be >= 0");
  if (alphas.count() < 2 * N)
    throw input_error("otp_from_opuc: need " + std::to_string(2 * N) + " alphas, have " + std::to_string(alphas.count()));
  OpucLadder L = ladder_from_alphas(alphas, 2 * N);

  OtpSystem sys;
  sys.N = N;
  sys.sigma.assign(static_cast<size_t>(N) + 1, LaurentPolynomial::zero());
  sys.pi.assign(static_cast<size_t>(N) + 1, LaurentPolynomial::zero());
  sys.rec.assign(static_cast<size_t>(N) + 1, OtpRecord{});
  sys.sigma[0] = LaurentPolynomial::constant(Complex(1.0));

  for (int n = 1; n <= N; ++n) {
    double k2 = L.kappas.at(2 * n);
    k2 *= k2;
    OtpRecord r = record_from_alpha(alphas.alpha(2 * n - 1), k2);
    Complex lam_inv(0.0, 0.5 / k2);  // 1 / (-2 kappa^2 i)
    LaurentPolynomial zphi = as_laurent(L.phi[static_cast<size_t>(2 * n) - 1]).shifted(1);
    LaurentPolynomial star = as_laurent(L.phi_star[static_cast<size_t>(2 * n)]);

    LaurentPolynomial asig =
        Complex(-0.5) * ((lam_inv * Complex(0.0, 1.0 / (r.b * r.b))) * zphi - Complex(1.0, -r.beta) * star);
    LaurentPolynomial bpi =
        Complex(-0.5) * ((lam_inv * Complex(1.0 / (r.a * r.a)) * Complex(1.0, r.beta)) * zphi - Complex(0.0, 1.0) * star);
    sys.sigma[static_cast<size_t>(n)] = detail::symmetrized(Complex(1.0 / r.a) * asig.shifted(-n));
    sys.pi[static_cast<size_t>(n)] = detail::symmetrized(Complex(1.0 / r.b) * bpi.shifted(-n));
    sys.rec[static_cast<size_t>(n)] = r;
  }
  return sys;
}

}  // namespace otp
