// Numerical verification of the limit theorems: Szegő integral and Szegő
// function data, Baxter / Rakhmanov / Szegő / strong-Szegő sums in record
// form, the Theorem-style limits of a_n b_n and a_n^2 + b_n^2(1+beta_n^2),
// and a residual suite for every algebraic identity tying the trigonometric
// records to the monic-polynomial ladder.
//
// Residual metric throughout: r = |lhs - rhs| / max(1, |lhs|, |rhs|).
//
// Finite partial sums cannot certify convergence, so sums carry a
// "summable" / "divergent-trend" verdict from a tail-window ratio test:
// compare the partial-sum increments over [L/2, 3L/4) and [3L/4, L); an
// increment ratio >= 0.65 is called divergent-trend. (Harmonic-type tails
// give ratio ~ log(4/3)/log(3/2) ~ 0.71, 1/n^2 tails ~ 0.5, so the cutoff
// separates the boundary family.) A second-window increment below
// 1e-4 * max(1, |sum|) is summable outright: the record-form summands take
// square roots of differences of O(1) quantities, so coefficients below
// sqrt(machine eps) ~ 1e-8 surface as per-term noise at that scale, and a
// genuinely divergent tail in this regime contributes window increments of
// order 0.1 or more.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/measure.hpp"
#include "otp/moments.hpp"
#include "otp/opuc.hpp"
#include "otp/report.hpp"
#include "otp/trig_system.hpp"

namespace otp {

inline double relative_residual(double lhs, double rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

inline double relative_residual(Complex lhs, Complex rhs) {
  return std::abs(lhs - rhs) / std::max({1.0, std::abs(lhs), std::abs(rhs)});
}

// (1/2pi) integral of log w; -infinity when the weight vanishes on an
// interval of nodes (divergence is a value here, not an error).
inline double szego_integral(const Measure& mu) {
  LogWeightData d = log_weight_data(mu);
  if (!d.finite) return -std::numeric_limits<double>::infinity();
  return detail::pairwise_sum(d.remainder.data(), d.remainder.size()) / mu.nodes();
}

// L_0 = (1/2pi) int log w, L_n = (1/2pi) int e^{-in theta} log w (n >= 1);
// these are the coefficients in D(z) = exp(L_0/2 + sum_{n>=1} L_n z^n).
// Isolated zeros are integrated through their p*log|e^{i theta}-e^{i theta_0}|
// templates, whose n-th coefficient is -p e^{-in theta_0} / (2n).
inline std::vector<Complex> szego_function_coefficients(const Measure& mu, int N) {
  if (N < 0) throw input_error("szego_function_coefficients: N must be >= 0");
  int M = mu.nodes();
  if (N > M / 4)
    throw input_error("szego_function_coefficients: order exceeds grid resolution guarantee (max " +
                      std::to_string(M / 4) + ")");
  LogWeightData d = log_weight_data(mu);
  if (!d.finite)
    throw degeneracy_error("Szegő condition violated: log-weight integral diverges to -infinity");

  std::vector<Complex> L(static_cast<size_t>(N) + 1, Complex(0.0));
  L[0] = detail::pairwise_sum(d.remainder.data(), d.remainder.size()) / M;
  std::vector<Complex> terms(static_cast<size_t>(M));
  double two_pi = 2.0 * std::numbers::pi;
  for (int n = 1; n <= N; ++n) {
    for (int k = 0; k < M; ++k)
      terms[static_cast<size_t>(k)] = d.remainder[static_cast<size_t>(k)] * std::polar(1.0, -two_pi * n * k / M);
    Complex v = detail::pairwise_sum(terms.data(), terms.size()) / static_cast<double>(M);
    for (const WeightZero& z : d.zeros)
      v -= static_cast<double>(z.order) * std::polar(1.0, -n * z.theta) / (2.0 * n);
    L[static_cast<size_t>(n)] = v;
  }
  return L;
}

enum class Trend { summable, divergent };

inline const char* trend_name(Trend t) { return t == Trend::summable ? "summable" : "divergent-trend"; }

// Tail-window ratio test on a partial-sum array (needs >= 4 entries).
inline Trend trend_verdict(const std::vector<double>& partial_sums) {
  size_t L = partial_sums.size();
  if (L < 4) throw input_error("trend_verdict: need at least 4 partial sums");
  double inc1 = partial_sums[3 * L / 4 - 1] - partial_sums[L / 2 - 1];
  double inc2 = partial_sums[L - 1] - partial_sums[3 * L / 4 - 1];
  double noise_floor = 1e-4 * std::max(1.0, std::abs(partial_sums.back()));
  if (inc2 < noise_floor) return Trend::summable;
  if (inc1 <= 0.0) return Trend::divergent;
  return inc2 / inc1 >= 0.65 ? Trend::divergent : Trend::summable;
}

namespace detail {

inline std::vector<double> cumulative(const std::vector<double>& terms) {
  std::vector<double> s(terms.size());
  double acc = 0.0;
  for (size_t i = 0; i < terms.size(); ++i) {
    acc += terms[i];
    s[i] = acc;
  }
  return s;
}

// |alpha_{2n-1}| and |alpha_{2n}| in record form. The sine-type branch has
// no term at n = 0 (there is no alpha_{-1} in the sums), so callers index it
// from n = 1.
inline double record_odd_modulus(const OtpRecord& r) { return std::abs(odd_alpha_from_record(r)); }

}  // namespace detail

// B_n = kappa_{2n}^2 / kappa_{2n+1}^2 in record form (limit 1), defined for
// n = 0..N-1; A_n = |alpha_{2n-1}|^2 in record form (limit 0), defined for
// n = 1..N.
inline std::vector<double> rakhmanov_B(const std::vector<OtpRecord>& rec) {
  std::vector<double> B;
  for (size_t n = 0; n + 1 < rec.size(); ++n)
    B.push_back(kappa2_even(rec[n]) / kappa2_odd(rec[n + 1]));
  return B;
}

inline std::vector<double> rakhmanov_A(const std::vector<OtpRecord>& rec) {
  std::vector<double> A;
  for (size_t n = 1; n < rec.size(); ++n) {
    double m = detail::record_odd_modulus(rec[n]);
    A.push_back(m * m);
  }
  return A;
}

inline Report rakhmanov_sequences(const std::vector<OtpRecord>& rec) {
  if (rec.size() < 2) throw input_error("rakhmanov_sequences: need records through order 1");
  Report r;
  r.kind = "rakhmanov";
  std::vector<double> A = rakhmanov_A(rec);
  std::vector<double> B = rakhmanov_B(rec);
  r.sequences["A"] = Sequence{1, A};
  r.sequences["B"] = Sequence{0, B};
  size_t qa = std::max<size_t>(1, A.size() / 4);
  double worstA = 0.0, worstB = 0.0;
  for (size_t i = A.size() - qa; i < A.size(); ++i) worstA = std::max(worstA, std::abs(A[i]));
  for (size_t i = B.size() - qa; i < B.size(); ++i) worstB = std::max(worstB, std::abs(B[i] - 1.0));
  r.scalars["tail_max_A"] = worstA;
  r.scalars["tail_max_B_minus_1"] = worstB;
  return r;
}

// Partial sums of sum |c_n| and of the two modulus sums (cosine branch
// |alpha_{2n}|, sine branch |alpha_{2n-1}|), with trend verdicts.
inline Report baxter_report(const MomentSequence& c, const std::vector<OtpRecord>& rec) {
  if (rec.size() < 2) throw input_error("baxter_report: need records through order 1");
  Report r;
  r.kind = "baxter";
  int N = static_cast<int>(rec.size()) - 1;

  std::vector<double> moment_terms;
  for (int n = 0; n <= c.order(); ++n) moment_terms.push_back(std::abs(c.at(n)));
  std::vector<double> moment_partial = detail::cumulative(moment_terms);

  std::vector<double> even_terms;  // n = 0..N-1: |alpha_{2n}|
  for (int n = 0; n < N; ++n) {
    double ratio = kappa2_even(rec[static_cast<size_t>(n)]) / kappa2_odd(rec[static_cast<size_t>(n) + 1]);
    even_terms.push_back(std::sqrt(std::max(0.0, 1.0 - ratio)));
  }
  std::vector<double> odd_terms;  // n = 1..N: |alpha_{2n-1}|
  for (int n = 1; n <= N; ++n) odd_terms.push_back(detail::record_odd_modulus(rec[static_cast<size_t>(n)]));

  std::vector<double> combined;  // coefficient order alpha_0, alpha_1, ...
  for (int n = 0; n < N; ++n) {
    combined.push_back(even_terms[static_cast<size_t>(n)]);
    combined.push_back(odd_terms[static_cast<size_t>(n)]);
  }
  std::vector<double> combined_partial = detail::cumulative(combined);

  r.sequences["moment_abs_partial_sums"] = Sequence{0, moment_partial};
  r.sequences["cosine_branch_terms"] = Sequence{0, even_terms};
  r.sequences["sine_branch_terms"] = Sequence{1, odd_terms};
  r.sequences["coefficient_sum_partial_sums"] = Sequence{0, combined_partial};
  r.scalars["moment_abs_sum"] = moment_partial.back();
  r.scalars["coefficient_sum"] = combined_partial.back();
  r.meta["verdict_coefficient_sum"] = trend_name(trend_verdict(combined_partial));
  r.meta["verdict_moment_abs_sum"] = trend_name(trend_verdict(moment_partial));
  return r;
}

// Telescoped partial products of the norm-ratio product (value
// a_N^2 + b_N^2 (1 + beta_N^2), initial denominator 1) against
// exp(szego_integral), plus the summability form sum (1 - B_n) + sum A_n.
inline Report szego_partial_products(const std::vector<OtpRecord>& rec, double szego_int) {
  if (rec.size() < 2) throw input_error("szego_partial_products: need records through order 1");
  Report r;
  r.kind = "szego";
  int N = static_cast<int>(rec.size()) - 1;

  std::vector<double> products;  // P_k = a_k^2 + b_k^2 (1+beta_k^2), k = 1..N
  for (int k = 1; k <= N; ++k) products.push_back(1.0 / kappa2_odd(rec[static_cast<size_t>(k)]));

  std::vector<double> A = rakhmanov_A(rec);
  std::vector<double> B = rakhmanov_B(rec);
  std::vector<double> terms;  // coefficient order: |alpha_0|^2, |alpha_1|^2, ...
  for (int n = 0; n < N; ++n) {
    terms.push_back(1.0 - B[static_cast<size_t>(n)]);
    terms.push_back(A[static_cast<size_t>(n)]);
  }
  std::vector<double> partial = detail::cumulative(terms);

  double target = std::exp(szego_int);  // exp(-inf) = 0
  r.sequences["partial_products"] = Sequence{1, products};
  r.sequences["square_sum_partial_sums"] = Sequence{0, partial};
  r.scalars["product"] = products.back();
  r.scalars["szego_integral"] = szego_int;
  r.scalars["exp_szego_integral"] = target;
  r.scalars["product_deviation"] = std::abs(products.back() - target);
  r.meta["verdict_square_sum"] = trend_name(trend_verdict(partial));
  return r;
}

// S_alpha = sum 2n (1 - B_n) + sum (2n-1) A_n (in coefficient order this is
// sum_m m |alpha_m|^2) and S_L = sum n |L_n|^2, with verdicts; when the
// actual coefficients are supplied the bookkeeping identity is checked.
inline Report strong_szego_sums(const std::vector<OtpRecord>& rec, const std::vector<Complex>& Lhat,
                                const VerblunskySeq* alphas = nullptr) {
  if (rec.size() < 2) throw input_error("strong_szego_sums: need records through order 1");
  Report r;
  r.kind = "strong_szego";
  int N = static_cast<int>(rec.size()) - 1;

  std::vector<double> A = rakhmanov_A(rec);
  std::vector<double> B = rakhmanov_B(rec);
  std::vector<double> alpha_terms;  // m = 0..2N-1: weight m
  for (int n = 0; n < N; ++n) {
    alpha_terms.push_back(2.0 * n * (1.0 - B[static_cast<size_t>(n)]));
    alpha_terms.push_back((2.0 * n + 1.0) * A[static_cast<size_t>(n)]);
  }
  std::vector<double> alpha_partial = detail::cumulative(alpha_terms);

  std::vector<double> L_terms;  // n = 1..|Lhat|-1
  for (size_t n = 1; n < Lhat.size(); ++n) L_terms.push_back(static_cast<double>(n) * std::norm(Lhat[n]));
  if (L_terms.empty()) L_terms.assign(4, 0.0);
  std::vector<double> L_partial = detail::cumulative(L_terms);

  r.sequences["weighted_alpha_partial_sums"] = Sequence{0, alpha_partial};
  r.sequences["weighted_L_partial_sums"] = Sequence{1, L_partial};
  r.scalars["S_alpha"] = alpha_partial.back();
  r.scalars["S_L"] = L_partial.back();
  r.meta["verdict_S_alpha"] = trend_name(trend_verdict(alpha_partial));
  r.meta["verdict_S_L"] = trend_name(trend_verdict(L_partial));

  if (alphas && alphas->count() >= 2 * N) {
    double direct = 0.0;
    for (int m = 0; m < 2 * N; ++m) direct += m * std::norm(alphas->alpha(m));
    r.scalars["S_alpha_direct"] = direct;
    r.add_check("weighted_alpha_sum_matches_coefficients", relative_residual(alpha_partial.back(), direct), 1e-9);
  }
  return r;
}

// a_N b_N vs (1/2) exp(szego_integral) and a_N^2 + b_N^2(1+beta_N^2) vs
// exp(szego_integral). Deviations are reported, not asserted: finite N
// cannot certify a limit. Non-Szegő measures are tagged; both limits are 0.
inline Report limit_checks(const std::vector<OtpRecord>& rec, double szego_int) {
  if (rec.size() < 2) throw input_error("limit_checks: need records through order 1");
  Report r;
  r.kind = "limits";
  const OtpRecord& last = rec.back();
  double target = std::exp(szego_int);
  double ab = last.a * last.b;
  double s = 1.0 / kappa2_odd(last);
  r.scalars["a_b_product"] = ab;
  r.scalars["a_b_target"] = 0.5 * target;
  r.scalars["a_b_deviation"] = std::abs(ab - 0.5 * target);
  r.scalars["square_sum"] = s;
  r.scalars["square_sum_target"] = target;
  r.scalars["square_sum_deviation"] = std::abs(s - target);
  r.scalars["szego_integral"] = szego_int;
  if (std::isinf(szego_int)) r.meta["szego_condition"] = "violated (limits degenerate to 0)";
  return r;
}

// Evaluates both sides of every identity on the measure's own data: the
// kappa formulas, the two alpha maps, the product identity, the seven-term
// identity, and the four mutual-representation formulas (coefficientwise and
// at 64 equispaced circle points). Pass iff every max residual <= tol.
inline Report identity_suite(const Measure& mu, int N, double tol) {
  if (N < 1) throw input_error("identity_suite: N must be >= 1");
  MomentSequence c = moments(mu, 2 * N + 2);
  OpucLadder ladder = verblunsky_from_moments(c, 2 * N + 2);
  OtpSystem sys = otp_gram_schmidt(c, N + 1);

  Report r;
  r.kind = "identity_suite";
  r.meta["order"] = std::to_string(N);

  double res_kappa_even = 0.0, res_kappa_odd = 0.0, res_alpha_odd = 0.0, res_alpha_even = 0.0;
  double res_product = 0.0, res_seven = 0.0;
  for (int n = 0; n <= N + 1; ++n) {
    double k2 = ladder.kappas.at(2 * n);
    res_kappa_even = std::max(res_kappa_even, relative_residual(k2 * k2, kappa2_even(sys.rec[static_cast<size_t>(n)])));
  }
  for (int n = 1; n <= N + 1; ++n) {
    double k1 = ladder.kappas.at(2 * n - 1);
    double k2 = ladder.kappas.at(2 * n);
    const OtpRecord& rec = sys.rec[static_cast<size_t>(n)];
    res_kappa_odd = std::max(res_kappa_odd, relative_residual(k1 * k1, kappa2_odd(rec)));
    res_alpha_odd = std::max(res_alpha_odd, relative_residual(ladder.alphas.alpha(2 * n - 1), odd_alpha_from_record(rec)));
    res_product = std::max(res_product,
                           relative_residual(k1 * k1 * k2 * k2, 0.25 / (rec.a * rec.a * rec.b * rec.b)));
  }
  for (int n = 0; n <= N; ++n) {
    Complex lhs = ladder.alphas.alpha(2 * n);
    Complex rhs = even_alpha_from_aux(n, sys.aux[static_cast<size_t>(n) + 1], sys.rec[static_cast<size_t>(n)].beta);
    res_alpha_even = std::max(res_alpha_even, relative_residual(lhs, rhs));

    Complex a_even = even_alpha_from_aux(n, sys.aux[static_cast<size_t>(n) + 1], sys.rec[static_cast<size_t>(n)].beta);
    double lhs7 = 4.0 * kappa2_even(sys.rec[static_cast<size_t>(n)]) / kappa2_odd(sys.rec[static_cast<size_t>(n) + 1]) +
                  4.0 * std::norm(a_even);
    res_seven = std::max(res_seven, relative_residual(lhs7, 4.0));
  }
  r.add_check("kappa_even_form", res_kappa_even, tol);
  r.add_check("kappa_odd_form", res_kappa_odd, tol);
  r.add_check("alpha_odd_map", res_alpha_odd, tol);
  r.add_check("alpha_even_map", res_alpha_even, tol);
  r.add_check("kappa_product_form", res_product, tol);
  r.add_check("seven_term_identity", res_seven, tol);

  // Mutual representation, both directions.
  double res_fwd_odd = 0.0, res_fwd_even = 0.0, res_cancel = 0.0, res_inv = 0.0;
  for (int n = 1; n <= N + 1; ++n) {
    double cancel = 0.0;
    ComplexPolynomial phi_o = opuc_odd_from_otp(sys, n, &cancel);
    res_cancel = std::max(res_cancel, cancel);
    ComplexPolynomial star_e = opuc_even_star_from_otp(sys, n, &cancel);
    res_cancel = std::max(res_cancel, cancel);

    const ComplexPolynomial& phi_ref = ladder.phi[static_cast<size_t>(2 * n) - 1];
    const ComplexPolynomial& star_ref = ladder.phi_star[static_cast<size_t>(2 * n)];
    for (int j = 0; j < 64; ++j) {
      Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 64.0);
      res_fwd_odd = std::max(res_fwd_odd, relative_residual(phi_o.eval(z), phi_ref.eval(z)));
      res_fwd_even = std::max(res_fwd_even, relative_residual(star_e.eval(z), star_ref.eval(z)));
    }
  }
  OtpSystem from_ladder = otp_from_opuc(ladder.alphas, N + 1);
  for (int n = 1; n <= N + 1; ++n) {
    for (int j = 0; j < 64; ++j) {
      Complex z = std::polar(1.0, 2.0 * std::numbers::pi * j / 64.0);
      res_inv = std::max(res_inv, relative_residual(from_ladder.sigma[static_cast<size_t>(n)].eval(z),
                                                    sys.sigma[static_cast<size_t>(n)].eval(z)));
      res_inv = std::max(res_inv, relative_residual(from_ladder.pi[static_cast<size_t>(n)].eval(z),
                                                    sys.pi[static_cast<size_t>(n)].eval(z)));
    }
  }
  r.add_check("mutual_representation_odd", res_fwd_odd, tol);
  r.add_check("mutual_representation_even_star", res_fwd_even, tol);
  r.add_check("mutual_representation_cancellation", res_cancel, std::min(tol, 1e-10));
  r.add_check("mutual_representation_inverse", res_inv, tol);
  return r;
}

}  // namespace otp
