// Constructive converse: from a sequence of admissible rows (a_n, b_n, beta_n)
// build Verblunsky coefficients and realize a measure whose trigonometric
// system reproduces the rows.
//
// Admissibility is the strict inequality
//   [a_n^2 + b_n^2(1+beta_n^2)] [a_{n+1}^2 + b_{n+1}^2(1+beta_{n+1}^2)]
//       < 4 a_n^2 b_n^2,
// equivalently kappa_{2n} / kappa_{2n+1} < 1 with the kappa ladder built
// from the rows. Row 0 is a convention row: kappa_0 = 1 must hold, which
// pins it to (1, 3^{-1/2}, 0); a supplied row 0 is replaced by that
// internal convention (the classical statement writes (1, 1, 0), which is
// incompatible with kappa_0 = 1 under the same formulas, so validation is
// made independent of the supplied row-0 entries).
//
// The odd coefficients alpha_{2n-1} are determined by row n; the even ones
// have determined modulus sqrt(1 - kappa_{2n}^2/kappa_{2n+1}^2) and a free
// phase. Distinct phase choices give distinct measures with identical rows
// (the seven-tuple completion with iota/jmath/varsigma/zeta tells them
// apart).
#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/measure.hpp"
#include "otp/opuc.hpp"
#include "otp/trig_system.hpp"

namespace otp {

inline constexpr double kStrictnessTol = 1e-12;

struct TupleSeq {
  std::vector<OtpRecord> rows;  // rows[0] is the internal convention row

  int order() const { return static_cast<int>(rows.size()) - 1; }
};

// Accepts user rows with or without a leading convention row. A first row
// matching (1, 1, 0) or (1, 3^{-1/2}, 0) within 1e-9 is recognized as row 0
// (any other meaning of such a row would fail admissibility at n = 0, so the
// rule cannot misclassify valid data); otherwise rows are taken to start at
// n = 1. Row 0 is then normalized to the internal convention.
inline TupleSeq make_tuple_seq(const std::vector<OtpRecord>& user_rows) {
  for (size_t n = 0; n < user_rows.size(); ++n) {
    const OtpRecord& r = user_rows[n];
    if (!(r.a > 0.0) || !(r.b > 0.0) || !std::isfinite(r.a) || !std::isfinite(r.b) || !std::isfinite(r.beta))
      throw input_error("tuple row " + std::to_string(n) + ": a and b must be positive finite, beta finite");
  }
  TupleSeq t;
  t.rows.push_back(OtpRecord{});  // (1, 3^{-1/2}, 0)
  size_t start = 0;
  if (!user_rows.empty()) {
    const OtpRecord& f = user_rows[0];
    bool convention_b = std::abs(f.b - 1.0) <= 1e-9 || std::abs(f.b - kConventionB0) <= 1e-9;
    if (std::abs(f.a - 1.0) <= 1e-9 && std::abs(f.beta) <= 1e-9 && convention_b) start = 1;
  }
  for (size_t n = start; n < user_rows.size(); ++n) t.rows.push_back(user_rows[n]);
  return t;
}

struct TupleValidation {
  bool pass = true;
  std::vector<double> ratio;  // ratio_n = kappa_{2n}^2 / kappa_{2n+1}^2, n = 0..N-1
  std::vector<int> failed;    // indices with ratio_n >= 1 - kStrictnessTol
};

inline TupleValidation validate_tuples(const TupleSeq& t, bool allow_boundary = false) {
  TupleValidation v;
  int N = t.order();
  for (int n = 0; n < N; ++n) {
    double k2_even = kappa2_even(t.rows[static_cast<size_t>(n)]);
    double k2_odd_next = kappa2_odd(t.rows[static_cast<size_t>(n) + 1]);
    double ratio = k2_even / k2_odd_next;
    v.ratio.push_back(ratio);
    double limit = allow_boundary ? 1.0 + kStrictnessTol : 1.0 - kStrictnessTol;
    if (!(ratio < limit)) {
      v.pass = false;
      v.failed.push_back(n);
    }
  }
  return v;
}

// kappa_0..kappa_{2N}; rejects rows whose ladder would not be admissible.
inline KappaSeq kappas_from_tuples(const TupleSeq& t, bool allow_boundary = false) {
  TupleValidation v = validate_tuples(t, allow_boundary);
  if (!v.pass)
    throw input_error("kappas_from_tuples: admissibility violated at row " + std::to_string(v.failed.front()) +
                      " (ratio " + std::to_string(v.ratio[static_cast<size_t>(v.failed.front())]) + " not < 1)");
  return kappas_from_otp(t.rows);
}

// alpha_1, alpha_3, ..., alpha_{2N-1} (determined by the rows).
inline std::vector<Complex> odd_alphas(const TupleSeq& t) {
  std::vector<Complex> out;
  for (int n = 1; n <= t.order(); ++n) {
    Complex a = odd_alpha_from_record(t.rows[static_cast<size_t>(n)]);
    if (std::abs(a) >= 1.0)
      throw input_error("odd_alphas: |alpha_" + std::to_string(2 * n - 1) + "| = " + std::to_string(std::abs(a)) +
                        " not inside the unit disc");
    out.push_back(a);
  }
  return out;
}

struct PhasePolicy {
  enum class Kind { zero, random };
  Kind kind = Kind::zero;
  std::uint64_t seed = 0;
};

// alpha_0, alpha_2, ..., alpha_{2N-2}: moduli from the kappa ladder, phases
// from the policy. Phases are generated from raw mt19937_64 output (not
// std::uniform_real_distribution) so results are identical across standard
// library implementations.
inline std::vector<Complex> even_alphas(const TupleSeq& t, const PhasePolicy& p, bool allow_boundary = false) {
  TupleValidation v = validate_tuples(t, allow_boundary);
  if (!v.pass)
    throw input_error("even_alphas: admissibility violated at row " + std::to_string(v.failed.front()));
  std::mt19937_64 rng(p.seed);
  std::vector<Complex> out;
  for (int n = 0; n < t.order(); ++n) {
    double radicand = 1.0 - v.ratio[static_cast<size_t>(n)];
    if (radicand < 0.0) radicand = 0.0;  // only reachable with allow_boundary
    double mod = std::sqrt(radicand);
    double phase = 0.0;
    if (p.kind == PhasePolicy::Kind::random)
      phase = 2.0 * std::numbers::pi * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    out.push_back(std::polar(mod, phase));
  }
  return out;
}

// alpha_0..alpha_{2N-1} interleaved from the two half-sequences.
inline VerblunskySeq interleave_alphas(const std::vector<Complex>& odd, const std::vector<Complex>& even) {
  if (odd.size() != even.size()) throw input_error("interleave_alphas: half-sequences must have equal length");
  std::vector<Complex> a;
  a.reserve(2 * odd.size());
  for (size_t n = 0; n < odd.size(); ++n) {
    a.push_back(even[n]);  // alpha_{2n}
    a.push_back(odd[n]);   // alpha_{2n+1}
  }
  return VerblunskySeq(std::move(a));
}

// The finitely-determined realization: Bernstein-Szego measure with
// coefficients alpha_0..alpha_{2N-1} followed by zeros.
inline Measure synthesize_measure(const TupleSeq& t, const PhasePolicy& p, int nodes = 0,
                                  bool allow_boundary = false) {
  VerblunskySeq alphas = interleave_alphas(odd_alphas(t), even_alphas(t, p, allow_boundary));
  return bernstein_szego_measure(alphas.a, nodes);
}

// (a, b, beta, iota, jmath, varsigma, zeta) rows computed on a measure.
struct SevenTuple {
  OtpRecord rec;
  OtpAux aux;
};

inline std::vector<SevenTuple> seven_tuples(const Measure& m, int N) {
  MomentSequence c = moments(m, 2 * N);
  OtpSystem sys = otp_gram_schmidt(c, N);
  std::vector<SevenTuple> out(static_cast<size_t>(N) + 1);
  for (int n = 0; n <= N; ++n) {
    out[static_cast<size_t>(n)].rec = sys.rec[static_cast<size_t>(n)];
    out[static_cast<size_t>(n)].aux = sys.aux[static_cast<size_t>(n)];
  }
  return out;
}

// Row inversion: the rows any measure with these Verblunsky coefficients
// would produce. Admissible by construction; the workhorse for randomized
// round-trip fixtures.
inline TupleSeq tuples_from_alphas(const VerblunskySeq& alphas, int N) {
  if (alphas.count() < 2 * N)
    throw input_error("tuples_from_alphas: need " + std::to_string(2 * N) + " alphas");
  KappaSeq ks = kappa_seq(alphas, 2 * N);
  TupleSeq t;
  t.rows.push_back(OtpRecord{});
  for (int n = 1; n <= N; ++n) {
    double k2 = ks.at(2 * n);
    t.rows.push_back(record_from_alpha(alphas.alpha(2 * n - 1), k2 * k2));
  }
  return t;
}

}  // namespace otp
