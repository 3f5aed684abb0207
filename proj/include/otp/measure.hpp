// Measures on the unit circle: an absolutely continuous part given by a
// weight sampled on a uniform grid, plus finitely many point masses.
//
// Quadrature rule throughout: the periodic trapezoid rule on M uniform
// nodes theta_k = 2 pi k / M, i.e. (1/2pi) integral f dtheta ~ (1/M) sum f_k,
// which is spectrally accurate for smooth periodic integrands. Weights are
// rescaled at build time so the total mass (weight + atoms) is exactly 1.
//
// Log-weight helpers: before integrating log w, isolated grid zeros of w are
// removed by subtracting p * log|e^{i theta} - e^{i theta_0}| templates whose
// circle average vanishes; the smooth remainder is then safe to integrate.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <string>
#include <vector>

#include "otp/errors.hpp"
#include "otp/moments.hpp"
#include "otp/opuc.hpp"
#include "otp/power_series.hpp"

namespace otp {

inline constexpr int kDefaultNodes = 4096;
inline constexpr double kWeightZeroThreshold = 1e-13;

enum class WeightKind { lebesgue, cosine, exp_cos, bernstein_szego, samples };

struct Atom {
  double theta = 0.0;
  double mass = 0.0;
};

struct WeightSpec {
  WeightKind kind = WeightKind::lebesgue;
  double r = 1.0;                 // cosine: w = 1 + r cos(theta)
  double t = 1.0;                 // exp_cos: w = exp(t cos(theta)) / normalizer
  std::vector<Complex> alphas;    // bernstein_szego
  std::vector<double> samples;    // samples
};

struct MeasureSpec {
  WeightSpec weight;
  std::vector<Atom> atoms;
  int nodes = 0;  // 0 -> kDefaultNodes (ignored for sample weights)
};

struct Measure {
  MeasureSpec spec;
  std::vector<double> w;      // normalized weight at the grid nodes
  std::vector<Atom> atoms;    // angles reduced into [0, 2pi)
  double weight_scale = 1.0;  // factor applied to the raw weight
  double weight_mass = 1.0;   // (1/2pi) integral of normalized w

  int nodes() const { return static_cast<int>(w.size()); }
  double node_theta(int k) const { return 2.0 * std::numbers::pi * k / nodes(); }
};

namespace detail {

inline Complex pairwise_sum(const Complex* x, size_t n) {
  if (n <= 32) {
    Complex s = 0.0;
    for (size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

inline double pairwise_sum(const double* x, size_t n) {
  if (n <= 32) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  size_t h = n / 2;
  return pairwise_sum(x, h) + pairwise_sum(x + h, n - h);
}

inline bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

inline double reduce_angle(double theta) {
  double two_pi = 2.0 * std::numbers::pi;
  double t = std::fmod(theta, two_pi);
  if (t < 0.0) t += two_pi;
  return t;
}

}  // namespace detail

// Raw (unnormalized) weight samples for a spec.
inline std::vector<double> raw_weight_samples(const WeightSpec& ws, int M) {
  std::vector<double> w(static_cast<size_t>(M));
  double two_pi = 2.0 * std::numbers::pi;
  switch (ws.kind) {
    case WeightKind::lebesgue:
      std::fill(w.begin(), w.end(), 1.0);
      break;
    case WeightKind::cosine: {
      if (std::abs(ws.r) > 1.0) throw input_error("cosine weight: |r| must be <= 1 for nonnegativity");
      for (int k = 0; k < M; ++k) w[static_cast<size_t>(k)] = 1.0 + ws.r * std::cos(two_pi * k / M);
      break;
    }
    case WeightKind::exp_cos:
      for (int k = 0; k < M; ++k) w[static_cast<size_t>(k)] = std::exp(ws.t * std::cos(two_pi * k / M));
      break;
    case WeightKind::bernstein_szego: {
      VerblunskySeq alphas(ws.alphas);  // validates |alpha| < 1
      int N = alphas.count();
      ComplexPolynomial phi = monic_phi(alphas, N);
      double kap = kappa_seq(alphas, N).at(N);
      for (int k = 0; k < M; ++k) {
        Complex z = std::polar(1.0, two_pi * k / M);
        double m2 = std::norm(kap * phi.eval(z));
        w[static_cast<size_t>(k)] = 1.0 / m2;
      }
      break;
    }
    case WeightKind::samples:
      if (static_cast<int>(ws.samples.size()) != M) throw input_error("sample weight: node count mismatch");
      w = ws.samples;
      break;
  }
  return w;
}

inline Measure build_measure(const MeasureSpec& spec) {
  // Grid size.
  int M;
  if (spec.weight.kind == WeightKind::samples) {
    M = static_cast<int>(spec.weight.samples.size());
    if (M < 16) throw input_error("build_measure: sample weights need at least 16 uniform samples");
  } else {
    M = spec.nodes == 0 ? kDefaultNodes : spec.nodes;
    if (!detail::is_power_of_two(M) || M < 64)
      throw input_error("build_measure: quadrature nodes must be a power of two >= 64, got " + std::to_string(M));
  }

  Measure mu;
  mu.spec = spec;
  mu.w = raw_weight_samples(spec.weight, M);

  for (double& v : mu.w) {
    if (v < -kWeightZeroThreshold) throw input_error("build_measure: weight sample is negative");
    if (v < 0.0) v = 0.0;
  }

  // Atoms: positive masses, pairwise distinct reduced angles.
  double atom_mass = 0.0;
  for (const Atom& a : spec.atoms) {
    if (!(a.mass > 0.0)) throw input_error("build_measure: atom masses must be strictly positive");
    Atom r{detail::reduce_angle(a.theta), a.mass};
    for (const Atom& prev : mu.atoms)
      if (std::abs(prev.theta - r.theta) < 1e-12)
        throw input_error("build_measure: atom angles must be pairwise distinct");
    mu.atoms.push_back(r);
    atom_mass += a.mass;
  }
  if (atom_mass > 1.0 + 1e-10) throw input_error("build_measure: atom masses exceed total mass 1");

  // The rational weight integrates to exactly 1 but can spike by many orders
  // of magnitude near the circle zeros of its defining polynomial, where the
  // grid sum badly overestimates the mass; use the analytic value for it.
  double raw_mass = spec.weight.kind == WeightKind::bernstein_szego
                        ? 1.0
                        : detail::pairwise_sum(mu.w.data(), mu.w.size()) / M;
  double target = 1.0 - std::min(atom_mass, 1.0);
  if (raw_mass <= kWeightZeroThreshold) {
    if (mu.atoms.empty()) throw input_error("build_measure: empty support (zero weight, no atoms)");
    if (std::abs(target) > 1e-10)
      throw input_error("build_measure: zero weight but atom masses sum to " + std::to_string(atom_mass) + ", not 1");
    mu.weight_scale = 0.0;
  } else {
    mu.weight_scale = target / raw_mass;
  }
  for (double& v : mu.w) v *= mu.weight_scale;
  mu.weight_mass = target;
  return mu;
}

namespace detail {

// Exact moments of the measure whose recurrence coefficients are the given
// finite list followed by zeros: run the continued-fraction composition
// f_k = (g_k + z f_{k+1}) / (1 + conj(g_k) z f_{k+1}) downward from the zero
// function, form F = (1 + z f_0)/(1 - z f_0), and read c_n = F_n / 2. Pure
// series arithmetic, no quadrature.
inline std::vector<Complex> finite_recurrence_moments(const std::vector<Complex>& alphas, int N) {
  PowerSeries f(std::vector<Complex>(static_cast<size_t>(N) + 1, Complex(0.0)));
  for (size_t k = alphas.size(); k-- > 0;) {
    PowerSeries zf = ps_shift_up(f);
    PowerSeries num = zf;
    num.c[0] += alphas[k];
    PowerSeries den = ps_scale(std::conj(alphas[k]), zf);
    den.c[0] += Complex(1.0);
    f = ps_div(num, den);
  }
  PowerSeries zf = ps_shift_up(f);
  PowerSeries num = zf;
  num.c[0] += Complex(1.0);
  PowerSeries den = ps_scale(Complex(-1.0), zf);
  den.c[0] += Complex(1.0);
  PowerSeries F = ps_div(num, den);
  std::vector<Complex> c(static_cast<size_t>(N) + 1);
  c[0] = Complex(1.0);
  for (int n = 1; n <= N; ++n) c[static_cast<size_t>(n)] = 0.5 * F.c[static_cast<size_t>(n)];
  return c;
}

}  // namespace detail

// c_n = (1/M) sum_k w_k e^{-i n theta_k} + sum_j mass_j e^{-i n theta_j},
// n = 0..N. The trapezoid part aliases Fourier modes at distance M, so N is
// capped at M/4 to keep a comfortable guard band. Rational weights bypass
// the grid entirely (their spikes are not resolvable by uniform nodes) and
// use the exact finite-recurrence moments instead.
inline MomentSequence moments(const Measure& mu, int N) {
  if (N < 0) throw input_error("moments: N must be >= 0");
  if (mu.spec.weight.kind == WeightKind::bernstein_szego) {
    std::vector<Complex> c = detail::finite_recurrence_moments(mu.spec.weight.alphas, N);
    for (int n = 0; n <= N; ++n) {
      Complex v = mu.weight_mass * c[static_cast<size_t>(n)];
      for (const Atom& a : mu.atoms) v += a.mass * std::polar(1.0, -n * a.theta);
      c[static_cast<size_t>(n)] = v;
    }
    return MomentSequence(std::move(c));
  }
  int M = mu.nodes();
  if (N > M / 4)
    throw input_error("moments: order " + std::to_string(N) + " exceeds grid resolution guarantee (max " +
                      std::to_string(M / 4) + " for " + std::to_string(M) + " nodes)");
  std::vector<Complex> c(static_cast<size_t>(N) + 1);
  std::vector<Complex> terms(static_cast<size_t>(M));
  double two_pi = 2.0 * std::numbers::pi;
  for (int n = 0; n <= N; ++n) {
    for (int k = 0; k < M; ++k)
      terms[static_cast<size_t>(k)] = mu.w[static_cast<size_t>(k)] * std::polar(1.0, -two_pi * n * k / M);
    Complex v = detail::pairwise_sum(terms.data(), terms.size()) / static_cast<double>(M);
    for (const Atom& a : mu.atoms) v += a.mass * std::polar(1.0, -n * a.theta);
    c[static_cast<size_t>(n)] = v;
  }
  return MomentSequence(std::move(c));
}

// Weight 1/|phi_N(e^{i theta})|^2 with phi_N = kappa_N Phi_N built from the
// given coefficients; its Verblunsky coefficients are alpha_0..alpha_{N-1}
// followed by zeros.
inline Measure bernstein_szego_measure(const std::vector<Complex>& alphas, int nodes = 0) {
  MeasureSpec spec;
  spec.weight.kind = WeightKind::bernstein_szego;
  spec.weight.alphas = alphas;
  spec.nodes = nodes;
  return build_measure(spec);
}

// ---- log-weight machinery ----

struct WeightZero {
  int node = 0;
  double theta = 0.0;
  int order = 0;  // p in w ~ C |e^{i theta} - e^{i theta_0}|^p
};

struct LogWeightData {
  bool finite = true;              // false: w vanishes on adjacent nodes (an interval)
  std::vector<WeightZero> zeros;   // isolated grid zeros
  std::vector<double> remainder;   // log w minus templates, per node
};

inline LogWeightData log_weight_data(const Measure& mu) {
  int M = mu.nodes();
  LogWeightData out;

  std::vector<int> zero_nodes;
  for (int k = 0; k < M; ++k)
    if (mu.w[static_cast<size_t>(k)] < kWeightZeroThreshold) zero_nodes.push_back(k);

  if (static_cast<int>(zero_nodes.size()) >= M) {
    out.finite = false;
    return out;
  }
  // Cyclically adjacent zero nodes mean the weight vanishes on an interval.
  for (size_t i = 0; i < zero_nodes.size(); ++i) {
    int a = zero_nodes[i];
    int b = zero_nodes[(i + 1) % zero_nodes.size()];
    if (!zero_nodes.empty() && zero_nodes.size() > 1 && (b - a + M) % M == 1) {
      out.finite = false;
      return out;
    }
  }

  auto wrap = [M](int k) { return ((k % M) + M) % M; };
  auto wat = [&](int k) { return mu.w[static_cast<size_t>(wrap(k))]; };

  for (int k : zero_nodes) {
    // Order estimate from both sides: w(theta_0 + s) ~ C |s|^p gives
    // w(2h)/w(h) ~ 2^p.
    double est = 0.0;
    int used = 0;
    for (int side : {+1, -1}) {
      double w1 = wat(k + side), w2 = wat(k + 2 * side);
      if (w1 > kWeightZeroThreshold && w2 > kWeightZeroThreshold) {
        est += std::log2(w2 / w1);
        ++used;
      }
    }
    int p = used > 0 ? static_cast<int>(std::lround(est / used)) : 2;
    p = std::clamp(p, 1, 8);
    out.zeros.push_back(WeightZero{k, mu.node_theta(k), p});
  }

  out.remainder.assign(static_cast<size_t>(M), 0.0);
  std::vector<bool> is_zero(static_cast<size_t>(M), false);
  for (const WeightZero& z : out.zeros) is_zero[static_cast<size_t>(z.node)] = true;

  for (int k = 0; k < M; ++k) {
    if (is_zero[static_cast<size_t>(k)]) continue;
    double r = std::log(mu.w[static_cast<size_t>(k)]);
    for (const WeightZero& z : out.zeros) {
      double d = 2.0 * std::abs(std::sin(0.5 * (mu.node_theta(k) - z.theta)));
      r -= z.order * std::log(d);
    }
    out.remainder[static_cast<size_t>(k)] = r;
  }
  // The remainder is smooth across each zero; fill the hole by cubic
  // interpolation from the nearest clean neighbors.
  for (const WeightZero& z : out.zeros) {
    std::vector<double> left, right;
    for (int s = 1; s <= 6 && (left.size() < 2 || right.size() < 2); ++s) {
      if (left.size() < 2 && !is_zero[static_cast<size_t>(wrap(z.node - s))])
        left.push_back(out.remainder[static_cast<size_t>(wrap(z.node - s))]);
      if (right.size() < 2 && !is_zero[static_cast<size_t>(wrap(z.node + s))])
        right.push_back(out.remainder[static_cast<size_t>(wrap(z.node + s))]);
    }
    double v;
    if (left.size() == 2 && right.size() == 2)
      v = (4.0 * (left[0] + right[0]) - (left[1] + right[1])) / 6.0;
    else if (!left.empty() && !right.empty())
      v = 0.5 * (left[0] + right[0]);
    else
      v = !left.empty() ? left[0] : right[0];
    out.remainder[static_cast<size_t>(z.node)] = v;
  }
  return out;
}

}  // namespace otp
