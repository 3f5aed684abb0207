#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>
#include <random>

#include "otp/diagnostics.hpp"
#include "otp/favard.hpp"
#include "oracles.hpp"

using otp::Complex;

namespace {

otp::Measure make(otp::WeightKind kind) {
  otp::MeasureSpec s;
  s.weight.kind = kind;
  return otp::build_measure(s);
}

std::vector<otp::OtpRecord> records(const otp::Measure& mu, int N) {
  return otp::otp_gram_schmidt(otp::moments(mu, 2 * N), N).rec;
}

}  // namespace

TEST_CASE("residual metric is absolute near zero and relative for large values") {
  CHECK(otp::relative_residual(1e-13, 0.0) == 1e-13);
  CHECK(otp::relative_residual(2e6, 1e6) == Catch::Approx(0.5));
  CHECK(otp::relative_residual(Complex(0.0, 3.0), Complex(0.0, 4.0)) == Catch::Approx(0.25));
}

TEST_CASE("log-weight integrals hit their closed forms") {
  CHECK(std::abs(otp::szego_integral(make(otp::WeightKind::lebesgue))) < 1e-13);
  CHECK(std::abs(otp::szego_integral(make(otp::WeightKind::cosine)) - std::log(0.5)) < 1e-8);
  CHECK(std::abs(otp::szego_integral(make(otp::WeightKind::exp_cos)) + std::log(oracle::bessel_i(0, 1.0))) < 1e-12);
  otp::Measure bs1 = otp::bernstein_szego_measure({Complex(0.5)});
  CHECK(std::abs(otp::szego_integral(bs1) - std::log(0.75)) < 1e-12);

  otp::MeasureSpec gap;
  gap.weight.kind = otp::WeightKind::samples;
  gap.weight.samples.assign(256, 1.0);
  for (int k = 100; k < 120; ++k) gap.weight.samples[static_cast<size_t>(k)] = 0.0;
  otp::Measure mu = otp::build_measure(gap);
  CHECK(std::isinf(otp::szego_integral(mu)));
  CHECK(otp::szego_integral(mu) < 0.0);
  CHECK_THROWS_AS(otp::szego_function_coefficients(mu, 4), otp::degeneracy_error);
}

TEST_CASE("log-weight Fourier coefficients: vanishing weight handled through templates") {
  // log(1 + cos theta) = log(1/2) + 2 log|e^{i theta} - e^{i pi}| gives
  // exactly L_0 = log(1/2) and L_n = -(-1)^n / n.
  std::vector<Complex> L = otp::szego_function_coefficients(make(otp::WeightKind::cosine), 12);
  CHECK(std::abs(L[0] - Complex(std::log(0.5))) < 1e-8);
  for (int n = 1; n <= 12; ++n) {
    double want = -(n % 2 == 0 ? 1.0 : -1.0) / n;
    CHECK(std::abs(L[static_cast<size_t>(n)] - Complex(want)) < 1e-8);
  }
  // log(exp(cos theta)/I0(1)) has a single cosine harmonic: L_1 = 1/2.
  std::vector<Complex> E = otp::szego_function_coefficients(make(otp::WeightKind::exp_cos), 8);
  CHECK(std::abs(E[0] - Complex(-std::log(oracle::bessel_i(0, 1.0)))) < 1e-12);
  CHECK(std::abs(E[1] - Complex(0.5)) < 1e-12);
  for (int n = 2; n <= 8; ++n) CHECK(std::abs(E[static_cast<size_t>(n)]) < 1e-12);
}

TEST_CASE("trend verdict separates the model tails") {
  auto partial = [](auto term, int count) {
    std::vector<double> s;
    double acc = 0.0;
    for (int n = 1; n <= count; ++n) {
      acc += term(n);
      s.push_back(acc);
    }
    return s;
  };
  CHECK(otp::trend_verdict(partial([](int n) { return 1.0 / n; }, 400)) == otp::Trend::divergent);
  CHECK(otp::trend_verdict(partial([](int) { return 0.3; }, 400)) == otp::Trend::divergent);
  CHECK(otp::trend_verdict(partial([](int n) { return std::log(1.0 + n) / n; }, 400)) == otp::Trend::divergent);
  CHECK(otp::trend_verdict(partial([](int n) { return 1.0 / (n * n); }, 400)) == otp::Trend::summable);
  CHECK(otp::trend_verdict(partial([](int n) { return std::pow(0.8, n); }, 400)) == otp::Trend::summable);
  // per-term noise at the square-root-of-epsilon scale must not read as a tail
  CHECK(otp::trend_verdict(partial([](int) { return 3e-8; }, 400)) == otp::Trend::summable);
  CHECK_THROWS_AS(otp::trend_verdict({1.0, 2.0, 3.0}), otp::input_error);
}

TEST_CASE("record-form coefficient moduli match the actual coefficients") {
  std::mt19937_64 rng(91);
  auto unit = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
  std::vector<Complex> alphas;
  for (int m = 0; m < 20; ++m) alphas.push_back(std::polar(0.8 * unit(), 2.0 * std::numbers::pi * unit()));
  otp::VerblunskySeq seq(alphas);
  otp::TupleSeq t = otp::tuples_from_alphas(seq, 10);

  std::vector<double> B = otp::rakhmanov_B(t.rows);
  std::vector<double> A = otp::rakhmanov_A(t.rows);
  REQUIRE(B.size() == 10);
  REQUIRE(A.size() == 10);
  for (int n = 0; n < 10; ++n) {
    // cosine branch at the radicand level: 1 - B_n = |alpha_{2n}|^2
    CHECK(std::abs((1.0 - B[static_cast<size_t>(n)]) - std::norm(seq.alpha(2 * n))) < 1e-10);
    // sine branch directly: A_n = |alpha_{2n-1}|^2
    CHECK(std::abs(A[static_cast<size_t>(n)] - std::norm(seq.alpha(2 * n + 1))) < 1e-12);
  }
}

TEST_CASE("ratio sequences approach their limits for a smooth positive weight") {
  std::vector<otp::OtpRecord> rec = records(make(otp::WeightKind::cosine), 24);
  otp::Report r = otp::rakhmanov_sequences(rec);
  REQUIRE(r.sequences.count("A") == 1);
  REQUIRE(r.sequences.count("B") == 1);
  CHECK(r.sequences["A"].first_index == 1);
  CHECK(r.scalars["tail_max_A"] < 1e-2);
  CHECK(r.scalars["tail_max_B_minus_1"] < 1e-2);
  // A_n = 1/(2n+1)^2 for this weight: check an interior value exactly
  CHECK(std::abs(r.sequences["A"].values[4] - 1.0 / 121.0) < 1e-10);
}

TEST_CASE("coefficient-sum report flags the hard weight and passes the easy one") {
  // 1 + cos(theta) violates the summability hypothesis (coefficients ~ 1/n)
  // while its moment sums are finite.
  otp::Measure cosw = make(otp::WeightKind::cosine);
  otp::MomentSequence c = otp::moments(cosw, 48);
  otp::Report hard = otp::baxter_report(c, records(cosw, 24));
  CHECK(hard.meta["verdict_coefficient_sum"] == "divergent-trend");
  CHECK(hard.meta["verdict_moment_abs_sum"] == "summable");

  // finitely many nonzero coefficients: everything summable
  otp::Measure bs = otp::bernstein_szego_measure(std::vector<Complex>(16, Complex(0.5)));
  otp::Report easy = otp::baxter_report(otp::moments(bs, 40), records(bs, 16));
  CHECK(easy.meta["verdict_coefficient_sum"] == "summable");
  CHECK(easy.sequences["cosine_branch_terms"].values[3] == Catch::Approx(0.5).margin(1e-7));
  CHECK(easy.sequences["sine_branch_terms"].values[3] == Catch::Approx(0.5).margin(1e-10));
}

TEST_CASE("norm-ratio partial products converge to the exponentiated integral") {
  otp::Measure bs1 = otp::bernstein_szego_measure({Complex(0.5)});
  otp::Report r1 = otp::szego_partial_products(records(bs1, 12), otp::szego_integral(bs1));
  CHECK(std::abs(r1.scalars["product"] - 0.75) < 1e-10);
  CHECK(std::abs(r1.scalars["exp_szego_integral"] - 0.75) < 1e-7);
  CHECK(r1.scalars["product_deviation"] < 1e-7);
  CHECK(r1.meta["verdict_square_sum"] == "summable");

  otp::Measure expw = make(otp::WeightKind::exp_cos);
  otp::Report r2 = otp::szego_partial_products(records(expw, 32), otp::szego_integral(expw));
  CHECK(std::abs(r2.scalars["product"] - 1.0 / oracle::bessel_i(0, 1.0)) < 1e-6);
  CHECK(r2.meta["verdict_square_sum"] == "summable");

  otp::Measure leb = make(otp::WeightKind::lebesgue);
  otp::Report r3 = otp::szego_partial_products(records(leb, 8), otp::szego_integral(leb));
  CHECK(std::abs(r3.scalars["product"] - 1.0) < 1e-12);
  CHECK(std::abs(r3.scalars["exp_szego_integral"] - 1.0) < 1e-12);
}

TEST_CASE("weighted sums: the smooth weight balances, the rough one diverges") {
  otp::Measure expw = make(otp::WeightKind::exp_cos);
  int N = 16;
  otp::MomentSequence c = otp::moments(expw, 2 * N + 2);
  otp::OtpSystem sys = otp::otp_gram_schmidt(c, N);
  otp::OpucLadder L = otp::verblunsky_from_moments(c, 2 * N);
  std::vector<Complex> Lhat = otp::szego_function_coefficients(expw, 2 * N);
  otp::Report r = otp::strong_szego_sums(sys.rec, Lhat, &L.alphas);
  CHECK(std::abs(r.scalars["S_L"] - 0.25) < 1e-9);  // only L_1 = 1/2 contributes
  CHECK(r.meta["verdict_S_L"] == "summable");
  CHECK(r.meta["verdict_S_alpha"] == "summable");
  REQUIRE(r.checks.size() == 1);
  CHECK(r.checks[0].pass);  // record form of S_alpha equals sum m |alpha_m|^2

  otp::Measure cosw = make(otp::WeightKind::cosine);
  int Nc = 24;
  std::vector<Complex> Lc = otp::szego_function_coefficients(cosw, 2 * Nc);
  otp::Report rc = otp::strong_szego_sums(records(cosw, Nc), Lc);
  CHECK(rc.meta["verdict_S_alpha"] == "divergent-trend");
  CHECK(rc.meta["verdict_S_L"] == "divergent-trend");
}

TEST_CASE("weighted coefficient sum of the constant family is exact") {
  // coefficients: 1/2 sixteen times, then zero, so the weighted sum is
  // sum_{m<16} m/4 = 30, split across the two record-form branches
  otp::Measure bs = otp::bernstein_szego_measure(std::vector<Complex>(16, Complex(0.5)));
  otp::Report r = otp::strong_szego_sums(records(bs, 16), {});
  double want = 0.0;
  for (int m = 0; m < 16; ++m) want += m * 0.25;
  CHECK(want == 30.0);
  CHECK(std::abs(r.scalars["S_alpha"] - want) < 1e-7);
}

TEST_CASE("limit checks report the two limit deviations") {
  otp::Measure expw = make(otp::WeightKind::exp_cos);
  otp::Report r = otp::limit_checks(records(expw, 16), otp::szego_integral(expw));
  CHECK(r.scalars["a_b_deviation"] < 1e-6);
  CHECK(r.scalars["square_sum_deviation"] < 1e-6);
  CHECK(std::abs(r.scalars["a_b_target"] - 0.5 / oracle::bessel_i(0, 1.0)) < 1e-12);
  CHECK(r.meta.count("szego_condition") == 0);

  otp::MeasureSpec gap;
  gap.weight.kind = otp::WeightKind::samples;
  gap.weight.samples.assign(256, 1.0);
  for (int k = 0; k < 64; ++k) gap.weight.samples[static_cast<size_t>(k)] = 0.0;
  otp::Measure mu = otp::build_measure(gap);
  otp::Report bad = otp::limit_checks(records(mu, 8), otp::szego_integral(mu));
  CHECK(bad.meta.count("szego_condition") == 1);
  CHECK(bad.scalars["a_b_target"] == 0.0);
}

TEST_CASE("identity suite passes on the analytic test measures") {
  for (otp::WeightKind kind : {otp::WeightKind::lebesgue, otp::WeightKind::cosine, otp::WeightKind::exp_cos}) {
    otp::Report r = otp::identity_suite(make(kind), 8, 1e-8);
    INFO(otp::to_json(r));
    CHECK(r.pass());
  }
  otp::Report bs = otp::identity_suite(otp::bernstein_szego_measure({Complex(0.4, 0.3), Complex(-0.2, 0.1)}), 8, 1e-8);
  CHECK(bs.pass());
}

TEST_CASE("identity suite honest failure path: unreachable tolerance") {
  otp::Report r = otp::identity_suite(make(otp::WeightKind::cosine), 6, 1e-18);
  CHECK_FALSE(r.pass());
  bool found_fail = false;
  for (const otp::CheckRow& c : r.checks)
    if (!c.pass) found_fail = true;
  CHECK(found_fail);
}

TEST_CASE("report serializers produce well-formed output") {
  otp::Report r;
  r.kind = "demo";
  r.meta["note"] = "serializer probe";
  r.scalars["finite"] = 1.5;
  r.scalars["minus_inf"] = -std::numeric_limits<double>::infinity();
  r.sequences["vals"] = otp::Sequence{1, {0.25, 0.5, std::numeric_limits<double>::quiet_NaN()}};
  r.add_check("alpha", 1e-12, 1e-10);
  r.add_check("beta", 2.0, 1e-10, "expected large");

  nlohmann::json j = nlohmann::json::parse(otp::to_json(r));
  CHECK(j["kind"] == "demo");
  CHECK(j["pass"] == false);
  CHECK(j["scalars"]["minus_inf"] == "-infinity");
  CHECK(j["sequences"]["vals"]["first_index"] == 1);
  CHECK(j["sequences"]["vals"]["values"][2] == "nan");
  CHECK(j["checks"][0]["pass"] == true);
  CHECK(j["checks"][1]["note"] == "expected large");

  std::string csv = otp::to_csv(r);
  CHECK(csv.find("# kind,demo") != std::string::npos);
  CHECK(csv.find("sequence,vals,1,0.25,") != std::string::npos);
  CHECK(csv.find("check,beta,,2,fail tol=") != std::string::npos);

  std::string svg = otp::to_svg(r);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("polyline") != std::string::npos);
  // empty report renders without crashing
  otp::Report empty;
  CHECK(otp::to_svg(empty).rfind("<svg", 0) == 0);
}
