#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "otp/measure.hpp"
#include "otp/measure_io.hpp"
#include "oracles.hpp"

using otp::Complex;

namespace {

otp::Measure lebesgue() {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::lebesgue;
  return otp::build_measure(s);
}

otp::Measure cosine(double r = 1.0) {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::cosine;
  s.weight.r = r;
  return otp::build_measure(s);
}

otp::Measure exp_cos(double t = 1.0) {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::exp_cos;
  s.weight.t = t;
  return otp::build_measure(s);
}

}  // namespace

TEST_CASE("uniform weight has delta moments") {
  otp::Measure mu = lebesgue();
  otp::MomentSequence c = otp::moments(mu, 12);
  REQUIRE(c.at(0) == Complex(1.0));
  for (int n = 1; n <= 12; ++n) REQUIRE(std::abs(c.at(n)) < 1e-14);
}

TEST_CASE("cosine weight moments match the closed form") {
  otp::Measure mu = cosine();
  otp::MomentSequence c = otp::moments(mu, 10);
  CHECK(std::abs(c.at(1) - Complex(0.5)) < 1e-14);
  for (int n = 2; n <= 10; ++n) CHECK(std::abs(c.at(n)) < 1e-14);

  otp::Measure half = cosine(0.4);
  otp::MomentSequence ch = otp::moments(half, 4);
  CHECK(std::abs(ch.at(1) - Complex(0.2)) < 1e-14);
}

TEST_CASE("exponential weight moments are Bessel ratios") {
  otp::Measure mu = exp_cos();
  otp::MomentSequence c = otp::moments(mu, 8);
  double i0 = oracle::bessel_i(0, 1.0);
  for (int n = 1; n <= 8; ++n)
    CHECK(std::abs(c.at(n) - Complex(oracle::bessel_i(n, 1.0) / i0)) < 1e-14);
}

TEST_CASE("rational weight moments come from the exact recursion") {
  otp::Measure mu = otp::bernstein_szego_measure({Complex(0.5, 0.0)});
  otp::MomentSequence c = otp::moments(mu, 20);
  for (int n = 0; n <= 20; ++n) CHECK(std::abs(c.at(n) - Complex(std::pow(2.0, -n))) < 1e-15);

  // A sharply peaked instance (zeros of the defining polynomial approach the
  // circle): moments must stay exact even though the grid cannot resolve it.
  otp::Measure spiky = otp::bernstein_szego_measure(std::vector<Complex>(16, Complex(0.5, 0.0)));
  otp::MomentSequence cs = otp::moments(spiky, 4);
  CHECK(cs.at(0) == Complex(1.0));
  CHECK(cs.at(1) == Complex(0.5));       // first recurrence coefficient
  CHECK(cs.at(4) == Complex(0.6953125)); // dyadic, exact in binary
  // (a uniform grid would report c_1 near 1, mistaking the spike for an atom)
}

TEST_CASE("atoms contribute point evaluations to moments") {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::lebesgue;
  s.atoms = {{std::numbers::pi / 3, 0.25}, {4.0, 0.125}};
  otp::Measure mu = otp::build_measure(s);
  otp::MomentSequence c = otp::moments(mu, 5);
  REQUIRE(std::abs(c.at(0) - Complex(1.0)) < 1e-14);
  for (int n = 1; n <= 5; ++n) {
    Complex expect = 0.25 * std::polar(1.0, -n * std::numbers::pi / 3) + 0.125 * std::polar(1.0, -n * 4.0);
    CHECK(std::abs(c.at(n) - expect) < 1e-14);
  }
}

TEST_CASE("pure point measure is valid when atom masses reach 1") {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::samples;
  s.weight.samples.assign(64, 0.0);
  s.atoms = {{0.0, 0.5}, {std::numbers::pi, 0.5}};
  otp::Measure mu = otp::build_measure(s);
  otp::MomentSequence c = otp::moments(mu, 4);
  CHECK(std::abs(c.at(1)) < 1e-15);
  CHECK(std::abs(c.at(2) - Complex(1.0)) < 1e-15);  // both atoms at square roots of unity
}

TEST_CASE("invalid measure specs are rejected") {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::lebesgue;
  s.nodes = 100;  // not a power of two
  CHECK_THROWS_AS(otp::build_measure(s), otp::input_error);
  s.nodes = 32;  // too small
  CHECK_THROWS_AS(otp::build_measure(s), otp::input_error);

  otp::MeasureSpec neg;
  neg.weight.kind = otp::WeightKind::samples;
  neg.weight.samples.assign(64, 1.0);
  neg.weight.samples[10] = -0.5;
  CHECK_THROWS_AS(otp::build_measure(neg), otp::input_error);

  otp::MeasureSpec atoms_bad;
  atoms_bad.weight.kind = otp::WeightKind::lebesgue;
  atoms_bad.atoms = {{1.0, 0.7}, {1.0, 0.2}};  // duplicate angle
  CHECK_THROWS_AS(otp::build_measure(atoms_bad), otp::input_error);

  otp::MeasureSpec empty;
  empty.weight.kind = otp::WeightKind::samples;
  empty.weight.samples.assign(64, 0.0);
  CHECK_THROWS_AS(otp::build_measure(empty), otp::input_error);

  otp::MeasureSpec cos_bad;
  cos_bad.weight.kind = otp::WeightKind::cosine;
  cos_bad.weight.r = 1.5;  // weight would go negative
  CHECK_THROWS_AS(otp::build_measure(cos_bad), otp::input_error);
}

TEST_CASE("moment order is limited by the grid resolution") {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::lebesgue;
  s.nodes = 64;
  otp::Measure mu = otp::build_measure(s);
  CHECK_NOTHROW(otp::moments(mu, 16));
  CHECK_THROWS_AS(otp::moments(mu, 17), otp::input_error);
}

TEST_CASE("log-weight data: smooth positive weight has no zeros") {
  otp::Measure mu = exp_cos();
  otp::LogWeightData d = otp::log_weight_data(mu);
  REQUIRE(d.finite);
  REQUIRE(d.zeros.empty());
  // remainder is log w itself; its mean is the normalized log integral
  double s = 0.0;
  for (double v : d.remainder) s += v;
  CHECK(std::abs(s / mu.nodes() + std::log(oracle::bessel_i(0, 1.0))) < 1e-12);
}

TEST_CASE("log-weight data: single circle zero is detected with its order") {
  otp::Measure mu = cosine();  // 1 + cos(theta) vanishes to second order at pi
  otp::LogWeightData d = otp::log_weight_data(mu);
  REQUIRE(d.finite);
  REQUIRE(d.zeros.size() == 1);
  CHECK(std::abs(d.zeros[0].theta - std::numbers::pi) < 1e-12);
  CHECK(d.zeros[0].order == 2);
  // 1 + cos(theta) = 2 sin^2((theta - pi)/2)... the remainder after removing
  // the template is the constant log(1/2).
  for (int k = 0; k < mu.nodes(); k += 97)
    CHECK(std::abs(d.remainder[static_cast<size_t>(k)] - std::log(0.5)) < 1e-9);
}

TEST_CASE("log-weight data: weight vanishing on an arc is flagged non-integrable") {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::samples;
  std::vector<double> w(256, 1.0);
  for (int k = 60; k < 90; ++k) w[static_cast<size_t>(k)] = 0.0;
  s.weight.samples = w;
  otp::Measure mu = otp::build_measure(s);
  otp::LogWeightData d = otp::log_weight_data(mu);
  CHECK_FALSE(d.finite);
}

TEST_CASE("measure specs round-trip through JSON") {
  otp::MeasureSpec s;
  s.weight.kind = otp::WeightKind::bernstein_szego;
  s.weight.alphas = {Complex(0.3, -0.2), Complex(-0.1, 0.4)};
  s.atoms = {{1.25, 0.125}};
  s.nodes = 512;
  nlohmann::json j = otp::measure_spec_to_json(s);
  otp::MeasureSpec back = otp::measure_spec_from_json(j, "roundtrip");
  REQUIRE(back.weight.kind == otp::WeightKind::bernstein_szego);
  REQUIRE(back.weight.alphas == s.weight.alphas);
  REQUIRE(back.atoms.size() == 1);
  CHECK(back.atoms[0].theta == 1.25);
  CHECK(back.nodes == 512);

  otp::MomentSequence c0 = otp::moments(otp::build_measure(s), 6);
  otp::MomentSequence c1 = otp::moments(otp::build_measure(back), 6);
  for (int n = 0; n <= 6; ++n) CHECK(c0.at(n) == c1.at(n));
}

TEST_CASE("fixture files load") {
  for (const char* name : {"leb.json", "cos.json", "exp.json", "bs1.json", "ger16.json"}) {
    otp::MeasureSpec spec = otp::load_measure_spec(std::string(FIXTURES_DIR) + "/" + name);
    CHECK_NOTHROW(otp::build_measure(spec));
  }
  CHECK_THROWS_AS(otp::load_measure_spec(std::string(FIXTURES_DIR) + "/does-not-exist.json"), otp::input_error);
}

TEST_CASE("malformed measure JSON is rejected with input errors") {
  CHECK_THROWS_AS(otp::measure_spec_from_json(nlohmann::json::parse(R"({"weight":{"kind":"sombrero"}})"), "t"),
                  otp::input_error);
  CHECK_THROWS_AS(otp::measure_spec_from_json(nlohmann::json::parse(R"({"atoms":[]})"), "t"), otp::input_error);
  CHECK_THROWS_AS(
      otp::measure_spec_from_json(nlohmann::json::parse(R"({"weight":{"kind":"bernstein_szego","alphas":[["x"]]}})"), "t"),
      otp::input_error);
}
