// Command-line front end: load a measure or tuple file, run the library,
// emit a report (JSON/CSV/SVG). Exit codes: 0 success (all checks pass),
// 1 check failure, 2 input error, 3 numerical degeneracy.
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "otp/otp.hpp"

namespace {

struct Options {
  std::string command;
  std::string measure_path;
  std::string tuples_path;
  int order = 8;
  bool order_given = false;
  double tol = 1e-8;
  int nodes = 0;
  std::string phase = "zero";
  std::uint64_t seed = 0;
  std::string out_path;
  std::string format = "json";
  bool allow_boundary = false;
};

const char* weight_kind_name(otp::WeightKind k) {
  switch (k) {
    case otp::WeightKind::lebesgue: return "lebesgue";
    case otp::WeightKind::cosine: return "cosine";
    case otp::WeightKind::exp_cos: return "exp_cos";
    case otp::WeightKind::bernstein_szego: return "bernstein_szego";
    case otp::WeightKind::samples: return "samples";
  }
  return "?";
}

int effective_nodes(const Options& opt, int spec_nodes) {
  if (opt.nodes > 0) return opt.nodes;
  if (spec_nodes > 0) return spec_nodes;
  if (const char* env = std::getenv("OTP_NODES")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v <= 0) throw otp::input_error("OTP_NODES must be a positive integer");
    return static_cast<int>(v);
  }
  return 0;  // build_measure default
}

otp::Measure load_measure(const Options& opt) {
  if (opt.measure_path.empty()) throw otp::input_error(opt.command + " requires --measure PATH");
  otp::MeasureSpec spec = otp::load_measure_spec(opt.measure_path);
  spec.nodes = effective_nodes(opt, spec.nodes);
  return otp::build_measure(spec);
}

void write_atomic(const std::string& path, const std::string& payload) {
  std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw otp::input_error("cannot open for writing: " + tmp);
    out << payload;
    out.flush();
    if (!out) throw otp::input_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) throw otp::input_error("cannot move report into place: " + path);
}

std::string render(const otp::Report& r, const std::string& format) {
  if (format == "json") return otp::to_json(r);
  if (format == "csv") return otp::to_csv(r);
  if (format == "svg") return otp::to_svg(r);
  throw otp::input_error("unknown format: " + format);
}

void emit(const otp::Report& r, const Options& opt) {
  std::string payload = render(r, opt.format);
  if (opt.out_path.empty())
    std::cout << payload;
  else
    write_atomic(opt.out_path, payload);
}

void merge_into(otp::Report& dst, const otp::Report& src, const std::string& prefix) {
  for (const auto& [k, v] : src.meta) dst.meta[prefix + k] = v;
  for (const auto& [k, v] : src.scalars) dst.scalars[prefix + k] = v;
  for (const auto& [k, v] : src.sequences) dst.sequences[prefix + k] = v;
  for (const otp::CheckRow& ch : src.checks) {
    otp::CheckRow c = ch;
    c.name = prefix + c.name;
    dst.checks.push_back(c);
  }
}

void stamp(otp::Report& r, const Options& opt) {
  r.meta["command"] = opt.command;
  if (!opt.measure_path.empty()) r.meta["measure"] = opt.measure_path;
  if (!opt.tuples_path.empty()) r.meta["tuples"] = opt.tuples_path;
  r.meta["order"] = std::to_string(opt.order);
}

otp::Sequence seq_of(int first, std::vector<double> v) { return otp::Sequence{first, std::move(v)}; }

int run_analyze(Options& opt) {
  otp::Measure mu = load_measure(opt);
  int N = opt.order;
  otp::MomentSequence c = otp::moments(mu, 2 * N + 2);
  otp::OpucLadder ladder = otp::verblunsky_from_moments(c, 2 * N);
  otp::OtpSystem sys = otp::otp_gram_schmidt(c, N);

  otp::Report r;
  r.kind = "analyze";
  stamp(r, opt);
  r.meta["weight_kind"] = weight_kind_name(mu.spec.weight.kind);
  r.meta["nodes"] = std::to_string(mu.nodes());

  std::vector<double> mre, mim;
  for (int n = 0; n <= 2 * N; ++n) {
    mre.push_back(c.at(n).real());
    mim.push_back(c.at(n).imag());
  }
  std::vector<double> are, aim;
  for (int n = 0; n < 2 * N; ++n) {
    are.push_back(ladder.alphas.alpha(n).real());
    aim.push_back(ladder.alphas.alpha(n).imag());
  }
  std::vector<double> kap;
  for (int n = 0; n <= 2 * N; ++n) kap.push_back(ladder.kappas.at(n));
  std::vector<double> a, b, beta, iota, jmath, varsigma, zeta;
  for (int n = 0; n <= N; ++n) {
    a.push_back(sys.rec[static_cast<size_t>(n)].a);
    b.push_back(sys.rec[static_cast<size_t>(n)].b);
    beta.push_back(sys.rec[static_cast<size_t>(n)].beta);
  }
  for (int n = 1; n <= N; ++n) {
    iota.push_back(sys.aux[static_cast<size_t>(n)].iota);
    jmath.push_back(sys.aux[static_cast<size_t>(n)].jmath);
    varsigma.push_back(sys.aux[static_cast<size_t>(n)].varsigma);
    zeta.push_back(sys.aux[static_cast<size_t>(n)].zeta);
  }
  r.sequences["moment_real"] = seq_of(0, std::move(mre));
  r.sequences["moment_imag"] = seq_of(0, std::move(mim));
  r.sequences["alpha_real"] = seq_of(0, std::move(are));
  r.sequences["alpha_imag"] = seq_of(0, std::move(aim));
  r.sequences["kappa"] = seq_of(0, std::move(kap));
  r.sequences["a"] = seq_of(0, std::move(a));
  r.sequences["b"] = seq_of(0, std::move(b));
  r.sequences["beta"] = seq_of(0, std::move(beta));
  r.sequences["iota"] = seq_of(1, std::move(iota));
  r.sequences["jmath"] = seq_of(1, std::move(jmath));
  r.sequences["varsigma"] = seq_of(1, std::move(varsigma));
  r.sequences["zeta"] = seq_of(1, std::move(zeta));
  emit(r, opt);
  return 0;
}

int run_verify(Options& opt) {
  otp::Measure mu = load_measure(opt);
  otp::Report r = otp::identity_suite(mu, opt.order, opt.tol);
  stamp(r, opt);
  r.meta["weight_kind"] = weight_kind_name(mu.spec.weight.kind);
  emit(r, opt);
  return r.pass() ? 0 : 1;
}

int run_schur(Options& opt) {
  otp::Measure mu = load_measure(opt);
  int N = opt.order;
  otp::MomentSequence c = otp::moments(mu, 2 * N + otp::kSchurGuard);
  std::vector<otp::Complex> gamma = otp::schur_parameters_from_moments(c, 2 * N);
  otp::OtpSystem sys = otp::otp_gram_schmidt(c, N);

  std::vector<otp::Complex> ger(static_cast<size_t>(2 * N));
  for (int n = 0; n < N; ++n)
    ger[static_cast<size_t>(2 * n)] =
        otp::geronimus_gamma_even(n, sys.aux[static_cast<size_t>(n) + 1], sys.rec[static_cast<size_t>(n)].beta);
  for (int n = 1; n <= N; ++n)
    ger[static_cast<size_t>(2 * n) - 1] = otp::geronimus_gamma_odd(sys.rec[static_cast<size_t>(n)]);

  otp::Report r;
  r.kind = "schur";
  stamp(r, opt);
  std::vector<double> gre, gim, dre;
  double worst = 0.0;
  for (int k = 0; k < 2 * N; ++k) {
    gre.push_back(gamma[static_cast<size_t>(k)].real());
    gim.push_back(gamma[static_cast<size_t>(k)].imag());
    double d = otp::relative_residual(gamma[static_cast<size_t>(k)], ger[static_cast<size_t>(k)]);
    dre.push_back(d);
    worst = std::max(worst, d);
  }
  r.sequences["gamma_real"] = seq_of(0, std::move(gre));
  r.sequences["gamma_imag"] = seq_of(0, std::move(gim));
  r.sequences["gamma_vs_trig_form"] = seq_of(0, std::move(dre));
  r.add_check("schur_parameters_match_trig_form", worst, opt.tol);
  emit(r, opt);
  return r.pass() ? 0 : 1;
}

int run_diagnostics(Options& opt) {
  otp::Measure mu = load_measure(opt);
  int N = opt.order;
  otp::MomentSequence c = otp::moments(mu, 2 * N);
  otp::OpucLadder ladder = otp::verblunsky_from_moments(c, 2 * N);
  otp::OtpSystem sys = otp::otp_gram_schmidt(c, N);

  double I = otp::szego_integral(mu);
  std::vector<otp::Complex> Lhat;
  if (std::isfinite(I)) Lhat = otp::szego_function_coefficients(mu, 2 * N);

  otp::Report r;
  r.kind = "diagnostics";
  stamp(r, opt);
  r.meta["weight_kind"] = weight_kind_name(mu.spec.weight.kind);
  r.meta["szego_condition"] = std::isfinite(I) ? "holds" : "violated";

  merge_into(r, otp::baxter_report(c, sys.rec), "baxter.");
  merge_into(r, otp::rakhmanov_sequences(sys.rec), "rakhmanov.");
  merge_into(r, otp::szego_partial_products(sys.rec, I), "szego.");
  merge_into(r, otp::strong_szego_sums(sys.rec, Lhat, &ladder.alphas), "strong_szego.");
  merge_into(r, otp::limit_checks(sys.rec, I), "limits.");
  if (!Lhat.empty()) {
    std::vector<double> lre, lim;
    for (const otp::Complex& v : Lhat) {
      lre.push_back(v.real());
      lim.push_back(v.imag());
    }
    r.sequences["log_weight_coefficient_real"] = seq_of(0, std::move(lre));
    r.sequences["log_weight_coefficient_imag"] = seq_of(0, std::move(lim));
  }
  emit(r, opt);
  return r.pass() ? 0 : 1;
}

int run_synthesize(Options& opt) {
  if (opt.tuples_path.empty()) throw otp::input_error("synthesize requires --tuples PATH");
  std::vector<otp::OtpRecord> rows = otp::load_tuple_rows(opt.tuples_path);
  otp::TupleSeq t = otp::make_tuple_seq(rows);
  int N = opt.order_given ? opt.order : t.order();
  if (N > t.order())
    throw otp::input_error("order " + std::to_string(N) + " exceeds tuple rows available (" +
                           std::to_string(t.order()) + ")");
  t.rows.resize(static_cast<size_t>(N) + 1);

  otp::PhasePolicy policy{opt.phase == "zero" ? otp::PhasePolicy::Kind::zero : otp::PhasePolicy::Kind::random,
                          opt.seed};
  otp::TupleValidation val = otp::validate_tuples(t, opt.allow_boundary);
  otp::Measure mu = otp::synthesize_measure(t, policy, effective_nodes(opt, 0), opt.allow_boundary);

  otp::Report r;
  r.kind = "synthesize";
  stamp(r, opt);
  r.meta["phase"] = opt.phase;
  if (opt.phase == "random") r.meta["seed"] = std::to_string(opt.seed);
  r.sequences["admissibility_ratio"] = seq_of(0, val.ratio);

  std::vector<double> are, aim;
  for (const otp::Complex& a : mu.spec.weight.alphas) {
    are.push_back(a.real());
    aim.push_back(a.imag());
  }
  r.sequences["alpha_real"] = seq_of(0, std::move(are));
  r.sequences["alpha_imag"] = seq_of(0, std::move(aim));

  std::vector<otp::SevenTuple> st = otp::seven_tuples(mu, N);
  std::vector<double> a, b, beta, iota, jmath, varsigma, zeta, delta;
  double worst = 0.0;
  for (int n = 0; n <= N; ++n) {
    const otp::OtpRecord& rec = st[static_cast<size_t>(n)].rec;
    a.push_back(rec.a);
    b.push_back(rec.b);
    beta.push_back(rec.beta);
    if (n >= 1) {
      const otp::OtpAux& aux = st[static_cast<size_t>(n)].aux;
      iota.push_back(aux.iota);
      jmath.push_back(aux.jmath);
      varsigma.push_back(aux.varsigma);
      zeta.push_back(aux.zeta);
      double d = std::max({std::abs(rec.a - t.rows[static_cast<size_t>(n)].a),
                           std::abs(rec.b - t.rows[static_cast<size_t>(n)].b),
                           std::abs(rec.beta - t.rows[static_cast<size_t>(n)].beta)});
      delta.push_back(d);
      worst = std::max(worst, d);
    }
  }
  r.sequences["a"] = seq_of(0, std::move(a));
  r.sequences["b"] = seq_of(0, std::move(b));
  r.sequences["beta"] = seq_of(0, std::move(beta));
  r.sequences["iota"] = seq_of(1, std::move(iota));
  r.sequences["jmath"] = seq_of(1, std::move(jmath));
  r.sequences["varsigma"] = seq_of(1, std::move(varsigma));
  r.sequences["zeta"] = seq_of(1, std::move(zeta));
  r.sequences["recovery_delta"] = seq_of(1, std::move(delta));
  r.add_check("tuple_recovery", worst, opt.tol);

  if (!opt.out_path.empty()) {
    otp::MeasureSpec out_spec = mu.spec;
    write_atomic(opt.out_path, otp::measure_spec_to_json(out_spec).dump(2) + "\n");
  }
  std::cout << render(r, opt.format);
  return r.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"Orthonormal trigonometric polynomials and their unit-circle counterparts"};
  app.require_subcommand(1);

  auto add_common = [&](CLI::App* sub, bool takes_measure, bool takes_tuples) {
    if (takes_measure) sub->add_option("--measure", opt.measure_path, "measure spec (JSON)");
    if (takes_tuples) sub->add_option("--tuples", opt.tuples_path, "tuple file (JSON)");
    sub->add_option("--order", opt.order, "truncation order N")->each([&](const std::string&) { opt.order_given = true; });
    sub->add_option("--tol", opt.tol, "check tolerance");
    sub->add_option("--nodes", opt.nodes, "quadrature nodes (power of two, >= 64)");
    sub->add_option("--out", opt.out_path, "output path (default stdout)");
    sub->add_option("--format", opt.format, "json|csv|svg");
  };

  CLI::App* analyze = app.add_subcommand("analyze", "moment, coefficient and recurrence tables");
  add_common(analyze, true, false);
  CLI::App* verify = app.add_subcommand("verify", "identity suite; exit 0 iff all residuals pass");
  add_common(verify, true, false);
  CLI::App* schur = app.add_subcommand("schur", "transfer-function parameters and the closed trig forms");
  add_common(schur, true, false);
  CLI::App* diagnostics = app.add_subcommand("diagnostics", "summability, limit-product and log-weight reports");
  add_common(diagnostics, true, false);
  CLI::App* synthesize = app.add_subcommand("synthesize", "build a measure from tuple data and verify recovery");
  add_common(synthesize, false, true);
  synthesize->add_option("--phase", opt.phase, "zero|random")->check(CLI::IsMember({"zero", "random"}));
  synthesize->add_option("--seed", opt.seed, "seed for random phase policy");
  synthesize->add_flag("--allow-boundary", opt.allow_boundary, "accept tuples at the admissibility boundary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (opt.order < 1) throw otp::input_error("order must be >= 1");
    if (!(opt.tol > 0.0)) throw otp::input_error("tolerance must be positive");
    if (app.got_subcommand(analyze)) { opt.command = "analyze"; return run_analyze(opt); }
    if (app.got_subcommand(verify)) { opt.command = "verify"; return run_verify(opt); }
    if (app.got_subcommand(schur)) { opt.command = "schur"; return run_schur(opt); }
    if (app.got_subcommand(diagnostics)) { opt.command = "diagnostics"; return run_diagnostics(opt); }
    if (app.got_subcommand(synthesize)) { opt.command = "synthesize"; return run_synthesize(opt); }
    throw otp::input_error("no subcommand given");
  } catch (const otp::degeneracy_error& e) {
    std::cerr << "degeneracy: " << e.what() << "\n";
    return 3;
  } catch (const otp::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
