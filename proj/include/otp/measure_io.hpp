// JSON readers/writers for measure specifications and tuple files.
//
// Measure spec:
//   {
//     "weight": {"kind": "lebesgue"},                          // or:
//     "weight": {"kind": "cosine", "r": 1.0},                  // 1 + r cos(theta)
//     "weight": {"kind": "exp_cos", "t": 1.0},                 // exp(t cos(theta)) / I0(t)-normalized
//     "weight": {"kind": "bernstein_szego", "alphas": [[re, im], ...]},
//     "weight": {"kind": "samples", "values": [w_0, ..., w_{M-1}]},
//     "atoms": [{"theta": 1.0, "mass": 0.25}, ...],            // optional
//     "quadrature": {"nodes": 4096}                            // optional
//   }
//
// Tuple file:
//   {"tuples": [{"a": 1.0, "b": 0.577, "beta": 0.0}, ...]}     // row 0 optional
#pragma once

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "otp/errors.hpp"
#include "otp/measure.hpp"
#include "otp/trig_system.hpp"

namespace otp {

namespace detail {

inline nlohmann::json parse_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw input_error("cannot open file: " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw input_error("invalid JSON in " + path + ": " + e.what());
  }
}

inline double json_number(const nlohmann::json& j, const char* field, const std::string& where) {
  if (!j.contains(field) || !j[field].is_number())
    throw input_error(where + ": missing or non-numeric field \"" + field + "\"");
  return j[field].get<double>();
}

inline Complex json_complex(const nlohmann::json& j, const std::string& where) {
  if (j.is_number()) return Complex(j.get<double>(), 0.0);
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return Complex(j[0].get<double>(), j[1].get<double>());
  throw input_error(where + ": complex entries must be numbers or [re, im] pairs");
}

}  // namespace detail

inline MeasureSpec measure_spec_from_json(const nlohmann::json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("weight") || !j["weight"].is_object())
    throw input_error(where + ": expected an object with a \"weight\" object");
  const nlohmann::json& w = j["weight"];
  if (!w.contains("kind") || !w["kind"].is_string())
    throw input_error(where + ": weight needs a string \"kind\"");
  std::string kind = w["kind"].get<std::string>();

  MeasureSpec spec;
  if (kind == "lebesgue") {
    spec.weight.kind = WeightKind::lebesgue;
  } else if (kind == "cosine") {
    spec.weight.kind = WeightKind::cosine;
    spec.weight.r = w.contains("r") ? detail::json_number(w, "r", where) : 1.0;
  } else if (kind == "exp_cos") {
    spec.weight.kind = WeightKind::exp_cos;
    spec.weight.t = w.contains("t") ? detail::json_number(w, "t", where) : 1.0;
  } else if (kind == "bernstein_szego") {
    spec.weight.kind = WeightKind::bernstein_szego;
    if (!w.contains("alphas") || !w["alphas"].is_array())
      throw input_error(where + ": bernstein_szego weight needs an \"alphas\" array");
    for (const auto& entry : w["alphas"])
      spec.weight.alphas.push_back(detail::json_complex(entry, where + " (alphas)"));
  } else if (kind == "samples") {
    spec.weight.kind = WeightKind::samples;
    if (!w.contains("values") || !w["values"].is_array())
      throw input_error(where + ": samples weight needs a \"values\" array");
    for (const auto& entry : w["values"]) {
      if (!entry.is_number()) throw input_error(where + ": sample values must be numbers");
      spec.weight.samples.push_back(entry.get<double>());
    }
  } else {
    throw input_error(where + ": unknown weight kind \"" + kind + "\"");
  }

  if (j.contains("atoms")) {
    if (!j["atoms"].is_array()) throw input_error(where + ": \"atoms\" must be an array");
    for (const auto& a : j["atoms"])
      spec.atoms.push_back(Atom{detail::json_number(a, "theta", where + " (atom)"),
                                detail::json_number(a, "mass", where + " (atom)")});
  }
  if (j.contains("quadrature")) {
    const nlohmann::json& q = j["quadrature"];
    if (!q.is_object() || !q.contains("nodes") || !q["nodes"].is_number_integer())
      throw input_error(where + ": \"quadrature\" must be {\"nodes\": integer}");
    spec.nodes = q["nodes"].get<int>();
  }
  return spec;
}

inline MeasureSpec load_measure_spec(const std::string& path) {
  return measure_spec_from_json(detail::parse_json_file(path), path);
}

inline nlohmann::json measure_spec_to_json(const MeasureSpec& spec) {
  nlohmann::json w;
  switch (spec.weight.kind) {
    case WeightKind::lebesgue:
      w["kind"] = "lebesgue";
      break;
    case WeightKind::cosine:
      w["kind"] = "cosine";
      w["r"] = spec.weight.r;
      break;
    case WeightKind::exp_cos:
      w["kind"] = "exp_cos";
      w["t"] = spec.weight.t;
      break;
    case WeightKind::bernstein_szego: {
      w["kind"] = "bernstein_szego";
      nlohmann::json arr = nlohmann::json::array();
      for (Complex a : spec.weight.alphas) arr.push_back({a.real(), a.imag()});
      w["alphas"] = arr;
      break;
    }
    case WeightKind::samples:
      w["kind"] = "samples";
      w["values"] = spec.weight.samples;
      break;
  }
  nlohmann::json j;
  j["weight"] = w;
  if (!spec.atoms.empty()) {
    nlohmann::json arr = nlohmann::json::array();
    for (const Atom& a : spec.atoms) arr.push_back({{"theta", a.theta}, {"mass", a.mass}});
    j["atoms"] = arr;
  }
  if (spec.nodes > 0) j["quadrature"] = {{"nodes", spec.nodes}};
  return j;
}

// Rows as given in the file; row-0 handling is make_tuple_seq's job.
inline std::vector<OtpRecord> load_tuple_rows(const std::string& path) {
  nlohmann::json j = detail::parse_json_file(path);
  if (!j.is_object() || !j.contains("tuples") || !j["tuples"].is_array())
    throw input_error(path + ": expected {\"tuples\": [...]}");
  std::vector<OtpRecord> rows;
  for (const auto& t : j["tuples"]) {
    OtpRecord r;
    r.a = detail::json_number(t, "a", path + " (tuple)");
    r.b = detail::json_number(t, "b", path + " (tuple)");
    r.beta = t.contains("beta") ? detail::json_number(t, "beta", path + " (tuple)") : 0.0;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace otp
