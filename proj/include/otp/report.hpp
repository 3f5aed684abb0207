// Report containers produced by the diagnostic and verification routines,
// plus serializers. JSON output is the reproducibility format: keys are
// sorted (std::map) and numbers use the library's shortest round-trip
// rendering, so identical inputs give byte-identical files. Non-finite
// values are tagged as strings ("infinity", "-infinity", "nan") instead of
// being silently nulled.
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "otp/errors.hpp"

namespace otp {

struct CheckRow {
  std::string name;
  bool pass = false;
  double residual = 0.0;   // measured value the tolerance applies to
  double tolerance = 0.0;
  std::string note;
};

struct Sequence {
  int first_index = 0;
  std::vector<double> values;
};

struct Report {
  std::string kind;
  std::map<std::string, std::string> meta;
  std::map<std::string, double> scalars;
  std::map<std::string, Sequence> sequences;
  std::vector<CheckRow> checks;

  bool pass() const {
    for (const CheckRow& c : checks)
      if (!c.pass) return false;
    return true;
  }

  void add_check(const std::string& name, double residual, double tolerance, const std::string& note = "") {
    checks.push_back(CheckRow{name, std::isfinite(residual) && residual <= tolerance, residual, tolerance, note});
  }
};

namespace detail {

inline nlohmann::json tagged_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "infinity" : "-infinity";
  return v;
}

inline std::string fmt_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline std::string fmt_short(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

}  // namespace detail

inline std::string to_json(const Report& r) {
  nlohmann::json j;
  j["kind"] = r.kind;
  j["pass"] = r.pass();
  j["meta"] = nlohmann::json::object();
  for (const auto& [k, v] : r.meta) j["meta"][k] = v;
  j["scalars"] = nlohmann::json::object();
  for (const auto& [k, v] : r.scalars) j["scalars"][k] = detail::tagged_number(v);
  j["sequences"] = nlohmann::json::object();
  for (const auto& [k, s] : r.sequences) {
    nlohmann::json vals = nlohmann::json::array();
    for (double v : s.values) vals.push_back(detail::tagged_number(v));
    j["sequences"][k] = {{"first_index", s.first_index}, {"values", vals}};
  }
  j["checks"] = nlohmann::json::array();
  for (const CheckRow& c : r.checks) {
    nlohmann::json row = {{"name", c.name},
                          {"pass", c.pass},
                          {"residual", detail::tagged_number(c.residual)},
                          {"tolerance", detail::tagged_number(c.tolerance)}};
    if (!c.note.empty()) row["note"] = c.note;
    j["checks"].push_back(row);
  }
  return j.dump(2) + "\n";
}

inline std::string to_csv(const Report& r) {
  std::string out;
  out += "# kind," + r.kind + "\n";
  out += "# pass," + std::string(r.pass() ? "true" : "false") + "\n";
  out += "section,name,index,value,extra\n";
  for (const auto& [k, v] : r.meta) out += "meta," + k + ",," + v + ",\n";
  for (const auto& [k, v] : r.scalars) out += "scalar," + k + ",," + detail::fmt_double(v) + ",\n";
  for (const auto& [k, s] : r.sequences)
    for (size_t i = 0; i < s.values.size(); ++i)
      out += "sequence," + k + "," + std::to_string(s.first_index + static_cast<int>(i)) + "," +
             detail::fmt_double(s.values[i]) + ",\n";
  for (const CheckRow& c : r.checks)
    out += "check," + c.name + ",," + detail::fmt_double(c.residual) +
           "," + (c.pass ? "pass" : "fail") + " tol=" + detail::fmt_double(c.tolerance) + "\n";
  return out;
}

// One fixed-viewport line plot with every sequence overlaid; a convenience
// view, not a data interchange format.
inline std::string to_svg(const Report& r) {
  const int W = 800, H = 500, margin = 50;
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  double lo = 0.0, hi = 1.0;
  bool any = false;
  size_t longest = 1;
  for (const auto& [k, s] : r.sequences) {
    for (double v : s.values) {
      if (!std::isfinite(v)) continue;
      if (!any) { lo = hi = v; any = true; }
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    longest = std::max(longest, s.values.size());
  }
  if (!any) { lo = 0.0; hi = 1.0; }
  if (hi - lo < 1e-300) hi = lo + 1.0;

  auto px = [&](size_t i) { return margin + (W - 2.0 * margin) * (longest > 1 ? static_cast<double>(i) / (longest - 1) : 0.0); };
  auto py = [&](double v) { return H - margin - (H - 2.0 * margin) * (v - lo) / (hi - lo); };

  std::string svg = "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 800 500\">\n";
  svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<line x1=\"50\" y1=\"450\" x2=\"750\" y2=\"450\" stroke=\"black\"/>\n";
  svg += "<line x1=\"50\" y1=\"50\" x2=\"50\" y2=\"450\" stroke=\"black\"/>\n";
  svg += "<text x=\"8\" y=\"455\" font-size=\"12\">" + detail::fmt_short(lo) + "</text>\n";
  svg += "<text x=\"8\" y=\"55\" font-size=\"12\">" + detail::fmt_short(hi) + "</text>\n";
  int color = 0, label_y = 20;
  for (const auto& [k, s] : r.sequences) {
    const char* stroke = palette[color % 6];
    std::string pts;
    for (size_t i = 0; i < s.values.size(); ++i) {
      if (!std::isfinite(s.values[i])) continue;
      pts += detail::fmt_short(px(i)) + "," + detail::fmt_short(py(s.values[i])) + " ";
    }
    svg += "<polyline fill=\"none\" stroke=\"" + std::string(stroke) + "\" points=\"" + pts + "\"/>\n";
    svg += "<text x=\"560\" y=\"" + std::to_string(label_y) + "\" font-size=\"12\" fill=\"" + stroke + "\">" + k + "</text>\n";
    label_y += 16;
    ++color;
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace otp
