#pragma once

// JSON views of the report models. Numbers are written at full precision.

#include <cmath>
#include <string>

#include "hspec/report.hpp"
#include "json.hpp"

namespace hspec::report {

using ojson = nlohmann::ordered_json;

inline ojson number_or_null(double v) { return std::isfinite(v) ? ojson(v) : ojson(nullptr); }

inline ojson envelope(const std::string& command, const Header& h) {
  ojson j;
  j["version"] = version;
  j["command"] = command;
  j["tensor"] = {{"name", h.name}, {"order", h.order}, {"dimension", h.dimension}};
  return j;
}

inline ojson to_json(const BoundValue& b) {
  return {{"theorem", to_string(b.theorem)}, {"k", b.k},         {"l", b.l},
          {"value", number_or_null(b.value)}, {"kind", to_string(b.kind)}, {"hypothesis", to_string(b.status)}};
}

inline ojson to_json(const SpectrumReport& r) {
  ojson j = envelope("spectrum", r.header);
  j["d"] = r.d;
  j["trace"] = r.trace;
  j["scaled_trace"] = r.scaled_trace;
  j["determinant"] = r.det;
  ojson roots = ojson::array();
  for (const auto& x : r.spectrum.real_roots)
    roots.push_back({{"value", x.value},
                     {"multiplicity", x.multiplicity},
                     {"h_eigenvalue", x.h_eigenvalue.value_or(false)},
                     {"residual", number_or_null(x.residual)}});
  j["real_roots"] = roots;
  j["complex_count"] = r.spectrum.complex_count;
  ojson cplx = ojson::array();
  for (const auto& z : r.spectrum.complex_roots) cplx.push_back({z.real(), z.imag()});
  j["complex_roots"] = cplx;
  return j;
}

inline ojson to_json(const BoundsReport& r) {
  ojson j = envelope("bounds", r.header);
  j["invariants"] = {{"d", r.inputs.d},
                     {"S", r.inputs.S},
                     {"det", r.inputs.det},
                     {"det_source", r.external_det ? "supplied" : "computed"}};
  j["hypothesis"] = to_string(r.inputs.status);
  j["k"] = r.k;
  j["l"] = r.l;
  ojson rows = ojson::array();
  for (const auto& row : r.rows) {
    ojson b = to_json(row.bound);
    b["label"] = row.label;
    rows.push_back(b);
  }
  j["bounds"] = rows;
  j["not_applicable"] = r.not_applicable;
  if (r.amgm_unavailable) j["unavailable"] = *r.amgm_unavailable;
  if (r.min_bounds)
    j["lambda_min"] = {{"lower_simple", r.min_bounds->lower_simple},
                       {"lower_t1", r.min_bounds->lower_t1},
                       {"upper_mean", r.min_bounds->upper_mean}};
  if (r.best_upper) j["lambda_max_upper_best"] = {{"value", r.best_upper->value}, {"source", to_string(r.best_upper->source)}};
  j["gershgorin"] = {{"lower", r.gershgorin.lower.value}, {"upper", r.gershgorin.upper.value}};
  return j;
}

inline ojson to_json(const CompareReport& r) {
  ojson j = envelope("compare", r.header);
  j["hypothesis"] = to_string(r.status);
  auto rows = [](const std::vector<ComparisonRow>& v) {
    ojson a = ojson::array();
    for (const auto& x : v) {
      ojson o = {{"label", x.label}, {"value", x.value}, {"kind", x.kind}};
      o["error_vs_actual"] = x.error_vs_actual ? ojson(*x.error_vs_actual) : ojson(nullptr);
      a.push_back(o);
    }
    return a;
  };
  j["upper_bounds"] = rows(r.upper);
  j["distribution"] = rows(r.distribution);
  ojson iv = ojson::array();
  for (const auto& x : r.intervals) iv.push_back({{"method", x.method}, {"lower", x.lower}, {"upper", x.upper}});
  j["intervals"] = iv;
  if (r.amgm_unavailable) j["unavailable"] = *r.amgm_unavailable;
  return j;
}

inline ojson to_json(const CertifyReport& r) {
  ojson j = envelope("certify", r.header);
  const auto& c = r.lyapunov.pd_certificate;
  ojson cert = {{"verdict", to_string(c.verdict)}, {"method", to_string(c.method)}, {"reason", c.reason}};
  ojson w = ojson::object();
  if (c.witness.lambda_min) w["lambda_min"] = *c.witness.lambda_min;
  if (c.witness.disk)
    w["disk"] = {{"index", c.witness.disk->index}, {"center", c.witness.disk->center}, {"radius", c.witness.disk->radius}};
  if (!c.witness.point.empty()) {
    w["point"] = c.witness.point;
    w["form_value"] = c.witness.form_value.value_or(0.0);
  }
  cert["witness"] = w;
  j["pd_certificate"] = cert;
  if (r.min_bounds) j["lambda_min_lower"] = {{"det_over_S", r.min_bounds->lower_simple}, {"tail_product", r.min_bounds->lower_t1}};
  j["lyapunov"] = {{"samples", r.lyapunov.sample_count},
                   {"seed", r.seed},
                   {"min_V", number_or_null(r.lyapunov.min_V)},
                   {"max_Vdot", number_or_null(r.lyapunov.max_Vdot)},
                   {"stable", r.lyapunov.stable}};
  return j;
}

}  // namespace hspec::report
