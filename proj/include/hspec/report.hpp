#pragma once

// Report models behind the command-line tool, with plain-text, CSV and SVG
// renderers. Text shows 4 significant digits; CSV carries full precision.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "hspec/bounds.hpp"
#include "hspec/certify.hpp"
#include "hspec/gershgorin.hpp"
#include "hspec/io.hpp"
#include "hspec/spectral.hpp"
#include "hspec/tensor.hpp"

namespace hspec::report {

inline constexpr const char* version = "0.1.0";

inline std::string banner() { return std::string("hspec ") + version; }

/// Four significant digits, without a negative sign on zero.
inline std::string fmt4(double v) {
  if (v == 0.0) v = 0.0;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  std::string s(buf);
  return s == "-0" ? "0" : s;
}

inline std::string fmt10(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

/// Residuals below 1e-10 are shown as a class, larger ones to 2 digits.
inline std::string fmt_residual(double r) {
  if (!std::isfinite(r)) return "none";
  if (r < 1e-10) return "<1e-10";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2g", r);
  return buf;
}

inline std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

struct Header {
  std::string name;
  int order = 0;
  int dimension = 0;
};

inline Header header_of(const TensorDocument& doc) {
  return {doc.name.value_or("(unnamed)"), doc.order, doc.dimension};
}

inline std::string header_line(const Header& h) {
  return "tensor " + h.name + ": order m=" + std::to_string(h.order) + ", dimension n=" + std::to_string(h.dimension);
}

// ---------------------------------------------------------------- spectrum

struct SpectrumReport {
  Header header;
  long long d = 0;
  double trace = 0.0;
  double scaled_trace = 0.0;
  double det = 0.0;
  Spectrum spectrum;
};

inline SpectrumReport make_spectrum_report(const TensorDocument& doc) {
  const SymmetricTensor t = doc.tensor();
  if (!exact_spectrum_supported(t))
    throw unsupported_error("spectrum needs dimension n <= 2 or order m = 2; got m=" + std::to_string(t.order()) +
                            ", n=" + std::to_string(t.dimension()));
  SpectrumReport r;
  r.header = header_of(doc);
  const auto inv = spectral_invariants(t);
  r.d = inv.d;
  r.trace = inv.trace;
  r.scaled_trace = inv.scaled_trace;
  r.det = determinant(t);
  r.spectrum = h_spectrum(t);
  return r;
}

inline std::string render_text(const SpectrumReport& r) {
  std::ostringstream o;
  o << banner() << "\n" << header_line(r.header) << "\n";
  o << "eigenvalue count d = " << r.d << "\n";
  o << "trace = " << fmt10(r.trace) << "\n";
  o << "scaled trace S = " << fmt10(r.scaled_trace) << "\n";
  o << "determinant = " << fmt10(r.det) << "\n";
  o << "real roots: " << r.spectrum.real_roots.size() << " distinct\n";
  o << "  " << pad("value", 12) << pad("mult", 6) << pad("H", 5) << "residual\n";
  for (const auto& x : r.spectrum.real_roots)
    o << "  " << pad(fmt4(x.value), 12) << pad(std::to_string(x.multiplicity), 6)
      << pad(x.h_eigenvalue.value_or(false) ? "yes" : "no", 5) << fmt_residual(x.residual) << "\n";
  o << "H-eigenvalues: " << r.spectrum.h_eigenvalues().size() << " distinct\n";
  o << "complex roots: " << r.spectrum.complex_count << "\n";
  const auto& c = r.spectrum.complex_roots;
  for (std::size_t i = 0; i < c.size();) {
    std::size_t j = i;
    while (j < c.size() && c[j] == c[i]) ++j;
    if (c[i].imag() > 0)
      o << "  " << fmt4(c[i].real()) << " +/- " << fmt4(c[i].imag()) << "i  mult " << (j - i) << "\n";
    i = j;
  }
  return o.str();
}

// ------------------------------------------------------------------ bounds

struct BoundRow {
  std::string label;
  BoundValue bound;
};

struct BoundsReport {
  Header header;
  BoundInputs inputs;
  bool external_det = false;
  int k = 1;
  int l = 1;
  std::vector<BoundRow> rows;
  /// Bounds whose parameter range excludes (k, l), with the reason.
  std::vector<std::string> not_applicable;
  /// Set when the AM-GM bounds cannot be evaluated (nonpositive S or det).
  std::optional<std::string> amgm_unavailable;
  std::optional<MinEigenBounds> min_bounds;
  std::optional<BestUpper> best_upper;
  BoundBracket gershgorin;
};

namespace detail {

template <class F>
void try_bound(BoundsReport& r, const std::string& label, F&& f) {
  try {
    f();
  } catch (const parameter_error& e) {
    r.not_applicable.push_back(label + ": " + e.what());
  }
}

}  // namespace detail

inline BoundsReport make_bounds_report(const TensorDocument& doc, int k, int l) {
  const SymmetricTensor t = doc.tensor();
  BoundsReport r;
  r.header = header_of(doc);
  r.inputs = bound_inputs(t, doc.external_determinant);
  r.external_det = doc.external_determinant.has_value();
  r.k = k;
  r.l = l;
  if (k < 1 || l < k || l > r.inputs.d)
    throw parameter_error("need 1 <= k <= l <= d = " + std::to_string(r.inputs.d) + ", got k=" + std::to_string(k) +
                          ", l=" + std::to_string(l));
  r.gershgorin = gershgorin_bounds(t, r.inputs.status);
  const BoundInputs& in = r.inputs;
  try {
    hspec::detail::require_positive(in);
  } catch (const hypothesis_error& e) {
    r.amgm_unavailable = e.what();
    return r;
  }
  auto add = [&](std::string label, const BoundValue& b) { r.rows.push_back({std::move(label), b}); };
  detail::try_bound(r, "T1_sum_upper", [&] { add("T1_sum_upper", t1_sum_upper(in, k)); });
  detail::try_bound(r, "T1_tail_prod_lower", [&] { add("T1_tail_prod_lower", t1_tail_product_lower(in, k)); });
  detail::try_bound(r, "T2_chain", [&] {
    const auto v = t2_chain(in, k);
    add("T2_chain det^(1/d)", v[0]);
    add("T2_chain S/d", v[1]);
  });
  detail::try_bound(r, "T3_bracket", [&] {
    const auto b = t3_bracket(in, k, l);
    add("T3_bracket lower", b.lower);
    add("T3_bracket upper", b.upper);
  });
  detail::try_bound(r, "T4_prod_upper", [&] { add("T4_prod_upper", t4_product_upper(in, k)); });
  detail::try_bound(r, "T4_tail_prod_lower", [&] { add("T4_tail_prod_lower", t4_tail_product_lower(in, k)); });
  detail::try_bound(r, "T5_product_bracket", [&] {
    const auto b = t5_product_bracket(in, k, l);
    add("T5_lower", b.lower);
    add("T5_upper", b.upper);
  });
  detail::try_bound(r, "T6_sum_upper", [&] { add("T6_sum_upper", t6_sum_upper(in, k)); });
  r.min_bounds = lambda_min_bounds(in);
  r.best_upper = lambda_max_upper_best(in);
  return r;
}

inline std::string render_text(const BoundsReport& r) {
  std::ostringstream o;
  o << banner() << "\n" << header_line(r.header) << "\n";
  o << "invariants: d = " << r.inputs.d << ", S = " << fmt10(r.inputs.S) << ", det = " << fmt10(r.inputs.det)
    << (r.external_det ? " (supplied)" : " (computed)") << "\n";
  o << "hypothesis: " << to_string(r.inputs.status) << "\n";
  o << "parameters: k = " << r.k << ", l = " << r.l << "\n";
  if (r.amgm_unavailable) {
    o << "trace/determinant bounds unavailable: " << *r.amgm_unavailable << "\n";
  } else {
    o << "  " << pad("bound", 22) << pad("k", 4) << pad("l", 4) << pad("kind", 18) << "value\n";
    for (const auto& row : r.rows)
      o << "  " << pad(row.label, 22) << pad(std::to_string(row.bound.k), 4)
        << pad(row.bound.l ? std::to_string(row.bound.l) : "-", 4) << pad(to_string(row.bound.kind), 18)
        << fmt4(row.bound.value) << "\n";
    for (const auto& s : r.not_applicable) o << "not applicable: " << s << "\n";
    o << "lambda_min bounds:\n";
    o << "  " << pad("lower_simple  det/S", 36) << fmt4(r.min_bounds->lower_simple) << "\n";
    o << "  " << pad("lower_t1      ((d-1)/S)^(d-1) det", 36) << fmt4(r.min_bounds->lower_t1) << "\n";
    o << "  " << pad("upper_mean    S/d", 36) << fmt4(r.min_bounds->upper_mean) << "\n";
    o << "lambda_max best upper bound: " << fmt4(r.best_upper->value) << " (" << to_string(r.best_upper->source)
      << ")\n";
  }
  o << "Gershgorin interval: [" << fmt4(r.gershgorin.lower.value) << ", " << fmt4(r.gershgorin.upper.value) << "]\n";
  if (!r.amgm_unavailable)
    o << "note: det/S is shown for comparison only; the tail-product bound with k = d-1 bounds the product "
         "lambda_2 ... lambda_d, not lambda_min by itself\n";
  if (r.inputs.status == Hypothesis::violated)
    o << "warning: the spectrum is not all real and positive, so these bounds carry no guarantee\n";
  return o.str();
}

// ----------------------------------------------------------------- compare

struct ComparisonRow {
  std::string label;
  double value = 0.0;
  std::optional<double> error_vs_actual;
  std::string kind;
};

struct IntervalRow {
  std::string method;
  double lower = 0.0;
  double upper = 0.0;
};

struct CompareReport {
  Header header;
  Hypothesis status = Hypothesis::assumed;
  std::optional<double> actual_max;
  std::optional<double> actual_min;
  /// Actual lambda_max, k = 1 upper bounds and the Gershgorin upper end.
  std::vector<ComparisonRow> upper;
  /// Distinct real roots and the bound lines drawn across them.
  std::vector<ComparisonRow> distribution;
  std::vector<IntervalRow> intervals;
  std::optional<std::string> amgm_unavailable;
};

inline CompareReport make_compare_report(const TensorDocument& doc) {
  const SymmetricTensor t = doc.tensor();
  CompareReport r;
  r.header = header_of(doc);
  const BoundInputs in = bound_inputs(t, doc.external_determinant);
  r.status = in.status;

  std::optional<Spectrum> s;
  if (exact_spectrum_supported(t)) {
    s = h_spectrum(t);
    const auto h = s->h_eigenvalues();
    if (!h.empty()) {
      r.actual_max = h.front();
      r.actual_min = h.back();
    }
  }
  auto err = [&](double v) -> std::optional<double> {
    if (r.actual_max) return v - *r.actual_max;
    return std::nullopt;
  };

  const Interval g = gershgorin_interval(t);
  if (r.actual_max) r.upper.push_back({"Actual", *r.actual_max, 0.0, "actual"});

  std::optional<MinEigenBounds> mb;
  std::optional<BestUpper> best;
  try {
    hspec::detail::require_positive(in);
    r.upper.push_back({"T1_sum_upper", t1_sum_upper(in, 1).value, err(t1_sum_upper(in, 1).value), "proposed"});
    if (in.d >= 3) {
      const double v = t4_product_upper(in, 1).value;
      r.upper.push_back({"T4_prod_upper", v, err(v), "proposed"});
    }
    const double v6 = t6_sum_upper(in, 1).value;
    r.upper.push_back({"T6_sum_upper", v6, err(v6), "proposed"});
    mb = lambda_min_bounds(in);
    best = lambda_max_upper_best(in);
  } catch (const hypothesis_error& e) {
    r.amgm_unavailable = e.what();
  }
  r.upper.push_back({"Gershgorin_upper", g.upper, err(g.upper), "gershgorin"});

  if (s) {
    int i = 0;
    for (const auto& x : s->real_roots)
      r.distribution.push_back({"lambda_" + std::to_string(++i), x.value, std::nullopt,
                                x.h_eigenvalue.value_or(false) ? "h_eigenvalue" : "real_root"});
  }
  for (const auto& u : r.upper)
    if (u.kind == "proposed") r.distribution.push_back({u.label, u.value, std::nullopt, "upper_bound"});
  if (mb) {
    r.distribution.push_back({"T1_tail_prod_lower", mb->lower_t1, std::nullopt, "lower_bound"});
    r.distribution.push_back({"MinEig_lower_simple", mb->lower_simple, std::nullopt, "reference"});
    r.distribution.push_back({"MinEig_upper_mean", mb->upper_mean, std::nullopt, "upper_bound_min"});
  }
  r.distribution.push_back({"Gershgorin_upper", g.upper, std::nullopt, "upper_bound"});
  r.distribution.push_back({"Gershgorin_lower", g.lower, std::nullopt, "lower_bound"});

  if (r.actual_max) r.intervals.push_back({"actual", *r.actual_min, *r.actual_max});
  if (mb && best) r.intervals.push_back({"proposed", mb->lower_t1, best->value});
  r.intervals.push_back({"gershgorin", g.lower, g.upper});
  return r;
}

inline std::string render_text(const CompareReport& r) {
  std::ostringstream o;
  o << banner() << "\n" << header_line(r.header) << "\n";
  o << "hypothesis: " << to_string(r.status) << "\n";
  if (r.amgm_unavailable) o << "trace/determinant bounds unavailable: " << *r.amgm_unavailable << "\n";
  o << "upper bounds on lambda_max (k = 1):\n";
  o << "  " << pad("label", 20) << pad("value", 12) << "error\n";
  for (const auto& u : r.upper)
    o << "  " << pad(u.label, 20) << pad(fmt4(u.value), 12)
      << (u.error_vs_actual && u.kind != "actual" ? fmt4(*u.error_vs_actual) : "-") << "\n";
  o << "distribution:\n";
  o << "  " << pad("label", 22) << pad("value", 12) << "kind\n";
  for (const auto& d : r.distribution) o << "  " << pad(d.label, 22) << pad(fmt4(d.value), 12) << d.kind << "\n";
  o << "intervals:\n";
  o << "  " << pad("method", 12) << pad("lower", 12) << pad("upper", 12) << "width\n";
  for (const auto& iv : r.intervals)
    o << "  " << pad(iv.method, 12) << pad(fmt4(iv.lower), 12) << pad(fmt4(iv.upper), 12) << fmt4(iv.upper - iv.lower)
      << "\n";
  if (r.status == Hypothesis::violated)
    o << "warning: the spectrum is not all real and positive, so the proposed bounds carry no guarantee\n";
  return o.str();
}

inline std::string csv_rows(const std::vector<ComparisonRow>& rows) {
  std::string s = "label,value,kind\n";
  for (const auto& r : rows) s += r.label + "," + format_real(r.value) + "," + r.kind + "\n";
  return s;
}

inline std::string csv_upper_bounds(const CompareReport& r) { return csv_rows(r.upper); }
inline std::string csv_distribution(const CompareReport& r) { return csv_rows(r.distribution); }

inline std::string csv_intervals(const CompareReport& r) {
  std::string s = "method,lower,upper\n";
  for (const auto& iv : r.intervals) s += iv.method + "," + format_real(iv.lower) + "," + format_real(iv.upper) + "\n";
  return s;
}

// --------------------------------------------------------------------- svg

namespace detail {

inline constexpr double svg_w = 640, svg_h = 360, svg_left = 150, svg_right = 30, svg_top = 40, svg_bottom = 40;

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

inline std::string svg_open(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(svg_w) + "\" height=\"" + num(svg_h) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n"
         "<text x=\"" + num(svg_w / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">" + title + "</text>\n";
}

/// Linear map of [lo, hi] onto the horizontal plot area.
struct Axis {
  double lo, hi;
  double operator()(double v) const {
    return svg_left + (v - lo) / (hi - lo) * (svg_w - svg_left - svg_right);
  }
};

inline Axis axis_for(std::vector<double> v) {
  double lo = *std::min_element(v.begin(), v.end());
  double hi = *std::max_element(v.begin(), v.end());
  lo = std::min(lo, 0.0);
  if (!(hi > lo)) hi = lo + 1;
  const double padv = 0.05 * (hi - lo);
  return {lo - (lo < 0 ? padv : 0), hi + padv};
}

inline std::string x_axis(const Axis& ax) {
  const double y = svg_h - svg_bottom;
  std::string s = "<line x1=\"" + num(svg_left) + "\" y1=\"" + num(y) + "\" x2=\"" + num(svg_w - svg_right) +
                  "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double v = ax.lo + (ax.hi - ax.lo) * i / 4;
    s += "<text x=\"" + num(ax(v)) + "\" y=\"" + num(y + 16) + "\" text-anchor=\"middle\">" + fmt4(v) + "</text>\n";
  }
  if (ax.lo < 0)
    s += "<line x1=\"" + num(ax(0)) + "\" y1=\"" + num(svg_top) + "\" x2=\"" + num(ax(0)) + "\" y2=\"" + num(y) +
         "\" stroke=\"gray\" stroke-dasharray=\"3,3\"/>\n";
  return s;
}

inline std::string colour(const std::string& kind) {
  if (kind == "actual" || kind == "h_eigenvalue") return "#2b6cb0";
  if (kind == "gershgorin") return "#c53030";
  if (kind == "real_root") return "#a0aec0";
  return "#2f855a";
}

}  // namespace detail

/// Horizontal bars of the k = 1 upper bounds against the actual lambda_max.
inline std::string svg_upper_bounds(const CompareReport& r) {
  using namespace detail;
  std::vector<double> vals;
  for (const auto& u : r.upper) vals.push_back(u.value);
  const Axis ax = axis_for(vals);
  std::string s = svg_open("Upper bounds on lambda_max: " + r.header.name);
  const double band = (svg_h - svg_top - svg_bottom) / static_cast<double>(r.upper.size());
  for (std::size_t i = 0; i < r.upper.size(); ++i) {
    const auto& u = r.upper[i];
    const double y = svg_top + band * static_cast<double>(i);
    const double x0 = ax(std::min(0.0, u.value)), x1 = ax(std::max(0.0, u.value));
    s += "<rect x=\"" + num(x0) + "\" y=\"" + num(y + band * 0.15) + "\" width=\"" + num(x1 - x0) + "\" height=\"" +
         num(band * 0.7) + "\" fill=\"" + colour(u.kind) + "\"/>\n";
    s += "<text x=\"" + num(svg_left - 6) + "\" y=\"" + num(y + band * 0.55) + "\" text-anchor=\"end\">" + u.label +
         "</text>\n";
    s += "<text x=\"" + num(x1 + 4) + "\" y=\"" + num(y + band * 0.55) + "\">" + fmt4(u.value) + "</text>\n";
  }
  return s + x_axis(ax) + "</svg>\n";
}

/// Real roots as points on a line, with bound positions as vertical marks.
inline std::string svg_distribution(const CompareReport& r) {
  using namespace detail;
  std::vector<double> vals;
  for (const auto& d : r.distribution) vals.push_back(d.value);
  const Axis ax = axis_for(vals);
  std::string s = svg_open("Eigenvalue distribution and bounds: " + r.header.name);
  const double mid = svg_top + 40;
  s += "<text x=\"" + num(svg_left - 6) + "\" y=\"" + num(mid + 4) + "\" text-anchor=\"end\">roots</text>\n";
  double y = mid + 40;
  for (const auto& d : r.distribution) {
    if (d.kind == "h_eigenvalue" || d.kind == "real_root") {
      s += "<circle cx=\"" + num(ax(d.value)) + "\" cy=\"" + num(mid) + "\" r=\"5\" fill=\"" + colour(d.kind) +
           "\"/>\n";
      continue;
    }
    const std::string c = d.label.rfind("Gershgorin", 0) == 0 ? colour("gershgorin") : colour("proposed");
    s += "<line x1=\"" + num(ax(d.value)) + "\" y1=\"" + num(mid - 15) + "\" x2=\"" + num(ax(d.value)) + "\" y2=\"" +
         num(y) + "\" stroke=\"" + c + "\"/>\n";
    s += "<text x=\"" + num(svg_left - 6) + "\" y=\"" + num(y + 4) + "\" text-anchor=\"end\">" + d.label +
         "</text>\n";
    y += 18;
  }
  return s + x_axis(ax) + "</svg>\n";
}

/// Interval bars: actual spectrum range, proposed bounds and Gershgorin.
inline std::string svg_intervals(const CompareReport& r) {
  using namespace detail;
  std::vector<double> vals;
  for (const auto& iv : r.intervals) {
    vals.push_back(iv.lower);
    vals.push_back(iv.upper);
  }
  const Axis ax = axis_for(vals);
  std::string s = svg_open("Spectral intervals: " + r.header.name);
  const double band = (svg_h - svg_top - svg_bottom) / static_cast<double>(r.intervals.size());
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    const auto& iv = r.intervals[i];
    const double y = svg_top + band * static_cast<double>(i);
    const std::string kind = iv.method == "actual" ? "actual" : iv.method == "gershgorin" ? "gershgorin" : "proposed";
    s += "<rect x=\"" + num(ax(iv.lower)) + "\" y=\"" + num(y + band * 0.3) + "\" width=\"" +
         num(std::max(1.0, ax(iv.upper) - ax(iv.lower))) + "\" height=\"" + num(band * 0.4) + "\" fill=\"" +
         colour(kind) + "\"/>\n";
    s += "<text x=\"" + num(svg_left - 6) + "\" y=\"" + num(y + band * 0.55) + "\" text-anchor=\"end\">" + iv.method +
         " [" + fmt4(iv.lower) + ", " + fmt4(iv.upper) + "]</text>\n";
  }
  return s + x_axis(ax) + "</svg>\n";
}

// ----------------------------------------------------------------- certify

struct CertifyReport {
  Header header;
  LyapunovReport lyapunov;
  std::uint64_t seed = 42;
  std::optional<MinEigenBounds> min_bounds;
};

inline CertifyReport make_certify_report(const TensorDocument& doc, int samples, std::uint64_t seed) {
  const SymmetricTensor t = doc.tensor();
  CertifyReport r;
  r.header = header_of(doc);
  r.seed = seed;
  r.lyapunov = lyapunov_gradient_flow_check(t, samples, seed);
  if (r.lyapunov.pd_certificate.verdict == Verdict::certified_pd) {
    try {
      r.min_bounds = lambda_min_bounds(bound_inputs(t, doc.external_determinant));
    } catch (const error&) {
    }
  }
  return r;
}

/// 0 for certified_pd and stable, 5 for inconclusive, 1 otherwise.
inline int exit_code(const CertifyReport& r) {
  const Verdict v = r.lyapunov.pd_certificate.verdict;
  if (v == Verdict::inconclusive) return 5;
  if (v == Verdict::certified_pd && r.lyapunov.stable) return 0;
  return 1;
}

inline std::string render_point(const std::vector<double>& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? ", " : "") + fmt4(x[i]);
  return s + ")";
}

inline std::string render_text(const CertifyReport& r) {
  const auto& c = r.lyapunov.pd_certificate;
  std::ostringstream o;
  o << banner() << "\n" << header_line(r.header) << "\n";
  o << "verdict: " << to_string(c.verdict) << "\n";
  o << "method: " << to_string(c.method) << "\n";
  o << "reason: " << c.reason << "\n";
  if (c.witness.lambda_min) o << "smallest H-eigenvalue: " << fmt4(*c.witness.lambda_min) << "\n";
  if (c.witness.disk)
    o << "disk " << c.witness.disk->index << ": center " << fmt4(c.witness.disk->center) << ", radius "
      << fmt4(c.witness.disk->radius) << ", interval [" << fmt4(c.witness.disk->lower()) << ", "
      << fmt4(c.witness.disk->upper()) << "]\n";
  if (!c.witness.point.empty())
    o << "witness x = " << render_point(c.witness.point) << ", A x^m = " << fmt4(c.witness.form_value.value_or(0.0))
      << "\n";
  if (r.min_bounds)
    o << "lambda_min lower bound: ((d-1)/S)^(d-1) det = " << fmt4(r.min_bounds->lower_t1)
      << " (reference det/S = " << fmt4(r.min_bounds->lower_simple) << ")\n";
  o << "Lyapunov check for x' = -grad V, V(x) = A x^m:\n";
  o << "  samples: " << r.lyapunov.sample_count << " (seed " << r.seed << ")\n";
  o << "  min V: " << fmt4(r.lyapunov.min_V) << "\n";
  o << "  max Vdot: " << fmt4(r.lyapunov.max_Vdot) << "\n";
  o << "  stable: " << (r.lyapunov.stable ? "yes" : "no") << "\n";
  o << "note: V and Vdot are checked at sampled unit-sphere points; other vector fields get sampling evidence only\n";
  return o.str();
}

}  // namespace hspec::report
