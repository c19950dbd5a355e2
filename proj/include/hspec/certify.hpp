#pragma once

// Positive-definiteness certificates for even-order symmetric tensors and
// sampled Lyapunov checks for the gradient flow x' = -grad V, V(x) = A x^m.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "hspec/error.hpp"
#include "hspec/gershgorin.hpp"
#include "hspec/spectral.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

enum class Verdict { certified_pd, certified_not_pd, inconclusive };

/// How the verdict was reached. Tensor diagonal dominance is the Gershgorin test.
enum class CertMethod { exact_spectrum, gershgorin, sampling, order_parity };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::certified_pd: return "certified_pd";
    case Verdict::certified_not_pd: return "certified_not_pd";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "unknown";
}

inline std::string to_string(CertMethod m) {
  switch (m) {
    case CertMethod::exact_spectrum: return "exact_spectrum";
    case CertMethod::gershgorin: return "gershgorin";
    case CertMethod::sampling: return "sampling";
    case CertMethod::order_parity: return "order_parity";
  }
  return "unknown";
}

struct PdWitness {
  /// Smallest real H-eigenvalue (exact path).
  std::optional<double> lambda_min;
  /// First disk reaching zero or below (Gershgorin path).
  std::optional<GershgorinDisk> disk;
  /// Point with A x^m <= 0, and the form value there.
  std::vector<double> point;
  std::optional<double> form_value;
};

struct PdCertificate {
  Verdict verdict = Verdict::inconclusive;
  CertMethod method = CertMethod::gershgorin;
  PdWitness witness;
  std::string reason;
};

struct CertifyOptions {
  /// Unit-sphere samples used to look for A x^m <= 0 when no exact spectrum exists.
  int samples = 10000;
  std::uint64_t seed = 42;
};

/// Deterministic points on the unit sphere in R^n: normalised Gaussian draws
/// from a seeded mt19937_64.
inline std::vector<std::vector<double>> sphere_samples(int n, int count, std::uint64_t seed) {
  if (n < 1) throw parameter_error("sphere dimension must be positive");
  if (count < 1) throw parameter_error("sample count must be at least 1, got " + std::to_string(count));
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  std::vector<std::vector<double>> out;
  out.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(out.size()) < count) {
    std::vector<double> x(static_cast<std::size_t>(n));
    double norm2 = 0.0;
    for (double& v : x) {
      v = normal(rng);
      norm2 += v * v;
    }
    if (!(norm2 > 0.0)) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& v : x) v *= inv;
    out.push_back(std::move(x));
  }
  return out;
}

/// grad (A x^m) = m A x^{m-1}.
inline std::vector<double> gradient(const SymmetricTensor& t, std::span<const double> x) {
  if (static_cast<int>(x.size()) != t.dimension())
    throw parameter_error("point has " + std::to_string(x.size()) + " coordinates, tensor dimension is " +
                          std::to_string(t.dimension()));
  std::vector<double> g = apply(t, x);
  for (double& v : g) v *= static_cast<double>(t.order());
  return g;
}

namespace detail {

inline PdCertificate odd_order_certificate(const SymmetricTensor& t) {
  PdCertificate c;
  c.verdict = Verdict::certified_not_pd;
  c.method = CertMethod::order_parity;
  std::vector<double> e(static_cast<std::size_t>(t.dimension()), 0.0);
  e[0] = 1.0;
  if (evaluate(t, e) > 0.0) e[0] = -1.0;
  c.witness.form_value = evaluate(t, e);
  c.witness.point = std::move(e);
  c.reason = "order " + std::to_string(t.order()) + " is odd; A(-x)^m = -A x^m, so the form takes both signs";
  return c;
}

/// First sample with A x^m <= 0, if any.
inline std::optional<PdCertificate> sampling_falsify(const SymmetricTensor& t, const CertifyOptions& opt) {
  for (auto& x : sphere_samples(t.dimension(), opt.samples, opt.seed)) {
    const double f = evaluate(t, x);
    if (f <= 0.0) {
      PdCertificate c;
      c.verdict = Verdict::certified_not_pd;
      c.method = CertMethod::sampling;
      c.witness.point = std::move(x);
      c.witness.form_value = f;
      c.reason = "sampled point with nonpositive form value";
      return c;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Gershgorin-only certificate: positive when every disk lies right of zero.
inline PdCertificate certify_pd_gershgorin(const SymmetricTensor& t) {
  if (t.order() % 2 != 0) return detail::odd_order_certificate(t);
  PdCertificate c;
  c.method = CertMethod::gershgorin;
  const auto disks = gershgorin_disks(t);
  for (const auto& d : disks) {
    if (!(d.lower() > 0.0)) {
      c.verdict = Verdict::inconclusive;
      c.witness.disk = d;
      c.reason = "disk " + std::to_string(d.index) + " reaches " + std::to_string(d.lower());
      return c;
    }
  }
  c.verdict = Verdict::certified_pd;
  c.reason = "every Gershgorin disk lies in the positive half-line";
  return c;
}

/// Odd order: not PD. Dimension <= 2 or order 2: exact H-eigenvalues.
/// Otherwise Gershgorin, then a search for a sphere point with A x^m <= 0.
inline PdCertificate certify_pd(const SymmetricTensor& t, const CertifyOptions& opt = {}) {
  if (t.order() % 2 != 0) return detail::odd_order_certificate(t);

  if (exact_spectrum_supported(t)) {
    std::optional<Spectrum> s;
    try {
      s = h_spectrum(t);
    } catch (const conditioning_error&) {
    }
    if (s) {
      const auto h = s->h_eigenvalues();
      if (!h.empty()) {
        PdCertificate c;
        c.method = CertMethod::exact_spectrum;
        c.witness.lambda_min = h.back();
        if (h.back() > 0.0) {
          c.verdict = Verdict::certified_pd;
          c.reason = "every real H-eigenvalue is positive";
        } else {
          c.verdict = Verdict::certified_not_pd;
          c.reason = "real H-eigenvalue " + std::to_string(h.back()) + " is not positive";
        }
        return c;
      }
    }
  }

  PdCertificate g = certify_pd_gershgorin(t);
  if (g.verdict == Verdict::certified_pd) return g;
  if (auto bad = detail::sampling_falsify(t, opt)) return *bad;
  g.reason += "; no sampled point falsifies definiteness";
  return g;
}

struct LyapunovReport {
  PdCertificate pd_certificate;
  int sample_count = 0;
  /// Largest V'(x) = -||grad V(x)||^2 over the samples.
  double max_Vdot = -std::numeric_limits<double>::infinity();
  /// Smallest V(x) over the samples.
  double min_V = std::numeric_limits<double>::infinity();
  bool stable = false;
};

/// Checks V > 0 and V' < 0 (strictly) for x' = -grad V at seeded sphere
/// points; by homogeneity the sphere covers every nonzero x.
inline LyapunovReport lyapunov_gradient_flow_check(const SymmetricTensor& t, int samples, std::uint64_t seed = 42) {
  LyapunovReport r;
  r.pd_certificate = certify_pd(t, {std::max(samples, 1), seed});
  r.sample_count = samples;
  bool ok = true;
  for (const auto& x : sphere_samples(t.dimension(), samples, seed)) {
    const double v = evaluate(t, x);
    const auto g = gradient(t, x);
    double g2 = 0.0;
    for (double gi : g) g2 += gi * gi;
    const double vdot = -g2;
    r.min_V = std::min(r.min_V, v);
    r.max_Vdot = std::max(r.max_Vdot, vdot);
    if (!(v > 0.0) || !(vdot < 0.0)) ok = false;
  }
  r.stable = ok && r.pd_certificate.verdict == Verdict::certified_pd;
  return r;
}

struct FlowSampleReport {
  int sample_count = 0;
  /// Largest grad V(x) . g(x) over the samples.
  double max_Vdot = -std::numeric_limits<double>::infinity();
  bool all_negative = false;
};

/// Sampling evidence for grad V(x) . g(x) < 0 with a user-supplied vector
/// field g. This is evidence only, not a proof.
inline FlowSampleReport flow_sampling_check(const SymmetricTensor& t,
                                            const std::function<std::vector<double>(std::span<const double>)>& g,
                                            int samples, std::uint64_t seed = 42) {
  FlowSampleReport r;
  r.sample_count = samples;
  bool ok = true;
  for (const auto& x : sphere_samples(t.dimension(), samples, seed)) {
    const auto grad = gradient(t, x);
    const auto gx = g(x);
    if (gx.size() != grad.size()) throw parameter_error("vector field returned the wrong dimension");
    double vdot = 0.0;
    for (std::size_t i = 0; i < grad.size(); ++i) vdot += grad[i] * gx[i];
    r.max_Vdot = std::max(r.max_Vdot, vdot);
    if (!(vdot < 0.0)) ok = false;
  }
  r.all_negative = ok;
  return r;
}

}  // namespace hspec
