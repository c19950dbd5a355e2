// Walks the diagonal quartic 1.1 x1^4 + x2^4 through the whole pipeline:
// invariants, spectrum, bounds on lambda_max and lambda_min, and the
// positive-definiteness / Lyapunov check.

#include <cstdio>
#include <exception>

#include "hspec/hspec.hpp"

int main() {
  using namespace hspec;
  try {
    const auto t = SymmetricTensor::from_unique_entries(
        4, 2, {{MultiIndex{1, 1, 1, 1}, 1.1}, {MultiIndex{2, 2, 2, 2}, 1.0}});

    const auto in = bound_inputs(t);
    std::printf("d = %lld, S = %.10g, det = %.10g\n", in.d, in.S, in.det);

    const auto s = h_spectrum(t);
    std::printf("eigenvalues:\n");
    for (const auto& r : s.real_roots)
      std::printf("  %.12g  x%d  %s\n", r.value, r.multiplicity, r.h_eigenvalue.value_or(false) ? "H" : "");

    std::printf("upper bounds on lambda_max:\n");
    std::printf("  sum bound (k=1)      %.4g\n", t1_sum_upper(in, 1).value);
    std::printf("  product bound (k=1)  %.4g\n", t4_product_upper(in, 1).value);
    std::printf("  AM-GM bound (k=1)    %.4g\n", t6_sum_upper(in, 1).value);
    const auto best = lambda_max_upper_best(in);
    std::printf("  best                 %.4g (%s)\n", best.value, to_string(best.source).c_str());

    const auto mn = lambda_min_bounds(in);
    std::printf("lambda_min in [%.4g, %.4g]; det/S = %.4g\n", mn.lower_t1, mn.upper_mean, mn.lower_simple);

    const auto g = gershgorin_interval(t);
    std::printf("Gershgorin interval [%.4g, %.4g]\n", g.lower, g.upper);

    const auto ly = lyapunov_gradient_flow_check(t, 1000);
    std::printf("certificate: %s via %s; Lyapunov %s (min V %.4g, max V' %.4g)\n",
                to_string(ly.pd_certificate.verdict).c_str(), to_string(ly.pd_certificate.method).c_str(),
                ly.stable ? "stable" : "not stable", ly.min_V, ly.max_Vdot);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
