#pragma once

// Trace/determinant (AM-GM type) bounds on eigenvalue sums and products of a
// tensor with an all-positive spectrum, plus Gershgorin bounds. The AM-GM
// bounds take the invariants (d, S, det) so a determinant from elsewhere can
// be used for dimension >= 3.

#include <algorithm>
#include <cmath>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hspec/error.hpp"
#include "hspec/gershgorin.hpp"
#include "hspec/spectral.hpp"
#include "hspec/tensor.hpp"

namespace hspec {

enum class TheoremId {
  T1_sum_upper,
  T1_tail_prod_lower,
  T2_chain,
  T3_bracket,
  T4_prod_upper,
  T4_tail_prod_lower,
  T5_lower,
  T5_upper,
  T6_sum_upper,
  Gershgorin_upper,
  Gershgorin_lower,
  MinEig_lower_simple,
  MinEig_upper_mean,
};

enum class BoundKind { upper_on_sum, lower_on_product, upper_on_product, interval };

/// Whether the all-positive spectrum the AM-GM bounds assume was checked.
enum class Hypothesis { verified_positive, assumed, violated };

inline std::string to_string(TheoremId id) {
  switch (id) {
    case TheoremId::T1_sum_upper: return "T1_sum_upper";
    case TheoremId::T1_tail_prod_lower: return "T1_tail_prod_lower";
    case TheoremId::T2_chain: return "T2_chain";
    case TheoremId::T3_bracket: return "T3_bracket";
    case TheoremId::T4_prod_upper: return "T4_prod_upper";
    case TheoremId::T4_tail_prod_lower: return "T4_tail_prod_lower";
    case TheoremId::T5_lower: return "T5_lower";
    case TheoremId::T5_upper: return "T5_upper";
    case TheoremId::T6_sum_upper: return "T6_sum_upper";
    case TheoremId::Gershgorin_upper: return "Gershgorin_upper";
    case TheoremId::Gershgorin_lower: return "Gershgorin_lower";
    case TheoremId::MinEig_lower_simple: return "MinEig_lower_simple";
    case TheoremId::MinEig_upper_mean: return "MinEig_upper_mean";
  }
  return "unknown";
}

inline std::string to_string(BoundKind k) {
  switch (k) {
    case BoundKind::upper_on_sum: return "upper_on_sum";
    case BoundKind::lower_on_product: return "lower_on_product";
    case BoundKind::upper_on_product: return "upper_on_product";
    case BoundKind::interval: return "interval";
  }
  return "unknown";
}

inline std::string to_string(Hypothesis h) {
  switch (h) {
    case Hypothesis::verified_positive: return "verified_positive";
    case Hypothesis::assumed: return "assumed";
    case Hypothesis::violated: return "violated";
  }
  return "unknown";
}

struct BoundInputs {
  long long d = 0;
  /// Scaled trace (m-1)^(n-1) tr(A), the sum of all eigenvalues.
  double S = 0.0;
  double det = 0.0;
  Hypothesis status = Hypothesis::assumed;
};

struct BoundValue {
  TheoremId theorem = TheoremId::T1_sum_upper;
  int k = 0;
  int l = 0;
  double value = 0.0;
  BoundKind kind = BoundKind::upper_on_sum;
  Hypothesis status = Hypothesis::assumed;
};

struct BoundBracket {
  BoundValue lower;
  BoundValue upper;
};

/// Invariants of a tensor. Dimension <= 2 and order 2 compute det and check
/// positivity of the whole spectrum; otherwise det must be supplied and the
/// hypothesis is recorded as assumed.
inline BoundInputs bound_inputs(const SymmetricTensor& t, std::optional<double> external_det = std::nullopt) {
  const auto inv = spectral_invariants(t);
  BoundInputs in;
  in.d = inv.d;
  in.S = inv.scaled_trace;
  if (exact_spectrum_supported(t)) {
    in.det = external_det ? *external_det : determinant(t);
    in.status = h_spectrum(t).all_positive() ? Hypothesis::verified_positive : Hypothesis::violated;
  } else {
    if (!external_det)
      throw unsupported_error("no determinant available for order " + std::to_string(t.order()) + ", dimension " +
                              std::to_string(t.dimension()) + "; supply det=<value> in the tensor document");
    in.det = *external_det;
    in.status = Hypothesis::assumed;
  }
  return in;
}

namespace detail {

/// Threshold on |exponent * log(base)| above which products are formed in
/// the log domain.
inline constexpr double log_domain_switch = 600.0;

struct Factor {
  double base;
  double exponent;
};

/// prod base^exponent over positive bases, switching to exp(sum e log b) when
/// any single power risks overflow or underflow.
inline double power_product(std::initializer_list<Factor> factors) {
  bool use_log = false;
  for (const auto& f : factors)
    if (f.exponent != 0.0 && std::abs(f.exponent * std::log(f.base)) > log_domain_switch) use_log = true;
  if (use_log) {
    double acc = 0.0;
    for (const auto& f : factors)
      if (f.exponent != 0.0) acc += f.exponent * std::log(f.base);
    return std::exp(acc);
  }
  double acc = 1.0;
  for (const auto& f : factors)
    if (f.exponent != 0.0) acc *= std::pow(f.base, f.exponent);
  return acc;
}

inline void require_positive(const BoundInputs& in) {
  if (!(in.S > 0.0) || !std::isfinite(in.S))
    throw hypothesis_error("scaled trace must be positive and finite, got " + std::to_string(in.S));
  if (!(in.det > 0.0) || !std::isfinite(in.det))
    throw hypothesis_error("determinant must be positive and finite, got " + std::to_string(in.det));
}

inline void require_range(const char* what, long long v, long long lo, long long hi) {
  if (v < lo || v > hi)
    throw parameter_error(std::string(what) + " = " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " +
                          std::to_string(hi) + "]");
}

inline BoundValue make(const BoundInputs& in, TheoremId id, int k, int l, double v, BoundKind kind) {
  return {id, k, l, v, kind, in.status};
}

}  // namespace detail

/// lambda_1 + ... + lambda_k <= S - (d-k) [(k/S)^k det]^(1/(d-k)), 1 <= k <= d-1.
inline BoundValue t1_sum_upper(const BoundInputs& in, int k) {
  detail::require_range("k", k, 1, in.d - 1);
  detail::require_positive(in);
  const double dk = static_cast<double>(in.d - k);
  const double root = detail::power_product({{k / in.S, k / dk}, {in.det, 1.0 / dk}});
  return detail::make(in, TheoremId::T1_sum_upper, k, 0, in.S - dk * root, BoundKind::upper_on_sum);
}

/// lambda_{d-k+1} ... lambda_d >= ((d-k)/S)^(d-k) det, 1 <= k <= d-1.
inline BoundValue t1_tail_product_lower(const BoundInputs& in, int k) {
  detail::require_range("k", k, 1, in.d - 1);
  detail::require_positive(in);
  const double dk = static_cast<double>(in.d - k);
  const double v = detail::power_product({{dk / in.S, dk}, {in.det, 1.0}});
  return detail::make(in, TheoremId::T1_tail_prod_lower, k, 0, v, BoundKind::lower_on_product);
}

/// det^(1/d) <= (lambda_1 ... lambda_k)^(1/k) and the bottom-k mean <= S/d <=
/// the top-k mean. Returns {det^(1/d), S/d}.
inline std::vector<BoundValue> t2_chain(const BoundInputs& in, int k) {
  detail::require_range("k", k, 1, in.d);
  detail::require_positive(in);
  const double d = static_cast<double>(in.d);
  return {detail::make(in, TheoremId::T2_chain, k, 0, detail::power_product({{in.det, 1.0 / d}}),
                       BoundKind::lower_on_product),
          detail::make(in, TheoremId::T2_chain, k, 0, in.S / d, BoundKind::interval)};
}

/// [((k-1)/S)^(k-1) det]^(1/(d-k+1)) <= (lambda_k ... lambda_l)^(1/(l-k+1)) and
/// (lambda_k + ... + lambda_l)/(l-k+1) <= S/l - (d/l - 1)[(l/S)^l det]^(1/(d-l)),
/// 1 <= k <= l <= d-1. 0^0 = 1 at k = 1.
inline BoundBracket t3_bracket(const BoundInputs& in, int k, int l) {
  detail::require_range("k", k, 1, in.d - 1);
  detail::require_range("l", l, k, in.d - 1);
  detail::require_positive(in);
  const double d = static_cast<double>(in.d);
  const double e = 1.0 / (d - k + 1);
  const double lower =
      k == 1 ? detail::power_product({{in.det, e}}) : detail::power_product({{(k - 1) / in.S, (k - 1) * e}, {in.det, e}});
  const double dl = d - l;
  const double upper = in.S / l - (d / l - 1.0) * detail::power_product({{l / in.S, l / dl}, {in.det, 1.0 / dl}});
  return {detail::make(in, TheoremId::T3_bracket, k, l, lower, BoundKind::interval),
          detail::make(in, TheoremId::T3_bracket, k, l, upper, BoundKind::interval)};
}

/// lambda_1 ... lambda_k <= {(1/det) [(1/(d-k)) (S/(k+1))^(k+1)]^(d-k)}^(1/(d-k-1)),
/// 1 <= k <= d-2.
inline BoundValue t4_product_upper(const BoundInputs& in, int k) {
  detail::require_range("k", k, 1, in.d - 2);
  detail::require_positive(in);
  const double dk = static_cast<double>(in.d - k);
  const double outer = 1.0 / (dk - 1.0);
  const double v =
      detail::power_product({{1.0 / dk, dk * outer}, {in.S / (k + 1), (k + 1) * dk * outer}, {in.det, -outer}});
  return detail::make(in, TheoremId::T4_prod_upper, k, 0, v, BoundKind::upper_on_product);
}

/// lambda_{d-k+1} ... lambda_d >= [k det ((d-k+1)/S)^(d-k+1)]^(k/(k-1)), 2 <= k <= d-1.
inline BoundValue t4_tail_product_lower(const BoundInputs& in, int k) {
  detail::require_range("k", k, 2, in.d - 1);
  detail::require_positive(in);
  const double e = static_cast<double>(k) / (k - 1);
  const double dk1 = static_cast<double>(in.d - k + 1);
  const double v = detail::power_product({{static_cast<double>(k), e}, {in.det, e}, {dk1 / in.S, dk1 * e}});
  return detail::make(in, TheoremId::T4_tail_prod_lower, k, 0, v, BoundKind::lower_on_product);
}

/// [(d-k+1) det (k/S)^k]^((l-k+1)/(d-k)) <= lambda_k ... lambda_l
///   <= [(1/det) ((1/(d-l)) (S/(l+1))^(l+1))^(d-l)]^((l-k+1)/(l(d-l-1))),
/// 1 <= k <= l <= d-2.
inline BoundBracket t5_product_bracket(const BoundInputs& in, int k, int l) {
  detail::require_range("k", k, 1, in.d - 2);
  detail::require_range("l", l, k, in.d - 2);
  detail::require_positive(in);
  const double d = static_cast<double>(in.d);
  const double span = l - k + 1;
  const double el = span / (d - k);
  const double lower = detail::power_product({{d - k + 1, el}, {in.det, el}, {k / in.S, k * el}});
  const double dl = d - l;
  const double eu = span / (l * (dl - 1.0));
  const double upper = detail::power_product({{in.det, -eu}, {1.0 / dl, dl * eu}, {in.S / (l + 1), (l + 1) * dl * eu}});
  return {detail::make(in, TheoremId::T5_lower, k, l, lower, BoundKind::lower_on_product),
          detail::make(in, TheoremId::T5_upper, k, l, upper, BoundKind::upper_on_product)};
}

/// lambda_1 + ... + lambda_k <= ((k+1)^(k+1) / k^k) (1/det) (S/(d+1))^(d+1), 1 <= k <= d.
inline BoundValue t6_sum_upper(const BoundInputs& in, int k) {
  detail::require_range("k", k, 1, in.d);
  detail::require_positive(in);
  const double d1 = static_cast<double>(in.d + 1);
  const double v =
      detail::power_product({{static_cast<double>(k + 1), static_cast<double>(k + 1)},
                             {static_cast<double>(k), -static_cast<double>(k)},
                             {in.det, -1.0},
                             {in.S / d1, d1}});
  return detail::make(in, TheoremId::T6_sum_upper, k, 0, v, BoundKind::upper_on_sum);
}

/// Gershgorin interval as a {lower, upper} pair of bound values.
inline BoundBracket gershgorin_bounds(const SymmetricTensor& t, Hypothesis status = Hypothesis::assumed) {
  const Interval iv = gershgorin_interval(t);
  return {{TheoremId::Gershgorin_lower, 0, 0, iv.lower, BoundKind::interval, status},
          {TheoremId::Gershgorin_upper, 0, 0, iv.upper, BoundKind::interval, status}};
}

struct BestUpper {
  double value = 0.0;
  TheoremId source = TheoremId::T1_sum_upper;
};

/// Smallest of the k = 1 upper bounds on lambda_max from t1, t4 and t6.
/// t4 needs d >= 3 and is skipped otherwise.
inline BestUpper lambda_max_upper_best(const BoundInputs& in) {
  BestUpper best{t1_sum_upper(in, 1).value, TheoremId::T1_sum_upper};
  if (in.d >= 3) {
    const double v = t4_product_upper(in, 1).value;
    if (v < best.value) best = {v, TheoremId::T4_prod_upper};
  }
  const double v = t6_sum_upper(in, 1).value;
  if (v < best.value) best = {v, TheoremId::T6_sum_upper};
  return best;
}

struct MinEigenBounds {
  /// det / S. Not implied by the inequalities above; kept for comparison.
  double lower_simple = 0.0;
  /// ((d-1)/S)^(d-1) det.
  double lower_t1 = 0.0;
  /// S / d.
  double upper_mean = 0.0;
};

inline MinEigenBounds lambda_min_bounds(const BoundInputs& in) {
  detail::require_positive(in);
  return {in.det / in.S, t1_tail_product_lower(in, 1).value, in.S / static_cast<double>(in.d)};
}

}  // namespace hspec
