#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hspec/error.hpp"

namespace hspec {

/// Exponent vector of a monomial: alpha[j] is the power of x_{j+1}.
using Exponent = std::vector<int>;

/// Multinomial coefficient (sum counts)! / prod(counts[j]!).
inline std::uint64_t multinomial(std::span<const int> counts) {
  std::uint64_t result = 1;
  int total = 0;
  for (int c : counts) {
    // Build as a product of binomials C(total + c, c) so intermediates stay small.
    for (int i = 1; i <= c; ++i) {
      result = result * static_cast<std::uint64_t>(total + i) / static_cast<std::uint64_t>(i);
    }
    total += c;
  }
  return result;
}

/// x^alpha for a real vector x.
inline double monomial(std::span<const double> x, std::span<const int> alpha) {
  double r = 1.0;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    for (int p = 0; p < alpha[j]; ++p) r *= x[j];
  }
  return r;
}

/// Ordered tuple (i_1, ..., i_m) of 1-based indices.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> idx) : idx_(idx) {}
  explicit MultiIndex(std::vector<int> idx) : idx_(std::move(idx)) {}

  std::size_t order() const noexcept { return idx_.size(); }
  int operator[](std::size_t k) const { return idx_[k]; }
  const std::vector<int>& indices() const noexcept { return idx_; }

  MultiIndex canonical() const {
    std::vector<int> s = idx_;
    std::sort(s.begin(), s.end());
    return MultiIndex(std::move(s));
  }
  bool is_canonical() const { return std::is_sorted(idx_.begin(), idx_.end()); }

  bool valid_for(int m, int n) const {
    if (static_cast<int>(idx_.size()) != m) return false;
    return std::all_of(idx_.begin(), idx_.end(), [n](int i) { return i >= 1 && i <= n; });
  }

  /// Occurrence counts k_j of each index j = 1..n (the exponent vector of the orbit).
  Exponent counts(int n) const {
    Exponent c(static_cast<std::size_t>(n), 0);
    for (int i : idx_) ++c[static_cast<std::size_t>(i - 1)];
    return c;
  }

  static MultiIndex from_counts(std::span<const int> counts) {
    std::vector<int> idx;
    for (std::size_t j = 0; j < counts.size(); ++j) {
      idx.insert(idx.end(), static_cast<std::size_t>(counts[j]), static_cast<int>(j) + 1);
    }
    return MultiIndex(std::move(idx));
  }

  std::string to_string() const {
    std::string s = "(";
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(idx_[k]);
    }
    return s + ")";
  }

  auto operator<=>(const MultiIndex&) const = default;

 private:
  std::vector<int> idx_;
};

/// One symmetric orbit seen from both sides of the tensor/form duality.
///
/// `value` is the tensor entry shared by every permutation of the index and
/// `coefficient` is the monomial coefficient, value * orbit_size. Whichever
/// number was supplied by the caller is kept verbatim so conversions in both
/// directions are exact.
struct OrbitTerm {
  double value = 0.0;
  double coefficient = 0.0;
  std::uint64_t orbit_size = 1;

  static OrbitTerm from_value(double v, std::uint64_t orbit) {
    return {v, v * static_cast<double>(orbit), orbit};
  }
  static OrbitTerm from_coefficient(double c, std::uint64_t orbit) {
    return {c / static_cast<double>(orbit), c, orbit};
  }
  bool operator==(const OrbitTerm&) const = default;
};

class SymmetricTensor;

/// Degree-m form in n variables, sum_alpha coeff(alpha) x^alpha.
class HomogeneousPolynomial {
 public:
  HomogeneousPolynomial(int degree, int num_vars) : degree_(degree), num_vars_(num_vars) {
    if (degree < 0 || num_vars < 1) throw construction_error("polynomial needs degree >= 0 and at least one variable");
  }

  HomogeneousPolynomial(int degree, int num_vars, const std::map<Exponent, double>& coeffs)
      : HomogeneousPolynomial(degree, num_vars) {
    for (const auto& [alpha, c] : coeffs) {
      check_exponent(alpha);
      terms_[alpha] = OrbitTerm::from_coefficient(c, multinomial(alpha));
    }
  }

  int degree() const noexcept { return degree_; }
  int num_vars() const noexcept { return num_vars_; }

  double coefficient(const Exponent& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? 0.0 : it->second.coefficient;
  }

  std::map<Exponent, double> coefficients() const {
    std::map<Exponent, double> out;
    for (const auto& [alpha, t] : terms_) out.emplace(alpha, t.coefficient);
    return out;
  }

  const std::map<Exponent, OrbitTerm>& terms() const noexcept { return terms_; }

  double evaluate(std::span<const double> x) const {
    if (static_cast<int>(x.size()) != num_vars_) throw construction_error("point has wrong length");
    double s = 0.0;
    for (const auto& [alpha, t] : terms_) s += t.coefficient * monomial(x, alpha);
    return s;
  }

  bool operator==(const HomogeneousPolynomial& o) const {
    return degree_ == o.degree_ && num_vars_ == o.num_vars_ && coefficients() == o.coefficients();
  }

 private:
  friend HomogeneousPolynomial to_polynomial(const SymmetricTensor& t);

  void check_exponent(const Exponent& alpha) const {
    if (static_cast<int>(alpha.size()) != num_vars_) throw construction_error("exponent vector has wrong length");
    if (std::any_of(alpha.begin(), alpha.end(), [](int a) { return a < 0; }))
      throw construction_error("negative exponent");
    if (std::accumulate(alpha.begin(), alpha.end(), 0) != degree_)
      throw construction_error("exponent vector does not sum to the degree");
  }

  int degree_;
  int num_vars_;
  std::map<Exponent, OrbitTerm> terms_;
};

/// Real symmetric tensor of order m and dimension n, stored by canonical
/// (sorted) multi-index. Absent orbits are zero. Immutable once built.
class SymmetricTensor {
 public:
  SymmetricTensor(int order, int dimension) : order_(order), dim_(dimension) {
    if (order < 2) throw construction_error("tensor order must be at least 2");
    if (dimension < 1) throw construction_error("tensor dimension must be at least 1");
  }

  /// Builds a tensor from one value per orbit. Any permutation of an index
  /// names the same orbit; naming an orbit twice is an error.
  static SymmetricTensor from_unique_entries(int m, int n,
                                             const std::vector<std::pair<MultiIndex, double>>& entries) {
    SymmetricTensor t(m, n);
    for (const auto& [idx, v] : entries) {
      if (!idx.valid_for(m, n))
        throw construction_error("index " + idx.to_string() + " out of range for order " + std::to_string(m) +
                                 ", dimension " + std::to_string(n));
      MultiIndex key = idx.canonical();
      auto counts = key.counts(n);
      auto [it, inserted] = t.entries_.emplace(key, OrbitTerm::from_value(v, multinomial(counts)));
      if (!inserted) throw construction_error("duplicate canonical index " + key.to_string());
    }
    return t;
  }

  int order() const noexcept { return order_; }
  int dimension() const noexcept { return dim_; }

  /// Entry lookup; any permutation of a stored index returns the same value.
  double operator()(const MultiIndex& idx) const {
    if (!idx.valid_for(order_, dim_)) throw construction_error("index " + idx.to_string() + " out of range");
    auto it = entries_.find(idx.canonical());
    return it == entries_.end() ? 0.0 : it->second.value;
  }

  std::uint64_t orbit_size(const MultiIndex& idx) const { return multinomial(idx.counts(dim_)); }

  const std::map<MultiIndex, OrbitTerm>& entries() const noexcept { return entries_; }

  double max_abs_entry() const {
    double r = 0.0;
    for (const auto& [_, t] : entries_) r = std::max(r, std::abs(t.value));
    return r;
  }

  SymmetricTensor scaled(double c) const {
    SymmetricTensor out(order_, dim_);
    for (const auto& [k, t] : entries_) out.entries_.emplace(k, OrbitTerm{c * t.value, c * t.coefficient, t.orbit_size});
    return out;
  }

  bool operator==(const SymmetricTensor& o) const {
    if (order_ != o.order_ || dim_ != o.dim_ || entries_.size() != o.entries_.size()) return false;
    return std::equal(entries_.begin(), entries_.end(), o.entries_.begin(),
                      [](const auto& a, const auto& b) { return a.first == b.first && a.second.value == b.second.value; });
  }

 private:
  friend SymmetricTensor from_polynomial(const HomogeneousPolynomial& p);

  int order_;
  int dim_;
  std::map<MultiIndex, OrbitTerm> entries_;
};

inline SymmetricTensor from_polynomial(const HomogeneousPolynomial& p) {
  if (p.degree() < 2) throw construction_error("form degree must be at least 2");
  SymmetricTensor t(p.degree(), p.num_vars());
  for (const auto& [alpha, term] : p.terms()) t.entries_.emplace(MultiIndex::from_counts(alpha), term);
  return t;
}

inline HomogeneousPolynomial to_polynomial(const SymmetricTensor& t) {
  HomogeneousPolynomial p(t.order(), t.dimension());
  for (const auto& [idx, term] : t.entries()) p.terms_.emplace(idx.counts(t.dimension()), term);
  return p;
}

/// The vector A x^{m-1}: component i is sum over i_2..i_m of a_{i i_2 .. i_m} x_{i_2} ... x_{i_m}.
inline std::vector<double> apply(const SymmetricTensor& t, std::span<const double> x) {
  const int n = t.dimension();
  const int m = t.order();
  if (static_cast<int>(x.size()) != n) throw construction_error("vector length does not match tensor dimension");
  std::vector<double> out(static_cast<std::size_t>(n), 0.0);
  for (const auto& [idx, term] : t.entries()) {
    Exponent alpha = idx.counts(n);
    for (int i = 0; i < n; ++i) {
      if (alpha[static_cast<std::size_t>(i)] == 0) continue;
      // Raw tuples (i_2..i_m) in slice i that permute to this orbit.
      const std::uint64_t slice_count =
          term.orbit_size * static_cast<std::uint64_t>(alpha[static_cast<std::size_t>(i)]) / static_cast<std::uint64_t>(m);
      --alpha[static_cast<std::size_t>(i)];
      out[static_cast<std::size_t>(i)] += term.value * static_cast<double>(slice_count) * monomial(x, alpha);
      ++alpha[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

/// The form value A x^m.
inline double evaluate(const SymmetricTensor& t, std::span<const double> x) {
  if (static_cast<int>(x.size()) != t.dimension())
    throw construction_error("vector length does not match tensor dimension");
  double s = 0.0;
  for (const auto& [idx, term] : t.entries()) s += term.coefficient * monomial(x, idx.counts(t.dimension()));
  return s;
}

inline double trace(const SymmetricTensor& t) {
  double s = 0.0;
  for (int i = 1; i <= t.dimension(); ++i) s += t(MultiIndex(std::vector<int>(static_cast<std::size_t>(t.order()), i)));
  return s;
}

/// (m-1)^(n-1), the factor relating the trace to the sum of all eigenvalues.
inline double trace_factor(int m, int n) {
  double r = 1.0;
  for (int k = 1; k < n; ++k) r *= static_cast<double>(m - 1);
  return r;
}

/// Number of eigenvalues d = n (m-1)^(n-1).
inline long long eigenvalue_count(int m, int n) {
  long long r = n;
  for (int k = 1; k < n; ++k) r *= (m - 1);
  return r;
}

struct SpectralInvariants {
  long long d = 0;
  double trace = 0.0;
  double scaled_trace = 0.0;
  std::optional<double> determinant;
};

inline SpectralInvariants spectral_invariants(const SymmetricTensor& t, std::optional<double> det = std::nullopt) {
  SpectralInvariants inv;
  inv.d = eigenvalue_count(t.order(), t.dimension());
  inv.trace = trace(t);
  inv.scaled_trace = trace_factor(t.order(), t.dimension()) * inv.trace;
  inv.determinant = det;
  return inv;
}

inline SymmetricTensor identity_tensor(int m, int n) {
  std::vector<std::pair<MultiIndex, double>> e;
  for (int i = 1; i <= n; ++i) e.emplace_back(MultiIndex(std::vector<int>(static_cast<std::size_t>(m), i)), 1.0);
  return SymmetricTensor::from_unique_entries(m, n, e);
}

}  // namespace hspec
