#pragma once

// Exact desk-scale spectra: characteristic polynomial of A - lambda I through
// the Sylvester resultant of the two binary forms (A x^{m-1})_1, (A x^{m-1})_2,
// real roots with multiplicities, and H-eigenvector residual certification.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hspec/error.hpp"
#include "hspec/gershgorin.hpp"
#include "hspec/tensor.hpp"
#include "hspec/univariate.hpp"

namespace hspec {

/// Extended precision used inside the oracle; multiple roots split like
/// eps^(1/k), so the extra bits are what make triple roots resolvable.
using oracle_real = long double;

template <class R>
using DenseMatrix = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;

/// f1 = (A x^{m-1})_1 and f2 = (A x^{m-1})_2 as binary forms of degree m-1.
/// f1[j] is the coefficient of x1^{m-1-j} x2^j; likewise f2.
struct BinaryFormPair {
  int degree = 0;
  std::vector<double> f1;
  std::vector<double> f2;
};

inline BinaryFormPair binary_forms(const SymmetricTensor& t) {
  if (t.dimension() != 2)
    throw unsupported_error("binary forms need dimension 2, got " + std::to_string(t.dimension()));
  const int m = t.order();
  BinaryFormPair f;
  f.degree = m - 1;
  f.f1.assign(static_cast<std::size_t>(m), 0.0);
  f.f2.assign(static_cast<std::size_t>(m), 0.0);
  for (const auto& [idx, term] : t.entries()) {
    const int twos = idx.counts(2)[1];
    const int ones = m - twos;
    // Tuples (1, i_2..i_m) hitting this orbit: C(m-1, twos) = orbit * ones / m.
    if (ones > 0)
      f.f1[static_cast<std::size_t>(twos)] +=
          term.value * static_cast<double>(term.orbit_size * static_cast<std::uint64_t>(ones) / static_cast<std::uint64_t>(m));
    if (twos > 0)
      f.f2[static_cast<std::size_t>(twos - 1)] +=
          term.value * static_cast<double>(term.orbit_size * static_cast<std::uint64_t>(twos) / static_cast<std::uint64_t>(m));
  }
  return f;
}

/// Sylvester matrix of (f1 - lambda x1^{m-1}, f2 - lambda x2^{m-1}): m-1 shifted
/// rows of f1 on top, m-1 shifted rows of f2 below. lambda lands on the diagonal.
template <class R = double>
DenseMatrix<R> sylvester_matrix(const BinaryFormPair& f, R lambda) {
  const int p = f.degree;
  const int size = 2 * p;
  DenseMatrix<R> s = DenseMatrix<R>::Zero(size, size);
  for (int r = 0; r < p; ++r) {
    for (int j = 0; j <= p; ++j) {
      s(r, r + j) = static_cast<R>(f.f1[static_cast<std::size_t>(j)]);
      s(p + r, r + j) = static_cast<R>(f.f2[static_cast<std::size_t>(j)]);
    }
    s(r, r) -= lambda;
    s(p + r, r + p) -= lambda;
  }
  return s;
}

/// Determinant by Gaussian elimination with partial pivoting on rows
/// pre-scaled to unit max-norm.
template <class R>
R scaled_determinant(DenseMatrix<R> a) {
  const Eigen::Index n = a.rows();
  R det = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    R s = a.row(i).cwiseAbs().maxCoeff();
    if (s == R(0)) return R(0);
    a.row(i) /= s;
    det *= s;
  }
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index piv = k;
    for (Eigen::Index i = k + 1; i < n; ++i)
      if (std::abs(a(i, k)) > std::abs(a(piv, k))) piv = i;
    if (a(piv, k) == R(0)) return R(0);
    if (piv != k) {
      a.row(piv).swap(a.row(k));
      det = -det;
    }
    det *= a(k, k);
    for (Eigen::Index i = k + 1; i < n; ++i) {
      R f = a(i, k) / a(k, k);
      a.row(i).tail(n - k - 1) -= f * a.row(k).tail(n - k - 1);
    }
  }
  return det;
}

/// Matrix M with det(M - lambda I) = phi(lambda) for the supported shapes:
/// dimension 1, dimension 2 (Sylvester), and order 2 (the matrix itself).
template <class R>
DenseMatrix<R> characteristic_base(const SymmetricTensor& t) {
  const int n = t.dimension();
  const int m = t.order();
  if (n == 1) {
    DenseMatrix<R> a(1, 1);
    a(0, 0) = static_cast<R>(t(MultiIndex(std::vector<int>(static_cast<std::size_t>(m), 1))));
    return a;
  }
  if (n == 2) return sylvester_matrix<R>(binary_forms(t), R(0));
  if (m == 2) {
    DenseMatrix<R> a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = static_cast<R>(t(MultiIndex{i + 1, j + 1}));
    return a;
  }
  throw unsupported_error("exact spectra are available only for dimension 2 or order 2 (got order " +
                          std::to_string(m) + ", dimension " + std::to_string(n) + ")");
}

/// det(A) as the resultant of A x^{m-1} = 0.
inline double determinant(const SymmetricTensor& t) {
  return static_cast<double>(scaled_determinant(characteristic_base<oracle_real>(t)));
}

/// phi(lambda) = det(A - lambda I), constant term first.
struct CharPoly {
  std::vector<oracle_real> coeffs;
  /// Largest interpolation misfit at the check nodes, relative to the sampled scale.
  double residual = 0.0;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  oracle_real operator()(oracle_real lambda) const { return poly::eval<oracle_real>(coeffs, lambda); }
  /// Sum of all roots, -c_{d-1} / c_d.
  double root_sum() const {
    const auto d = coeffs.size() - 1;
    return static_cast<double>(-coeffs[d - 1] / coeffs[d]);
  }
  /// Product of all roots, (-1)^d c_0 / c_d.
  double root_product() const {
    const auto d = coeffs.size() - 1;
    oracle_real p = coeffs[0] / coeffs[d];
    return static_cast<double>(d % 2 ? -p : p);
  }
};

struct CharPolyOptions {
  double max_residual = 1e-9;
};

/// Evaluation-interpolation: det(M - lambda I) at d+1 Chebyshev nodes on
/// [-rho, rho] (rho = Gershgorin spectral radius bound), monomial solve in the
/// scaled variable, then a misfit check at the interleaved Chebyshev extrema.
inline CharPoly charpoly(const SymmetricTensor& t, const CharPolyOptions& opt = {}) {
  using R = oracle_real;
  const DenseMatrix<R> base = characteristic_base<R>(t);
  const int d = static_cast<int>(base.rows());
  const Interval g = gershgorin_interval(t);
  R rho = std::max(std::abs(static_cast<R>(g.lower)), std::abs(static_cast<R>(g.upper)));
  if (!(rho > 0)) rho = 1;

  auto phi_at = [&](R lambda) {
    DenseMatrix<R> a = base;
    a.diagonal().array() -= lambda;
    return scaled_determinant(a);
  };

  const R pi = std::numbers::pi_v<R>;
  std::vector<R> u(static_cast<std::size_t>(d + 1)), y(static_cast<std::size_t>(d + 1));
  R ymax = 0;
  for (int j = 0; j <= d; ++j) {
    u[static_cast<std::size_t>(j)] = std::cos(pi * (static_cast<R>(j) + R(0.5)) / static_cast<R>(d + 1));
    y[static_cast<std::size_t>(j)] = phi_at(rho * u[static_cast<std::size_t>(j)]);
    ymax = std::max(ymax, std::abs(y[static_cast<std::size_t>(j)]));
  }
  const std::vector<R> b = poly::interpolate<R>(u, y);

  CharPoly cp;
  cp.coeffs.resize(static_cast<std::size_t>(d + 1));
  R rho_pow = 1;
  for (int j = 0; j <= d; ++j) {
    cp.coeffs[static_cast<std::size_t>(j)] = b[static_cast<std::size_t>(j)] / rho_pow;
    rho_pow *= rho;
  }

  R worst = 0;
  for (int j = 0; j <= d + 1; ++j) {
    const R uj = std::cos(pi * static_cast<R>(j) / static_cast<R>(d + 1));
    const R direct = phi_at(rho * uj);
    ymax = std::max(ymax, std::abs(direct));
    worst = std::max(worst, std::abs(poly::eval<R>(b, uj) - direct));
  }
  cp.residual = ymax > 0 ? static_cast<double>(worst / ymax) : 0.0;
  if (!(cp.residual <= opt.max_residual))
    throw conditioning_error("characteristic polynomial interpolation misfit " + std::to_string(cp.residual) +
                             " exceeds " + std::to_string(opt.max_residual) + " (degree " + std::to_string(d) +
                             ", sample radius " + std::to_string(static_cast<double>(rho)) + ")");
  return cp;
}

struct RealEigenvalue {
  double value = 0.0;
  int multiplicity = 1;
  /// Whether a real eigenvector exists; unset when only the polynomial was known.
  std::optional<bool> h_eigenvalue;
  double residual = std::numeric_limits<double>::quiet_NaN();
};

struct Spectrum {
  long long d = 0;
  /// Distinct real roots, largest first.
  std::vector<RealEigenvalue> real_roots;
  int complex_count = 0;
  /// Non-real roots, repeated by multiplicity.
  std::vector<std::complex<double>> complex_roots;

  bool all_real() const { return complex_count == 0; }
  bool all_positive() const {
    return all_real() && std::all_of(real_roots.begin(), real_roots.end(), [](const auto& r) { return r.value > 0; });
  }
  /// Every real root repeated by multiplicity, largest first.
  std::vector<double> expanded() const {
    std::vector<double> out;
    for (const auto& r : real_roots) out.insert(out.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    return out;
  }
  /// Distinct real roots with a real eigenvector, largest first.
  std::vector<double> h_eigenvalues() const {
    std::vector<double> out;
    for (const auto& r : real_roots)
      if (r.h_eigenvalue.value_or(false)) out.push_back(r.value);
    return out;
  }
};

namespace detail {

inline Spectrum spectrum_from_clusters(long long d, const std::vector<poly::RootCluster<oracle_real>>& clusters) {
  Spectrum s;
  s.d = d;
  for (const auto& cl : clusters) {
    if (cl.center.imag() == 0) {
      s.real_roots.push_back({static_cast<double>(cl.center.real()), cl.multiplicity, std::nullopt});
    } else {
      s.complex_count += cl.multiplicity;
      for (int k = 0; k < cl.multiplicity; ++k)
        s.complex_roots.emplace_back(static_cast<double>(cl.center.real()), static_cast<double>(cl.center.imag()));
    }
  }
  std::sort(s.real_roots.begin(), s.real_roots.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
  std::stable_sort(s.complex_roots.begin(), s.complex_roots.end(), [](const auto& a, const auto& b) {
    return a.real() != b.real() ? a.real() > b.real() : a.imag() > b.imag();
  });
  return s;
}

inline oracle_real default_cluster_tol(const std::vector<std::complex<oracle_real>>& roots) {
  oracle_real largest = 0;
  for (const auto& z : roots) largest = std::max(largest, std::abs(z));
  return oracle_real(1e-6) * std::max(oracle_real(1), largest);
}

}  // namespace detail

/// Roots of a characteristic polynomial. Companion-matrix roots; numerically
/// split multiple roots are regrouped (see poly::cluster_roots), then roots
/// within cluster_tol (default 1e-6 * max(1, largest root magnitude)) merge.
inline Spectrum real_spectrum(const CharPoly& p, std::optional<double> cluster_tol = std::nullopt) {
  using R = oracle_real;
  R cmax = 0;
  for (R c : p.coeffs) cmax = std::max(cmax, std::abs(c));
  if (!(cmax > static_cast<R>(std::numeric_limits<double>::min())))
    throw error("degenerate characteristic polynomial: all coefficients vanish");
  if (p.coeffs.back() == R(0)) throw error("characteristic polynomial has a zero leading coefficient");

  const auto roots = poly::companion_roots<R>(p.coeffs);
  const R tol = cluster_tol ? static_cast<R>(*cluster_tol) : detail::default_cluster_tol(roots);
  return detail::spectrum_from_clusters(p.degree(), poly::cluster_roots<R>(p.coeffs, roots, tol));
}

/// Roots of phi(lambda) = det(M - lambda I) taken directly as eigenvalues of
/// the characteristic matrix M (balanced Hessenberg QR in extended
/// precision), then merged within cluster_tol. Working on M avoids the
/// conditioning loss of the monomial coefficients, so close multiple roots
/// stay resolved.
inline Spectrum characteristic_spectrum(const SymmetricTensor& t, std::optional<double> cluster_tol = std::nullopt) {
  using R = oracle_real;
  DenseMatrix<R> m = characteristic_base<R>(t);
  poly::balance(m);
  Eigen::EigenSolver<DenseMatrix<R>> es(m, false);
  if (es.info() != Eigen::Success) throw conditioning_error("characteristic matrix eigenvalue iteration did not converge");
  std::vector<std::complex<R>> roots(es.eigenvalues().data(), es.eigenvalues().data() + es.eigenvalues().size());
  const R tol = cluster_tol ? static_cast<R>(*cluster_tol) : detail::default_cluster_tol(roots);
  return detail::spectrum_from_clusters(static_cast<long long>(roots.size()), poly::merge_roots<R>(roots, tol));
}

namespace detail {

struct JacobiResult {
  std::vector<double> values;
  DenseMatrix<double> vectors;
};

/// Cyclic Jacobi rotations on a dense symmetric matrix.
inline JacobiResult cyclic_jacobi(DenseMatrix<double> a, int max_sweeps = 100) {
  const Eigen::Index n = a.rows();
  DenseMatrix<double> v = DenseMatrix<double>::Identity(n, n);
  const double norm = a.norm();
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) off += a(p, q) * a(p, q);
    if (std::sqrt(off) <= 1e-15 * norm || off == 0.0) break;
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double tan = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(tan * tan + 1.0);
        const double s = tan * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p), vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }
  JacobiResult r;
  r.values.resize(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) r.values[static_cast<std::size_t>(i)] = a(i, i);
  r.vectors = std::move(v);
  return r;
}

}  // namespace detail

/// Order-2 tensors: eigenvalues of the symmetric matrix. Every eigenvalue has
/// a real eigenvector, so all are H-eigenvalues.
inline Spectrum matrix_spectrum(const SymmetricTensor& t) {
  if (t.order() != 2) throw unsupported_error("matrix_spectrum needs an order-2 tensor");
  const DenseMatrix<double> a = characteristic_base<double>(t);
  const auto jr = detail::cyclic_jacobi(a);
  const Eigen::Index n = a.rows();

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = i;
  std::sort(order.begin(), order.end(),
            [&](auto x, auto y) { return jr.values[static_cast<std::size_t>(x)] > jr.values[static_cast<std::size_t>(y)]; });

  double largest = 0.0;
  for (double v : jr.values) largest = std::max(largest, std::abs(v));
  const double tol = 1e-6 * std::max(1.0, largest);

  Spectrum s;
  s.d = n;
  for (Eigen::Index i : order) {
    const double lam = jr.values[static_cast<std::size_t>(i)];
    const Eigen::VectorXd v = jr.vectors.col(i);
    const double res = (a * v - lam * v).norm() / v.norm();
    if (!s.real_roots.empty() && std::abs(s.real_roots.back().value - lam) <= tol) {
      auto& last = s.real_roots.back();
      last.value = (last.value * last.multiplicity + lam) / (last.multiplicity + 1);
      ++last.multiplicity;
      last.residual = std::max(last.residual, res);
    } else {
      s.real_roots.push_back({lam, 1, true, res});
    }
  }
  return s;
}

namespace detail {

inline std::vector<double> real_roots_of(std::vector<oracle_real> c) {
  using R = oracle_real;
  R cmax = 0;
  for (R x : c) cmax = std::max(cmax, std::abs(x));
  if (!(cmax > 0)) return {};
  for (R& x : c)
    if (std::abs(x) <= R(1e-14) * cmax) x = 0;
  if (poly::effective_degree<R>(c) <= 0) return {};
  std::vector<double> out;
  for (const auto& z : poly::companion_roots<R>(c))
    if (std::abs(z.imag()) <= R(1e-5) * (1 + std::abs(z))) out.push_back(static_cast<double>(z.real()));
  return out;
}

}  // namespace detail

/// Smallest ||A x^{m-1} - lambda x^{[m-1]}|| / ||x^{[m-1]}|| over real candidate
/// eigenvectors of a dimension-2 tensor: x = (1, t) for real roots t of
/// f2(1,t) - lambda t^{m-1} or f1(1,t) - lambda, and the axis x = (0, 1).
/// Returns +infinity when no candidate exists.
inline double residual_check(const SymmetricTensor& t, double lambda) {
  using R = oracle_real;
  const int m = t.order();
  if (t.dimension() == 1) {
    return std::abs(t(MultiIndex(std::vector<int>(static_cast<std::size_t>(m), 1))) - lambda);
  }
  const BinaryFormPair f = binary_forms(t);

  auto residual_at = [&](R x1, R x2) {
    R f1 = 0, f2 = 0, p1 = 1, p2 = 1;
    for (int j = 0; j < m - 1; ++j) p1 *= x1;
    for (int j = 0; j < m - 1; ++j) p2 *= x2;
    for (int j = 0; j < m; ++j) {
      R mono = 1;
      for (int a = 0; a < m - 1 - j; ++a) mono *= x1;
      for (int b = 0; b < j; ++b) mono *= x2;
      f1 += static_cast<R>(f.f1[static_cast<std::size_t>(j)]) * mono;
      f2 += static_cast<R>(f.f2[static_cast<std::size_t>(j)]) * mono;
    }
    const R r1 = f1 - static_cast<R>(lambda) * p1;
    const R r2 = f2 - static_cast<R>(lambda) * p2;
    return static_cast<double>(std::sqrt(r1 * r1 + r2 * r2) / std::sqrt(p1 * p1 + p2 * p2));
  };

  double best = residual_at(0, 1);
  std::vector<R> g(f.f2.begin(), f.f2.end());
  g[static_cast<std::size_t>(m - 1)] -= static_cast<R>(lambda);
  std::vector<R> h(f.f1.begin(), f.f1.end());
  h[0] -= static_cast<R>(lambda);
  for (const auto& poly_coeffs : {g, h})
    for (double tt : detail::real_roots_of(poly_coeffs)) best = std::min(best, residual_at(1, static_cast<R>(tt)));
  return std::isfinite(best) ? best : std::numeric_limits<double>::infinity();
}

/// Relative residual threshold for flagging a real root as an H-eigenvalue.
inline constexpr double h_residual_tol = 1e-6;

/// Full spectrum with H-eigenvalue flags: matrix path for order 2,
/// characteristic-matrix path for dimension 1 or 2.
inline Spectrum h_spectrum(const SymmetricTensor& t) {
  if (t.order() == 2) return matrix_spectrum(t);
  Spectrum s = characteristic_spectrum(t);
  const double scale = std::max(1.0, t.max_abs_entry());
  for (auto& r : s.real_roots) {
    r.residual = residual_check(t, r.value);
    r.h_eigenvalue = r.residual <= h_residual_tol * scale;
  }
  return s;
}

inline bool exact_spectrum_supported(const SymmetricTensor& t) {
  return t.dimension() <= 2 || t.order() == 2;
}

}  // namespace hspec
