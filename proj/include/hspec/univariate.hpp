#pragma once

// Dense univariate polynomial helpers used by the spectral oracle.
// Coefficient vectors are stored constant term first.

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "hspec/error.hpp"

namespace hspec::poly {

template <class R>
R eval(std::span<const R> c, R x) {
  R acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  return acc;
}

template <class R>
std::complex<R> eval(std::span<const R> c, std::complex<R> z) {
  std::complex<R> acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * z + *it;
  return acc;
}

template <class R>
std::vector<R> derivative(std::span<const R> c, int order = 1) {
  std::vector<R> d(c.begin(), c.end());
  for (int k = 0; k < order; ++k) {
    if (d.size() <= 1) return {R(0)};
    std::vector<R> next(d.size() - 1);
    for (std::size_t i = 1; i < d.size(); ++i) next[i - 1] = d[i] * static_cast<R>(i);
    d = std::move(next);
  }
  return d;
}

/// Index of the highest coefficient that is not exactly zero, or -1.
template <class R>
int effective_degree(std::span<const R> c) {
  for (int i = static_cast<int>(c.size()) - 1; i >= 0; --i)
    if (c[static_cast<std::size_t>(i)] != R(0)) return i;
  return -1;
}

/// Parlett-Reinsch balancing: diagonal similarity by powers of two until
/// every row and column have comparable norms.
template <class M>
void balance(M& a) {
  using R = typename M::Scalar;
  const auto n = a.rows();
  bool done = false;
  while (!done) {
    done = true;
    for (Eigen::Index i = 0; i < n; ++i) {
      R col = 0, row = 0;
      for (Eigen::Index j = 0; j < n; ++j) {
        if (j == i) continue;
        col += std::abs(a(j, i));
        row += std::abs(a(i, j));
      }
      if (col == R(0) || row == R(0)) continue;
      R f = 1;
      const R s = col + row;
      while (col < row / 2) {
        col *= 2;
        row /= 2;
        f *= 2;
      }
      while (col >= row * 2) {
        col /= 2;
        row *= 2;
        f /= 2;
      }
      if ((col + row) < R(0.95) * s) {
        done = false;
        a.row(i) /= f;
        a.col(i) *= f;
      }
    }
  }
}

/// All complex roots, as eigenvalues of the companion matrix of the monic
/// polynomial, rescaled and balanced.
template <class R>
std::vector<std::complex<R>> companion_roots(std::span<const R> c) {
  const int deg = effective_degree(c);
  if (deg < 0) throw error("cannot find the roots of the zero polynomial");
  std::vector<std::complex<R>> roots;

  int low = 0;
  while (c[static_cast<std::size_t>(low)] == R(0)) {
    roots.emplace_back(R(0), R(0));
    ++low;
  }
  const int n = deg - low;
  if (n == 0) return roots;

  // Rescale the variable by the geometric mean root magnitude so the
  // constant term of the monic polynomial becomes 1.
  const R lead = c[static_cast<std::size_t>(deg)];
  R sigma = std::pow(std::abs(c[static_cast<std::size_t>(low)] / lead), R(1) / static_cast<R>(n));
  if (!(sigma > 0) || !std::isfinite(static_cast<double>(sigma))) sigma = 1;

  using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
  Mat comp = Mat::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1;
  for (int i = 0; i < n; ++i) {
    // q_i = c_{low+i} sigma^{i-n} / lead
    R q = c[static_cast<std::size_t>(low + i)] / lead * std::pow(sigma, static_cast<R>(i - n));
    comp(i, n - 1) = -q;
  }
  balance(comp);
  Eigen::EigenSolver<Mat> es(comp, false);
  if (es.info() != Eigen::Success) throw conditioning_error("companion eigenvalue iteration did not converge");
  for (int i = 0; i < n; ++i) roots.push_back(es.eigenvalues()(i) * sigma);
  return roots;
}

template <class R>
struct RootCluster {
  std::complex<R> center;
  int multiplicity = 0;
};

/// Taylor coefficient t_j = p^{(j)}(c) / j! and its rounding scale
/// sum_i |a_i| C(i, j) |c|^{i-j}.
template <class R>
std::pair<R, R> taylor_term(std::span<const R> a, std::complex<R> c, int j) {
  std::complex<R> t = 0;
  R scale = 0;
  const R ac = std::abs(c);
  for (std::size_t i = static_cast<std::size_t>(j); i < a.size(); ++i) {
    R binom = 1;
    for (int q = 1; q <= j; ++q) binom = binom * static_cast<R>(static_cast<int>(i) - j + q) / static_cast<R>(q);
    const auto e = static_cast<int>(i) - j;
    t += a[i] * binom * std::pow(c, e);
    scale += std::abs(a[i]) * binom * std::pow(ac, static_cast<R>(e));
  }
  return {std::abs(t), scale};
}

/// Groups numerically split multiple roots.
///
/// A k-fold root perturbed by rounding scatters into k roots around the true
/// root; their centroid stays accurate. A group of k roots with centroid c is
/// accepted as one k-fold root when p(c), p'(c), ..., p^{(k-1)}(c)/(k-1)! all
/// vanish to within `taylor_tol` of their rounding scale. Largest groups are
/// taken first. Real centres are polished by Newton on the (k-1)th
/// derivative, where the root is simple. A final pass merges real centres
/// closer than min_radius.
template <class R>
std::vector<RootCluster<R>> cluster_roots(std::span<const R> c, std::span<const std::complex<R>> roots,
                                          R min_radius, R real_tol = R(1e-8), R taylor_tol = R(1e-10)) {
  std::vector<std::complex<R>> pool(roots.begin(), roots.end());
  if (pool.empty()) return {};
  R scale = 0;
  for (const auto& z : pool) scale = std::max(scale, std::abs(z));
  if (!(scale > 0)) scale = 1;
  // Search radius only; the Taylor test decides. Rounding can scatter a
  // 14-fold root over a third of its magnitude.
  const R max_spread = scale;

  auto is_multiple_root = [&](std::complex<R> centre, int k) {
    for (int j = 0; j < k; ++j) {
      auto [t, s] = taylor_term<R>(c, centre, j);
      if (t > taylor_tol * s) return false;
    }
    return true;
  };

  std::vector<RootCluster<R>> out;
  while (!pool.empty()) {
    std::vector<std::size_t> best_members{0};
    std::complex<R> best_centre = pool[0];
    R best_spread = 0;

    for (std::size_t seed = 0; seed < pool.size(); ++seed) {
      std::vector<std::size_t> near;
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (std::abs(pool[i] - pool[seed]) <= max_spread) near.push_back(i);
      if (near.size() < std::max<std::size_t>(2, best_members.size())) continue;
      std::sort(near.begin(), near.end(),
                [&](auto a, auto b) { return std::abs(pool[a] - pool[seed]) < std::abs(pool[b] - pool[seed]); });
      for (std::size_t k = near.size(); k >= std::max<std::size_t>(2, best_members.size()); --k) {
        std::complex<R> centre = 0;
        for (std::size_t q = 0; q < k; ++q) centre += pool[near[q]];
        centre /= static_cast<R>(k);
        R spread = 0;
        for (std::size_t q = 0; q < k; ++q) spread = std::max(spread, std::abs(pool[near[q]] - centre));
        const bool better = k > best_members.size() || spread < best_spread;
        if (better && is_multiple_root(centre, static_cast<int>(k))) {
          best_members.assign(near.begin(), near.begin() + static_cast<std::ptrdiff_t>(k));
          best_centre = centre;
          best_spread = spread;
          break;
        }
      }
    }

    const int k = static_cast<int>(best_members.size());
    std::complex<R> z = best_centre;
    if (std::abs(z.imag()) <= real_tol * (1 + std::abs(z))) {
      R x = z.real();
      const auto dk1 = derivative(c, k - 1);
      const auto dk = derivative(c, k);
      R cur = x;
      for (int it = 0; it < 60; ++it) {
        const R den = eval<R>(dk, cur);
        if (den == R(0)) break;
        const R step = eval<R>(dk1, cur) / den;
        cur -= step;
        if (std::abs(step) <= 4 * std::numeric_limits<R>::epsilon() * (1 + std::abs(cur))) break;
      }
      if (std::isfinite(static_cast<double>(cur)) && std::abs(cur - x) <= std::max(best_spread, min_radius)) x = cur;
      z = {x, R(0)};
    }
    out.push_back({z, k});
    std::sort(best_members.rbegin(), best_members.rend());
    for (std::size_t i : best_members) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(i));
  }

  // Final user-tolerance merge of real centres.
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const bool ar = a.center.imag() == 0, br = b.center.imag() == 0;
    if (ar != br) return ar;
    if (a.center.real() != b.center.real()) return a.center.real() > b.center.real();
    return a.center.imag() > b.center.imag();
  });
  std::vector<RootCluster<R>> merged;
  for (const auto& cl : out) {
    if (!merged.empty() && cl.center.imag() == 0 && merged.back().center.imag() == 0 &&
        std::abs(merged.back().center.real() - cl.center.real()) <= min_radius) {
      auto& last = merged.back();
      const int k = last.multiplicity + cl.multiplicity;
      last.center = (last.center * static_cast<R>(last.multiplicity) + cl.center * static_cast<R>(cl.multiplicity)) /
                    static_cast<R>(k);
      last.multiplicity = k;
    } else {
      merged.push_back(cl);
    }
  }
  return merged;
}

/// Groups roots lying within tol of each other (single linkage); each group
/// becomes its mean. Means with |Im| <= real_tol (1 + |z|) are made real.
template <class R>
std::vector<RootCluster<R>> merge_roots(std::span<const std::complex<R>> roots, R tol, R real_tol = R(1e-8)) {
  const std::size_t n = roots.size();
  std::vector<std::size_t> parent(n);
  for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(roots[i] - roots[j]) <= tol) parent[find(i)] = find(j);

  std::vector<RootCluster<R>> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({0, 0});
    }
    out[slot[r]].center += roots[i];
    ++out[slot[r]].multiplicity;
  }
  for (auto& c : out) {
    c.center /= static_cast<R>(c.multiplicity);
    if (std::abs(c.center.imag()) <= real_tol * (1 + std::abs(c.center))) c.center = {c.center.real(), R(0)};
  }
  return out;
}

/// Coefficients of the degree-(nodes.size()-1) interpolant through (nodes, values).
template <class R>
std::vector<R> interpolate(std::span<const R> nodes, std::span<const R> values) {
  using Mat = Eigen::Matrix<R, Eigen::Dynamic, Eigen::Dynamic>;
  using Vec = Eigen::Matrix<R, Eigen::Dynamic, 1>;
  const auto n = static_cast<Eigen::Index>(nodes.size());
  Mat v(n, n);
  Vec y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    R p = 1;
    for (Eigen::Index j = 0; j < n; ++j) {
      v(i, j) = p;
      p *= nodes[static_cast<std::size_t>(i)];
    }
    y(i) = values[static_cast<std::size_t>(i)];
  }
  Vec sol = v.colPivHouseholderQr().solve(y);
  return std::vector<R>(sol.data(), sol.data() + n);
}

}  // namespace hspec::poly
