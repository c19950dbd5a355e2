#include <gtest/gtest.h>

#include <algorithm>
#include <complex>
#include <vector>

#include "hspec/univariate.hpp"

using namespace hspec;
using R = long double;

namespace {

/// Coefficients (constant first) of prod (x - r_i).
std::vector<R> from_roots(const std::vector<R>& roots) {
  std::vector<R> c{1};
  for (R r : roots) {
    std::vector<R> next(c.size() + 1, 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = std::move(next);
  }
  return c;
}

std::vector<poly::RootCluster<R>> clusters_of(const std::vector<R>& c, R tol = R(1e-6)) {
  auto roots = poly::companion_roots<R>(c);
  auto cl = poly::cluster_roots<R>(c, roots, tol);
  std::sort(cl.begin(), cl.end(), [](const auto& a, const auto& b) { return a.center.real() > b.center.real(); });
  return cl;
}

}  // namespace

TEST(Univariate, EvalAndDerivative) {
  const std::vector<R> c{1, -3, 0, 2};  // 2x^3 - 3x + 1
  EXPECT_EQ(poly::eval<R>(c, R(2)), R(11));
  EXPECT_EQ(poly::derivative<R>(c), (std::vector<R>{-3, 0, 6}));
  EXPECT_EQ(poly::derivative<R>(c, 3), (std::vector<R>{12}));
  EXPECT_EQ(poly::derivative<R>(c, 5), (std::vector<R>{0}));
  EXPECT_EQ(poly::effective_degree<R>(std::vector<R>{1, 2, 0, 0}), 1);
  EXPECT_EQ(poly::effective_degree<R>(std::vector<R>{0, 0}), -1);
}

TEST(Univariate, InterpolationRecoversCubic) {
  const std::vector<R> c{1, -3, 0, 2};
  std::vector<R> x{-1, 0, 0.5L, 2}, y;
  for (R v : x) y.push_back(poly::eval<R>(c, v));
  auto back = poly::interpolate<R>(x, y);
  ASSERT_EQ(back.size(), 4u);
  for (std::size_t i = 0; i < 4; ++i) EXPECT_NEAR(static_cast<double>(back[i]), static_cast<double>(c[i]), 1e-14);
}

TEST(Univariate, CompanionRootsSimple) {
  auto roots = poly::companion_roots<R>(from_roots({1, 2, 3, 4, 5}));
  std::vector<double> re;
  for (auto z : roots) {
    EXPECT_NEAR(static_cast<double>(z.imag()), 0.0, 1e-12);
    re.push_back(static_cast<double>(z.real()));
  }
  std::sort(re.begin(), re.end());
  for (int i = 0; i < 5; ++i) EXPECT_NEAR(re[static_cast<std::size_t>(i)], i + 1.0, 1e-12);
}

TEST(Univariate, CompanionRootsZeroAndComplex) {
  // x^2 (x^2 + 1)
  auto roots = poly::companion_roots<R>(std::vector<R>{0, 0, 1, 0, 1});
  ASSERT_EQ(roots.size(), 4u);
  int zeros = 0, unit = 0;
  for (auto z : roots) {
    if (std::abs(z) == 0) ++zeros;
    if (std::abs(std::abs(z) - 1) < 1e-15 && std::abs(z.real()) < 1e-15) ++unit;
  }
  EXPECT_EQ(zeros, 2);
  EXPECT_EQ(unit, 2);
  EXPECT_THROW(poly::companion_roots<R>(std::vector<R>{0, 0}), error);
}

TEST(Univariate, CompanionRootsWidelyScaled) {
  // Roots 1e-3 and 1e3 in one polynomial.
  auto roots = poly::companion_roots<R>(from_roots({1e-3L, 1e3L}));
  std::vector<double> re;
  for (auto z : roots) re.push_back(static_cast<double>(z.real()));
  std::sort(re.begin(), re.end());
  EXPECT_NEAR(re[0], 1e-3, 1e-15);
  EXPECT_NEAR(re[1], 1e3, 1e-10);
}

TEST(Univariate, ClustersRecoverMultiplicities) {
  auto cl = clusters_of(from_roots({1.1L, 1.1L, 1.1L, 1, 1, 1}));
  ASSERT_EQ(cl.size(), 2u);
  EXPECT_EQ(cl[0].multiplicity, 3);
  EXPECT_EQ(cl[1].multiplicity, 3);
  EXPECT_NEAR(static_cast<double>(cl[0].center.real()), 1.1, 1e-12);
  EXPECT_NEAR(static_cast<double>(cl[1].center.real()), 1.0, 1e-12);
  EXPECT_EQ(cl[0].center.imag(), 0);
}

TEST(Univariate, HighMultiplicityRoot) {
  // (x - 1)^14
  std::vector<R> roots(14, 1);
  auto cl = clusters_of(from_roots(roots));
  ASSERT_EQ(cl.size(), 1u);
  EXPECT_EQ(cl[0].multiplicity, 14);
  EXPECT_NEAR(static_cast<double>(cl[0].center.real()), 1.0, 1e-12);
}

TEST(Univariate, DistinctRootsStaySeparate) {
  auto cl = clusters_of(from_roots({3, 2, 1, -1}));
  ASSERT_EQ(cl.size(), 4u);
  for (const auto& c : cl) EXPECT_EQ(c.multiplicity, 1);
}

TEST(Univariate, MergeRootsSingleLinkage) {
  using C = std::complex<R>;
  std::vector<C> z{C(1, 0), C(1 + 1e-9L, 0), C(2, 0), C(0.5L, 3), C(0.5L, -3), C(0.5L, 3)};
  auto m = poly::merge_roots<R>(z, R(1e-6));
  ASSERT_EQ(m.size(), 4u);
  int real_total = 0, complex_total = 0;
  for (const auto& c : m) (c.center.imag() == 0 ? real_total : complex_total) += c.multiplicity;
  EXPECT_EQ(real_total, 3);
  EXPECT_EQ(complex_total, 3);
  for (const auto& c : m)
    if (c.center.imag() > 0) EXPECT_EQ(c.multiplicity, 2);
}
