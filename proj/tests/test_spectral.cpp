#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Eigenvalues>

#include "hspec/spectral.hpp"
#include "oracles.hpp"

using namespace hspec;

namespace {

SymmetricTensor section4() {
  return SymmetricTensor::from_unique_entries(4, 2, {{MultiIndex{1, 1, 1, 1}, 1.1}, {MultiIndex{2, 2, 2, 2}, 1.0}});
}

SymmetricTensor example51() {
  return SymmetricTensor::from_unique_entries(
      4, 2, {{MultiIndex{1, 1, 1, 1}, 12}, {MultiIndex{1, 1, 2, 2}, -2}, {MultiIndex{2, 2, 2, 2}, 10}});
}

SymmetricTensor example52() {
  return SymmetricTensor::from_unique_entries(6, 2,
                                              {{MultiIndex{1, 1, 1, 1, 1, 1}, 10},
                                               {MultiIndex{1, 1, 1, 1, 2, 2}, 5.2},
                                               {MultiIndex{1, 1, 2, 2, 2, 2}, -1.6},
                                               {MultiIndex{2, 2, 2, 2, 2, 2}, 8}});
}

/// Every root, real and complex, repeated by multiplicity.
std::vector<std::complex<double>> all_roots(const Spectrum& s) {
  std::vector<std::complex<double>> z;
  for (double r : s.expanded()) z.emplace_back(r, 0.0);
  z.insert(z.end(), s.complex_roots.begin(), s.complex_roots.end());
  return z;
}

void expect_roots(const Spectrum& s, const std::vector<std::pair<double, int>>& want, double tol) {
  ASSERT_EQ(s.real_roots.size(), want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    EXPECT_NEAR(s.real_roots[i].value, want[i].first, tol) << "root " << i;
    EXPECT_EQ(s.real_roots[i].multiplicity, want[i].second) << "root " << i;
  }
}

}  // namespace

TEST(BinaryForms, MatchRawTupleOracle) {
  std::mt19937_64 rng(21);
  for (int m = 2; m <= 7; ++m) {
    auto t = oracle::random_tensor(m, 2, rng);
    auto d = oracle::dense(t);
    auto f = binary_forms(t);
    auto o1 = oracle::binary_form(d, 1), o2 = oracle::binary_form(d, 2);
    for (int j = 0; j < m; ++j) {
      EXPECT_NEAR(f.f1[static_cast<std::size_t>(j)], static_cast<double>(o1[static_cast<std::size_t>(j)]), 1e-12);
      EXPECT_NEAR(f.f2[static_cast<std::size_t>(j)], static_cast<double>(o2[static_cast<std::size_t>(j)]), 1e-12);
    }
  }
  EXPECT_THROW(binary_forms(identity_tensor(3, 3)), unsupported_error);
}

TEST(Determinant, MatchesLaplaceResultant) {
  std::mt19937_64 rng(22);
  for (int m = 2; m <= 6; ++m)
    for (int rep = 0; rep < 3; ++rep) {
      auto t = oracle::random_tensor(m, 2, rng);
      auto d = oracle::dense(t);
      const double want =
          static_cast<double>(oracle::resultant(oracle::binary_form(d, 1), oracle::binary_form(d, 2)));
      EXPECT_NEAR(determinant(t), want, 1e-10 * std::max(1.0, std::abs(want))) << "m=" << m;
    }
}

TEST(Determinant, IdentityIsOne) {
  for (int m = 2; m <= 8; ++m) EXPECT_NEAR(determinant(identity_tensor(m, 2)), 1.0, 1e-13) << "m=" << m;
  EXPECT_NEAR(determinant(identity_tensor(2, 4)), 1.0, 1e-13);
  EXPECT_NEAR(determinant(identity_tensor(5, 1)), 1.0, 1e-15);
}

TEST(Determinant, WorkedExamples) {
  EXPECT_NEAR(determinant(section4()), 1.331, 1e-12);
  EXPECT_NEAR(determinant(example51()), 846720.0, 1e-6);
  EXPECT_NEAR(determinant(example52()), 2.14990848e13, 1e-2);
}

TEST(Determinant, Homogeneity) {
  // det(cA) = c^d det(A).
  std::mt19937_64 rng(23);
  for (int m : {3, 4, 5}) {
    auto t = oracle::random_tensor(m, 2, rng);
    const int d = static_cast<int>(eigenvalue_count(m, 2));
    const double c = -1.7;
    EXPECT_NEAR(determinant(t.scaled(c)), std::pow(c, d) * determinant(t),
                1e-10 * std::pow(std::abs(c), d) * std::max(1.0, std::abs(determinant(t))));
  }
}

TEST(Determinant, UnsupportedShape) {
  EXPECT_THROW(determinant(identity_tensor(4, 3)), unsupported_error);
  EXPECT_THROW(charpoly(identity_tensor(3, 3)), unsupported_error);
}

TEST(CharPoly, MatchesResultantOracle) {
  std::mt19937_64 rng(24);
  for (int m = 3; m <= 6; ++m) {
    auto t = oracle::random_tensor(m, 2, rng);
    auto d = oracle::dense(t);
    auto p = charpoly(t);
    EXPECT_EQ(p.degree(), eigenvalue_count(m, 2));
    EXPECT_LE(p.residual, 1e-9);
    for (long double lam : {-1.3L, -0.2L, 0.0L, 0.7L, 2.1L}) {
      const long double want = oracle::char_value(d, lam);
      EXPECT_NEAR(static_cast<double>(p(lam)), static_cast<double>(want), 1e-9 * std::max(1.0L, std::abs(want)))
          << "m=" << m << " lambda=" << static_cast<double>(lam);
    }
  }
}

TEST(CharPoly, VietaIdentities) {
  std::mt19937_64 rng(25);
  for (int m : {3, 4, 6}) {
    auto t = oracle::random_tensor(m, 2, rng);
    auto p = charpoly(t);
    const double S = spectral_invariants(t).scaled_trace;
    EXPECT_NEAR(p.root_sum(), S, 1e-9 * std::max(1.0, std::abs(S)));
    EXPECT_NEAR(p.root_product(), determinant(t), 1e-9 * std::max(1.0, std::abs(determinant(t))));
  }
}

TEST(CharPoly, PolynomialRootsOfWorkedExample) {
  expect_roots(real_spectrum(charpoly(section4())), {{1.1, 3}, {1.0, 3}}, 1e-10);
}

TEST(Spectrum, IdentityHasOneRootOfFullMultiplicity) {
  for (int m = 2; m <= 8; ++m) {
    const auto s = h_spectrum(identity_tensor(m, 2));
    expect_roots(s, {{1.0, static_cast<int>(eigenvalue_count(m, 2))}}, 1e-12);
    EXPECT_TRUE(s.real_roots[0].h_eigenvalue.value_or(false));
    const auto p = real_spectrum(charpoly(identity_tensor(m, 2)));
    expect_roots(p, {{1.0, static_cast<int>(eigenvalue_count(m, 2))}}, 1e-10);
  }
}

TEST(Spectrum, TraceAndDeterminantIdentities) {
  std::mt19937_64 rng(26);
  for (int m : {3, 4, 6})
    for (int rep = 0; rep < 5; ++rep) {
      auto t = oracle::random_tensor(m, 2, rng);
      const auto s = characteristic_spectrum(t);
      const auto z = all_roots(s);
      ASSERT_EQ(static_cast<long long>(z.size()), eigenvalue_count(m, 2));
      std::complex<double> sum = 0, prod = 1;
      for (auto w : z) {
        sum += w;
        prod *= w;
      }
      const double S = spectral_invariants(t).scaled_trace;
      const double det = determinant(t);
      EXPECT_NEAR(sum.real(), S, 1e-10 * std::max(1.0, std::abs(S)));
      EXPECT_NEAR(sum.imag(), 0.0, 1e-10);
      EXPECT_NEAR(prod.real(), det, 1e-9 * std::max(1.0, std::abs(det)));
      EXPECT_NEAR(prod.imag(), 0.0, 1e-9 * std::max(1.0, std::abs(det)));
    }
}

TEST(Spectrum, ScalingCovariance) {
  std::mt19937_64 rng(27);
  auto t = oracle::random_tensor(4, 2, rng);
  const auto a = characteristic_spectrum(t).expanded();
  const auto b = characteristic_spectrum(t.scaled(3.0)).expanded();
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(b[i], 3.0 * a[i], 1e-10 * std::max(1.0, std::abs(b[i])));
}

TEST(Spectrum, CloseMultipleRootsStayResolved) {
  // Double roots 0.19 apart and a complex double pair 0.0085 off the real
  // axis, all within 0.21 of each other. Reference roots from an exact
  // rational determinant and square-free factorisation.
  auto t = SymmetricTensor::from_unique_entries(
      6, 2, {{MultiIndex{1, 1, 1, 1, 1, 1}, 6.2}, {MultiIndex{1, 1, 1, 1, 2, 2}, 0.01},
             {MultiIndex{1, 1, 2, 2, 2, 2}, 0.01}, {MultiIndex{2, 2, 2, 2, 2, 2}, 6.19}});
  const auto s = characteristic_spectrum(t);
  expect_roots(s, {{6.345093715845, 2}, {6.2, 1}, {6.19, 1}, {6.156709683030, 2}}, 1e-10);
  ASSERT_EQ(s.complex_count, 4);
  for (auto z : s.complex_roots) {
    EXPECT_NEAR(z.real(), 6.139098300563, 1e-10);
    EXPECT_NEAR(std::abs(z.imag()), 8.493288821e-3, 1e-10);
  }
  std::complex<double> sum = 0, prod = 1;
  for (auto w : all_roots(s)) {
    sum += w;
    prod *= w;
  }
  EXPECT_NEAR(sum.real(), spectral_invariants(t).scaled_trace, 1e-10);
  EXPECT_NEAR(prod.real(), determinant(t), 1e-8 * determinant(t));
}

TEST(Spectrum, WorkedExampleRoots) {
  const auto s4 = h_spectrum(section4());
  expect_roots(s4, {{1.1, 3}, {1.0, 3}}, 1e-12);

  const auto s51 = h_spectrum(example51());
  expect_roots(s51, {{17.0827625302982, 2}, {12.0, 1}, {10.0, 1}, {4.91723746970178, 2}}, 1e-9);
  EXPECT_FALSE(*s51.real_roots[0].h_eigenvalue);
  EXPECT_TRUE(*s51.real_roots[1].h_eigenvalue);
  EXPECT_TRUE(*s51.real_roots[3].h_eigenvalue);
  EXPECT_EQ(s51.h_eigenvalues().size(), 3u);
  EXPECT_TRUE(s51.all_positive());

  const auto s52 = h_spectrum(example52());
  expect_roots(s52, {{41.4328560684933, 2}, {10.0, 1}, {8.0, 1}, {6.16756919290892, 2}}, 1e-9);
  EXPECT_EQ(s52.complex_count, 4);
  for (auto z : s52.complex_roots) {
    EXPECT_NEAR(z.real(), -5.80021, 1e-5);
    EXPECT_NEAR(std::abs(z.imag()), 44.6655, 1e-4);
  }
  EXPECT_FALSE(s52.all_real());
  EXPECT_FALSE(s52.all_positive());
}

TEST(Spectrum, HEigenvaluesMatchDirectionScan) {
  std::mt19937_64 rng(28);
  for (int m : {3, 4, 5, 6})
    for (int rep = 0; rep < 3; ++rep) {
      auto t = oracle::random_tensor(m, 2, rng);
      const auto got = h_spectrum(t).h_eigenvalues();
      const auto want = oracle::h_eigenvalues_scan(oracle::dense(t));
      ASSERT_EQ(got.size(), want.size()) << "m=" << m << " rep=" << rep;
      for (std::size_t i = 0; i < got.size(); ++i) EXPECT_NEAR(got[i], want[i], 1e-7 * std::max(1.0, std::abs(want[i])));
    }
}

TEST(Spectrum, ResidualsOfFlaggedRootsAreSmall) {
  std::mt19937_64 rng(29);
  for (int m : {4, 6}) {
    auto t = oracle::random_tensor(m, 2, rng);
    for (const auto& r : h_spectrum(t).real_roots) {
      if (!r.h_eigenvalue.value_or(false)) continue;
      EXPECT_LE(r.residual, h_residual_tol * std::max(1.0, t.max_abs_entry()));
      // A witness direction exists: residual_check is attained by a real vector.
      EXPECT_DOUBLE_EQ(residual_check(t, r.value), r.residual);
    }
  }
  // A value far from every eigenvalue has a large residual.
  EXPECT_GT(residual_check(example51(), 100.0), 1.0);
}

TEST(Spectrum, MatrixCaseMatchesSelfAdjointSolver) {
  std::mt19937_64 rng(30);
  for (int n = 2; n <= 5; ++n) {
    auto t = oracle::random_tensor(2, n, rng);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a(i, j) = t(MultiIndex{i + 1, j + 1});
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
    auto want = std::vector<double>(es.eigenvalues().data(), es.eigenvalues().data() + n);
    std::sort(want.rbegin(), want.rend());
    const auto s = h_spectrum(t);
    ASSERT_EQ(s.expanded().size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i) EXPECT_NEAR(s.expanded()[i], want[i], 1e-12);
    for (const auto& r : s.real_roots) {
      EXPECT_TRUE(*r.h_eigenvalue);
      EXPECT_LE(r.residual, 1e-12);
    }
    double det = 1;
    for (double w : want) det *= w;
    EXPECT_NEAR(determinant(t), det, 1e-12);
  }
}

TEST(Spectrum, DimensionOne) {
  auto t = SymmetricTensor::from_unique_entries(5, 1, {{MultiIndex{1, 1, 1, 1, 1}, -2.5}});
  const auto s = h_spectrum(t);
  expect_roots(s, {{-2.5, 1}}, 0.0);
  EXPECT_TRUE(*s.real_roots[0].h_eigenvalue);
  EXPECT_DOUBLE_EQ(determinant(t), -2.5);
}

TEST(Spectrum, SupportedShapes) {
  EXPECT_TRUE(exact_spectrum_supported(identity_tensor(6, 2)));
  EXPECT_TRUE(exact_spectrum_supported(identity_tensor(2, 7)));
  EXPECT_TRUE(exact_spectrum_supported(identity_tensor(3, 1)));
  EXPECT_FALSE(exact_spectrum_supported(identity_tensor(4, 3)));
  EXPECT_THROW(h_spectrum(identity_tensor(4, 3)), unsupported_error);
}
