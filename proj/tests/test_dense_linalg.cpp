#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "nee/dense_linalg.hpp"
#include "nee/fractal.hpp"
#include "nee/spectra.hpp"
#include "test_support.hpp"

namespace nee {
namespace {

SymmetricMatrix diagonal(const std::vector<double>& d) {
  SymmetricMatrix m(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.set(i, i, d[i]);
  return m;
}

TEST(Jacobi, IdentityAndDiagonal) {
  EXPECT_EQ(sym_eigenvalues(diagonal({1, 1, 1})), (std::vector<double>{1, 1, 1}));
  EXPECT_EQ(sym_eigenvalues(diagonal({0, 2, 1})), (std::vector<double>{2, 1, 0}));
  EXPECT_TRUE(sym_eigenvalues(SymmetricMatrix(0)).empty());
}

TEST(Jacobi, NormalizedLaplacianOfTriangle) {
  const auto ev = sym_eigenvalues(normalized_laplacian_matrix(complete(3)));
  ASSERT_EQ(ev.size(), 3u);
  EXPECT_NEAR(ev[0], 1.5, 1e-14);
  EXPECT_NEAR(ev[1], 1.5, 1e-14);
  EXPECT_NEAR(ev[2], 0.0, 1e-14);
}

TEST(Jacobi, RecoversPlantedSpectrum) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    std::vector<double> values;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    const std::size_t n = 5 + 7 * seed;
    for (std::size_t i = 0; i < n; ++i) values.push_back(dist(rng));
    // Planted repeated eigenvalues.
    values[1] = values[0];
    values[2] = values[0];
    const auto m = testing::with_spectrum(values, seed);
    auto expected = values;
    std::sort(expected.begin(), expected.end(), std::greater<>());
    const auto got = sym_eigenvalues(m);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(got[i], expected[i], 1e-11) << "seed " << seed;
  }
}

TEST(Jacobi, TraceProperty) {
  for (std::size_t n : {1u, 2u, 3u, 17u, 64u, 200u}) {
    const auto m = testing::random_symmetric(n, 1000 + n);
    const auto ev = sym_eigenvalues(m);
    double sum = 0.0;
    for (double v : ev) sum += v;
    EXPECT_NEAR(sum, m.trace(), static_cast<double>(n) * 1e-10 * m.frobenius_norm()) << n;
  }
}

TEST(Jacobi, ShiftProperty) {
  for (std::size_t n : {4u, 25u, 80u}) {
    const auto m = testing::random_symmetric(n, 7 * n);
    const auto base = sym_eigenvalues(m);
    for (double alpha : {-1.0, 0.5, 2.0}) {
      const auto shifted = sym_eigenvalues(m.shifted(alpha));
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(shifted[i], base[i] + alpha, 1e-9);
    }
  }
}

TEST(Jacobi, NonConvergenceIsReported) {
  const auto m = testing::random_symmetric(30, 3);
  EXPECT_THROW(sym_eigenvalues(m, {1e-12, 1}), ConvergenceError);
  EXPECT_THROW(sym_eigenvalues(m, {0.0, 10}), std::invalid_argument);
}

TEST(Rank, Basics) {
  EXPECT_EQ(numerical_rank(SymmetricMatrix(5)), 0u);
  EXPECT_EQ(numerical_rank(diagonal(std::vector<double>(7, 1.0))), 7u);
  EXPECT_EQ(numerical_rank(diagonal({3, 0, 1e-12, 2})), 2u);
}

TEST(Rank, StarFractalShiftedLaplacian) {
  const auto l = normalized_laplacian_matrix(build_fractal(1, 1).graph);
  EXPECT_EQ(numerical_rank(l.shifted(-1.0)), 2u);
}

TEST(Rank, MatchesEigenvalueCountOnTestGraphs) {
  // rank(M) = N - #{|lambda| below the relative threshold}
  std::vector<Graph> graphs{complete(5), path_graph(7), complete_bipartite(2, 3),
                            disjoint_union({complete(3), complete(3), complete(1)})};
  for (std::uint64_t seed = 0; seed < 30; ++seed) graphs.push_back(erdos_renyi(12, 0.25, seed));
  for (std::size_t m = 1; m <= 3; ++m) graphs.push_back(build_fractal(m, 2).graph);

  for (const auto& g : graphs) {
    for (double shift : {0.0, -1.0}) {
      const auto mat = normalized_laplacian_matrix(g).shifted(shift);
      const auto ev = sym_eigenvalues(mat);
      const double cutoff = 1e-8 * std::max(1.0, mat.frobenius_norm());
      const auto zeros = static_cast<std::size_t>(
          std::count_if(ev.begin(), ev.end(), [&](double v) { return std::abs(v) < cutoff; }));
      EXPECT_EQ(numerical_rank(mat), g.order() - zeros);
    }
  }
}

}  // namespace
}  // namespace nee
