#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "nee/decimation.hpp"
#include "nee/fractal.hpp"
#include "nee/indices.hpp"
#include "nee/spectra.hpp"

namespace nee {
namespace {

TEST(Decimation, BaseAndFirstGeneration) {
  const auto g0 = decimation_spectrum(3, 0);
  ASSERT_EQ(g0.pairs.size(), 2u);
  EXPECT_EQ(g0.pairs[0].value, 0.0);
  EXPECT_EQ(g0.pairs[1].value, 2.0);

  const auto g1 = decimation_spectrum(1, 1);
  ASSERT_EQ(g1.pairs.size(), 3u);
  EXPECT_EQ(g1.pairs[0].value, 0.0);
  EXPECT_EQ(g1.pairs[0].multiplicity, 1u);
  EXPECT_EQ(g1.pairs[1].value, 1.0);
  EXPECT_EQ(g1.pairs[1].multiplicity, 2u);
  EXPECT_EQ(g1.pairs[2].value, 2.0);
  EXPECT_EQ(g1.pairs[2].multiplicity, 1u);
}

TEST(Decimation, SecondGeneration) {
  const auto g2 = decimation_spectrum(1, 2);
  ASSERT_EQ(g2.pairs.size(), 5u);
  const double r = std::sqrt(2.0 / 3.0);
  EXPECT_EQ(g2.pairs[0].value, 0.0);
  EXPECT_NEAR(g2.pairs[1].value, 1.0 - r, 1e-15);
  EXPECT_EQ(g2.pairs[1].multiplicity, 2u);
  EXPECT_EQ(g2.pairs[2].value, 1.0);
  EXPECT_EQ(g2.pairs[2].multiplicity, 4u);
  EXPECT_NEAR(g2.pairs[3].value, 1.0 + r, 1e-15);
  EXPECT_EQ(g2.pairs[3].multiplicity, 2u);
  EXPECT_EQ(g2.total_multiplicity(), 10u);
}

TEST(Decimation, CountsAndStructureOverGrid) {
  for (std::size_t m = 1; m <= 5; ++m) {
    for (std::size_t n = 0; n <= 7; ++n) {
      const auto ms = decimation_spectrum(m, n);
      EXPECT_EQ(ms.total_multiplicity(), fractal_counts(m, n).vertices);
      std::size_t zeros = 0, twos = 0;
      std::uint64_t ones = 0;
      for (const auto& p : ms.pairs) {
        EXPECT_GE(p.value, 0.0);
        EXPECT_LE(p.value, 2.0);
        EXPECT_GT(p.multiplicity, 0u);
        if (p.value == 0.0) zeros += p.multiplicity;
        if (p.value == 2.0) twos += p.multiplicity;
        if (p.value == 1.0) ones += p.multiplicity;
      }
      EXPECT_EQ(zeros, 1u);
      EXPECT_EQ(twos, 1u);
      if (n >= 1) EXPECT_EQ(ones, multiplicity_of_one(m, n));
      // value -> 2 - value with matching multiplicities
      const auto& pr = ms.pairs;
      for (std::size_t i = 0; i < pr.size(); ++i) {
        const auto& mirror = pr[pr.size() - 1 - i];
        EXPECT_EQ(pr[i].multiplicity, mirror.multiplicity);
        EXPECT_NEAR(pr[i].value + mirror.value, 2.0, 4e-16);
      }
    }
  }
}

TEST(Decimation, LargestCase) {
  EXPECT_EQ(decimation_spectrum(5, 3).total_multiplicity(), 344u);
  EXPECT_EQ(decimation_spectrum(5, 7).total_multiplicity(), 823544u);
  EXPECT_THROW(decimation_spectrum(5, 8), std::invalid_argument);  // above the size cap
  EXPECT_THROW(decimation_spectrum(0, 2), std::invalid_argument);
}

TEST(Decimation, Nee) {
  for (std::size_t m = 1; m <= 5; ++m) EXPECT_NEAR(decimation_nee(m, 0), 3.0861612696304874, 1e-15);
  EXPECT_NEAR(decimation_nee(1, 1), 5.086161269630487, 1e-14);
  EXPECT_NEAR(decimation_nee(1, 2), 12.495234509782478, 1e-13);
}

TEST(Decimation, MultiplicityOfOne) {
  EXPECT_EQ(multiplicity_of_one(1, 2), 4u);
  EXPECT_EQ(multiplicity_of_one(2, 1), 3u);
  EXPECT_EQ(multiplicity_of_one(1, 3), 10u);
  EXPECT_THROW(multiplicity_of_one(1, 0), std::invalid_argument);

  const auto dense = normalized_laplacian_spectrum(build_fractal(1, 3).graph).values;
  EXPECT_EQ(clustered_multiplicity(dense, 1.0), 10u);
}

TEST(Decimation, PredictedRank) {
  EXPECT_EQ(predicted_rank(1, 1), 2u);
  EXPECT_EQ(predicted_rank(1, 2), 6u);
  EXPECT_EQ(predicted_rank(2, 2), 8u);
  EXPECT_THROW(predicted_rank(2, 0), std::invalid_argument);
  const auto lap = normalized_laplacian_matrix(build_fractal(2, 2).graph);
  EXPECT_EQ(numerical_rank(lap.shifted(-1.0), 1e-8), 8u);

  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 1; n <= 7; ++n)
      EXPECT_EQ(predicted_rank(m, n) + multiplicity_of_one(m, n), fractal_counts(m, n).vertices);
}

TEST(Decimation, MatchesDenseSpectrum) {
  const std::pair<std::size_t, std::size_t> cases[] = {{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1},
                                                       {2, 2}, {2, 3}, {3, 2}, {5, 2}};
  for (auto [m, n] : cases) {
    auto dense = normalized_laplacian_spectrum(build_fractal(m, n).graph).values;
    std::sort(dense.begin(), dense.end());
    const auto exact = decimation_spectrum(m, n).flattened();
    ASSERT_EQ(dense.size(), exact.size());
    for (std::size_t i = 0; i < exact.size(); ++i) EXPECT_NEAR(exact[i], dense[i], 1e-8) << m << ' ' << n;
  }
}

}  // namespace
}  // namespace nee
