#include <gtest/gtest.h>

#include <algorithm>

#include "nee/fractal.hpp"
#include "nee/spectra.hpp"

namespace nee {
namespace {

void expect_fractal_invariants(const FractalGraph& f) {
  const auto counts = fractal_counts(f.m, f.n);
  EXPECT_EQ(f.graph.order(), counts.vertices);
  EXPECT_EQ(f.graph.size(), counts.edges);
  EXPECT_EQ(f.graph.size() + 1, f.graph.order());
  EXPECT_TRUE(component_stats(f.graph).connected());
  EXPECT_TRUE(is_bipartite(f.graph).bipartite);
  EXPECT_EQ(f.birth_generation.size(), f.graph.order());
  if (f.n >= 1) {
    const auto ds = degree_stats(f.graph);
    EXPECT_EQ(ds.max_degree, f.m + 2);
    EXPECT_EQ(ds.min_degree, 1u);
    ASSERT_TRUE(f.inmost.has_value());
    EXPECT_EQ(f.graph.degree(*f.inmost), f.m + 2);
    for (auto v : f.outmost) EXPECT_EQ(f.graph.degree(v), 1u);
  }
}

TEST(FractalCounts, Values) {
  EXPECT_EQ(fractal_counts(1, 7).vertices, 2188u);
  EXPECT_EQ(fractal_counts(1, 7).edges, 2187u);
  EXPECT_EQ(fractal_counts(5, 3).vertices, 344u);
  EXPECT_EQ(fractal_counts(5, 3).edges, 343u);
  EXPECT_EQ(fractal_counts(3, 0).vertices, 2u);
  EXPECT_EQ(fractal_counts(3, 0).edges, 1u);
  EXPECT_EQ(fractal_counts(5, 7).vertices, 823544u);
}

TEST(FractalCounts, Overflow) {
  EXPECT_THROW(fractal_counts(1, 41), std::overflow_error);  // 3^41 > 2^64
  EXPECT_NO_THROW(fractal_counts(1, 40));
  EXPECT_THROW(fractal_counts(0, 2), std::invalid_argument);
}

TEST(BuildFractal, BaseCases) {
  for (std::size_t m = 1; m <= 4; ++m) {
    const auto g0 = build_fractal(m, 0);
    EXPECT_EQ(g0.graph.edges(), complete(2).edges());
    EXPECT_FALSE(g0.inmost.has_value());

    const auto g1 = build_fractal(m, 1);
    EXPECT_EQ(degree_stats(g1.graph).sequence, degree_stats(complete_bipartite(1, m + 2)).sequence);
    EXPECT_EQ(g1.inmost, 2u);
  }
  const auto g = build_fractal(1, 2);
  EXPECT_EQ(g.graph.order(), 10u);
  EXPECT_EQ(g.graph.size(), 9u);
}

TEST(BuildFractal, T2LabelingIsPinned) {
  // Edges of G_1(1) in order: (0,2),(1,2),(2,3). Each spawns a middle vertex and one leaf.
  const auto g = build_fractal(1, 2);
  const std::vector<std::pair<Vertex, Vertex>> expected{{0, 4}, {1, 6}, {2, 4}, {2, 6}, {2, 8},
                                                        {3, 8}, {4, 5}, {6, 7}, {8, 9}};
  EXPECT_EQ(g.graph.edge_pairs(), expected);
  EXPECT_EQ(g.inmost, 2u);
  EXPECT_EQ(g.outmost, (std::vector<Vertex>{0, 1, 3, 5, 7, 9}));
}

TEST(BuildFractal, InvariantsOverGrid) {
  for (std::size_t m = 1; m <= 5; ++m)
    for (std::size_t n = 0; n <= 4; ++n) expect_fractal_invariants(build_fractal(m, n));
}

TEST(BuildFractal, DegreePreservedAcrossGenerations) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 4; ++n) {
      const auto prev = build_fractal(m, n - 1);
      const auto cur = build_fractal(m, n);
      for (Vertex v = 0; v < prev.graph.order(); ++v) {
        EXPECT_EQ(cur.birth_generation[v], prev.birth_generation[v]);
        EXPECT_EQ(cur.graph.degree(v), prev.graph.degree(v));
      }
      for (Vertex v = prev.graph.order(); v < cur.graph.order(); ++v) EXPECT_EQ(cur.birth_generation[v], n);
    }
  }
}

TEST(BuildFractal, SizeCap) {
  EXPECT_THROW(build_fractal(1, 5, 100), std::invalid_argument);
  EXPECT_THROW(build_fractal(0, 1), std::invalid_argument);
}

TEST(BuildFractalMerged, MatchesIterativeConstruction) {
  const auto a = build_fractal_merged(1, 1);
  EXPECT_EQ(degree_stats(a.graph).sequence, degree_stats(build_fractal(1, 1).graph).sequence);
  const auto b = build_fractal_merged(2, 2);
  EXPECT_EQ(b.graph.order(), 17u);
  EXPECT_EQ(b.graph.size(), 16u);
  EXPECT_EQ(b.inmost, 0u);
  EXPECT_THROW(build_fractal_merged(1, 0), std::invalid_argument);
}

TEST(BuildFractalMerged, DualConstructionAgreement) {
  for (std::size_t m = 1; m <= 3; ++m) {
    for (std::size_t n = 1; n <= 3; ++n) {
      const auto it = build_fractal(m, n);
      const auto mg = build_fractal_merged(m, n);
      expect_fractal_invariants(mg);
      EXPECT_EQ(degree_stats(it.graph).sequence, degree_stats(mg.graph).sequence);
      EXPECT_EQ(it.outmost.size(), mg.outmost.size());
      const auto sa = normalized_laplacian_spectrum(it.graph).values;
      const auto sb = normalized_laplacian_spectrum(mg.graph).values;
      for (std::size_t i = 0; i < sa.size(); ++i) EXPECT_NEAR(sa[i], sb[i], 1e-8) << m << ' ' << n;
    }
  }
}

}  // namespace
}  // namespace nee
