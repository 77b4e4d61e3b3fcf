#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>

#include "nee/bounds.hpp"
#include "nee/decimation.hpp"
#include "nee/dense_linalg.hpp"
#include "nee/fractal.hpp"
#include "nee/indices.hpp"
#include "nee/spectra.hpp"

namespace nee {

// Largest graph the dense route is run on.
inline constexpr std::uint64_t kDenseSizeCap = 2000;

struct ScalingRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t order = 0;
  double nee = 0.0;
  double thm2_lower = 0.0;
  double thm2_upper = 0.0;
  double thm3_lower = 0.0;

  bool sandwiched() const { return thm2_lower <= nee && nee <= thm2_upper; }
};

// NEE of G_n(m) by decimation against the bipartite bound (max degree m+2,
// min degree 1; G_0 = K_2 has max degree 1) and the connected bound (c=1, r=0).
inline ScalingRow scaling_row(std::size_t m, std::size_t n) {
  ScalingRow row;
  row.m = m;
  row.n = n;
  row.order = fractal_counts(m, n).vertices;
  row.nee = decimation_nee(m, n);
  const auto b = theorem2_bounds(row.order, n == 0 ? 1 : m + 2, 1);
  row.thm2_lower = b.lower;
  row.thm2_upper = b.upper;
  row.thm3_lower = theorem3_lower(row.order, 1, 0);
  return row;
}

struct VerifyRow {
  std::size_t m = 0;
  std::size_t n = 0;
  std::uint64_t order = 0;
  double max_abs_diff = 0.0;     // sorted decimation vs sorted dense spectrum
  double nee_decimation = 0.0;
  double nee_dense = 0.0;
  double nee_rel_diff = 0.0;
  std::uint64_t mult_one_expected = 0;
  std::uint64_t mult_one_multiset = 0;
  std::uint64_t mult_one_dense = 0;   // gap-clustered
  std::uint64_t rank_expected = 0;
  std::uint64_t rank_dense = 0;

  double spectral_tol = 1e-8;

  bool spectrum_ok() const { return max_abs_diff <= spectral_tol && nee_rel_diff <= spectral_tol; }
  bool multiplicity_ok() const {
    return mult_one_multiset == mult_one_expected && mult_one_dense == mult_one_expected;
  }
  bool rank_ok() const { return rank_dense == rank_expected; }
  bool ok() const { return spectrum_ok() && multiplicity_ok() && rank_ok(); }
};

// Decimation against a dense eigensolve of the explicitly built G_n(m), n >= 1.
inline VerifyRow verify_row(std::size_t m, std::size_t n, double spectral_tol = 1e-8,
                            double cluster_gap = 1e-6, double rank_tol = 1e-8) {
  if (n == 0) throw std::invalid_argument("verification starts at n = 1");
  const auto counts = fractal_counts(m, n);
  if (counts.vertices > kDenseSizeCap)
    throw std::invalid_argument("dense verification refused above N = " + std::to_string(kDenseSizeCap));

  VerifyRow row;
  row.m = m;
  row.n = n;
  row.order = counts.vertices;
  row.spectral_tol = spectral_tol;

  const auto ms = decimation_spectrum(m, n);
  const auto fractal = build_fractal(m, n);
  const auto lap = normalized_laplacian_matrix(fractal.graph);
  auto dense = sym_eigenvalues(lap);
  std::sort(dense.begin(), dense.end());
  const auto exact = ms.flattened();
  if (exact.size() != dense.size()) throw std::logic_error("spectrum sizes differ");
  for (std::size_t i = 0; i < exact.size(); ++i)
    row.max_abs_diff = std::max(row.max_abs_diff, std::abs(exact[i] - dense[i]));

  row.nee_decimation = nee_from_multiset(ms);
  row.nee_dense = exp_sum(dense, -1.0);
  row.nee_rel_diff = std::abs(row.nee_decimation - row.nee_dense) / std::abs(row.nee_dense);

  row.mult_one_expected = multiplicity_of_one(m, n);
  for (const auto& p : ms.pairs)
    if (p.value == 1.0) row.mult_one_multiset += p.multiplicity;
  row.mult_one_dense = clustered_multiplicity(dense, 1.0, cluster_gap);

  row.rank_expected = predicted_rank(m, n);
  row.rank_dense = numerical_rank(lap.shifted(-1.0), rank_tol);
  return row;
}

}  // namespace nee
