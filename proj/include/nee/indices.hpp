#pragma once

#include <cmath>
#include <span>
#include <stdexcept>

#include "nee/decimation.hpp"
#include "nee/graph.hpp"
#include "nee/spectra.hpp"
#include "nee/summation.hpp"

namespace nee {

enum class LeeVariant { shifted, plain };

// sum_i exp(values[i] + shift), compensated.
inline double exp_sum(std::span<const double> values, double shift = 0.0) {
  CompensatedSum s;
  for (double v : values) s += std::exp(v + shift);
  return s.value();
}

// EE: sum of exp over the adjacency spectrum.
inline double estrada_index(const Graph& g, JacobiOptions opts = {}) {
  return exp_sum(graph_spectrum(g, MatrixKind::adjacency, opts).values);
}

// LEE. The shifted form subtracts the average degree 2E/N from every
// Laplacian eigenvalue; the plain form does not.
inline double laplacian_estrada_index(const Graph& g, LeeVariant variant = LeeVariant::shifted,
                                      JacobiOptions opts = {}) {
  if (g.order() == 0) throw std::invalid_argument("Laplacian Estrada index needs N >= 1");
  const double shift = variant == LeeVariant::shifted
                           ? -2.0 * static_cast<double>(g.size()) / static_cast<double>(g.order())
                           : 0.0;
  return exp_sum(graph_spectrum(g, MatrixKind::laplacian, opts).values, shift);
}

// NEE: sum of exp(lambda - 1) over the normalized Laplacian spectrum.
inline double normalized_estrada_index(const Spectrum& s) { return exp_sum(s.values, -1.0); }

inline double normalized_estrada_index(const Graph& g, JacobiOptions opts = {}) {
  return normalized_estrada_index(normalized_laplacian_spectrum(g, opts));
}

inline double nee_from_multiset(const SpectrumMultiset& ms) {
  CompensatedSum s;
  for (const auto& p : ms.pairs) s += static_cast<double>(p.multiplicity) * std::exp(p.value - 1.0);
  return s.value();
}

inline double decimation_nee(std::size_t m, std::size_t n) {
  return nee_from_multiset(decimation_spectrum(m, n));
}

}  // namespace nee
