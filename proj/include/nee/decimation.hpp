#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "nee/fractal.hpp"

namespace nee {

struct EigenPair {
  double value;
  std::uint64_t multiplicity;
};

// Exact spectrum of G_n(m) as (value, multiplicity) pairs, ascending by value.
// Values that arise from different parents are kept as separate pairs even if
// numerically close; multiplicities are exact integers.
struct SpectrumMultiset {
  std::vector<EigenPair> pairs;
  std::size_t m = 1;
  std::size_t n = 0;

  std::uint64_t total_multiplicity() const {
    std::uint64_t t = 0;
    for (const auto& p : pairs) t += p.multiplicity;
    return t;
  }

  // Every eigenvalue repeated by its multiplicity, ascending.
  std::vector<double> flattened() const {
    std::vector<double> out;
    out.reserve(total_multiplicity());
    for (const auto& p : pairs) out.insert(out.end(), p.multiplicity, p.value);
    return out;
  }
};

inline std::uint64_t multiplicity_of_one(std::uint64_t m, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("eigenvalue 1 is absent at generation 0");
  return m * fractal_counts(m, n - 1).edges + 1;
}

// Rank of (normalized Laplacian - I) for G_n(m); equals N_n - multiplicity_of_one.
inline std::uint64_t predicted_rank(std::uint64_t m, std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("rank identity holds for n >= 1");
  return 2 * fractal_counts(m, n - 1).edges;
}

// Spectral decimation for G_n(m).
//
// Generation 0 is {0, 2}. Going from generation k to k+1, the spectrum is
// {0, 2} plus 1 with multiplicity m(m+2)^k + 1, plus, for every pair (v, c) at
// generation k with v not in {0, 2}, the two children 1 -/+ sqrt(1 - v/(m+2)),
// each with multiplicity c. The number of distinct pairs grows like 2^n while
// the total multiplicity is (m+2)^n + 1, which is asserted after every step.
inline SpectrumMultiset decimation_spectrum(std::size_t m, std::size_t n,
                                            std::uint64_t size_cap = kDefaultFractalSizeCap) {
  check_fractal_params(m, n, size_cap);
  const double branch = static_cast<double>(m + 2);

  std::vector<EigenPair> current{{0.0, 1}, {2.0, 1}};
  std::vector<EigenPair> next;
  for (std::size_t k = 0; k < n; ++k) {
    next.clear();
    next.reserve(2 * current.size() + 1);
    next.push_back({0.0, 1});
    next.push_back({2.0, 1});
    next.push_back({1.0, multiplicity_of_one(m, k + 1)});
    for (const auto& parent : current) {
      if (parent.value == 0.0 || parent.value == 2.0) continue;
      const double offset = std::sqrt(1.0 - parent.value / branch);
      const double lo = 1.0 - offset;
      const double hi = 1.0 + offset;
      if (!(lo > 0.0 && hi < 2.0)) throw std::logic_error("decimation child left (0, 2)");
      next.push_back({lo, parent.multiplicity});
      next.push_back({hi, parent.multiplicity});
    }
    std::uint64_t total = 0;
    for (const auto& p : next) total += p.multiplicity;
    if (total != fractal_counts(m, k + 1).vertices)
      throw std::logic_error("decimation lost eigenvalues: count identity violated");
    std::swap(current, next);
  }

  std::sort(current.begin(), current.end(),
            [](const EigenPair& a, const EigenPair& b) { return a.value < b.value; });
  return SpectrumMultiset{std::move(current), m, n};
}

}  // namespace nee
