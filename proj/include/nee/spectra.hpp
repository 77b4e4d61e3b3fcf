#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "nee/dense_linalg.hpp"
#include "nee/graph.hpp"

namespace nee {

enum class MatrixKind { adjacency, laplacian, normalized_laplacian };

inline std::string_view to_string(MatrixKind k) {
  switch (k) {
    case MatrixKind::adjacency: return "adjacency";
    case MatrixKind::laplacian: return "laplacian";
    case MatrixKind::normalized_laplacian: return "normalized_laplacian";
  }
  return "unknown";
}

struct Spectrum {
  std::vector<double> values;  // descending
  MatrixKind source = MatrixKind::normalized_laplacian;
  std::size_t graph_order = 0;
};

inline SymmetricMatrix adjacency_matrix(const Graph& g) {
  SymmetricMatrix a(g.order());
  for (const auto& e : g.edges()) a.set(e.u, e.v, 1.0);
  return a;
}

inline SymmetricMatrix laplacian_matrix(const Graph& g) {
  SymmetricMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v) l.set(v, v, static_cast<double>(g.degree(v)));
  for (const auto& e : g.edges()) l.set(e.u, e.v, -1.0);
  return l;
}

// D^{-1/2} (D - A) D^{-1/2}, with d^{-1} taken as 0 for isolated vertices.
inline SymmetricMatrix normalized_laplacian_matrix(const Graph& g) {
  SymmetricMatrix l(g.order());
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 0) l.set(v, v, 1.0);
  for (const auto& e : g.edges()) {
    const double du = static_cast<double>(g.degree(e.u));
    const double dv = static_cast<double>(g.degree(e.v));
    l.set(e.u, e.v, -1.0 / std::sqrt(du * dv));
  }
  return l;
}

inline SymmetricMatrix graph_matrix(const Graph& g, MatrixKind kind) {
  switch (kind) {
    case MatrixKind::adjacency: return adjacency_matrix(g);
    case MatrixKind::laplacian: return laplacian_matrix(g);
    case MatrixKind::normalized_laplacian: return normalized_laplacian_matrix(g);
  }
  throw std::invalid_argument("unknown matrix kind");
}

inline Spectrum graph_spectrum(const Graph& g, MatrixKind kind, JacobiOptions opts = {}) {
  return Spectrum{sym_eigenvalues(graph_matrix(g, kind), opts), kind, g.order()};
}

inline Spectrum normalized_laplacian_spectrum(const Graph& g, JacobiOptions opts = {}) {
  return graph_spectrum(g, MatrixKind::normalized_laplacian, opts);
}

struct Cluster {
  double value;  // mean of the members
  std::size_t multiplicity;
};

// Groups sorted eigenvalues into runs whose consecutive gaps are below `gap`.
// Output is ascending by value.
inline std::vector<Cluster> cluster_eigenvalues(std::vector<double> values, double gap = 1e-6) {
  std::sort(values.begin(), values.end());
  std::vector<Cluster> out;
  std::size_t i = 0;
  while (i < values.size()) {
    std::size_t j = i + 1;
    double sum = values[i];
    while (j < values.size() && values[j] - values[j - 1] < gap) sum += values[j++];
    out.push_back({sum / static_cast<double>(j - i), j - i});
    i = j;
  }
  return out;
}

// Multiplicity of the cluster containing `target`, or 0 if no cluster mean is
// within `gap` of it.
inline std::size_t clustered_multiplicity(const std::vector<double>& values, double target,
                                          double gap = 1e-6) {
  for (const auto& c : cluster_eigenvalues(values, gap))
    if (std::abs(c.value - target) < gap) return c.multiplicity;
  return 0;
}

struct Lemma1Report {
  double sum = 0.0;
  double expected_sum = 0.0;  // N - r
  bool sum_ok = false;
  bool range_ok = false;        // all values in [-tol, 2 + tol] and min within tol of 0
  bool bipartite_applies = false;
  bool bipartite_ok = true;     // lambda_1 = 2 and lambda_2 < 2 - tol; vacuous when not applicable

  bool ok() const { return sum_ok && range_ok && bipartite_ok; }
};

// Checks the standard normalized-Laplacian spectral facts against a computed
// spectrum. The sum is compared with N - r, which reduces to N for connected
// graphs. The bipartite clause applies to connected bipartite graphs with N >= 2.
inline Lemma1Report lemma1_report(const Graph& g, const Spectrum& s, double tol = 1e-8) {
  if (s.source != MatrixKind::normalized_laplacian)
    throw std::invalid_argument("lemma1_report needs a normalized Laplacian spectrum");
  if (s.values.size() != g.order()) throw std::invalid_argument("spectrum does not match graph order");

  Lemma1Report r;
  const auto cs = component_stats(g);
  for (double v : s.values) r.sum += v;
  r.expected_sum = static_cast<double>(g.order() - cs.isolated);
  r.sum_ok = std::abs(r.sum - r.expected_sum) <= tol * std::max<double>(1.0, g.order());

  r.range_ok = true;
  for (double v : s.values)
    if (v < -tol || v > 2.0 + tol) r.range_ok = false;
  if (!s.values.empty() && std::abs(s.values.back()) > tol) r.range_ok = false;

  r.bipartite_applies = g.order() >= 2 && cs.connected() && is_bipartite(g).bipartite;
  if (r.bipartite_applies) {
    r.bipartite_ok = std::abs(s.values[0] - 2.0) <= tol && s.values[1] < 2.0 - tol;
  }
  return r;
}

}  // namespace nee
