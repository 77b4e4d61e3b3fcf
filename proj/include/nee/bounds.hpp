#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "nee/graph.hpp"
#include "nee/indices.hpp"
#include "nee/spectra.hpp"

namespace nee {

inline constexpr double kInvE = 0.36787944117144233;  // e^{-1}

// Lower bound on NEE for connected graphs of order n >= 2; tight exactly on K_n.
inline double theorem1_lower(std::size_t n) {
  if (n < 2) throw std::invalid_argument("connected-graph bound needs N >= 2");
  const double k = static_cast<double>(n - 1);
  return k * std::exp(1.0 / k) + kInvE;
}

struct Theorem2Bounds {
  double lower;
  double upper;
};

// Two-sided bound for connected bipartite graphs from order and extreme
// degrees. Tight on both sides for complete bipartite regular graphs.
//
// Throws std::domain_error when either radicand is negative or N < 2*min_deg.
// The upper bound grows like exp(sqrt(N)) and overflows to +inf for
// N - 2 >~ 5e5 at min_deg = 1; that value is returned as is.
inline Theorem2Bounds theorem2_bounds(std::size_t n, std::size_t max_deg, std::size_t min_deg) {
  if (n < 2) throw std::domain_error("bipartite bound needs N >= 2");
  if (min_deg == 0 || max_deg < min_deg) throw std::domain_error("bipartite bound needs 1 <= min_deg <= max_deg");
  if (n < 2 * min_deg) throw std::domain_error("bipartite bound needs N >= 2 * min_deg");
  const double N = static_cast<double>(n);
  const double D = static_cast<double>(max_deg);
  const double d = static_cast<double>(min_deg);

  const double lower_rad = (N - 2.0) * (N - 2.0) + 2.0 * (N - 2.0 * D) / D;
  if (lower_rad < 0.0) throw std::domain_error("negative radicand in the bipartite lower bound");
  const double upper_rad = (N - 2.0 * d) / d;

  const double base = kInvE + std::numbers::e;
  const double root = std::sqrt(upper_rad);
  return {base + std::sqrt(lower_rad), base + (N - 3.0) - root + std::exp(root)};
}

// Lower bound for a graph of order n with c components, r of them isolated.
// When n == c every vertex is isolated and the bound is n/e (exactly NEE).
inline double theorem3_lower(std::size_t n, std::size_t c, std::size_t r) {
  if (n == 0) throw std::invalid_argument("bound needs N >= 1");
  if (!(r <= c && c <= n)) throw std::invalid_argument("bound needs 0 <= r <= c <= N");
  if (c == n && r != c) throw std::invalid_argument("N == c forces every component to be isolated");
  if (c == 0) throw std::invalid_argument("a non-empty graph has at least one component");
  const double cc = static_cast<double>(c);
  if (n == c) return cc * kInvE;
  const double k = static_cast<double>(n - c);
  return k * std::exp(static_cast<double>(c - r) / k) + cc * kInvE;
}

struct BoundReport {
  std::size_t order = 0;
  std::size_t edges = 0;
  std::size_t components = 0;
  std::size_t isolated = 0;
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  bool connected = false;
  bool bipartite = false;
  double tol = 1e-9;

  double nee = 0.0;
  std::optional<double> thm1_lower;
  std::string thm1_reason;  // why thm1 is absent
  std::optional<double> thm2_lower;
  std::optional<double> thm2_upper;
  std::string thm2_reason;  // why thm2 is absent
  double thm3_lower = 0.0;

  bool thm1_equality = false;
  bool thm2_lower_equality = false;
  bool thm2_upper_equality = false;
  bool thm3_equality = false;

  // Structural equality family: copies of K_s plus isolated vertices, or all isolated.
  std::optional<std::size_t> extremal_s;
  bool extremal_family = false;
  bool thm3_detector_agrees = false;

  // Some bound is on the wrong side of NEE by more than tol.
  bool violation = false;
};

inline BoundReport evaluate_bounds(const Graph& g, double tol = 1e-9, JacobiOptions opts = {}) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be positive");
  if (g.order() == 0) throw std::invalid_argument("bounds need a non-empty graph");

  BoundReport rep;
  const auto cs = component_stats(g);
  const auto ds = degree_stats(g);
  rep.order = g.order();
  rep.edges = g.size();
  rep.components = cs.components;
  rep.isolated = cs.isolated;
  rep.max_degree = ds.max_degree;
  rep.min_degree = ds.min_degree;
  rep.connected = cs.connected();
  rep.bipartite = is_bipartite(g).bipartite;
  rep.tol = tol;
  rep.nee = normalized_estrada_index(g, opts);

  auto below = [&](double bound) { return bound <= rep.nee + tol; };
  auto above = [&](double bound) { return bound >= rep.nee - tol; };
  auto equal = [&](double bound) { return std::abs(rep.nee - bound) < tol; };

  if (!rep.connected) {
    rep.thm1_reason = "graph is not connected";
  } else if (rep.order < 2) {
    rep.thm1_reason = "needs N >= 2";
  } else {
    rep.thm1_lower = theorem1_lower(rep.order);
    rep.thm1_equality = equal(*rep.thm1_lower);
    rep.violation |= !below(*rep.thm1_lower);
  }

  if (!rep.connected || !rep.bipartite) {
    rep.thm2_reason = rep.connected ? "graph is not bipartite" : "graph is not connected";
  } else {
    try {
      const auto b = theorem2_bounds(rep.order, rep.max_degree, rep.min_degree);
      rep.thm2_lower = b.lower;
      rep.thm2_upper = b.upper;
      rep.thm2_lower_equality = equal(b.lower);
      rep.thm2_upper_equality = equal(b.upper);
      rep.violation |= !below(b.lower) || !above(b.upper);
    } catch (const std::domain_error& e) {
      rep.thm2_reason = e.what();
    }
  }

  rep.thm3_lower = theorem3_lower(rep.order, rep.components, rep.isolated);
  rep.thm3_equality = equal(rep.thm3_lower);
  rep.violation |= !below(rep.thm3_lower);

  rep.extremal_s = detect_theorem3_extremal(g);
  rep.extremal_family = rep.extremal_s.has_value() || g.size() == 0;
  rep.thm3_detector_agrees = rep.extremal_family == rep.thm3_equality;
  return rep;
}

}  // namespace nee
