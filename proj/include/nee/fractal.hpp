#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nee/graph.hpp"

namespace nee {

// Largest vertex count the fractal builders (and the decimation recursion)
// accept by default. Covers m = 5, n = 7 (823544 vertices) with margin.
inline constexpr std::uint64_t kDefaultFractalSizeCap = 2'000'000;

struct FractalCounts {
  std::uint64_t vertices;  // (m+2)^n + 1
  std::uint64_t edges;     // (m+2)^n
};

// Throws std::overflow_error if (m+2)^n + 1 does not fit in 64 bits.
inline FractalCounts fractal_counts(std::uint64_t m, std::uint64_t n) {
  if (m == 0) throw std::invalid_argument("fractal branching parameter m must be >= 1");
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  if (m > kMax - 2) throw std::overflow_error("fractal counts overflow 64-bit integers");
  const std::uint64_t base = m + 2;
  std::uint64_t e = 1;
  for (std::uint64_t k = 0; k < n; ++k) {
    if (e > kMax / base) throw std::overflow_error("fractal counts overflow 64-bit integers");
    e *= base;
  }
  if (e == kMax) throw std::overflow_error("fractal counts overflow 64-bit integers");
  return {e + 1, e};
}

inline void check_fractal_params(std::uint64_t m, std::uint64_t n, std::uint64_t size_cap) {
  const auto counts = fractal_counts(m, n);
  if (counts.vertices > size_cap) {
    throw std::invalid_argument("G_" + std::to_string(n) + "(" + std::to_string(m) + ") has " +
                                std::to_string(counts.vertices) + " vertices, above the cap of " +
                                std::to_string(size_cap));
  }
}

struct FractalGraph {
  Graph graph;
  std::size_t m = 1;
  std::size_t n = 0;
  std::optional<Vertex> inmost;           // present for n >= 1
  std::vector<Vertex> outmost;            // ascending
  std::vector<std::size_t> birth_generation;
};

namespace detail {

inline std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(g.order(), unset);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    auto v = q.front();
    q.pop();
    for (auto w : g.neighbors(v)) {
      if (dist[w] == unset) {
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
  }
  return dist;
}

// Center of a tree with even diameter: the middle vertex of a longest path.
inline Vertex tree_center(const Graph& g) {
  auto far_from = [&](Vertex s) {
    auto d = bfs_distances(g, s);
    return static_cast<Vertex>(std::max_element(d.begin(), d.end()) - d.begin());
  };
  const Vertex a = far_from(0);
  const auto da = bfs_distances(g, a);
  const Vertex b = static_cast<Vertex>(std::max_element(da.begin(), da.end()) - da.begin());
  const auto db = bfs_distances(g, b);
  const std::size_t diameter = da[b];
  for (Vertex v = 0; v < g.order(); ++v)
    if (da[v] + db[v] == diameter && da[v] == diameter / 2) return v;
  throw std::logic_error("tree center not found");
}

inline std::vector<Vertex> farthest_from(const Graph& g, Vertex source) {
  const auto d = bfs_distances(g, source);
  const auto far = *std::max_element(d.begin(), d.end());
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (d[v] == far) out.push_back(v);
  return out;
}

inline void annotate(FractalGraph& f) {
  if (f.n == 0) {
    f.inmost.reset();
    f.outmost = {0, 1};
    return;
  }
  f.inmost = tree_center(f.graph);
  f.outmost = farthest_from(f.graph, *f.inmost);
}

}  // namespace detail

// G_n(m) by repeated edge replacement. Starting from the single edge 0-1, each
// generation visits the current edges (stored u < v) in ascending (u, v) order and replaces
// u-v by u-w-v with a fresh vertex w, then hangs m fresh leaves on w. Vertex
// ids are append-only, so older vertices keep their ids (and degrees).
inline FractalGraph build_fractal(std::size_t m, std::size_t n,
                                  std::uint64_t size_cap = kDefaultFractalSizeCap) {
  check_fractal_params(m, n, size_cap);
  const auto counts = fractal_counts(m, n);

  std::vector<std::pair<Vertex, Vertex>> edges{{0, 1}};
  std::vector<std::size_t> birth{0, 0};
  birth.reserve(counts.vertices);
  Vertex next = 2;
  for (std::size_t gen = 1; gen <= n; ++gen) {
    std::sort(edges.begin(), edges.end());
    std::vector<std::pair<Vertex, Vertex>> grown;
    grown.reserve(edges.size() * (m + 2));
    for (auto [u, v] : edges) {
      const Vertex w = next++;
      birth.push_back(gen);
      grown.emplace_back(u, w);
      grown.emplace_back(v, w);
      for (std::size_t k = 0; k < m; ++k) {
        grown.emplace_back(w, next++);
        birth.push_back(gen);
      }
    }
    edges = std::move(grown);
  }

  FractalGraph f{Graph(next, edges), m, n, std::nullopt, {}, std::move(birth)};
  detail::annotate(f);
  return f;
}

// G_n(m) by self-similar merging: m+2 copies of G_{n-1}(m) are glued at one
// designated outmost "hook" vertex each, and the glued vertex becomes the
// inmost vertex. G_0's hook is vertex 0; afterwards the hook is the
// smallest-id vertex among those farthest from the inmost vertex.
//
// Labeling: vertex 0 is the merged vertex; copy i's remaining vertices follow
// in copy order, preserving their relative order. birth_generation here is the
// merge level that created the vertex (0 for the copies' original endpoints).
inline FractalGraph build_fractal_merged(std::size_t m, std::size_t n,
                                         std::uint64_t size_cap = kDefaultFractalSizeCap) {
  if (n == 0) throw std::invalid_argument("merged construction needs n >= 1");
  check_fractal_params(m, n, size_cap);

  Graph current(2, std::vector<std::pair<Vertex, Vertex>>{{0, 1}});
  std::vector<std::size_t> birth{0, 0};
  Vertex hook = 0;
  for (std::size_t gen = 1; gen <= n; ++gen) {
    const std::size_t copy_order = current.order();
    // Map each vertex of a copy to its id in the merged graph.
    auto relabel = [&](std::size_t copy, Vertex v) -> Vertex {
      if (v == hook) return 0;
      const Vertex local = v < hook ? v : v - 1;
      return 1 + copy * (copy_order - 1) + local;
    };
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(current.size() * (m + 2));
    std::vector<std::size_t> merged_birth(1 + (m + 2) * (copy_order - 1));
    merged_birth[0] = gen;
    for (std::size_t copy = 0; copy < m + 2; ++copy) {
      for (const auto& e : current.edges()) edges.emplace_back(relabel(copy, e.u), relabel(copy, e.v));
      for (Vertex v = 0; v < copy_order; ++v)
        if (v != hook) merged_birth[relabel(copy, v)] = birth[v];
    }
    current = Graph(merged_birth.size(), edges);
    birth = std::move(merged_birth);
    hook = detail::farthest_from(current, 0).front();
  }

  FractalGraph f{std::move(current), m, n, std::nullopt, {}, std::move(birth)};
  detail::annotate(f);
  return f;
}

}  // namespace nee
