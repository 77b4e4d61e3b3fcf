#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nee {

using Vertex = std::size_t;

struct Edge {
  Vertex u;
  Vertex v;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..N-1. Immutable once built.
// Edges are stored normalized (u < v) and sorted; adjacency lists are sorted.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, out-of-range endpoints and
  // duplicate edges (in either orientation).
  Graph(std::size_t n_vertices, std::span<const std::pair<Vertex, Vertex>> pairs)
      : n_(n_vertices), adj_(n_vertices) {
    edges_.reserve(pairs.size());
    for (auto [a, b] : pairs) {
      if (a >= n_ || b >= n_) {
        throw std::invalid_argument("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                    ") has an endpoint outside [0, " + std::to_string(n_) + ")");
      }
      if (a == b) {
        throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
      }
      edges_.push_back(a < b ? Edge{a, b} : Edge{b, a});
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      throw std::invalid_argument("duplicate edge (" + std::to_string(dup->u) + "," +
                                  std::to_string(dup->v) + ")");
    }
    for (const auto& e : edges_) {
      adj_[e.u].push_back(e.v);
      adj_[e.v].push_back(e.u);
    }
    for (auto& nbrs : adj_) std::sort(nbrs.begin(), nbrs.end());
  }

  Graph(std::size_t n_vertices, const std::vector<std::pair<Vertex, Vertex>>& pairs)
      : Graph(n_vertices, std::span<const std::pair<Vertex, Vertex>>(pairs)) {}

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a >= n_ || b >= n_) return false;
    const auto& nbrs = adj_[a];
    return std::binary_search(nbrs.begin(), nbrs.end(), b);
  }

  std::vector<std::pair<Vertex, Vertex>> edge_pairs() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) out.emplace_back(e.u, e.v);
    return out;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;
};

inline Graph from_edge_list(std::size_t n_vertices,
                            const std::vector<std::pair<Vertex, Vertex>>& pairs) {
  return Graph(n_vertices, pairs);
}

// K_s on vertices 0..s-1.
inline Graph complete(std::size_t s) {
  if (s == 0) throw std::invalid_argument("complete graph needs at least one vertex");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(s * (s - 1) / 2);
  for (Vertex i = 0; i < s; ++i)
    for (Vertex j = i + 1; j < s; ++j) pairs.emplace_back(i, j);
  return Graph(s, pairs);
}

// K_{a,b}: parts {0..a-1} and {a..a+b-1}.
inline Graph complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw std::invalid_argument("complete bipartite graph needs non-empty parts");
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(a * b);
  for (Vertex i = 0; i < a; ++i)
    for (Vertex j = 0; j < b; ++j) pairs.emplace_back(i, a + j);
  return Graph(a + b, pairs);
}

inline Graph path_graph(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i + 1 < n; ++i) pairs.emplace_back(i, i + 1);
  return Graph(n, pairs);
}

inline Graph edgeless(std::size_t n) { return Graph(n, std::vector<std::pair<Vertex, Vertex>>{}); }

// Parts are laid out in order; part k's vertex v becomes v + (sum of earlier orders).
inline Graph disjoint_union(std::span<const Graph> parts) {
  std::size_t offset = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (const auto& g : parts) {
    for (const auto& e : g.edges()) pairs.emplace_back(e.u + offset, e.v + offset);
    offset += g.order();
  }
  return Graph(offset, pairs);
}

inline Graph disjoint_union(std::initializer_list<Graph> parts) {
  return disjoint_union(std::span<const Graph>(parts.begin(), parts.size()));
}

// Maps a raw 64-bit draw to [0, 1) using its top 53 bits.
inline double unit_interval(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// G(n, p). Pairs (i, j), i < j, are visited in lexicographic order; each is kept
// iff the next std::mt19937_64 draw, mapped by unit_interval(), is < p. Both the
// engine and the mapping are fully specified, so a seed reproduces the same
// graph on every platform (std::bernoulli_distribution is not portable).
inline Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("edge probability must lie in [0, 1]");
  std::mt19937_64 engine(seed);
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (unit_interval(engine()) < p) pairs.emplace_back(i, j);
  return Graph(n, pairs);
}

struct ComponentStats {
  std::size_t components = 0;  // c
  std::size_t isolated = 0;    // r
  std::vector<std::size_t> component_id;
  std::vector<std::size_t> component_size;

  bool connected() const { return components == 1; }
};

inline ComponentStats component_stats(const Graph& g) {
  ComponentStats s;
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  s.component_id.assign(g.order(), unset);
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (s.component_id[root] != unset) continue;
    const auto id = s.components++;
    std::size_t count = 0;
    s.component_id[root] = id;
    frontier.push(root);
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      ++count;
      for (auto w : g.neighbors(v)) {
        if (s.component_id[w] == unset) {
          s.component_id[w] = id;
          frontier.push(w);
        }
      }
    }
    s.component_size.push_back(count);
    if (count == 1) ++s.isolated;
  }
  return s;
}

struct DegreeStats {
  std::size_t max_degree = 0;
  std::size_t min_degree = 0;
  std::vector<std::size_t> sequence;  // descending
};

inline DegreeStats degree_stats(const Graph& g) {
  DegreeStats d;
  d.sequence.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) d.sequence.push_back(g.degree(v));
  std::sort(d.sequence.begin(), d.sequence.end(), std::greater<>());
  if (!d.sequence.empty()) {
    d.max_degree = d.sequence.front();
    d.min_degree = d.sequence.back();
  }
  return d;
}

struct Bipartition {
  bool bipartite = false;
  std::vector<int> color;  // 0/1 per vertex, valid only when bipartite
};

inline Bipartition is_bipartite(const Graph& g) {
  Bipartition b;
  b.color.assign(g.order(), -1);
  std::queue<Vertex> frontier;
  for (Vertex root = 0; root < g.order(); ++root) {
    if (b.color[root] != -1) continue;
    b.color[root] = 0;
    frontier.push(root);
    while (!frontier.empty()) {
      auto v = frontier.front();
      frontier.pop();
      for (auto w : g.neighbors(v)) {
        if (b.color[w] == -1) {
          b.color[w] = 1 - b.color[v];
          frontier.push(w);
        } else if (b.color[w] == b.color[v]) {
          b.color.clear();
          return b;
        }
      }
    }
  }
  b.bipartite = true;
  return b;
}

// Structural test for the extremal family "copies of K_s plus isolated
// vertices". Returns s >= 2 when every non-singleton component is a clique of
// the same order s; absent otherwise, including the all-isolated case.
inline std::optional<std::size_t> detect_theorem3_extremal(const Graph& g) {
  const auto cs = component_stats(g);
  std::vector<std::size_t> internal_edges(cs.components, 0);
  for (const auto& e : g.edges()) ++internal_edges[cs.component_id[e.u]];

  std::optional<std::size_t> s;
  for (std::size_t k = 0; k < cs.components; ++k) {
    const auto order = cs.component_size[k];
    if (order == 1) continue;
    if (internal_edges[k] != order * (order - 1) / 2) return std::nullopt;
    if (s && *s != order) return std::nullopt;
    s = order;
  }
  return s;
}

}  // namespace nee
