#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "turanforge/bitset.hpp"
#include "turanforge/certificate.hpp"
#include "turanforge/rational.hpp"

namespace turanforge {

/// A 3-set {a, b, c} stored with a < b < c.
struct Triple {
  int a = 0;
  int b = 0;
  int c = 0;

  static Triple sorted(int x, int y, int z) noexcept;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Index of the unordered pair {x, y} (x != y) among the C(n,2) pairs in
/// lexicographic order (0,1), (0,2), ..., (n-2,n-1).
constexpr std::size_t pair_index(int x, int y, int n) noexcept {
  if (x > y) std::swap(x, y);
  const auto ux = static_cast<std::size_t>(x);
  const auto un = static_cast<std::size_t>(n);
  return ux * (2 * un - ux - 1) / 2 + static_cast<std::size_t>(y - x - 1);
}

class Graph {
public:
  Graph() = default;
  explicit Graph(int n);
  Graph(int n, std::span<const std::pair<int, int>> edges);
  /// Takes an n x n adjacency matrix; throws ArgumentError unless it is symmetric and loop-free.
  explicit Graph(BitMatrix adjacency);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edge_count_; }
  BitView neighbours(int v) const noexcept { return adj_.row(static_cast<std::size_t>(v)); }
  bool has_edge(int x, int y) const;
  std::vector<std::pair<int, int>> edges() const;

  /// e(X): number of edges with both ends in X.
  std::size_t edges_within(BitView subset) const;

  friend bool operator==(const Graph&, const Graph&) = default;

private:
  int n_ = 0;
  std::size_t edge_count_ = 0;
  BitMatrix adj_;
};

/// 3-uniform hypergraph on vertices 0..n-1. Immutable after construction;
/// every unordered pair {x,y} indexes the bitset of z with {x,y,z} an edge.
class Hypergraph3 {
public:
  Hypergraph3() = default;
  explicit Hypergraph3(int n);
  /// Vertices of each triple may come in any order; duplicates are merged.
  /// Throws ArgumentError on repeated or out-of-range vertices.
  Hypergraph3(int n, std::span<const Triple> edges);

  /// Edges are the triples x<y<z with pred(x, y, z).
  template <class Pred>
  static Hypergraph3 from_predicate(int n, Pred&& pred) {
    std::vector<Triple> edges;
    for (int x = 0; x < n; ++x)
      for (int y = x + 1; y < n; ++y)
        for (int z = y + 1; z < n; ++z)
          if (pred(x, y, z)) edges.push_back({x, y, z});
    return Hypergraph3(n, std::move(edges), sorted_unique_tag{});
  }

  static Hypergraph3 complete(int n);

  int order() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  /// Lexicographically sorted.
  const std::vector<Triple>& edges() const noexcept { return edges_; }

  bool has_edge(int x, int y, int z) const;
  /// Bitset over V of the z completing {x, y} to an edge.
  BitView pair_neighbours(int x, int y) const;

  friend bool operator==(const Hypergraph3& a, const Hypergraph3& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  struct sorted_unique_tag {};
  Hypergraph3(int n, std::vector<Triple> edges, sorted_unique_tag);
  void index_edges();

  int n_ = 0;
  std::vector<Triple> edges_;
  BitMatrix pair_adj_;
};

/// L_H(x): graph on V(H) with edge yz iff xyz in E(H). x is isolated.
Graph link_graph(const Hypergraph3& h, int x);

/// Searches for an l-subset spanning all C(l,3) triples. The witness, if any,
/// is the lexicographically first such subset (sorted ascending).
SearchResult<std::vector<int>> contains_clique(const Hypergraph3& h, int ell);

/// |E| / C(n,3). Throws ArgumentError for n < 3.
Rational edge_density(const Hypergraph3& h);

/// Sub-hypergraph induced on `subset`, relabelled 0..|S|-1 in increasing vertex order.
Hypergraph3 induced(const Hypergraph3& h, std::span<const int> subset);

} // namespace turanforge
