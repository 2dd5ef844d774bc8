#include "turanforge/hypergraph.hpp"

#include <algorithm>
#include <string>

#include "turanforge/errors.hpp"

namespace turanforge {
namespace {

void check_vertex(int v, int n) {
  if (v < 0 || v >= n)
    throw ArgumentError("vertex " + std::to_string(v) + " out of range for n=" + std::to_string(n));
}

} // namespace

Triple Triple::sorted(int x, int y, int z) noexcept {
  if (x > y) std::swap(x, y);
  if (y > z) std::swap(y, z);
  if (x > y) std::swap(x, y);
  return {x, y, z};
}

// ---------------------------------------------------------------- Graph

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), static_cast<std::size_t>(n)) {
  if (n < 0) throw ArgumentError("negative vertex count");
}

Graph::Graph(int n, std::span<const std::pair<int, int>> edges) : Graph(n) {
  for (auto [x, y] : edges) {
    check_vertex(x, n);
    check_vertex(y, n);
    if (x == y) throw ArgumentError("loop at vertex " + std::to_string(x));
    adj_.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
    adj_.set(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
  }
  edge_count_ = adj_.count() / 2;
}

Graph::Graph(BitMatrix adjacency) : n_(static_cast<int>(adjacency.rows())), adj_(std::move(adjacency)) {
  if (adj_.rows() != adj_.cols()) throw ArgumentError("adjacency matrix must be square");
  const auto n = adj_.rows();
  for (std::size_t x = 0; x < n; ++x) {
    if (adj_.test(x, x)) throw ArgumentError("loop at vertex " + std::to_string(x));
    adj_.row(x).for_each([&](std::size_t y) {
      if (!adj_.test(y, x)) throw ArgumentError("adjacency matrix is not symmetric");
    });
  }
  edge_count_ = adj_.count() / 2;
}

bool Graph::has_edge(int x, int y) const {
  check_vertex(x, n_);
  check_vertex(y, n_);
  return adj_.test(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
}

std::vector<std::pair<int, int>> Graph::edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edge_count_);
  for (int x = 0; x < n_; ++x)
    neighbours(x).for_each([&](std::size_t y) {
      if (static_cast<int>(y) > x) out.emplace_back(x, static_cast<int>(y));
    });
  return out;
}

std::size_t Graph::edges_within(BitView subset) const {
  if (subset.size() != static_cast<std::size_t>(n_)) throw ArgumentError("subset size mismatch");
  std::size_t twice = 0;
  subset.for_each([&](std::size_t v) { twice += intersect_count(adj_.row(v), subset); });
  return twice / 2;
}

// ---------------------------------------------------------------- Hypergraph3

Hypergraph3::Hypergraph3(int n) : Hypergraph3(n, {}, sorted_unique_tag{}) {}

Hypergraph3::Hypergraph3(int n, std::span<const Triple> edges) {
  if (n < 0) throw ArgumentError("negative vertex count");
  std::vector<Triple> normalised;
  normalised.reserve(edges.size());
  for (const Triple& t : edges) {
    check_vertex(t.a, n);
    check_vertex(t.b, n);
    check_vertex(t.c, n);
    if (t.a == t.b || t.a == t.c || t.b == t.c)
      throw ArgumentError("edge {" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) +
                          "} repeats a vertex");
    normalised.push_back(Triple::sorted(t.a, t.b, t.c));
  }
  std::sort(normalised.begin(), normalised.end());
  normalised.erase(std::unique(normalised.begin(), normalised.end()), normalised.end());
  n_ = n;
  edges_ = std::move(normalised);
  index_edges();
}

Hypergraph3::Hypergraph3(int n, std::vector<Triple> edges, sorted_unique_tag) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw ArgumentError("negative vertex count");
  index_edges();
}

void Hypergraph3::index_edges() {
  const auto pairs = static_cast<std::size_t>(binomial(n_, 2));
  pair_adj_ = BitMatrix(pairs, static_cast<std::size_t>(n_));
  for (const Triple& t : edges_) {
    pair_adj_.set(pair_index(t.a, t.b, n_), static_cast<std::size_t>(t.c));
    pair_adj_.set(pair_index(t.a, t.c, n_), static_cast<std::size_t>(t.b));
    pair_adj_.set(pair_index(t.b, t.c, n_), static_cast<std::size_t>(t.a));
  }
}

Hypergraph3 Hypergraph3::complete(int n) {
  return from_predicate(n, [](int, int, int) { return true; });
}

bool Hypergraph3::has_edge(int x, int y, int z) const {
  check_vertex(x, n_);
  check_vertex(y, n_);
  check_vertex(z, n_);
  if (x == y || x == z || y == z) return false;
  return pair_adj_.test(pair_index(x, y, n_), static_cast<std::size_t>(z));
}

BitView Hypergraph3::pair_neighbours(int x, int y) const {
  check_vertex(x, n_);
  check_vertex(y, n_);
  if (x == y) throw ArgumentError("pair_neighbours needs two distinct vertices");
  return pair_adj_.row(pair_index(x, y, n_));
}

// ---------------------------------------------------------------- operations

Graph link_graph(const Hypergraph3& h, int x) {
  check_vertex(x, h.order());
  const auto n = static_cast<std::size_t>(h.order());
  BitMatrix adj(n, n);
  for (int y = 0; y < h.order(); ++y) {
    if (y == x) continue;
    h.pair_neighbours(x, y).for_each([&](std::size_t z) { adj.set(static_cast<std::size_t>(y), z); });
  }
  return Graph(std::move(adj));
}

namespace {

// Extends `chosen` through candidate sets; every candidate in `cand` already forms
// an edge with every pair of chosen vertices and exceeds the last chosen vertex.
bool extend_clique(const Hypergraph3& h, int ell, std::vector<int>& chosen, const Bitset& cand, std::uint64_t& nodes) {
  if (static_cast<int>(chosen.size()) == ell) return true;
  const auto need = static_cast<std::size_t>(ell) - chosen.size();
  if (cand.count() < need) return false;
  for (std::size_t v = cand.first(); v < cand.size(); v = cand.next(v + 1)) {
    ++nodes;
    const int vi = static_cast<int>(v);
    Bitset next = cand;
    // Drop v and everything before it (lexicographic order).
    for (std::size_t u = next.first(); u <= v && u < next.size(); u = next.next(u + 1)) next.reset(u);
    for (int u : chosen) next &= h.pair_neighbours(u, vi);
    chosen.push_back(vi);
    if (static_cast<int>(chosen.size()) == ell || next.count() >= need - 1) {
      if (extend_clique(h, ell, chosen, next, nodes)) return true;
    }
    chosen.pop_back();
  }
  return false;
}

} // namespace

SearchResult<std::vector<int>> contains_clique(const Hypergraph3& h, int ell) {
  const int n = h.order();
  if (ell < 3 || ell > n)
    throw ArgumentError("clique size must satisfy 3 <= l <= n (l=" + std::to_string(ell) + ", n=" + std::to_string(n) +
                        ")");
  SearchResult<std::vector<int>> result;
  const auto un = static_cast<std::size_t>(n);
  std::vector<int> chosen;
  chosen.reserve(static_cast<std::size_t>(ell));
  for (int x = 0; x < n; ++x) {
    for (int y = x + 1; y < n; ++y) {
      ++result.nodes;
      Bitset cand(h.pair_neighbours(x, y));
      for (std::size_t u = cand.first(); u <= static_cast<std::size_t>(y) && u < un; u = cand.next(u + 1))
        cand.reset(u);
      if (cand.count() < static_cast<std::size_t>(ell - 2)) continue;
      chosen = {x, y};
      if (extend_clique(h, ell, chosen, cand, result.nodes)) {
        result.status = SearchStatus::Found;
        result.witness = chosen;
        return result;
      }
    }
  }
  result.status = SearchStatus::Absent;
  return result;
}

Rational edge_density(const Hypergraph3& h) {
  if (h.order() < 3) throw ArgumentError("edge density needs n >= 3");
  return Rational(static_cast<std::int64_t>(h.edge_count()), binomial(h.order(), 3));
}

Hypergraph3 induced(const Hypergraph3& h, std::span<const int> subset) {
  std::vector<int> s(subset.begin(), subset.end());
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) throw ArgumentError("induced: repeated vertex in subset");
  for (int v : s) check_vertex(v, h.order());
  const int m = static_cast<int>(s.size());
  return Hypergraph3::from_predicate(m, [&](int a, int b, int c) { return h.has_edge(s[a], s[b], s[c]); });
}

} // namespace turanforge
