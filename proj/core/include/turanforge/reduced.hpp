#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "turanforge/bitset.hpp"
#include "turanforge/certificate.hpp"
#include "turanforge/hypergraph.hpp"
#include "turanforge/rational.hpp"

namespace turanforge {

/// Unordered index pair {i, j}, stored lo < hi. Names the vertex class P^{ij}.
struct ClassKey {
  int lo = 0;
  int hi = 0;

  static ClassKey of(int i, int j);
  friend auto operator<=>(const ClassKey&, const ClassKey&) = default;
};

/// One reduced vertex: local id `v` inside the class P^{lo hi}.
struct VertexRef {
  ClassKey cls;
  int v = 0;
};

/// For indices i<j<k the cherry orientations are
///   Left   (P^{ij}, P^{ik}) -> third class P^{jk}
///   Middle (P^{ij}, P^{jk}) -> third class P^{ik}
///   Right  (P^{ik}, P^{jk}) -> third class P^{ij}
enum class Orientation { Left, Middle, Right };
inline constexpr std::array<Orientation, 3> kOrientations{Orientation::Left, Orientation::Middle, Orientation::Right};

std::string_view name(Orientation o) noexcept;

/// The two cherry classes and the third class of `o` on the index triple t (t.a<t.b<t.c).
struct CherryClasses {
  ClassKey first;
  ClassKey second;
  ClassKey third;
};
CherryClasses cherry_classes(const Triple& t, Orientation o) noexcept;

/// Reduced hypergraph: index set I, classes P^{ij} for every index pair and a
/// tripartite constituent for every index triple. Immutable once built; each
/// constituent is indexed in all three cherry orientations.
class ReducedHypergraph {
public:
  class Builder {
  public:
    Builder() = default;
    /// Every class gets `class_size` vertices. Indices are sorted and must be distinct.
    Builder(std::vector<int> indices, int class_size);
    Builder(std::vector<int> indices, const std::map<ClassKey, int>& class_sizes);

    /// a in P^{ij}, b in P^{ik}, c in P^{jk}; i, j, k may come in any order.
    void add_edge(int i, int j, int k, int a, int b, int c);
    void remove_edge(int i, int j, int k, int a, int b, int c);
    void set_edge(int i, int j, int k, int a, int b, int c, bool present);
    bool has_edge(int i, int j, int k, int a, int b, int c) const;

    const std::vector<int>& indices() const noexcept { return indices_; }
    int class_size(int i, int j) const;

    ReducedHypergraph build() const;

  private:
    friend class ReducedHypergraph;
    struct Slot {
      std::size_t triple;
      std::size_t row;
      std::size_t col;
    };
    Slot locate(int i, int j, int k, int a, int b, int c) const;
    void init();

    std::vector<int> indices_;
    std::vector<int> sizes_;            // by class id
    std::vector<BitMatrix> left_;       // by triple id
  };

  ReducedHypergraph() = default;

  const std::vector<int>& indices() const noexcept { return indices_; }
  int index_count() const noexcept { return static_cast<int>(indices_.size()); }
  bool has_index(int label) const noexcept;

  int class_size(int i, int j) const;
  int class_size(ClassKey k) const { return class_size(k.lo, k.hi); }
  std::vector<ClassKey> classes() const;
  /// All index triples in lexicographic order.
  std::vector<Triple> triples() const;
  std::size_t vertex_count() const noexcept;

  /// a in P^{ij}, b in P^{ik}, c in P^{jk}; i, j, k may come in any order.
  bool has_edge(int i, int j, int k, int a, int b, int c) const;

  /// Neighbourhood of the cherry (x, y) in orientation `o` of triple t, as a bitset over the third class.
  BitView cherry_neighbours(const Triple& t, Orientation o, int x, int y) const;

  /// N(p, q): vertices of the third class completing p, q to an edge.
  /// p and q must lie in classes sharing exactly one index.
  BitView neighbours(const VertexRef& p, const VertexRef& q) const;

  std::size_t edge_count(const Triple& t) const;
  std::size_t edge_count() const;
  /// (a, b, c) with a in P^{ij}, b in P^{ik}, c in P^{jk} for t = ijk, lexicographic.
  std::vector<std::array<int, 3>> edges(const Triple& t) const;

  Builder to_builder() const;

  friend bool operator==(const ReducedHypergraph& a, const ReducedHypergraph& b) {
    return a.indices_ == b.indices_ && a.sizes_ == b.sizes_ && a.left_ == b.left_;
  }

  // Position-level access used by the search engines.
  int position(int label) const;
  std::size_t class_id(int pi, int pj) const noexcept;
  std::size_t triple_id(int pi, int pj, int pk) const noexcept;
  int class_size_at(std::size_t class_id) const noexcept { return sizes_[class_id]; }
  const BitMatrix& table(std::size_t triple_id, Orientation o) const noexcept;

private:
  std::vector<int> indices_;
  std::vector<int> sizes_;
  std::vector<BitMatrix> left_;
  std::vector<BitMatrix> middle_;
  std::vector<BitMatrix> right_;
};

/// One vertex Q^{ij} per class of its domain. The domain is either J^{(2)}
/// or K x L; both are represented by the set of classes present.
class Transversal {
public:
  Transversal() = default;

  void set(int i, int j, int v) { entries_[ClassKey::of(i, j)] = v; }
  bool contains(int i, int j) const { return entries_.count(ClassKey::of(i, j)) != 0; }
  int at(int i, int j) const;
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<ClassKey, int>& entries() const noexcept { return entries_; }

  bool covers_pairs(std::span<const int> indices) const;
  bool covers_cross(std::span<const int> k, std::span<const int> l) const;

  friend bool operator==(const Transversal&, const Transversal&) = default;

private:
  std::map<ClassKey, int> entries_;
};

/// Per-triple sets of oriented cherries (x, y); x from the first cherry class, y from the second.
class CherrySet {
public:
  explicit CherrySet(Orientation o = Orientation::Left) : orientation_(o) {}

  Orientation orientation() const noexcept { return orientation_; }

  /// Creates the (empty) slot for t sized from A's classes if needed.
  void insert(const ReducedHypergraph& a, const Triple& t, int x, int y);
  void set_slot(const Triple& t, BitMatrix members);
  bool contains(const Triple& t, int x, int y) const;
  std::size_t size(const Triple& t) const;
  std::size_t size() const;
  const std::map<Triple, BitMatrix>& slots() const noexcept { return slots_; }

  /// Throws ArgumentError unless every slot names a triple of A with matching class sizes.
  void check_against(const ReducedHypergraph& a) const;

private:
  Orientation orientation_;
  std::map<Triple, BitMatrix> slots_;
};

enum class Colour : std::uint8_t { Red, Blue };

inline constexpr Colour opposite(Colour c) noexcept { return c == Colour::Red ? Colour::Blue : Colour::Red; }

class Bicolouring {
public:
  Bicolouring() = default;
  explicit Bicolouring(const ReducedHypergraph& a, Colour fill = Colour::Red);

  Colour at(const ClassKey& k, int v) const;
  Colour at(const VertexRef& p) const { return at(p.cls, p.v); }
  void set(int i, int j, int v, Colour c);
  /// Vertices of P^{ij} with colour c.
  Bitset members(const ClassKey& k, Colour c) const;
  /// Swaps red and blue everywhere.
  Bicolouring swapped() const;
  const std::map<ClassKey, std::vector<Colour>>& classes() const noexcept { return colours_; }

  friend bool operator==(const Bicolouring&, const Bicolouring&) = default;

private:
  std::map<ClassKey, std::vector<Colour>> colours_;
};

// ---------------------------------------------------------------- operations

struct Codegree {
  ClassKey target;
  Bitset neighbours;
  std::size_t count = 0;
};

/// Exact codegree of u, v (classes sharing one index). Throws ArgumentError otherwise.
Codegree codegree(const ReducedHypergraph& a, const VertexRef& u, const VertexRef& v);

struct CodegreeMinimum {
  Rational value{1};
  /// Minimum restricted to each orientation (Left, Middle, Right).
  std::array<Rational, 3> per_orientation{Rational(1), Rational(1), Rational(1)};
  /// Argmin: triple, orientation and the cherry attaining `value`.
  Triple triple{};
  Orientation orientation = Orientation::Left;
  int x = 0;
  int y = 0;
  bool has_witness = false;
};

/// Minimum of codegree / |third class| over all triples, orientations and cherries.
/// A is (d, ee)-dense iff value >= d. Throws ArgumentError on an empty class.
CodegreeMinimum min_ee_density(const ReducedHypergraph& a);

/// min over triples of e(A^{ijk}) / (|P^{ij}||P^{ik}||P^{jk}|); 1 if there are no triples.
Rational vvv_min_density(const ReducedHypergraph& a);
/// Tridense variant over the triples in K x L x M (pairwise disjoint index sets).
Rational vvv_min_density(const ReducedHypergraph& a, std::span<const int> k, std::span<const int> l,
                         std::span<const int> m);

struct CliqueSupport {
  std::vector<int> indices;
  Transversal transversal;
};

/// Lexicographically first l-subset J and per-class vertex choice with every
/// aligned triple an edge. Budget counts search nodes.
SearchResult<CliqueSupport> supports_clique(const ReducedHypergraph& a, int ell, std::uint64_t budget = kUnlimited);

/// Re-checks a clique support witness from scratch.
bool is_clique_support(const ReducedHypergraph& a, const CliqueSupport& w);

enum class Tristate { True, False, Indeterminate };

struct WickedReport {
  Tristate wicked = Tristate::Indeterminate;
  Rational min_density;
  SearchStatus k5_support = SearchStatus::BudgetExhausted;
};

/// (1/3 + eps, ee)-dense and not supporting K5. Indeterminate when the
/// density test passes but the support search runs out of budget.
WickedReport is_wicked(const ReducedHypergraph& a, const Rational& eps, std::uint64_t budget = kUnlimited);

struct InhabitedTriple {
  Transversal q;
  Transversal r;
  Transversal s;
};

/// Transversals Q, R, S on J with Q^{ij} R^{ik} S^{jk} an edge for all i<j<k
/// in J, each avoiding every supplied cherry set.
SearchResult<InhabitedTriple> find_inhabited_triple(const ReducedHypergraph& a, std::span<const int> j,
                                                    std::span<const CherrySet> avoid = {},
                                                    std::uint64_t budget = kUnlimited);

/// Partite form: Q on K x L, R on K x M, S on L x M with Q^{kl} R^{km} S^{lm}
/// an edge for every (k, l, m).
SearchResult<InhabitedTriple> find_inhabited_triple(const ReducedHypergraph& a, std::span<const int> k,
                                                    std::span<const int> l, std::span<const int> m,
                                                    std::span<const CherrySet> avoid = {},
                                                    std::uint64_t budget = kUnlimited);

/// True iff, for every triple where T holds both cherry classes, T's selected
/// cherry is not in C.
bool avoids(const Transversal& t, const CherrySet& c);

/// Every class has both colours and no edge is monochromatic.
bool validate_bicolouring(const ReducedHypergraph& a, const Bicolouring& phi);

/// Minimum monochromatic codegree density: min over triples, orientations and
/// same-coloured cherries of codegree / |third class|. 1 when no such cherry exists.
Rational tau2(const ReducedHypergraph& a, const Bicolouring& phi);

} // namespace turanforge
