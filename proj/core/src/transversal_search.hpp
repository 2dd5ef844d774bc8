#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "turanforge/certificate.hpp"
#include "turanforge/reduced.hpp"

namespace turanforge::detail {

/// Backtracking over one vertex per variable, where each variable ranges over
/// a reduced vertex class. Variables are assigned in creation order. As soon as
/// two variables of an edge constraint are assigned, the third one's domain is
/// cut down to the codegree neighbourhood (forward checking), so a dead branch
/// is abandoned at the assignment that empties some later domain.
class TransversalCsp {
public:
  explicit TransversalCsp(const ReducedHypergraph& a) : a_(a) {}

  int add_var(std::size_t class_id);
  /// The triple's classes are (ij, ik, jk) in sorted index order; the three
  /// variables must live in those classes respectively.
  void add_edge(std::size_t triple_id, int var_ij, int var_ik, int var_jk);
  /// Forbids (value[first], value[second]) whenever forbidden.test(value[first], value[second]).
  void forbid(int first, int second, const BitMatrix& forbidden);

  std::size_t var_count() const noexcept { return vars_.size(); }

  /// On Found, `values` holds one vertex per variable. `nodes` is incremented per
  /// assignment tried; the search stops with BudgetExhausted once it reaches `budget`.
  SearchStatus solve(std::uint64_t budget, std::uint64_t& nodes, std::vector<int>& values);

private:
  struct Edge {
    std::size_t triple;
    std::array<int, 3> vars;
    std::size_t last_role; // position of the highest variable in vars
  };
  struct Forbid {
    int first;
    int second;
    const BitMatrix* forbidden;
  };
  struct Var {
    std::size_t class_id;
    int size;
    std::vector<std::size_t> triggers; // edges whose second-highest variable is this one
    std::vector<std::size_t> forbids;  // forbids whose last variable is this one
  };

  bool descend(std::size_t depth);
  /// Neighbourhood of the edge's two assigned variables in its last variable's class.
  BitView completion(const Edge& e) const;

  const ReducedHypergraph& a_;
  std::vector<Var> vars_;
  std::vector<Edge> edges_;
  std::vector<Forbid> forbids_;

  std::vector<int> values_;
  /// domains_[depth][v]: domain of variable v >= depth while descending at depth.
  std::vector<std::vector<Bitset>> domains_;
  std::uint64_t* nodes_ = nullptr;
  std::uint64_t budget_ = 0;
  bool exhausted_ = false;
};

} // namespace turanforge::detail
