#pragma once

#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "turanforge/bitset.hpp"
#include "turanforge/rational.hpp"
#include "turanforge/reduced.hpp"

namespace turanforge {

/// One vertex subset Phi^{ij} of P^{ij} per index pair of its domain.
class VertexFamily {
public:
  VertexFamily() = default;

  /// Full classes on every pair of J.
  static VertexFamily full(const ReducedHypergraph& a, std::span<const int> j);

  void set(int i, int j, Bitset members) { sets_[ClassKey::of(i, j)] = std::move(members); }
  bool contains(int i, int j) const { return sets_.count(ClassKey::of(i, j)) != 0; }
  const Bitset& at(int i, int j) const;
  const Bitset& at(const ClassKey& k) const { return at(k.lo, k.hi); }
  const std::map<ClassKey, Bitset>& sets() const noexcept { return sets_; }

  friend bool operator==(const VertexFamily&, const VertexFamily&) = default;

private:
  std::map<ClassKey, Bitset> sets_;
};

/// max over ijk in J^(3) of e(Phi^ij, Phi^ik, Phi^jk) / (|P^ij||P^ik||P^jk|).
/// PreconditionError if some Phi^ij is missing or empty.
Rational hole_mu(const ReducedHypergraph& a, const VertexFamily& phi, std::span<const int> j);

/// min over ij in J^(2) of |Phi^ij| / |P^ij|, the largest valid width.
Rational hole_width(const ReducedHypergraph& a, const VertexFamily& phi, std::span<const int> j);

/// e(Phi^{ab}, Phi^{ac}, Phi^{bc}) for the sorted triple t.
std::size_t induced_edges(const ReducedHypergraph& a, const VertexFamily& phi, const Triple& t);

/// Cherries (x, y) in Phi x Phi of orientation o with |N(x, y) cap Phi^third| >= eps |P^third|,
/// one slot per triple of J.
CherrySet exceptional_cherries(const ReducedHypergraph& a, const VertexFamily& phi, std::span<const int> j,
                               const Rational& eps, Orientation o);

/// Lambda^{kk'} = N(Q^{k ell}, Q^{k' ell}) for kk' in Kstar^(2). Q must be a (K, L)-transversal.
VertexFamily q_link(const ReducedHypergraph& a, const Transversal& q, std::span<const int> k, std::span<const int> l,
                    std::span<const int> kstar, int ell);

enum class Relation { Intersecting, Disjoint, Neither };
std::string_view name(Relation r) noexcept;

/// Compares N(Q^{k ell}, Q^{k' ell}) cap N(R^{k m}, R^{k' m}) with delta |P^{kk'}| over K^(2).
/// Q lives on K x L, R on K x M; |K| >= 2.
Relation links_relation(const ReducedHypergraph& a, const Transversal& q, const Transversal& r, std::span<const int> k,
                        std::span<const int> l, std::span<const int> m, int ell, int m_index, const Rational& delta);

/// Compares |Phi^ij cap Psi^ij| with delta |P^ij| over J^(2).
Relation holes_relation(const ReducedHypergraph& a, const VertexFamily& phi, const VertexFamily& psi,
                        std::span<const int> j, const Rational& delta);

struct BadCherries {
  CherrySet left{Orientation::Left};
  CherrySet middle{Orientation::Middle};
  CherrySet right{Orientation::Right};

  const CherrySet& operator[](Orientation o) const noexcept {
    return o == Orientation::Left ? left : (o == Orientation::Middle ? middle : right);
  }
};

/// gamma-bad cherries: in Phi x Phi with |N \ Psi^third| >= gamma |P^third|, or
/// in Psi x Psi with |N \ Phi^third| >= gamma |P^third|, in each orientation.
BadCherries bad_cherries(const ReducedHypergraph& a, const VertexFamily& phi, const VertexFamily& psi,
                         std::span<const int> j, const Rational& gamma);

/// Pairwise union; both families must have the same domain.
VertexFamily family_union(const VertexFamily& phi, const VertexFamily& psi);

} // namespace turanforge
