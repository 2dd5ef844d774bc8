#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "turanforge/hypergraph.hpp"
#include "turanforge/reduced.hpp"

namespace turanforge {

/// Symmetric map from unordered vertex pairs to {0, ..., r-1}.
class PairMap {
public:
  PairMap() = default;
  /// All values start at 0.
  PairMap(int n, int r);

  int order() const noexcept { return n_; }
  int alphabet() const noexcept { return r_; }
  int at(int x, int y) const;
  void set(int x, int y, int value);
  /// Values in pair_index order.
  const std::vector<std::uint8_t>& values() const noexcept { return values_; }

  friend bool operator==(const PairMap&, const PairMap&) = default;

private:
  int n_ = 0;
  int r_ = 2;
  std::vector<std::uint8_t> values_;
};

/// xyz is an edge iff psi(xy) + psi(xz) + psi(yz) = 1 mod 3. Requires r = 3.
Hypergraph3 psi_hypergraph(const PairMap& psi);

/// Every value i.i.d. uniform, drawn in pair_index order from Rng(seed).
PairMap random_pairmap(int n, int r, std::uint64_t seed);

/// xyz is an edge iff its three pair colours are not all equal.
Hypergraph3 ramsey_hypergraph(const PairMap& phi);

/// Residue labels of one reduced vertex class.
using LabelTable = std::map<ClassKey, std::vector<int>>;

struct LabelledReduced {
  ReducedHypergraph graph;
  LabelTable labels;
};

/// Blocks of size class_size/3 labelled 0, 1, 2; P^{ij}P^{ik}P^{jk} is an edge
/// iff the labels sum to 1 mod 3. class_size must be a positive multiple of 3.
ReducedHypergraph mod3_reduced(const std::vector<int>& indices, int class_size);

/// Same edge rule with the labels returned. With a seed, labels are i.i.d.
/// uniform residues instead of equal blocks and class_size need not be a multiple of 3.
LabelledReduced mod3_reduced_labelled(const std::vector<int>& indices, int class_size,
                                      std::optional<std::uint64_t> seed = std::nullopt);

/// Label of vertex v in the block layout.
constexpr int mod3_block(int v, int class_size) noexcept { return v / (class_size / 3); }

struct Preimage {
  ReducedHypergraph graph;
  /// h[P^{ij}][v] is the source vertex of new vertex v.
  LabelTable h;
};

/// Every class gets ell vertices, each mapped uniformly into its source class;
/// edges are pulled back through h.
Preimage random_preimage(const ReducedHypergraph& a, int ell, std::uint64_t seed);

/// Every triple whose three vertices are not all the same colour is an edge.
ReducedHypergraph nonmono_reduced(const std::vector<int>& indices, const Bicolouring& phi);

/// Classes {0 = red, 1 = blue} with all non-monochromatic triples.
ReducedHypergraph nonmono_complete(const std::vector<int>& indices);
/// The colouring used by nonmono_complete, for any A with classes of size 2.
Bicolouring nonmono_colouring(const ReducedHypergraph& a);

ReducedHypergraph complete_reduced(const std::vector<int>& indices, int class_size);

} // namespace turanforge
