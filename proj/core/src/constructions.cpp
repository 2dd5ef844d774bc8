#include "turanforge/constructions.hpp"

#include <string>

#include "turanforge/errors.hpp"
#include "turanforge/rng.hpp"

namespace turanforge {

PairMap::PairMap(int n, int r) : n_(n), r_(r) {
  if (n < 0) throw ArgumentError("negative vertex count");
  if (r < 1 || r > 255) throw ArgumentError("alphabet size must lie in 1..255");
  values_.assign(static_cast<std::size_t>(binomial(n, 2)), 0);
}

int PairMap::at(int x, int y) const {
  if (x < 0 || y < 0 || x >= n_ || y >= n_ || x == y)
    throw ArgumentError("pair {" + std::to_string(x) + "," + std::to_string(y) + "} invalid for n=" + std::to_string(n_));
  return values_[pair_index(x, y, n_)];
}

void PairMap::set(int x, int y, int value) {
  if (x < 0 || y < 0 || x >= n_ || y >= n_ || x == y)
    throw ArgumentError("pair {" + std::to_string(x) + "," + std::to_string(y) + "} invalid for n=" + std::to_string(n_));
  if (value < 0 || value >= r_)
    throw ArgumentError("value " + std::to_string(value) + " outside alphabet of size " + std::to_string(r_));
  values_[pair_index(x, y, n_)] = static_cast<std::uint8_t>(value);
}

Hypergraph3 psi_hypergraph(const PairMap& psi) {
  if (psi.alphabet() != 3) throw ArgumentError("psi must take values in Z/3Z");
  const int n = psi.order();
  const auto& v = psi.values();
  return Hypergraph3::from_predicate(n, [&](int x, int y, int z) {
    return (v[pair_index(x, y, n)] + v[pair_index(x, z, n)] + v[pair_index(y, z, n)]) % 3 == 1;
  });
}

PairMap random_pairmap(int n, int r, std::uint64_t seed) {
  if (n < 1) throw ArgumentError("random_pairmap needs n >= 1");
  if (r < 2) throw ArgumentError("random_pairmap needs r >= 2");
  PairMap m(n, r);
  Rng rng(seed);
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y) m.set(x, y, static_cast<int>(rng.below(static_cast<std::uint64_t>(r))));
  return m;
}

Hypergraph3 ramsey_hypergraph(const PairMap& phi) {
  const int n = phi.order();
  const auto& v = phi.values();
  return Hypergraph3::from_predicate(n, [&](int x, int y, int z) {
    const auto a = v[pair_index(x, y, n)];
    return !(a == v[pair_index(x, z, n)] && a == v[pair_index(y, z, n)]);
  });
}

namespace {

ReducedHypergraph residue_rule(const std::vector<int>& indices, int class_size, const LabelTable& labels) {
  ReducedHypergraph::Builder b(indices, class_size);
  const auto& idx = b.indices();
  const std::size_t m = idx.size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r) {
        const auto& lij = labels.at({idx[p], idx[q]});
        const auto& lik = labels.at({idx[p], idx[r]});
        const auto& ljk = labels.at({idx[q], idx[r]});
        for (int a = 0; a < class_size; ++a)
          for (int c = 0; c < class_size; ++c)
            for (int d = 0; d < class_size; ++d)
              if ((lij[static_cast<std::size_t>(a)] + lik[static_cast<std::size_t>(c)] +
                   ljk[static_cast<std::size_t>(d)]) % 3 == 1)
                b.add_edge(idx[p], idx[q], idx[r], a, c, d);
      }
  return b.build();
}

void check_index_count(const std::vector<int>& indices) {
  if (indices.size() < 3) throw ArgumentError("mod3_reduced needs at least 3 indices");
}

} // namespace

ReducedHypergraph mod3_reduced(const std::vector<int>& indices, int class_size) {
  return mod3_reduced_labelled(indices, class_size).graph;
}

LabelledReduced mod3_reduced_labelled(const std::vector<int>& indices, int class_size,
                                      std::optional<std::uint64_t> seed) {
  check_index_count(indices);
  if (class_size < 1) throw ArgumentError("class_size must be positive");
  if (!seed && (class_size < 3 || class_size % 3 != 0))
    throw ArgumentError("class_size must be a positive multiple of 3, got " + std::to_string(class_size));
  // Builder sorts and validates the index labels.
  const ReducedHypergraph::Builder shape(indices, class_size);
  LabelTable labels;
  std::optional<Rng> rng;
  if (seed) rng.emplace(*seed);
  const auto& idx = shape.indices();
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q) {
      auto& l = labels[{idx[p], idx[q]}];
      l.resize(static_cast<std::size_t>(class_size));
      for (int v = 0; v < class_size; ++v)
        l[static_cast<std::size_t>(v)] = rng ? static_cast<int>(rng->below(3)) : mod3_block(v, class_size);
    }
  LabelledReduced out{residue_rule(indices, class_size, labels), std::move(labels)};
  return out;
}

Preimage random_preimage(const ReducedHypergraph& a, int ell, std::uint64_t seed) {
  if (ell < 1) throw ArgumentError("random_preimage needs l >= 1");
  for (const ClassKey& k : a.classes())
    if (a.class_size(k) < 1) throw ArgumentError("random_preimage: empty source class");
  Rng rng(seed);
  Preimage out;
  for (const ClassKey& k : a.classes()) {
    auto& h = out.h[k];
    h.resize(static_cast<std::size_t>(ell));
    for (int& v : h) v = static_cast<int>(rng.below(static_cast<std::uint64_t>(a.class_size(k))));
  }
  ReducedHypergraph::Builder b(a.indices(), ell);
  for (const Triple& t : a.triples()) {
    const auto& hij = out.h.at({t.a, t.b});
    const auto& hik = out.h.at({t.a, t.c});
    const auto& hjk = out.h.at({t.b, t.c});
    for (int x = 0; x < ell; ++x)
      for (int y = 0; y < ell; ++y) {
        const BitView n = a.cherry_neighbours(t, Orientation::Left, hij[static_cast<std::size_t>(x)],
                                              hik[static_cast<std::size_t>(y)]);
        if (n.none()) continue;
        for (int z = 0; z < ell; ++z)
          if (n.test(static_cast<std::size_t>(hjk[static_cast<std::size_t>(z)]))) b.add_edge(t.a, t.b, t.c, x, y, z);
      }
  }
  out.graph = b.build();
  return out;
}

ReducedHypergraph nonmono_reduced(const std::vector<int>& indices, const Bicolouring& phi) {
  std::map<ClassKey, int> sizes;
  for (const auto& [k, cols] : phi.classes()) sizes[k] = static_cast<int>(cols.size());
  ReducedHypergraph::Builder b(indices, sizes);
  const auto& idx = b.indices();
  const std::size_t m = idx.size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r) {
        const ClassKey ij{idx[p], idx[q]}, ik{idx[p], idx[r]}, jk{idx[q], idx[r]};
        for (int a = 0; a < sizes[ij]; ++a)
          for (int c = 0; c < sizes[ik]; ++c)
            for (int d = 0; d < sizes[jk]; ++d) {
              const Colour ca = phi.at(ij, a);
              if (!(ca == phi.at(ik, c) && ca == phi.at(jk, d))) b.add_edge(idx[p], idx[q], idx[r], a, c, d);
            }
      }
  return b.build();
}

Bicolouring nonmono_colouring(const ReducedHypergraph& a) {
  Bicolouring phi(a);
  for (const ClassKey& k : a.classes()) {
    if (a.class_size(k) != 2) throw ArgumentError("nonmono_colouring needs classes of size 2");
    phi.set(k.lo, k.hi, 1, Colour::Blue);
  }
  return phi;
}

ReducedHypergraph nonmono_complete(const std::vector<int>& indices) {
  const ReducedHypergraph shape = ReducedHypergraph::Builder(indices, 2).build();
  return nonmono_reduced(indices, nonmono_colouring(shape));
}

ReducedHypergraph complete_reduced(const std::vector<int>& indices, int class_size) {
  ReducedHypergraph::Builder b(indices, class_size);
  const auto& idx = b.indices();
  const std::size_t m = idx.size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r)
        for (int a = 0; a < class_size; ++a)
          for (int c = 0; c < class_size; ++c)
            for (int d = 0; d < class_size; ++d) b.add_edge(idx[p], idx[q], idx[r], a, c, d);
  return b.build();
}

} // namespace turanforge
