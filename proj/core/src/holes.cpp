#include "turanforge/holes.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "turanforge/errors.hpp"

namespace turanforge {
namespace {

std::string class_name(const ClassKey& k) { return "P^{" + std::to_string(k.lo) + "," + std::to_string(k.hi) + "}"; }

std::vector<int> index_set(const ReducedHypergraph& a, std::span<const int> j, std::size_t min_size, const char* what) {
  std::vector<int> idx(j.begin(), j.end());
  std::sort(idx.begin(), idx.end());
  if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
    throw ArgumentError(std::string(what) + ": repeated index");
  for (int x : idx)
    if (!a.has_index(x)) throw ArgumentError(std::string(what) + ": unknown index " + std::to_string(x));
  if (idx.size() < min_size)
    throw ArgumentError(std::string(what) + ": needs at least " + std::to_string(min_size) + " indices");
  return idx;
}

std::vector<Triple> triples_of(const std::vector<int>& idx) {
  std::vector<Triple> out;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q)
      for (std::size_t r = q + 1; r < idx.size(); ++r) out.push_back({idx[p], idx[q], idx[r]});
  return out;
}

std::vector<ClassKey> pairs_of(const std::vector<int>& idx) {
  std::vector<ClassKey> out;
  for (std::size_t p = 0; p < idx.size(); ++p)
    for (std::size_t q = p + 1; q < idx.size(); ++q) out.push_back({idx[p], idx[q]});
  return out;
}

// Checks that the family covers J^(2) with correctly sized sets; optionally that none is empty.
void check_family(const ReducedHypergraph& a, const VertexFamily& phi, const std::vector<int>& idx, bool nonempty) {
  for (const ClassKey& k : pairs_of(idx)) {
    if (!phi.contains(k.lo, k.hi)) throw PreconditionError("family has no set on " + class_name(k));
    const Bitset& s = phi.at(k);
    if (s.size() != static_cast<std::size_t>(a.class_size(k)))
      throw ArgumentError("family set on " + class_name(k) + " does not match the class size");
    if (nonempty && s.none()) throw PreconditionError("hole has an empty set on " + class_name(k));
  }
}

std::int64_t class_product(const ReducedHypergraph& a, const Triple& t) {
  return static_cast<std::int64_t>(a.class_size(t.a, t.b)) * a.class_size(t.a, t.c) * a.class_size(t.b, t.c);
}

std::size_t triple_id(const ReducedHypergraph& a, const Triple& t) {
  return a.triple_id(a.position(t.a), a.position(t.b), a.position(t.c));
}

// Calls f(x, y, neighbourhood) for every cherry in first x second of orientation o on t.
template <class F>
void for_cherries(const ReducedHypergraph& a, const Triple& t, Orientation o, BitView first, BitView second, F&& f) {
  const BitMatrix& tab = a.table(triple_id(a, t), o);
  const std::size_t s2 = second.size();
  first.for_each([&](std::size_t x) { second.for_each([&](std::size_t y) { f(x, y, tab.row(x * s2 + y)); }); });
}

BitMatrix empty_slot(const ReducedHypergraph& a, const CherryClasses& cc) {
  return BitMatrix(static_cast<std::size_t>(a.class_size(cc.first)), static_cast<std::size_t>(a.class_size(cc.second)));
}

void require_positive(const Rational& r, const char* what) {
  if (r <= 0) throw ArgumentError(std::string(what) + " must be positive");
}

} // namespace

VertexFamily VertexFamily::full(const ReducedHypergraph& a, std::span<const int> j) {
  VertexFamily f;
  for (const ClassKey& k : pairs_of(index_set(a, j, 0, "full family")))
    f.set(k.lo, k.hi, Bitset::full(static_cast<std::size_t>(a.class_size(k))));
  return f;
}

const Bitset& VertexFamily::at(int i, int j) const {
  auto it = sets_.find(ClassKey::of(i, j));
  if (it == sets_.end()) throw ArgumentError("family has no set on " + class_name(ClassKey::of(i, j)));
  return it->second;
}

std::size_t induced_edges(const ReducedHypergraph& a, const VertexFamily& phi, const Triple& t) {
  std::size_t total = 0;
  const Bitset& third = phi.at(t.b, t.c);
  for_cherries(a, t, Orientation::Left, phi.at(t.a, t.b), phi.at(t.a, t.c),
               [&](std::size_t, std::size_t, BitView n) { total += intersect_count(n, third); });
  return total;
}

Rational hole_mu(const ReducedHypergraph& a, const VertexFamily& phi, std::span<const int> j) {
  const auto idx = index_set(a, j, 2, "hole");
  check_family(a, phi, idx, true);
  Rational mu(0);
  for (const Triple& t : triples_of(idx))
    mu = std::max(mu, Rational(static_cast<std::int64_t>(induced_edges(a, phi, t)), class_product(a, t)));
  return mu;
}

Rational hole_width(const ReducedHypergraph& a, const VertexFamily& phi, std::span<const int> j) {
  const auto idx = index_set(a, j, 2, "hole");
  check_family(a, phi, idx, true);
  Rational w(1);
  for (const ClassKey& k : pairs_of(idx))
    w = std::min(w, Rational(static_cast<std::int64_t>(phi.at(k).count()), a.class_size(k)));
  return w;
}

CherrySet exceptional_cherries(const ReducedHypergraph& a, const VertexFamily& phi, std::span<const int> j,
                               const Rational& eps, Orientation o) {
  require_positive(eps, "eps");
  const auto idx = index_set(a, j, 3, "exceptional cherries");
  check_family(a, phi, idx, false);
  CherrySet out(o);
  for (const Triple& t : triples_of(idx)) {
    const CherryClasses cc = cherry_classes(t, o);
    const Bitset& third = phi.at(cc.third);
    const Rational need = eps * Rational(a.class_size(cc.third));
    BitMatrix slot = empty_slot(a, cc);
    for_cherries(a, t, o, phi.at(cc.first), phi.at(cc.second), [&](std::size_t x, std::size_t y, BitView n) {
      if (Rational(static_cast<std::int64_t>(intersect_count(n, third))) >= need) slot.set(x, y);
    });
    out.set_slot(t, std::move(slot));
  }
  return out;
}

VertexFamily q_link(const ReducedHypergraph& a, const Transversal& q, std::span<const int> k, std::span<const int> l,
                    std::span<const int> kstar, int ell) {
  const auto kk = index_set(a, k, 1, "q_link K");
  const auto ll = index_set(a, l, 1, "q_link L");
  for (int x : kk)
    if (std::binary_search(ll.begin(), ll.end(), x)) throw ArgumentError("q_link: K and L must be disjoint");
  if (!std::binary_search(ll.begin(), ll.end(), ell)) throw ArgumentError("q_link: l is not in L");
  if (!q.covers_cross(kk, ll)) throw ArgumentError("q_link: Q is not total on K x L");
  const auto ks = index_set(a, kstar, 0, "q_link K*");
  for (int x : ks)
    if (!std::binary_search(kk.begin(), kk.end(), x)) throw ArgumentError("q_link: K* must be a subset of K");
  VertexFamily out;
  for (const ClassKey& c : pairs_of(ks)) {
    const VertexRef u{ClassKey::of(c.lo, ell), q.at(c.lo, ell)};
    const VertexRef v{ClassKey::of(c.hi, ell), q.at(c.hi, ell)};
    out.set(c.lo, c.hi, Bitset(a.neighbours(u, v)));
  }
  return out;
}

std::string_view name(Relation r) noexcept {
  switch (r) {
  case Relation::Intersecting: return "INTERSECTING";
  case Relation::Disjoint: return "DISJOINT";
  case Relation::Neither: return "NEITHER";
  }
  return "?";
}

namespace {

template <class Holds>
Relation trichotomy(const std::vector<ClassKey>& pairs, Holds&& holds) {
  std::size_t hits = 0;
  for (const ClassKey& k : pairs) hits += holds(k) ? 1 : 0;
  if (hits == pairs.size()) return Relation::Intersecting;
  if (hits == 0) return Relation::Disjoint;
  return Relation::Neither;
}

} // namespace

Relation links_relation(const ReducedHypergraph& a, const Transversal& q, const Transversal& r, std::span<const int> k,
                        std::span<const int> l, std::span<const int> m, int ell, int m_index, const Rational& delta) {
  require_positive(delta, "delta");
  const auto kk = index_set(a, k, 2, "links K");
  const auto ll = index_set(a, l, 1, "links L");
  const auto mm = index_set(a, m, 1, "links M");
  for (int x : kk)
    if (std::binary_search(ll.begin(), ll.end(), x) || std::binary_search(mm.begin(), mm.end(), x))
      throw ArgumentError("links: K must be disjoint from L and M");
  const VertexFamily lq = q_link(a, q, kk, ll, kk, ell);
  const VertexFamily lr = q_link(a, r, kk, mm, kk, m_index);
  return trichotomy(pairs_of(kk), [&](const ClassKey& c) {
    return Rational(static_cast<std::int64_t>(intersect_count(lq.at(c), lr.at(c)))) >= delta * Rational(a.class_size(c));
  });
}

Relation holes_relation(const ReducedHypergraph& a, const VertexFamily& phi, const VertexFamily& psi,
                        std::span<const int> j, const Rational& delta) {
  require_positive(delta, "delta");
  const auto idx = index_set(a, j, 2, "holes");
  for (const VertexFamily* f : {&phi, &psi})
    for (const ClassKey& c : pairs_of(idx))
      if (!f->contains(c.lo, c.hi)) throw ArgumentError("holes: family has no set on " + class_name(c));
  check_family(a, phi, idx, false);
  check_family(a, psi, idx, false);
  return trichotomy(pairs_of(idx), [&](const ClassKey& c) {
    return Rational(static_cast<std::int64_t>(intersect_count(phi.at(c), psi.at(c)))) >= delta * Rational(a.class_size(c));
  });
}

BadCherries bad_cherries(const ReducedHypergraph& a, const VertexFamily& phi, const VertexFamily& psi,
                         std::span<const int> j, const Rational& gamma) {
  require_positive(gamma, "gamma");
  const auto idx = index_set(a, j, 3, "bad cherries");
  check_family(a, phi, idx, false);
  check_family(a, psi, idx, false);
  BadCherries out;
  for (Orientation o : kOrientations) {
    CherrySet& dst = o == Orientation::Left ? out.left : (o == Orientation::Middle ? out.middle : out.right);
    for (const Triple& t : triples_of(idx)) {
      const CherryClasses cc = cherry_classes(t, o);
      const Rational need = gamma * Rational(a.class_size(cc.third));
      BitMatrix slot = empty_slot(a, cc);
      for (const auto& [inside, other] : {std::pair{&phi, &psi}, std::pair{&psi, &phi}}) {
        const Bitset& escape = other->at(cc.third);
        for_cherries(a, t, o, inside->at(cc.first), inside->at(cc.second), [&](std::size_t x, std::size_t y, BitView n) {
          if (Rational(static_cast<std::int64_t>(difference_count(n, escape))) >= need) slot.set(x, y);
        });
      }
      dst.set_slot(t, std::move(slot));
    }
  }
  return out;
}

VertexFamily family_union(const VertexFamily& phi, const VertexFamily& psi) {
  if (phi.sets().size() != psi.sets().size()) throw ArgumentError("family_union: domains differ");
  VertexFamily out;
  for (const auto& [k, s] : phi.sets()) {
    auto it = psi.sets().find(k);
    if (it == psi.sets().end()) throw ArgumentError("family_union: domains differ");
    if (it->second.size() != s.size()) throw ArgumentError("family_union: class sizes differ on " + class_name(k));
    Bitset u = s;
    u |= it->second;
    out.set(k.lo, k.hi, std::move(u));
  }
  return out;
}

} // namespace turanforge
