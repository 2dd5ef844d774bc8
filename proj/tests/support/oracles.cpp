#include "oracles.hpp"

#include <algorithm>

namespace oracle {

Hypergraph3 random_h3(int n, double p, Gen& g) {
  std::bernoulli_distribution coin(p);
  std::vector<Triple> e;
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      for (int z = y + 1; z < n; ++z)
        if (coin(g)) e.push_back({x, y, z});
  return Hypergraph3(n, e);
}

ReducedHypergraph random_reduced(const std::vector<int>& indices, const std::vector<int>& class_sizes, double p, Gen& g) {
  std::map<ClassKey, int> sizes;
  std::size_t at = 0;
  for (std::size_t x = 0; x < indices.size(); ++x)
    for (std::size_t y = x + 1; y < indices.size(); ++y)
      sizes[ClassKey::of(indices[x], indices[y])] = class_sizes[at++ % class_sizes.size()];
  ReducedHypergraph::Builder b(indices, sizes);
  std::bernoulli_distribution coin(p);
  for (std::size_t x = 0; x < indices.size(); ++x)
    for (std::size_t y = x + 1; y < indices.size(); ++y)
      for (std::size_t z = y + 1; z < indices.size(); ++z) {
        const int i = indices[x], j = indices[y], k = indices[z];
        for (int a = 0; a < sizes[ClassKey::of(i, j)]; ++a)
          for (int bb = 0; bb < sizes[ClassKey::of(i, k)]; ++bb)
            for (int c = 0; c < sizes[ClassKey::of(j, k)]; ++c)
              if (coin(g)) b.add_edge(i, j, k, a, bb, c);
      }
  return b.build();
}

ReducedHypergraph random_reduced(const std::vector<int>& indices, int class_size, double p, Gen& g) {
  return random_reduced(indices, std::vector<int>{class_size}, p, g);
}

PairSet random_pairset(int n, double p, Gen& g) {
  std::bernoulli_distribution coin(p);
  PairSet s(n);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (coin(g)) s.insert(x, y);
  return s;
}

VertexFamily random_family(const ReducedHypergraph& a, const std::vector<int>& j, double p, Gen& g, bool nonempty) {
  std::bernoulli_distribution coin(p);
  VertexFamily f;
  for (std::size_t x = 0; x < j.size(); ++x)
    for (std::size_t y = x + 1; y < j.size(); ++y) {
      const int size = a.class_size(j[x], j[y]);
      Bitset b(static_cast<std::size_t>(size));
      for (int v = 0; v < size; ++v)
        if (coin(g)) b.set(static_cast<std::size_t>(v));
      if (nonempty && b.none() && size > 0) b.set(std::uniform_int_distribution<int>(0, size - 1)(g));
      f.set(j[x], j[y], std::move(b));
    }
  return f;
}

Transversal random_transversal(const ReducedHypergraph& a, const std::vector<ClassKey>& classes, Gen& g) {
  Transversal t;
  for (const ClassKey& k : classes) t.set(k.lo, k.hi, std::uniform_int_distribution<int>(0, a.class_size(k) - 1)(g));
  return t;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  const auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int v = from; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

bool is_clique(const Hypergraph3& h, const std::vector<int>& s) {
  for (std::size_t a = 0; a < s.size(); ++a)
    for (std::size_t b = a + 1; b < s.size(); ++b)
      for (std::size_t c = b + 1; c < s.size(); ++c)
        if (!h.has_edge(s[a], s[b], s[c])) return false;
  return true;
}

std::optional<std::vector<int>> first_clique(const Hypergraph3& h, int ell) {
  for (const auto& s : subsets(h.order(), ell))
    if (is_clique(h, s)) return s;
  return std::nullopt;
}

std::size_t link_edge_count(const Hypergraph3& h, int x) {
  std::size_t c = 0;
  for (int y = 0; y < h.order(); ++y)
    for (int z = y + 1; z < h.order(); ++z)
      if (y != x && z != x && h.has_edge(x, y, z)) ++c;
  return c;
}

bool psi_edge(const PairMap& psi, int x, int y, int z) { return (psi.at(x, y) + psi.at(x, z) + psi.at(y, z)) % 3 == 1; }

std::int64_t edges_in(const Graph& g, const std::vector<int>& x) {
  std::int64_t c = 0;
  for (std::size_t a = 0; a < x.size(); ++a)
    for (std::size_t b = a + 1; b < x.size(); ++b)
      if (g.has_edge(x[a], x[b])) ++c;
  return c;
}

std::int64_t e_ee(const Hypergraph3& h, const PairSet& p, const PairSet& q) {
  std::int64_t c = 0;
  const int n = h.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int y2 = 0; y2 < n; ++y2)
        for (int z = 0; z < n; ++z)
          if (y == y2 && p.contains(x, y) && q.contains(y2, z) && x != y && y != z && x != z && h.has_edge(x, y, z)) ++c;
  return c;
}

std::int64_t k_ee(const PairSet& p, const PairSet& q, bool distinct) {
  std::int64_t c = 0;
  const int n = p.order();
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int y2 = 0; y2 < n; ++y2)
        for (int z = 0; z < n; ++z)
          if (y == y2 && p.contains(x, y) && q.contains(y2, z) && (!distinct || (x != y && y != z && x != z))) ++c;
  return c;
}

namespace {

ClassKey third_class(const Triple& t, Orientation o) {
  switch (o) {
  case Orientation::Left: return {t.b, t.c};
  case Orientation::Middle: return {t.a, t.c};
  default: return {t.a, t.b};
  }
}

std::array<ClassKey, 2> cherry_pair(const Triple& t, Orientation o) {
  switch (o) {
  case Orientation::Left: return {ClassKey{t.a, t.b}, ClassKey{t.a, t.c}};
  case Orientation::Middle: return {ClassKey{t.a, t.b}, ClassKey{t.b, t.c}};
  default: return {ClassKey{t.a, t.c}, ClassKey{t.b, t.c}};
  }
}

bool edge_with(const ReducedHypergraph& a, const Triple& t, Orientation o, int x, int y, int c) {
  switch (o) {
  case Orientation::Left: return a.has_edge(t.a, t.b, t.c, x, y, c);
  case Orientation::Middle: return a.has_edge(t.a, t.b, t.c, x, c, y);
  default: return a.has_edge(t.a, t.b, t.c, c, x, y);
  }
}

std::vector<Triple> triples_of(const std::vector<int>& idx) {
  std::vector<Triple> out;
  for (std::size_t x = 0; x < idx.size(); ++x)
    for (std::size_t y = x + 1; y < idx.size(); ++y)
      for (std::size_t z = y + 1; z < idx.size(); ++z) out.push_back(Triple::sorted(idx[x], idx[y], idx[z]));
  return out;
}

} // namespace

int codegree(const ReducedHypergraph& a, const Triple& t, Orientation o, int x, int y) {
  int c = 0;
  const ClassKey th = third_class(t, o);
  for (int v = 0; v < a.class_size(th); ++v) c += edge_with(a, t, o, x, y, v);
  return c;
}

Rational min_ee_density(const ReducedHypergraph& a) {
  Rational best(1);
  for (const Triple& t : triples_of(a.indices()))
    for (Orientation o : kOrientations) {
      const auto cp = cherry_pair(t, o);
      const int third = a.class_size(third_class(t, o));
      for (int x = 0; x < a.class_size(cp[0]); ++x)
        for (int y = 0; y < a.class_size(cp[1]); ++y) best = std::min(best, Rational(codegree(a, t, o, x, y), third));
    }
  return best;
}

Rational constituent_density_min(const ReducedHypergraph& a) {
  Rational best(1);
  for (const Triple& t : triples_of(a.indices())) {
    std::int64_t e = 0;
    const int s1 = a.class_size(t.a, t.b), s2 = a.class_size(t.a, t.c), s3 = a.class_size(t.b, t.c);
    for (int x = 0; x < s1; ++x)
      for (int y = 0; y < s2; ++y)
        for (int z = 0; z < s3; ++z) e += a.has_edge(t.a, t.b, t.c, x, y, z);
    best = std::min(best, Rational(e, static_cast<std::int64_t>(s1) * s2 * s3));
  }
  return best;
}

bool all_aligned_edges(const ReducedHypergraph& a, const std::vector<int>& j, const Transversal& t) {
  for (const Triple& tr : triples_of(j))
    if (!a.has_edge(tr.a, tr.b, tr.c, t.at(tr.a, tr.b), t.at(tr.a, tr.c), t.at(tr.b, tr.c))) return false;
  return true;
}

bool supports(const ReducedHypergraph& a, int ell) {
  const auto& idx = a.indices();
  for (const auto& pos : subsets(a.index_count(), ell)) {
    std::vector<int> j;
    for (int p : pos) j.push_back(idx[static_cast<std::size_t>(p)]);
    std::vector<ClassKey> classes;
    for (std::size_t x = 0; x < j.size(); ++x)
      for (std::size_t y = x + 1; y < j.size(); ++y) classes.push_back(ClassKey::of(j[x], j[y]));
    std::vector<int> digit(classes.size(), 0);
    while (true) {
      Transversal t;
      for (std::size_t c = 0; c < classes.size(); ++c) t.set(classes[c].lo, classes[c].hi, digit[c]);
      if (all_aligned_edges(a, j, t)) return true;
      std::size_t c = 0;
      for (; c < classes.size(); ++c) {
        if (++digit[c] < a.class_size(classes[c])) break;
        digit[c] = 0;
      }
      if (c == classes.size()) break;
    }
  }
  return false;
}

bool valid_bicolouring(const ReducedHypergraph& a, const Bicolouring& phi) {
  for (const ClassKey& k : a.classes()) {
    bool red = false, blue = false;
    for (int v = 0; v < a.class_size(k); ++v) (phi.at(k, v) == Colour::Red ? red : blue) = true;
    if (!red || !blue) return false;
  }
  for (const Triple& t : triples_of(a.indices()))
    for (const auto& e : a.edges(t)) {
      const Colour c1 = phi.at(ClassKey{t.a, t.b}, e[0]);
      if (c1 == phi.at(ClassKey{t.a, t.c}, e[1]) && c1 == phi.at(ClassKey{t.b, t.c}, e[2])) return false;
    }
  return true;
}

Rational tau2(const ReducedHypergraph& a, const Bicolouring& phi) {
  Rational best(1);
  for (const Triple& t : triples_of(a.indices()))
    for (Orientation o : kOrientations) {
      const auto cp = cherry_pair(t, o);
      const int third = a.class_size(third_class(t, o));
      for (int x = 0; x < a.class_size(cp[0]); ++x)
        for (int y = 0; y < a.class_size(cp[1]); ++y)
          if (phi.at(cp[0], x) == phi.at(cp[1], y)) best = std::min(best, Rational(codegree(a, t, o, x, y), third));
    }
  return best;
}

std::int64_t induced_edges(const ReducedHypergraph& a, const VertexFamily& phi, const Triple& t) {
  std::int64_t e = 0;
  const Bitset &f1 = phi.at(t.a, t.b), &f2 = phi.at(t.a, t.c), &f3 = phi.at(t.b, t.c);
  for (std::size_t x = 0; x < f1.size(); ++x)
    for (std::size_t y = 0; y < f2.size(); ++y)
      for (std::size_t z = 0; z < f3.size(); ++z)
        if (f1.test(x) && f2.test(y) && f3.test(z))
          e += a.has_edge(t.a, t.b, t.c, static_cast<int>(x), static_cast<int>(y), static_cast<int>(z));
  return e;
}

int codegree_within(const ReducedHypergraph& a, const Triple& t, Orientation o, int x, int y, const Bitset& third) {
  int c = 0;
  for (std::size_t v = 0; v < third.size(); ++v)
    if (third.test(v) && edge_with(a, t, o, x, y, static_cast<int>(v))) ++c;
  return c;
}

std::int64_t exceptional_count(const ReducedHypergraph& a, const VertexFamily& phi, const Triple& t, Orientation o,
                               const Rational& eps) {
  const auto cp = cherry_pair(t, o);
  const ClassKey th = third_class(t, o);
  std::int64_t n = 0;
  const Bitset &f1 = phi.at(cp[0]), &f2 = phi.at(cp[1]), &f3 = phi.at(th);
  for (int x = 0; x < a.class_size(cp[0]); ++x)
    for (int y = 0; y < a.class_size(cp[1]); ++y)
      if (f1.test(static_cast<std::size_t>(x)) && f2.test(static_cast<std::size_t>(y)) &&
          Rational(codegree_within(a, t, o, x, y, f3)) >= eps * a.class_size(th))
        ++n;
  return n;
}

std::vector<std::array<int, 10>> triangle_free_k5_colourings() {
  std::vector<std::pair<int, int>> pairs;
  for (int x = 0; x < 5; ++x)
    for (int y = x + 1; y < 5; ++y) pairs.emplace_back(x, y);
  const auto at = [&](int mask, int x, int y) {
    if (x > y) std::swap(x, y);
    const auto it = std::find(pairs.begin(), pairs.end(), std::make_pair(x, y));
    return (mask >> (it - pairs.begin())) & 1;
  };
  std::vector<std::array<int, 10>> out;
  for (int mask = 0; mask < 1024; ++mask) {
    bool ok = true;
    for (int x = 0; x < 5 && ok; ++x)
      for (int y = x + 1; y < 5 && ok; ++y)
        for (int z = y + 1; z < 5 && ok; ++z)
          if (at(mask, x, y) == at(mask, x, z) && at(mask, x, y) == at(mask, y, z)) ok = false;
    if (!ok) continue;
    std::array<int, 10> c{};
    for (int i = 0; i < 10; ++i) c[static_cast<std::size_t>(i)] = (mask >> i) & 1;
    out.push_back(c);
  }
  return out;
}

} // namespace oracle
