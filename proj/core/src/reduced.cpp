#include "turanforge/reduced.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "transversal_search.hpp"
#include "turanforge/errors.hpp"

namespace turanforge {
namespace {

std::size_t triple_rank(int p, int q, int r, int m) noexcept {
  const auto c3 = [](std::int64_t n) { return binomial(n, 3); };
  const auto c2 = [](std::int64_t n) { return binomial(n, 2); };
  return static_cast<std::size_t>(c3(m) - c3(m - p) + c2(m - p - 1) - c2(m - q) + (r - q - 1));
}

std::vector<int> sorted_distinct(std::vector<int> v, const char* what) {
  std::sort(v.begin(), v.end());
  if (std::adjacent_find(v.begin(), v.end()) != v.end())
    throw ArgumentError(std::string(what) + ": repeated index");
  return v;
}

void check_local(int v, int size, const ClassKey& k) {
  if (v < 0 || v >= size)
    throw ArgumentError("vertex " + std::to_string(v) + " not in class P^{" + std::to_string(k.lo) + "," +
                        std::to_string(k.hi) + "} of size " + std::to_string(size));
}

// Resolves a labelled triple (i, j, k) with vertices a in {i,j}, b in {i,k}, c in {j,k}
// to sorted positions and the vertex in each of the classes (pq, pr, qr).
struct ResolvedTriple {
  int p, q, r;
  int x, y, z; // x in P^{pq}, y in P^{pr}, z in P^{qr}
};

template <class PositionFn>
ResolvedTriple resolve(PositionFn&& position, int i, int j, int k, int a, int b, int c) {
  const int pi = position(i), pj = position(j), pk = position(k);
  if (pi == pj || pi == pk || pj == pk) throw ArgumentError("triple needs three distinct indices");
  struct Entry {
    int lo, hi, v;
  };
  const Entry entries[3] = {{std::min(pi, pj), std::max(pi, pj), a},
                            {std::min(pi, pk), std::max(pi, pk), b},
                            {std::min(pj, pk), std::max(pj, pk), c}};
  ResolvedTriple t{};
  int s[3] = {pi, pj, pk};
  std::sort(s, s + 3);
  t.p = s[0];
  t.q = s[1];
  t.r = s[2];
  for (const Entry& e : entries) {
    if (e.lo == t.p && e.hi == t.q) t.x = e.v;
    else if (e.lo == t.p && e.hi == t.r) t.y = e.v;
    else t.z = e.v;
  }
  return t;
}

} // namespace

ClassKey ClassKey::of(int i, int j) {
  if (i == j) throw ArgumentError("a vertex class needs two distinct indices");
  return i < j ? ClassKey{i, j} : ClassKey{j, i};
}

std::string_view name(Orientation o) noexcept {
  switch (o) {
  case Orientation::Left: return "left";
  case Orientation::Middle: return "middle";
  case Orientation::Right: return "right";
  }
  return "?";
}

CherryClasses cherry_classes(const Triple& t, Orientation o) noexcept {
  const ClassKey ij{t.a, t.b}, ik{t.a, t.c}, jk{t.b, t.c};
  switch (o) {
  case Orientation::Left: return {ij, ik, jk};
  case Orientation::Middle: return {ij, jk, ik};
  case Orientation::Right: return {ik, jk, ij};
  }
  return {ij, ik, jk};
}

// ---------------------------------------------------------------- Builder

ReducedHypergraph::Builder::Builder(std::vector<int> indices, int class_size)
    : indices_(sorted_distinct(std::move(indices), "reduced hypergraph")) {
  if (class_size < 1) throw ArgumentError("vertex classes must be non-empty");
  sizes_.assign(static_cast<std::size_t>(binomial(static_cast<std::int64_t>(indices_.size()), 2)), class_size);
  init();
}

ReducedHypergraph::Builder::Builder(std::vector<int> indices, const std::map<ClassKey, int>& class_sizes)
    : indices_(sorted_distinct(std::move(indices), "reduced hypergraph")) {
  const int m = static_cast<int>(indices_.size());
  sizes_.assign(static_cast<std::size_t>(binomial(m, 2)), 0);
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q) {
      const ClassKey k{indices_[static_cast<std::size_t>(p)], indices_[static_cast<std::size_t>(q)]};
      auto it = class_sizes.find(k);
      if (it == class_sizes.end())
        throw ArgumentError("missing size for class P^{" + std::to_string(k.lo) + "," + std::to_string(k.hi) + "}");
      if (it->second < 1) throw ArgumentError("vertex classes must be non-empty");
      sizes_[pair_index(p, q, m)] = it->second;
    }
  if (class_sizes.size() != sizes_.size()) throw ArgumentError("class sizes given for unknown index pairs");
  init();
}

void ReducedHypergraph::Builder::init() {
  const int m = static_cast<int>(indices_.size());
  left_.assign(static_cast<std::size_t>(binomial(m, 3)), {});
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      for (int r = q + 1; r < m; ++r) {
        const auto s_ij = static_cast<std::size_t>(sizes_[pair_index(p, q, m)]);
        const auto s_ik = static_cast<std::size_t>(sizes_[pair_index(p, r, m)]);
        const auto s_jk = static_cast<std::size_t>(sizes_[pair_index(q, r, m)]);
        left_[triple_rank(p, q, r, m)] = BitMatrix(s_ij * s_ik, s_jk);
      }
}

int ReducedHypergraph::Builder::class_size(int i, int j) const {
  const ClassKey k = ClassKey::of(i, j);
  const auto pos = [&](int label) {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), label);
    if (it == indices_.end() || *it != label) throw ArgumentError("unknown index " + std::to_string(label));
    return static_cast<int>(it - indices_.begin());
  };
  return sizes_[pair_index(pos(k.lo), pos(k.hi), static_cast<int>(indices_.size()))];
}

ReducedHypergraph::Builder::Slot ReducedHypergraph::Builder::locate(int i, int j, int k, int a, int b, int c) const {
  const int m = static_cast<int>(indices_.size());
  const auto pos = [&](int label) {
    auto it = std::lower_bound(indices_.begin(), indices_.end(), label);
    if (it == indices_.end() || *it != label) throw ArgumentError("unknown index " + std::to_string(label));
    return static_cast<int>(it - indices_.begin());
  };
  const ResolvedTriple t = resolve(pos, i, j, k, a, b, c);
  const int s_ij = sizes_[pair_index(t.p, t.q, m)];
  const int s_ik = sizes_[pair_index(t.p, t.r, m)];
  const int s_jk = sizes_[pair_index(t.q, t.r, m)];
  const auto label = [&](int p) { return indices_[static_cast<std::size_t>(p)]; };
  check_local(t.x, s_ij, {label(t.p), label(t.q)});
  check_local(t.y, s_ik, {label(t.p), label(t.r)});
  check_local(t.z, s_jk, {label(t.q), label(t.r)});
  return {triple_rank(t.p, t.q, t.r, m), static_cast<std::size_t>(t.x) * static_cast<std::size_t>(s_ik) +
                                              static_cast<std::size_t>(t.y),
          static_cast<std::size_t>(t.z)};
}

void ReducedHypergraph::Builder::add_edge(int i, int j, int k, int a, int b, int c) { set_edge(i, j, k, a, b, c, true); }

void ReducedHypergraph::Builder::remove_edge(int i, int j, int k, int a, int b, int c) {
  set_edge(i, j, k, a, b, c, false);
}

void ReducedHypergraph::Builder::set_edge(int i, int j, int k, int a, int b, int c, bool present) {
  const Slot s = locate(i, j, k, a, b, c);
  left_[s.triple].set(s.row, s.col, present);
}

bool ReducedHypergraph::Builder::has_edge(int i, int j, int k, int a, int b, int c) const {
  const Slot s = locate(i, j, k, a, b, c);
  return left_[s.triple].test(s.row, s.col);
}

ReducedHypergraph ReducedHypergraph::Builder::build() const {
  ReducedHypergraph out;
  out.indices_ = indices_;
  out.sizes_ = sizes_;
  out.left_ = left_;
  const int m = static_cast<int>(indices_.size());
  out.middle_.resize(left_.size());
  out.right_.resize(left_.size());
  for (int p = 0; p < m; ++p)
    for (int q = p + 1; q < m; ++q)
      for (int r = q + 1; r < m; ++r) {
        const std::size_t t = triple_rank(p, q, r, m);
        const auto s_ij = static_cast<std::size_t>(sizes_[pair_index(p, q, m)]);
        const auto s_ik = static_cast<std::size_t>(sizes_[pair_index(p, r, m)]);
        const auto s_jk = static_cast<std::size_t>(sizes_[pair_index(q, r, m)]);
        BitMatrix middle(s_ij * s_jk, s_ik);
        BitMatrix right(s_ik * s_jk, s_ij);
        const BitMatrix& left = left_[t];
        for (std::size_t x = 0; x < s_ij; ++x)
          for (std::size_t y = 0; y < s_ik; ++y)
            left.row(x * s_ik + y).for_each([&](std::size_t z) {
              middle.set(x * s_jk + z, y);
              right.set(y * s_jk + z, x);
            });
        out.middle_[t] = std::move(middle);
        out.right_[t] = std::move(right);
      }
  return out;
}

// ---------------------------------------------------------------- ReducedHypergraph

bool ReducedHypergraph::has_index(int label) const noexcept {
  return std::binary_search(indices_.begin(), indices_.end(), label);
}

int ReducedHypergraph::position(int label) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), label);
  if (it == indices_.end() || *it != label) throw ArgumentError("unknown index " + std::to_string(label));
  return static_cast<int>(it - indices_.begin());
}

std::size_t ReducedHypergraph::class_id(int pi, int pj) const noexcept {
  return pair_index(pi, pj, index_count());
}

std::size_t ReducedHypergraph::triple_id(int pi, int pj, int pk) const noexcept {
  return triple_rank(pi, pj, pk, index_count());
}

const BitMatrix& ReducedHypergraph::table(std::size_t t, Orientation o) const noexcept {
  switch (o) {
  case Orientation::Left: return left_[t];
  case Orientation::Middle: return middle_[t];
  case Orientation::Right: return right_[t];
  }
  return left_[t];
}

int ReducedHypergraph::class_size(int i, int j) const {
  const ClassKey k = ClassKey::of(i, j);
  return sizes_[class_id(position(k.lo), position(k.hi))];
}

std::vector<ClassKey> ReducedHypergraph::classes() const {
  std::vector<ClassKey> out;
  for (std::size_t p = 0; p < indices_.size(); ++p)
    for (std::size_t q = p + 1; q < indices_.size(); ++q) out.push_back({indices_[p], indices_[q]});
  return out;
}

std::vector<Triple> ReducedHypergraph::triples() const {
  std::vector<Triple> out;
  const std::size_t m = indices_.size();
  for (std::size_t p = 0; p < m; ++p)
    for (std::size_t q = p + 1; q < m; ++q)
      for (std::size_t r = q + 1; r < m; ++r) out.push_back({indices_[p], indices_[q], indices_[r]});
  return out;
}

std::size_t ReducedHypergraph::vertex_count() const noexcept {
  return static_cast<std::size_t>(std::accumulate(sizes_.begin(), sizes_.end(), std::int64_t{0}));
}

bool ReducedHypergraph::has_edge(int i, int j, int k, int a, int b, int c) const {
  const ResolvedTriple t = resolve([&](int l) { return position(l); }, i, j, k, a, b, c);
  const int m = index_count();
  const int s_ij = sizes_[pair_index(t.p, t.q, m)];
  const int s_ik = sizes_[pair_index(t.p, t.r, m)];
  const int s_jk = sizes_[pair_index(t.q, t.r, m)];
  const auto label = [&](int p) { return indices_[static_cast<std::size_t>(p)]; };
  check_local(t.x, s_ij, {label(t.p), label(t.q)});
  check_local(t.y, s_ik, {label(t.p), label(t.r)});
  check_local(t.z, s_jk, {label(t.q), label(t.r)});
  return left_[triple_rank(t.p, t.q, t.r, m)].test(
      static_cast<std::size_t>(t.x) * static_cast<std::size_t>(s_ik) + static_cast<std::size_t>(t.y),
      static_cast<std::size_t>(t.z));
}

BitView ReducedHypergraph::cherry_neighbours(const Triple& t, Orientation o, int x, int y) const {
  const int p = position(t.a), q = position(t.b), r = position(t.c);
  if (!(p < q && q < r)) throw ArgumentError("cherry_neighbours needs a sorted index triple");
  const CherryClasses cc = cherry_classes(t, o);
  const int s1 = class_size(cc.first), s2 = class_size(cc.second);
  check_local(x, s1, cc.first);
  check_local(y, s2, cc.second);
  return table(triple_rank(p, q, r, index_count()), o)
      .row(static_cast<std::size_t>(x) * static_cast<std::size_t>(s2) + static_cast<std::size_t>(y));
}

BitView ReducedHypergraph::neighbours(const VertexRef& p, const VertexRef& q) const {
  const ClassKey& a = p.cls;
  const ClassKey& b = q.cls;
  int shared = 0, other_a = 0, other_b = 0, matches = 0;
  for (int u : {a.lo, a.hi})
    for (int w : {b.lo, b.hi})
      if (u == w) {
        shared = u;
        ++matches;
      }
  if (matches != 1) throw ArgumentError("neighbours: classes must share exactly one index");
  other_a = a.lo == shared ? a.hi : a.lo;
  other_b = b.lo == shared ? b.hi : b.lo;
  const Triple t = Triple::sorted(shared, other_a, other_b);
  const ClassKey ij{t.a, t.b}, ik{t.a, t.c}, jk{t.b, t.c};
  // Pick the orientation whose two cherry classes are {a, b}.
  for (Orientation o : kOrientations) {
    const CherryClasses cc = cherry_classes(t, o);
    if (cc.first == a && cc.second == b) return cherry_neighbours(t, o, p.v, q.v);
    if (cc.first == b && cc.second == a) return cherry_neighbours(t, o, q.v, p.v);
  }
  (void)ij;
  (void)ik;
  (void)jk;
  throw ArgumentError("neighbours: unreachable class configuration");
}

std::size_t ReducedHypergraph::edge_count(const Triple& t) const {
  const int p = position(t.a), q = position(t.b), r = position(t.c);
  if (!(p < q && q < r)) throw ArgumentError("edge_count needs a sorted index triple");
  return left_[triple_rank(p, q, r, index_count())].count();
}

std::size_t ReducedHypergraph::edge_count() const {
  std::size_t total = 0;
  for (const BitMatrix& m : left_) total += m.count();
  return total;
}

std::vector<std::array<int, 3>> ReducedHypergraph::edges(const Triple& t) const {
  const int p = position(t.a), q = position(t.b), r = position(t.c);
  if (!(p < q && q < r)) throw ArgumentError("edges needs a sorted index triple");
  const int m = index_count();
  const int s_ij = sizes_[pair_index(p, q, m)];
  const int s_ik = sizes_[pair_index(p, r, m)];
  const BitMatrix& left = left_[triple_rank(p, q, r, m)];
  std::vector<std::array<int, 3>> out;
  for (int x = 0; x < s_ij; ++x)
    for (int y = 0; y < s_ik; ++y)
      left.row(static_cast<std::size_t>(x * s_ik + y)).for_each([&](std::size_t z) {
        out.push_back({x, y, static_cast<int>(z)});
      });
  return out;
}

ReducedHypergraph::Builder ReducedHypergraph::to_builder() const {
  Builder b;
  b.indices_ = indices_;
  b.sizes_ = sizes_;
  b.left_ = left_;
  return b;
}

// ---------------------------------------------------------------- Transversal

int Transversal::at(int i, int j) const {
  auto it = entries_.find(ClassKey::of(i, j));
  if (it == entries_.end())
    throw ArgumentError("transversal has no entry for P^{" + std::to_string(std::min(i, j)) + "," +
                        std::to_string(std::max(i, j)) + "}");
  return it->second;
}

bool Transversal::covers_pairs(std::span<const int> indices) const {
  for (std::size_t a = 0; a < indices.size(); ++a)
    for (std::size_t b = a + 1; b < indices.size(); ++b)
      if (!contains(indices[a], indices[b])) return false;
  return true;
}

bool Transversal::covers_cross(std::span<const int> k, std::span<const int> l) const {
  for (int x : k)
    for (int y : l)
      if (x == y || !contains(x, y)) return false;
  return true;
}

// ---------------------------------------------------------------- CherrySet

void CherrySet::insert(const ReducedHypergraph& a, const Triple& t, int x, int y) {
  const CherryClasses cc = cherry_classes(t, orientation_);
  const int s1 = a.class_size(cc.first), s2 = a.class_size(cc.second);
  check_local(x, s1, cc.first);
  check_local(y, s2, cc.second);
  auto it = slots_.find(t);
  if (it == slots_.end())
    it = slots_.emplace(t, BitMatrix(static_cast<std::size_t>(s1), static_cast<std::size_t>(s2))).first;
  it->second.set(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
}

void CherrySet::set_slot(const Triple& t, BitMatrix members) {
  if (!(t.a < t.b && t.b < t.c)) throw ArgumentError("cherry slots are keyed by sorted index triples");
  slots_[t] = std::move(members);
}

bool CherrySet::contains(const Triple& t, int x, int y) const {
  auto it = slots_.find(t);
  if (it == slots_.end()) return false;
  if (x < 0 || y < 0 || static_cast<std::size_t>(x) >= it->second.rows() ||
      static_cast<std::size_t>(y) >= it->second.cols())
    throw ArgumentError("cherry vertex outside its class");
  return it->second.test(static_cast<std::size_t>(x), static_cast<std::size_t>(y));
}

std::size_t CherrySet::size(const Triple& t) const {
  auto it = slots_.find(t);
  return it == slots_.end() ? 0 : it->second.count();
}

std::size_t CherrySet::size() const {
  std::size_t total = 0;
  for (const auto& [t, m] : slots_) total += m.count();
  return total;
}

void CherrySet::check_against(const ReducedHypergraph& a) const {
  for (const auto& [t, m] : slots_) {
    if (!(a.has_index(t.a) && a.has_index(t.b) && a.has_index(t.c)) || !(t.a < t.b && t.b < t.c))
      throw ArgumentError("cherry set refers to a triple outside the index set");
    const CherryClasses cc = cherry_classes(t, orientation_);
    if (m.rows() != static_cast<std::size_t>(a.class_size(cc.first)) ||
        m.cols() != static_cast<std::size_t>(a.class_size(cc.second)))
      throw ArgumentError("cherry set slot does not match the class sizes of its orientation");
  }
}

// ---------------------------------------------------------------- Bicolouring

Bicolouring::Bicolouring(const ReducedHypergraph& a, Colour fill) {
  for (const ClassKey& k : a.classes()) colours_[k].assign(static_cast<std::size_t>(a.class_size(k)), fill);
}

Colour Bicolouring::at(const ClassKey& k, int v) const {
  auto it = colours_.find(k);
  if (it == colours_.end() || v < 0 || static_cast<std::size_t>(v) >= it->second.size())
    throw ArgumentError("colouring has no entry for this vertex");
  return it->second[static_cast<std::size_t>(v)];
}

void Bicolouring::set(int i, int j, int v, Colour c) {
  auto& cls = colours_[ClassKey::of(i, j)];
  if (v < 0) throw ArgumentError("negative vertex id");
  if (static_cast<std::size_t>(v) >= cls.size()) cls.resize(static_cast<std::size_t>(v) + 1, Colour::Red);
  cls[static_cast<std::size_t>(v)] = c;
}

Bitset Bicolouring::members(const ClassKey& k, Colour c) const {
  auto it = colours_.find(k);
  if (it == colours_.end()) throw ArgumentError("colouring has no class for this index pair");
  Bitset out(it->second.size());
  for (std::size_t v = 0; v < it->second.size(); ++v)
    if (it->second[v] == c) out.set(v);
  return out;
}

Bicolouring Bicolouring::swapped() const {
  Bicolouring out = *this;
  for (auto& [k, cols] : out.colours_)
    for (Colour& c : cols) c = opposite(c);
  return out;
}

// ---------------------------------------------------------------- operations

Codegree codegree(const ReducedHypergraph& a, const VertexRef& u, const VertexRef& v) {
  const BitView n = a.neighbours(u, v);
  int shared = (u.cls.lo == v.cls.lo || u.cls.lo == v.cls.hi) ? u.cls.lo : u.cls.hi;
  const int ou = u.cls.lo == shared ? u.cls.hi : u.cls.lo;
  const int ov = v.cls.lo == shared ? v.cls.hi : v.cls.lo;
  return {ClassKey::of(ou, ov), Bitset(n), n.count()};
}

namespace {

void require_nonempty_classes(const ReducedHypergraph& a) {
  for (const ClassKey& k : a.classes())
    if (a.class_size(k) == 0) throw ArgumentError("empty vertex class");
}

} // namespace

CodegreeMinimum min_ee_density(const ReducedHypergraph& a) {
  require_nonempty_classes(a);
  CodegreeMinimum best;
  for (const Triple& t : a.triples()) {
    const std::size_t tid = a.triple_id(a.position(t.a), a.position(t.b), a.position(t.c));
    for (Orientation o : kOrientations) {
      const CherryClasses cc = cherry_classes(t, o);
      const int s1 = a.class_size(cc.first), s2 = a.class_size(cc.second);
      const auto third = static_cast<std::int64_t>(a.class_size(cc.third));
      const BitMatrix& tab = a.table(tid, o);
      std::size_t low = tab.cols() + 1;
      std::size_t low_row = 0;
      for (std::size_t row = 0; row < static_cast<std::size_t>(s1) * static_cast<std::size_t>(s2); ++row) {
        const std::size_t c = tab.row(row).count();
        if (c < low) {
          low = c;
          low_row = row;
        }
      }
      const Rational value(static_cast<std::int64_t>(low), third);
      auto& per = best.per_orientation[static_cast<std::size_t>(o)];
      if (value < per) per = value;
      if (!best.has_witness || value < best.value) {
        best.value = value;
        best.triple = t;
        best.orientation = o;
        best.x = static_cast<int>(low_row / static_cast<std::size_t>(s2));
        best.y = static_cast<int>(low_row % static_cast<std::size_t>(s2));
        best.has_witness = true;
      }
    }
  }
  return best;
}

Rational vvv_min_density(const ReducedHypergraph& a) {
  require_nonempty_classes(a);
  Rational best(1);
  for (const Triple& t : a.triples()) {
    const auto denom = static_cast<std::int64_t>(a.class_size(t.a, t.b)) * a.class_size(t.a, t.c) * a.class_size(t.b, t.c);
    best = std::min(best, Rational(static_cast<std::int64_t>(a.edge_count(t)), denom));
  }
  return best;
}

Rational vvv_min_density(const ReducedHypergraph& a, std::span<const int> k, std::span<const int> l,
                         std::span<const int> m) {
  require_nonempty_classes(a);
  std::set<int> seen;
  for (auto part : {k, l, m})
    for (int x : part) {
      if (!a.has_index(x)) throw ArgumentError("unknown index " + std::to_string(x));
      if (!seen.insert(x).second) throw ArgumentError("tridense index sets must be pairwise disjoint");
    }
  Rational best(1);
  for (int x : k)
    for (int y : l)
      for (int z : m) {
        const Triple t = Triple::sorted(x, y, z);
        const auto denom =
            static_cast<std::int64_t>(a.class_size(t.a, t.b)) * a.class_size(t.a, t.c) * a.class_size(t.b, t.c);
        best = std::min(best, Rational(static_cast<std::int64_t>(a.edge_count(t)), denom));
      }
  return best;
}

namespace {

// Position-level clique-support search on the index positions in `pos` (sorted).
SearchStatus support_on(const ReducedHypergraph& a, const std::vector<int>& pos, std::uint64_t budget,
                        std::uint64_t& nodes, Transversal& out) {
  const int ell = static_cast<int>(pos.size());
  detail::TransversalCsp csp(a);
  std::vector<int> var_of(static_cast<std::size_t>(ell * ell), -1);
  const auto var = [&](int x, int y) -> int& { return var_of[static_cast<std::size_t>(x * ell + y)]; };
  // Columns first: every pair (x, y) is assigned after all pairs (., z) with z < y.
  for (int y = 1; y < ell; ++y)
    for (int x = 0; x < y; ++x)
      var(x, y) = csp.add_var(a.class_id(pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(y)]));
  for (int x = 0; x < ell; ++x)
    for (int y = x + 1; y < ell; ++y)
      for (int z = y + 1; z < ell; ++z)
        csp.add_edge(a.triple_id(pos[static_cast<std::size_t>(x)], pos[static_cast<std::size_t>(y)],
                                 pos[static_cast<std::size_t>(z)]),
                     var(x, y), var(x, z), var(y, z));
  std::vector<int> values;
  const SearchStatus st = csp.solve(budget, nodes, values);
  if (st == SearchStatus::Found) {
    const auto label = [&](int x) { return a.indices()[static_cast<std::size_t>(pos[static_cast<std::size_t>(x)])]; };
    for (int y = 1; y < ell; ++y)
      for (int x = 0; x < y; ++x) out.set(label(x), label(y), values[static_cast<std::size_t>(var(x, y))]);
  }
  return st;
}

} // namespace

SearchResult<CliqueSupport> supports_clique(const ReducedHypergraph& a, int ell, std::uint64_t budget) {
  const int m = a.index_count();
  if (ell > m) throw ArgumentError("cannot support K_" + std::to_string(ell) + " on " + std::to_string(m) + " indices");
  if (ell < 3) throw ArgumentError("clique support needs l >= 3");
  SearchResult<CliqueSupport> result;
  std::vector<int> pos(static_cast<std::size_t>(ell));
  std::iota(pos.begin(), pos.end(), 0);
  while (true) {
    Transversal t;
    const SearchStatus st = support_on(a, pos, budget, result.nodes, t);
    if (st == SearchStatus::Found) {
      CliqueSupport w;
      for (int p : pos) w.indices.push_back(a.indices()[static_cast<std::size_t>(p)]);
      w.transversal = std::move(t);
      result.status = SearchStatus::Found;
      result.witness = std::move(w);
      return result;
    }
    if (st == SearchStatus::BudgetExhausted) {
      result.status = SearchStatus::BudgetExhausted;
      return result;
    }
    // Next combination in lexicographic order.
    int i = ell - 1;
    while (i >= 0 && pos[static_cast<std::size_t>(i)] == m - ell + i) --i;
    if (i < 0) break;
    ++pos[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < ell; ++j) pos[static_cast<std::size_t>(j)] = pos[static_cast<std::size_t>(j - 1)] + 1;
  }
  result.status = SearchStatus::Absent;
  return result;
}

bool is_clique_support(const ReducedHypergraph& a, const CliqueSupport& w) {
  const auto& j = w.indices;
  for (std::size_t x = 0; x < j.size(); ++x)
    for (std::size_t y = x + 1; y < j.size(); ++y)
      for (std::size_t z = y + 1; z < j.size(); ++z) {
        if (!w.transversal.contains(j[x], j[y]) || !w.transversal.contains(j[x], j[z]) ||
            !w.transversal.contains(j[y], j[z]))
          return false;
        if (!a.has_edge(j[x], j[y], j[z], w.transversal.at(j[x], j[y]), w.transversal.at(j[x], j[z]),
                        w.transversal.at(j[y], j[z])))
          return false;
      }
  return true;
}

WickedReport is_wicked(const ReducedHypergraph& a, const Rational& eps, std::uint64_t budget) {
  WickedReport r;
  r.min_density = min_ee_density(a).value;
  if (r.min_density < Rational(1, 3) + eps) {
    r.wicked = Tristate::False;
    r.k5_support = SearchStatus::BudgetExhausted;
    if (a.index_count() < 5) r.k5_support = SearchStatus::Absent;
    return r;
  }
  if (a.index_count() < 5) {
    r.k5_support = SearchStatus::Absent;
    r.wicked = Tristate::True;
    return r;
  }
  r.k5_support = supports_clique(a, 5, budget).status;
  switch (r.k5_support) {
  case SearchStatus::Found: r.wicked = Tristate::False; break;
  case SearchStatus::Absent: r.wicked = Tristate::True; break;
  case SearchStatus::BudgetExhausted: r.wicked = Tristate::Indeterminate; break;
  }
  return r;
}

namespace {

void check_forbidden(const ReducedHypergraph& a, std::span<const CherrySet> avoid) {
  for (const CherrySet& c : avoid) c.check_against(a);
}

// Adds "transversal entries avoid C" constraints for every slot of every set.
template <class VarLookup>
void add_avoidance(detail::TransversalCsp& csp, std::span<const CherrySet> avoid, VarLookup&& var_of) {
  for (const CherrySet& c : avoid)
    for (const auto& [t, members] : c.slots()) {
      const CherryClasses cc = cherry_classes(t, c.orientation());
      for (int which = 0; which < 3; ++which) {
        const int v1 = var_of(which, cc.first);
        const int v2 = var_of(which, cc.second);
        if (v1 >= 0 && v2 >= 0) csp.forbid(v1, v2, members);
      }
    }
}

SearchResult<InhabitedTriple> run_inhabited(const ReducedHypergraph& a, detail::TransversalCsp& csp,
                                            const std::map<std::pair<int, ClassKey>, int>& vars,
                                            std::uint64_t budget) {
  SearchResult<InhabitedTriple> result;
  std::vector<int> values;
  result.status = csp.solve(budget, result.nodes, values);
  if (result.found()) {
    InhabitedTriple w;
    for (const auto& [key, v] : vars) {
      Transversal& t = key.first == 0 ? w.q : (key.first == 1 ? w.r : w.s);
      t.set(key.second.lo, key.second.hi, values[static_cast<std::size_t>(v)]);
    }
    result.witness = std::move(w);
  }
  (void)a;
  return result;
}

} // namespace

SearchResult<InhabitedTriple> find_inhabited_triple(const ReducedHypergraph& a, std::span<const int> j,
                                                    std::span<const CherrySet> avoid, std::uint64_t budget) {
  const std::vector<int> idx = sorted_distinct(std::vector<int>(j.begin(), j.end()), "inhabited triple");
  if (idx.size() < 3) throw ArgumentError("inhabited triple needs |J| >= 3");
  for (int x : idx)
    if (!a.has_index(x)) throw ArgumentError("unknown index " + std::to_string(x));
  check_forbidden(a, avoid);

  detail::TransversalCsp csp(a);
  std::map<std::pair<int, ClassKey>, int> vars; // (0=Q,1=R,2=S, class) -> var
  const std::size_t n = idx.size();
  for (std::size_t y = 1; y < n; ++y)
    for (std::size_t x = 0; x < y; ++x) {
      const ClassKey k{idx[x], idx[y]};
      const std::size_t cid = a.class_id(a.position(k.lo), a.position(k.hi));
      for (int which = 0; which < 3; ++which) vars[{which, k}] = csp.add_var(cid);
    }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      for (std::size_t z = y + 1; z < n; ++z) {
        const std::size_t tid = a.triple_id(a.position(idx[x]), a.position(idx[y]), a.position(idx[z]));
        csp.add_edge(tid, vars.at({0, ClassKey{idx[x], idx[y]}}), vars.at({1, ClassKey{idx[x], idx[z]}}),
                     vars.at({2, ClassKey{idx[y], idx[z]}}));
      }
  add_avoidance(csp, avoid, [&](int which, const ClassKey& k) {
    auto it = vars.find({which, k});
    return it == vars.end() ? -1 : it->second;
  });
  return run_inhabited(a, csp, vars, budget);
}

SearchResult<InhabitedTriple> find_inhabited_triple(const ReducedHypergraph& a, std::span<const int> k,
                                                    std::span<const int> l, std::span<const int> m,
                                                    std::span<const CherrySet> avoid, std::uint64_t budget) {
  std::set<int> seen;
  for (auto part : {k, l, m}) {
    if (part.empty()) throw ArgumentError("partite index sets must be non-empty");
    for (int x : part) {
      if (!a.has_index(x)) throw ArgumentError("unknown index " + std::to_string(x));
      if (!seen.insert(x).second) throw ArgumentError("K, L, M must be pairwise disjoint");
    }
  }
  check_forbidden(a, avoid);

  detail::TransversalCsp csp(a);
  std::map<std::pair<int, ClassKey>, int> vars;
  const auto cid = [&](int x, int y) {
    const ClassKey c = ClassKey::of(x, y);
    return a.class_id(a.position(c.lo), a.position(c.hi));
  };
  std::set<int> l_seen, m_seen;
  for (int y : l)
    for (int z : m) {
      if (l_seen.insert(y).second)
        for (int x : k) vars[{0, ClassKey::of(x, y)}] = csp.add_var(cid(x, y));
      if (m_seen.insert(z).second)
        for (int x : k) vars[{1, ClassKey::of(x, z)}] = csp.add_var(cid(x, z));
      vars[{2, ClassKey::of(y, z)}] = csp.add_var(cid(y, z));
    }
  for (int x : k)
    for (int y : l)
      for (int z : m) {
        const Triple t = Triple::sorted(x, y, z);
        const int vq = vars.at({0, ClassKey::of(x, y)});
        const int vr = vars.at({1, ClassKey::of(x, z)});
        const int vs = vars.at({2, ClassKey::of(y, z)});
        // Route each variable to its role (ij, ik, jk) in the sorted triple.
        int role[3] = {-1, -1, -1};
        for (auto [cls, v] : {std::pair{ClassKey::of(x, y), vq}, std::pair{ClassKey::of(x, z), vr},
                              std::pair{ClassKey::of(y, z), vs}}) {
          if (cls == ClassKey{t.a, t.b}) role[0] = v;
          else if (cls == ClassKey{t.a, t.c}) role[1] = v;
          else role[2] = v;
        }
        csp.add_edge(a.triple_id(a.position(t.a), a.position(t.b), a.position(t.c)), role[0], role[1], role[2]);
      }
  add_avoidance(csp, avoid, [&](int which, const ClassKey& c) {
    auto it = vars.find({which, c});
    return it == vars.end() ? -1 : it->second;
  });
  return run_inhabited(a, csp, vars, budget);
}

bool avoids(const Transversal& t, const CherrySet& c) {
  for (const auto& [tri, members] : c.slots()) {
    const CherryClasses cc = cherry_classes(tri, c.orientation());
    auto f = t.entries().find(cc.first);
    auto s = t.entries().find(cc.second);
    if (f == t.entries().end() || s == t.entries().end()) continue;
    if (f->second < 0 || s->second < 0 || static_cast<std::size_t>(f->second) >= members.rows() ||
        static_cast<std::size_t>(s->second) >= members.cols())
      throw ArgumentError("transversal vertex outside the cherry set's classes");
    if (members.test(static_cast<std::size_t>(f->second), static_cast<std::size_t>(s->second))) return false;
  }
  return true;
}

namespace {

void check_colouring_shape(const ReducedHypergraph& a, const Bicolouring& phi) {
  for (const ClassKey& k : a.classes()) {
    auto it = phi.classes().find(k);
    if (it == phi.classes().end() || it->second.size() != static_cast<std::size_t>(a.class_size(k)))
      throw ArgumentError("colouring is not total on class P^{" + std::to_string(k.lo) + "," + std::to_string(k.hi) +
                          "}");
  }
}

} // namespace

bool validate_bicolouring(const ReducedHypergraph& a, const Bicolouring& phi) {
  check_colouring_shape(a, phi);
  for (const ClassKey& k : a.classes())
    if (phi.members(k, Colour::Red).none() || phi.members(k, Colour::Blue).none()) return false;
  for (const Triple& t : a.triples()) {
    const std::size_t tid = a.triple_id(a.position(t.a), a.position(t.b), a.position(t.c));
    const CherryClasses cc = cherry_classes(t, Orientation::Left);
    const int s2 = a.class_size(cc.second);
    for (Colour c : {Colour::Red, Colour::Blue}) {
      const Bitset first = phi.members(cc.first, c);
      const Bitset second = phi.members(cc.second, c);
      const Bitset third = phi.members(cc.third, c);
      bool mono = false;
      first.for_each([&](std::size_t x) {
        second.for_each([&](std::size_t y) {
          if (!mono && intersects(a.table(tid, Orientation::Left).row(x * static_cast<std::size_t>(s2) + y), third))
            mono = true;
        });
      });
      if (mono) return false;
    }
  }
  return true;
}

Rational tau2(const ReducedHypergraph& a, const Bicolouring& phi) {
  check_colouring_shape(a, phi);
  Rational best(1);
  for (const Triple& t : a.triples()) {
    const std::size_t tid = a.triple_id(a.position(t.a), a.position(t.b), a.position(t.c));
    for (Orientation o : kOrientations) {
      const CherryClasses cc = cherry_classes(t, o);
      const int s2 = a.class_size(cc.second);
      const auto third = static_cast<std::int64_t>(a.class_size(cc.third));
      const BitMatrix& tab = a.table(tid, o);
      for (Colour c : {Colour::Red, Colour::Blue}) {
        const Bitset first = phi.members(cc.first, c);
        const Bitset second = phi.members(cc.second, c);
        first.for_each([&](std::size_t x) {
          second.for_each([&](std::size_t y) {
            const auto deg = static_cast<std::int64_t>(tab.row(x * static_cast<std::size_t>(s2) + y).count());
            const Rational r(deg, third);
            if (r < best) best = r;
          });
        });
      }
    }
  }
  return best;
}

} // namespace turanforge
